#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "malcev/algebra.hpp"
#include "malcev/free_algebra.hpp"
#include "malcev/graph.hpp"
#include "malcev/identities.hpp"
#include "malcev/relation.hpp"
#include "malcev/term.hpp"

namespace malcev {

struct ClauseResult {
    std::string id;
    bool verdict = false;
    std::string detail;
};

// Outcome of one verification check. Assertions are the implications the check
// is entitled to enforce; ok means none of them failed. Clause verdicts are
// recorded even when nothing is asserted about them.
struct VerificationReport {
    std::string check;
    std::string inputs;
    std::vector<ClauseResult> clauses;
    std::vector<ClauseResult> assertions;
    bool ok = true;
    double runtime_seconds = 0.0;

    std::string to_text() const;
};

using NamedAlgebra = std::pair<std::string, Algebra>;

// Free-algebra decision of "the variety generated by alg satisfies
// G <= H for congruences": build the free algebra on |V(g)| generators,
// generate one congruence per label from its vertex classes, and test
// whether the distinguished generator tuple is connectable through h.
struct WpOutcome {
    bool holds = false;
    FreeAlgebra free_alg;
    std::vector<Relation> label_congruences;        // on the free algebra
    std::optional<std::vector<int>> connection;     // h-vertex -> element
};

WpOutcome variety_satisfies_congruence_inclusion(const Algebra& alg, const LabeledGraph& g,
                                                 const LabeledGraph& h,
                                                 const FreeAlgebraCaps& caps = {});

// Reads the connection witness coordinatewise: each witness element is an
// |V(g)|-ary operation table interpreting one symbol of the condition.
SymbolAssignment assignment_from_outcome(const WpOutcome& outcome, const LabeledGraph& h);

std::optional<SymbolAssignment> extract_malcev_terms(const Algebra& alg, const LabeledGraph& g,
                                                     const LabeledGraph& h,
                                                     const FreeAlgebraCaps& caps = {});

// Congruence/tolerance transfer check for regular g: clause (i) on the
// variety via the free algebra; clauses (ii) representable, (iii) weakly
// representable, (iv) squared arbitrary tolerances, each exhaustively on
// the sample algebras. Callers must pass samples that belong to the variety
// generated by alg; membership is not checked.
VerificationReport check_contolnuo(const Algebra& alg, const std::vector<NamedAlgebra>& samples,
                                   const LabeledGraph& g, const LabeledGraph& h,
                                   const FreeAlgebraCaps& caps = {});

// Power variant for arbitrary finite g: tolerances on the g side, their
// k_i-th relational powers on the h side (k_i clamped to at least 1).
VerificationReport check_contolnuok(const Algebra& alg, const std::vector<NamedAlgebra>& samples,
                                    const LabeledGraph& g, const LabeledGraph& h,
                                    const FreeAlgebraCaps& caps = {});

// Alternating-composition variant for regular g: congruence pairs
// substituted as b.c.b and as the odd m-fold alternation, for each
// supplied odd m. Checked pointwise on the samples and, when small enough
// for congruence enumeration, on the free algebra itself.
VerificationReport check_cornuo(const Algebra& alg, const std::vector<NamedAlgebra>& samples,
                                const LabeledGraph& g, const LabeledGraph& h,
                                const std::vector<int>& m_values,
                                const FreeAlgebraCaps& caps = {});

struct Realizability {
    bool realizable = false;
    std::optional<Term> witness;
};

// Bounded search for a term whose associated graph is isomorphic to g,
// over terms with at most max_term_size variable occurrences.
Realizability term_realizability(const LabeledGraph& g, int max_term_size);

} // namespace malcev
