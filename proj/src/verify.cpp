#include "malcev/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

#include "malcev/errors.hpp"
#include "malcev/graph_eval.hpp"

namespace malcev {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string tuple_text(const std::vector<int>& tuple) {
    std::string out = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(tuple[i]);
    }
    return out + ")";
}

std::string graph_summary(const LabeledGraph& g) {
    return std::to_string(g.vertex_count()) + " vertices, " +
           std::to_string(g.edges().size()) + " edges, " + std::to_string(g.label_count()) +
           " labels";
}

std::string inputs_summary(const Algebra& alg, const LabeledGraph& g, const LabeledGraph& h) {
    return "algebra of size " + std::to_string(alg.size()) + "; g: " + graph_summary(g) +
           "; h: " + graph_summary(h);
}

// Iterates over all assignments of one relation index per label.
struct TupleOdometer {
    int labels;
    std::size_t choices;
    std::vector<std::size_t> index;
    bool done = false;

    TupleOdometer(int labels_, std::size_t choices_)
        : labels(labels_), choices(choices_), index(labels_, 0) {
        if (choices == 0) done = true;
    }

    void advance() {
        int j = labels - 1;
        while (j >= 0 && ++index[j] == choices) index[j--] = 0;
        if (j < 0) done = true;
    }
};

std::string describe_failure(const std::string& relations, const std::vector<int>& tuple) {
    return "fails at tuple " + tuple_text(tuple) + " with relations " + relations;
}

std::string relations_text(std::span<const Relation> rels) {
    std::string out;
    for (std::size_t i = 0; i < rels.size(); ++i) {
        if (i) out += " ";
        out += "R" + std::to_string(i + 1) + "=" + to_string(rels[i]);
    }
    return out;
}

// Tracks the aggregate verdict of one clause over many relation tuples.
struct ClauseTracker {
    bool verdict = true;
    bool any = false;
    std::string detail;

    void record(const InclusionResult& res, std::span<const Relation> rels) {
        any = true;
        if (!res.holds && verdict) {
            verdict = false;
            detail = describe_failure(relations_text(rels), *res.counterexample);
        }
    }

    ClauseResult as_clause(const std::string& id) const {
        std::string text = detail;
        if (verdict) text = any ? "holds for all checked tuples" : "no tuples to check";
        return {id, verdict, text};
    }
};

void assert_implication(VerificationReport& report, const std::string& id, bool premise,
                        bool conclusion, const std::string& detail) {
    const bool verdict = !premise || conclusion;
    report.assertions.push_back({id, verdict, verdict ? "holds" : detail});
    if (!verdict) report.ok = false;
}

} // namespace

std::string VerificationReport::to_text() const {
    std::string out = "check: " + check + "\ninputs: " + inputs + "\n";
    for (const auto& c : clauses)
        out += "  clause " + c.id + ": " + (c.verdict ? "true" : "false") +
               (c.detail.empty() ? "" : " :: " + c.detail) + "\n";
    for (const auto& a : assertions)
        out += "  assert " + a.id + ": " + (a.verdict ? "pass" : "FAIL") +
               (a.detail.empty() || a.verdict ? "" : " :: " + a.detail) + "\n";
    out += std::string("result: ") + (ok ? "pass" : "fail") + "\n";
    return out;
}

WpOutcome variety_satisfies_congruence_inclusion(const Algebra& alg, const LabeledGraph& g,
                                                 const LabeledGraph& h,
                                                 const FreeAlgebraCaps& caps) {
    if (g.label_count() != h.label_count())
        throw std::invalid_argument("graphs must use the same label count");
    if (g.label_count() < 1)
        throw std::invalid_argument("graphs must carry at least one label");
    if (g.distinguished_count() != h.distinguished_count())
        throw std::invalid_argument("graphs must have the same distinguished vertex count");

    FreeAlgebra free_alg = FreeAlgebra::generate(alg, g.vertex_count(), caps);
    if (free_alg.element_count() > Relation::kMaxSize)
        throw CapError("free algebra has " + std::to_string(free_alg.element_count()) +
                       " elements, beyond the relation size cap " +
                       std::to_string(Relation::kMaxSize));
    const Algebra on_indices = free_alg.as_algebra();

    // One congruence per label, generated by collapsing each class of the
    // label's partition on the generators.
    std::vector<Relation> congs;
    for (int i = 1; i <= g.label_count(); ++i) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& block : label_partition(g, i).blocks)
            for (std::size_t j = 1; j < block.size(); ++j)
                pairs.emplace_back(free_alg.generator(block[0]), free_alg.generator(block[j]));
        congs.push_back(generated_congruence(on_indices, pairs));
    }

    std::vector<int> tuple;
    for (int d : g.distinguished()) tuple.push_back(free_alg.generator(d));

    WpOutcome outcome{false, std::move(free_alg), std::move(congs), std::nullopt};
    if (auto conn = connect(h, outcome.label_congruences, tuple)) {
        outcome.holds = true;
        outcome.connection = std::move(conn->assignment);
    }
    return outcome;
}

SymbolAssignment assignment_from_outcome(const WpOutcome& outcome, const LabeledGraph& h) {
    if (!outcome.holds || !outcome.connection)
        throw std::invalid_argument("no connection witness to read terms from");
    SymbolAssignment assignment;
    for (int w = 0; w < h.vertex_count(); ++w) {
        const auto& coords = outcome.free_alg.element((*outcome.connection)[w]);
        assignment["t_" + h.vertex_id(w)] = std::vector<int>(coords.begin(), coords.end());
    }
    return assignment;
}

std::optional<SymbolAssignment> extract_malcev_terms(const Algebra& alg, const LabeledGraph& g,
                                                     const LabeledGraph& h,
                                                     const FreeAlgebraCaps& caps) {
    const WpOutcome outcome = variety_satisfies_congruence_inclusion(alg, g, h, caps);
    if (!outcome.holds) return std::nullopt;
    return assignment_from_outcome(outcome, h);
}

VerificationReport check_contolnuo(const Algebra& alg, const std::vector<NamedAlgebra>& samples,
                                   const LabeledGraph& g, const LabeledGraph& h,
                                   const FreeAlgebraCaps& caps) {
    if (!is_regular(g))
        throw std::invalid_argument(
            "g must be regular: every label class may have at most 2 vertices");
    const auto start = Clock::now();

    VerificationReport report;
    report.check = "contolnuo";
    report.inputs = inputs_summary(alg, g, h);

    const WpOutcome wp = variety_satisfies_congruence_inclusion(alg, g, h, caps);
    report.clauses.push_back({"(i)", wp.holds, "decided on the free algebra"});

    const int n = g.label_count();
    for (const auto& [name, sample] : samples) {
        const auto tols = tolerances(sample);
        ClauseTracker congruence_side, representable_side, weakly_side, squared_side;

        for (TupleOdometer odo(n, tols.size()); !odo.done; odo.advance()) {
            bool all_cong = true, all_repr = true, all_weak = true;
            std::vector<Relation> plain;
            for (int i = 0; i < n; ++i) {
                const auto& record = tols[odo.index[i]];
                all_cong &= record.cls == ToleranceClass::congruence;
                all_repr &= record.cls <= ToleranceClass::representable;
                all_weak &= record.cls <= ToleranceClass::weakly_representable;
                plain.push_back(record.relation);
            }
            if (all_cong || all_repr || all_weak) {
                const InclusionResult res = check_inclusion(g, h, plain);
                if (all_cong) congruence_side.record(res, plain);
                if (all_repr) representable_side.record(res, plain);
                if (all_weak) weakly_side.record(res, plain);
            }
            std::vector<Relation> squared;
            for (const Relation& r : plain) squared.push_back(compose(r, r));
            squared_side.record(check_inclusion(g, h, squared), squared);
        }

        report.clauses.push_back(congruence_side.as_clause("(i) pointwise @ " + name));
        report.clauses.push_back(representable_side.as_clause("(ii) @ " + name));
        report.clauses.push_back(weakly_side.as_clause("(iii) @ " + name));
        report.clauses.push_back(squared_side.as_clause("(iv) @ " + name));

        if (wp.holds) {
            assert_implication(report, "(i) => (ii) @ " + name, true,
                               representable_side.verdict, representable_side.detail);
            assert_implication(report, "(i) => (iii) @ " + name, true, weakly_side.verdict,
                               weakly_side.detail);
            assert_implication(report, "(i) => (iv) @ " + name, true, squared_side.verdict,
                               squared_side.detail);
        }
        assert_implication(report, "(ii) => (i) pointwise @ " + name,
                           representable_side.verdict, congruence_side.verdict,
                           congruence_side.detail);
        assert_implication(report, "(iii) => (ii) @ " + name, weakly_side.verdict,
                           representable_side.verdict, representable_side.detail);
        assert_implication(report, "(iv) => (i) pointwise @ " + name, squared_side.verdict,
                           congruence_side.verdict, congruence_side.detail);
    }

    report.runtime_seconds = seconds_since(start);
    return report;
}

VerificationReport check_contolnuok(const Algebra& alg, const std::vector<NamedAlgebra>& samples,
                                    const LabeledGraph& g, const LabeledGraph& h,
                                    const FreeAlgebraCaps& caps) {
    const auto start = Clock::now();

    VerificationReport report;
    report.check = "contolnuok";
    report.inputs = inputs_summary(alg, g, h);

    std::vector<int> ks = k_constants(g);
    for (int& k : ks) k = std::max(k, 1); // avoid the empty power
    std::string ks_text;
    for (std::size_t i = 0; i < ks.size(); ++i)
        ks_text += (i ? "," : "") + std::to_string(ks[i]);

    const WpOutcome wp = variety_satisfies_congruence_inclusion(alg, g, h, caps);
    report.clauses.push_back({"(i)", wp.holds, "decided on the free algebra; k=(" + ks_text + ")"});

    const int n = g.label_count();
    for (const auto& [name, sample] : samples) {
        const auto tols = tolerances(sample);
        ClauseTracker congruence_side, powered_side;

        for (TupleOdometer odo(n, tols.size()); !odo.done; odo.advance()) {
            bool all_cong = true;
            std::vector<Relation> plain, powered;
            for (int i = 0; i < n; ++i) {
                const auto& record = tols[odo.index[i]];
                all_cong &= record.cls == ToleranceClass::congruence;
                plain.push_back(record.relation);
                powered.push_back(power(record.relation, ks[i]));
            }
            if (all_cong) congruence_side.record(check_inclusion(g, h, plain), plain);

            const auto left = graph_relation(g, plain);
            const auto right = graph_relation(h, powered);
            InclusionResult res{true, std::nullopt};
            for (const auto& tuple : left) {
                if (!std::binary_search(right.begin(), right.end(), tuple)) {
                    res = {false, tuple};
                    break;
                }
            }
            powered_side.record(res, plain);
        }

        report.clauses.push_back(congruence_side.as_clause("(i) pointwise @ " + name));
        report.clauses.push_back(powered_side.as_clause("(ii) @ " + name));

        if (wp.holds)
            assert_implication(report, "(i) => (ii) @ " + name, true, powered_side.verdict,
                               powered_side.detail);
        assert_implication(report, "(ii) => (i) pointwise @ " + name, powered_side.verdict,
                           congruence_side.verdict, congruence_side.detail);
    }

    report.runtime_seconds = seconds_since(start);
    return report;
}

VerificationReport check_cornuo(const Algebra& alg, const std::vector<NamedAlgebra>& samples,
                                const LabeledGraph& g, const LabeledGraph& h,
                                const std::vector<int>& m_values,
                                const FreeAlgebraCaps& caps) {
    for (int m : m_values)
        if (m < 1 || m % 2 == 0)
            throw std::invalid_argument("m values must be odd and positive");
    if (!is_regular(g))
        throw std::invalid_argument(
            "g must be regular: every label class may have at most 2 vertices");
    const auto start = Clock::now();

    VerificationReport report;
    report.check = "cornuo";
    report.inputs = inputs_summary(alg, g, h);

    const WpOutcome wp = variety_satisfies_congruence_inclusion(alg, g, h, caps);
    report.clauses.push_back({"(i)", wp.holds, "decided on the free algebra"});

    std::vector<NamedAlgebra> checked = samples;
    // The free algebra joins the pointwise checks whenever congruence
    // enumeration can handle it.
    if (wp.free_alg.element_count() <= 8) {
        checked.emplace_back("free(" + std::to_string(wp.free_alg.generator_count()) + ")",
                             wp.free_alg.as_algebra());
    } else {
        report.clauses.push_back({"free algebra pointwise", true,
                                  "skipped: " + std::to_string(wp.free_alg.element_count()) +
                                      " elements exceed the congruence enumeration cap"});
    }

    const int n = g.label_count();
    for (const auto& [name, sample] : checked) {
        const auto cons = congruences(sample);

        // The inclusion only sees the composed relations, and many pairs
        // (beta, gamma) collapse to one composite, so quantify over the
        // distinct composites instead of the raw pair tuples.
        auto distinct_composites = [&](auto&& combine) {
            std::set<Relation> seen;
            for (const Relation& beta : cons)
                for (const Relation& gamma : cons) seen.insert(combine(beta, gamma));
            return std::vector<Relation>(seen.begin(), seen.end());
        };
        auto run_variant = [&](const std::vector<Relation>& composites,
                               ClauseTracker& tracker) {
            for (TupleOdometer odo(n, composites.size()); !odo.done; odo.advance()) {
                std::vector<Relation> rels;
                for (int i = 0; i < n; ++i) rels.push_back(composites[odo.index[i]]);
                tracker.record(check_inclusion(g, h, rels), rels);
            }
        };

        ClauseTracker sandwich_side;
        run_variant(distinct_composites([](const Relation& b, const Relation& c) {
                        return compose(compose(b, c), b);
                    }),
                    sandwich_side);

        std::map<int, ClauseTracker> alternating;
        for (int m : m_values) {
            ClauseTracker tracker;
            run_variant(distinct_composites([m](const Relation& b, const Relation& c) {
                            return alternate_compose(b, c, m);
                        }),
                        tracker);
            alternating.emplace(m, std::move(tracker));
        }

        report.clauses.push_back(sandwich_side.as_clause("(ii) @ " + name));
        bool all_m_agree = true;
        for (int m : m_values) {
            const auto& tracker = alternating.at(m);
            report.clauses.push_back(
                tracker.as_clause("(iii) m=" + std::to_string(m) + " @ " + name));
            all_m_agree &= tracker.verdict == alternating.at(m_values.front()).verdict;
        }
        report.clauses.push_back({"(iii) agreement across m @ " + name, all_m_agree,
                                  all_m_agree ? "all supplied m agree" : "verdicts differ"});

        if (wp.holds) {
            assert_implication(report, "(i) => (ii) @ " + name, true, sandwich_side.verdict,
                               sandwich_side.detail);
            for (int m : m_values)
                assert_implication(report, "(i) => (iii) m=" + std::to_string(m) + " @ " + name,
                                   true, alternating.at(m).verdict, alternating.at(m).detail);
            assert_implication(report, "(i) => agreement @ " + name, true, all_m_agree,
                               "verdicts differ across m");
        }
    }

    report.runtime_seconds = seconds_since(start);
    return report;
}

Realizability term_realizability(const LabeledGraph& g, int max_term_size) {
    if (g.vertex_count() > 8)
        throw CapError("realizability search capped at 8 vertices");
    if (max_term_size < 1 || max_term_size > 8)
        throw CapError("realizability term size bound must be in [1, 8]");
    if (g.label_count() < 1)
        throw std::invalid_argument("realizability needs at least one label");
    if (g.distinguished_count() != 2) return {false, std::nullopt};

    const std::string target = canonical_form(g);
    const int n = g.label_count();

    // Distinct graphs reached per leaf count; a term's graph depends only on
    // the isomorphism classes of its subterm graphs, so representatives
    // stand in for every term shape. First discovery keeps the smallest
    // witness.
    std::map<std::string, Term> seen;
    std::vector<std::vector<std::pair<std::string, Term>>> levels(max_term_size + 1);

    auto offer = [&](int level, const Term& t) -> const Term* {
        const std::string key = canonical_form(term_to_graph(t));
        if (seen.count(key)) return nullptr;
        seen.emplace(key, t);
        levels[level].emplace_back(key, t);
        if (key == target) return &seen.at(key);
        return nullptr;
    };

    for (int i = 1; i <= n; ++i)
        if (const Term* hit = offer(1, Term::variable(i, n))) return {true, *hit};

    for (int k = 2; k <= max_term_size; ++k) {
        for (int j = 1; j < k; ++j) {
            for (const auto& [lkey, lterm] : levels[j]) {
                for (const auto& [rkey, rterm] : levels[k - j]) {
                    if (const Term* hit = offer(k, Term::compose(lterm, rterm)))
                        return {true, *hit};
                    if (const Term* hit = offer(k, Term::intersect(lterm, rterm)))
                        return {true, *hit};
                }
            }
        }
    }
    return {false, std::nullopt};
}

} // namespace malcev
