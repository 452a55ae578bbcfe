#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "malcev/algebra.hpp"
#include "malcev/graph.hpp"

namespace malcev {

// A finite set of identities between formal operation symbols of uniform
// arity applied to variables. Each side of an identity is either a bare
// variable or a symbol applied to a variable list.
struct IdentitySet {
    struct Side {
        int symbol = -1;       // index into symbols; -1 for a bare variable
        std::vector<int> vars; // indices into variables; a bare side has one

        bool operator==(const Side&) const = default;
    };

    struct Identity {
        Side lhs;
        Side rhs;

        bool operator==(const Identity&) const = default;
    };

    int arity = 0;
    std::vector<std::string> symbols;
    std::vector<std::string> variables;
    std::vector<Identity> identities;

    std::string side_text(const Side& side) const;
    std::string identity_text(const Identity& id) const;
    std::string to_text() const;
    std::string to_latex() const;
};

// Which vertex of a label class names its projection variable.
enum class ClassRepr { min_vertex, max_vertex };

// The strong condition determined by the graph pair: one operation symbol
// per h-vertex, arity |V(g)|; one equation per distinguished position plus
// one per non-loop h-edge with the g-variables collapsed along the edge
// label's partition. Deterministic output order.
IdentitySet generate_condition(const LabeledGraph& g, const LabeledGraph& h,
                               ClassRepr repr = ClassRepr::min_vertex);

// Display form: symbols forced to be projections by a distinguished
// equation are replaced by the projected variable, and equations that
// become trivial are dropped. Never part of the canonical set.
IdentitySet substitute_projections(const IdentitySet& ids);

// True when some bijective renaming of variables together with a bijection
// of operation symbols carries one set onto the other (identity order and
// side orientation insensitive).
bool equivalent_mod_renaming(const IdentitySet& a, const IdentitySet& b);

// Interpretation of the operation symbols as tables on a finite algebra.
using SymbolAssignment = std::unordered_map<std::string, std::vector<int>>;

// Checks every identity over all assignments of its variables.
bool holds_in_algebra(const IdentitySet& ids, const Algebra& alg,
                      const SymbolAssignment& assignment);

} // namespace malcev
