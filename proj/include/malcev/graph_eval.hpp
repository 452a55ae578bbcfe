#pragma once

#include <optional>
#include <span>
#include <vector>

#include "malcev/graph.hpp"
#include "malcev/relation.hpp"

namespace malcev {

// Witnessing assignment of universe elements to graph vertices.
struct Connection {
    std::vector<int> assignment; // vertex index -> element
};

// Searches for an assignment fixing the distinguished vertices to the tuple
// and satisfying every edge's labeled relation. All relations must be
// reflexive and symmetric on a common universe; anything else is rejected.
// Backtracking with forward checking, smallest domain first, values
// ascending, so the witness is deterministic.
std::optional<Connection> connect(const LabeledGraph& g, std::span<const Relation> rels,
                                  std::span<const int> tuple);

// The h-ary relation of all connectable tuples, lexicographically sorted.
std::vector<std::vector<int>> graph_relation(const LabeledGraph& g,
                                             std::span<const Relation> rels);

struct InclusionResult {
    bool holds = false;
    std::optional<std::vector<int>> counterexample; // least violating tuple
};

InclusionResult check_inclusion(const LabeledGraph& g, const LabeledGraph& h,
                                std::span<const Relation> rels);

} // namespace malcev
