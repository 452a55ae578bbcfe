#pragma once

#include <optional>
#include <string>
#include <vector>

#include "malcev/algebra.hpp"
#include "malcev/graph.hpp"

namespace malcev {

// Named fixtures so the CLI and the tests need no external files.
// Algebras: z2 (two-element group), chain2/chain3 (chain lattices),
// set3 (three elements, no operations).
std::optional<Algebra> named_algebra(const std::string& name);
std::vector<std::string> named_algebra_names();

// Graphs: perm_g / perm_h (the composition-swap pair), k4 (complete
// 4-vertex graph on one label), path4 (4-vertex path on one label).
std::optional<LabeledGraph> named_graph(const std::string& name);
std::vector<std::string> named_graph_names();

} // namespace malcev
