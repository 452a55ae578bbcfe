#include "malcev/builtins.hpp"

namespace malcev {

std::optional<Algebra> named_algebra(const std::string& name) {
    if (name == "z2") {
        return Algebra(2, {{"+", 2, {0, 1, 1, 0}}, {"0", 0, {0}}});
    }
    if (name == "chain2") {
        return Algebra(2, {{"meet", 2, {0, 0, 0, 1}}, {"join", 2, {0, 1, 1, 1}}});
    }
    if (name == "chain3") {
        return Algebra(3, {{"meet", 2, {0, 0, 0, 0, 1, 1, 0, 1, 2}},
                           {"join", 2, {0, 1, 2, 1, 1, 2, 2, 2, 2}}});
    }
    if (name == "set3") {
        return Algebra(3, {});
    }
    return std::nullopt;
}

std::vector<std::string> named_algebra_names() { return {"z2", "chain2", "chain3", "set3"}; }

std::optional<LabeledGraph> named_graph(const std::string& name) {
    using E = std::tuple<std::string, std::string, int>;
    if (name == "perm_g") {
        return LabeledGraph({"v1", "v2", "v3"}, 2, std::vector<E>{{"v1", "v2", 1}, {"v2", "v3", 2}},
                            {"v1", "v3"});
    }
    if (name == "perm_h") {
        return LabeledGraph({"v1", "v2", "v3"}, 2, std::vector<E>{{"v1", "v2", 2}, {"v2", "v3", 1}},
                            {"v1", "v3"});
    }
    if (name == "k4") {
        return LabeledGraph({"v1", "v2", "v3", "v4"}, 1,
                            std::vector<E>{{"v1", "v2", 1},
                                           {"v1", "v3", 1},
                                           {"v1", "v4", 1},
                                           {"v2", "v3", 1},
                                           {"v2", "v4", 1},
                                           {"v3", "v4", 1}},
                            {"v1", "v2"});
    }
    if (name == "path4") {
        return LabeledGraph({"v1", "v2", "v3", "v4"}, 1,
                            std::vector<E>{{"v1", "v2", 1}, {"v2", "v3", 1}, {"v3", "v4", 1}},
                            {"v1", "v4"});
    }
    return std::nullopt;
}

std::vector<std::string> named_graph_names() { return {"perm_g", "perm_h", "k4", "path4"}; }

} // namespace malcev
