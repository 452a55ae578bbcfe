#include "malcev/graph_eval.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace malcev {

namespace {

int universe_of(const LabeledGraph& g, std::span<const Relation> rels) {
    if (static_cast<int>(rels.size()) != g.label_count())
        throw std::invalid_argument("expected " + std::to_string(g.label_count()) +
                                    " relations, got " + std::to_string(rels.size()));
    if (rels.empty())
        throw std::invalid_argument("universe undetermined: graph has no labels");
    const int s = rels.front().size();
    for (const Relation& r : rels) {
        if (r.size() != s) throw std::invalid_argument("relations must share one universe");
        if (!r.reflexive() || !r.symmetric())
            throw std::invalid_argument("relations must be reflexive and symmetric");
    }
    return s;
}

struct Search {
    const LabeledGraph& g;
    std::span<const Relation> rels;
    int s;
    std::vector<std::vector<std::pair<int, int>>> adj; // vertex -> (neighbor, label-1)
    std::vector<std::uint64_t> dom;
    std::vector<int> assignment;

    Search(const LabeledGraph& graph, std::span<const Relation> relations, int size)
        : g(graph), rels(relations), s(size), adj(graph.vertex_count()) {
        for (const auto& e : g.edges()) {
            if (e.u == e.v) continue; // reflexivity satisfies loops
            adj[e.u].emplace_back(e.v, e.label - 1);
            adj[e.v].emplace_back(e.u, e.label - 1);
        }
    }

    bool run(std::span<const int> tuple) {
        const std::uint64_t all = s == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s) - 1;
        dom.assign(g.vertex_count(), all);
        assignment.assign(g.vertex_count(), -1);
        for (int k = 0; k < g.distinguished_count(); ++k) {
            const int v = g.distinguished()[k];
            dom[v] &= std::uint64_t{1} << tuple[k];
            if (!dom[v]) return false;
        }
        return solve();
    }

    bool solve() {
        int v = -1;
        int best = s + 1;
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (assignment[u] >= 0) continue;
            const int width = std::popcount(dom[u]);
            if (width < best) {
                best = width;
                v = u;
            }
        }
        if (v < 0) return true;

        std::uint64_t values = dom[v];
        while (values) {
            const int a = std::countr_zero(values);
            values &= values - 1;
            const std::vector<std::uint64_t> saved = dom;
            assignment[v] = a;
            dom[v] = std::uint64_t{1} << a;
            bool ok = true;
            for (const auto& [w, li] : adj[v]) {
                dom[w] &= rels[li].row(a);
                if (!dom[w]) {
                    ok = false;
                    break;
                }
            }
            if (ok && solve()) return true;
            assignment[v] = -1;
            dom = saved;
        }
        return false;
    }
};

} // namespace

std::optional<Connection> connect(const LabeledGraph& g, std::span<const Relation> rels,
                                  std::span<const int> tuple) {
    const int s = universe_of(g, rels);
    if (static_cast<int>(tuple.size()) != g.distinguished_count())
        throw std::invalid_argument("tuple arity must match distinguished vertex count");
    for (int a : tuple)
        if (a < 0 || a >= s) throw std::out_of_range("tuple element out of range");

    Search search(g, rels, s);
    if (!search.run(tuple)) return std::nullopt;
    return Connection{std::move(search.assignment)};
}

namespace {

std::vector<std::uint64_t> relation_codes(const LabeledGraph& g, std::span<const Relation> rels,
                                          int s) {
    const int h = g.distinguished_count();
    Search search(g, rels, s);
    std::vector<int> tuple(h, 0);
    std::vector<std::uint64_t> codes;
    std::uint64_t code = 0;
    while (true) {
        if (search.run(tuple)) codes.push_back(code);
        int j = h - 1;
        while (j >= 0 && ++tuple[j] == s) tuple[j--] = 0;
        if (j < 0) break;
        // Recompute the mixed-radix code from scratch; h is tiny.
        code = 0;
        for (int v : tuple) code = code * static_cast<std::uint64_t>(s) + v;
    }
    return codes;
}

std::vector<int> decode(std::uint64_t code, int h, int s) {
    std::vector<int> tuple(h);
    for (int j = h - 1; j >= 0; --j) {
        tuple[j] = static_cast<int>(code % s);
        code /= s;
    }
    return tuple;
}

} // namespace

std::vector<std::vector<int>> graph_relation(const LabeledGraph& g,
                                             std::span<const Relation> rels) {
    const int s = universe_of(g, rels);
    if (g.distinguished_count() > 10)
        throw std::invalid_argument("relation enumeration capped at 10 distinguished vertices");
    std::vector<std::vector<int>> out;
    for (std::uint64_t code : relation_codes(g, rels, s))
        out.push_back(decode(code, g.distinguished_count(), s));
    return out;
}

InclusionResult check_inclusion(const LabeledGraph& g, const LabeledGraph& h,
                                std::span<const Relation> rels) {
    if (g.label_count() != h.label_count())
        throw std::invalid_argument("graphs must use the same label count");
    if (g.distinguished_count() != h.distinguished_count())
        throw std::invalid_argument("graphs must have the same distinguished vertex count");
    const int s = universe_of(g, rels);

    const auto left = relation_codes(g, rels, s);
    const auto right = relation_codes(h, rels, s);
    for (std::uint64_t code : left) {
        if (!std::binary_search(right.begin(), right.end(), code))
            return {false, decode(code, g.distinguished_count(), s)};
    }
    return {true, std::nullopt};
}

} // namespace malcev
