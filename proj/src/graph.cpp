#include "malcev/graph.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <deque>
#include <functional>
#include <stdexcept>

#include "malcev/errors.hpp"
#include "malcev/union_find.hpp"

namespace malcev {

LabeledGraph::LabeledGraph(std::vector<std::string> vertex_ids, int label_count,
                           const std::vector<std::tuple<std::string, std::string, int>>& edges,
                           const std::vector<std::string>& distinguished) {
    vertex_ids_ = std::move(vertex_ids);
    label_count_ = label_count;
    for (int v = 0; v < static_cast<int>(vertex_ids_.size()); ++v) {
        if (!index_of_.emplace(vertex_ids_[v], v).second)
            throw std::invalid_argument("duplicate vertex id '" + vertex_ids_[v] + "'");
    }
    for (const auto& [u, v, label] : edges)
        edges_.push_back({vertex_index(u), vertex_index(v), label});
    for (const auto& d : distinguished) distinguished_.push_back(vertex_index(d));
    validate_and_normalize();
}

LabeledGraph LabeledGraph::from_indices(int vertex_count, int label_count,
                                        std::vector<LabeledEdge> edges,
                                        std::vector<int> distinguished,
                                        std::vector<std::string> ids) {
    LabeledGraph g;
    if (ids.empty()) {
        for (int v = 1; v <= vertex_count; ++v) ids.push_back("v" + std::to_string(v));
    }
    if (static_cast<int>(ids.size()) != vertex_count)
        throw std::invalid_argument("vertex id count does not match vertex count");
    g.vertex_ids_ = std::move(ids);
    g.label_count_ = label_count;
    g.edges_ = std::move(edges);
    g.distinguished_ = std::move(distinguished);
    for (int v = 0; v < vertex_count; ++v) {
        if (!g.index_of_.emplace(g.vertex_ids_[v], v).second)
            throw std::invalid_argument("duplicate vertex id '" + g.vertex_ids_[v] + "'");
    }
    g.validate_and_normalize();
    return g;
}

void LabeledGraph::validate_and_normalize() {
    const int m = vertex_count();
    if (m < 1) throw std::invalid_argument("graph needs at least one vertex");
    if (label_count_ < 0) throw std::invalid_argument("label count must be nonnegative");
    if (distinguished_.empty())
        throw std::invalid_argument("graph needs at least one distinguished vertex");
    for (int d : distinguished_)
        if (d < 0 || d >= m) throw std::invalid_argument("distinguished vertex out of range");
    for (auto& e : edges_) {
        if (e.u < 0 || e.u >= m || e.v < 0 || e.v >= m)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.label < 1 || e.label > label_count_)
            throw std::invalid_argument("edge label " + std::to_string(e.label) +
                                        " out of range [1, " + std::to_string(label_count_) + "]");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

int LabeledGraph::vertex_index(const std::string& id) const {
    auto it = index_of_.find(id);
    if (it == index_of_.end()) throw std::invalid_argument("unknown vertex id '" + id + "'");
    return it->second;
}

LabelPartition label_partition(const LabeledGraph& g, int label) {
    if (label < 1 || label > g.label_count())
        throw std::invalid_argument("label " + std::to_string(label) + " out of range [1, " +
                                    std::to_string(g.label_count()) + "]");
    const int m = g.vertex_count();
    UnionFind uf(m);
    for (const auto& e : g.edges())
        if (e.label == label) uf.unite(e.u, e.v);

    LabelPartition part;
    part.label = label;
    part.block_of.assign(m, -1);
    std::vector<int> block_of_root(m, -1);
    for (int v = 0; v < m; ++v) {
        int r = uf.find(v);
        if (block_of_root[r] < 0) {
            block_of_root[r] = static_cast<int>(part.blocks.size());
            part.blocks.emplace_back();
        }
        part.block_of[v] = block_of_root[r];
        part.blocks[block_of_root[r]].push_back(v);
    }
    return part;
}

bool is_regular(const LabeledGraph& g) {
    for (int i = 1; i <= g.label_count(); ++i)
        for (const auto& block : label_partition(g, i).blocks)
            if (block.size() > 2) return false;
    return true;
}

std::vector<int> k_constants(const LabeledGraph& g) {
    const int m = g.vertex_count();
    std::vector<int> ks;
    ks.reserve(g.label_count());
    for (int i = 1; i <= g.label_count(); ++i) {
        std::vector<std::vector<int>> adj(m);
        for (const auto& e : g.edges()) {
            if (e.label != i || e.u == e.v) continue;
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        const LabelPartition part = label_partition(g, i);
        int k_i = 0;
        for (const auto& block : part.blocks) {
            int best_ecc = -1;
            for (int start : block) {
                std::vector<int> dist(m, -1);
                std::deque<int> queue{start};
                dist[start] = 0;
                int ecc = 0;
                while (!queue.empty()) {
                    int v = queue.front();
                    queue.pop_front();
                    ecc = std::max(ecc, dist[v]);
                    for (int w : adj[v])
                        if (dist[w] < 0) {
                            dist[w] = dist[v] + 1;
                            queue.push_back(w);
                        }
                }
                for (int v : block) {
                    assert(dist[v] >= 0);
                    (void)v;
                }
                if (best_ecc < 0 || ecc < best_ecc) best_ecc = ecc;
            }
            k_i = std::max(k_i, best_ecc);
        }
        ks.push_back(2 * k_i);
    }
    return ks;
}

namespace {

// Minimal code over all vertex placements: at depth j the chosen vertex
// contributes (distinguished profile, loop mask, adjacency masks to the
// already placed vertices). Branches whose partial code exceeds the best
// known prefix are cut.
struct CanonicalSearch {
    int m;
    std::vector<std::vector<std::uint32_t>> adj;
    std::vector<std::uint32_t> dmask;
    std::vector<std::uint64_t> best, code;
    std::vector<int> best_perm, placed;
    std::vector<bool> used;

    void run() {
        used.assign(m, false);
        rec();
    }

    std::vector<std::uint64_t> row_of(int v) const {
        std::vector<std::uint64_t> row;
        row.reserve(placed.size() + 2);
        row.push_back(dmask[v]);
        row.push_back(adj[v][v]);
        for (int p : placed) row.push_back(adj[v][p]);
        return row;
    }

    void rec() {
        if (!best.empty()) {
            for (std::size_t i = 0; i < code.size(); ++i) {
                if (code[i] < best[i]) break;
                if (code[i] > best[i]) return;
            }
        }
        if (static_cast<int>(placed.size()) == m) {
            if (best.empty() || code < best) {
                best = code;
                best_perm = placed;
            }
            return;
        }
        struct Cand {
            std::vector<std::uint64_t> row;
            int v;
        };
        std::vector<Cand> cands;
        for (int v = 0; v < m; ++v)
            if (!used[v]) cands.push_back({row_of(v), v});
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            return std::tie(a.row, a.v) < std::tie(b.row, b.v);
        });
        for (const auto& cand : cands) {
            used[cand.v] = true;
            placed.push_back(cand.v);
            code.insert(code.end(), cand.row.begin(), cand.row.end());
            rec();
            code.resize(code.size() - cand.row.size());
            placed.pop_back();
            used[cand.v] = false;
        }
    }
};

} // namespace

std::string canonical_form(const LabeledGraph& g) {
    const int m = g.vertex_count();
    if (m > 12) throw CapError("canonical form capped at 12 vertices, got " + std::to_string(m));
    if (g.label_count() > 32) throw CapError("canonical form capped at 32 labels");
    if (g.distinguished_count() > 32)
        throw CapError("canonical form capped at 32 distinguished vertices");

    CanonicalSearch search;
    search.m = m;
    search.adj.assign(m, std::vector<std::uint32_t>(m, 0));
    for (const auto& e : g.edges()) {
        search.adj[e.u][e.v] |= std::uint32_t{1} << (e.label - 1);
        search.adj[e.v][e.u] |= std::uint32_t{1} << (e.label - 1);
    }
    search.dmask.assign(m, 0);
    for (int k = 0; k < g.distinguished_count(); ++k)
        search.dmask[g.distinguished()[k]] |= std::uint32_t{1} << k;
    search.run();

    std::vector<int> new_index(m, -1);
    for (int slot = 0; slot < m; ++slot) new_index[search.best_perm[slot]] = slot;

    std::vector<LabeledEdge> edges;
    for (const auto& e : g.edges()) {
        int u = new_index[e.u], v = new_index[e.v];
        edges.push_back({std::min(u, v), std::max(u, v), e.label});
    }
    std::sort(edges.begin(), edges.end());

    std::string out = "v=" + std::to_string(m) + ";n=" + std::to_string(g.label_count()) + ";d=";
    for (int k = 0; k < g.distinguished_count(); ++k) {
        if (k) out += ",";
        out += std::to_string(new_index[g.distinguished()[k]]);
    }
    out += ";e=";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(edges[i].u) + "-" + std::to_string(edges[i].v) + ":" +
               std::to_string(edges[i].label);
    }
    return out;
}

bool isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.label_count() != b.label_count() ||
        a.distinguished_count() != b.distinguished_count() || a.edges().size() != b.edges().size())
        return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace malcev
