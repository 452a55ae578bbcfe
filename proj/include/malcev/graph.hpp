#pragma once

#include <compare>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace malcev {

// Undirected labeled edge between vertex indices, normalized so u <= v.
// Labels are 1-based.
struct LabeledEdge {
    int u;
    int v;
    int label;

    auto operator<=>(const LabeledEdge&) const = default;
};

// Finite graph with edges labeled by 1..n and an ordered, possibly repeating
// list of distinguished vertices. Immutable after construction; edges are
// deduplicated as unordered labeled pairs and self-loops are permitted.
class LabeledGraph {
public:
    LabeledGraph(std::vector<std::string> vertex_ids, int label_count,
                 const std::vector<std::tuple<std::string, std::string, int>>& edges,
                 const std::vector<std::string>& distinguished);

    // Generates vertex ids "v1".."vk" when ids is empty.
    static LabeledGraph from_indices(int vertex_count, int label_count,
                                     std::vector<LabeledEdge> edges,
                                     std::vector<int> distinguished,
                                     std::vector<std::string> ids = {});

    int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
    int label_count() const { return label_count_; }
    int distinguished_count() const { return static_cast<int>(distinguished_.size()); }

    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::string& vertex_id(int v) const { return vertex_ids_.at(v); }
    int vertex_index(const std::string& id) const;

    const std::vector<LabeledEdge>& edges() const { return edges_; }
    const std::vector<int>& distinguished() const { return distinguished_; }

private:
    LabeledGraph() = default;
    void validate_and_normalize();

    std::vector<std::string> vertex_ids_;
    int label_count_ = 0;
    std::vector<LabeledEdge> edges_;
    std::vector<int> distinguished_;
    std::unordered_map<std::string, int> index_of_;
};

// The partition of the vertex set into classes of the least equivalence
// relation identifying endpoints of every edge with the given label.
struct LabelPartition {
    int label = 0;
    std::vector<std::vector<int>> blocks; // ordered by least member, members ascending
    std::vector<int> block_of;            // vertex -> index into blocks
};

LabelPartition label_partition(const LabeledGraph& g, int label);

// True when every class of every label partition has at most 2 vertices.
bool is_regular(const LabeledGraph& g);

// For each label: twice the least eccentricity over each class, maximized
// over classes. Labels whose classes are all singletons yield 0.
std::vector<int> k_constants(const LabeledGraph& g);

// Canonical encoding preserving labels and the ordered distinguished tuple:
// two graphs get equal encodings exactly when they are isomorphic.
// Capped at 12 vertices.
std::string canonical_form(const LabeledGraph& g);

bool isomorphic(const LabeledGraph& a, const LabeledGraph& b);

} // namespace malcev
