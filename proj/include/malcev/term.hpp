#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "malcev/graph.hpp"
#include "malcev/relation.hpp"

namespace malcev {

// Term over relation variables a1..an with binary composition and
// intersection. Immutable; copies share structure.
class Term {
public:
    enum class Kind { variable, compose, intersect };

    static Term variable(int index, int var_count);
    static Term compose(const Term& left, const Term& right);
    static Term intersect(const Term& left, const Term& right);

    Kind kind() const { return node_->kind; }
    int var_count() const { return node_->var_count; }
    int var_index() const;
    Term left() const;
    Term right() const;

    int leaf_count() const;
    bool operator==(const Term& other) const;
    bool operator!=(const Term& other) const { return !(*this == other); }

private:
    struct Node {
        Kind kind;
        int var_index;
        int var_count;
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
    };

    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Grammar: term := iterm ('&' iterm)*, iterm := factor ('o' factor)*,
// factor := var | '(' term ')'. Composition binds tighter than intersection,
// both left-associative. Unicode aliases for the operators are accepted.
Term parse_term(std::string_view text, int var_count);

// Minimal-parentheses rendering; parse_term(print_term(t), n) == t.
std::string print_term(const Term& t);

// Series-parallel graph of the term: a variable is a single labeled edge,
// composition glues end to start, intersection glues both endpoint pairs.
// Always has exactly 2 distinguished vertices.
LabeledGraph term_to_graph(const Term& t);

// Standard relational semantics: composition and intersection.
Relation eval_term(const Term& t, std::span<const Relation> rels);

// All terms over var_count variables with at most max_leaves variable
// occurrences, in deterministic order.
std::vector<Term> enumerate_terms(int var_count, int max_leaves);

} // namespace malcev
