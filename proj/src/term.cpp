#include "malcev/term.hpp"

#include <cassert>
#include <cctype>
#include <stdexcept>

#include "malcev/errors.hpp"
#include "malcev/union_find.hpp"

namespace malcev {

Term Term::variable(int index, int var_count) {
    if (var_count < 1) throw std::invalid_argument("variable count must be at least 1");
    if (index < 1 || index > var_count)
        throw std::invalid_argument("variable index " + std::to_string(index) +
                                    " out of range [1, " + std::to_string(var_count) + "]");
    return Term(std::make_shared<const Node>(Node{Kind::variable, index, var_count, nullptr, nullptr}));
}

Term Term::compose(const Term& left, const Term& right) {
    if (left.var_count() != right.var_count())
        throw std::invalid_argument("variable count mismatch between subterms");
    return Term(std::make_shared<const Node>(
        Node{Kind::compose, 0, left.var_count(), left.node_, right.node_}));
}

Term Term::intersect(const Term& left, const Term& right) {
    if (left.var_count() != right.var_count())
        throw std::invalid_argument("variable count mismatch between subterms");
    return Term(std::make_shared<const Node>(
        Node{Kind::intersect, 0, left.var_count(), left.node_, right.node_}));
}

int Term::var_index() const {
    if (node_->kind != Kind::variable) throw std::logic_error("not a variable node");
    return node_->var_index;
}

Term Term::left() const {
    if (node_->kind == Kind::variable) throw std::logic_error("variable node has no children");
    return Term(node_->left);
}

Term Term::right() const {
    if (node_->kind == Kind::variable) throw std::logic_error("variable node has no children");
    return Term(node_->right);
}

int Term::leaf_count() const {
    if (node_->kind == Kind::variable) return 1;
    return left().leaf_count() + right().leaf_count();
}

bool Term::operator==(const Term& other) const {
    if (node_ == other.node_) return true;
    if (node_->kind != other.node_->kind || node_->var_count != other.node_->var_count)
        return false;
    if (node_->kind == Kind::variable) return node_->var_index == other.node_->var_index;
    return left() == other.left() && right() == other.right();
}

namespace {

struct Token {
    enum class Type { variable, comp, cap, lparen, rparen, end };
    Type type;
    int value = 0;      // variable index
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {Token::Type::end, 0, start};
            return;
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            current_ = {Token::Type::lparen, 0, start};
        } else if (c == ')') {
            ++pos_;
            current_ = {Token::Type::rparen, 0, start};
        } else if (c == 'o') {
            ++pos_;
            current_ = {Token::Type::comp, 0, start};
        } else if (c == '&') {
            ++pos_;
            current_ = {Token::Type::cap, 0, start};
        } else if (text_.substr(pos_).starts_with("∘")) { // ring operator
            pos_ += 3;
            current_ = {Token::Type::comp, 0, start};
        } else if (text_.substr(pos_).starts_with("∩")) { // intersection sign
            pos_ += 3;
            current_ = {Token::Type::cap, 0, start};
        } else if (c == 'a') {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("expected digits after 'a'", pos_);
            long index = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                index = index * 10 + (text_[pos_] - '0');
                if (index > 1000000) throw ParseError("variable index too large", start);
                ++pos_;
            }
            current_ = {Token::Type::variable, static_cast<int>(index), start};
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_;
};

class Parser {
public:
    Parser(std::string_view text, int var_count) : lexer_(text), var_count_(var_count) {}

    Term parse() {
        Term t = parse_term();
        if (lexer_.peek().type != Token::Type::end)
            throw ParseError("unexpected trailing input", lexer_.peek().pos);
        return t;
    }

private:
    Term parse_term() {
        Term t = parse_iterm();
        while (lexer_.peek().type == Token::Type::cap) {
            lexer_.take();
            t = Term::intersect(t, parse_iterm());
        }
        return t;
    }

    Term parse_iterm() {
        Term t = parse_factor();
        while (lexer_.peek().type == Token::Type::comp) {
            lexer_.take();
            t = Term::compose(t, parse_factor());
        }
        return t;
    }

    Term parse_factor() {
        const Token t = lexer_.take();
        switch (t.type) {
        case Token::Type::variable:
            if (t.value < 1 || t.value > var_count_)
                throw ParseError("variable index " + std::to_string(t.value) +
                                     " out of range [1, " + std::to_string(var_count_) + "]",
                                 t.pos);
            return Term::variable(t.value, var_count_);
        case Token::Type::lparen: {
            Term inner = parse_term();
            if (lexer_.peek().type != Token::Type::rparen)
                throw ParseError("expected ')'", lexer_.peek().pos);
            lexer_.take();
            return inner;
        }
        default:
            throw ParseError("expected a variable or '('", t.pos);
        }
    }

    Lexer lexer_;
    int var_count_;
};

int precedence(Term::Kind kind) {
    switch (kind) {
    case Term::Kind::intersect: return 1;
    case Term::Kind::compose: return 2;
    case Term::Kind::variable: return 3;
    }
    return 0;
}

void print_rec(const Term& t, int parent_prec, bool right_side, std::string& out) {
    const int prec = precedence(t.kind());
    const bool parens = prec < parent_prec || (prec == parent_prec && right_side);
    if (parens) out += "(";
    if (t.kind() == Term::Kind::variable) {
        out += "a" + std::to_string(t.var_index());
    } else {
        const char* op = t.kind() == Term::Kind::compose ? " o " : " & ";
        print_rec(t.left(), prec, false, out);
        out += op;
        print_rec(t.right(), prec, true, out);
    }
    if (parens) out += ")";
}

// Fresh-vertex recursion; gluing is recorded in the union-find.
struct GraphBuilder {
    std::vector<std::tuple<int, int, int>> edges; // raw (u, v, label)
    int next = 0;

    std::pair<int, int> build(const Term& t, UnionFind& uf);
};

std::pair<int, int> GraphBuilder::build(const Term& t, UnionFind& uf) {
    switch (t.kind()) {
    case Term::Kind::variable: {
        int u = next++, v = next++;
        edges.emplace_back(u, v, t.var_index());
        return {u, v};
    }
    case Term::Kind::compose: {
        auto [l1, l2] = build(t.left(), uf);
        auto [r1, r2] = build(t.right(), uf);
        uf.unite(l2, r1);
        return {l1, r2};
    }
    case Term::Kind::intersect: {
        auto [l1, l2] = build(t.left(), uf);
        auto [r1, r2] = build(t.right(), uf);
        uf.unite(l1, r1);
        uf.unite(l2, r2);
        return {l1, l2};
    }
    }
    throw std::logic_error("unreachable term kind");
}

} // namespace

Term parse_term(std::string_view text, int var_count) {
    if (var_count < 1) throw std::invalid_argument("variable count must be at least 1");
    return Parser(text, var_count).parse();
}

std::string print_term(const Term& t) {
    std::string out;
    print_rec(t, 0, false, out);
    return out;
}

LabeledGraph term_to_graph(const Term& t) {
    GraphBuilder builder;
    const int raw_cap = 2 * t.leaf_count();
    UnionFind uf(raw_cap);
    auto [d1, d2] = builder.build(t, uf);
    assert(builder.next <= raw_cap);

    // Compress classes to final vertices, ordered by first appearance.
    std::vector<int> vertex_of_root(raw_cap, -1);
    int vertex_count = 0;
    auto vertex_of = [&](int raw) {
        int r = uf.find(raw);
        if (vertex_of_root[r] < 0) vertex_of_root[r] = vertex_count++;
        return vertex_of_root[r];
    };
    std::vector<LabeledEdge> edges;
    for (int raw = 0; raw < builder.next; ++raw) vertex_of(raw);
    for (const auto& [u, v, label] : builder.edges)
        edges.push_back({vertex_of(u), vertex_of(v), label});
    return LabeledGraph::from_indices(vertex_count, t.var_count(), std::move(edges),
                                      {vertex_of(d1), vertex_of(d2)});
}

Relation eval_term(const Term& t, std::span<const Relation> rels) {
    if (static_cast<int>(rels.size()) != t.var_count())
        throw std::invalid_argument("expected " + std::to_string(t.var_count()) +
                                    " relations, got " + std::to_string(rels.size()));
    for (const Relation& r : rels)
        if (r.size() != rels.front().size())
            throw std::invalid_argument("relations must share one universe");

    struct Eval {
        std::span<const Relation> rels;
        Relation run(const Term& t) const {
            switch (t.kind()) {
            case Term::Kind::variable: return rels[t.var_index() - 1];
            case Term::Kind::compose: return compose(run(t.left()), run(t.right()));
            case Term::Kind::intersect: return intersect(run(t.left()), run(t.right()));
            }
            throw std::logic_error("unreachable term kind");
        }
    };
    return Eval{rels}.run(t);
}

std::vector<Term> enumerate_terms(int var_count, int max_leaves) {
    if (var_count < 1) throw std::invalid_argument("variable count must be at least 1");
    if (max_leaves < 1) throw std::invalid_argument("max leaves must be at least 1");
    std::vector<std::vector<Term>> by_leaves(max_leaves + 1);
    for (int i = 1; i <= var_count; ++i)
        by_leaves[1].push_back(Term::variable(i, var_count));
    for (int k = 2; k <= max_leaves; ++k) {
        for (int j = 1; j < k; ++j) {
            for (const Term& l : by_leaves[j]) {
                for (const Term& r : by_leaves[k - j]) {
                    by_leaves[k].push_back(Term::compose(l, r));
                    by_leaves[k].push_back(Term::intersect(l, r));
                }
            }
        }
    }
    std::vector<Term> out;
    for (int k = 1; k <= max_leaves; ++k)
        out.insert(out.end(), by_leaves[k].begin(), by_leaves[k].end());
    return out;
}

} // namespace malcev
