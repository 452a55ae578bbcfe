#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace malcev {

// Binary relation on {0,...,size-1}, stored as one 64-bit row per element.
// Values are immutable in practice: every algebraic operation returns a new
// relation. Universe sizes beyond 64 are out of scope.
class Relation {
public:
    static constexpr int kMaxSize = 64;

    explicit Relation(int size);

    static Relation diagonal(int size);
    static Relation full(int size);
    static Relation from_pairs(int size, const std::vector<std::pair<int, int>>& pairs,
                               bool add_diagonal = false);

    int size() const { return size_; }
    bool contains(int a, int b) const;
    void add(int a, int b);
    void add_symmetric(int a, int b);
    std::uint64_t row(int a) const;

    bool reflexive() const;
    bool symmetric() const;
    bool transitive() const;

    bool subset_of(const Relation& other) const;
    std::vector<std::pair<int, int>> pairs() const;
    std::size_t pair_count() const;

    bool operator==(const Relation& other) const;
    bool operator!=(const Relation& other) const { return !(*this == other); }
    // Lexicographic row order; gives every enumeration a canonical sort.
    bool operator<(const Relation& other) const;

private:
    int size_;
    std::vector<std::uint64_t> rows_;
    mutable std::int8_t reflexive_ = -1;
    mutable std::int8_t symmetric_ = -1;
    mutable std::int8_t transitive_ = -1;

    std::uint64_t universe_mask() const;
    void invalidate_flags();

    friend Relation compose(const Relation&, const Relation&);
    friend Relation converse(const Relation&);
    friend Relation intersect(const Relation&, const Relation&);
    friend Relation union_rel(const Relation&, const Relation&);
};

Relation compose(const Relation& r, const Relation& t);
Relation converse(const Relation& r);
Relation intersect(const Relation& r, const Relation& t);
Relation union_rel(const Relation& r, const Relation& t);

// r composed with itself, k factors, k >= 1.
Relation power(const Relation& r, int k);

// Alternating composition b . c . b . c ... with m factors, m odd >= 1.
Relation alternate_compose(const Relation& b, const Relation& c, int m);

std::string to_string(const Relation& r);

} // namespace malcev
