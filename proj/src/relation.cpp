#include "malcev/relation.hpp"

#include <bit>
#include <stdexcept>

namespace malcev {

namespace {

void check_size(int size) {
    if (size < 1 || size > Relation::kMaxSize)
        throw std::invalid_argument("relation universe size must be in [1, " +
                                    std::to_string(Relation::kMaxSize) + "], got " +
                                    std::to_string(size));
}

void check_same_universe(const Relation& r, const Relation& t) {
    if (r.size() != t.size())
        throw std::invalid_argument("relation universe mismatch: " + std::to_string(r.size()) +
                                    " vs " + std::to_string(t.size()));
}

} // namespace

Relation::Relation(int size) : size_(size), rows_(static_cast<std::size_t>(size), 0) {
    check_size(size);
}

Relation Relation::diagonal(int size) {
    Relation r(size);
    for (int a = 0; a < size; ++a) r.rows_[a] = std::uint64_t{1} << a;
    return r;
}

Relation Relation::full(int size) {
    Relation r(size);
    for (int a = 0; a < size; ++a) r.rows_[a] = r.universe_mask();
    return r;
}

Relation Relation::from_pairs(int size, const std::vector<std::pair<int, int>>& pairs,
                              bool add_diagonal) {
    Relation r = add_diagonal ? diagonal(size) : Relation(size);
    for (const auto& [a, b] : pairs) r.add(a, b);
    return r;
}

std::uint64_t Relation::universe_mask() const {
    return size_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size_) - 1;
}

bool Relation::contains(int a, int b) const {
    if (a < 0 || a >= size_ || b < 0 || b >= size_)
        throw std::out_of_range("relation element out of range");
    return (rows_[a] >> b) & 1;
}

void Relation::add(int a, int b) {
    if (a < 0 || a >= size_ || b < 0 || b >= size_)
        throw std::out_of_range("relation element out of range");
    rows_[a] |= std::uint64_t{1} << b;
    invalidate_flags();
}

void Relation::add_symmetric(int a, int b) {
    add(a, b);
    add(b, a);
}

std::uint64_t Relation::row(int a) const {
    if (a < 0 || a >= size_) throw std::out_of_range("relation element out of range");
    return rows_[a];
}

void Relation::invalidate_flags() {
    reflexive_ = symmetric_ = transitive_ = -1;
}

bool Relation::reflexive() const {
    if (reflexive_ < 0) {
        bool ok = true;
        for (int a = 0; a < size_ && ok; ++a) ok = (rows_[a] >> a) & 1;
        reflexive_ = ok ? 1 : 0;
    }
    return reflexive_ == 1;
}

bool Relation::symmetric() const {
    if (symmetric_ < 0) {
        bool ok = true;
        for (int a = 0; a < size_ && ok; ++a)
            for (int b = a + 1; b < size_ && ok; ++b)
                ok = ((rows_[a] >> b) & 1) == ((rows_[b] >> a) & 1);
        symmetric_ = ok ? 1 : 0;
    }
    return symmetric_ == 1;
}

bool Relation::transitive() const {
    if (transitive_ < 0) {
        bool ok = true;
        for (int a = 0; a < size_ && ok; ++a) {
            std::uint64_t reach = 0;
            std::uint64_t row = rows_[a];
            while (row) {
                int b = std::countr_zero(row);
                row &= row - 1;
                reach |= rows_[b];
            }
            ok = (reach & ~rows_[a]) == 0;
        }
        transitive_ = ok ? 1 : 0;
    }
    return transitive_ == 1;
}

bool Relation::subset_of(const Relation& other) const {
    check_same_universe(*this, other);
    for (int a = 0; a < size_; ++a)
        if (rows_[a] & ~other.rows_[a]) return false;
    return true;
}

std::vector<std::pair<int, int>> Relation::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size_; ++a) {
        std::uint64_t row = rows_[a];
        while (row) {
            int b = std::countr_zero(row);
            row &= row - 1;
            out.emplace_back(a, b);
        }
    }
    return out;
}

std::size_t Relation::pair_count() const {
    std::size_t n = 0;
    for (int a = 0; a < size_; ++a) n += static_cast<std::size_t>(std::popcount(rows_[a]));
    return n;
}

bool Relation::operator==(const Relation& other) const {
    return size_ == other.size_ && rows_ == other.rows_;
}

bool Relation::operator<(const Relation& other) const {
    if (size_ != other.size_) return size_ < other.size_;
    return rows_ < other.rows_;
}

Relation compose(const Relation& r, const Relation& t) {
    check_same_universe(r, t);
    Relation out(r.size());
    for (int a = 0; a < r.size(); ++a) {
        std::uint64_t row = r.rows_[a];
        std::uint64_t acc = 0;
        while (row) {
            int b = std::countr_zero(row);
            row &= row - 1;
            acc |= t.rows_[b];
        }
        out.rows_[a] = acc;
    }
    return out;
}

Relation converse(const Relation& r) {
    Relation out(r.size());
    for (int a = 0; a < r.size(); ++a) {
        std::uint64_t row = r.rows_[a];
        while (row) {
            int b = std::countr_zero(row);
            row &= row - 1;
            out.rows_[b] |= std::uint64_t{1} << a;
        }
    }
    return out;
}

Relation intersect(const Relation& r, const Relation& t) {
    check_same_universe(r, t);
    Relation out(r.size());
    for (int a = 0; a < r.size(); ++a) out.rows_[a] = r.rows_[a] & t.rows_[a];
    return out;
}

Relation union_rel(const Relation& r, const Relation& t) {
    check_same_universe(r, t);
    Relation out(r.size());
    for (int a = 0; a < r.size(); ++a) out.rows_[a] = r.rows_[a] | t.rows_[a];
    return out;
}

Relation power(const Relation& r, int k) {
    if (k < 1) throw std::invalid_argument("relational power requires k >= 1");
    Relation out = r;
    for (int i = 1; i < k; ++i) out = compose(out, r);
    return out;
}

Relation alternate_compose(const Relation& b, const Relation& c, int m) {
    if (m < 1 || m % 2 == 0)
        throw std::invalid_argument("alternating composition requires odd m >= 1");
    check_same_universe(b, c);
    Relation out = b;
    for (int i = 1; i < m; ++i) out = compose(out, i % 2 == 1 ? c : b);
    return out;
}

std::string to_string(const Relation& r) {
    std::string out = "{";
    bool first = true;
    for (const auto& [a, b] : r.pairs()) {
        if (!first) out += ", ";
        first = false;
        out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    out += "}";
    return out;
}

} // namespace malcev
