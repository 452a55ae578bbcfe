#include "malcev/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <stdexcept>

#include "malcev/errors.hpp"
#include "malcev/union_find.hpp"

namespace malcev {

namespace {

// Overflow-safe s^k for table sizing.
std::size_t checked_power(int s, int k) {
    std::size_t p = 1;
    for (int i = 0; i < k; ++i) {
        if (p > (std::size_t{1} << 40) / static_cast<std::size_t>(s))
            throw CapError("operation table too large");
        p *= static_cast<std::size_t>(s);
    }
    return p;
}

} // namespace

Algebra::Algebra(int size, std::vector<OperationTable> operations)
    : size_(size), operations_(std::move(operations)) {
    if (size_ < 1) throw std::invalid_argument("algebra universe must be nonempty");
    for (const auto& op : operations_) {
        if (op.arity < 0) throw std::invalid_argument("operation arity must be nonnegative");
        if (op.table.size() != checked_power(size_, op.arity))
            throw std::invalid_argument("operation '" + op.name + "' table has wrong length");
        for (int v : op.table)
            if (v < 0 || v >= size_)
                throw std::invalid_argument("operation '" + op.name + "' table value out of range");
    }
}

int Algebra::apply(const OperationTable& op, std::span<const int> args) const {
    if (static_cast<int>(args.size()) != op.arity)
        throw std::invalid_argument("operation '" + op.name + "' expects " +
                                    std::to_string(op.arity) + " arguments");
    std::size_t index = 0;
    for (int a : args) {
        assert(a >= 0 && a < size_);
        index = index * static_cast<std::size_t>(size_) + static_cast<std::size_t>(a);
    }
    return op.table[index];
}

int Algebra::apply(int op_index, std::span<const int> args) const {
    return apply(operations_.at(op_index), args);
}

Algebra Algebra::direct_square() const {
    const int s = size_;
    const int s2 = s * s;
    std::vector<OperationTable> ops;
    for (const auto& op : operations_) {
        OperationTable sq{op.name, op.arity, std::vector<int>(checked_power(s2, op.arity))};
        std::vector<int> args(op.arity, 0), first(op.arity), second(op.arity);
        std::size_t index = 0;
        while (true) {
            for (int j = 0; j < op.arity; ++j) {
                first[j] = args[j] / s;
                second[j] = args[j] % s;
            }
            sq.table[index] = apply(op, first) * s + apply(op, second);
            ++index;
            int j = op.arity - 1;
            while (j >= 0 && ++args[j] == s2) args[j--] = 0;
            if (j < 0) break;
        }
        ops.push_back(std::move(sq));
    }
    return Algebra(s2, std::move(ops));
}

bool is_compatible(const Algebra& alg, const Relation& r) {
    if (r.size() != alg.size())
        throw std::invalid_argument("relation universe does not match algebra");
    const auto ps = r.pairs();
    for (const auto& op : alg.operations()) {
        const int k = op.arity;
        if (k == 0) {
            const int c = op.table[0];
            if (!r.contains(c, c)) return false;
            continue;
        }
        if (ps.empty()) continue;
        std::vector<std::size_t> idx(k, 0);
        std::vector<int> first(k), second(k);
        while (true) {
            for (int j = 0; j < k; ++j) {
                first[j] = ps[idx[j]].first;
                second[j] = ps[idx[j]].second;
            }
            if (!r.contains(alg.apply(op, first), alg.apply(op, second))) return false;
            int j = k - 1;
            while (j >= 0 && ++idx[j] == ps.size()) idx[j--] = 0;
            if (j < 0) break;
        }
    }
    return true;
}

std::vector<Relation> congruences(const Algebra& alg) {
    const int s = alg.size();
    if (s > 8) throw CapError("congruence enumeration capped at universe size 8, got " +
                              std::to_string(s));
    std::vector<Relation> out;
    std::vector<int> assign(s, 0);
    // Restricted growth strings enumerate every partition exactly once.
    auto rec = [&](auto&& self, int v, int max_used) -> void {
        if (v == s) {
            Relation r(s);
            for (int a = 0; a < s; ++a)
                for (int b = 0; b < s; ++b)
                    if (assign[a] == assign[b]) r.add(a, b);
            if (is_compatible(alg, r)) out.push_back(std::move(r));
            return;
        }
        for (int c = 0; c <= max_used + 1; ++c) {
            assign[v] = c;
            self(self, v + 1, std::max(max_used, c));
        }
    };
    rec(rec, 1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Relation> compatible_reflexive_relations(const Algebra& alg) {
    const int s = alg.size();
    if (s > Relation::kMaxSize) throw CapError("universe too large for relation computations");
    constexpr std::size_t kGrowthCap = std::size_t{1} << 20;

    auto close = [&](Relation r) {
        // Subuniverse closure of the square: saturate under all operations.
        bool changed = true;
        while (changed) {
            changed = false;
            const auto ps = r.pairs();
            for (const auto& op : alg.operations()) {
                const int k = op.arity;
                if (k == 0) {
                    const int c = op.table[0];
                    if (!r.contains(c, c)) {
                        r.add(c, c);
                        changed = true;
                    }
                    continue;
                }
                if (ps.empty()) continue;
                std::vector<std::size_t> idx(k, 0);
                std::vector<int> first(k), second(k);
                while (true) {
                    for (int j = 0; j < k; ++j) {
                        first[j] = ps[idx[j]].first;
                        second[j] = ps[idx[j]].second;
                    }
                    const int a = alg.apply(op, first);
                    const int b = alg.apply(op, second);
                    if (!r.contains(a, b)) {
                        r.add(a, b);
                        changed = true;
                    }
                    int j = k - 1;
                    while (j >= 0 && ++idx[j] == ps.size()) idx[j--] = 0;
                    if (j < 0) break;
                }
            }
        }
        return r;
    };

    std::set<Relation> seen;
    std::deque<Relation> queue;
    Relation base = close(Relation::diagonal(s));
    seen.insert(base);
    queue.push_back(std::move(base));
    while (!queue.empty()) {
        Relation r = std::move(queue.front());
        queue.pop_front();
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b) {
                if (r.contains(a, b)) continue;
                Relation grown = r;
                grown.add(a, b);
                grown = close(std::move(grown));
                if (seen.insert(grown).second) {
                    if (seen.size() > kGrowthCap)
                        throw CapError("compatible reflexive relation enumeration too large");
                    queue.push_back(std::move(grown));
                }
            }
    }
    return {seen.begin(), seen.end()};
}

const char* to_string(ToleranceClass cls) {
    switch (cls) {
    case ToleranceClass::congruence: return "congruence";
    case ToleranceClass::representable: return "representable";
    case ToleranceClass::weakly_representable: return "weakly-representable";
    case ToleranceClass::tolerance: return "tolerance";
    }
    return "?";
}

std::vector<ToleranceRecord> tolerances(const Algebra& alg) {
    const int s = alg.size();
    if (s > 6) throw CapError("tolerance enumeration capped at universe size 6, got " +
                              std::to_string(s));

    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < s; ++a)
        for (int b = a + 1; b < s; ++b) slots.emplace_back(a, b);

    std::vector<Relation> tols;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        Relation r = Relation::diagonal(s);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1) r.add_symmetric(slots[i].first, slots[i].second);
        if (is_compatible(alg, r)) tols.push_back(std::move(r));
    }
    std::sort(tols.begin(), tols.end());

    // One composition image per compatible reflexive relation; each tolerance
    // is classified against the whole family.
    std::set<Relation> images;
    for (const Relation& r : compatible_reflexive_relations(alg))
        images.insert(compose(r, converse(r)));

    std::vector<ToleranceRecord> out;
    for (Relation& theta : tols) {
        ToleranceClass cls = ToleranceClass::tolerance;
        if (theta.transitive()) {
            cls = ToleranceClass::congruence;
        } else if (images.count(theta)) {
            cls = ToleranceClass::representable;
        } else {
            Relation meet = Relation::full(s);
            for (const Relation& img : images)
                if (theta.subset_of(img)) meet = intersect(meet, img);
            if (meet == theta) cls = ToleranceClass::weakly_representable;
        }
        out.push_back({std::move(theta), cls});
    }
    return out;
}

Relation generated_congruence(const Algebra& alg, const std::vector<std::pair<int, int>>& pairs) {
    const int s = alg.size();
    if (s > Relation::kMaxSize)
        throw CapError("universe too large for relation computations, size " + std::to_string(s));

    UnionFind uf(s);
    std::deque<std::pair<int, int>> work;
    for (const auto& [a, b] : pairs) {
        if (a < 0 || a >= s || b < 0 || b >= s)
            throw std::invalid_argument("generator pair element out of range");
        if (uf.unite(a, b)) work.emplace_back(a, b);
    }

    // Saturate under one-position translations; transitivity comes from the
    // union-find and full compatibility follows position by position.
    while (!work.empty()) {
        auto [a, b] = work.front();
        work.pop_front();
        for (const auto& op : alg.operations()) {
            const int k = op.arity;
            if (k == 0) continue;
            std::vector<int> args(k, 0);
            for (int pos = 0; pos < k; ++pos) {
                std::fill(args.begin(), args.end(), 0);
                while (true) {
                    args[pos] = a;
                    const int x = alg.apply(op, args);
                    args[pos] = b;
                    const int y = alg.apply(op, args);
                    if (uf.unite(x, y)) work.emplace_back(x, y);
                    int j = k - 1;
                    while (j >= 0) {
                        if (j == pos) {
                            --j;
                            continue;
                        }
                        if (++args[j] < s) break;
                        args[j--] = 0;
                    }
                    if (j < 0) break;
                }
            }
        }
    }

    Relation out(s);
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            if (uf.find(a) == uf.find(b)) out.add(a, b);
    return out;
}

} // namespace malcev
