#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "malcev/relation.hpp"

namespace malcev {

// Finitary operation table, row-major with the first argument most
// significant: table[a1*s^(k-1) + ... + ak].
struct OperationTable {
    std::string name;
    int arity = 0;
    std::vector<int> table;
};

class Algebra {
public:
    Algebra(int size, std::vector<OperationTable> operations);

    int size() const { return size_; }
    const std::vector<OperationTable>& operations() const { return operations_; }

    int apply(const OperationTable& op, std::span<const int> args) const;
    int apply(int op_index, std::span<const int> args) const;

    Algebra direct_square() const;

private:
    int size_;
    std::vector<OperationTable> operations_;
};

// True when r is closed under every operation applied componentwise,
// i.e. r is a subuniverse of the square of the algebra.
bool is_compatible(const Algebra& alg, const Relation& r);

// All compatible equivalence relations, canonically sorted.
// Partition enumeration; capped at universe size 8.
std::vector<Relation> congruences(const Algebra& alg);

enum class ToleranceClass { congruence, representable, weakly_representable, tolerance };

const char* to_string(ToleranceClass cls);

// Classes are cumulative: congruence => representable => weakly
// representable => tolerance; the record carries the strongest one.
struct ToleranceRecord {
    Relation relation;
    ToleranceClass cls;
};

// All compatible reflexive symmetric relations with their representability
// class, canonically sorted. Capped at universe size 6.
std::vector<ToleranceRecord> tolerances(const Algebra& alg);

// Every subuniverse of the square containing the diagonal, enumerated by
// closure from incrementally added pairs.
std::vector<Relation> compatible_reflexive_relations(const Algebra& alg);

// Least congruence containing the given pairs, via union-find saturated
// under all one-position operation translations.
Relation generated_congruence(const Algebra& alg, const std::vector<std::pair<int, int>>& pairs);

} // namespace malcev
