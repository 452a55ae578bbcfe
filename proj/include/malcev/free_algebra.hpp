#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "malcev/algebra.hpp"

namespace malcev {

struct FreeAlgebraCaps {
    int max_power_size = 4096; // cap on size^generators
    int max_elements = 100000; // guard against closure runaway
};

// Free algebra on m generators in the variety generated by a finite base
// algebra: the subalgebra of the (s^m)-th direct power generated by the m
// projection vectors. Every element is stored as its full coordinate vector
// over all argument tuples, i.e. literally as an m-ary operation table on
// the base algebra.
class FreeAlgebra {
public:
    static FreeAlgebra generate(const Algebra& base, int generator_count,
                                const FreeAlgebraCaps& caps = {});

    const Algebra& base() const { return base_; }
    int generator_count() const { return generator_count_; }
    int coordinate_count() const { return coordinate_count_; }

    int element_count() const { return static_cast<int>(elements_.size()); }
    const std::vector<std::uint8_t>& element(int index) const { return elements_.at(index); }
    int generator(int j) const { return generators_.at(j); }

    // Index of a coordinate vector, -1 if not an element.
    int find(const std::vector<std::uint8_t>& coordinates) const;

    // Value of an element at the argument tuple given by generator values;
    // evaluating coordinates realizes the universal property.
    int value_at(int element_index, std::span<const int> generator_values) const;

    // The same algebra presented on element indices {0,...,count-1}.
    Algebra as_algebra() const;

private:
    FreeAlgebra(Algebra base, int generator_count, int coordinate_count)
        : base_(std::move(base)), generator_count_(generator_count),
          coordinate_count_(coordinate_count) {}

    int add_element(std::vector<std::uint8_t> coords);

    Algebra base_;
    int generator_count_;
    int coordinate_count_;
    std::vector<std::vector<std::uint8_t>> elements_;
    std::vector<int> generators_;
    std::unordered_map<std::string, int> index_of_;
};

} // namespace malcev
