#include "malcev/free_algebra.hpp"

#include <cassert>
#include <stdexcept>

#include "malcev/errors.hpp"

namespace malcev {

namespace {

std::string key_of(const std::vector<std::uint8_t>& coords) {
    return std::string(reinterpret_cast<const char*>(coords.data()), coords.size());
}

} // namespace

int FreeAlgebra::add_element(std::vector<std::uint8_t> coords) {
    auto [it, inserted] = index_of_.emplace(key_of(coords), element_count());
    if (inserted) elements_.push_back(std::move(coords));
    return it->second;
}

int FreeAlgebra::find(const std::vector<std::uint8_t>& coordinates) const {
    auto it = index_of_.find(key_of(coordinates));
    return it == index_of_.end() ? -1 : it->second;
}

FreeAlgebra FreeAlgebra::generate(const Algebra& base, int generator_count,
                                  const FreeAlgebraCaps& caps) {
    if (generator_count < 1) throw std::invalid_argument("generator count must be at least 1");
    const int s = base.size();
    long long power = 1;
    for (int j = 0; j < generator_count; ++j) {
        power *= s;
        if (power > caps.max_power_size)
            throw CapError("free algebra power size " + std::to_string(s) + "^" +
                           std::to_string(generator_count) + " exceeds cap " +
                           std::to_string(caps.max_power_size));
    }
    const int coords = static_cast<int>(power);

    FreeAlgebra fa(base, generator_count, coords);
    // The j-th projection reads the j-th digit of the argument tuple, first
    // generator most significant, matching the operation-table convention.
    for (int j = 0; j < generator_count; ++j) {
        std::vector<std::uint8_t> proj(coords);
        long long stride = 1;
        for (int i = j + 1; i < generator_count; ++i) stride *= s;
        for (int t = 0; t < coords; ++t)
            proj[t] = static_cast<std::uint8_t>((t / stride) % s);
        fa.generators_.push_back(fa.add_element(std::move(proj)));
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& op : base.operations()) {
            const int k = op.arity;
            if (k == 0) {
                std::vector<std::uint8_t> constant(coords,
                                                   static_cast<std::uint8_t>(op.table[0]));
                const int before = fa.element_count();
                fa.add_element(std::move(constant));
                if (fa.element_count() != before) changed = true;
                continue;
            }
            const int snapshot = fa.element_count();
            std::vector<int> idx(k, 0);
            std::vector<int> args(k);
            while (true) {
                std::vector<std::uint8_t> result(coords);
                for (int t = 0; t < coords; ++t) {
                    for (int j = 0; j < k; ++j) args[j] = fa.elements_[idx[j]][t];
                    result[t] = static_cast<std::uint8_t>(base.apply(op, args));
                }
                const int before = fa.element_count();
                fa.add_element(std::move(result));
                if (fa.element_count() != before) {
                    changed = true;
                    if (fa.element_count() > caps.max_elements)
                        throw CapError("free algebra closure exceeded element cap " +
                                       std::to_string(caps.max_elements));
                }
                int j = k - 1;
                while (j >= 0 && ++idx[j] == snapshot) idx[j--] = 0;
                if (j < 0) break;
            }
        }
    }
    return fa;
}

int FreeAlgebra::value_at(int element_index, std::span<const int> generator_values) const {
    if (static_cast<int>(generator_values.size()) != generator_count_)
        throw std::invalid_argument("expected one value per generator");
    long long t = 0;
    for (int v : generator_values) {
        if (v < 0 || v >= base_.size()) throw std::out_of_range("generator value out of range");
        t = t * base_.size() + v;
    }
    return elements_.at(element_index)[static_cast<std::size_t>(t)];
}

Algebra FreeAlgebra::as_algebra() const {
    const int count = element_count();
    std::vector<OperationTable> ops;
    for (const auto& op : base_.operations()) {
        const int k = op.arity;
        long long table_size = 1;
        for (int j = 0; j < k; ++j) {
            table_size *= count;
            if (table_size > (1LL << 24))
                throw CapError("free algebra too large to present as operation tables");
        }
        OperationTable lifted{op.name, k, std::vector<int>(static_cast<std::size_t>(table_size))};
        std::vector<int> idx(k, 0);
        std::vector<int> args(k);
        std::size_t pos = 0;
        while (true) {
            std::vector<std::uint8_t> result(coordinate_count_);
            for (int t = 0; t < coordinate_count_; ++t) {
                for (int j = 0; j < k; ++j) args[j] = elements_[idx[j]][t];
                result[t] = static_cast<std::uint8_t>(base_.apply(op, args));
            }
            const int found = find(result);
            assert(found >= 0);
            lifted.table[pos++] = found;
            int j = k - 1;
            while (j >= 0 && ++idx[j] == count) idx[j--] = 0;
            if (j < 0 || k == 0) break;
        }
        ops.push_back(std::move(lifted));
    }
    return Algebra(count, std::move(ops));
}

} // namespace malcev
