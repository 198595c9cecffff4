/*
   Copyright 2026 The unirule Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef UNIRULE_DETAIL_ENUMERATE_HPP
#define UNIRULE_DETAIL_ENUMERATE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "unirule/field.hpp"
#include "unirule/poly.hpp"

namespace unirule::detail {

/// q^e, or nullopt on overflow past `limit`.
std::optional<std::uint64_t> checked_pow(std::uint64_t q, unsigned e, std::uint64_t limit);

/// Number of points of P^{n_vars-1}(F_q), or nullopt when above `limit`.
std::optional<std::uint64_t> projective_size(std::uint64_t q, unsigned n_vars, std::uint64_t limit);

/// Forms flattened for repeated evaluation over one field.
class CompiledForms {
public:
    CompiledForms(std::span<const Poly> forms, const Field& field, unsigned n_vars);

    std::size_t size() const noexcept { return forms_.size(); }
    Elem eval(std::size_t form, std::span<const Elem> point) const noexcept;
    bool all_vanish(std::span<const Elem> point) const noexcept;

private:
    struct Term {
        Elem coeff;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;  // (variable, exponent)
    };
    Elem power(Elem x, std::uint32_t e) const noexcept;

    Field field_;
    unsigned n_vars_;
    std::uint32_t stride_ = 0;      // max exponent + 1, 0 when no table
    std::vector<Elem> pow_table_;  // pow_table_[x * stride_ + e]
    std::vector<std::vector<Term>> forms_;
};

/// Odometer over F_q^{n_vars}; index i has base-q digits (x_{n}, ..., x_0),
/// with x_{n} least significant.
class AffineCursor {
public:
    AffineCursor(std::uint32_t q, unsigned n_vars, std::uint64_t index);
    std::span<const Elem> point() const noexcept { return point_; }
    void advance() noexcept;

private:
    std::uint32_t q_;
    std::vector<Elem> point_;
};

/// Walks normalized projective representatives: the first nonzero coordinate
/// is 1. Representatives with leading coordinate at position 0 come first,
/// and within a block the trailing coordinates run as an odometer.
class ProjectiveCursor {
public:
    ProjectiveCursor(std::uint32_t q, unsigned n_vars, std::uint64_t index);
    std::span<const Elem> point() const noexcept { return point_; }
    void advance() noexcept;

private:
    std::uint32_t q_;
    unsigned lead_ = 0;
    std::vector<Elem> point_;
};

}  // namespace unirule::detail

#endif
