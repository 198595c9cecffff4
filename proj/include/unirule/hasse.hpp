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

#ifndef UNIRULE_HASSE_HPP
#define UNIRULE_HASSE_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "unirule/field.hpp"
#include "unirule/poly.hpp"

namespace unirule {

// The Hasse coefficient of a form F of degree n+1 in x_0..x_n over F_p is
// the coefficient of (x_0 ... x_n)^{p-1} in F^{p-1}. It is nonzero exactly
// when the projective hypersurface V(F) has a point count not congruent to
// 1 mod p.

enum class HasseMethod { PrunedExpansion, CharacterSum, Both };
enum class HasseMode { Auto, Expansion, CharSum, Both };

std::string_view to_string(HasseMethod m) noexcept;

struct HasseResult {
    Elem coefficient;  // in the prime field
    HasseMethod method = HasseMethod::PrunedExpansion;
    std::optional<bool> agreement;  // set when method == Both

    bool nonzero() const noexcept { return coefficient.rep != 0; }
    std::uint32_t value() const noexcept { return coefficient.rep; }
};

struct HasseOptions {
    /// Auto mode uses the character sum when p^{n+1} is at most this.
    std::uint64_t auto_threshold = 10'000'000;
    unsigned workers = 0;
};

/// F^{p-1} by p-2 successive multiplications by F, discarding after each
/// step every monomial with an exponent above p-1.
HasseResult hasse_coefficient_expansion(const Poly& form);

/// (-1)^n * #{v in F_p^{n+1} : F(v) = 0} mod p.
HasseResult hasse_coefficient_charsum(const Poly& form, unsigned workers = 1);

/// Dispatch; Both throws Disagreement if the two algorithms differ.
HasseResult hasse_coefficient(const Poly& form, HasseMode mode, const HasseOptions& opts = {});

}  // namespace unirule

#endif
