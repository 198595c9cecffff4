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

#ifndef UNIRULE_FERMAT_HPP
#define UNIRULE_FERMAT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unirule/count.hpp"

namespace unirule {

enum class Unirationality { Yes, No, Unknown };

std::string_view to_string(Unirationality u) noexcept;

/// Congruence data for the Fermat hypersurface x_0^d + ... + x_n^d over F_p.
struct FermatReport {
    std::uint64_t p = 0;
    std::uint64_t d = 0;
    std::uint64_t n = 0;
    bool p_coprime_d = false;
    /// Odd n >= 3, d >= 4 and p not dividing d.
    bool sk_applicable = false;
    /// Least nu >= 1 with p^nu = -1 (mod d).
    std::optional<std::uint64_t> sk_nu;
    /// Yes/No by the Shioda-Katsura criterion (No only for n = 3); never computed.
    Unirationality unirational = Unirationality::Unknown;
    /// d = n+1, p = 1 (mod d), p not dividing d.
    bool paper_nonuniruled = false;
    /// Hasse coefficient, when verification ran.
    std::optional<std::uint32_t> verified_coefficient;
};

/// Multiplicative order of a modulo m (gcd(a, m) = 1, m >= 1).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// Fills p_coprime_d, sk_applicable, sk_nu and unirational.
FermatReport shioda_katsura(std::uint64_t p, std::uint64_t d, std::uint64_t n);

struct FermatVerifyOptions {
    bool verify = false;
    CountOptions count;
};

/// Fills paper_nonuniruled; with verify set, computes the Hasse coefficient of
/// the Fermat form and confirms it is nonzero (throws CrossCheckMismatch otherwise).
FermatReport fermat_nonuniruled(std::uint64_t p, std::uint64_t d, std::uint64_t n,
                                const FermatVerifyOptions& opts = {});

/// Both halves of the analysis for one (p, d, n).
FermatReport fermat_report(std::uint64_t p, std::uint64_t d, std::uint64_t n, const FermatVerifyOptions& opts = {});

struct Range {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;  // inclusive; empty when hi < lo
};

/// One row per (p, d, n) with p prime, ordered by p, then d, then n.
std::vector<FermatReport> fermat_scan(Range p_range, Range d_range, Range n_range,
                                      const FermatVerifyOptions& opts = {});

std::string fermat_csv_header();
std::string to_csv(const FermatReport& r);

}  // namespace unirule

#endif
