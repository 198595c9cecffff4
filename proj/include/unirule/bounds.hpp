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

#ifndef UNIRULE_BOUNDS_HPP
#define UNIRULE_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unirule/certify.hpp"

namespace unirule {

/// Codimension lower bounds for loci of complete intersections of a given
/// multidegree in P^n. Bounds are reported as computed, including values
/// <= 0, which carry no information and are flagged vacuous.
struct BoundsReport {
    unsigned n = 0;
    std::vector<unsigned> degrees;
    Classification classification = Classification::Fano;
    std::int64_t sum_d = 0;
    /// Locus containing a rational curve: sum(d) - 2n + 2.
    std::int64_t rc_locus_codim_lb = 0;
    bool rc_vacuous = false;
    /// Uniruled locus: sum(d) - n.
    std::int64_t uniruled_locus_codim_lb = 0;
    bool uniruled_vacuous = false;
    /// Hypersurfaces only: d >= 2n - 1, so a very general member has no rational curves.
    bool no_rational_curves = false;
    /// C(n+d, d) - 1 for hypersurfaces; absent for k >= 2 or on overflow.
    std::optional<std::uint64_t> hypersurface_moduli_dim;
};

BoundsReport codimension_bounds(unsigned n, std::span<const unsigned> degrees);

/// Bound carried by one step of the induction on ambient dimension.
struct StepBound {
    std::int64_t ambient_n;  // sum(d) - 1 - c
    std::int64_t codim_lb;   // c + 1
};

/// Starting from ambient dimension sum(d) - 1, where the rational-curve
/// locus has codimension >= 1, going down c dimensions raises the bound to
/// c + 1. Throws NegativeShift for c < 0.
StepBound hyperbolicity_step(std::span<const unsigned> degrees, std::int64_t c);

/// The step landing on ambient dimension n, i.e. c = sum(d) - 1 - n.
StepBound hyperbolicity_step_at(unsigned n, std::span<const unsigned> degrees);

std::string bounds_csv_header();
std::string to_csv(const BoundsReport& r);

}  // namespace unirule

#endif
