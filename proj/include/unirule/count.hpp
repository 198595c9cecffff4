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

#ifndef UNIRULE_COUNT_HPP
#define UNIRULE_COUNT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "unirule/field.hpp"
#include "unirule/poly.hpp"

namespace unirule {

struct CountOptions {
    /// Maximum number of points a single enumeration may visit.
    std::uint64_t budget = 100'000'000;
    /// 0 = hardware concurrency.
    unsigned workers = 0;
    /// Recount the affine cone and check it against the projective count.
    bool verify = false;
};

struct CountResult {
    std::uint64_t q = 0;
    std::uint64_t affine_cone_zeros = 0;
    std::uint64_t projective_points = 0;
};

enum class SmoothnessKind { FermatExact, ProbedNoSingularPoint, SingularPointFound, Asserted };

std::string_view to_string(SmoothnessKind k) noexcept;

/// Evidence for the smoothness hypothesis. Smoothness over the algebraic
/// closure is never claimed outright; this records how far it was checked.
struct SmoothnessEvidence {
    SmoothnessKind kind = SmoothnessKind::Asserted;
    /// Probed: largest extension degree m searched. Singular: m of the witness.
    std::optional<unsigned> probe_depth;
    /// Singular point coordinates as element representations in F_{q^m}.
    std::vector<std::uint32_t> witness;
    /// Designation of F_{q^m} for the witness, e.g. "7" or "3^2".
    std::string witness_field;
};

/// Common zeros of the forms in F_q^{n_vars}.
std::uint64_t count_affine_zeros(std::span<const Poly> forms, const Field& field, unsigned n_vars,
                                 const CountOptions& opts = {});

/// Points of V(forms) in P^{n_vars-1}(F_q), by enumerating normalized representatives.
CountResult count_projective_points(std::span<const Poly> forms, const Field& field, unsigned n_vars,
                                    const CountOptions& opts = {});

/// Searches for singular points over F_{q^m}, m = 1..max_ext. A point is
/// singular when all forms vanish and the Jacobian has rank below the number
/// of forms. A single diagonal hypersurface with p not dividing d is reported
/// FermatExact without searching. If F_{q^m} exceeds the budget for some
/// m > 1, the search stops and reports the depth actually reached.
SmoothnessEvidence singular_probe(std::span<const Poly> forms, const Field& field, unsigned n_vars,
                                  unsigned max_ext, const CountOptions& opts = {});

/// Rank of the Jacobian of the forms at a point, over the forms' field.
unsigned jacobian_rank(std::span<const Poly> forms, std::span<const Elem> point);

/// Checks a SingularPointFound record: rebuilds F_{q^m}, verifies the witness
/// lies on the variety and drops the Jacobian rank.
bool verify_singular_witness(std::span<const Poly> forms, const Field& field, const SmoothnessEvidence& ev);

}  // namespace unirule

#endif
