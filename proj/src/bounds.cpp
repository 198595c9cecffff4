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

#include "unirule/bounds.hpp"

#include <numeric>

#include "unirule/error.hpp"

namespace unirule {

namespace {

std::optional<std::uint64_t> binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) return std::nullopt;
    }
    return static_cast<std::uint64_t>(r);
}

std::int64_t degree_sum(std::span<const unsigned> degrees) {
    return std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});
}

}  // namespace

BoundsReport codimension_bounds(unsigned n, std::span<const unsigned> degrees) {
    BoundsReport r;
    r.classification = classify(n, degrees);
    r.n = n;
    r.degrees.assign(degrees.begin(), degrees.end());
    r.sum_d = degree_sum(degrees);
    r.rc_locus_codim_lb = r.sum_d - 2 * std::int64_t{n} + 2;
    r.uniruled_locus_codim_lb = r.sum_d - std::int64_t{n};
    r.rc_vacuous = r.rc_locus_codim_lb <= 0;
    r.uniruled_vacuous = r.uniruled_locus_codim_lb <= 0;
    if (degrees.size() == 1) {
        const std::int64_t d = degrees[0];
        r.no_rational_curves = d >= 2 * std::int64_t{n} - 1;
        if (auto c = binomial(std::uint64_t{n} + d, d); c && *c > 0) r.hypersurface_moduli_dim = *c - 1;
    }
    return r;
}

StepBound hyperbolicity_step(std::span<const unsigned> degrees, std::int64_t c) {
    if (c < 0) throw Error(ErrorCode::NegativeShift, "shift c = " + std::to_string(c));
    if (degrees.empty()) throw Error(ErrorCode::InvalidMultidegree, "empty multidegree");
    for (auto d : degrees) {
        if (d == 0) throw Error(ErrorCode::InvalidMultidegree, "degree 0 form");
    }
    return StepBound{degree_sum(degrees) - 1 - c, c + 1};
}

StepBound hyperbolicity_step_at(unsigned n, std::span<const unsigned> degrees) {
    return hyperbolicity_step(degrees, degree_sum(degrees) - 1 - std::int64_t{n});
}

std::string bounds_csv_header() {
    return "n,degrees,classification,sum_d,rc_locus_codim_lb,rc_vacuous,uniruled_locus_codim_lb,"
           "uniruled_vacuous,no_rational_curves,hypersurface_moduli_dim";
}

std::string to_csv(const BoundsReport& r) {
    auto b = [](bool v) { return v ? std::string("true") : std::string("false"); };
    std::string degs;
    for (auto d : r.degrees) degs += (degs.empty() ? "" : " ") + std::to_string(d);
    std::string s = std::to_string(r.n) + ',' + degs + ',' + std::string(to_string(r.classification)) + ',' +
                    std::to_string(r.sum_d) + ',' + std::to_string(r.rc_locus_codim_lb) + ',' + b(r.rc_vacuous) +
                    ',' + std::to_string(r.uniruled_locus_codim_lb) + ',' + b(r.uniruled_vacuous) + ',' +
                    b(r.no_rational_curves) + ',';
    if (r.hypersurface_moduli_dim) s += std::to_string(*r.hypersurface_moduli_dim);
    return s;
}

}  // namespace unirule
