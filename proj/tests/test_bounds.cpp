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

#include <doctest.h>

#include <algorithm>

#include "unirule/bounds.hpp"
#include "unirule/error.hpp"

using namespace unirule;

namespace {

std::vector<unsigned> degs(std::initializer_list<unsigned> d) { return d; }

// All nondecreasing multidegrees with k <= max_k parts and sum <= max_sum.
void multidegrees(unsigned max_k, unsigned max_sum, std::vector<unsigned>& cur, unsigned lo,
                  std::vector<std::vector<unsigned>>& out) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == max_k) return;
    unsigned sum = 0;
    for (auto d : cur) sum += d;
    for (unsigned d = lo; sum + d <= max_sum; ++d) {
        cur.push_back(d);
        multidegrees(max_k, max_sum, cur, d, out);
        cur.pop_back();
    }
}

std::vector<std::vector<unsigned>> multidegrees(unsigned max_k, unsigned max_sum) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    multidegrees(max_k, max_sum, cur, 1, out);
    return out;
}

}  // namespace

TEST_CASE("codimension_bounds examples") {
    const auto a = codimension_bounds(3, degs({5}));
    CHECK(a.rc_locus_codim_lb == 1);
    CHECK(a.uniruled_locus_codim_lb == 2);
    CHECK(a.no_rational_curves);
    CHECK(a.classification == Classification::GeneralType);
    CHECK(a.hypersurface_moduli_dim == 55u);
    CHECK_FALSE(a.rc_vacuous);

    const auto b = codimension_bounds(4, degs({2, 3}));
    CHECK(b.sum_d == 5);
    CHECK(b.classification == Classification::CalabiYau);
    CHECK(b.rc_locus_codim_lb == -1);
    CHECK(b.rc_vacuous);
    CHECK(b.uniruled_locus_codim_lb == 1);
    CHECK_FALSE(b.uniruled_vacuous);
    CHECK_FALSE(b.no_rational_curves);
    CHECK_FALSE(b.hypersurface_moduli_dim.has_value());

    const auto c = codimension_bounds(2, degs({4}));
    CHECK(c.rc_locus_codim_lb == 2);
    CHECK(c.no_rational_curves);
    CHECK(c.hypersurface_moduli_dim == 14u);

    CHECK_THROWS_AS(codimension_bounds(2, degs({1, 1, 1})), Error);
    CHECK_THROWS_AS(codimension_bounds(2, degs({0})), Error);
}

TEST_CASE("hyperbolicity_step") {
    CHECK(hyperbolicity_step(degs({5}), 0).codim_lb == 1);
    CHECK(hyperbolicity_step(degs({5}), 0).ambient_n == 4);
    const auto s = hyperbolicity_step(degs({5}), 1);
    CHECK(s.ambient_n == 3);
    CHECK(s.codim_lb == 2);
    CHECK(s.codim_lb == codimension_bounds(3, degs({5})).uniruled_locus_codim_lb);
    try {
        hyperbolicity_step(degs({5}), -1);
        FAIL("expected NegativeShift");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NegativeShift);
    }
}

TEST_CASE("formulas over every multidegree, n <= 10, sum(d) <= 15") {
    for (unsigned n = 1; n <= 10; ++n) {
        for (const auto& d : multidegrees(n, 15)) {
            const auto r = codimension_bounds(n, d);
            const std::int64_t s = r.sum_d;
            REQUIRE(r.rc_locus_codim_lb == s - 2 * static_cast<std::int64_t>(n) + 2);
            REQUIRE(r.uniruled_locus_codim_lb == s - n);
            REQUIRE(r.rc_vacuous == (r.rc_locus_codim_lb <= 0));
            REQUIRE(r.uniruled_vacuous == (r.uniruled_locus_codim_lb <= 0));
            REQUIRE(r.rc_locus_codim_lb == r.uniruled_locus_codim_lb - n + 2);
            REQUIRE(r.no_rational_curves == (d.size() == 1 && d[0] >= 2 * n - 1));
            if (r.no_rational_curves) REQUIRE(r.rc_locus_codim_lb >= 1);
            REQUIRE(r.hypersurface_moduli_dim.has_value() == (d.size() == 1));
        }
    }
}

TEST_CASE("monotonicity") {
    for (unsigned n = 1; n <= 8; ++n) {
        for (const auto& d : multidegrees(n, 14)) {
            const auto r = codimension_bounds(n, d);
            for (std::size_t i = 0; i < d.size(); ++i) {
                auto up = d;
                ++up[i];
                const auto u = codimension_bounds(n, up);
                REQUIRE(u.rc_locus_codim_lb == r.rc_locus_codim_lb + 1);
                REQUIRE(u.uniruled_locus_codim_lb == r.uniruled_locus_codim_lb + 1);
            }
            const auto m = codimension_bounds(n + 1, d);
            REQUIRE(m.rc_locus_codim_lb == r.rc_locus_codim_lb - 2);
            REQUIRE(m.uniruled_locus_codim_lb == r.uniruled_locus_codim_lb - 1);
        }
    }
}

TEST_CASE("hypersurface threshold is d >= 2n - 1") {
    for (unsigned n = 1; n <= 12; ++n) {
        for (unsigned d = 1; d <= 30; ++d) {
            CHECK(codimension_bounds(n, std::vector<unsigned>{d}).no_rational_curves == (d + 1 >= 2 * n));
        }
        if (n >= 2) CHECK_FALSE(codimension_bounds(n, std::vector<unsigned>{2 * n - 2}).no_rational_curves);
    }
}

TEST_CASE("step chain matches the uniruled bound, sum(d) <= 30") {
    for (const auto& d : multidegrees(29, 30)) {
        unsigned s = 0;
        for (auto x : d) s += x;
        for (unsigned n = std::max<unsigned>(1, static_cast<unsigned>(d.size())); n + 1 < s; ++n) {
            const auto step = hyperbolicity_step_at(n, d);
            REQUIRE(step.ambient_n == n);
            REQUIRE(step.codim_lb == codimension_bounds(n, d).uniruled_locus_codim_lb);
            REQUIRE(step.codim_lb == hyperbolicity_step(d, static_cast<std::int64_t>(s) - 1 - n).codim_lb);
        }
    }
}

TEST_CASE("bounds are invariant under permuting degrees") {
    for (unsigned n = 3; n <= 6; ++n) {
        for (auto d : multidegrees(3, 12)) {
            const auto base = codimension_bounds(n, d);
            std::sort(d.begin(), d.end());
            while (std::next_permutation(d.begin(), d.end())) {
                const auto r = codimension_bounds(n, d);
                REQUIRE(r.rc_locus_codim_lb == base.rc_locus_codim_lb);
                REQUIRE(r.uniruled_locus_codim_lb == base.uniruled_locus_codim_lb);
                REQUIRE(r.classification == base.classification);
                REQUIRE(r.no_rational_curves == base.no_rational_curves);
            }
        }
    }
}

TEST_CASE("moduli dimension") {
    CHECK(codimension_bounds(1, degs({1})).hypersurface_moduli_dim == 1u);
    CHECK(codimension_bounds(3, degs({4})).hypersurface_moduli_dim == 34u);
    CHECK(codimension_bounds(4, degs({5})).hypersurface_moduli_dim == 125u);
}

TEST_CASE("bounds CSV") {
    CHECK(to_csv(codimension_bounds(4, degs({2, 3}))).find("4,2 3,calabi-yau,5,-1,") == 0);
    CHECK(bounds_csv_header().find("n,degrees,") == 0);
}
