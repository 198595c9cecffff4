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

#include <set>
#include <sstream>

#include "unirule/error.hpp"
#include "unirule/poly.hpp"

using namespace unirule;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::Usage;
}

Monomial mono(std::initializer_list<std::uint32_t> e) { return Monomial(e); }

// Every point of F_q^{n_vars}.
std::vector<std::vector<Elem>> all_points(const Field& f, unsigned n_vars) {
    std::vector<std::vector<Elem>> pts{{}};
    for (unsigned i = 0; i < n_vars; ++i) {
        std::vector<std::vector<Elem>> next;
        for (const auto& p : pts) {
            for (auto a : f.elements()) {
                auto q = p;
                q.push_back(a);
                next.push_back(std::move(q));
            }
        }
        pts = std::move(next);
    }
    return pts;
}

}  // namespace

TEST_CASE("parse_poly") {
    const auto f7 = Field::prime(7);
    const auto cubic = parse_poly("x0^3 + x1^3 + x2^3", f7, 2);
    CHECK(cubic.size() == 3);
    CHECK(cubic.degree() == 3u);
    CHECK(cubic.n_vars() == 3);

    const auto f5 = Field::prime(5);
    const auto q = parse_poly("x0^2 + 3*x1*x2 - x0*x1", f5, 2);
    CHECK(q.size() == 3);
    CHECK(q.degree() == 2u);
    CHECK(q.coefficient(mono({1, 1, 0})) == Elem{4});
    CHECK(q.coefficient(mono({0, 1, 1})) == Elem{3});

    SUBCASE("whitespace, repeated factors, constants") {
        const auto a = parse_poly("  2 * x0 * x0*x1 -x1 ^ 3 ", f5, 1);
        CHECK(a.coefficient(mono({2, 1})) == Elem{2});
        CHECK(a.coefficient(mono({0, 3})) == Elem{4});
        CHECK(parse_poly("12", f5, 2).degree() == 0u);
        CHECK(parse_poly("-x0", f5, 0).coefficient(mono({1})) == Elem{4});
        // 123456789012345678901234567893 = 3 (mod 7)
        CHECK(parse_poly("123456789012345678901234567893*x0", f7, 0).coefficient(mono({1})) == Elem{3});
    }
    SUBCASE("errors") {
        CHECK(code_of([&] { parse_poly("x0^2 + x1", f7, 2); }) == ErrorCode::NotHomogeneous);
        CHECK(code_of([&] { parse_poly("x0 + x3", f7, 2); }) == ErrorCode::UnknownVariable);
        CHECK(code_of([&] { parse_poly("7*x0", f7, 2); }) == ErrorCode::ZeroPolynomial);
        CHECK(code_of([&] { parse_poly("x0 - x0", f7, 2); }) == ErrorCode::ZeroPolynomial);
        CHECK(code_of([&] { parse_poly("x0 +", f7, 2); }) == ErrorCode::SyntaxError);
        CHECK(code_of([&] { parse_poly("y0", f7, 2); }) == ErrorCode::SyntaxError);
        CHECK(code_of([&] { parse_poly("x0 x1", f7, 2); }) == ErrorCode::SyntaxError);
        CHECK(code_of([&] { parse_poly("{1,2}*x0", f7, 2); }) == ErrorCode::SyntaxError);
        CHECK(code_of([&] { parse_poly("", f7, 2); }) == ErrorCode::SyntaxError);
    }
    SUBCASE("syntax errors carry the position") {
        try {
            parse_poly("x0 + *x1", f7, 2);
            FAIL("expected SyntaxError");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("position 5") != std::string::npos);
        }
    }
    SUBCASE("extension-field coefficient vectors") {
        const auto f9 = Field::extension(3, 2, 4);
        const auto g = parse_poly("{1,2}*x0^2 + x1^2", f9, 1);
        CHECK(g.coefficient(mono({2, 0})) == f9.from_coeffs(std::vector<std::uint32_t>{1, 2}));
    }
}

TEST_CASE("parse_poly_lines skips comments and blanks") {
    std::istringstream in("# header\n\nx0^2 + x1^2\n   # indented comment\nx0*x1\n");
    const auto forms = parse_poly_lines(in, Field::prime(5), 1);
    REQUIRE(forms.size() == 2);
    CHECK(forms[1].size() == 1);
}

TEST_CASE("poly_mul") {
    const auto f5 = Field::prime(5);
    const auto a = parse_poly("x0 + x1", f5, 2);
    const auto b = parse_poly("x0 - x1", f5, 2);
    CHECK(a * b == parse_poly("x0^2 + 4*x1^2", f5, 2));
    CHECK(a * Poly::constant(f5, 3, f5.one()) == a);

    const auto f2 = Field::prime(2);
    const auto s = parse_poly("x0 + x1", f2, 2);
    CHECK(s * s == parse_poly("x0^2 + x1^2", f2, 2));

    CHECK(code_of([&] { (void)(a * parse_poly("x0", Field::prime(7), 2)); }) == ErrorCode::FieldMismatch);
    CHECK(code_of([&] { (void)(a * parse_poly("x0", f5, 1)); }) == ErrorCode::ArityMismatch);
}

TEST_CASE("poly_mul_truncated drops high exponents only") {
    const auto f7 = Field::prime(7);
    const auto a = parse_poly("x0^2 + x0*x1 + x1^2", f7, 1);
    const auto full = a * a;
    const auto cut = poly_mul_truncated(a, a, 2);
    for (const auto& [m, c] : full.terms()) {
        if (m[0] <= 2 && m[1] <= 2) CHECK(cut.coefficient(m) == c);
        else CHECK(cut.coefficient(m) == f7.zero());
    }
}

TEST_CASE("poly_eval") {
    const auto f7 = Field::prime(7);
    const auto cubic = parse_poly("x0^3+x1^3+x2^3", f7, 2);
    const std::vector<Elem> pt{Elem{1}, Elem{1}, Elem{3}};
    CHECK(cubic.eval(pt) == Elem{1});
    const std::vector<Elem> origin(3, Elem{0});
    CHECK(cubic.eval(origin) == Elem{0});
    const auto xy = parse_poly("x0*x1", f7, 1);
    CHECK(xy.eval(std::vector<Elem>{Elem{0}, Elem{0}}) == Elem{0});
    // 0^0 = 1: the constant term survives at the origin.
    CHECK(Poly::constant(f7, 2, Elem{4}).eval(std::vector<Elem>{Elem{0}, Elem{0}}) == Elem{4});
    CHECK(code_of([&] { cubic.eval(std::vector<Elem>{Elem{0}}); }) == ErrorCode::ArityMismatch);
}

TEST_CASE("partials") {
    const auto f7 = Field::prime(7);
    const auto d7 = parse_poly("x0^3+x1^3+x2^3", f7, 2).partials();
    REQUIRE(d7.size() == 3);
    CHECK(d7[0] == parse_poly("3*x0^2", f7, 2));
    CHECK(d7[1] == parse_poly("3*x1^2", f7, 2));
    CHECK(d7[2] == parse_poly("3*x2^2", f7, 2));

    const auto f3 = Field::prime(3);
    for (const auto& d : parse_poly("x0^3+x1^3+x2^3", f3, 2).partials()) CHECK(d.is_zero());

    const auto f5 = Field::prime(5);
    const auto d5 = parse_poly("x0^2*x1", f5, 2).partials();
    CHECK(d5[0] == parse_poly("2*x0*x1", f5, 2));
    CHECK(d5[1] == parse_poly("x0^2", f5, 2));
    CHECK(d5[2].is_zero());
}

TEST_CASE("fermat_poly") {
    const auto a = fermat_poly(2, 3, Field::prime(7));
    CHECK(a.poly == parse_poly("x0^3+x1^3+x2^3", Field::prime(7), 2));
    CHECK(a.smooth);
    const auto b = fermat_poly(3, 4, Field::prime(5));
    CHECK(b.poly.size() == 4);
    CHECK(b.poly.degree() == 4u);
    CHECK(b.smooth);
    const auto c = fermat_poly(2, 3, Field::prime(3));
    CHECK_FALSE(c.smooth);
    CHECK(is_diagonal(a.poly));
    CHECK(is_diagonal(parse_poly("2*x0^3 + x1^3 + 5*x2^3", Field::prime(7), 2)));
    CHECK_FALSE(is_diagonal(parse_poly("x0^3 + x1^3", Field::prime(7), 2)));
    CHECK_FALSE(is_diagonal(parse_poly("x0^3 + x1^3 + x2^3 + x0*x1*x2", Field::prime(7), 2)));
}

TEST_CASE("monomials_of_degree") {
    const auto ms = monomials_of_degree(3, 2);
    CHECK(ms.size() == 6);
    CHECK(ms.front() == mono({2, 0, 0}));
    CHECK(ms.back() == mono({0, 0, 2}));
    CHECK(monomials_of_degree(4, 4).size() == 35);
}

TEST_CASE("random_homogeneous") {
    const auto f5 = Field::prime(5);
    const auto a = random_homogeneous(2, 2, f5, 11);
    CHECK(a.degree() == 2u);
    CHECK(a.size() <= 6);
    CHECK(a == random_homogeneous(2, 2, f5, 11));

    // Over F_2 a linear form in x0, x1 is one of x0, x1, x0 + x1.
    const auto f2 = Field::prime(2);
    std::set<std::string> seen;
    for (std::uint64_t s = 0; s < 64; ++s) {
        const auto g = random_homogeneous(1, 1, f2, s);
        CHECK_FALSE(g.is_zero());
        seen.insert(g.to_string());
    }
    CHECK(seen == std::set<std::string>{"x0", "x1", "x0 + x1"});
}

TEST_CASE("print/parse round trip on seeded polynomials") {
    std::vector<Field> fields{Field::prime(2), Field::prime(7), Field::prime(101), Field::extension(3, 2, 1),
                              Field::extension(2, 4, 1)};
    std::uint64_t seed = 0;
    for (const auto& f : fields) {
        for (unsigned n = 1; n <= 3; ++n) {
            for (unsigned d = 1; d <= 4; ++d) {
                const auto g = random_homogeneous(n, d, f, ++seed);
                CHECK(parse_poly(g.to_string(), f, n) == g);
            }
        }
    }
}

TEST_CASE("evaluation is a ring homomorphism (exhaustive, q <= 5, n <= 2, d <= 3)") {
    std::uint64_t seed = 100;
    for (const auto& f : {Field::prime(2), Field::prime(3), Field::extension(2, 2, 1), Field::prime(5)}) {
        for (unsigned n = 1; n <= 2; ++n) {
            const auto pts = all_points(f, n + 1);
            for (unsigned d = 1; d <= 3; ++d) {
                const auto a = random_homogeneous(n, d, f, ++seed);
                const auto b = random_homogeneous(n, d, f, ++seed);
                const auto sum = a + b;
                const auto prod = a * b;
                for (const auto& v : pts) {
                    REQUIRE(sum.eval(v) == f.add(a.eval(v), b.eval(v)));
                    REQUIRE(prod.eval(v) == f.mul(a.eval(v), b.eval(v)));
                }
            }
        }
    }
}

TEST_CASE("degree is additive under multiplication") {
    std::uint64_t seed = 7;
    for (const auto& f : {Field::prime(3), Field::prime(11), Field::extension(2, 3, 2)}) {
        for (unsigned d1 = 1; d1 <= 3; ++d1) {
            for (unsigned d2 = 1; d2 <= 3; ++d2) {
                const auto prod = random_homogeneous(2, d1, f, ++seed) * random_homogeneous(2, d2, f, ++seed);
                if (!prod.is_zero()) CHECK(prod.degree() == d1 + d2);
            }
        }
    }
}

TEST_CASE("Euler identity sum x_i dF/dx_i = d F") {
    std::uint64_t seed = 3;
    for (const auto& f : {Field::prime(2), Field::prime(5), Field::prime(13), Field::extension(3, 2, 1)}) {
        for (unsigned n = 1; n <= 3; ++n) {
            for (unsigned d = 1; d <= 5; ++d) {
                const auto g = random_homogeneous(n, d, f, ++seed);
                const auto parts = g.partials();
                Poly lhs(f, n + 1);
                for (unsigned i = 0; i <= n; ++i) {
                    Monomial xi(n + 1, 0);
                    xi[i] = 1;
                    Poly x(f, n + 1);
                    x.add_term(xi, f.one());
                    lhs = lhs + x * parts[i];
                }
                CHECK(lhs == g.scaled(f.from_int(d)));
            }
        }
    }
}
