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

#ifndef UNIRULE_POLY_HPP
#define UNIRULE_POLY_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unirule/field.hpp"

namespace unirule {

/// Exponent vector (e_0, ..., e_n), one entry per variable x_0 ... x_n.
using Monomial = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Monomial& m) noexcept;

/// Sparse multivariate polynomial over a finite field.
///
/// Terms are kept in a map keyed by exponent vector, so iteration is in
/// lexicographic order; zero coefficients are never stored.
class Poly {
public:
    Poly(Field field, unsigned n_vars);

    static Poly constant(Field field, unsigned n_vars, Elem c);

    const Field& field() const noexcept { return field_; }
    unsigned n_vars() const noexcept { return n_vars_; }
    const std::map<Monomial, Elem>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    bool is_homogeneous() const noexcept;
    /// Common total degree; empty for the zero polynomial or a non-homogeneous one.
    std::optional<std::uint32_t> degree() const noexcept;
    std::uint32_t max_total_degree() const noexcept;

    Elem coefficient(const Monomial& m) const;
    /// Adds c to the coefficient of m.
    void add_term(const Monomial& m, Elem c);

    Poly scaled(Elem c) const;
    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);

    /// Value at a point; 0^0 = 1.
    Elem eval(std::span<const Elem> point) const;

    /// Formal partial derivatives with respect to x_0, ..., x_n.
    std::vector<Poly> partials() const;

    /// Same polynomial with coefficients pushed through an embedding table.
    Poly mapped(const Field& to, std::span<const Elem> table) const;

    /// Canonical text form: terms in descending lexicographic order, parseable
    /// by parse_poly.
    std::string to_string() const;

    friend bool operator==(const Poly& a, const Poly& b) noexcept;

private:
    Field field_;
    unsigned n_vars_;
    std::map<Monomial, Elem> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& f);

/// Product a*b. Throws FieldMismatch / ArityMismatch.
Poly poly_mul(const Poly& a, const Poly& b);

/// Product a*b keeping only monomials whose exponents are all <= max_exponent.
Poly poly_mul_truncated(const Poly& a, const Poly& b, std::uint32_t max_exponent);

/// Parses a form in the variables x0..x{ambient_n}.
///
/// Grammar (whitespace between tokens ignored):
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := (coeff '*')? factor ('*' factor)* | coeff
///   factor := 'x' uint ('^' uint)?
///   coeff  := uint | '{' uint (',' uint)* '}'
/// Integer coefficients are reduced mod p; a brace vector gives the
/// coordinates of an extension-field element in the generator basis.
Poly parse_poly(std::string_view text, const Field& field, unsigned ambient_n);

/// One polynomial per line; '#' comments and blank lines skipped.
std::vector<Poly> parse_poly_lines(std::istream& in, const Field& field, unsigned ambient_n);

struct FermatForm {
    Poly poly;
    /// False when p | d, in which case the hypersurface is singular.
    bool smooth;
};

/// x_0^d + ... + x_n^d.
FermatForm fermat_poly(unsigned ambient_n, unsigned d, const Field& field);

/// True when f is a sum of nonzero multiples of x_i^d over every variable
/// and nothing else.
bool is_diagonal(const Poly& f) noexcept;

/// All exponent vectors of total degree d in n_vars variables, descending lex.
std::vector<Monomial> monomials_of_degree(unsigned n_vars, unsigned d);

/// Uniformly random form of degree d in x0..x{ambient_n}; never zero.
Poly random_homogeneous(unsigned ambient_n, unsigned d, const Field& field, std::uint64_t seed);

}  // namespace unirule

#endif
