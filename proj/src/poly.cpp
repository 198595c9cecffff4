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

#include "unirule/poly.hpp"

#include <cctype>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>

#include "unirule/error.hpp"

namespace unirule {

std::uint32_t total_degree(const Monomial& m) noexcept {
    return std::accumulate(m.begin(), m.end(), std::uint32_t{0});
}

Poly::Poly(Field field, unsigned n_vars) : field_(std::move(field)), n_vars_(n_vars) {}

Poly Poly::constant(Field field, unsigned n_vars, Elem c) {
    Poly f(std::move(field), n_vars);
    f.add_term(Monomial(n_vars, 0), c);
    return f;
}

bool Poly::is_homogeneous() const noexcept {
    if (terms_.empty()) return true;
    const auto d = total_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_) {
        if (total_degree(m) != d) return false;
    }
    return true;
}

std::optional<std::uint32_t> Poly::degree() const noexcept {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return total_degree(terms_.begin()->first);
}

std::uint32_t Poly::max_total_degree() const noexcept {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

Elem Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
}

void Poly::add_term(const Monomial& m, Elem c) {
    if (m.size() != n_vars_) throw Error(ErrorCode::ArityMismatch, "monomial length mismatch");
    if (c.rep == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = field_.add(it->second, c);
        if (it->second.rep == 0) terms_.erase(it);
    }
}

Poly Poly::scaled(Elem c) const {
    Poly r(field_, n_vars_);
    if (c.rep == 0) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, field_.mul(a, c));
    return r;
}

Poly Poly::operator-() const { return scaled(field_.neg(field_.one())); }

namespace {

void check_compatible(const Poly& a, const Poly& b) {
    if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "operands over different fields");
    if (a.n_vars() != b.n_vars()) throw Error(ErrorCode::ArityMismatch, "operands in different variable counts");
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
    check_compatible(a, b);
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) { return poly_mul(a, b); }

Poly poly_mul(const Poly& a, const Poly& b) {
    check_compatible(a, b);
    const auto& f = a.field();
    Poly r(f, a.n_vars());
    Monomial m(a.n_vars());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            for (unsigned i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, f.mul(ca, cb));
        }
    }
    return r;
}

Poly poly_mul_truncated(const Poly& a, const Poly& b, std::uint32_t max_exponent) {
    check_compatible(a, b);
    const auto& f = a.field();
    Poly r(f, a.n_vars());
    Monomial m(a.n_vars());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            bool keep = true;
            for (unsigned i = 0; i < m.size(); ++i) {
                m[i] = ma[i] + mb[i];
                if (m[i] > max_exponent) {
                    keep = false;
                    break;
                }
            }
            if (keep) r.add_term(m, f.mul(ca, cb));
        }
    }
    return r;
}

Elem Poly::eval(std::span<const Elem> point) const {
    if (point.size() != n_vars_) {
        throw Error(ErrorCode::ArityMismatch, "point has " + std::to_string(point.size()) +
                                                  " coordinates, expected " + std::to_string(n_vars_));
    }
    Elem sum = field_.zero();
    for (const auto& [m, c] : terms_) {
        Elem t = c;
        for (unsigned i = 0; i < n_vars_ && t.rep != 0; ++i) {
            if (m[i] != 0) t = field_.mul(t, field_.pow(point[i], m[i]));
        }
        sum = field_.add(sum, t);
    }
    return sum;
}

std::vector<Poly> Poly::partials() const {
    std::vector<Poly> out(n_vars_, Poly(field_, n_vars_));
    for (const auto& [m, c] : terms_) {
        for (unsigned i = 0; i < n_vars_; ++i) {
            if (m[i] == 0) continue;
            Monomial dm = m;
            --dm[i];
            out[i].add_term(dm, field_.mul(c, field_.from_int(m[i])));
        }
    }
    return out;
}

Poly Poly::mapped(const Field& to, std::span<const Elem> table) const {
    Poly r(to, n_vars_);
    for (const auto& [m, c] : terms_) r.add_term(m, table[c.rep]);
    return r;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) s += " + ";
        first = false;
        const bool constant = total_degree(m) == 0;
        if (constant || c != field_.one()) {
            s += field_.format(c);
            if (!constant) s += '*';
        }
        bool first_factor = true;
        for (unsigned i = 0; i < n_vars_; ++i) {
            if (m[i] == 0) continue;
            if (!first_factor) s += '*';
            first_factor = false;
            s += 'x' + std::to_string(i);
            if (m[i] > 1) s += '^' + std::to_string(m[i]);
        }
    }
    return s;
}

bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.n_vars_ == b.n_vars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << f.to_string(); }

namespace {

constexpr std::uint64_t kMaxExponent = 1'000'000;

class Parser {
public:
    Parser(std::string_view text, const Field& field, unsigned ambient_n)
        : text_(text), field_(field), n_vars_(ambient_n + 1) {}

    Poly parse() {
        Poly result(field_, n_vars_);
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        accumulate(result, negate);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            accumulate(result, c == '-');
        }
        if (result.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "'" + std::string(text_) + "' is zero over F_" + field_.designation());
        if (!result.is_homogeneous()) {
            throw Error(ErrorCode::NotHomogeneous, "terms of different total degree in '" + std::string(text_) + "'");
        }
        return result;
    }

private:
    void accumulate(Poly& result, bool negate) {
        skip_ws();
        Elem coeff = field_.one();
        Monomial m(n_vars_, 0);
        if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '{') {
            coeff = parse_coeff();
            skip_ws();
            if (peek() != '*') {
                result.add_term(m, negate ? field_.neg(coeff) : coeff);
                return;
            }
            ++pos_;
            skip_ws();
        }
        for (;;) {
            parse_factor(m);
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            skip_ws();
        }
        result.add_term(m, negate ? field_.neg(coeff) : coeff);
    }

    void parse_factor(Monomial& m) {
        if (peek() != 'x') fail("expected variable 'x<index>'");
        ++pos_;
        const std::size_t var_pos = pos_;
        const auto index = parse_uint_exact();
        if (index >= n_vars_) {
            throw Error(ErrorCode::UnknownVariable,
                        "x" + std::to_string(index) + " at position " + std::to_string(var_pos) +
                            " (variables are x0..x" + std::to_string(n_vars_ - 1) + ")");
        }
        std::uint64_t e = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            e = parse_uint_exact();
        }
        const std::uint64_t total = m[index] + e;
        if (total > kMaxExponent) fail("exponent too large");
        m[index] = static_cast<std::uint32_t>(total);
    }

    Elem parse_coeff() {
        if (peek() != '{') return parse_uint_mod_p();
        ++pos_;
        std::vector<std::uint32_t> c;
        for (;;) {
            skip_ws();
            c.push_back(parse_uint_mod_p().rep);
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            if (peek() == '}') {
                ++pos_;
                break;
            }
            fail("expected ',' or '}'");
        }
        if (field_.k() == 1) fail("coefficient vector over a prime field");
        return field_.from_coeffs(c);
    }

    Elem parse_uint_mod_p() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected unsigned integer");
        std::uint64_t r = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            r = (r * 10 + static_cast<std::uint64_t>(peek() - '0')) % field_.p();
            ++pos_;
        }
        return field_.from_int(static_cast<std::int64_t>(r));
    }

    std::uint64_t parse_uint_exact() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected unsigned integer");
        std::uint64_t r = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            r = r * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (r > kMaxExponent) fail("integer too large");
            ++pos_;
        }
        return r;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorCode::SyntaxError, msg + " at position " + std::to_string(pos_) + " in '" +
                                                std::string(text_) + "'");
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    std::string_view text_;
    const Field& field_;
    unsigned n_vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const Field& field, unsigned ambient_n) {
    return Parser(text, field, ambient_n).parse();
}

std::vector<Poly> parse_poly_lines(std::istream& in, const Field& field, unsigned ambient_n) {
    std::vector<Poly> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back(parse_poly(line, field, ambient_n));
    }
    return out;
}

FermatForm fermat_poly(unsigned ambient_n, unsigned d, const Field& field) {
    const unsigned n_vars = ambient_n + 1;
    Poly f(field, n_vars);
    for (unsigned i = 0; i < n_vars; ++i) {
        Monomial m(n_vars, 0);
        m[i] = d;
        f.add_term(m, field.one());
    }
    return FermatForm{std::move(f), d % field.p() != 0};
}

bool is_diagonal(const Poly& f) noexcept {
    if (f.size() != f.n_vars() || !f.degree()) return false;
    const auto d = *f.degree();
    if (d == 0) return false;
    std::vector<bool> seen(f.n_vars(), false);
    for (const auto& [m, c] : f.terms()) {
        unsigned nonzero = 0, which = 0;
        for (unsigned i = 0; i < m.size(); ++i) {
            if (m[i] != 0) {
                ++nonzero;
                which = i;
            }
        }
        if (nonzero != 1 || m[which] != d || seen[which]) return false;
        seen[which] = true;
    }
    return true;
}

std::vector<Monomial> monomials_of_degree(unsigned n_vars, unsigned d) {
    std::vector<Monomial> out;
    if (n_vars == 0) return out;
    Monomial m(n_vars, 0);
    // Recursive fill: first variable takes the largest exponent first.
    auto rec = [&](auto&& self, unsigned i, unsigned remaining) -> void {
        if (i + 1 == n_vars) {
            m[i] = remaining;
            out.push_back(m);
            return;
        }
        for (unsigned e = remaining + 1; e-- > 0;) {
            m[i] = e;
            self(self, i + 1, remaining - e);
        }
    };
    rec(rec, 0, d);
    return out;
}

Poly random_homogeneous(unsigned ambient_n, unsigned d, const Field& field, std::uint64_t seed) {
    const unsigned n_vars = ambient_n + 1;
    const auto monomials = monomials_of_degree(n_vars, d);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> draw(0, field.q() - 1);
    for (;;) {
        Poly f(field, n_vars);
        for (const auto& m : monomials) f.add_term(m, Elem{draw(rng)});
        if (!f.is_zero()) return f;
    }
}

}  // namespace unirule
