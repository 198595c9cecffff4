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

#include "unirule/field.hpp"

#include <algorithm>
#include <charconv>
#include <random>

#include "unirule/error.hpp"

namespace unirule {

namespace {

using UPoly = std::vector<std::uint32_t>;  // over F_p, lowest degree first

void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        const std::int64_t quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

// a mod m, m monic or with invertible leading coefficient.
UPoly poly_mod(UPoly a, const UPoly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lead_inv = inv_mod_p(m.back(), p);
    while (a.size() >= m.size()) {
        const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = static_cast<std::uint32_t>(
                (a[shift + i] + std::uint64_t{p} - c * m[i] % p) % p);
        }
        trim(a);
    }
    return a;
}

UPoly poly_mulmod(const UPoly& a, const UPoly& b, const UPoly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
        }
    }
    return poly_mod(std::move(r), m, p);
}

UPoly poly_powmod(UPoly base, std::uint64_t e, const UPoly& m, std::uint32_t p) {
    UPoly result{1};
    base = poly_mod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) result = poly_mulmod(result, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return result;
}

UPoly poly_gcd(UPoly a, UPoly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(static_cast<std::uint32_t>(f));
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
    return out;
}

}  // namespace

struct Field::Impl {
    std::uint32_t p = 2;
    unsigned k = 1;
    std::uint32_t q = 2;
    std::uint64_t seed = 0;
    UPoly modulus;
    std::vector<std::uint32_t> powers_of_p;  // p^0 .. p^(k-1)
    std::vector<std::uint32_t> log;          // indexed by rep, log[0] unused
    std::vector<std::uint32_t> exp;          // length q-1

    std::vector<std::uint32_t> decode(std::uint32_t rep) const {
        std::vector<std::uint32_t> c(k);
        for (unsigned i = 0; i < k; ++i) {
            c[i] = rep % p;
            rep /= p;
        }
        return c;
    }

    std::uint32_t encode(const std::vector<std::uint32_t>& c) const {
        std::uint32_t rep = 0;
        for (unsigned i = 0; i < k && i < c.size(); ++i) rep += c[i] * powers_of_p[i];
        return rep;
    }

    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
        if (k == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
        if (a == 0 || b == 0) return 0;
        return encode(poly_mulmod(decode(a), decode(b), modulus, p));
    }

    std::uint32_t pow_slow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e > 0) {
            if (e & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return r;
    }

    void build_log_tables() {
        const std::uint32_t order = q - 1;
        const auto factors = prime_factors(order);
        std::uint32_t g = 0;
        for (std::uint32_t cand = 2; cand < q; ++cand) {
            bool primitive = true;
            for (auto r : factors) {
                if (pow_slow(cand, order / r) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                g = cand;
                break;
            }
        }
        exp.resize(order);
        log.assign(q, 0);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < order; ++i) {
            exp[i] = x;
            log[x] = i;
            x = mul_slow(x, g);
        }
    }
};

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
    UPoly f(monic.begin(), monic.end());
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t k = f.size() - 1;
    if (k == 1) return true;
    // No irreducible factor of degree m <= k/2 divides f iff
    // gcd(f, x^{p^m} - x) = 1 for every such m.
    UPoly h{0, 1};
    for (std::size_t m = 1; m <= k / 2; ++m) {
        h = poly_powmod(h, p, f, p);
        UPoly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;
        if (poly_gcd(f, diff, p).size() > 1) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p, const FieldOptions& opts) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (p > opts.ceiling || p > (std::uint64_t{1} << 31)) {
        throw Error(ErrorCode::CeilingExceeded,
                    "q = " + std::to_string(p) + " exceeds ceiling " + std::to_string(opts.ceiling));
    }
    auto impl = std::make_shared<Impl>();
    impl->p = static_cast<std::uint32_t>(p);
    impl->q = impl->p;
    impl->powers_of_p = {1};
    return Field(std::move(impl));
}

Field Field::extension(std::uint64_t p, unsigned k, std::uint64_t seed, const FieldOptions& opts) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (k == 0) throw Error(ErrorCode::Usage, "extension degree must be positive");
    if (k == 1) return prime(p, opts);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > opts.ceiling || q > (std::uint64_t{1} << 31)) {
            throw Error(ErrorCode::CeilingExceeded,
                        std::to_string(p) + "^" + std::to_string(k) + " exceeds ceiling " +
                            std::to_string(opts.ceiling));
        }
    }
    auto impl = std::make_shared<Impl>();
    impl->p = static_cast<std::uint32_t>(p);
    impl->k = k;
    impl->q = static_cast<std::uint32_t>(q);
    impl->seed = seed;
    impl->powers_of_p.resize(k);
    impl->powers_of_p[0] = 1;
    for (unsigned i = 1; i < k; ++i) impl->powers_of_p[i] = impl->powers_of_p[i - 1] * impl->p;

    std::mt19937_64 rng(seed);
    UPoly f(k + 1, 0);
    f[k] = 1;
    do {
        for (unsigned i = 0; i < k; ++i) f[i] = static_cast<std::uint32_t>(rng() % p);
    } while (f[0] == 0 || !is_irreducible(f, impl->p));
    impl->modulus = f;

    if (opts.log_tables && q <= (std::uint64_t{1} << 16)) impl->build_log_tables();
    return Field(std::move(impl));
}

Field Field::parse(std::string_view designation, std::uint64_t seed, const FieldOptions& opts) {
    auto parse_uint = [&](std::string_view s) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
            throw Error(ErrorCode::Usage, "bad field designation '" + std::string(designation) + "'");
        }
        return v;
    };
    const auto caret = designation.find('^');
    if (caret == std::string_view::npos) return prime(parse_uint(designation), opts);
    const auto p = parse_uint(designation.substr(0, caret));
    const auto k = parse_uint(designation.substr(caret + 1));
    if (k == 0 || k > 64) throw Error(ErrorCode::Usage, "bad extension degree in '" + std::string(designation) + "'");
    return extension(p, static_cast<unsigned>(k), seed, opts);
}

std::uint32_t Field::p() const noexcept { return impl_->p; }
unsigned Field::k() const noexcept { return impl_->k; }
std::uint32_t Field::q() const noexcept { return impl_->q; }
std::uint64_t Field::seed() const noexcept { return impl_->seed; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return impl_->modulus; }
bool Field::has_log_tables() const noexcept { return !impl_->exp.empty(); }

Elem Field::from_int(std::int64_t v) const noexcept {
    const std::int64_t p = impl_->p;
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > impl_->k) {
        // Reduce modulo the field polynomial.
        if (impl_->k == 1) {
            throw Error(ErrorCode::FieldMismatch, "coefficient vector given for a prime field");
        }
        UPoly c(coeffs.begin(), coeffs.end());
        for (auto& x : c) x %= impl_->p;
        return Elem{impl_->encode(poly_mod(std::move(c), impl_->modulus, impl_->p))};
    }
    std::vector<std::uint32_t> c(coeffs.begin(), coeffs.end());
    for (auto& x : c) x %= impl_->p;
    return Elem{impl_->encode(c)};
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const { return impl_->decode(a.rep); }

Elem Field::add(Elem a, Elem b) const noexcept {
    const auto& f = *impl_;
    if (f.k == 1) {
        std::uint32_t s = a.rep + b.rep;
        return Elem{s >= f.p ? s - f.p : s};
    }
    if (f.p == 2) return Elem{a.rep ^ b.rep};
    std::uint32_t x = a.rep, y = b.rep, r = 0;
    for (unsigned i = 0; i < f.k; ++i) {
        std::uint32_t d = x % f.p + y % f.p;
        if (d >= f.p) d -= f.p;
        r += d * f.powers_of_p[i];
        x /= f.p;
        y /= f.p;
    }
    return Elem{r};
}

Elem Field::neg(Elem a) const noexcept {
    const auto& f = *impl_;
    if (f.k == 1) return Elem{a.rep == 0 ? 0 : f.p - a.rep};
    if (f.p == 2) return a;
    std::uint32_t x = a.rep, r = 0;
    for (unsigned i = 0; i < f.k; ++i) {
        const std::uint32_t d = x % f.p;
        r += (d == 0 ? 0 : f.p - d) * f.powers_of_p[i];
        x /= f.p;
    }
    return Elem{r};
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const noexcept {
    const auto& f = *impl_;
    if (f.k == 1) return Elem{static_cast<std::uint32_t>(std::uint64_t{a.rep} * b.rep % f.p)};
    if (a.rep == 0 || b.rep == 0) return Elem{0};
    if (!f.exp.empty()) {
        const std::uint32_t order = f.q - 1;
        std::uint32_t idx = f.log[a.rep] + f.log[b.rep];
        if (idx >= order) idx -= order;
        return Elem{f.exp[idx]};
    }
    return Elem{f.mul_slow(a.rep, b.rep)};
}

Elem Field::mul_schoolbook(Elem a, Elem b) const noexcept { return Elem{impl_->mul_slow(a.rep, b.rep)}; }

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    Elem r = one();
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::inv(Elem a) const {
    if (a.rep == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const auto& f = *impl_;
    if (f.k == 1) return Elem{inv_mod_p(a.rep, f.p)};
    if (!f.exp.empty()) {
        const std::uint32_t l = f.log[a.rep];
        return Elem{f.exp[l == 0 ? 0 : f.q - 1 - l]};
    }
    return pow(a, f.q - 2);
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(impl_->q);
    for (std::uint32_t i = 0; i < impl_->q; ++i) out[i] = Elem{i};
    return out;
}

std::string Field::format(Elem a) const {
    if (impl_->k == 1) return std::to_string(a.rep);
    std::string s = "{";
    const auto c = coeffs(a);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    return s + "}";
}

std::string Field::designation() const {
    if (impl_->k == 1) return std::to_string(impl_->p);
    return std::to_string(impl_->p) + "^" + std::to_string(impl_->k);
}

bool operator==(const Field& a, const Field& b) noexcept {
    if (a.impl_ == b.impl_) return true;
    return a.impl_->p == b.impl_->p && a.impl_->k == b.impl_->k && a.impl_->modulus == b.impl_->modulus;
}

std::vector<Elem> embedding(const Field& from, const Field& to) {
    if (from.p() != to.p() || to.k() % from.k() != 0) {
        throw Error(ErrorCode::FieldMismatch,
                    "cannot embed F_" + from.designation() + " into F_" + to.designation());
    }
    std::vector<Elem> table(from.q());
    if (from.k() == 1) {
        for (std::uint32_t i = 0; i < from.q(); ++i) table[i] = Elem{i};
        return table;
    }
    // Find a root of the source modulus in the target field; the generator
    // t of the source field maps to it.
    const auto& m = from.modulus();
    Elem root{0};
    bool found = false;
    for (std::uint32_t i = 1; i < to.q() && !found; ++i) {
        Elem x{i}, acc{0};
        for (std::size_t j = m.size(); j-- > 0;) acc = to.add(to.mul(acc, x), to.from_int(m[j]));
        if (acc.rep == 0) {
            root = x;
            found = true;
        }
    }
    if (!found) throw Error(ErrorCode::FieldMismatch, "no root of source modulus in target field");
    std::vector<Elem> root_powers(from.k());
    root_powers[0] = to.one();
    for (unsigned i = 1; i < from.k(); ++i) root_powers[i] = to.mul(root_powers[i - 1], root);
    for (std::uint32_t i = 0; i < from.q(); ++i) {
        const auto c = from.coeffs(Elem{i});
        Elem acc{0};
        for (unsigned j = 0; j < from.k(); ++j) acc = to.add(acc, to.mul(to.from_int(c[j]), root_powers[j]));
        table[i] = acc;
    }
    return table;
}

}  // namespace unirule
