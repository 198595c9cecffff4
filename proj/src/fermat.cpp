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

#include "unirule/fermat.hpp"

#include "unirule/certify.hpp"
#include "unirule/error.hpp"
#include "unirule/field.hpp"
#include "unirule/poly.hpp"

namespace unirule {

std::string_view to_string(Unirationality u) noexcept {
    switch (u) {
        case Unirationality::Yes: return "yes";
        case Unirationality::No: return "no";
        case Unirationality::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) a = std::exchange(b, a % b);
    return a;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t totient(std::uint64_t m) {
    std::uint64_t phi = m;
    for (auto r : distinct_prime_factors(m)) phi = phi / r * (r - 1);
    return phi;
}

void check_args(std::uint64_t p, std::uint64_t d, std::uint64_t n) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (d == 0) throw Error(ErrorCode::Usage, "degree must be positive");
    if (n == 0) throw Error(ErrorCode::Usage, "ambient dimension must be positive");
}

}  // namespace

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
    if (m == 1) return 1;
    if (m == 0 || gcd(a % m, m) != 1) throw Error(ErrorCode::Usage, "order undefined: gcd(a, m) != 1");
    std::uint64_t order = totient(m);
    for (auto r : distinct_prime_factors(order)) {
        while (order % r == 0 && powmod(a, order / r, m) == 1) order /= r;
    }
    return order;
}

FermatReport shioda_katsura(std::uint64_t p, std::uint64_t d, std::uint64_t n) {
    check_args(p, d, n);
    FermatReport r;
    r.p = p;
    r.d = d;
    r.n = n;
    r.p_coprime_d = d % p != 0;
    if (!r.p_coprime_d) return r;
    r.sk_applicable = n % 2 == 1 && n >= 3 && d >= 4;

    // p^nu = -1 (mod d) can only happen for nu up to the order of p.
    const std::uint64_t e = multiplicative_order(p, d);
    const std::uint64_t minus_one = (d - 1) % d;
    std::uint64_t x = 1 % d;
    for (std::uint64_t nu = 1; nu <= e; ++nu) {
        x = mulmod(x, p % d, d);
        if (x == minus_one) {
            r.sk_nu = nu;
            break;
        }
    }
    if (r.sk_applicable) {
        if (r.sk_nu) {
            r.unirational = Unirationality::Yes;
        } else if (n == 3) {
            r.unirational = Unirationality::No;
        }
    }
    return r;
}

FermatReport fermat_nonuniruled(std::uint64_t p, std::uint64_t d, std::uint64_t n, const FermatVerifyOptions& opts) {
    check_args(p, d, n);
    FermatReport r;
    r.p = p;
    r.d = d;
    r.n = n;
    r.p_coprime_d = d % p != 0;
    r.paper_nonuniruled = d == n + 1 && p % d == 1 % d && r.p_coprime_d;
    if (r.paper_nonuniruled && opts.verify) {
        const Field field = Field::prime(p);
        auto spec = make_ci_spec(static_cast<unsigned>(n),
                                 {fermat_poly(static_cast<unsigned>(n), static_cast<unsigned>(d), field).poly});
        CertifyOptions copts;
        copts.count = opts.count;
        copts.verify = true;
        const auto cert = hasse_certify(spec, copts);
        r.verified_coefficient = cert.hasse->value();
        if (!cert.hasse->nonzero()) {
            throw Error(ErrorCode::CrossCheckMismatch, "Fermat coefficient vanished for p=" + std::to_string(p) +
                                                           ", d=" + std::to_string(d));
        }
    }
    return r;
}

FermatReport fermat_report(std::uint64_t p, std::uint64_t d, std::uint64_t n, const FermatVerifyOptions& opts) {
    FermatReport r = shioda_katsura(p, d, n);
    const FermatReport nu = fermat_nonuniruled(p, d, n, opts);
    r.paper_nonuniruled = nu.paper_nonuniruled;
    r.verified_coefficient = nu.verified_coefficient;
    return r;
}

std::vector<FermatReport> fermat_scan(Range p_range, Range d_range, Range n_range, const FermatVerifyOptions& opts) {
    std::vector<FermatReport> rows;
    for (std::uint64_t p = p_range.lo; p <= p_range.hi && p_range.lo <= p_range.hi; ++p) {
        if (!is_prime(p)) continue;
        for (std::uint64_t d = d_range.lo; d <= d_range.hi && d_range.lo <= d_range.hi; ++d) {
            for (std::uint64_t n = n_range.lo; n <= n_range.hi && n_range.lo <= n_range.hi; ++n) {
                rows.push_back(fermat_report(p, d, n, opts));
            }
        }
    }
    return rows;
}

std::string fermat_csv_header() {
    return "p,d,n,coprime,sk_applicable,sk_nu,unirational,paper_nonuniruled,verified_coefficient";
}

std::string to_csv(const FermatReport& r) {
    auto b = [](bool v) { return v ? std::string("true") : std::string("false"); };
    std::string s = std::to_string(r.p) + ',' + std::to_string(r.d) + ',' + std::to_string(r.n) + ',' +
                    b(r.p_coprime_d) + ',' + b(r.sk_applicable) + ',';
    if (r.sk_nu) s += std::to_string(*r.sk_nu);
    s += ',' + std::string(to_string(r.unirational)) + ',' + b(r.paper_nonuniruled) + ',';
    if (r.verified_coefficient) s += std::to_string(*r.verified_coefficient);
    return s;
}

}  // namespace unirule
