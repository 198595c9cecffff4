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

#ifndef UNIRULE_FIELD_HPP
#define UNIRULE_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unirule {

/// An element of a finite field F_q, q = p^k.
///
/// The representation is canonical: for k = 1 it is the residue in [0, p),
/// for k > 1 it is the coefficient vector (c_0, ..., c_{k-1}) of the element
/// as a polynomial in the generator t, packed as sum c_i p^i. Equality of
/// elements is equality of this packed value.
struct Elem {
    std::uint32_t rep = 0;

    friend constexpr auto operator<=>(Elem, Elem) = default;
};

struct FieldOptions {
    /// Largest q accepted at construction.
    std::uint64_t ceiling = std::uint64_t{1} << 20;
    /// Build discrete-log tables for extension fields with q <= 2^16.
    bool log_tables = true;
};

/// A concrete finite field F_{p^k}. Immutable; copies share precomputed tables.
class Field {
public:
    static Field prime(std::uint64_t p, const FieldOptions& opts = {});

    /// F_{p^k} with a modulus chosen by seeded random search and verified
    /// irreducible. k == 1 yields the prime field.
    static Field extension(std::uint64_t p, unsigned k, std::uint64_t seed = 0,
                           const FieldOptions& opts = {});

    /// Parses a designation "P" or "P^K".
    static Field parse(std::string_view designation, std::uint64_t seed = 0,
                       const FieldOptions& opts = {});

    std::uint32_t p() const noexcept;
    unsigned k() const noexcept;
    std::uint32_t q() const noexcept;
    std::uint64_t seed() const noexcept;
    /// Monic modulus, lowest degree first (length k+1). Empty when k == 1.
    const std::vector<std::uint32_t>& modulus() const noexcept;
    bool has_log_tables() const noexcept;

    Elem zero() const noexcept { return Elem{0}; }
    Elem one() const noexcept { return Elem{1}; }

    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t v) const noexcept;
    Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs(Elem a) const;
    bool in_prime_field(Elem a) const noexcept { return a.rep < p(); }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    /// Multiplication by coefficient-vector convolution, bypassing log tables.
    Elem mul_schoolbook(Elem a, Elem b) const noexcept;
    Elem inv(Elem a) const;
    /// Square-and-multiply; 0^0 = 1.
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    /// The element with enumeration index i, for 0 <= i < q.
    Elem element(std::uint32_t index) const noexcept { return Elem{index}; }
    /// All q elements in enumeration order, zero first.
    std::vector<Elem> elements() const;

    /// "3" for prime fields, "{c0,c1,...}" otherwise.
    std::string format(Elem a) const;
    /// "7" or "2^4".
    std::string designation() const;

    friend bool operator==(const Field& a, const Field& b) noexcept;

private:
    struct Impl;
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Verifies irreducibility of a monic polynomial over F_p (lowest degree first).
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);

/// Embedding F_{p^a} -> F_{p^b} (a | b) as a lookup table indexed by the
/// source representation. Both fields must share the characteristic.
std::vector<Elem> embedding(const Field& from, const Field& to);

}  // namespace unirule

#endif
