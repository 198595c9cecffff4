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

#include "unirule/detail/enumerate.hpp"

#include <algorithm>

namespace unirule::detail {

std::optional<std::uint64_t> checked_pow(std::uint64_t q, unsigned e, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (q != 0 && r > limit / q) return std::nullopt;
        r *= q;
    }
    if (r > limit) return std::nullopt;
    return r;
}

std::optional<std::uint64_t> projective_size(std::uint64_t q, unsigned n_vars, std::uint64_t limit) {
    // 1 + q + ... + q^{n_vars-1}
    std::uint64_t total = 0, term = 1;
    for (unsigned i = 0; i < n_vars; ++i) {
        if (total > limit - term) return std::nullopt;
        total += term;
        if (i + 1 < n_vars) {
            if (term > limit / q) {
                return std::nullopt;
            }
            term *= q;
        }
    }
    return total;
}

namespace {
constexpr std::uint64_t kMaxPowTable = std::uint64_t{1} << 22;
}

CompiledForms::CompiledForms(std::span<const Poly> forms, const Field& field, unsigned n_vars)
    : field_(field), n_vars_(n_vars) {
    std::uint32_t max_exp = 0;
    for (const auto& f : forms) {
        std::vector<Term> terms;
        for (const auto& [m, c] : f.terms()) {
            Term t{c, {}};
            for (std::uint32_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                t.factors.emplace_back(i, m[i]);
                max_exp = std::max(max_exp, m[i]);
            }
            terms.push_back(std::move(t));
        }
        forms_.push_back(std::move(terms));
    }
    if (std::uint64_t{field.q()} * (max_exp + 1) <= kMaxPowTable) {
        stride_ = max_exp + 1;
        pow_table_.resize(std::size_t{field.q()} * stride_);
        for (std::uint32_t x = 0; x < field.q(); ++x) {
            Elem acc = field.one();
            for (std::uint32_t e = 0; e < stride_; ++e) {
                pow_table_[std::size_t{x} * stride_ + e] = acc;
                acc = field.mul(acc, Elem{x});
            }
        }
    }
}

Elem CompiledForms::power(Elem x, std::uint32_t e) const noexcept {
    if (stride_ != 0) return pow_table_[std::size_t{x.rep} * stride_ + e];
    return field_.pow(x, e);
}

Elem CompiledForms::eval(std::size_t form, std::span<const Elem> point) const noexcept {
    Elem sum = field_.zero();
    for (const auto& t : forms_[form]) {
        Elem v = t.coeff;
        for (const auto& [var, e] : t.factors) {
            v = field_.mul(v, power(point[var], e));
            if (v.rep == 0) break;
        }
        sum = field_.add(sum, v);
    }
    return sum;
}

bool CompiledForms::all_vanish(std::span<const Elem> point) const noexcept {
    for (std::size_t i = 0; i < forms_.size(); ++i) {
        if (eval(i, point).rep != 0) return false;
    }
    return true;
}

AffineCursor::AffineCursor(std::uint32_t q, unsigned n_vars, std::uint64_t index) : q_(q), point_(n_vars) {
    for (unsigned i = n_vars; i-- > 0;) {
        point_[i] = Elem{static_cast<std::uint32_t>(index % q)};
        index /= q;
    }
}

void AffineCursor::advance() noexcept {
    for (std::size_t i = point_.size(); i-- > 0;) {
        if (++point_[i].rep < q_) return;
        point_[i].rep = 0;
    }
}

ProjectiveCursor::ProjectiveCursor(std::uint32_t q, unsigned n_vars, std::uint64_t index) : q_(q), point_(n_vars) {
    // Block for lead position i has q^{n_vars-1-i} members.
    for (unsigned lead = 0; lead < n_vars; ++lead) {
        std::uint64_t block = 1;
        for (unsigned j = lead + 1; j < n_vars; ++j) block *= q;
        if (index < block || lead + 1 == n_vars) {
            lead_ = lead;
            point_[lead] = Elem{1};
            for (unsigned i = n_vars; i-- > lead + 1;) {
                point_[i] = Elem{static_cast<std::uint32_t>(index % q)};
                index /= q;
            }
            return;
        }
        index -= block;
    }
}

void ProjectiveCursor::advance() noexcept {
    for (std::size_t i = point_.size(); i-- > lead_ + 1;) {
        if (++point_[i].rep < q_) return;
        point_[i].rep = 0;
    }
    // Tail wrapped: move the leading 1 one position right.
    point_[lead_] = Elem{0};
    if (lead_ + 1 < point_.size()) {
        ++lead_;
        point_[lead_] = Elem{1};
    }
}

}  // namespace unirule::detail
