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

#include "unirule/hasse.hpp"

#include "unirule/detail/enumerate.hpp"
#include "unirule/detail/parallel.hpp"
#include "unirule/error.hpp"

namespace unirule {

std::string_view to_string(HasseMethod m) noexcept {
    switch (m) {
        case HasseMethod::PrunedExpansion: return "pruned-expansion";
        case HasseMethod::CharacterSum: return "character-sum";
        case HasseMethod::Both: return "both";
    }
    return "unknown";
}

namespace {

void check_form(const Poly& form) {
    if (form.field().k() != 1) {
        throw Error(ErrorCode::ExtensionFieldUnsupported,
                    "the coefficient criterion is evaluated over prime fields only (got F_" +
                        form.field().designation() + ")");
    }
    const auto d = form.degree();
    if (!d || *d != form.n_vars()) {
        throw Error(ErrorCode::DegreeMismatch,
                    "need a nonzero homogeneous form of degree " + std::to_string(form.n_vars()) + " in " +
                        std::to_string(form.n_vars()) + " variables, got degree " +
                        (d ? std::to_string(*d) : std::string("(inhomogeneous or zero)")));
    }
}

}  // namespace

HasseResult hasse_coefficient_expansion(const Poly& form) {
    check_form(form);
    const auto& field = form.field();
    const std::uint32_t cap = field.p() - 1;
    Poly power = Poly::constant(field, form.n_vars(), field.one());
    for (std::uint32_t step = 0; step < cap; ++step) {
        power = poly_mul_truncated(power, form, cap);
        if (power.is_zero()) break;
    }
    const Monomial target(form.n_vars(), cap);
    return HasseResult{power.coefficient(target), HasseMethod::PrunedExpansion, std::nullopt};
}

HasseResult hasse_coefficient_charsum(const Poly& form, unsigned workers) {
    check_form(form);
    const auto& field = form.field();
    const std::uint32_t p = field.p();
    const unsigned n_vars = form.n_vars();
    const auto total = detail::checked_pow(p, n_vars, UINT64_MAX / 2);
    if (!total) throw Error(ErrorCode::BudgetExceeded, "p^(n+1) overflows");

    const detail::CompiledForms compiled({&form, 1}, field, n_vars);
    const std::uint64_t zeros = detail::parallel_sum(*total, workers, [&](std::uint64_t begin, std::uint64_t end) {
        detail::AffineCursor cur(p, n_vars, begin);
        std::uint64_t local = 0;
        for (std::uint64_t i = begin; i < end; ++i, cur.advance()) {
            if (compiled.eval(0, cur.point()).rep == 0) ++local;
        }
        return local;
    });
    // n = n_vars - 1; (-1)^n flips sign when n is odd.
    Elem c = field.from_int(static_cast<std::int64_t>(zeros % p));
    if ((n_vars - 1) % 2 == 1) c = field.neg(c);
    return HasseResult{c, HasseMethod::CharacterSum, std::nullopt};
}

HasseResult hasse_coefficient(const Poly& form, HasseMode mode, const HasseOptions& opts) {
    switch (mode) {
        case HasseMode::Expansion: return hasse_coefficient_expansion(form);
        case HasseMode::CharSum: return hasse_coefficient_charsum(form, opts.workers);
        case HasseMode::Auto: {
            check_form(form);
            const auto points = detail::checked_pow(form.field().p(), form.n_vars(), opts.auto_threshold);
            return points ? hasse_coefficient_charsum(form, opts.workers) : hasse_coefficient_expansion(form);
        }
        case HasseMode::Both: {
            const auto a = hasse_coefficient_expansion(form);
            const auto b = hasse_coefficient_charsum(form, opts.workers);
            if (a.coefficient != b.coefficient) {
                throw Error(ErrorCode::Disagreement, "expansion gives " + std::to_string(a.value()) +
                                                         ", character sum gives " + std::to_string(b.value()) +
                                                         " for " + form.to_string());
            }
            return HasseResult{a.coefficient, HasseMethod::Both, true};
        }
    }
    throw Error(ErrorCode::Usage, "unknown hasse mode");
}

}  // namespace unirule
