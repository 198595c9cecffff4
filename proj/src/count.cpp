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

#include "unirule/count.hpp"

#include "unirule/detail/enumerate.hpp"
#include "unirule/detail/parallel.hpp"
#include "unirule/error.hpp"

namespace unirule {

std::string_view to_string(SmoothnessKind k) noexcept {
    switch (k) {
        case SmoothnessKind::FermatExact: return "fermat-exact";
        case SmoothnessKind::ProbedNoSingularPoint: return "probed-no-singular-point";
        case SmoothnessKind::SingularPointFound: return "singular-point-found";
        case SmoothnessKind::Asserted: return "asserted";
    }
    return "unknown";
}

namespace {

void check_forms(std::span<const Poly> forms, const Field& field, unsigned n_vars) {
    for (const auto& f : forms) {
        if (!(f.field() == field)) throw Error(ErrorCode::FieldMismatch, "form over F_" + f.field().designation());
        if (f.n_vars() != n_vars) throw Error(ErrorCode::ArityMismatch, "form in " + std::to_string(f.n_vars()) + " variables");
        if (!f.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, f.to_string());
    }
}

std::uint64_t projective_zeros(const detail::CompiledForms& compiled, std::uint32_t q, unsigned n_vars,
                               std::uint64_t total, unsigned workers) {
    return detail::parallel_sum(total, workers, [&](std::uint64_t begin, std::uint64_t end) {
        detail::ProjectiveCursor cur(q, n_vars, begin);
        std::uint64_t local = 0;
        for (std::uint64_t i = begin; i < end; ++i, cur.advance()) {
            if (compiled.all_vanish(cur.point())) ++local;
        }
        return local;
    });
}

Field extension_of(const Field& field, unsigned m) {
    if (m == 1) return field;
    return Field::extension(field.p(), field.k() * m, field.seed());
}

unsigned rank_of(std::vector<std::vector<Elem>> rows, const Field& f) {
    unsigned rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].rep == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const Elem inv = f.inv(rows[rank][col]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col].rep == 0) continue;
            const Elem factor = f.mul(rows[r][col], inv);
            for (std::size_t c = col; c < cols; ++c) {
                rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[rank][c]));
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::uint64_t count_affine_zeros(std::span<const Poly> forms, const Field& field, unsigned n_vars,
                                 const CountOptions& opts) {
    check_forms(forms, field, n_vars);
    const auto total = detail::checked_pow(field.q(), n_vars, opts.budget);
    if (!total) {
        throw Error(ErrorCode::BudgetExceeded, std::to_string(field.q()) + "^" + std::to_string(n_vars) +
                                                   " points exceed budget " + std::to_string(opts.budget));
    }
    const detail::CompiledForms compiled(forms, field, n_vars);
    const std::uint32_t q = field.q();
    return detail::parallel_sum(*total, opts.workers, [&](std::uint64_t begin, std::uint64_t end) {
        detail::AffineCursor cur(q, n_vars, begin);
        std::uint64_t local = 0;
        for (std::uint64_t i = begin; i < end; ++i, cur.advance()) {
            if (compiled.all_vanish(cur.point())) ++local;
        }
        return local;
    });
}

CountResult count_projective_points(std::span<const Poly> forms, const Field& field, unsigned n_vars,
                                    const CountOptions& opts) {
    check_forms(forms, field, n_vars);
    const auto total = detail::projective_size(field.q(), n_vars, opts.budget);
    if (!total) {
        throw Error(ErrorCode::BudgetExceeded, "P^" + std::to_string(n_vars - 1) + "(F_" + field.designation() +
                                                   ") exceeds budget " + std::to_string(opts.budget));
    }
    const detail::CompiledForms compiled(forms, field, n_vars);
    CountResult r;
    r.q = field.q();
    r.projective_points = projective_zeros(compiled, field.q(), n_vars, *total, opts.workers);
    r.affine_cone_zeros = r.projective_points * (r.q - 1) + 1;
    if (opts.verify) {
        const auto affine = count_affine_zeros(forms, field, n_vars, opts);
        if (affine != r.affine_cone_zeros) {
            throw Error(ErrorCode::ConeIdentityViolation,
                        "affine count " + std::to_string(affine) + " != " + std::to_string(r.projective_points) +
                            "*(q-1)+1");
        }
    }
    return r;
}

unsigned jacobian_rank(std::span<const Poly> forms, std::span<const Elem> point) {
    if (forms.empty()) return 0;
    const Field& f = forms[0].field();
    std::vector<std::vector<Elem>> rows;
    for (const auto& form : forms) {
        std::vector<Elem> row;
        for (const auto& d : form.partials()) row.push_back(d.eval(point));
        rows.push_back(std::move(row));
    }
    return rank_of(std::move(rows), f);
}

SmoothnessEvidence singular_probe(std::span<const Poly> forms, const Field& field, unsigned n_vars,
                                  unsigned max_ext, const CountOptions& opts) {
    check_forms(forms, field, n_vars);
    if (forms.size() == 1 && is_diagonal(forms[0]) && *forms[0].degree() % field.p() != 0) {
        return SmoothnessEvidence{SmoothnessKind::FermatExact, std::nullopt, {}, {}};
    }
    const FieldOptions field_opts{};
    unsigned reached = 0;
    for (unsigned m = 1; m <= max_ext; ++m) {
        const auto big_q = detail::checked_pow(field.q(), m, field_opts.ceiling);
        const auto total = big_q ? detail::projective_size(*big_q, n_vars, opts.budget) : std::nullopt;
        if (!total) {
            if (m == 1) {
                throw Error(ErrorCode::BudgetExceeded, "smoothness probe over F_" + field.designation() +
                                                           " exceeds budget " + std::to_string(opts.budget));
            }
            break;
        }
        const Field big = extension_of(field, m);
        const auto table = embedding(field, big);
        std::vector<Poly> lifted;
        std::vector<Poly> jac;  // row-major: form i, variable j
        for (const auto& f : forms) {
            lifted.push_back(f.mapped(big, table));
            for (auto& d : lifted.back().partials()) jac.push_back(std::move(d));
        }
        const detail::CompiledForms on_variety(lifted, big, n_vars);
        const detail::CompiledForms partials(jac, big, n_vars);
        const std::size_t k = forms.size();

        auto hit = detail::parallel_find_first(*total, opts.workers, [&](std::uint64_t begin, std::uint64_t end)
                                                                         -> std::optional<std::uint64_t> {
            detail::ProjectiveCursor cur(big.q(), n_vars, begin);
            std::vector<std::vector<Elem>> rows(k, std::vector<Elem>(n_vars));
            for (std::uint64_t i = begin; i < end; ++i, cur.advance()) {
                const auto pt = cur.point();
                if (!on_variety.all_vanish(pt)) continue;
                for (std::size_t r = 0; r < k; ++r) {
                    for (unsigned c = 0; c < n_vars; ++c) rows[r][c] = partials.eval(r * n_vars + c, pt);
                }
                if (rank_of(rows, big) < k) return i;
            }
            return std::nullopt;
        });
        if (hit) {
            detail::ProjectiveCursor cur(big.q(), n_vars, *hit);
            SmoothnessEvidence ev{SmoothnessKind::SingularPointFound, m, {}, big.designation()};
            for (auto e : cur.point()) ev.witness.push_back(e.rep);
            return ev;
        }
        reached = m;
    }
    return SmoothnessEvidence{SmoothnessKind::ProbedNoSingularPoint, reached, {}, {}};
}

bool verify_singular_witness(std::span<const Poly> forms, const Field& field, const SmoothnessEvidence& ev) {
    if (ev.kind != SmoothnessKind::SingularPointFound || !ev.probe_depth || forms.empty()) return false;
    const Field big = extension_of(field, *ev.probe_depth);
    if (ev.witness.size() != forms[0].n_vars()) return false;
    const auto table = embedding(field, big);
    std::vector<Poly> lifted;
    for (const auto& f : forms) lifted.push_back(f.mapped(big, table));
    std::vector<Elem> pt;
    bool nonzero = false;
    for (auto r : ev.witness) {
        if (r >= big.q()) return false;
        pt.push_back(Elem{r});
        nonzero = nonzero || r != 0;
    }
    if (!nonzero) return false;
    for (const auto& f : lifted) {
        if (f.eval(pt).rep != 0) return false;
    }
    return jacobian_rank(lifted, pt) < forms.size();
}

}  // namespace unirule
