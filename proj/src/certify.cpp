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

#include "unirule/certify.hpp"

#include <numeric>

#include "unirule/detail/enumerate.hpp"
#include "unirule/error.hpp"

namespace unirule {

std::string_view to_string(Classification c) noexcept {
    switch (c) {
        case Classification::Fano: return "fano";
        case Classification::CalabiYau: return "calabi-yau";
        case Classification::GeneralType: return "general-type";
    }
    return "unknown";
}

std::string_view to_string(CertMethod m) noexcept {
    return m == CertMethod::PointCount ? "point-count" : "hasse-coefficient";
}

std::string_view to_string(Verdict v) noexcept {
    return v == Verdict::NotGeometricallyUniruled ? "not-geometrically-uniruled" : "inconclusive";
}

void check_multidegree(unsigned n, std::span<const unsigned> degrees) {
    if (degrees.empty()) throw Error(ErrorCode::InvalidMultidegree, "empty multidegree");
    if (degrees.size() > n) {
        throw Error(ErrorCode::InvalidMultidegree, std::to_string(degrees.size()) + " forms in P^" + std::to_string(n));
    }
    for (auto d : degrees) {
        if (d == 0) throw Error(ErrorCode::InvalidMultidegree, "degree 0 form");
    }
}

Classification classify(unsigned n, std::span<const unsigned> degrees) {
    check_multidegree(n, degrees);
    const std::uint64_t sum = std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0});
    if (sum <= n) return Classification::Fano;
    if (sum == std::uint64_t{n} + 1) return Classification::CalabiYau;
    return Classification::GeneralType;
}

CISpec make_ci_spec(unsigned n, std::vector<Poly> forms, SmoothnessMode mode, unsigned probe_depth) {
    if (forms.empty()) throw Error(ErrorCode::InvalidMultidegree, "no defining forms");
    CISpec spec{n, {}, std::move(forms), Field::prime(2), mode, probe_depth};
    spec.field = spec.forms[0].field();
    for (const auto& f : spec.forms) {
        const auto d = f.degree();
        if (!d) throw Error(ErrorCode::NotHomogeneous, f.to_string());
        spec.degrees.push_back(*d);
    }
    validate(spec);
    return spec;
}

void validate(const CISpec& spec) {
    check_multidegree(spec.n, spec.degrees);
    if (spec.forms.size() != spec.degrees.size()) {
        throw Error(ErrorCode::InvalidMultidegree, "multidegree length differs from number of forms");
    }
    for (std::size_t i = 0; i < spec.forms.size(); ++i) {
        const auto& f = spec.forms[i];
        if (!(f.field() == spec.field)) throw Error(ErrorCode::FieldMismatch, "form " + std::to_string(i));
        if (f.n_vars() != spec.n + 1) throw Error(ErrorCode::ArityMismatch, "form " + std::to_string(i));
        if (f.degree() != spec.degrees[i]) {
            throw Error(ErrorCode::DegreeMismatch, "form " + std::to_string(i) + " is not of degree " +
                                                       std::to_string(spec.degrees[i]));
        }
    }
}

namespace {

Certificate skeleton(const CISpec& spec) {
    Certificate c;
    c.ambient_n = spec.n;
    c.degrees = spec.degrees;
    c.p = spec.field.p();
    c.k = spec.field.k();
    c.field_seed = spec.field.seed();
    for (const auto& f : spec.forms) c.forms.push_back(f.to_string());
    c.smoothness_mode = spec.smoothness_mode;
    c.probe_depth = spec.probe_depth;
    c.classification = classify(spec.n, spec.degrees);
    return c;
}

SmoothnessEvidence smoothness_of(const CISpec& spec, const CertifyOptions& opts) {
    if (spec.smoothness_mode == SmoothnessMode::Assert) return SmoothnessEvidence{};
    auto ev = singular_probe(spec.forms, spec.field, spec.n + 1, spec.probe_depth, opts.count);
    if (ev.kind == SmoothnessKind::SingularPointFound) {
        std::string pt;
        for (auto r : ev.witness) pt += (pt.empty() ? "" : ",") + std::to_string(r);
        throw Error(ErrorCode::SingularInput, "singular point (" + pt + ") over F_" + ev.witness_field);
    }
    return ev;
}

}  // namespace

Certificate certify_not_uniruled(const CISpec& spec, const CertifyOptions& opts) {
    validate(spec);
    Certificate cert = skeleton(spec);
    cert.smoothness = smoothness_of(spec, opts);
    CountOptions count_opts = opts.count;
    count_opts.verify = count_opts.verify || opts.verify;
    cert.method = CertMethod::PointCount;
    cert.count = count_projective_points(spec.forms, spec.field, spec.n + 1, count_opts);
    cert.modulus = spec.field.q();
    cert.residue = cert.count->projective_points % cert.modulus;
    cert.verdict = cert.residue != 1 % cert.modulus ? Verdict::NotGeometricallyUniruled : Verdict::Inconclusive;
    return cert;
}

Certificate hasse_certify(const CISpec& spec, const CertifyOptions& opts) {
    validate(spec);
    if (spec.forms.size() != 1 || spec.degrees[0] != spec.n + 1) {
        throw Error(ErrorCode::DegreeMismatch, "the coefficient criterion needs one form of degree n+1 = " +
                                                   std::to_string(spec.n + 1));
    }
    if (spec.field.k() != 1) {
        throw Error(ErrorCode::ExtensionFieldUnsupported, "F_" + spec.field.designation() + " is not a prime field");
    }
    Certificate cert = skeleton(spec);
    cert.smoothness = smoothness_of(spec, opts);
    cert.method = CertMethod::HasseCoefficient;

    const auto& form = spec.forms[0];
    const bool enumerable = detail::checked_pow(spec.field.p(), spec.n + 1, opts.count.budget).has_value();
    HasseOptions hopts = opts.hasse;
    hopts.workers = opts.count.workers;
    cert.hasse = hasse_coefficient(form, enumerable ? HasseMode::Both : HasseMode::Expansion, hopts);
    cert.modulus = spec.field.p();
    cert.residue = cert.hasse->value();
    cert.verdict = cert.hasse->nonzero() ? Verdict::NotGeometricallyUniruled : Verdict::Inconclusive;

    if (opts.verify && enumerable) {
        CISpec asserted = spec;
        asserted.smoothness_mode = SmoothnessMode::Assert;
        const auto by_count = certify_not_uniruled(asserted, opts);
        cert.count = by_count.count;
        if (by_count.verdict != cert.verdict) {
            throw Error(ErrorCode::CrossCheckMismatch,
                        "coefficient " + std::to_string(cert.residue) + " but " +
                            std::to_string(by_count.count->projective_points) + " points over F_" +
                            spec.field.designation());
        }
    }
    return cert;
}

CISpec replay_spec(const Certificate& cert) {
    const Field field = Field::extension(cert.p, cert.k, cert.field_seed);
    std::vector<Poly> forms;
    for (const auto& text : cert.forms) forms.push_back(parse_poly(text, field, cert.ambient_n));
    return make_ci_spec(cert.ambient_n, std::move(forms), cert.smoothness_mode, cert.probe_depth);
}

nlohmann::ordered_json to_json(const Certificate& cert) {
    using json = nlohmann::ordered_json;
    json j;
    j["ambient_n"] = cert.ambient_n;
    j["degrees"] = cert.degrees;
    j["field"] = json{{"p", cert.p}, {"k", cert.k}};
    j["method"] = to_string(cert.method);
    j["count"] = cert.count ? json(cert.count->projective_points) : json(nullptr);
    j["coefficient"] = cert.hasse ? json(cert.hasse->value()) : json(nullptr);
    j["residue"] = cert.residue;
    j["modulus"] = cert.modulus;
    j["verdict"] = to_string(cert.verdict);
    json smooth;
    smooth["kind"] = to_string(cert.smoothness.kind);
    smooth["probe_depth"] = cert.smoothness.probe_depth ? json(*cert.smoothness.probe_depth) : json(nullptr);
    smooth["witness"] = cert.smoothness.witness.empty() ? json(nullptr) : json(cert.smoothness.witness);
    j["smoothness"] = smooth;
    j["classification"] = to_string(cert.classification);
    return j;
}

}  // namespace unirule
