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

#ifndef UNIRULE_CERTIFY_HPP
#define UNIRULE_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "unirule/count.hpp"
#include "unirule/field.hpp"
#include "unirule/hasse.hpp"
#include "unirule/poly.hpp"

namespace unirule {

enum class Classification { Fano, CalabiYau, GeneralType };

std::string_view to_string(Classification c) noexcept;

/// Validates a multidegree for P^n: at least one degree, all positive, and
/// no more forms than n. Throws InvalidMultidegree.
void check_multidegree(unsigned n, std::span<const unsigned> degrees);

/// Fano if sum(d) <= n, Calabi-Yau if sum(d) == n+1, general type otherwise.
Classification classify(unsigned n, std::span<const unsigned> degrees);

enum class SmoothnessMode { Probe, Assert };

/// A complete intersection V(f_1, ..., f_k) in P^n over a finite field.
struct CISpec {
    unsigned n = 0;
    std::vector<unsigned> degrees;
    std::vector<Poly> forms;
    Field field;
    SmoothnessMode smoothness_mode = SmoothnessMode::Probe;
    unsigned probe_depth = 3;
};

/// Builds a CISpec from forms, reading the multidegree off the forms.
CISpec make_ci_spec(unsigned n, std::vector<Poly> forms, SmoothnessMode mode = SmoothnessMode::Probe,
                    unsigned probe_depth = 3);

/// Throws if the spec's invariants fail.
void validate(const CISpec& spec);

enum class CertMethod { PointCount, HasseCoefficient };
enum class Verdict { NotGeometricallyUniruled, Inconclusive };

std::string_view to_string(CertMethod m) noexcept;
std::string_view to_string(Verdict v) noexcept;

struct Certificate {
    unsigned ambient_n = 0;
    std::vector<unsigned> degrees;
    std::uint32_t p = 0;
    unsigned k = 1;
    std::uint64_t field_seed = 0;
    std::vector<std::string> forms;
    SmoothnessMode smoothness_mode = SmoothnessMode::Probe;
    unsigned probe_depth = 3;

    CertMethod method = CertMethod::PointCount;
    std::optional<CountResult> count;
    std::optional<HasseResult> hasse;
    std::uint64_t residue = 0;
    std::uint64_t modulus = 0;
    Verdict verdict = Verdict::Inconclusive;
    SmoothnessEvidence smoothness;
    Classification classification = Classification::Fano;
};

struct CertifyOptions {
    CountOptions count;
    HasseOptions hasse;
    /// Run cross-checks (cone identity, both Hasse algorithms, count vs coefficient).
    bool verify = false;
};

/// |X(F_q)| mod q; X is not geometrically uniruled when this is not 1.
/// Throws SingularInput when the probe finds a singular point.
Certificate certify_not_uniruled(const CISpec& spec, const CertifyOptions& opts = {});

/// Calabi-Yau hypersurfaces over F_p: X is not geometrically uniruled when
/// the Hasse coefficient is nonzero.
Certificate hasse_certify(const CISpec& spec, const CertifyOptions& opts = {});

/// Rebuilds the spec recorded in a certificate.
CISpec replay_spec(const Certificate& cert);

/// Stable key order, one object per certificate.
nlohmann::ordered_json to_json(const Certificate& cert);

}  // namespace unirule

#endif
