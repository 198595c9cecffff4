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

#include "unirule/error.hpp"

namespace unirule {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::CeilingExceeded: return "CeilingExceeded";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::NotHomogeneous: return "NotHomogeneous";
        case ErrorCode::UnknownVariable: return "UnknownVariable";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::ExtensionFieldUnsupported: return "ExtensionFieldUnsupported";
        case ErrorCode::Disagreement: return "Disagreement";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::ConeIdentityViolation: return "ConeIdentityViolation";
        case ErrorCode::SingularInput: return "SingularInput";
        case ErrorCode::CrossCheckMismatch: return "CrossCheckMismatch";
        case ErrorCode::InvalidMultidegree: return "InvalidMultidegree";
        case ErrorCode::NegativeShift: return "NegativeShift";
        case ErrorCode::ConfigSyntax: return "ConfigSyntax";
        case ErrorCode::UnknownKey: return "UnknownKey";
        case ErrorCode::Usage: return "Usage";
    }
    return "Unknown";
}

bool is_resource_or_internal(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::CeilingExceeded:
        case ErrorCode::BudgetExceeded:
        case ErrorCode::Disagreement:
        case ErrorCode::ConeIdentityViolation:
        case ErrorCode::CrossCheckMismatch:
            return true;
        default:
            return false;
    }
}

}  // namespace unirule
