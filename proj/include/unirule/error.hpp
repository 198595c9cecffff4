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

#ifndef UNIRULE_ERROR_HPP
#define UNIRULE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace unirule {

enum class ErrorCode {
    // field
    NotPrime,
    CeilingExceeded,
    DivisionByZero,
    // poly
    SyntaxError,
    NotHomogeneous,
    UnknownVariable,
    ZeroPolynomial,
    FieldMismatch,
    ArityMismatch,
    // hasse
    DegreeMismatch,
    ExtensionFieldUnsupported,
    Disagreement,
    // count
    BudgetExceeded,
    ConeIdentityViolation,
    // certify
    SingularInput,
    CrossCheckMismatch,
    InvalidMultidegree,
    // bounds
    NegativeShift,
    // cli
    ConfigSyntax,
    UnknownKey,
    Usage,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for errors that indicate a violated internal invariant or an
/// exhausted resource rather than bad user input.
bool is_resource_or_internal(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace unirule

#endif
