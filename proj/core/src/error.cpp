// Copyright 2026 The hullprop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hullprop/error.hpp"

namespace hullprop {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::FieldTooLarge: return "FieldTooLarge";
        case ErrorCode::NoPolynomialListed: return "NoPolynomialListed";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::NotQuadraticExtension: return "NotQuadraticExtension";
        case ErrorCode::NotInBaseField: return "NotInBaseField";
        case ErrorCode::NotInSubfield: return "NotInSubfield";
        case ErrorCode::ZeroArgument: return "ZeroArgument";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::NotASubcode: return "NotASubcode";
        case ErrorCode::NoNonzeroCodewords: return "NoNonzeroCodewords";
        case ErrorCode::DuplicateEvaluationPoints: return "DuplicateEvaluationPoints";
        case ErrorCode::ZeroMultiplier: return "ZeroMultiplier";
        case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorCode::InvalidAssignment: return "InvalidAssignment";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NotInDifferenceSet: return "NotInDifferenceSet";
        case ErrorCode::NormUnsolvable: return "NormUnsolvable";
        case ErrorCode::EmptyConstruction: return "EmptyConstruction";
        case ErrorCode::NoDual: return "NoDual";
        case ErrorCode::NoLogicalQudits: return "NoLogicalQudits";
        case ErrorCode::DimensionConstraintViolated: return "DimensionConstraintViolated";
        case ErrorCode::SOutOfRange: return "SOutOfRange";
        case ErrorCode::PurityRequired: return "PurityRequired";
        case ErrorCode::ContractViolation: return "ContractViolation";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

BudgetExceeded::BudgetExceeded(std::size_t lower_bound, std::optional<std::size_t> upper_bound,
                               const std::string& message)
    : Error(ErrorCode::BudgetExceeded, message), lower_(lower_bound), upper_(upper_bound) {}

void raise(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace hullprop
