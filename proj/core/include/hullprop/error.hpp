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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hullprop {

enum class ErrorCode {
    // galois
    NotPrime,
    FieldTooLarge,
    NoPolynomialListed,
    DivisionByZero,
    FieldMismatch,
    NotQuadraticExtension,
    NotInBaseField,
    NotInSubfield,
    ZeroArgument,
    // fmatrix
    DimensionMismatch,
    // codekit
    IndexOutOfRange,
    BudgetExceeded,
    NotASubcode,
    NoNonzeroCodewords,
    // grslab
    DuplicateEvaluationPoints,
    ZeroMultiplier,
    ParameterOutOfRange,
    InvalidAssignment,
    LengthMismatch,
    NotInDifferenceSet,
    NormUnsolvable,
    EmptyConstruction,
    // qparams
    NoDual,
    NoLogicalQudits,
    DimensionConstraintViolated,
    SOutOfRange,
    PurityRequired,
    ContractViolation,
    // text formats
    ParseError,
};

std::string_view error_code_name(ErrorCode code);

/// Base exception for every failure raised by the library. The code is the
/// stable, machine-checkable part; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised when a weight enumeration would exceed its budget. Carries whatever
/// was proven before stopping: every weight below `lower_bound` was excluded
/// exhaustively, and `upper_bound` (if set) is the best weight actually found.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::size_t lower_bound, std::optional<std::size_t> upper_bound,
                   const std::string& message);

    std::size_t lower_bound() const noexcept { return lower_; }
    std::optional<std::size_t> upper_bound() const noexcept { return upper_; }

private:
    std::size_t lower_;
    std::optional<std::size_t> upper_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace hullprop
