/* Copyright (C) 2026 The expsum authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace expsum {

enum class ErrorKind {
  InvalidInput,
  NotPrime,
  NotOdd,
  ModulusReducible,
  DivisionByZero,
  NoRootFound,
  ZeroPolynomial,
  MixedPrimes,
  NotSymmetric,
  TooLarge,
  NotMultipleOfBase,
  NonPPowerDegree,
  SearchBudgetExceeded,
  ZeroValuation,
  ParityViolation,
  ConditionViolated,
  NotApplicable,
  DivisibilityViolated,
  ZeroCoefficient,
  Unsupported,
  InternalInconsistency,
  MalformedReference,
};

std::string_view kind_name(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace expsum
