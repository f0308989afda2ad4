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
#include "expsum/errors.hpp"

namespace expsum {

std::string_view kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotOdd: return "NotOdd";
    case ErrorKind::ModulusReducible: return "ModulusReducible";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NoRootFound: return "NoRootFound";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::MixedPrimes: return "MixedPrimes";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotMultipleOfBase: return "NotMultipleOfBase";
    case ErrorKind::NonPPowerDegree: return "NonPPowerDegree";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::ZeroValuation: return "ZeroValuation";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::ConditionViolated: return "ConditionViolated";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::DivisibilityViolated: return "DivisibilityViolated";
    case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::MalformedReference: return "MalformedReference";
  }
  return "Unknown";
}

}  // namespace expsum
