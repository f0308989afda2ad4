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

// JSON documents emitted by the CLI. Layouts are described in docs/schemas.md.

#include <json.hpp>

#include "expsum/evaluator.hpp"
#include "expsum/nullity.hpp"
#include "expsum/tabulate.hpp"

namespace expsum {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

Json coeffs_to_json(const QuadFunc& f);

struct ResultDoc {
  Residue p = 0;
  unsigned n = 1;
  std::uint64_t m = 1;
  std::vector<Residue> modulus;
  ExpSumValue value;
};

Json to_json(const ResultDoc& r);
ResultDoc result_from_json(const Json& j);

Json to_json(const QuadFunc& f, const NullityProfile& prof);
NullityProfile profile_from_json(const Json& j);

Json to_json(const TableRow& r);
TableRow row_from_json(const Json& j);

Json to_json(const CyclotomicInt& c);

}  // namespace expsum
