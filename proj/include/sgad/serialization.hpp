// Copyright 2026 The sgad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

/**
 * @file serialization.hpp
 * JSON forms of channels and their inputs, for nlohmann::json.
 *
 * A KrausSet becomes
 *
 *   {"label": "SGAD",
 *    "operators": [[[re, im], [re, im], [re, im], [re, im]], ...],
 *    "source": {"bath": {...}, "t": 5.0}}
 *
 * with each operator stored row-major. Doubles are written in shortest
 * round-trip form, so parsing recovers every value exactly.
 */

#include <json.hpp>

#include "sgad/bath.hpp"
#include "sgad/kraus.hpp"
#include "sgad/qubit.hpp"

namespace sgad {

void to_json(nlohmann::json& j, const Matrix2& m);
void from_json(const nlohmann::json& j, Matrix2& m);

void to_json(nlohmann::json& j, const BathSpec& b);
void from_json(const nlohmann::json& j, BathSpec& b);

void to_json(nlohmann::json& j, const KrausSet& k);
void from_json(const nlohmann::json& j, KrausSet& k);

void to_json(nlohmann::json& j, const SgadParams& p);

}  // namespace sgad
