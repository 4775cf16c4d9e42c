/*
 * Copyright 2026 the riskindex authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RISKINDEX_JSONIO_HPP
#define RISKINDEX_JSONIO_HPP

#include <string>

#include <json.hpp>

#include "riskindex/extended_real.hpp"

namespace riskindex {

// Canonical serialization contract: keys sorted (nlohmann::json already
// stores object keys ordered), floats printed with 12 significant digits,
// no locale dependence. Repeated runs of the same computation must produce
// byte-identical output.
std::string canonical_dump(const nlohmann::json& j);

// Round-trippable double formatting used by canonical_dump and the CSV
// writers ("%.12g").
std::string format_double(double v);

nlohmann::json extended_real_to_json(const ExtendedReal& v);
ExtendedReal extended_real_from_json(const nlohmann::json& j);

}  // namespace riskindex

#endif  // RISKINDEX_JSONIO_HPP
