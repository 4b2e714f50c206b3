// Copyright 2026 The ceptool Authors
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

#ifndef CEPTOOL_SERIALIZATION_HPP_
#define CEPTOOL_SERIALIZATION_HPP_

#include <string>
#include <string_view>

#include "json.hpp"

#include "ceptool/cycles.hpp"
#include "ceptool/measures.hpp"
#include "ceptool/rational.hpp"

namespace ceptool {

using Json = nlohmann::json;

// Rationals travel as strings "p/q" (or "p"). Readers also accept JSON
// integers and decimal strings such as "0.4".
Json ToJson(const Rational& r);
Json ToJson(const FiniteGame& game);          // {"cx": [...], "cy": [...]}
Json ToJson(const FiniteMeasure& mu);         // [[x, y, w], ...]
Json ToJson(const MixedStrategy& s);          // [[value, w], ...]
Json ToJson(const CyclePattern& p);           // {"k": k, "xs": [...], "ys": [...]}

// Throw InputError on malformed input.
Rational RationalFromJson(const Json& j);
FiniteGame GameFromJson(const Json& j);
FiniteMeasure MeasureFromJson(const Json& j);
MixedStrategy MixedStrategyFromJson(const Json& j);
CyclePattern PatternFromJson(const Json& j);

// Parses text, converting JSON syntax errors into InputError.
Json ParseJson(std::string_view text);
Json ReadJsonFile(const std::string& path);

}  // namespace ceptool

#endif  // CEPTOOL_SERIALIZATION_HPP_
