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

#include "ceptool/serialization.hpp"

#include <fstream>
#include <sstream>

namespace ceptool {

namespace {

std::vector<Rational> RationalList(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const Json& e : j) out.push_back(RationalFromJson(e));
  return out;
}

Json RationalArray(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const Rational& r : v) out.push_back(ToJson(r));
  return out;
}

}  // namespace

Json ToJson(const Rational& r) { return r.ToString(); }

Json ToJson(const FiniteGame& game) {
  return {{"cx", RationalArray(game.cx())}, {"cy", RationalArray(game.cy())}};
}

Json ToJson(const FiniteMeasure& mu) {
  Json out = Json::array();
  for (const auto& [p, w] : mu.atoms()) {
    out.push_back({ToJson(p.x), ToJson(p.y), ToJson(w)});
  }
  return out;
}

Json ToJson(const MixedStrategy& s) {
  Json out = Json::array();
  for (const auto& [v, w] : s.atoms()) out.push_back({ToJson(v), ToJson(w)});
  return out;
}

Json ToJson(const CyclePattern& p) {
  return {{"k", p.k()}, {"xs", RationalArray(p.xs())}, {"ys", RationalArray(p.ys())}};
}

Rational RationalFromJson(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Rational::Parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError(std::string("bad rational ") + j.dump() + ": " + e.what());
    }
  }
  throw InputError("expected a rational as a string or integer, got " + j.dump());
}

FiniteGame GameFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("cx") || !j.contains("cy")) {
    throw InputError("game must be an object with \"cx\" and \"cy\"");
  }
  return FiniteGame(RationalList(j.at("cx"), "cx"), RationalList(j.at("cy"), "cy"));
}

FiniteMeasure MeasureFromJson(const Json& j) {
  if (!j.is_array()) throw InputError("measure must be an array of [x, y, w]");
  FiniteMeasure mu;
  for (const Json& atom : j) {
    if (!atom.is_array() || atom.size() != 3) {
      throw InputError("measure atom must be [x, y, w], got " + atom.dump());
    }
    mu.Add({RationalFromJson(atom[0]), RationalFromJson(atom[1])},
           RationalFromJson(atom[2]));
  }
  return mu;
}

MixedStrategy MixedStrategyFromJson(const Json& j) {
  if (!j.is_array()) throw InputError("mixed strategy must be an array of [v, w]");
  MixedStrategy s;
  for (const Json& atom : j) {
    if (!atom.is_array() || atom.size() != 2) {
      throw InputError("strategy atom must be [v, w], got " + atom.dump());
    }
    s.Add(RationalFromJson(atom[0]), RationalFromJson(atom[1]));
  }
  return s;
}

CyclePattern PatternFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("xs") || !j.contains("ys")) {
    throw InputError("pattern must be an object with \"xs\" and \"ys\"");
  }
  return CyclePattern(RationalList(j.at("xs"), "xs"), RationalList(j.at("ys"), "ys"));
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseJson(buf.str());
}

}  // namespace ceptool
