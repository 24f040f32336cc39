// Copyright 2026 The Ultraprox Authors
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

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace ultraprox {

enum class VerdictStatus {
  kVerified,      // all hypotheses hold and the conclusion was checked
  kFailed,        // all hypotheses hold and the conclusion does not
  kInapplicable,  // some hypothesis fails; the conclusion was not asserted
};

struct Hypothesis {
  std::string name;
  bool holds = false;
  std::string witness;
};

/// Machine-checked record of one theorem instance.
struct TheoremVerdict {
  std::string theorem;
  std::vector<Hypothesis> hypotheses;
  VerdictStatus status = VerdictStatus::kInapplicable;
  std::optional<std::string> case_label;
  nlohmann::json witnesses = nlohmann::json::object();
  /// Set when a checked fact contradicts a claim the caller expected.
  std::optional<nlohmann::json> discrepancy;

  bool hypotheses_hold() const {
    for (const auto& h : hypotheses) {
      if (!h.holds) return false;
    }
    return true;
  }
  bool conclusion_verified() const { return status == VerdictStatus::kVerified; }
  /// Failure in the exit-code sense: a conclusion failed or a discrepancy surfaced.
  bool is_failure() const { return status == VerdictStatus::kFailed || discrepancy.has_value(); }

  void add_hypothesis(std::string name, bool holds, std::string witness = {}) {
    hypotheses.push_back({std::move(name), holds, std::move(witness)});
  }
};

inline const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kVerified:
      return "verified";
    case VerdictStatus::kFailed:
      return "failed";
    case VerdictStatus::kInapplicable:
      return "inapplicable";
  }
  return "unknown";
}

inline nlohmann::json to_json(const TheoremVerdict& v) {
  nlohmann::json out;
  out["theorem"] = v.theorem;
  out["status"] = to_string(v.status);
  auto& hyps = out["hypotheses"] = nlohmann::json::array();
  for (const auto& h : v.hypotheses) {
    hyps.push_back({{"name", h.name}, {"holds", h.holds}, {"witness", h.witness}});
  }
  out["case"] = v.case_label ? nlohmann::json(*v.case_label) : nlohmann::json(nullptr);
  out["witnesses"] = v.witnesses;
  if (v.discrepancy) out["discrepancy"] = *v.discrepancy;
  return out;
}

}  // namespace ultraprox
