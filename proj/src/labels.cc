// Copyright 2026 The semdep Authors.
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

#include "semdep/labels.h"

#include <algorithm>
#include <cctype>

#include "semdep/error.h"

namespace semdep {
namespace {

std::vector<std::string> MakeSenses() {
  std::vector<std::string> senses;
  for (int i = 1; i <= 21; ++i) {
    senses.push_back((i < 10 ? "0" : "") + std::to_string(i));
  }
  return senses;
}

std::vector<std::string> MakeRoles() {
  std::vector<std::string> roles = {"A0", "A1", "A2", "A3", "A4", "A5",
                                    "AA", "AM"};
  for (int i = 0; i <= 4; ++i) roles.push_back("C-A" + std::to_string(i));
  for (int i = 0; i <= 4; ++i) roles.push_back("R-A" + std::to_string(i));
  for (const char *r : {"R-AA", "AM-PRD", "AM-PRT", "AM-REC", "AM-TM",
                        "AM-TMP"}) {
    roles.push_back(r);
  }
  const char *adjuncts[] = {"ADV", "CAU", "DIR", "DIS", "EXT",
                            "LOC", "MNR", "MOD", "NEG", "PNC"};
  for (const char *a : adjuncts) roles.push_back(std::string("AM-") + a);
  const char *c_adjuncts[] = {"ADV", "CAU", "DIR", "DIS", "EXT",
                              "LOC", "MNR", "NEG", "PNC", "TMP"};
  for (const char *a : c_adjuncts) roles.push_back(std::string("C-AM-") + a);
  const char *r_adjuncts[] = {"ADV", "CAU", "DIR", "EXT",
                              "LOC", "MNR", "PNC", "TMP"};
  for (const char *a : r_adjuncts) roles.push_back(std::string("R-AM-") + a);
  roles.push_back("C-R-AM-TMP");
  roles.push_back("SU");
  return roles;
}

}  // namespace

std::string_view SchemeName(TraverseScheme scheme) {
  return scheme == TraverseScheme::kSynPth ? "synPth" : "linPth";
}

TraverseScheme ParseScheme(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "synpth") return TraverseScheme::kSynPth;
  if (lower == "linpth") return TraverseScheme::kLinPth;
  throw Error("unknown traversal scheme '" + std::string(name) +
              "' (expected synPth or linPth)");
}

const std::vector<std::string> &SenseLabels() {
  static const std::vector<std::string> senses = MakeSenses();
  return senses;
}

const std::vector<std::string> &ArgumentRoles() {
  static const std::vector<std::string> roles = MakeRoles();
  return roles;
}

bool IsSenseLabel(std::string_view label) {
  const auto &s = SenseLabels();
  return std::find(s.begin(), s.end(), label) != s.end();
}

bool IsArgumentRole(std::string_view label) {
  const auto &r = ArgumentRoles();
  return std::find(r.begin(), r.end(), label) != r.end();
}

bool IsAuxiliaryLabel(std::string_view label) {
  return label == kNoMoreArg || label == kNoMoreLeftArg ||
         label == kNoMoreRightArg;
}

LabelSet::LabelSet(TraverseScheme scheme) : scheme_(scheme) {
  labels_ = SenseLabels();
  labels_.emplace_back(kNonePred);
  for (const auto &r : ArgumentRoles()) labels_.push_back(r);
  labels_.emplace_back(kNoneArg);
  if (scheme == TraverseScheme::kSynPth) {
    labels_.emplace_back(kNoMoreArg);
  } else {
    labels_.emplace_back(kNoMoreLeftArg);
    labels_.emplace_back(kNoMoreRightArg);
  }
}

const LabelSet &LabelSet::ForScheme(TraverseScheme scheme) {
  static const LabelSet syn(TraverseScheme::kSynPth);
  static const LabelSet lin(TraverseScheme::kLinPth);
  return scheme == TraverseScheme::kSynPth ? syn : lin;
}

int LabelSet::IndexOf(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

}  // namespace semdep
