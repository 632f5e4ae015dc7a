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

#ifndef SEMDEP_LABELS_H_
#define SEMDEP_LABELS_H_

#include <string>
#include <string_view>
#include <vector>

namespace semdep {

// Argument-candidate traversal schemes: along the syntactic tree or along the
// linear word sequence.
enum class TraverseScheme { kSynPth, kLinPth };

std::string_view SchemeName(TraverseScheme scheme);
// Accepts "synPth" / "linPth" (case-insensitive). Throws Error otherwise.
TraverseScheme ParseScheme(std::string_view name);

inline constexpr std::string_view kNonePred = "NONE_PRED";
inline constexpr std::string_view kNoneArg = "NONE_ARG";
inline constexpr std::string_view kNoMoreArg = "noMoreArg";
inline constexpr std::string_view kNoMoreLeftArg = "noMoreLeftArg";
inline constexpr std::string_view kNoMoreRightArg = "noMoreRightArg";

// The closed class-label inventory of the word-pair classifier: 21 sense
// labels plus NONE_PRED, 54 argument roles plus NONE_ARG, and the auxiliary
// stop labels of the chosen traversal scheme (78 labels for synPth, 79 for
// linPth).
class LabelSet {
 public:
  static const LabelSet &ForScheme(TraverseScheme scheme);

  TraverseScheme scheme() const { return scheme_; }
  const std::vector<std::string> &labels() const { return labels_; }
  size_t size() const { return labels_.size(); }

  // Position in labels(), or -1.
  int IndexOf(std::string_view label) const;
  bool Contains(std::string_view label) const { return IndexOf(label) >= 0; }

 private:
  explicit LabelSet(TraverseScheme scheme);

  TraverseScheme scheme_;
  std::vector<std::string> labels_;
};

// "01".."21".
const std::vector<std::string> &SenseLabels();
// The 54 PropBank/NomBank roles, in inventory order.
const std::vector<std::string> &ArgumentRoles();

bool IsSenseLabel(std::string_view label);
bool IsArgumentRole(std::string_view label);
bool IsAuxiliaryLabel(std::string_view label);
// Labels that may be output for a predicate-stage pair.
inline bool IsPredicateStageLabel(std::string_view label) {
  return IsSenseLabel(label) || label == kNonePred;
}
// Labels that may be output for an argument-stage pair.
inline bool IsArgumentStageLabel(std::string_view label) {
  return IsArgumentRole(label) || label == kNoneArg || IsAuxiliaryLabel(label);
}

}  // namespace semdep

#endif  // SEMDEP_LABELS_H_
