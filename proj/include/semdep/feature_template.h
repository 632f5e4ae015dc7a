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

#ifndef SEMDEP_FEATURE_TEMPLATE_H_
#define SEMDEP_FEATURE_TEMPLATE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semdep/error.h"

namespace semdep {

// Template macro language.
//
//   template   := operand (" + " operand)*
//   operand    := "(" operand ")" | value [" = " (value | literal) " ?"]
//   value      := node "." attribute ["." baseline]
//               | node "." collection "." attribute ["." reducer]
//               | node ":" node "|" path "." attribute ["." reducer]
//               | node ":" node "|" path ".distance"
//               | node ":" node "|" relation
//   node       := ("a" | "p") [offset] ("." navigation [offset])*
//   offset     := "-"? digits          (a-1: previous word, p1: next word)
//
// navigation : h lm ln rm rn pphead isCurPred
//              {high,low}Support{Verb,Noun,Prop}
// collection : children noFarChildren
// path       : dpPath dpPathArgu dpPathPred dpPathShared linePath
// relation   : dpTreeRelation direction existCross
// reducer    : seq noDup bag
// attribute  : form lemma pos spForm spLemma spPos dprel semdprel
//              currentSense voice isLeaf ctypeSemdprel rtypeSemdprel
//              isCtypeSemdprel isRtypeSemdprel existSemdprel_<LABEL>
//              baseline_Ax baseline_Mod
//
// Whitespace is free around operators; a blank may replace "|". The
// canonical text (Print) uses the spacing shown above without parentheses.

enum class Anchor { kArgument, kPredicate };

enum class Navigation {
  kHead,
  kLm,
  kLn,
  kRm,
  kRn,
  kPpHead,
  kIsCurPred,
  kHighSupportVerb,
  kHighSupportNoun,
  kHighSupportProp,
  kLowSupportVerb,
  kLowSupportNoun,
  kLowSupportProp,
};

enum class Attribute {
  kForm,
  kLemma,
  kPos,
  kSpForm,
  kSpLemma,
  kSpPos,
  kDprel,
  kSemdprel,
  kCurrentSense,
  kVoice,
  kIsLeaf,
  kCtypeSemdprel,
  kRtypeSemdprel,
  kIsCtypeSemdprel,
  kIsRtypeSemdprel,
  kExistSemdprel,
  kBaselineAx,
  kBaselineMod,
};

enum class Collection { kChildren, kNoFarChildren };
enum class PathKind { kDpPath, kDpPathArgu, kDpPathPred, kDpPathShared, kLinePath };
enum class PairRelation { kDpTreeRelation, kDirection, kExistCross };
enum class Reducer { kNone, kSeq, kNoDup, kBag };

struct NodeStep {
  Navigation nav;
  int offset = 0;
};

struct NodeExpr {
  Anchor anchor = Anchor::kArgument;
  int offset = 0;
  std::vector<NodeStep> steps;
};

struct AttrRef {
  Attribute attr = Attribute::kForm;
  std::string label;  // for existSemdprel_<label>
};

struct Term {
  enum class Kind {
    kNodeAttr,
    kCollection,
    kPathAttr,
    kPathDistance,
    kPairRelation,
    kEquality,
  };
  Kind kind = Kind::kNodeAttr;
  NodeExpr node;    // the node, or the path source
  NodeExpr target;  // path target
  Collection collection = Collection::kChildren;
  PathKind path = PathKind::kDpPath;
  PairRelation relation = PairRelation::kDpTreeRelation;
  AttrRef attr;
  std::optional<Attribute> baseline;  // baseline_Ax / baseline_Mod qualifier
  Reducer reducer = Reducer::kNone;
  // kEquality: operands[0] = operands[1] (or literal when operands.size()==1)
  std::vector<Term> operands;
  std::string literal;
};

class TemplateError : public Error {
 public:
  TemplateError(const std::string &message, size_t position)
      : Error("column " + std::to_string(position + 1) + ": " + message),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

class FeatureTemplate {
 public:
  // Throws TemplateError with the 0-based offending position.
  static FeatureTemplate Parse(std::string_view text);

  const std::vector<Term> &parts() const { return parts_; }
  // Canonical text; Parse(Print()) reproduces the template.
  const std::string &text() const { return text_; }
  // True when the value can change with the partial semantic structure.
  bool depends_on_state() const { return depends_on_state_; }

  bool operator==(const FeatureTemplate &o) const { return text_ == o.text_; }

 private:
  std::vector<Term> parts_;
  std::string text_;
  bool depends_on_state_ = false;
};

inline FeatureTemplate ParseTemplate(std::string_view text) {
  return FeatureTemplate::Parse(text);
}
std::string PrintTemplate(const std::vector<Term> &parts);

// A sense attribute must be combined with a lexical attribute (form, lemma
// or their split forms). Returns a message when `t` breaks that rule.
std::optional<std::string> LintTemplate(const FeatureTemplate &t);

std::string_view NavigationName(Navigation n);
std::string_view AttributeName(Attribute a);

}  // namespace semdep

#endif  // SEMDEP_FEATURE_TEMPLATE_H_
