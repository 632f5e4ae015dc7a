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

#ifndef SEMDEP_FEATURE_EVAL_H_
#define SEMDEP_FEATURE_EVAL_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "semdep/dep_graph.h"
#include "semdep/feature_template.h"
#include "semdep/pruning.h"

namespace semdep {

// Value of an absent navigation target or state entry.
inline constexpr std::string_view kNil = "^NIL";

struct SemanticArc {
  int predicate = 0;
  int argument = 0;
  std::string role;
};

// Partial semantic tree: assigned senses and role arcs so far. Cheap to copy
// for the sentence sizes involved.
class SemanticState {
 public:
  SemanticState() : SemanticState(0) {}
  explicit SemanticState(int sentence_size)
      : senses_(std::make_shared<std::vector<std::string>>(sentence_size + 1)) {}

  int size() const { return static_cast<int>(senses_->size()) - 1; }

  // Empty string: not (yet) a predicate.
  const std::string &sense(int token) const { return (*senses_)[token]; }
  void SetSense(int token, std::string sense);

  const std::vector<SemanticArc> &arcs() const { return arcs_; }
  void AddArc(int predicate, int argument, std::string role) {
    arcs_.push_back({predicate, argument, std::move(role)});
  }
  // Role of `argument` under `predicate`, or nullptr.
  const std::string *Role(int predicate, int argument) const;
  // True if `role` was assigned under `predicate` to a word other than
  // `except`.
  bool HasRole(int predicate, std::string_view role, int except) const;
  // True if arc (x, y) would strictly interleave an existing arc.
  bool Crosses(int x, int y) const;
  int ArgumentCount() const { return static_cast<int>(arcs_.size()); }

 private:
  // Shared between copies until one of them writes.
  std::shared_ptr<std::vector<std::string>> senses_;
  std::vector<SemanticArc> arcs_;
};

struct EvalOptions {
  // Report raw distances instead of the buckets 0..5, 6-10, >10.
  bool raw_distance = false;
  std::vector<std::string> passive_pos = {"VBN"};
  std::vector<std::string> passive_aux = {"be", "get"};
};

// One word pair in its sentence and partial semantic structure. The argument
// anchor `a` is the dependent; the predicate anchor `p` is the head, or the
// candidate itself for predicate-stage pairs. The current predicate is `p`.
struct EvalContext {
  const DepGraph *graph = nullptr;
  const SemanticState *state = nullptr;
  const EvalOptions *options = nullptr;
  int head = kVirtualRoot;
  int dependent = 0;
  PairStage stage = PairStage::kArgument;

  int a() const { return dependent; }
  int p() const { return stage == PairStage::kPredicate ? dependent : head; }
};

// Template value without the "<id>=" prefix.
std::string EvaluateValue(const FeatureTemplate &t, const EvalContext &ctx);
// "<id>=<value>".
std::string Evaluate(const FeatureTemplate &t, int id, const EvalContext &ctx);

// Joining with "#". Elements are escaped so the joined string is unambiguous.
std::string EscapeToken(std::string_view token);
std::string ReduceSeq(const std::vector<std::string> &escaped);
std::string ReduceNoDup(const std::vector<std::string> &escaped);
std::string ReduceBag(const std::vector<std::string> &escaped);

std::string DistanceBucket(int distance);

}  // namespace semdep

#endif  // SEMDEP_FEATURE_EVAL_H_
