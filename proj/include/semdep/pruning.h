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

#ifndef SEMDEP_PRUNING_H_
#define SEMDEP_PRUNING_H_

#include <optional>
#include <string>
#include <vector>

#include "semdep/conll.h"
#include "semdep/dep_graph.h"
#include "semdep/labels.h"

namespace semdep {

// Head id of predicate-stage pairs.
inline constexpr int kVirtualRoot = 0;

enum class PairStage { kPredicate, kArgument };

struct WordPair {
  int head = kVirtualRoot;  // kVirtualRoot for predicate-stage pairs
  int dependent = 0;
  PairStage stage = PairStage::kPredicate;
  std::optional<std::string> label;

  bool operator==(const WordPair &) const = default;
};

// A run of argument candidates that the decoder consumes in order. A
// hypothesis that assigns `stop_label` to a candidate stops consuming the
// segment; if `stop_ends_traversal` it also skips every later segment.
struct CandidateSegment {
  std::vector<int> candidates;
  std::string stop_label;  // empty: the segment has no stop label
  bool stop_ends_traversal = false;
};

// Candidate order for one predicate, shared by training and decoding.
struct Traversal {
  std::vector<CandidateSegment> segments;
  int CandidateCount() const;
  std::vector<int> Flatten() const;
};

// Verbs and nouns in text order.
std::vector<int> PredicateCandidates(const Sentence &sentence,
                                     const PosClasses &classes = {});

// Tree traversal levels: the predicate's children; the predicate itself if
// nominal; then for each ancestor, the ancestor alone followed by its
// not-yet-collected children. Empty levels are dropped.
std::vector<std::vector<int>> SynTraverse(int predicate, const DepGraph &graph,
                                          bool is_nominal);

struct LinearStreams {
  int self = 0;
  std::vector<int> left;   // p-1, p-2, ..., 1
  std::vector<int> right;  // p+1, ..., n
};
LinearStreams LinTraverse(int predicate, int sentence_size);

// Decoder view of the candidates of `predicate` under `scheme`.
Traversal BuildTraversal(int predicate, const DepGraph &graph,
                         TraverseScheme scheme);

struct PairOptions {
  // Off: emit the whole traversal, NONE_ARG past saturation, no stop labels.
  bool adaptive = true;
};

// Labeled training pairs of a gold sentence: one predicate-stage pair per
// predicate candidate, then per gold predicate (text order) the
// argument-stage pairs in traversal order with the adaptive stop labels.
std::vector<WordPair> GenerateTrainingPairs(const Sentence &sentence,
                                            const DepGraph &graph,
                                            TraverseScheme scheme,
                                            PairOptions options = {});

// Argument-stage pairs of one gold frame.
std::vector<WordPair> GenerateArgumentPairs(const Sentence &sentence,
                                            const DepGraph &graph,
                                            const SemanticFrame &frame,
                                            TraverseScheme scheme,
                                            PairOptions options = {});

struct PruneStats {
  long long pairs_before = 0;  // argument pairs without any pruning
  long long pairs_after = 0;   // argument-stage pairs emitted
  long long gold_arguments = 0;
  long long covered_arguments = 0;  // gold arguments among the candidates
  int sentences = 0;
  int predicates = 0;

  double ReductionPercent() const;  // negative, as in "-50.70"
  double CoveragePercent() const;   // 100 for an empty corpus
};

PruneStats CoverageAndReductionStats(const std::vector<Sentence> &corpus,
                                     TraverseScheme scheme,
                                     const PosClasses &classes = {},
                                     PairOptions options = {});

}  // namespace semdep

#endif  // SEMDEP_PRUNING_H_
