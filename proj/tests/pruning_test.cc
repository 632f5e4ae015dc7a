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


#include "semdep/pruning.h"

#include <map>
#include <set>

#include <gtest/gtest.h>

#include "semdep/synthetic.h"
#include "test_util.h"

namespace semdep {
namespace {

TEST(PruningTest, PredicateCandidatesUsePosFilter) {
  Sentence s = testing::ShiftedSentence();
  EXPECT_EQ(PredicateCandidates(s), (std::vector<int>{1, 2, 3, 6, 7}));
}

TEST(PruningTest, SyntacticLevels) {
  Sentence s = testing::ShiftedSentence();
  DepGraph g(s);
  // shifted: its children, then its head, then the head's other children.
  EXPECT_EQ(SynTraverse(3, g, false),
            (std::vector<std::vector<int>>{{2, 4}, {7}, {5, 6, 8}}));
  // A nominal predicate sees itself after its children.
  EXPECT_EQ(SynTraverse(2, g, true),
            (std::vector<std::vector<int>>{{1}, {2}, {3}, {4}, {7}, {5, 6, 8}}));
}

TEST(PruningTest, LinearStreams) {
  LinearStreams s = LinTraverse(3, 5);
  EXPECT_EQ(s.self, 3);
  EXPECT_EQ(s.left, (std::vector<int>{2, 1}));
  EXPECT_EQ(s.right, (std::vector<int>{4, 5}));
  Traversal t = BuildTraversal(3, DepGraph(testing::ShiftedSentence()),
                               TraverseScheme::kLinPth);
  ASSERT_EQ(t.segments.size(), 3u);
  EXPECT_EQ(t.segments[1].stop_label, "noMoreLeftArg");
  EXPECT_EQ(t.CandidateCount(), 8);
}

TEST(PruningTest, LinearWithoutAdaptationKeepsEverything) {
  Sentence s = testing::LinearExample();
  DepGraph g(s);
  auto pairs = GenerateArgumentPairs(s, g, s.frames[0], TraverseScheme::kLinPth,
                                     PairOptions{false});
  EXPECT_EQ(pairs.size(), 9u);
  for (const WordPair &w : pairs) EXPECT_FALSE(IsAuxiliaryLabel(*w.label));
}

TEST(PruningTest, PredicateWithoutArgumentsStopsAtOnce) {
  Sentence s = testing::ShiftedSentence();
  s.frames[0].arguments.clear();
  DepGraph g(s);
  auto pairs = GenerateArgumentPairs(s, g, s.frames[0], TraverseScheme::kSynPth);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(*pairs[0].label, "noMoreArg");
  auto lin = GenerateArgumentPairs(s, g, s.frames[0], TraverseScheme::kLinPth);
  ASSERT_EQ(lin.size(), 3u);
  EXPECT_EQ(*lin[1].label, "noMoreLeftArg");
  EXPECT_EQ(*lin[2].label, "noMoreRightArg");
}

// Adaptive pairs are the full traversal cut after the last argument's level,
// followed by at most one stop label, and keep every reachable argument.
TEST(PruningTest, AdaptiveIsPrefixOfFullTraversal) {
  GrammarParams gp;
  gp.unreachable_rate = 0.3;
  for (const Sentence &s : GenerateSyntheticCorpus(12, 300, gp)) {
    DepGraph g(s);
    for (const SemanticFrame &f : s.frames) {
      for (TraverseScheme scheme :
           {TraverseScheme::kSynPth, TraverseScheme::kLinPth}) {
        auto full = GenerateArgumentPairs(s, g, f, scheme, PairOptions{false});
        auto cut = GenerateArgumentPairs(s, g, f, scheme, PairOptions{true});
        std::map<int, std::string> full_labels;
        for (const auto &w : full) full_labels[w.dependent] = *w.label;
        int stops = 0;
        std::set<int> cut_args;
        for (const auto &w : cut) {
          if (IsAuxiliaryLabel(*w.label)) {
            ++stops;
            EXPECT_EQ(full_labels[w.dependent], "NONE_ARG");
          } else {
            EXPECT_EQ(full_labels[w.dependent], *w.label);
            if (IsArgumentRole(*w.label)) cut_args.insert(w.dependent);
          }
        }
        std::set<int> full_args;
        for (const auto &[d, l] : full_labels) {
          if (IsArgumentRole(l)) full_args.insert(d);
        }
        EXPECT_EQ(cut_args, full_args);
        EXPECT_LE(stops, scheme == TraverseScheme::kSynPth ? 1 : 2);
        EXPECT_LE(cut.size(), full.size() + stops);
      }
    }
  }
}

TEST(PruningTest, StatsOnReferenceSentence) {
  std::vector<Sentence> corpus = {testing::ShiftedSentence()};
  PruneStats syn = CoverageAndReductionStats(corpus, TraverseScheme::kSynPth);
  EXPECT_EQ(syn.predicates, 3);
  EXPECT_EQ(syn.gold_arguments, 5);
  EXPECT_EQ(syn.covered_arguments, 5);
  EXPECT_EQ(syn.pairs_after, 9);
  EXPECT_EQ(syn.pairs_before, 24);
  EXPECT_DOUBLE_EQ(syn.CoveragePercent(), 100.0);
  EXPECT_NEAR(syn.ReductionPercent(), -62.5, 1e-12);
  EXPECT_DOUBLE_EQ(PruneStats{}.CoveragePercent(), 100.0);
}

}  // namespace
}  // namespace semdep
