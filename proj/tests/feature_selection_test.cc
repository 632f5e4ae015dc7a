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


#include "semdep/feature_selection.h"

#include <atomic>
#include <set>

#include <gtest/gtest.h>

#include "semdep/error.h"
#include "semdep/synthetic.h"
#include "test_util.h"

namespace semdep {
namespace {

// Additive scores make every step of the search predictable by hand.
struct Additive {
  std::vector<double> weight;
  std::shared_ptr<std::atomic<int>> calls = std::make_shared<std::atomic<int>>(0);

  double operator()(const TemplateSubset &s) const {
    ++*calls;
    double v = 0;
    for (int f : s) v += weight[f];
    return v;
  }
};

const std::vector<double> kWeights = {3, -1, 2, 0, -2, 1, 0, -1};

TEST(FeatureSelectionTest, ScoresAreCached) {
  Additive a{kWeights};
  FeatureSelector sel(8, a);
  EXPECT_FALSE(sel.Cached({2, 0}));
  EXPECT_DOUBLE_EQ(sel.Score({2, 0}), 5);
  EXPECT_DOUBLE_EQ(sel.Score({0, 2, 2}), 5);
  EXPECT_TRUE(sel.Cached({0, 2}));
  EXPECT_EQ(sel.routine_calls(), 1);
  EXPECT_EQ(*a.calls, 1);
}

TEST(FeatureSelectionTest, RecruitNeedsStrictGain) {
  FeatureSelector sel(8, Additive{kWeights});
  EXPECT_EQ(sel.RecruitMore({1, 3}), (std::vector<int>{0, 2, 5}));
  EXPECT_EQ(sel.routine_calls(), 7);
}

TEST(FeatureSelectionTest, ShakeOffDropsTies) {
  FeatureSelector sel(8, Additive{kWeights});
  int passes = 0;
  EXPECT_EQ(sel.ShakeOff({0, 1, 2, 3, 5}, &passes), (TemplateSubset{0, 2, 5}));
  EXPECT_EQ(passes, 2);
}

TEST(FeatureSelectionTest, RunOnAdditiveScores) {
  Additive a{kWeights};
  SelectionConfig c;
  c.initial = {3, 1};
  FeatureSelector sel(8, a, c);
  SelectionReport r = sel.Run();
  EXPECT_EQ(r.initial, (TemplateSubset{1, 3}));
  EXPECT_DOUBLE_EQ(r.initial_score, -1);
  EXPECT_EQ(r.selected, (TemplateSubset{0, 2, 5}));
  EXPECT_DOUBLE_EQ(r.selected_score, 6);
  ASSERT_EQ(r.iterations.size(), 2u);
  EXPECT_TRUE(r.iterations[0].accepted);
  EXPECT_TRUE(r.iterations[1].recruited.empty());
  EXPECT_EQ(r.k1, 2);
  EXPECT_EQ(r.k2, 2);
  EXPECT_EQ(r.max_complement, 6);
  EXPECT_EQ(r.max_shaken, 5);
  EXPECT_EQ(r.CallBound(), 2 * (6 + 2 * 2 * 5));
  EXPECT_LE(r.routine_calls, r.CallBound() + 1);
  EXPECT_EQ(r.routine_calls + r.importance_calls, *a.calls);

  ASSERT_EQ(r.importance.size(), 3u);
  EXPECT_EQ(r.importance[0].templ, 0);
  EXPECT_DOUBLE_EQ(r.importance[0].drop, 3);
  EXPECT_EQ(r.importance[2].templ, 5);
  EXPECT_EQ(r.importance[2].rank, 3);
}

TEST(FeatureSelectionTest, RejectsWorseResult) {
  // Pairs with 0 beat {0}, so everything is recruited, but ties walk the
  // shake-off down to {3}, which is worse than {0}.
  auto scorer = [](const TemplateSubset &s) {
    if (s == TemplateSubset{0}) return 5.0;
    return s.size() == 2 && s[0] == 0 ? 6.0 : 0.0;
  };
  SelectionConfig c;
  c.initial = {0};
  c.importance = false;
  SelectionReport r = FeatureSelector(4, scorer, c).Run();
  EXPECT_EQ(r.selected, (TemplateSubset{0}));
  ASSERT_EQ(r.iterations.size(), 1u);
  EXPECT_EQ(r.iterations[0].recruited, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(r.iterations[0].result, (TemplateSubset{3}));
  EXPECT_FALSE(r.iterations[0].accepted);
}

TEST(FeatureSelectionTest, ThreadsDoNotChangeTheSearch) {
  std::vector<double> w;
  for (int i = 0; i < 40; ++i) w.push_back((i * 7919 % 13) - 6.0);
  SelectionConfig one;
  one.seed = 5;
  SelectionConfig four = one;
  four.threads = 4;
  SelectionReport a = FeatureSelector(40, Additive{w}, one).Run();
  SelectionReport b = FeatureSelector(40, Additive{w}, four).Run();
  EXPECT_EQ(a.selected, b.selected);
  EXPECT_EQ(a.routine_calls, b.routine_calls);
  std::set<int> positive;
  for (int i = 0; i < 40; ++i) {
    if (w[i] > 0) positive.insert(i);
  }
  EXPECT_EQ(std::set<int>(a.selected.begin(), a.selected.end()), positive);
}

TEST(FeatureSelectionTest, InitialSet) {
  auto zero = [](const TemplateSubset &) { return 0.0; };
  SelectionConfig c;
  c.seed = 11;
  TemplateSubset s = FeatureSelector(25, zero, c).InitialSet();
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s, FeatureSelector(25, zero, c).InitialSet());
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  std::set<TemplateSubset> seen;
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    c.seed = seed;
    seen.insert(FeatureSelector(25, zero, c).InitialSet());
  }
  EXPECT_GT(seen.size(), 1u);

  c.init_fraction = 0;
  EXPECT_THROW(FeatureSelector(25, zero, c), Error);
  c.init_fraction = 0.1;
  c.initial = {25};
  EXPECT_THROW(FeatureSelector(25, zero, c), Error);
  EXPECT_THROW(FeatureSelector(0, zero, SelectionConfig{}), Error);
}

TEST(DevSetScorerTest, ScoresTrainedSubsets) {
  GrammarParams g = testing::LearnableGrammar();
  auto train = GenerateSyntheticCorpus(21, 80, g);
  auto dev = GenerateSyntheticCorpus(22, 30, g);
  TemplateSet space = testing::SyntheticTemplates();
  TrainConfig tc;
  tc.sigma2 = 10;
  tc.max_iterations = 100;
  DevSetScorer scorer(train, dev, space, PipelineOptions{}, tc, DecodeConfig{});
  double empty = scorer({});
  TemplateSubset all;
  for (int i = 0; i < space.size(); ++i) all.push_back(i);
  double full = scorer(all);
  EXPECT_GT(full, empty);
  EXPECT_GT(full, 0.9);
  EXPECT_DOUBLE_EQ(scorer.AsFunction()(all), full);
  EXPECT_EQ(SubsetOf(space, {0, 2}).size(), 2);
}

}  // namespace
}  // namespace semdep
