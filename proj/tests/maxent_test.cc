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


#include "semdep/maxent.h"

#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "semdep/error.h"
#include "semdep/lbfgs.h"

namespace semdep {
namespace {

// Negative log-likelihood plus the Gaussian prior, written out directly.
double ReferenceObjective(const std::vector<double> &w,
                          const std::vector<IndexedSample> &samples, int L,
                          double sigma2) {
  double total = 0;
  for (const IndexedSample &s : samples) {
    std::vector<double> score(L, 0.0);
    for (int l = 0; l < L; ++l) {
      for (int f : s.features) score[l] += w[f * L + l];
    }
    double z = 0;
    for (double v : score) z += std::exp(v);
    total += std::log(z) - score[s.label];
  }
  for (double x : w) total += x * x / (2 * sigma2);
  return total;
}

std::vector<IndexedSample> RandomSamples(std::mt19937_64 *rng, int nf, int L,
                                         int n) {
  std::vector<IndexedSample> out(n);
  for (auto &s : out) {
    for (int f = 0; f < nf; ++f) {
      if ((*rng)() % 2) s.features.push_back(f);
    }
    s.label = static_cast<int>((*rng)() % L);
  }
  return out;
}

TEST(ObjectiveTest, MatchesDirectFormula) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 20; ++trial) {
    int nf = 1 + trial % 7, L = 2 + trial % 4;
    auto samples = RandomSamples(&rng, nf, L, 30);
    std::vector<double> w(nf * L);
    for (double &x : w) x = normal(rng);
    std::vector<double> g;
    double v = ObjectiveAndGradient(w, samples, L, 2.0, &g);
    EXPECT_NEAR(v, ReferenceObjective(w, samples, L, 2.0), 1e-9 * (1 + v));
  }
}

TEST(ObjectiveTest, ThreadCountDoesNotChangeBits) {
  std::mt19937_64 rng(2);
  auto samples = RandomSamples(&rng, 10, 3, 500);
  std::vector<double> w(30, 0.1), g1, g4;
  double v1 = ObjectiveAndGradient(w, samples, 3, 1.0, &g1, 1);
  double v4 = ObjectiveAndGradient(w, samples, 3, 1.0, &g4, 4);
  EXPECT_EQ(v1, v4);
  EXPECT_EQ(g1, g4);
  std::vector<double> g3;
  EXPECT_EQ(ObjectiveAndGradient(w, samples, 3, 1.0, &g3, 3), v1);
  EXPECT_EQ(g3, g1);
  std::vector<double> again;
  EXPECT_EQ(ObjectiveAndGradient(w, samples, 3, 1.0, &again, 4), v4);
  EXPECT_EQ(again, g4);
}

TEST(ObjectiveTest, RejectsBadInput) {
  std::vector<double> g;
  std::vector<IndexedSample> bad = {{{5}, 0}};
  EXPECT_THROW(ObjectiveAndGradient({0, 0}, bad, 2, 1.0, &g), Error);
  EXPECT_THROW(ObjectiveAndGradient({0, 0, 0}, {}, 2, 1.0, &g), Error);
}

TEST(LbfgsTest, Quadratic) {
  auto f = [](const std::vector<double> &x, std::vector<double> *g) {
    double v = 0;
    g->assign(x.size(), 0);
    for (size_t i = 0; i < x.size(); ++i) {
      double c = static_cast<double>(i + 1);
      v += c * (x[i] - 1) * (x[i] - 1);
      (*g)[i] = 2 * c * (x[i] - 1);
    }
    return v;
  };
  LbfgsResult r = MinimizeLbfgs(f, std::vector<double>(5, -3.0), {});
  EXPECT_TRUE(r.converged);
  for (double x : r.x) EXPECT_NEAR(x, 1.0, 1e-4);
  for (size_t i = 1; i < r.history.size(); ++i) {
    EXPECT_LT(r.history[i], r.history[i - 1]);
  }
}

TEST(LbfgsTest, Rosenbrock) {
  auto f = [](const std::vector<double> &x, std::vector<double> *g) {
    double a = 1 - x[0], b = x[1] - x[0] * x[0];
    *g = {-2 * a - 400 * x[0] * b, 200 * b};
    return a * a + 100 * b * b;
  };
  LbfgsConfig c;
  c.max_iterations = 500;
  c.tolerance = 1e-8;
  LbfgsResult r = MinimizeLbfgs(f, {-1.2, 1.0}, c);
  EXPECT_NEAR(r.x[0], 1.0, 1e-4);
  EXPECT_NEAR(r.x[1], 1.0, 1e-4);
}

std::vector<Sample> ToySamples() {
  std::vector<Sample> s;
  for (int i = 0; i < 20; ++i) {
    s.push_back({{"w=dog", "bias"}, "A0"});
    s.push_back({{"w=cat", "bias"}, "A1"});
    s.push_back({{"w=the", "bias"}, "NONE_ARG"});
  }
  s.push_back({{"w=rare", "bias"}, "A1"});
  return s;
}

TEST(MaxEntTest, LearnsSeparableData) {
  TrainConfig c;
  c.sigma2 = 10;
  MaxEntModel m = TrainMaxEnt(ToySamples(), c);
  EXPECT_EQ(m.labels(), (std::vector<std::string>{"A0", "A1", "NONE_ARG"}));
  auto p = m.Predict({"w=cat", "bias"});
  EXPECT_GT(p[m.LabelIndex("A1")], 0.9);
  EXPECT_NEAR(p[0] + p[1] + p[2], 1.0, 1e-12);
  const auto &h = m.objective_history();
  ASSERT_GE(h.size(), 2u);
  for (size_t i = 1; i < h.size(); ++i) EXPECT_LE(h[i], h[i - 1]);
  EXPECT_TRUE(m.warnings().empty());
}

TEST(MaxEntTest, CutoffDropsRareFeatures) {
  TrainConfig c;
  c.cutoff = 2;
  MaxEntModel m = TrainMaxEnt(ToySamples(), c);
  EXPECT_EQ(m.features().Find("w=rare"), -1);
  EXPECT_GE(m.features().Find("w=dog"), 0);
  // Unknown features contribute nothing.
  EXPECT_EQ(m.Predict({"w=rare", "bias"}), m.Predict({"bias"}));
}

TEST(MaxEntTest, LabelOrderFollowsLabelSet) {
  std::vector<Sample> s = {{{}, "zz"}, {{}, "A0"}, {{}, "NONE_PRED"},
                           {{}, "01"}, {{}, "noMoreArg"}};
  EXPECT_EQ(OrderLabels(s), (std::vector<std::string>{
                                "01", "NONE_PRED", "A0", "noMoreArg", "zz"}));
}

TEST(MaxEntTest, SingleLabelWarns) {
  MaxEntModel m = TrainMaxEnt({{{"x"}, "A0"}, {{"y"}, "A0"}}, TrainConfig{});
  ASSERT_FALSE(m.warnings().empty());
  EXPECT_EQ(m.Predict({"x"}), std::vector<double>{1.0});
}

TEST(MaxEntTest, RejectsBadConfig) {
  TrainConfig c;
  c.sigma2 = 0;
  EXPECT_THROW(TrainMaxEnt(ToySamples(), c), Error);
  EXPECT_THROW(TrainMaxEnt({}, TrainConfig{}), Error);
}

TEST(MaxEntTest, SaveLoadRoundTrip) {
  MaxEntModel m = TrainMaxEnt(ToySamples(), TrainConfig{});
  m.set_provenance("toy");
  std::ostringstream out;
  m.Save(out);
  std::istringstream in(out.str());
  MaxEntModel back = MaxEntModel::Load(in);
  EXPECT_EQ(back.labels(), m.labels());
  EXPECT_EQ(back.weights(), m.weights());
  EXPECT_EQ(back.provenance(), "toy");
  std::ostringstream again;
  back.Save(again);
  EXPECT_EQ(again.str(), out.str());
}

TEST(MaxEntTest, LoadReportsCorruptLine) {
  MaxEntModel m = TrainMaxEnt(ToySamples(), TrainConfig{});
  std::ostringstream out;
  m.Save(out);
  std::string text = out.str();
  text.replace(text.find("labels 3"), 8, "labels x");
  std::istringstream in(text);
  try {
    MaxEntModel::Load(in);
    FAIL();
  } catch (const FormatError &e) {
    EXPECT_EQ(e.line(), 6);
  }
  std::istringstream truncated(out.str().substr(0, out.str().size() / 2));
  EXPECT_THROW(MaxEntModel::Load(truncated), FormatError);
}

TEST(MaxEntTest, FeatureIndexFreeze) {
  FeatureIndex idx;
  EXPECT_EQ(idx.Add("a"), 0);
  EXPECT_EQ(idx.Add("b"), 1);
  EXPECT_EQ(idx.Add("a"), 0);
  idx.Freeze();
  EXPECT_EQ(idx.Add("c"), -1);
  EXPECT_EQ(idx.Find("b"), 1);
  EXPECT_EQ(idx.size(), 2);
}

TEST(MaxEntTest, SoftmaxIsStable) {
  auto p = Softmax({1000.0, 1000.0});
  EXPECT_DOUBLE_EQ(p[0], 0.5);
}

}  // namespace
}  // namespace semdep
