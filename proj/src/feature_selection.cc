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

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "semdep/error.h"
#include "semdep/evaluation.h"

namespace semdep {
namespace {

TemplateSubset Without(const TemplateSubset &s, int f) {
  TemplateSubset out;
  out.reserve(s.size());
  for (int x : s) {
    if (x != f) out.push_back(x);
  }
  return out;
}

}  // namespace

TemplateSubset Normalized(TemplateSubset s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

long long SelectionReport::CallBound() const {
  return static_cast<long long>(k1) *
         (max_complement + 2LL * k2 * max_shaken);
}

FeatureSelector::FeatureSelector(int space_size, SubsetScorer scorer,
                                 SelectionConfig config)
    : n_(space_size), scorer_(std::move(scorer)), config_(std::move(config)) {
  if (n_ <= 0) throw Error("the template space is empty");
  if (!(config_.init_fraction > 0 && config_.init_fraction <= 1)) {
    throw Error("init_fraction must be in (0, 1]");
  }
  for (int f : config_.initial) {
    if (f < 0 || f >= n_) throw Error("initial template index out of range");
  }
}

bool FeatureSelector::Cached(const TemplateSubset &s) const {
  return cache_.count(Normalized(s)) > 0;
}

double FeatureSelector::Score(const TemplateSubset &s) {
  TemplateSubset key = Normalized(s);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  double v = scorer_(key);
  ++routine_calls_;
  cache_.emplace(std::move(key), v);
  return v;
}

void FeatureSelector::ScoreAll(const std::vector<TemplateSubset> &sets) {
  std::vector<TemplateSubset> missing;
  for (const auto &s : sets) {
    TemplateSubset key = Normalized(s);
    if (!cache_.count(key) &&
        std::find(missing.begin(), missing.end(), key) == missing.end()) {
      missing.push_back(std::move(key));
    }
  }
  int threads = std::max(1, std::min<int>(config_.threads, missing.size()));
  if (threads <= 1) {
    for (const auto &s : missing) Score(s);
    return;
  }
  std::vector<double> values(missing.size());
  std::vector<std::thread> workers;
  for (int t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      for (size_t i = t; i < missing.size(); i += threads) {
        values[i] = scorer_(missing[i]);
      }
    });
  }
  for (auto &w : workers) w.join();
  for (size_t i = 0; i < missing.size(); ++i) {
    cache_.emplace(missing[i], values[i]);
    ++routine_calls_;
  }
}

std::vector<int> FeatureSelector::RecruitMore(const TemplateSubset &s) {
  TemplateSubset base = Normalized(s);
  double p = Score(base);
  std::vector<TemplateSubset> trials;
  std::vector<int> complement;
  for (int f = 0; f < n_; ++f) {
    if (std::binary_search(base.begin(), base.end(), f)) continue;
    complement.push_back(f);
    TemplateSubset t = base;
    t.push_back(f);
    trials.push_back(Normalized(std::move(t)));
  }
  ScoreAll(trials);
  std::vector<int> recruited;
  for (size_t i = 0; i < complement.size(); ++i) {
    if (p < Score(trials[i])) recruited.push_back(complement[i]);
  }
  return recruited;
}

TemplateSubset FeatureSelector::ShakeOff(const TemplateSubset &s_max_in,
                                         int *passes) {
  TemplateSubset s_max = Normalized(s_max_in);
  int count = 0;
  while (true) {
    ++count;
    TemplateSubset s0 = s_max;
    std::vector<TemplateSubset> drops;
    for (int f : s0) drops.push_back(Without(s0, f));
    ScoreAll(drops);
    // Descending scr(S - {f}): least important first. Ties keep FT order.
    std::vector<int> order = s0;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return Score(Without(s0, a)) > Score(Without(s0, b));
    });
    double best = Score(s_max);
    for (size_t i = 1; i < order.size(); ++i) {
      TemplateSubset s(order.begin() + i, order.end());
      double v = Score(s);
      if (v >= best) {
        best = v;
        s_max = Normalized(std::move(s));
      }
    }
    if (s0 == s_max) break;
  }
  if (passes) *passes = count;
  return s_max;
}

TemplateSubset FeatureSelector::InitialSet() const {
  if (!config_.initial.empty()) return Normalized(config_.initial);
  int k = static_cast<int>(std::ceil(config_.init_fraction * n_ - 1e-9));
  k = std::clamp(k, 1, n_);
  std::vector<int> all(n_);
  for (int i = 0; i < n_; ++i) all[i] = i;
  std::mt19937_64 rng(config_.seed);
  for (int i = n_ - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % static_cast<uint64_t>(i + 1));
    std::swap(all[i], all[j]);
  }
  all.resize(k);
  return Normalized(all);
}

SelectionReport FeatureSelector::Run() {
  SelectionReport report;
  TemplateSubset s = InitialSet();
  report.initial = s;
  report.initial_score = Score(s);
  while (true) {
    SelectionIteration it;
    it.index = ++report.k1;
    it.set_size = static_cast<int>(s.size());
    it.complement = n_ - it.set_size;
    report.max_complement = std::max(report.max_complement, it.complement);
    it.score = Score(s);
    it.recruited = RecruitMore(s);
    if (it.recruited.empty()) {
      report.iterations.push_back(std::move(it));
      break;
    }
    TemplateSubset grown = s;
    grown.insert(grown.end(), it.recruited.begin(), it.recruited.end());
    grown = Normalized(std::move(grown));
    it.shaken_size = static_cast<int>(grown.size());
    report.max_shaken = std::max(report.max_shaken, it.shaken_size);
    it.result = ShakeOff(grown, &it.shakeoff_passes);
    report.k2 = std::max(report.k2, it.shakeoff_passes);
    it.result_score = Score(it.result);
    it.accepted = !(it.score >= it.result_score);
    bool stop = !it.accepted;
    if (it.accepted) s = it.result;
    report.iterations.push_back(std::move(it));
    if (stop) break;
  }
  report.selected = s;
  report.selected_score = Score(s);
  report.routine_calls = routine_calls_;

  if (config_.importance) {
    std::vector<TemplateSubset> drops;
    for (int f : s) drops.push_back(Without(s, f));
    ScoreAll(drops);
    report.importance_calls = routine_calls_ - report.routine_calls;
    for (int f : s) {
      report.importance.push_back(
          {f, report.selected_score - Score(Without(s, f)), 0});
    }
    std::stable_sort(report.importance.begin(), report.importance.end(),
                     [](const TemplateImportance &a, const TemplateImportance &b) {
                       return a.drop > b.drop;
                     });
    for (size_t i = 0; i < report.importance.size(); ++i) {
      report.importance[i].rank = static_cast<int>(i) + 1;
    }
  }
  return report;
}

TemplateSet SubsetOf(const TemplateSet &space, const TemplateSubset &subset) {
  TemplateSet out(space.name());
  out.set_provenance(space.provenance());
  for (int t : subset) out.Add(space[t]);
  return out;
}

DevSetScorer::DevSetScorer(const std::vector<Sentence> &train,
                           const std::vector<Sentence> &dev,
                           const TemplateSet &space, PipelineOptions pipeline,
                           TrainConfig train_config, DecodeConfig decode)
    : dev_(dev),
      space_(space),
      pipeline_(std::move(pipeline)),
      train_config_(train_config),
      decode_(decode),
      table_(ExtractFeatureTable(train, space, pipeline_)) {}

double DevSetScorer::operator()(const TemplateSubset &subset) const {
  ParserModel model =
      TrainParserFromTable(table_, space_, subset, pipeline_, train_config_);
  Decoder decoder(model, decode_);
  std::vector<Sentence> predicted = decoder.AnnotateCorpus(dev_);
  ScoreOptions options;
  options.classes = pipeline_.classes;
  return Score(dev_, predicted, options).sem_f1().value_or(0.0);
}

SubsetScorer DevSetScorer::AsFunction() const {
  return [this](const TemplateSubset &s) { return (*this)(s); };
}

}  // namespace semdep
