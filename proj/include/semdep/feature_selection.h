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

#ifndef SEMDEP_FEATURE_SELECTION_H_
#define SEMDEP_FEATURE_SELECTION_H_

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "semdep/conll.h"
#include "semdep/decoder.h"
#include "semdep/pipeline.h"
#include "semdep/template_set.h"

namespace semdep {

// A template subset is a sorted list of indices into the full space FT.
using TemplateSubset = std::vector<int>;

// Train-and-test routine: the dev score of a model using a subset. Must be
// safe to call from several threads at once.
using SubsetScorer = std::function<double(const TemplateSubset &)>;

struct SelectionConfig {
  double init_fraction = 0.1;  // of |FT|, rounded up
  uint64_t seed = 1;
  int threads = 1;  // concurrent recruit evaluations
  bool importance = true;
  // Explicit initial set; overrides init_fraction and seed when non-empty.
  TemplateSubset initial;
};

struct SelectionIteration {
  int index = 0;                // 1-based outer iteration
  int set_size = 0;             // |S| at the start
  int complement = 0;           // |FT - S|
  double score = 0;             // scr(S)
  std::vector<int> recruited;   // C_r
  int shakeoff_passes = 0;
  int shaken_size = 0;          // |S + C_r|
  std::vector<int> result;      // S'
  double result_score = 0;      // scr(S')
  bool accepted = false;        // S' replaced S
};

struct TemplateImportance {
  int templ = 0;
  double drop = 0;  // scr(S) - scr(S - {f})
  int rank = 0;     // 1 = most important
};

struct SelectionReport {
  TemplateSubset initial;
  double initial_score = 0;
  TemplateSubset selected;
  double selected_score = 0;
  std::vector<SelectionIteration> iterations;
  int k1 = 0;  // outer iterations
  int k2 = 0;  // most SHAKEOFF passes in one call
  int max_complement = 0;  // largest |FT - S|
  int max_shaken = 0;      // largest |S_max| handed to SHAKEOFF
  long long routine_calls = 0;
  long long importance_calls = 0;
  std::vector<TemplateImportance> importance;  // in rank order

  // k1 * (|FT - S| + 2 * k2 * |S_max|)
  long long CallBound() const;
};

class FeatureSelector {
 public:
  FeatureSelector(int space_size, SubsetScorer scorer,
                  SelectionConfig config = {});

  // Cached; counts a routine call on every miss.
  double Score(const TemplateSubset &s);
  bool Cached(const TemplateSubset &s) const;
  long long routine_calls() const { return routine_calls_; }

  std::vector<int> RecruitMore(const TemplateSubset &s);
  TemplateSubset ShakeOff(const TemplateSubset &s_max, int *passes = nullptr);
  TemplateSubset InitialSet() const;
  SelectionReport Run();

 private:
  void ScoreAll(const std::vector<TemplateSubset> &sets);

  int n_;
  SubsetScorer scorer_;
  SelectionConfig config_;
  std::map<TemplateSubset, double> cache_;
  long long routine_calls_ = 0;
};

TemplateSubset Normalized(TemplateSubset s);

// Sem-F1 on `dev` of a parser trained on `train` with a template subset.
class DevSetScorer {
 public:
  DevSetScorer(const std::vector<Sentence> &train,
               const std::vector<Sentence> &dev, const TemplateSet &space,
               PipelineOptions pipeline, TrainConfig train_config,
               DecodeConfig decode);

  double operator()(const TemplateSubset &subset) const;
  SubsetScorer AsFunction() const;

 private:
  const std::vector<Sentence> &dev_;
  const TemplateSet &space_;
  PipelineOptions pipeline_;
  TrainConfig train_config_;
  DecodeConfig decode_;
  FeatureTable table_;
};

TemplateSet SubsetOf(const TemplateSet &space, const TemplateSubset &subset);

}  // namespace semdep

#endif  // SEMDEP_FEATURE_SELECTION_H_
