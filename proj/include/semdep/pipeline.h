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

#ifndef SEMDEP_PIPELINE_H_
#define SEMDEP_PIPELINE_H_

#include <functional>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "semdep/conll.h"
#include "semdep/dep_graph.h"
#include "semdep/feature_eval.h"
#include "semdep/labels.h"
#include "semdep/maxent.h"
#include "semdep/pruning.h"
#include "semdep/template_set.h"

namespace semdep {

// Everything needed to parse: traversal scheme, templates and classifier.
// Feature strings are "<position in templates>=<value>".
struct ParserModel {
  TraverseScheme scheme = TraverseScheme::kSynPth;
  TemplateSet templates;
  EvalOptions eval;
  PosClasses classes;
  MaxEntModel maxent;

  void Save(std::ostream &out) const;
  static ParserModel Load(std::istream &in);
  void SaveFile(const std::string &path) const;
  static ParserModel LoadFile(const std::string &path);
};

struct PipelineOptions {
  TraverseScheme scheme = TraverseScheme::kSynPth;
  PairOptions pairs;
  EvalOptions eval;
  PosClasses classes;
  int threads = 1;
};

// Visits the training pairs of a gold sentence in order, with the partial
// semantic structure built from the gold labels of the pairs before it.
void WalkTrainingPairs(
    const Sentence &sentence, const DepGraph &graph, TraverseScheme scheme,
    PairOptions options,
    const std::function<void(const WordPair &, const SemanticState &)> &visit);

// Template values of every training pair: values[i][t] is the value of
// template t on pair i.
struct FeatureTable {
  std::vector<std::string> labels;
  std::vector<PairStage> stages;
  std::vector<std::vector<std::string>> values;

  int size() const { return static_cast<int>(labels.size()); }
  // Samples restricted to `subset` (template indices); features are named by
  // position within the subset.
  std::vector<Sample> Samples(const std::vector<int> &subset) const;
};

FeatureTable ExtractFeatureTable(const std::vector<Sentence> &corpus,
                                 const TemplateSet &templates,
                                 const PipelineOptions &options);

ParserModel TrainParser(const std::vector<Sentence> &corpus,
                        const TemplateSet &templates,
                        const PipelineOptions &options,
                        const TrainConfig &config);

// Trains on precomputed values of the templates in `subset`.
ParserModel TrainParserFromTable(const FeatureTable &table,
                                 const TemplateSet &all_templates,
                                 const std::vector<int> &subset,
                                 const PipelineOptions &options,
                                 const TrainConfig &config);

}  // namespace semdep

#endif  // SEMDEP_PIPELINE_H_
