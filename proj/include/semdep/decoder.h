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

#ifndef SEMDEP_DECODER_H_
#define SEMDEP_DECODER_H_

#include <string>
#include <utility>
#include <vector>

#include "semdep/conll.h"
#include "semdep/dep_graph.h"
#include "semdep/feature_eval.h"
#include "semdep/pipeline.h"

namespace semdep {

enum class MaskPolicy {
  kStage,  // each stage only sees its own labels
  kNone,   // all labels; off-stage labels count as "no argument"
};

struct DecodeConfig {
  int beam = 8;
  MaskPolicy mask = MaskPolicy::kStage;
  // Disallow roles whose arc would cross an arc already in the structure.
  bool forbid_crossing = false;
  // Largest traversal ExhaustiveDecode accepts.
  int exhaustive_cap = 8;
};

struct Assignment {
  int candidate = 0;
  std::string label;
};

struct ArgumentDecode {
  std::vector<Argument> arguments;  // text order
  std::vector<Assignment> assignments;  // every classified pair, in order
  double log_prob = 0;
  SemanticState state;  // input state plus the chosen arcs
};

class Decoder {
 public:
  // `model` must outlive the decoder.
  Decoder(const ParserModel &model, DecodeConfig config = {});

  const DecodeConfig &config() const { return config_; }

  // (token, sense) for each candidate whose best label is a sense. Senses are
  // written into *state as they are decided.
  std::vector<std::pair<int, std::string>> IdentifyPredicates(
      const DepGraph &graph, SemanticState *state) const;

  ArgumentDecode BeamDecode(int predicate, const DepGraph &graph,
                            const SemanticState &state) const;
  // True argmax of the same scoring by enumeration. Throws Error when the
  // traversal has more than exhaustive_cap candidates.
  ArgumentDecode ExhaustiveDecode(int predicate, const DepGraph &graph,
                                  const SemanticState &state) const;

  std::vector<SemanticFrame> ParseSentence(const Sentence &sentence) const;
  // Copy of `sentence` with frames and the predicate column replaced.
  Sentence Annotate(const Sentence &sentence) const;
  std::vector<Sentence> AnnotateCorpus(const std::vector<Sentence> &corpus,
                                       int threads = 1) const;

 private:
  struct Step;
  struct Hypothesis;
  class Scorer;

  const ParserModel &model_;
  DecodeConfig config_;
  std::vector<int> static_templates_, dynamic_templates_;
  std::vector<int> predicate_labels_;  // model label ids
  std::vector<int> role_labels_;       // roles and NONE_ARG
  int none_arg_ = -1;
};

}  // namespace semdep

#endif  // SEMDEP_DECODER_H_
