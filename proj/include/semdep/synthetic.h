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

#ifndef SEMDEP_SYNTHETIC_H_
#define SEMDEP_SYNTHETIC_H_

#include <cstdint>
#include <vector>

#include "semdep/conll.h"

namespace semdep {

// A small clause grammar whose role assignment is a deterministic function of
// syntax, lemma and voice:
//   subject (SBJ)          A0, or A1 under passive voice
//   object / clause (OBJ)  A1
//   modal (AUX, MD)        AM-MOD
//   adverb (MNR)           AM-MNR
//   preposition (ADV)      AM-LOC / AM-TMP / AM-DIR by lemma; "with" none
//   noun modifier (NMOD)   A1 of a predicate noun
// Verb senses are 01..03 by lemma. The first `predicate_nouns` noun lemmas
// are nominal predicates.
struct GrammarParams {
  int nouns = 30;
  int verbs = 12;
  int adverbs = 5;
  int predicate_nouns = 4;
  // The last `ergative_verbs` verbs take no object and give their active
  // subject A1.
  int ergative_verbs = 0;
  int max_len = 24;  // at least 3
  int max_depth = 2;  // clause embedding
  double embed_prob = 0.2;
  double object_prob = 0.7;
  double passive_prob = 0.2;
  double modal_prob = 0.15;
  double adverb_prob = 0.3;
  double pp_prob = 0.3;
  double det_prob = 0.5;
  double nmod_prob = 0.3;
  // Fraction of role-bearing prepositions whose role sits on the
  // preposition's object instead; such arguments are outside synPth reach.
  double unreachable_rate = 0.0;
};

// Deterministic for a fixed seed. Throws Error on degenerate parameters.
std::vector<Sentence> GenerateSyntheticCorpus(uint64_t seed, int count,
                                              const GrammarParams &params = {});

}  // namespace semdep

#endif  // SEMDEP_SYNTHETIC_H_
