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

#ifndef SEMDEP_EVALUATION_H_
#define SEMDEP_EVALUATION_H_

#include <optional>
#include <string>
#include <vector>

#include "semdep/conll.h"
#include "semdep/dep_graph.h"

namespace semdep {

// Labeled dependency counts for one category.
struct Counts {
  long long correct = 0;
  long long predicted = 0;
  long long gold = 0;

  // 1 when nothing was predicted.
  double Precision() const;
  // Undefined without gold dependencies.
  std::optional<double> Recall() const;
  std::optional<double> F1() const;

  Counts &operator+=(const Counts &o);
};

struct ScoreOptions {
  bool exclude_punctuation = false;  // in LAS
  PosClasses classes;
};

struct ScoreReport {
  Counts sem;   // sense and argument dependencies
  Counts pred;  // sense dependencies only
  Counts argu;  // argument dependencies only
  Counts verb;  // dependencies of verbal predicates
  Counts nomi;  // dependencies of nominal predicates
  long long las_correct = 0;
  long long las_total = 0;
  int sentences = 0;

  double sem_p() const { return sem.Precision(); }
  std::optional<double> sem_r() const { return sem.Recall(); }
  std::optional<double> sem_f1() const { return sem.F1(); }
  std::optional<double> las() const;
  std::optional<double> macro_p() const;
  std::optional<double> macro_r() const;
  std::optional<double> macro_f1() const;
  std::optional<double> sem_over_las() const;
  std::optional<double> pred_f1() const { return pred.F1(); }
  std::optional<double> argu_f1() const { return argu.F1(); }
  std::optional<double> verb_f1() const { return verb.F1(); }
  std::optional<double> nomi_f1() const { return nomi.F1(); }
};

std::optional<double> HarmonicMean(double p, std::optional<double> r);

// Throws Error when the corpora do not have the same sentences and tokens.
ScoreReport Score(const std::vector<Sentence> &gold,
                  const std::vector<Sentence> &predicted,
                  const ScoreOptions &options = {});

// Field name / percentage ("-" when undefined) rows in a fixed order.
std::vector<std::pair<std::string, std::optional<double>>> ReportFields(
    const ScoreReport &report);
std::string FormatReport(const ScoreReport &report);

}  // namespace semdep

#endif  // SEMDEP_EVALUATION_H_
