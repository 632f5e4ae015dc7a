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

#include "semdep/evaluation.h"

#include <cstdio>
#include <map>
#include <tuple>

#include "semdep/error.h"

namespace semdep {
namespace {

using Dep = std::tuple<int, int, std::string>;  // predicate, argument, label

// Semantic dependencies of a sentence. Sense dependencies have argument 0
// and the label lemma.sense.
std::vector<Dep> Dependencies(const Sentence &s) {
  std::vector<Dep> out;
  for (const SemanticFrame &f : s.frames) {
    out.emplace_back(f.predicate, 0, s.token(f.predicate).lemma + "." + f.sense);
    for (const Argument &a : f.arguments) {
      out.emplace_back(f.predicate, a.token, a.role);
    }
  }
  return out;
}

void CheckAligned(const Sentence &g, const Sentence &p, size_t index) {
  bool ok = g.size() == p.size();
  for (int i = 1; ok && i <= g.size(); ++i) {
    ok = g.token(i).form == p.token(i).form;
  }
  if (!ok) {
    throw Error("sentence " + std::to_string(index + 1) +
                ": gold and predicted tokens differ");
  }
}

std::string Percent(std::optional<double> v) {
  if (!v) return "-";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", 100.0 * *v);
  return buf;
}

}  // namespace

double Counts::Precision() const {
  if (predicted == 0) return 1.0;
  return static_cast<double>(correct) / static_cast<double>(predicted);
}

std::optional<double> Counts::Recall() const {
  if (gold == 0) return std::nullopt;
  return static_cast<double>(correct) / static_cast<double>(gold);
}

std::optional<double> Counts::F1() const {
  return HarmonicMean(Precision(), Recall());
}

Counts &Counts::operator+=(const Counts &o) {
  correct += o.correct;
  predicted += o.predicted;
  gold += o.gold;
  return *this;
}

std::optional<double> HarmonicMean(double p, std::optional<double> r) {
  if (!r) return std::nullopt;
  if (p + *r == 0) return 0.0;
  return 2 * p * *r / (p + *r);
}

std::optional<double> ScoreReport::las() const {
  if (las_total == 0) return std::nullopt;
  return static_cast<double>(las_correct) / static_cast<double>(las_total);
}

std::optional<double> ScoreReport::macro_p() const {
  auto l = las();
  if (!l) return std::nullopt;
  return (*l + sem_p()) / 2;
}

std::optional<double> ScoreReport::macro_r() const {
  auto l = las();
  auto r = sem_r();
  if (!l || !r) return std::nullopt;
  return (*l + *r) / 2;
}

std::optional<double> ScoreReport::macro_f1() const {
  auto p = macro_p();
  if (!p) return std::nullopt;
  return HarmonicMean(*p, macro_r());
}

std::optional<double> ScoreReport::sem_over_las() const {
  auto f = sem_f1();
  auto l = las();
  if (!f || !l || *l == 0) return std::nullopt;
  return *f / *l;
}

ScoreReport Score(const std::vector<Sentence> &gold,
                  const std::vector<Sentence> &predicted,
                  const ScoreOptions &options) {
  if (gold.size() != predicted.size()) {
    throw Error("gold has " + std::to_string(gold.size()) +
                " sentences, prediction has " +
                std::to_string(predicted.size()));
  }
  ScoreReport r;
  for (size_t i = 0; i < gold.size(); ++i) {
    const Sentence &g = gold[i], &p = predicted[i];
    CheckAligned(g, p, i);
    ++r.sentences;
    for (int t = 1; t <= g.size(); ++t) {
      if (options.exclude_punctuation &&
          PosClasses::IsPunctuation(g.token(t).pos)) {
        continue;
      }
      ++r.las_total;
      if (g.token(t).head == p.token(t).head &&
          g.token(t).deprel == p.token(t).deprel) {
        ++r.las_correct;
      }
    }
    std::map<Dep, int> gold_deps;
    for (const Dep &d : Dependencies(g)) ++gold_deps[d];
    auto category = [&](int predicate) -> Counts * {
      const std::string &pos = g.token(predicate).pos;
      if (options.classes.IsVerb(pos)) return &r.verb;
      if (options.classes.IsNoun(pos)) return &r.nomi;
      return nullptr;
    };
    auto add = [&](const Dep &d, bool is_gold, bool correct) {
      Counts c;
      c.gold = is_gold;
      c.predicted = !is_gold;
      c.correct = correct;
      r.sem += c;
      (std::get<1>(d) == 0 ? r.pred : r.argu) += c;
      if (Counts *cat = category(std::get<0>(d))) *cat += c;
    };
    for (const auto &[d, n] : gold_deps) {
      for (int k = 0; k < n; ++k) add(d, true, false);
    }
    for (const Dep &d : Dependencies(p)) {
      auto it = gold_deps.find(d);
      bool correct = it != gold_deps.end() && it->second > 0;
      if (correct) --it->second;
      add(d, false, correct);
    }
  }
  return r;
}

std::vector<std::pair<std::string, std::optional<double>>> ReportFields(
    const ScoreReport &r) {
  return {
      {"sem_p", r.sem_p()},       {"sem_r", r.sem_r()},
      {"sem_f1", r.sem_f1()},     {"las", r.las()},
      {"macro_p", r.macro_p()},   {"macro_r", r.macro_r()},
      {"macro_f1", r.macro_f1()}, {"sem_over_las", r.sem_over_las()},
      {"pred_f1", r.pred_f1()},   {"argu_f1", r.argu_f1()},
      {"verb_f1", r.verb_f1()},   {"nomi_f1", r.nomi_f1()},
  };
}

std::string FormatReport(const ScoreReport &r) {
  std::string out;
  char buf[96];
  for (const auto &[name, value] : ReportFields(r)) {
    std::snprintf(buf, sizeof(buf), "%-14s %8s\n", name.c_str(),
                  Percent(value).c_str());
    out += buf;
  }
  std::snprintf(buf, sizeof(buf), "%-14s %8lld / %lld\n", "sem_correct",
                r.sem.correct, r.sem.predicted);
  out += buf;
  std::snprintf(buf, sizeof(buf), "%-14s %8lld\n", "sem_gold", r.sem.gold);
  out += buf;
  return out;
}

}  // namespace semdep
