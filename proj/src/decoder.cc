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

#include "semdep/decoder.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <unordered_map>

#include "semdep/error.h"
#include "semdep/labels.h"
#include "semdep/pruning.h"

namespace semdep {

struct Decoder::Hypothesis {
  double score = 0;
  SemanticState state;
  int segment = 0;
  int pos = 0;
  bool done = false;
  int num_args = 0;
  std::vector<int> labels;  // model label ids; -1 when no label was allowed
  std::vector<int> candidates;
};

struct Decoder::Step {
  int label;
  double log_prob;
};

namespace {

// a ranks before b: higher score, then fewer arguments, then the
// lexicographically smaller label sequence.
bool Before(double sa, int na, const std::vector<int> &la, int extra_a,
            double sb, int nb, const std::vector<int> &lb, int extra_b) {
  if (sa != sb) return sa > sb;
  if (na != nb) return na < nb;
  size_t n = std::max(la.size(), lb.size()) + 1;
  for (size_t i = 0; i < n; ++i) {
    int x = i < la.size() ? la[i] : i == la.size() ? extra_a : -2;
    int y = i < lb.size() ? lb[i] : i == lb.size() ? extra_b : -2;
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace

// Per-predicate scoring with the static part of each candidate's features
// computed once.
class Decoder::Scorer {
 public:
  Scorer(const Decoder &d, const DepGraph &graph, int predicate,
         const Traversal &traversal)
      : d_(d), graph_(graph), predicate_(predicate), traversal_(traversal) {
    const auto &labels = d_.model_.maxent.labels();
    for (const CandidateSegment &seg : traversal_.segments) {
      int id = -1;
      if (!seg.stop_label.empty()) {
        for (size_t i = 0; i < labels.size(); ++i) {
          if (labels[i] == seg.stop_label) id = static_cast<int>(i);
        }
      }
      stop_ids_.push_back(id);
    }
  }

  int stop_id(int segment) const { return stop_ids_[segment]; }

  bool IsRole(int label) const {
    return label >= 0 && IsArgumentRole(d_.model_.maxent.labels()[label]);
  }

  std::vector<Step> Distribution(const Hypothesis &h) {
    int candidate = traversal_.segments[h.segment].candidates[h.pos];
    const MaxEntModel &me = d_.model_.maxent;
    const int L = me.num_labels();
    std::vector<double> scores = StaticScores(candidate);
    if (!d_.dynamic_templates_.empty()) {
      EvalContext ctx = Context(candidate, h.state);
      std::vector<int> ids;
      for (int t : d_.dynamic_templates_) {
        int id = me.features().Find(
            Evaluate(d_.model_.templates[t], t, ctx));
        if (id >= 0) ids.push_back(id);
      }
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      me.AccumulateScores(ids, scores.data());
    }
    std::vector<int> allowed;
    if (d_.config_.mask == MaskPolicy::kStage) {
      allowed = d_.role_labels_;
      int stop = stop_ids_[h.segment];
      if (stop >= 0) allowed.insert(allowed.end(), stop);
      std::sort(allowed.begin(), allowed.end());
    } else {
      for (int l = 0; l < L; ++l) allowed.push_back(l);
    }
    if (d_.config_.forbid_crossing &&
        h.state.Crosses(predicate_, candidate)) {
      allowed.erase(std::remove_if(allowed.begin(), allowed.end(),
                                   [&](int l) { return IsRole(l); }),
                    allowed.end());
    }
    if (allowed.empty()) return {{-1, 0.0}};
    double mx = -std::numeric_limits<double>::infinity();
    for (int l : allowed) mx = std::max(mx, scores[l]);
    double z = 0;
    for (int l : allowed) z += std::exp(scores[l] - mx);
    double log_z = mx + std::log(z);
    std::vector<Step> out;
    out.reserve(allowed.size());
    for (int l : allowed) out.push_back({l, scores[l] - log_z});
    return out;
  }

  // Applies `step` to h's next candidate and moves h forward.
  void Apply(const Step &step, Hypothesis *h) const {
    const CandidateSegment &seg = traversal_.segments[h->segment];
    int candidate = seg.candidates[h->pos];
    h->score += step.log_prob;
    h->labels.push_back(step.label);
    h->candidates.push_back(candidate);
    if (IsRole(step.label)) {
      h->state.AddArc(predicate_, candidate,
                      d_.model_.maxent.labels()[step.label]);
      ++h->num_args;
    }
    if (step.label >= 0 && step.label == stop_ids_[h->segment]) {
      if (seg.stop_ends_traversal) {
        h->done = true;
        return;
      }
      ++h->segment;
      h->pos = 0;
    } else {
      ++h->pos;
    }
    Normalize(h);
  }

  void Normalize(Hypothesis *h) const {
    const auto &segs = traversal_.segments;
    while (h->segment < static_cast<int>(segs.size()) &&
           h->pos >= static_cast<int>(segs[h->segment].candidates.size())) {
      ++h->segment;
      h->pos = 0;
    }
    if (h->segment >= static_cast<int>(segs.size())) h->done = true;
  }

  ArgumentDecode Result(const Hypothesis &h) const {
    ArgumentDecode r;
    r.log_prob = h.score;
    r.state = h.state;
    const auto &labels = d_.model_.maxent.labels();
    for (size_t i = 0; i < h.labels.size(); ++i) {
      std::string label =
          h.labels[i] >= 0 ? labels[h.labels[i]] : std::string(kNoneArg);
      if (IsArgumentRole(label)) r.arguments.push_back({h.candidates[i], label});
      r.assignments.push_back({h.candidates[i], std::move(label)});
    }
    std::sort(r.arguments.begin(), r.arguments.end(),
              [](const Argument &a, const Argument &b) {
                return a.token < b.token;
              });
    return r;
  }

 private:
  EvalContext Context(int candidate, const SemanticState &state) const {
    EvalContext ctx;
    ctx.graph = &graph_;
    ctx.state = &state;
    ctx.options = &d_.model_.eval;
    ctx.head = predicate_;
    ctx.dependent = candidate;
    ctx.stage = PairStage::kArgument;
    return ctx;
  }

  std::vector<double> StaticScores(int candidate) {
    auto it = static_cache_.find(candidate);
    if (it != static_cache_.end()) return it->second;
    const MaxEntModel &me = d_.model_.maxent;
    std::vector<double> scores(me.num_labels(), 0.0);
    SemanticState empty(graph_.size());
    EvalContext ctx = Context(candidate, empty);
    std::vector<int> ids;
    for (int t : d_.static_templates_) {
      int id = me.features().Find(Evaluate(d_.model_.templates[t], t, ctx));
      if (id >= 0) ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    me.AccumulateScores(ids, scores.data());
    static_cache_.emplace(candidate, scores);
    return scores;
  }

  const Decoder &d_;
  const DepGraph &graph_;
  int predicate_;
  const Traversal &traversal_;
  std::vector<int> stop_ids_;
  std::unordered_map<int, std::vector<double>> static_cache_;
};

Decoder::Decoder(const ParserModel &model, DecodeConfig config)
    : model_(model), config_(config) {
  if (config_.beam < 1) throw Error("beam width must be at least 1");
  for (int t = 0; t < model_.templates.size(); ++t) {
    (model_.templates[t].depends_on_state() ? dynamic_templates_
                                            : static_templates_)
        .push_back(t);
  }
  const auto &labels = model_.maxent.labels();
  for (size_t i = 0; i < labels.size(); ++i) {
    const std::string &l = labels[i];
    if (IsPredicateStageLabel(l)) predicate_labels_.push_back(i);
    if (IsArgumentRole(l) || l == kNoneArg) role_labels_.push_back(i);
    if (l == kNoneArg) none_arg_ = static_cast<int>(i);
  }
}

std::vector<std::pair<int, std::string>> Decoder::IdentifyPredicates(
    const DepGraph &graph, SemanticState *state) const {
  std::vector<std::pair<int, std::string>> out;
  const MaxEntModel &me = model_.maxent;
  if (me.num_labels() == 0) return out;
  for (int c : PredicateCandidates(graph.sentence(), model_.classes)) {
    EvalContext ctx;
    ctx.graph = &graph;
    ctx.state = state;
    ctx.options = &model_.eval;
    ctx.head = kVirtualRoot;
    ctx.dependent = c;
    ctx.stage = PairStage::kPredicate;
    std::vector<std::string> features = EvaluateAll(model_.templates, ctx);
    std::vector<double> p = me.Predict(features);
    int best = -1;
    auto consider = [&](int l) {
      if (best < 0 || p[l] > p[best]) best = l;
    };
    if (config_.mask == MaskPolicy::kStage) {
      for (int l : predicate_labels_) consider(l);
    } else {
      for (int l = 0; l < me.num_labels(); ++l) consider(l);
    }
    if (best < 0 || !IsSenseLabel(me.labels()[best])) continue;
    out.emplace_back(c, me.labels()[best]);
    state->SetSense(c, me.labels()[best]);
  }
  return out;
}

ArgumentDecode Decoder::BeamDecode(int predicate, const DepGraph &graph,
                                   const SemanticState &state) const {
  Traversal traversal = BuildTraversal(predicate, graph, model_.scheme);
  Scorer scorer(*this, graph, predicate, traversal);
  Hypothesis init;
  init.state = state;
  scorer.Normalize(&init);
  std::vector<Hypothesis> finished, live;
  (init.done ? finished : live).push_back(std::move(init));

  struct Extension {
    double score;
    int num_args;
    int parent;
    Step step;
  };
  while (!live.empty()) {
    std::vector<Extension> ext;
    for (size_t i = 0; i < live.size(); ++i) {
      for (const Step &s : scorer.Distribution(live[i])) {
        ext.push_back({live[i].score + s.log_prob,
                       live[i].num_args + (scorer.IsRole(s.label) ? 1 : 0),
                       static_cast<int>(i), s});
      }
    }
    auto before = [&](const Extension &a, const Extension &b) {
      return Before(a.score, a.num_args, live[a.parent].labels, a.step.label,
                    b.score, b.num_args, live[b.parent].labels, b.step.label);
    };
    size_t keep = std::min<size_t>(ext.size(), config_.beam);
    std::partial_sort(ext.begin(), ext.begin() + keep, ext.end(), before);
    std::vector<Hypothesis> next;
    for (size_t i = 0; i < keep; ++i) {
      Hypothesis h = live[ext[i].parent];
      scorer.Apply(ext[i].step, &h);
      (h.done ? finished : next).push_back(std::move(h));
    }
    live.swap(next);
  }
  const Hypothesis *best = nullptr;
  for (const Hypothesis &h : finished) {
    if (best == nullptr ||
        Before(h.score, h.num_args, h.labels, -3, best->score, best->num_args,
               best->labels, -3)) {
      best = &h;
    }
  }
  return scorer.Result(*best);
}

ArgumentDecode Decoder::ExhaustiveDecode(int predicate, const DepGraph &graph,
                                         const SemanticState &state) const {
  Traversal traversal = BuildTraversal(predicate, graph, model_.scheme);
  if (traversal.CandidateCount() > config_.exhaustive_cap) {
    throw Error("exhaustive decoding over " +
                std::to_string(traversal.CandidateCount()) +
                " candidates exceeds the cap of " +
                std::to_string(config_.exhaustive_cap));
  }
  Scorer scorer(*this, graph, predicate, traversal);
  Hypothesis init;
  init.state = state;
  scorer.Normalize(&init);
  Hypothesis best;
  bool have_best = false;
  std::function<void(const Hypothesis &)> search = [&](const Hypothesis &h) {
    if (h.done) {
      if (!have_best || Before(h.score, h.num_args, h.labels, -3, best.score,
                               best.num_args, best.labels, -3)) {
        best = h;
        have_best = true;
      }
      return;
    }
    for (const Step &s : scorer.Distribution(h)) {
      Hypothesis child = h;
      scorer.Apply(s, &child);
      search(child);
    }
  };
  search(init);
  return scorer.Result(best);
}

std::vector<SemanticFrame> Decoder::ParseSentence(
    const Sentence &sentence) const {
  std::vector<SemanticFrame> frames;
  if (sentence.size() == 0) return frames;
  DepGraph graph(sentence, model_.classes);
  SemanticState state(sentence.size());
  for (auto &[predicate, sense] : IdentifyPredicates(graph, &state)) {
    ArgumentDecode r = BeamDecode(predicate, graph, state);
    state = std::move(r.state);
    frames.push_back({predicate, sense, std::move(r.arguments)});
  }
  return frames;
}

Sentence Decoder::Annotate(const Sentence &sentence) const {
  Sentence out = sentence;
  out.frames = ParseSentence(sentence);
  SyncPredColumn(&out);
  return out;
}

std::vector<Sentence> Decoder::AnnotateCorpus(
    const std::vector<Sentence> &corpus, int threads) const {
  std::vector<Sentence> out(corpus.size());
  threads = std::max(1, std::min<int>(threads, corpus.size()));
  auto work = [&](int shard) {
    for (size_t i = shard; i < corpus.size(); i += threads) {
      out[i] = Annotate(corpus[i]);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> workers;
    for (int s = 0; s < threads; ++s) workers.emplace_back(work, s);
    for (auto &w : workers) w.join();
  }
  return out;
}

}  // namespace semdep
