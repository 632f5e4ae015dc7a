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

#include "semdep/pruning.h"

#include <algorithm>
#include <map>

namespace semdep {
namespace {

std::map<int, std::string> GoldRoles(const SemanticFrame &frame) {
  std::map<int, std::string> roles;
  for (const Argument &a : frame.arguments) roles[a.token] = a.role;
  return roles;
}

WordPair ArgPair(int head, int dependent, std::string_view label) {
  return {head, dependent, PairStage::kArgument, std::string(label)};
}

std::string RoleOrNone(const std::map<int, std::string> &roles, int token) {
  auto it = roles.find(token);
  return it == roles.end() ? std::string(kNoneArg) : it->second;
}

void SynPairs(int p, const DepGraph &graph, const std::map<int, std::string> &roles,
              bool adaptive, std::vector<WordPair> *out) {
  auto levels = SynTraverse(p, graph, graph.classes().IsNoun(graph.token(p).pos));
  if (!adaptive) {
    for (const auto &level : levels) {
      for (int c : level) out->push_back(ArgPair(p, c, RoleOrNone(roles, c)));
    }
    return;
  }
  int remaining = 0;
  for (const auto &level : levels) {
    for (int c : level) remaining += roles.count(c) > 0;
  }
  if (remaining == 0) {
    if (!levels.empty()) out->push_back(ArgPair(p, levels[0][0], kNoMoreArg));
    return;
  }
  for (size_t li = 0; li < levels.size(); ++li) {
    for (int c : levels[li]) {
      out->push_back(ArgPair(p, c, RoleOrNone(roles, c)));
      remaining -= roles.count(c) > 0;
    }
    if (remaining == 0) {
      if (li + 1 < levels.size()) {
        out->push_back(ArgPair(p, levels[li + 1][0], kNoMoreArg));
      }
      return;
    }
  }
}

// One direction of the linear scan; `stream` runs away from the predicate.
void LinStream(int p, const std::vector<int> &stream,
               const std::map<int, std::string> &roles, bool adaptive,
               std::string_view stop_label, std::vector<WordPair> *out) {
  size_t last_arg = 0;  // one past the outermost argument in the stream
  for (size_t i = 0; i < stream.size(); ++i) {
    if (roles.count(stream[i])) last_arg = i + 1;
  }
  size_t end = adaptive ? last_arg : stream.size();
  for (size_t i = 0; i < end; ++i) {
    out->push_back(ArgPair(p, stream[i], RoleOrNone(roles, stream[i])));
  }
  if (adaptive && end < stream.size()) {
    out->push_back(ArgPair(p, stream[end], stop_label));
  }
}

}  // namespace

int Traversal::CandidateCount() const {
  int n = 0;
  for (const auto &s : segments) n += static_cast<int>(s.candidates.size());
  return n;
}

std::vector<int> Traversal::Flatten() const {
  std::vector<int> out;
  for (const auto &s : segments) {
    out.insert(out.end(), s.candidates.begin(), s.candidates.end());
  }
  return out;
}

std::vector<int> PredicateCandidates(const Sentence &sentence,
                                     const PosClasses &classes) {
  std::vector<int> out;
  for (const Token &t : sentence.tokens) {
    if (classes.IsVerb(t.pos) || classes.IsNoun(t.pos)) out.push_back(t.id);
  }
  return out;
}

std::vector<std::vector<int>> SynTraverse(int predicate, const DepGraph &graph,
                                          bool is_nominal) {
  std::vector<std::vector<int>> levels;
  std::vector<bool> seen(graph.size() + 1, false);
  seen[predicate] = true;
  auto push = [&levels](std::vector<int> level) {
    if (!level.empty()) levels.push_back(std::move(level));
  };
  std::vector<int> children;
  for (int c : graph.children(predicate)) {
    seen[c] = true;
    children.push_back(c);
  }
  push(std::move(children));
  if (is_nominal) push({predicate});
  for (int cur = predicate; graph.head(cur) != 0;) {
    int h = graph.head(cur);
    seen[h] = true;
    push({h});
    std::vector<int> level;
    for (int c : graph.children(h)) {
      if (!seen[c]) {
        seen[c] = true;
        level.push_back(c);
      }
    }
    push(std::move(level));
    cur = h;
  }
  return levels;
}

LinearStreams LinTraverse(int predicate, int sentence_size) {
  LinearStreams s;
  s.self = predicate;
  for (int i = predicate - 1; i >= 1; --i) s.left.push_back(i);
  for (int i = predicate + 1; i <= sentence_size; ++i) s.right.push_back(i);
  return s;
}

Traversal BuildTraversal(int predicate, const DepGraph &graph,
                         TraverseScheme scheme) {
  Traversal t;
  if (scheme == TraverseScheme::kSynPth) {
    CandidateSegment seg;
    seg.stop_label = std::string(kNoMoreArg);
    seg.stop_ends_traversal = true;
    bool nominal = graph.classes().IsNoun(graph.token(predicate).pos);
    for (const auto &level : SynTraverse(predicate, graph, nominal)) {
      seg.candidates.insert(seg.candidates.end(), level.begin(), level.end());
    }
    t.segments.push_back(std::move(seg));
  } else {
    LinearStreams s = LinTraverse(predicate, graph.size());
    t.segments.push_back({{s.self}, "", false});
    t.segments.push_back({s.left, std::string(kNoMoreLeftArg), false});
    t.segments.push_back({s.right, std::string(kNoMoreRightArg), false});
  }
  return t;
}

std::vector<WordPair> GenerateArgumentPairs(const Sentence &sentence,
                                            const DepGraph &graph,
                                            const SemanticFrame &frame,
                                            TraverseScheme scheme,
                                            PairOptions options) {
  std::vector<WordPair> out;
  const int p = frame.predicate;
  auto roles = GoldRoles(frame);
  if (scheme == TraverseScheme::kSynPth) {
    SynPairs(p, graph, roles, options.adaptive, &out);
  } else {
    LinearStreams s = LinTraverse(p, sentence.size());
    out.push_back(ArgPair(p, p, RoleOrNone(roles, p)));
    LinStream(p, s.left, roles, options.adaptive, kNoMoreLeftArg, &out);
    LinStream(p, s.right, roles, options.adaptive, kNoMoreRightArg, &out);
  }
  return out;
}

std::vector<WordPair> GenerateTrainingPairs(const Sentence &sentence,
                                            const DepGraph &graph,
                                            TraverseScheme scheme,
                                            PairOptions options) {
  std::vector<WordPair> out;
  for (int c : PredicateCandidates(sentence, graph.classes())) {
    const SemanticFrame *f = sentence.FrameOf(c);
    std::string label =
        f != nullptr && IsSenseLabel(f->sense) ? f->sense : std::string(kNonePred);
    out.push_back({kVirtualRoot, c, PairStage::kPredicate, label});
  }
  for (const SemanticFrame &f : sentence.frames) {
    auto pairs = GenerateArgumentPairs(sentence, graph, f, scheme, options);
    out.insert(out.end(), pairs.begin(), pairs.end());
  }
  return out;
}

double PruneStats::ReductionPercent() const {
  if (pairs_before == 0) return 0.0;
  return 100.0 * static_cast<double>(pairs_after - pairs_before) /
         static_cast<double>(pairs_before);
}

double PruneStats::CoveragePercent() const {
  if (gold_arguments == 0) return 100.0;
  return 100.0 * static_cast<double>(covered_arguments) /
         static_cast<double>(gold_arguments);
}

PruneStats CoverageAndReductionStats(const std::vector<Sentence> &corpus,
                                     TraverseScheme scheme,
                                     const PosClasses &classes,
                                     PairOptions options) {
  PruneStats stats;
  for (const Sentence &s : corpus) {
    ++stats.sentences;
    DepGraph graph(s, classes);
    for (const SemanticFrame &f : s.frames) {
      ++stats.predicates;
      stats.pairs_before += s.size();
      stats.gold_arguments += static_cast<long long>(f.arguments.size());
      for (const WordPair &w : GenerateArgumentPairs(s, graph, f, scheme, options)) {
        ++stats.pairs_after;
        if (w.label && IsArgumentRole(*w.label)) ++stats.covered_arguments;
      }
    }
  }
  return stats;
}

}  // namespace semdep
