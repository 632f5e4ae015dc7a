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

#include "semdep/synthetic.h"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "semdep/error.h"

namespace semdep {
namespace {

struct Node {
  std::string form, lemma, pos, deprel;
  int head = -1;  // node index, -1 for the root
};

struct Prep {
  const char *lemma;
  const char *role;  // nullptr: not an argument
};

constexpr Prep kPreps[] = {
    {"in", "AM-LOC"},
    {"during", "AM-TMP"},
    {"toward", "AM-DIR"},
    {"with", nullptr},
};

class Builder {
 public:
  Builder(std::mt19937_64 *rng, const GrammarParams &p) : rng_(*rng), p_(p) {}

  bool Build(Sentence *out) {
    nodes_.clear();
    frames_.clear();
    senses_.clear();
    std::vector<int> order = Clause(0, -1, "ROOT");
    int root = root_;
    order.push_back(Add(".", ".", ".", root, "P"));
    if (static_cast<int>(order.size()) > p_.max_len) return false;
    Emit(order, out);
    return true;
  }

  void Minimal(Sentence *out) {
    nodes_.clear();
    frames_.clear();
    senses_.clear();
    int v = Verb(-1, "ROOT", false);
    int n = Noun(0, v, "SBJ");
    frames_[v].emplace_back(n, "A0");
    int dot = Add(".", ".", ".", v, "P");
    Emit({n, v, dot}, out);
  }

 private:
  bool Chance(double prob) {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < prob;
  }
  int Pick(int n) { return static_cast<int>(rng_() % static_cast<uint64_t>(n)); }

  int Add(std::string form, std::string lemma, std::string pos, int head,
          std::string deprel) {
    nodes_.push_back({std::move(form), std::move(lemma), std::move(pos),
                      std::move(deprel), head});
    return static_cast<int>(nodes_.size()) - 1;
  }

  int Noun(int index, int head, const std::string &deprel) {
    std::string lemma = "n" + std::to_string(index);
    bool plural = Chance(0.3);
    return Add(plural ? lemma + "s" : lemma, lemma, plural ? "NNS" : "NN", head,
               deprel);
  }

  int Verb(int head, const std::string &deprel, bool passive) {
    int index = Pick(p_.verbs);
    std::string lemma = "v" + std::to_string(index);
    std::string form, pos;
    if (passive) {
      form = lemma + "en";
      pos = "VBN";
    } else if (Chance(0.5)) {
      form = lemma + "ed";
      pos = "VBD";
    } else {
      form = lemma + "s";
      pos = "VBZ";
    }
    int v = Add(form, lemma, pos, head, deprel);
    if (deprel == "ROOT") root_ = v;
    ergative_ = index >= p_.verbs - p_.ergative_verbs;
    senses_[v] = "0" + std::to_string(1 + index % 3);
    frames_[v];
    return v;
  }

  // Noun phrase headed by a new noun attached to `head`.
  std::vector<int> NounPhrase(int head, const std::string &deprel) {
    int index = Pick(p_.nouns);
    std::vector<int> order;
    int det = -1, mod = -1;
    if (Chance(p_.det_prob)) det = Add("the", "the", "DT", -1, "NMOD");
    if (Chance(p_.nmod_prob)) mod = Noun(Pick(p_.nouns), -1, "NMOD");
    int n = Noun(index, head, deprel);
    if (det >= 0) {
      nodes_[det].head = n;
      order.push_back(det);
    }
    if (mod >= 0) {
      nodes_[mod].head = n;
      order.push_back(mod);
    }
    order.push_back(n);
    if (index < p_.predicate_nouns) {
      senses_[n] = "01";
      auto &args = frames_[n];
      if (mod >= 0) args.emplace_back(mod, "A1");
    }
    return order;
  }

  std::vector<int> Clause(int depth, int head, const std::string &deprel) {
    bool passive = Chance(p_.passive_prob);
    int v = Verb(head, deprel, passive);
    bool ergative = ergative_;
    std::vector<int> order;
    std::vector<int> subj = NounPhrase(v, "SBJ");
    frames_[v].emplace_back(subj.back(), passive || ergative ? "A1" : "A0");
    order.insert(order.end(), subj.begin(), subj.end());
    if (Chance(p_.modal_prob)) {
      int m = Add("will", "will", "MD", v, "AUX");
      frames_[v].emplace_back(m, "AM-MOD");
      order.push_back(m);
    }
    if (passive) order.push_back(Add("was", "be", "VBD", v, "AUX"));
    order.push_back(v);
    if (Chance(p_.adverb_prob)) {
      std::string lemma = "r" + std::to_string(Pick(p_.adverbs));
      int r = Add(lemma + "ly", lemma, "RB", v, "MNR");
      frames_[v].emplace_back(r, "AM-MNR");
      order.push_back(r);
    }
    if (!passive && !ergative) {
      if (depth + 1 < p_.max_depth && Chance(p_.embed_prob)) {
        std::vector<int> inner = Clause(depth + 1, v, "OBJ");
        frames_[v].emplace_back(inner_verb_, "A1");
        order.insert(order.end(), inner.begin(), inner.end());
      } else if (Chance(p_.object_prob)) {
        std::vector<int> obj = NounPhrase(v, "OBJ");
        frames_[v].emplace_back(obj.back(), "A1");
        order.insert(order.end(), obj.begin(), obj.end());
      }
    }
    if (Chance(p_.pp_prob)) {
      const Prep &prep = kPreps[Pick(4)];
      int in = Add(prep.lemma, prep.lemma, "IN", v, "ADV");
      order.push_back(in);
      std::vector<int> obj = NounPhrase(in, "PMOD");
      order.insert(order.end(), obj.begin(), obj.end());
      if (prep.role) {
        int bearer = Chance(p_.unreachable_rate) ? obj.back() : in;
        frames_[v].emplace_back(bearer, prep.role);
      }
    }
    inner_verb_ = v;
    return order;
  }

  void Emit(const std::vector<int> &order, Sentence *out) {
    std::vector<int> id(nodes_.size());
    for (size_t i = 0; i < order.size(); ++i) id[order[i]] = i + 1;
    out->tokens.clear();
    out->frames.clear();
    for (size_t i = 0; i < order.size(); ++i) {
      const Node &n = nodes_[order[i]];
      Token t;
      t.id = static_cast<int>(i) + 1;
      t.form = n.form;
      t.lemma = n.lemma;
      t.pos = n.pos;
      t.sp_form = n.form;
      t.sp_lemma = n.lemma;
      t.sp_pos = n.pos;
      t.head = n.head < 0 ? 0 : id[n.head];
      t.deprel = n.deprel;
      out->tokens.push_back(std::move(t));
    }
    std::map<int, SemanticFrame> by_id;
    for (const auto &[node, args] : frames_) {
      SemanticFrame f;
      f.predicate = id[node];
      f.sense = senses_[node];
      for (const auto &[arg, role] : args) f.arguments.push_back({id[arg], role});
      std::sort(f.arguments.begin(), f.arguments.end(),
                [](const Argument &a, const Argument &b) {
                  return a.token < b.token;
                });
      by_id[f.predicate] = std::move(f);
    }
    for (auto &[unused, f] : by_id) out->frames.push_back(std::move(f));
    SyncPredColumn(out);
  }

  std::mt19937_64 &rng_;
  const GrammarParams &p_;
  std::vector<Node> nodes_;
  std::map<int, std::vector<std::pair<int, std::string>>> frames_;
  std::map<int, std::string> senses_;
  int root_ = 0;
  int inner_verb_ = 0;
  bool ergative_ = false;
};

}  // namespace

std::vector<Sentence> GenerateSyntheticCorpus(uint64_t seed, int count,
                                              const GrammarParams &params) {
  if (params.nouns <= 0 || params.verbs <= 0 || params.adverbs <= 0) {
    throw Error("synthetic grammar needs non-empty vocabularies");
  }
  if (params.max_len < 3) throw Error("synthetic max_len must be at least 3");
  if (params.predicate_nouns < 0 || params.predicate_nouns > params.nouns) {
    throw Error("predicate_nouns must be within the noun vocabulary");
  }
  if (params.ergative_verbs < 0 || params.ergative_verbs > params.verbs) {
    throw Error("ergative_verbs must be within the verb vocabulary");
  }
  if (params.max_depth < 1) throw Error("max_depth must be at least 1");
  if (count < 0) throw Error("sentence count must be non-negative");
  std::mt19937_64 rng(seed);
  Builder builder(&rng, params);
  std::vector<Sentence> out(count);
  for (Sentence &s : out) {
    bool ok = false;
    for (int attempt = 0; attempt < 50 && !ok; ++attempt) ok = builder.Build(&s);
    if (!ok) builder.Minimal(&s);
  }
  return out;
}

}  // namespace semdep
