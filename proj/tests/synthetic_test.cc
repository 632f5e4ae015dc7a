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

#include <map>

#include <gtest/gtest.h>

#include "semdep/error.h"

namespace semdep {
namespace {

// Role the grammar promises for a dependent of a verbal predicate.
std::string ExpectedRole(const Sentence &s, int verb, int dep, int ergative_from) {
  const Token &v = s.token(verb), &d = s.token(dep);
  int index = std::stoi(v.lemma.substr(1));
  if (d.deprel == "SBJ") {
    return v.pos == "VBN" || index >= ergative_from ? "A1" : "A0";
  }
  if (d.deprel == "OBJ") return "A1";
  if (d.deprel == "AUX") return d.pos == "MD" ? "AM-MOD" : "";
  if (d.deprel == "MNR") return "AM-MNR";
  if (d.deprel == "ADV") {
    static const std::map<std::string, std::string> kPrep = {
        {"in", "AM-LOC"}, {"during", "AM-TMP"}, {"toward", "AM-DIR"}};
    auto it = kPrep.find(d.lemma);
    return it == kPrep.end() ? "" : it->second;
  }
  return "";
}

void CheckTree(const Sentence &s) {
  int roots = 0;
  for (const Token &t : s.tokens) {
    ASSERT_GE(t.head, 0);
    ASSERT_LE(t.head, s.size());
    if (t.head == 0) ++roots;
    int x = t.id, steps = 0;
    while (x != 0 && steps++ <= s.size()) x = s.token(x).head;
    ASSERT_EQ(x, 0) << "cycle at token " << t.id;
  }
  EXPECT_EQ(roots, 1);
}

TEST(SyntheticTest, RolesFollowTheGrammar) {
  GrammarParams g;
  g.ergative_verbs = 3;
  auto corpus = GenerateSyntheticCorpus(7, 300, g);
  ASSERT_EQ(corpus.size(), 300u);
  int checked = 0;
  for (const Sentence &s : corpus) {
    CheckTree(s);
    EXPECT_LE(s.size(), g.max_len);
    EXPECT_EQ(s.tokens.back().form, ".");
    for (const SemanticFrame &f : s.frames) {
      const Token &p = s.token(f.predicate);
      EXPECT_EQ(p.pred, p.lemma + "." + f.sense);
      std::map<int, std::string> roles;
      for (const Argument &a : f.arguments) roles[a.token] = a.role;
      if (p.pos == "NN" || p.pos == "NNS") {
        int index = std::stoi(p.lemma.substr(1));
        EXPECT_LT(index, g.predicate_nouns);
        for (const auto &[tok, role] : roles) {
          EXPECT_EQ(s.token(tok).head, f.predicate);
          EXPECT_EQ(s.token(tok).deprel, "NMOD");
          EXPECT_EQ(role, "A1");
        }
        continue;
      }
      int index = std::stoi(p.lemma.substr(1));
      EXPECT_EQ(f.sense, "0" + std::to_string(1 + index % 3));
      for (const auto &[tok, role] : roles) {
        EXPECT_EQ(s.token(tok).head, f.predicate);
      }
      for (const Token &t : s.tokens) {
        if (t.head != f.predicate) continue;
        std::string want = ExpectedRole(s, f.predicate, t.id, g.verbs - 3);
        auto it = roles.find(t.id);
        EXPECT_EQ(it == roles.end() ? "" : it->second, want)
            << p.form << " -> " << t.form;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(SyntheticTest, ErgativeVerbsTakeNoObject) {
  GrammarParams g;
  g.ergative_verbs = g.verbs;
  for (const Sentence &s : GenerateSyntheticCorpus(3, 100, g)) {
    for (const Token &t : s.tokens) EXPECT_NE(t.deprel, "OBJ");
  }
}

TEST(SyntheticTest, UnreachableRolesSitOnPrepositionObjects) {
  GrammarParams g;
  g.pp_prob = 1;
  g.unreachable_rate = 1;
  int moved = 0;
  for (const Sentence &s : GenerateSyntheticCorpus(4, 50, g)) {
    for (const SemanticFrame &f : s.frames) {
      for (const Argument &a : f.arguments) {
        if (s.token(a.token).deprel == "PMOD") ++moved;
        EXPECT_NE(s.token(a.token).deprel, "ADV");
      }
    }
  }
  EXPECT_GT(moved, 0);
}

TEST(SyntheticTest, DeterministicPerSeed) {
  EXPECT_EQ(GenerateSyntheticCorpus(5, 40), GenerateSyntheticCorpus(5, 40));
  EXPECT_NE(GenerateSyntheticCorpus(5, 40), GenerateSyntheticCorpus(6, 40));
  EXPECT_TRUE(GenerateSyntheticCorpus(5, 0).empty());
}

TEST(SyntheticTest, RejectsDegenerateParameters) {
  GrammarParams g;
  g.max_len = 2;
  EXPECT_THROW(GenerateSyntheticCorpus(1, 1, g), Error);
  g = {};
  g.verbs = 0;
  EXPECT_THROW(GenerateSyntheticCorpus(1, 1, g), Error);
  g = {};
  g.predicate_nouns = g.nouns + 1;
  EXPECT_THROW(GenerateSyntheticCorpus(1, 1, g), Error);
  g = {};
  g.ergative_verbs = -1;
  EXPECT_THROW(GenerateSyntheticCorpus(1, 1, g), Error);
  g = {};
  g.max_depth = 0;
  EXPECT_THROW(GenerateSyntheticCorpus(1, 1, g), Error);
  EXPECT_THROW(GenerateSyntheticCorpus(1, -1), Error);
}

TEST(SyntheticTest, ShortLimitStillProducesSentences) {
  GrammarParams g;
  g.max_len = 3;
  for (const Sentence &s : GenerateSyntheticCorpus(2, 20, g)) {
    EXPECT_LE(s.size(), 3);
    CheckTree(s);
  }
}

}  // namespace
}  // namespace semdep
