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


#include "semdep/dep_graph.h"

#include <gtest/gtest.h>

#include "semdep/conll.h"
#include "test_util.h"

namespace semdep {
namespace {

class DepGraphTest : public ::testing::Test {
 protected:
  Sentence s_ = testing::ShiftedSentence();
  DepGraph g_{s_};
};

TEST_F(DepGraphTest, Structure) {
  EXPECT_EQ(g_.root(), 7);
  EXPECT_FALSE(g_.repaired());
  EXPECT_EQ(g_.children(7), (std::vector<int>{3, 5, 6, 8}));
  EXPECT_EQ(g_.depth(1), 3);
  EXPECT_EQ(g_.Ancestors(1), (std::vector<int>{2, 3, 7}));
  EXPECT_TRUE(g_.IsLeaf(4));
  EXPECT_FALSE(g_.IsLeaf(3));
}

TEST_F(DepGraphTest, Family) {
  Family f = g_.family(7);
  EXPECT_EQ(f.lm, 3);
  EXPECT_EQ(f.rm, 8);
  EXPECT_EQ(f.ln, 6);
  EXPECT_EQ(f.rn, 8);
  EXPECT_EQ(f.no_far_children, (std::vector<int>{5, 6}));
  Family leaf = g_.family(4);
  EXPECT_FALSE(leaf.lm.has_value());
  EXPECT_TRUE(leaf.children.empty());
}

TEST_F(DepGraphTest, Paths) {
  PathDecomposition d = g_.DecomposePaths(1, 6);
  EXPECT_EQ(d.meet, 7);
  EXPECT_EQ(d.argu, (std::vector<int>{1, 2, 3, 7}));
  EXPECT_EQ(d.pred, (std::vector<int>{6, 7}));
  EXPECT_EQ(d.shared, (std::vector<int>{7}));
  EXPECT_EQ(d.full, (std::vector<int>{1, 2, 3, 7, 6}));
  PathDecomposition same = g_.DecomposePaths(3, 3);
  EXPECT_EQ(same.full, (std::vector<int>{3}));
  EXPECT_EQ(DepGraph::LinearPath(5, 2), (std::vector<int>{5, 4, 3, 2}));
}

TEST_F(DepGraphTest, Relations) {
  EXPECT_EQ(g_.Relation(1, 2), TreeRelation::kChild);
  EXPECT_EQ(g_.Relation(7, 3), TreeRelation::kParent);
  EXPECT_EQ(g_.Relation(7, 1), TreeRelation::kAncestor);
  EXPECT_EQ(g_.Relation(1, 3), TreeRelation::kDescendant);
  EXPECT_EQ(g_.Relation(6, 3), TreeRelation::kSibling);
  EXPECT_EQ(g_.Relation(6, 2), TreeRelation::kUncle);
  EXPECT_EQ(g_.Relation(2, 6), TreeRelation::kNephew);
  EXPECT_EQ(g_.Relation(1, 6), TreeRelation::kElse);
  EXPECT_EQ(g_.Relation(4, 4), TreeRelation::kSelf);
  for (int a = 1; a <= 8; ++a) {
    for (int p = 1; p <= 8; ++p) {
      EXPECT_EQ(g_.Relation(a, p), Converse(g_.Relation(p, a)));
    }
  }
}

TEST_F(DepGraphTest, SupportWords) {
  using C = PosClasses::Class;
  EXPECT_EQ(g_.SupportWord(1, C::kVerb, SupportLevel::kLow), 3);
  EXPECT_EQ(g_.SupportWord(1, C::kVerb, SupportLevel::kHigh), 7);
  EXPECT_EQ(g_.SupportWord(1, C::kNoun, SupportLevel::kLow), 2);
  EXPECT_FALSE(g_.SupportWord(7, C::kVerb, SupportLevel::kLow).has_value());
}

TEST(DepGraphRepairTest, PrepositionHead) {
  ParseResult r = ParseCorpusText(
      "1\tran\trun\tVBD\t0\tROOT\t-\n"
      "2\tright\tright\tRB\t3\tAMOD\t-\n"
      "3\tin\tin\tIN\t1\tLOC\t-\n"
      "4\tparks\tpark\tNNS\t3\tPMOD\t-\n");
  const Sentence &s = r.sentences[0];
  DepGraph g(s);
  EXPECT_EQ(g.PpHead(4), 2);  // leftmost sibling under the preposition
  EXPECT_EQ(g.PpHead(2), 4);
  EXPECT_EQ(g.PpHead(3), 1);  // ordinary head
  EXPECT_EQ(g.PpHead(1), 1);
}

TEST(DepGraphRepairTest, ExtraRootsAndCycles) {
  Sentence s;
  for (int i = 1; i <= 5; ++i) {
    Token t;
    t.id = i;
    t.form = t.lemma = t.pos = "x";
    s.tokens.push_back(t);
  }
  // 1 root, 2 root, 3 -> 4 -> 5 -> 3
  s.token(1).head = 0;
  s.token(2).head = 0;
  s.token(3).head = 4;
  s.token(4).head = 5;
  s.token(5).head = 3;
  DepGraph g(s);
  EXPECT_TRUE(g.repaired());
  EXPECT_EQ(g.root(), 1);
  EXPECT_EQ(g.head(2), 1);
  EXPECT_EQ(g.head(3), 1);
  for (int i = 2; i <= 5; ++i) {
    EXPECT_FALSE(g.Ancestors(i).empty());
    EXPECT_EQ(g.Ancestors(i).back(), 1);
  }
}

TEST(PosClassesTest, Prefixes) {
  PosClasses c;
  EXPECT_TRUE(c.IsVerb("VBZ"));
  EXPECT_TRUE(c.IsNoun("NNPS"));
  EXPECT_FALSE(c.IsNoun("VB"));
  EXPECT_TRUE(PosClasses::IsPunctuation(","));
  EXPECT_TRUE(PosClasses::IsPunctuation("``"));
  EXPECT_FALSE(PosClasses::IsPunctuation("NN"));
}

}  // namespace
}  // namespace semdep
