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


#include "semdep/labels.h"

#include <set>

#include <gtest/gtest.h>

#include "semdep/error.h"

namespace semdep {
namespace {

TEST(LabelSetTest, SizesDifferByOneAuxiliaryLabel) {
  const LabelSet &syn = LabelSet::ForScheme(TraverseScheme::kSynPth);
  const LabelSet &lin = LabelSet::ForScheme(TraverseScheme::kLinPth);
  EXPECT_EQ(syn.size(), 78u);
  EXPECT_EQ(lin.size(), 79u);
  EXPECT_TRUE(syn.Contains("noMoreArg"));
  EXPECT_FALSE(syn.Contains("noMoreLeftArg"));
  EXPECT_TRUE(lin.Contains("noMoreLeftArg"));
  EXPECT_TRUE(lin.Contains("noMoreRightArg"));
  EXPECT_FALSE(lin.Contains("noMoreArg"));
}

TEST(LabelSetTest, CategoryCounts) {
  EXPECT_EQ(SenseLabels().size() + 1, 22u);  // with NONE_PRED
  EXPECT_EQ(ArgumentRoles().size(), 54u);
  std::set<std::string> unique(ArgumentRoles().begin(), ArgumentRoles().end());
  EXPECT_EQ(unique.size(), ArgumentRoles().size());
}

TEST(LabelSetTest, IndexOrder) {
  const LabelSet &syn = LabelSet::ForScheme(TraverseScheme::kSynPth);
  EXPECT_EQ(syn.IndexOf("01"), 0);
  EXPECT_LT(syn.IndexOf("NONE_PRED"), syn.IndexOf("A0"));
  EXPECT_EQ(syn.IndexOf("bogus"), -1);
}

TEST(LabelsTest, Predicates) {
  EXPECT_TRUE(IsSenseLabel("01"));
  EXPECT_FALSE(IsSenseLabel("1"));
  EXPECT_TRUE(IsArgumentRole("AM-TMP"));
  EXPECT_TRUE(IsArgumentRole("C-R-AM-TMP"));
  EXPECT_FALSE(IsArgumentRole("NONE_ARG"));
  EXPECT_TRUE(IsAuxiliaryLabel("noMoreRightArg"));
  EXPECT_TRUE(IsPredicateStageLabel("NONE_PRED"));
  EXPECT_FALSE(IsPredicateStageLabel("A0"));
  EXPECT_TRUE(IsArgumentStageLabel("noMoreArg"));
  EXPECT_TRUE(IsArgumentStageLabel("NONE_ARG"));
}

TEST(LabelsTest, SchemeNames) {
  EXPECT_EQ(ParseScheme("synPth"), TraverseScheme::kSynPth);
  EXPECT_EQ(ParseScheme("LINPTH"), TraverseScheme::kLinPth);
  EXPECT_EQ(SchemeName(TraverseScheme::kLinPth), "linPth");
  EXPECT_THROW(ParseScheme("tree"), Error);
}

}  // namespace
}  // namespace semdep
