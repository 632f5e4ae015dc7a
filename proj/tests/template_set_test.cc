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


#include "semdep/template_set.h"

#include <filesystem>

#include <gtest/gtest.h>

#include "semdep/dep_graph.h"
#include "semdep/error.h"
#include "test_util.h"

namespace semdep {
namespace {

TEST(TemplateSetTest, ParsesCommentsAndProvenance) {
  TemplateSet set = ParseTemplateSetText(
      "# provenance: unit test\n"
      "\n"
      "a.form   \n"
      "# a note\n"
      "a.lemma+p.lemma\n",
      "t");
  EXPECT_EQ(set.name(), "t");
  EXPECT_EQ(set.provenance(), "unit test");
  ASSERT_EQ(set.size(), 2);
  EXPECT_EQ(set[1].text(), "a.lemma + p.lemma");
}

TEST(TemplateSetTest, ErrorsNameTheLine) {
  try {
    ParseTemplateSetText("a.form\n\np.bogus\n");
    FAIL();
  } catch (const FormatError &e) {
    EXPECT_EQ(e.line(), 3);
  }
  try {
    ParseTemplateSetText("a.form\na.form\n");
    FAIL();
  } catch (const FormatError &e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(TemplateSetTest, DuplicatesAreCanonical) {
  TemplateSet set;
  set.Add("a.lemma + p.lemma");
  EXPECT_THROW(set.Add("a.lemma+p.lemma"), Error);
  EXPECT_TRUE(set.Contains(ParseTemplate("a.lemma  +  p.lemma")));
}

TEST(TemplateSetTest, SaveLoadRoundTrip) {
  TemplateSet set = LoadTemplateFile(testing::DataPath("templates/default.txt"));
  std::string path =
      (std::filesystem::temp_directory_path() / "semdep_templates.txt").string();
  SaveTemplateFile(set, path);
  TemplateSet again = LoadTemplateFile(path);
  EXPECT_EQ(again, set);
  EXPECT_EQ(again.provenance(), set.provenance());
  EXPECT_EQ(SerializeTemplateSet(again), SerializeTemplateSet(set));
  std::filesystem::remove(path);
  EXPECT_THROW(LoadTemplateFile(path), Error);
}

TEST(TemplateSetTest, ShippedSelectionsHaveExpectedSizes) {
  auto size = [](const std::string &name) {
    return LoadTemplateFile(testing::DataPath("templates/" + name)).size();
  };
  EXPECT_EQ(size("overlap.txt"), 5);
  EXPECT_EQ(size("selected/syn_np.txt"), 100);
  EXPECT_EQ(size("selected/syn_n.txt"), 99);
  TemplateSet overlap = LoadTemplateFile(testing::DataPath("templates/overlap.txt"));
  for (const char *name : {"syn_n", "syn_p", "syn_np", "lin_n", "lin_p", "lin_np"}) {
    TemplateSet s =
        LoadTemplateFile(testing::DataPath(std::string("templates/selected/") +
                                           name + ".txt"));
    for (const auto &t : overlap.templates()) {
      EXPECT_TRUE(s.Contains(t)) << name << " lacks " << t.text();
    }
  }
}

TEST(TemplateSetTest, EvaluateAllNumbersByPosition) {
  Sentence s = testing::ShiftedSentence();
  DepGraph g(s);
  SemanticState state(s.size());
  EvalOptions options;
  EvalContext ctx{&g, &state, &options, 2, 1, PairStage::kArgument};
  TemplateSet set = ParseTemplateSetText("a.form\np.form\n");
  EXPECT_EQ(EvaluateAll(set, ctx),
            (std::vector<std::string>{"0=Investor", "1=focus"}));
}

TEST(TemplateSetTest, LintReportsSenseWithoutWord) {
  TemplateSet set = ParseTemplateSetText("p.currentSense + a.spPos\na.form\n");
  EXPECT_EQ(set.Lint().size(), 1u);
}

}  // namespace
}  // namespace semdep
