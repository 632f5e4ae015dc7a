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


#include "test_util.h"

#include <fstream>
#include <sstream>

#include "semdep/error.h"

namespace semdep::testing {

const char kShiftedSentence[] =
    "1\tInvestor\tinvestor\tNN\t2\tNMOD\t-\tA0\t-\t-\n"
    "2\tfocus\tfocus\tNN\t3\tSBJ\tfocus.01\t-\tA1\t-\n"
    "3\tshifted\tshift\tVBD\t7\tOBJ\tshift.01\t-\t-\tA1\n"
    "4\tquickly\tquickly\tRB\t3\tMNR\t-\t-\tAM-MNR\t-\n"
    "5\t,\t,\t,\t7\tP\t-\t-\t-\t-\n"
    "6\ttraders\ttrader\tNNS\t7\tSBJ\t-\t-\t-\tA0\n"
    "7\tsaid\tsay\tVBD\t0\tROOT\tsay.01\t-\t-\t-\n"
    "8\t.\t.\t.\t7\tP\t-\t-\t-\t-\n"
    "\n";

Sentence ShiftedSentence() {
  ParseResult r = ParseCorpusText(kShiftedSentence);
  if (!r.ok() || r.sentences.size() != 1) throw Error("bad fixture");
  return r.sentences[0];
}

Sentence LinearExample() {
  Sentence s;
  const char *forms[] = {"a", "b", "c", "d", "e", "f", "g", "h", "."};
  for (int i = 0; i < 9; ++i) {
    Token t;
    t.id = i + 1;
    t.form = t.lemma = t.sp_form = t.sp_lemma = forms[i];
    t.pos = t.sp_pos = i == 4 ? "VBZ" : (i == 8 ? "." : "NN");
    t.head = i == 4 ? 0 : 5;
    t.deprel = i == 4 ? "ROOT" : "DEP";
    s.tokens.push_back(t);
  }
  s.frames.push_back({5, "01", {{4, "A1"}, {6, "A0"}}});
  s.token(5).pred = "e.01";
  return s;
}

std::string DataPath(const std::string &relative) {
  return std::string(SEMDEP_TEST_DATA_DIR) + "/" + relative;
}

std::string SourcePath(const std::string &relative) {
  return std::string(SEMDEP_TEST_SOURCE_DIR) + "/" + relative;
}

TemplateSet SyntheticTemplates() {
  return LoadTemplateFile(DataPath("templates/synthetic.txt"));
}

GrammarParams LearnableGrammar() {
  GrammarParams g;
  g.max_len = 20;
  return g;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace semdep::testing
