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

#ifndef SEMDEP_CONLL_H_
#define SEMDEP_CONLL_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace semdep {

// One row of the column format. Empty optional fields are stored as "".
struct Token {
  int id = 0;  // 1-based position
  std::string form;
  std::string lemma;
  std::string pos;
  std::string sp_form;   // defaults to form when the split columns are absent
  std::string sp_lemma;  // defaults to lemma
  std::string sp_pos;    // defaults to pos
  int head = 0;          // 0 = root
  std::string deprel;
  std::string pred;  // roleset "lemma.NN", or "" when not a predicate

  bool operator==(const Token &) const = default;
};

struct Argument {
  int token = 0;
  std::string role;

  bool operator==(const Argument &) const = default;
};

// One predicate with its sense and its labeled arguments in text order.
struct SemanticFrame {
  int predicate = 0;
  std::string sense;  // two digits, e.g. "01"
  std::vector<Argument> arguments;

  bool operator==(const SemanticFrame &) const = default;
};

struct Sentence {
  std::vector<Token> tokens;
  std::vector<SemanticFrame> frames;  // one per token with a pred, text order

  int size() const { return static_cast<int>(tokens.size()); }
  // 1-based access.
  const Token &token(int id) const { return tokens[id - 1]; }
  Token &token(int id) { return tokens[id - 1]; }
  // Frame of predicate `id`, or nullptr.
  const SemanticFrame *FrameOf(int id) const;

  bool operator==(const Sentence &) const = default;
};

// Splits "shift.01" into lemma and sense. Returns false if `pred` does not
// have the shape <lemma>.<two digits>.
bool SplitRoleset(std::string_view pred, std::string *lemma,
                  std::string *sense);

// Rebuilds every token's PRED column from `frames`, using the token lemma
// for newly created rolesets. Used after decoding.
void SyncPredColumn(Sentence *sentence);

// Field positions for reading a column layout. Negative = column absent.
struct ColumnMap {
  int id = 0;
  int form = 1;
  int lemma = 2;
  int pos = 3;
  int sp_form = -1;
  int sp_lemma = -1;
  int sp_pos = -1;
  int head = 4;
  int deprel = 5;
  int pred = 6;
  // Index of the first ARG column; ARG columns run to the end of the row.
  int first_arg = 7;

  // ID FORM LEMMA POS HEAD DEPREL PRED ARG...
  static ColumnMap Simple();
  // ID FORM LEMMA POS SPLIT_FORM SPLIT_LEMMA SPLIT_POS HEAD DEPREL PRED ARG...
  static ColumnMap Split();
  // The official CoNLL-2008 layout: ID FORM LEMMA GPOS PPOS SPLIT_FORM
  // SPLIT_LEMMA PPOSS HEAD DEPREL PRED ARG... (predicted POS columns used).
  static ColumnMap Conll2008();
};

enum class ColumnLayout {
  kAuto,       // Simple or Split, decided per sentence
  kSimple,
  kSplit,
  kConll2008,
  kCustom,     // ParseOptions::custom
};

enum class ParseMode { kFailFast, kCollect };

struct ParseOptions {
  ColumnLayout layout = ColumnLayout::kAuto;
  ColumnMap custom;
  ParseMode mode = ParseMode::kFailFast;
};

struct ParseIssue {
  enum class Severity { kWarning, kError };
  Severity severity = Severity::kError;
  int line = 0;
  std::string message;
};

struct ParseResult {
  std::vector<Sentence> sentences;
  // Errors (the offending sentence is skipped) and warnings such as
  // multiple roots or head cycles (the sentence is kept as read).
  std::vector<ParseIssue> issues;

  bool ok() const;
};

// Reads tab-separated sentences separated by blank lines. `-` and `_` both
// denote an empty cell; lines starting with '#' are ignored. In kFailFast
// mode the first error throws FormatError; warnings never throw.
ParseResult ParseCorpus(std::istream &in, const ParseOptions &options = {});
ParseResult ParseCorpusText(std::string_view text,
                            const ParseOptions &options = {});
ParseResult ReadCorpusFile(const std::string &path,
                           const ParseOptions &options = {});

// Canonical form: the simplified layout, with the split columns emitted only
// when some token's split fields differ from the unsplit ones; `-` marks
// empty cells; every sentence is followed by one blank line. Throws Error if
// a sentence violates an invariant.
std::string SerializeCorpus(const std::vector<Sentence> &sentences);
void WriteCorpusFile(const std::string &path,
                     const std::vector<Sentence> &sentences);

// Returns a description of every invariant violation; empty when valid.
// Multiple roots and cycles are not reported here (they are repairable).
std::vector<std::string> ValidateSentence(const Sentence &sentence);

// Head-structure diagnostics: multiple roots, no root, cycles.
std::vector<std::string> DescribeTreeProblems(const Sentence &sentence);

}  // namespace semdep

#endif  // SEMDEP_CONLL_H_
