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

#include "semdep/conll.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "semdep/error.h"
#include "semdep/labels.h"

namespace semdep {
namespace {

struct Row {
  int line = 0;
  std::vector<std::string> cells;
};

std::vector<std::string> SplitTabs(std::string_view line) {
  std::vector<std::string> cells;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cells.emplace_back(line.substr(start));
      break;
    }
    cells.emplace_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cells;
}

bool IsEmptyCell(std::string_view cell) {
  return cell.empty() || cell == "-" || cell == "_";
}

bool ParseInt(std::string_view s, int *out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// Predicate count under a map = number of rows whose PRED cell is non-empty.
int CountPredicates(const std::vector<Row> &rows, const ColumnMap &map) {
  int n = 0;
  for (const Row &r : rows) {
    if (map.pred < static_cast<int>(r.cells.size()) &&
        !IsEmptyCell(r.cells[map.pred])) {
      ++n;
    }
  }
  return n;
}

// True if every row fits `map`: column count and integer heads.
bool Fits(const std::vector<Row> &rows, const ColumnMap &map) {
  int expected = map.first_arg + CountPredicates(rows, map);
  for (const Row &r : rows) {
    if (static_cast<int>(r.cells.size()) != expected) return false;
    int head;
    if (!ParseInt(r.cells[map.head], &head)) return false;
  }
  return true;
}

class BlockParser {
 public:
  BlockParser(const ParseOptions &options, ParseResult *result)
      : options_(options), result_(result) {}

  void Parse(const std::vector<Row> &rows) {
    ColumnMap map;
    if (!ChooseMap(rows, &map)) return;
    Sentence sentence;
    bool ok = true;
    const int n = static_cast<int>(rows.size());
    const int num_preds = CountPredicates(rows, map);
    const int expected_cols = map.first_arg + num_preds;
    for (int i = 0; i < n && ok; ++i) {
      const Row &row = rows[i];
      const auto &c = row.cells;
      if (static_cast<int>(c.size()) != expected_cols) {
        int found_args = static_cast<int>(c.size()) - map.first_arg;
        if (found_args >= 0) {
          ok = Fail(row.line, "expected " + std::to_string(num_preds) +
                                  " ARG columns for " +
                                  std::to_string(num_preds) +
                                  " predicates, found " +
                                  std::to_string(found_args));
        } else {
          ok = Fail(row.line, "expected " + std::to_string(expected_cols) +
                                  " columns, found " +
                                  std::to_string(c.size()));
        }
        break;
      }
      Token t;
      if (!ParseInt(c[map.id], &t.id) || t.id != i + 1) {
        ok = Fail(row.line, "token id '" + c[map.id] + "' should be " +
                                std::to_string(i + 1));
        break;
      }
      t.form = c[map.form];
      t.lemma = c[map.lemma];
      t.pos = c[map.pos];
      t.sp_form = Optional(c, map.sp_form, t.form);
      t.sp_lemma = Optional(c, map.sp_lemma, t.lemma);
      t.sp_pos = Optional(c, map.sp_pos, t.pos);
      if (!ParseInt(c[map.head], &t.head)) {
        ok = Fail(row.line, "head '" + c[map.head] + "' is not an integer");
        break;
      }
      if (t.head < 0 || t.head > n) {
        ok = Fail(row.line, "unresolvable head " + std::to_string(t.head) +
                                " in a sentence of " + std::to_string(n) +
                                " tokens");
        break;
      }
      if (t.head == t.id) {
        ok = Fail(row.line, "token " + std::to_string(t.id) +
                                " is its own head");
        break;
      }
      t.deprel = c[map.deprel];
      if (!IsEmptyCell(c[map.pred])) {
        t.pred = c[map.pred];
        std::string lemma, sense;
        if (!SplitRoleset(t.pred, &lemma, &sense)) {
          ok = Fail(row.line, "predicate '" + t.pred +
                                  "' does not match <lemma>.<NN>");
          break;
        }
        sentence.frames.push_back({t.id, sense, {}});
      }
      sentence.tokens.push_back(std::move(t));
    }
    // ARG column k binds to the k-th predicate in text order.
    for (int i = 0; i < n && ok; ++i) {
      const auto &c = rows[i].cells;
      for (int k = 0; k < num_preds; ++k) {
        const std::string &cell = c[map.first_arg + k];
        if (IsEmptyCell(cell)) continue;
        if (!IsArgumentRole(cell)) {
          ok = Fail(rows[i].line, "unknown argument label '" + cell + "'");
          break;
        }
        sentence.frames[k].arguments.push_back({i + 1, cell});
      }
    }
    if (!ok) return;
    for (const std::string &problem : DescribeTreeProblems(sentence)) {
      result_->issues.push_back(
          {ParseIssue::Severity::kWarning, rows.front().line, problem});
    }
    result_->sentences.push_back(std::move(sentence));
  }

 private:
  static std::string Optional(const std::vector<std::string> &cells, int col,
                              const std::string &fallback) {
    if (col < 0 || IsEmptyCell(cells[col])) return fallback;
    return cells[col];
  }

  bool ChooseMap(const std::vector<Row> &rows, ColumnMap *map) {
    switch (options_.layout) {
      case ColumnLayout::kSimple: *map = ColumnMap::Simple(); return true;
      case ColumnLayout::kSplit: *map = ColumnMap::Split(); return true;
      case ColumnLayout::kConll2008: *map = ColumnMap::Conll2008(); return true;
      case ColumnLayout::kCustom: *map = options_.custom; return true;
      case ColumnLayout::kAuto: break;
    }
    if (Fits(rows, ColumnMap::Simple())) {
      *map = ColumnMap::Simple();
      return true;
    }
    if (Fits(rows, ColumnMap::Split())) {
      *map = ColumnMap::Split();
      return true;
    }
    // Neither layout fits: report against the simple layout, which names
    // the offending row.
    *map = ColumnMap::Simple();
    for (const Row &r : rows) {
      if (static_cast<int>(r.cells.size()) < map->first_arg) {
        Fail(r.line, "expected at least " + std::to_string(map->first_arg) +
                         " columns, found " + std::to_string(r.cells.size()));
        return false;
      }
    }
    return true;  // Parse() reports the precise mismatch
  }

  bool Fail(int line, const std::string &message) {
    if (options_.mode == ParseMode::kFailFast) throw FormatError(message, line);
    result_->issues.push_back({ParseIssue::Severity::kError, line, message});
    return false;
  }

  const ParseOptions &options_;
  ParseResult *result_;
};

void AppendRow(std::string *out, const std::vector<std::string> &cells) {
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out->push_back('\t');
    out->append(cells[i]);
  }
  out->push_back('\n');
}

std::string CellOrDash(const std::string &s) { return s.empty() ? "-" : s; }

}  // namespace

const SemanticFrame *Sentence::FrameOf(int id) const {
  for (const auto &f : frames) {
    if (f.predicate == id) return &f;
  }
  return nullptr;
}

bool SplitRoleset(std::string_view pred, std::string *lemma,
                  std::string *sense) {
  size_t dot = pred.rfind('.');
  if (dot == std::string_view::npos || dot == 0) return false;
  std::string_view digits = pred.substr(dot + 1);
  if (digits.size() != 2 || !std::isdigit(static_cast<unsigned char>(digits[0])) ||
      !std::isdigit(static_cast<unsigned char>(digits[1]))) {
    return false;
  }
  if (lemma != nullptr) *lemma = std::string(pred.substr(0, dot));
  if (sense != nullptr) *sense = std::string(digits);
  return true;
}

void SyncPredColumn(Sentence *sentence) {
  for (auto &t : sentence->tokens) t.pred.clear();
  for (const auto &f : sentence->frames) {
    sentence->token(f.predicate).pred =
        sentence->token(f.predicate).lemma + "." + f.sense;
  }
}

ColumnMap ColumnMap::Simple() { return ColumnMap(); }

ColumnMap ColumnMap::Split() {
  ColumnMap m;
  m.sp_form = 4;
  m.sp_lemma = 5;
  m.sp_pos = 6;
  m.head = 7;
  m.deprel = 8;
  m.pred = 9;
  m.first_arg = 10;
  return m;
}

ColumnMap ColumnMap::Conll2008() {
  ColumnMap m;
  m.pos = 4;
  m.sp_form = 5;
  m.sp_lemma = 6;
  m.sp_pos = 7;
  m.head = 8;
  m.deprel = 9;
  m.pred = 10;
  m.first_arg = 11;
  return m;
}

bool ParseResult::ok() const {
  return std::none_of(issues.begin(), issues.end(), [](const ParseIssue &i) {
    return i.severity == ParseIssue::Severity::kError;
  });
}

ParseResult ParseCorpus(std::istream &in, const ParseOptions &options) {
  ParseResult result;
  BlockParser parser(options, &result);
  std::vector<Row> block;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '#') continue;
    bool blank = line.find_first_not_of(" \t") == std::string::npos;
    if (blank) {
      if (!block.empty()) parser.Parse(block);
      block.clear();
      continue;
    }
    block.push_back({line_no, SplitTabs(line)});
  }
  if (!block.empty()) parser.Parse(block);
  return result;
}

ParseResult ParseCorpusText(std::string_view text,
                            const ParseOptions &options) {
  std::istringstream in{std::string(text)};
  return ParseCorpus(in, options);
}

ParseResult ReadCorpusFile(const std::string &path,
                           const ParseOptions &options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file '" + path + "'");
  return ParseCorpus(in, options);
}

std::vector<std::string> ValidateSentence(const Sentence &s) {
  std::vector<std::string> problems;
  const int n = s.size();
  std::vector<int> pred_tokens;
  for (int i = 0; i < n; ++i) {
    const Token &t = s.tokens[i];
    std::string where = "token " + std::to_string(i + 1) + ": ";
    if (t.id != i + 1) problems.push_back(where + "id is " + std::to_string(t.id));
    if (t.head < 0 || t.head > n) problems.push_back(where + "head out of range");
    if (t.head == t.id) problems.push_back(where + "is its own head");
    if (t.form.empty()) problems.push_back(where + "empty form");
    if (!t.pred.empty()) {
      if (!SplitRoleset(t.pred, nullptr, nullptr)) {
        problems.push_back(where + "malformed predicate '" + t.pred + "'");
      }
      pred_tokens.push_back(t.id);
    }
  }
  if (pred_tokens.size() != s.frames.size()) {
    problems.push_back("frame count " + std::to_string(s.frames.size()) +
                       " differs from predicate count " +
                       std::to_string(pred_tokens.size()));
    return problems;
  }
  for (size_t k = 0; k < s.frames.size(); ++k) {
    const SemanticFrame &f = s.frames[k];
    std::string where = "frame " + std::to_string(k + 1) + ": ";
    if (f.predicate != pred_tokens[k]) {
      problems.push_back(where + "predicate id does not follow text order");
      continue;
    }
    std::string sense;
    SplitRoleset(s.token(f.predicate).pred, nullptr, &sense);
    if (sense != f.sense) problems.push_back(where + "sense differs from PRED");
    int last = 0;
    for (const Argument &a : f.arguments) {
      if (a.token <= last || a.token > n) {
        problems.push_back(where + "arguments must be distinct in-range "
                                   "tokens in text order");
        break;
      }
      last = a.token;
      if (!IsArgumentRole(a.role)) {
        problems.push_back(where + "label '" + a.role +
                           "' is not an argument role");
      }
    }
  }
  return problems;
}

std::vector<std::string> DescribeTreeProblems(const Sentence &s) {
  std::vector<std::string> problems;
  const int n = s.size();
  int roots = 0;
  for (const Token &t : s.tokens) roots += t.head == 0;
  if (n > 0 && roots == 0) problems.push_back("no root token (head = 0)");
  if (roots > 1) {
    problems.push_back("multiple roots (" + std::to_string(roots) +
                       " tokens with head = 0)");
  }
  // A node is on or above a cycle if walking n steps never reaches 0.
  std::vector<int> state(n + 1, 0);  // 0 unknown, 1 reaches root, 2 cyclic
  state[0] = 1;
  bool cyclic = false;
  for (int i = 1; i <= n; ++i) {
    int cur = i;
    int steps = 0;
    while (cur != 0 && state[cur] == 0 && steps <= n) {
      int h = s.token(cur).head;
      if (h < 0 || h > n) break;
      cur = h;
      ++steps;
    }
    if (cur != 0 && state[cur] != 1) cyclic = true;
  }
  if (cyclic) problems.push_back("head links contain a cycle");
  return problems;
}

std::string SerializeCorpus(const std::vector<Sentence> &sentences) {
  std::string out;
  for (size_t si = 0; si < sentences.size(); ++si) {
    const Sentence &s = sentences[si];
    auto problems = ValidateSentence(s);
    if (!problems.empty()) {
      throw Error("sentence " + std::to_string(si + 1) +
                  " is invalid: " + problems.front());
    }
    bool split = std::any_of(s.tokens.begin(), s.tokens.end(),
                             [](const Token &t) {
                               return t.sp_form != t.form ||
                                      t.sp_lemma != t.lemma ||
                                      t.sp_pos != t.pos;
                             });
    std::vector<std::vector<std::string>> args(
        s.size(), std::vector<std::string>(s.frames.size(), "-"));
    for (size_t k = 0; k < s.frames.size(); ++k) {
      for (const Argument &a : s.frames[k].arguments) {
        args[a.token - 1][k] = a.role;
      }
    }
    for (const Token &t : s.tokens) {
      std::vector<std::string> cells = {std::to_string(t.id), t.form, t.lemma,
                                        t.pos};
      if (split) {
        cells.push_back(t.sp_form);
        cells.push_back(t.sp_lemma);
        cells.push_back(t.sp_pos);
      }
      cells.push_back(std::to_string(t.head));
      cells.push_back(t.deprel);
      cells.push_back(CellOrDash(t.pred));
      for (auto &a : args[t.id - 1]) cells.push_back(std::move(a));
      AppendRow(&out, cells);
    }
    out.push_back('\n');
  }
  return out;
}

void WriteCorpusFile(const std::string &path,
                     const std::vector<Sentence> &sentences) {
  std::string text = SerializeCorpus(sentences);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write corpus file '" + path + "'");
  out << text;
}

}  // namespace semdep
