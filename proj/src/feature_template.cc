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

#include "semdep/feature_template.h"

#include <cctype>
#include <utility>

namespace semdep {
namespace {

template <typename E>
struct Named {
  std::string_view name;
  E value;
};

constexpr Named<Navigation> kNavigations[] = {
    {"h", Navigation::kHead},
    {"lm", Navigation::kLm},
    {"ln", Navigation::kLn},
    {"rm", Navigation::kRm},
    {"rn", Navigation::kRn},
    {"pphead", Navigation::kPpHead},
    {"isCurPred", Navigation::kIsCurPred},
    {"highSupportVerb", Navigation::kHighSupportVerb},
    {"highSupportNoun", Navigation::kHighSupportNoun},
    {"highSupportProp", Navigation::kHighSupportProp},
    {"lowSupportVerb", Navigation::kLowSupportVerb},
    {"lowSupportNoun", Navigation::kLowSupportNoun},
    {"lowSupportProp", Navigation::kLowSupportProp},
};

constexpr Named<Attribute> kAttributes[] = {
    {"form", Attribute::kForm},
    {"lemma", Attribute::kLemma},
    {"pos", Attribute::kPos},
    {"spForm", Attribute::kSpForm},
    {"spLemma", Attribute::kSpLemma},
    {"spPos", Attribute::kSpPos},
    {"dprel", Attribute::kDprel},
    {"semdprel", Attribute::kSemdprel},
    {"currentSense", Attribute::kCurrentSense},
    {"voice", Attribute::kVoice},
    {"isLeaf", Attribute::kIsLeaf},
    {"ctypeSemdprel", Attribute::kCtypeSemdprel},
    {"rtypeSemdprel", Attribute::kRtypeSemdprel},
    {"isCtypeSemdprel", Attribute::kIsCtypeSemdprel},
    {"isRtypeSemdprel", Attribute::kIsRtypeSemdprel},
    {"existSemdprel", Attribute::kExistSemdprel},
    {"baseline_Ax", Attribute::kBaselineAx},
    {"baseline_Mod", Attribute::kBaselineMod},
};

constexpr Named<Collection> kCollections[] = {
    {"children", Collection::kChildren},
    {"noFarChildren", Collection::kNoFarChildren},
};

constexpr Named<PathKind> kPaths[] = {
    {"dpPath", PathKind::kDpPath},
    {"dpPathArgu", PathKind::kDpPathArgu},
    {"dpPathPred", PathKind::kDpPathPred},
    {"dpPathShared", PathKind::kDpPathShared},
    {"linePath", PathKind::kLinePath},
};

constexpr Named<PairRelation> kRelations[] = {
    {"dpTreeRelation", PairRelation::kDpTreeRelation},
    {"direction", PairRelation::kDirection},
    {"existCross", PairRelation::kExistCross},
};

constexpr Named<Reducer> kReducers[] = {
    {"seq", Reducer::kSeq},
    {"noDup", Reducer::kNoDup},
    {"bag", Reducer::kBag},
};

template <typename E, size_t N>
std::optional<E> Lookup(const Named<E> (&table)[N], std::string_view name) {
  for (const auto &entry : table) {
    if (entry.name == name) return entry.value;
  }
  return std::nullopt;
}

template <typename E, size_t N>
std::string_view NameOf(const Named<E> (&table)[N], E value) {
  for (const auto &entry : table) {
    if (entry.value == value) return entry.name;
  }
  return "?";
}

constexpr std::string_view kExistPrefix = "existSemdprel_";

bool IsStateAttribute(Attribute a) {
  switch (a) {
    case Attribute::kSemdprel:
    case Attribute::kCurrentSense:
    case Attribute::kCtypeSemdprel:
    case Attribute::kRtypeSemdprel:
    case Attribute::kIsCtypeSemdprel:
    case Attribute::kIsRtypeSemdprel:
    case Attribute::kExistSemdprel:
      return true;
    default:
      return false;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  std::vector<Term> ParseTemplate() {
    SkipSpace();
    if (AtEnd()) Fail("empty template");
    std::vector<Term> parts;
    parts.push_back(ParseOperand());
    SkipSpace();
    while (!AtEnd()) {
      if (Peek() != '+') Fail(std::string("unexpected '") + Peek() + "'");
      ++pos_;
      parts.push_back(ParseOperand());
      SkipSpace();
    }
    return parts;
  }

 private:
  Term ParseOperand() {
    SkipSpace();
    if (Peek() == '(') {
      ++pos_;
      Term t = ParseOperand();
      SkipSpace();
      Expect(')');
      return t;
    }
    Term value = ParseValue();
    SkipSpace();
    if (Peek() != '=') return value;
    ++pos_;
    SkipSpace();
    Term eq;
    eq.kind = Term::Kind::kEquality;
    eq.operands.push_back(std::move(value));
    if (StartsNode()) {
      eq.operands.push_back(ParseValue());
    } else {
      size_t start = pos_;
      while (!AtEnd() && !std::isspace(static_cast<unsigned char>(Peek())) &&
             Peek() != '?') {
        ++pos_;
      }
      eq.literal = std::string(s_.substr(start, pos_ - start));
      if (eq.literal.empty()) Fail("expected a value or literal after '='");
    }
    SkipSpace();
    Expect('?');
    return eq;
  }

  Term ParseValue() {
    Term t;
    t.node = ParseNode();
    if (Peek() == ':' || (Peek() == ' ' && NextNonSpace() == ':')) {
      SkipSpace();
      ++pos_;
      SkipSpace();
      t.target = ParseNode();
      if (Peek() == '|') {
        ++pos_;
      } else if (!std::isspace(static_cast<unsigned char>(Peek()))) {
        Fail("expected '|' after path endpoints");
      }
      SkipSpace();
      size_t at = pos_;
      std::string name = Ident();
      if (auto rel = Lookup(kRelations, name)) {
        t.kind = Term::Kind::kPairRelation;
        t.relation = *rel;
        return t;
      }
      auto path = Lookup(kPaths, name);
      if (!path) FailAt("unknown path or relation '" + name + "'", at);
      t.path = *path;
      Expect('.');
      at = pos_;
      std::string attr = Ident();
      if (attr == "distance") {
        t.kind = Term::Kind::kPathDistance;
        return t;
      }
      t.kind = Term::Kind::kPathAttr;
      t.attr = ToAttr(attr, at);
      t.reducer = OptionalReducer();
      return t;
    }
    Expect('.');
    size_t at = pos_;
    std::string name = Ident();
    if (auto coll = Lookup(kCollections, name)) {
      t.kind = Term::Kind::kCollection;
      t.collection = *coll;
      Expect('.');
      at = pos_;
      t.attr = ToAttr(Ident(), at);
      t.reducer = OptionalReducer();
      return t;
    }
    t.kind = Term::Kind::kNodeAttr;
    t.attr = ToAttr(name, at);
    if (Peek() == '.') {
      size_t dot = pos_;
      ++pos_;
      at = pos_;
      std::string q = Ident();
      if (q == "baseline_Ax" || q == "baseline_Mod") {
        t.baseline = *Lookup(kAttributes, q);
      } else if (Lookup(kReducers, q)) {
        FailAt("reducer '" + q + "' applied to a single value", at);
      } else {
        FailAt("unexpected '." + q + "'", dot);
      }
    }
    return t;
  }

  NodeExpr ParseNode() {
    NodeExpr n;
    char c = Peek();
    if (c == 'a') {
      n.anchor = Anchor::kArgument;
    } else if (c == 'p') {
      n.anchor = Anchor::kPredicate;
    } else {
      Fail("expected anchor 'a' or 'p'");
    }
    ++pos_;
    n.offset = Offset();
    // Navigation steps; stop at the first name that is not a navigation.
    while (Peek() == '.') {
      size_t save = pos_;
      ++pos_;
      std::string name = Ident();
      auto nav = Lookup(kNavigations, name);
      if (!nav) {
        pos_ = save;
        break;
      }
      n.steps.push_back({*nav, Offset()});
    }
    if (n.steps.empty() && Peek() != '.' && Peek() != ':' && Peek() != '|' &&
        !std::isspace(static_cast<unsigned char>(Peek()))) {
      Fail("expected '.' or ':' after node");
    }
    return n;
  }

  int Offset() {
    size_t start = pos_;
    bool negative = false;
    if (Peek() == '-' && pos_ + 1 < s_.size() &&
        std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      negative = true;
      ++pos_;
    }
    int value = 0;
    bool any = false;
    while (!AtEnd() && std::isdigit(static_cast<unsigned char>(Peek()))) {
      value = value * 10 + (Peek() - '0');
      ++pos_;
      any = true;
    }
    if (!any) {
      pos_ = start;
      return 0;
    }
    if (value == 0) FailAt("zero offset", start);
    return negative ? -value : value;
  }

  std::string Ident() {
    size_t start = pos_;
    while (!AtEnd() && (std::isalpha(static_cast<unsigned char>(Peek())) ||
                        Peek() == '_')) {
      ++pos_;
    }
    std::string name(s_.substr(start, pos_ - start));
    if (name.rfind(kExistPrefix, 0) == 0) {
      while (!AtEnd() && (std::isalnum(static_cast<unsigned char>(Peek())) ||
                          Peek() == '-')) {
        ++pos_;
      }
      name = std::string(s_.substr(start, pos_ - start));
    }
    if (name.empty()) FailAt("expected a name", start);
    return name;
  }

  AttrRef ToAttr(const std::string &name, size_t at) {
    AttrRef a;
    if (name.rfind(kExistPrefix, 0) == 0) {
      a.attr = Attribute::kExistSemdprel;
      a.label = name.substr(kExistPrefix.size());
      if (a.label.empty()) FailAt("existSemdprel_ needs a label", at);
      return a;
    }
    if (name == "sense") {
      a.attr = Attribute::kCurrentSense;
      return a;
    }
    auto attr = Lookup(kAttributes, name);
    if (!attr || *attr == Attribute::kExistSemdprel) {
      if (Lookup(kNavigations, name) || Lookup(kCollections, name)) {
        FailAt("'" + name + "' needs a following attribute", at);
      }
      if (Lookup(kReducers, name)) {
        FailAt("reducer '" + name + "' applied to a node", at);
      }
      FailAt("unknown attribute '" + name + "'", at);
    }
    a.attr = *attr;
    return a;
  }

  Reducer OptionalReducer() {
    if (Peek() != '.') return Reducer::kNone;
    ++pos_;
    size_t at = pos_;
    std::string name = Ident();
    auto r = Lookup(kReducers, name);
    if (!r) FailAt("unknown reducer '" + name + "'", at);
    return *r;
  }

  bool StartsNode() const {
    if (AtEnd() || (Peek() != 'a' && Peek() != 'p')) return false;
    if (pos_ + 1 >= s_.size()) return false;
    char n = s_[pos_ + 1];
    return n == '.' || n == ':' || n == '-' ||
           std::isdigit(static_cast<unsigned char>(n));
  }

  char NextNonSpace() const {
    size_t i = pos_;
    while (i < s_.size() && std::isspace(static_cast<unsigned char>(s_[i]))) ++i;
    return i < s_.size() ? s_[i] : '\0';
  }

  void SkipSpace() {
    while (!AtEnd() && std::isspace(static_cast<unsigned char>(Peek()))) ++pos_;
  }
  bool AtEnd() const { return pos_ >= s_.size(); }
  char Peek() const { return AtEnd() ? '\0' : s_[pos_]; }
  void Expect(char c) {
    if (Peek() != c) Fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void Fail(const std::string &message) { FailAt(message, pos_); }
  [[noreturn]] void FailAt(const std::string &message, size_t at) {
    throw TemplateError(message, at);
  }

  std::string_view s_;
  size_t pos_ = 0;
};

void PrintOffset(int offset, std::string *out) {
  if (offset != 0) out->append(std::to_string(offset));
}

void PrintNode(const NodeExpr &n, std::string *out) {
  out->push_back(n.anchor == Anchor::kArgument ? 'a' : 'p');
  PrintOffset(n.offset, out);
  for (const NodeStep &s : n.steps) {
    out->push_back('.');
    out->append(NavigationName(s.nav));
    PrintOffset(s.offset, out);
  }
}

void PrintAttr(const AttrRef &a, std::string *out) {
  if (a.attr == Attribute::kExistSemdprel) {
    out->append(kExistPrefix);
    out->append(a.label);
  } else {
    out->append(AttributeName(a.attr));
  }
}

void PrintReducer(Reducer r, std::string *out) {
  if (r == Reducer::kNone) return;
  out->push_back('.');
  out->append(NameOf(kReducers, r));
}

void PrintTerm(const Term &t, std::string *out) {
  switch (t.kind) {
    case Term::Kind::kNodeAttr:
      PrintNode(t.node, out);
      out->push_back('.');
      PrintAttr(t.attr, out);
      if (t.baseline) {
        out->push_back('.');
        out->append(AttributeName(*t.baseline));
      }
      break;
    case Term::Kind::kCollection:
      PrintNode(t.node, out);
      out->push_back('.');
      out->append(NameOf(kCollections, t.collection));
      out->push_back('.');
      PrintAttr(t.attr, out);
      PrintReducer(t.reducer, out);
      break;
    case Term::Kind::kPathAttr:
    case Term::Kind::kPathDistance:
    case Term::Kind::kPairRelation:
      PrintNode(t.node, out);
      out->push_back(':');
      PrintNode(t.target, out);
      out->push_back('|');
      if (t.kind == Term::Kind::kPairRelation) {
        out->append(NameOf(kRelations, t.relation));
        break;
      }
      out->append(NameOf(kPaths, t.path));
      out->push_back('.');
      if (t.kind == Term::Kind::kPathDistance) {
        out->append("distance");
        break;
      }
      PrintAttr(t.attr, out);
      PrintReducer(t.reducer, out);
      break;
    case Term::Kind::kEquality:
      PrintTerm(t.operands[0], out);
      out->append(" = ");
      if (t.operands.size() > 1) {
        PrintTerm(t.operands[1], out);
      } else {
        out->append(t.literal);
      }
      out->append(" ?");
      break;
  }
}

bool TermDependsOnState(const Term &t) {
  switch (t.kind) {
    case Term::Kind::kPairRelation:
      return t.relation == PairRelation::kExistCross;
    case Term::Kind::kPathDistance:
      return false;
    case Term::Kind::kEquality:
      for (const Term &o : t.operands) {
        if (TermDependsOnState(o)) return true;
      }
      return false;
    default:
      return IsStateAttribute(t.attr.attr);
  }
}

bool TermHas(const Term &t, bool (*pred)(Attribute)) {
  if (t.kind == Term::Kind::kEquality) {
    for (const Term &o : t.operands) {
      if (TermHas(o, pred)) return true;
    }
    return false;
  }
  if (t.kind == Term::Kind::kPathDistance || t.kind == Term::Kind::kPairRelation) {
    return false;
  }
  return pred(t.attr.attr) || (t.baseline && pred(*t.baseline));
}

}  // namespace

std::string_view NavigationName(Navigation n) { return NameOf(kNavigations, n); }
std::string_view AttributeName(Attribute a) { return NameOf(kAttributes, a); }

std::string PrintTemplate(const std::vector<Term> &parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.append(" + ");
    PrintTerm(parts[i], &out);
  }
  return out;
}

FeatureTemplate FeatureTemplate::Parse(std::string_view text) {
  FeatureTemplate t;
  t.parts_ = Parser(text).ParseTemplate();
  t.text_ = PrintTemplate(t.parts_);
  for (const Term &part : t.parts_) {
    t.depends_on_state_ = t.depends_on_state_ || TermDependsOnState(part);
  }
  return t;
}

std::optional<std::string> LintTemplate(const FeatureTemplate &t) {
  bool sense = false, lexical = false;
  for (const Term &part : t.parts()) {
    sense = sense || TermHas(part, [](Attribute a) {
              return a == Attribute::kCurrentSense;
            });
    lexical = lexical || TermHas(part, [](Attribute a) {
                return a == Attribute::kForm || a == Attribute::kLemma ||
                       a == Attribute::kSpForm || a == Attribute::kSpLemma;
              });
  }
  if (sense && !lexical) {
    return "'" + t.text() + "' uses currentSense without a word form or lemma";
  }
  return std::nullopt;
}

}  // namespace semdep
