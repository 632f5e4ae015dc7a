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

#include "semdep/feature_eval.h"

#include <algorithm>
#include <cstdlib>
#include <optional>

namespace semdep {
namespace {

using Node = std::optional<int>;

const std::string &Nil() {
  static const std::string *nil = new std::string(kNil);
  return *nil;
}

std::string Bool(bool b) { return b ? "1" : "0"; }

bool Contains(const std::vector<std::string> &list, std::string_view s) {
  return std::find(list.begin(), list.end(), s) != list.end();
}

class Evaluator {
 public:
  explicit Evaluator(const EvalContext &ctx)
      : ctx_(ctx), g_(*ctx.graph), options_(*ctx.options) {}

  std::string Value(const FeatureTemplate &t) {
    const auto &parts = t.parts();
    if (parts.size() == 1) return EvalTerm(parts[0]);
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out.push_back('#');
      out.append(EscapeToken(EvalTerm(parts[i])));
    }
    return out;
  }

 private:
  std::string EvalTerm(const Term &t) {
    switch (t.kind) {
      case Term::Kind::kNodeAttr: {
        Node x = Resolve(t.node);
        std::string v = Attr(x, t.attr);
        if (t.baseline) {
          v = EscapeToken(v) + "#" + EscapeToken(Attr(x, {*t.baseline, ""}));
        }
        return v;
      }
      case Term::Kind::kCollection: {
        Node x = Resolve(t.node);
        if (!x) return Nil();
        Family f = g_.family(*x);
        const auto &members = t.collection == Collection::kChildren
                                  ? f.children
                                  : f.no_far_children;
        return Reduce(members, t.attr, t.reducer);
      }
      case Term::Kind::kPathAttr: {
        Node x = Resolve(t.node), y = Resolve(t.target);
        if (!x || !y) return Nil();
        return Reduce(Path(t.path, *x, *y), t.attr, t.reducer);
      }
      case Term::Kind::kPathDistance: {
        Node x = Resolve(t.node), y = Resolve(t.target);
        if (!x || !y) return Nil();
        int d = static_cast<int>(Path(t.path, *x, *y).size()) - 1;
        return options_.raw_distance ? std::to_string(d) : DistanceBucket(d);
      }
      case Term::Kind::kPairRelation: {
        Node x = Resolve(t.node), y = Resolve(t.target);
        if (!x || !y) return Nil();
        switch (t.relation) {
          case PairRelation::kDpTreeRelation:
            return std::string(TreeRelationName(g_.Relation(*x, *y)));
          case PairRelation::kDirection:
            return *x < *y ? "left" : *x > *y ? "right" : "self";
          case PairRelation::kExistCross:
            return Bool(ctx_.state->Crosses(*x, *y));
        }
        return Nil();
      }
      case Term::Kind::kEquality: {
        std::string lhs = EvalTerm(t.operands[0]);
        std::string rhs =
            t.operands.size() > 1 ? EvalTerm(t.operands[1]) : t.literal;
        return Bool(lhs == rhs);
      }
    }
    return Nil();
  }

  Node Shift(int node, int offset) const {
    int n = node + offset;
    if (!g_.Valid(n)) return std::nullopt;
    return n;
  }

  Node Resolve(const NodeExpr &e) const {
    int base = e.anchor == Anchor::kArgument ? ctx_.a() : ctx_.p();
    Node x = Shift(base, e.offset);
    for (const NodeStep &s : e.steps) {
      if (!x) return x;
      x = Step(*x, s.nav);
      if (x && s.offset != 0) x = Shift(*x, s.offset);
    }
    return x;
  }

  Node Step(int x, Navigation nav) const {
    auto nonzero = [](int v) -> Node {
      if (v == 0) return std::nullopt;
      return v;
    };
    switch (nav) {
      case Navigation::kHead:
        return nonzero(g_.head(x));
      case Navigation::kLm:
        return g_.family(x).lm;
      case Navigation::kLn:
        return g_.family(x).ln;
      case Navigation::kRm:
        return g_.family(x).rm;
      case Navigation::kRn:
        return g_.family(x).rn;
      case Navigation::kPpHead:
        return nonzero(g_.PpHead(x));
      case Navigation::kIsCurPred:
        if (x == ctx_.p()) return x;
        return std::nullopt;
      case Navigation::kHighSupportVerb:
        return g_.SupportWord(x, PosClasses::Class::kVerb, SupportLevel::kHigh);
      case Navigation::kHighSupportNoun:
        return g_.SupportWord(x, PosClasses::Class::kNoun, SupportLevel::kHigh);
      case Navigation::kHighSupportProp:
        return g_.SupportWord(x, PosClasses::Class::kPrep, SupportLevel::kHigh);
      case Navigation::kLowSupportVerb:
        return g_.SupportWord(x, PosClasses::Class::kVerb, SupportLevel::kLow);
      case Navigation::kLowSupportNoun:
        return g_.SupportWord(x, PosClasses::Class::kNoun, SupportLevel::kLow);
      case Navigation::kLowSupportProp:
        return g_.SupportWord(x, PosClasses::Class::kPrep, SupportLevel::kLow);
    }
    return std::nullopt;
  }

  std::vector<int> Path(PathKind kind, int x, int y) const {
    if (kind == PathKind::kLinePath) return DepGraph::LinearPath(x, y);
    PathDecomposition d = g_.DecomposePaths(x, y);
    switch (kind) {
      case PathKind::kDpPathArgu:
        return d.argu;
      case PathKind::kDpPathPred:
        return d.pred;
      case PathKind::kDpPathShared:
        return d.shared;
      default:
        return d.full;
    }
  }

  std::string Reduce(const std::vector<int> &nodes, const AttrRef &attr,
                     Reducer r) const {
    if (nodes.empty()) return Nil();
    std::vector<std::string> items;
    items.reserve(nodes.size());
    for (int n : nodes) items.push_back(EscapeToken(Attr(n, attr)));
    switch (r) {
      case Reducer::kNoDup:
        return ReduceNoDup(items);
      case Reducer::kBag:
        return ReduceBag(items);
      default:
        return ReduceSeq(items);
    }
  }

  std::string Attr(Node node, const AttrRef &ref) const {
    if (!node) return Nil();
    int x = *node;
    const Token &tok = g_.token(x);
    const SemanticState &state = *ctx_.state;
    int p = ctx_.p();
    auto or_nil = [](const std::string &s) { return s.empty() ? Nil() : s; };
    switch (ref.attr) {
      case Attribute::kForm:
        return or_nil(tok.form);
      case Attribute::kLemma:
        return or_nil(tok.lemma);
      case Attribute::kPos:
        return or_nil(tok.pos);
      case Attribute::kSpForm:
        return or_nil(tok.sp_form);
      case Attribute::kSpLemma:
        return or_nil(tok.sp_lemma);
      case Attribute::kSpPos:
        return or_nil(tok.sp_pos);
      case Attribute::kDprel:
        return or_nil(tok.deprel);
      case Attribute::kSemdprel: {
        const std::string *role = state.Role(p, x);
        return role ? *role : Nil();
      }
      case Attribute::kCurrentSense:
        return or_nil(state.sense(x));
      case Attribute::kVoice:
        return Voice(x);
      case Attribute::kIsLeaf:
        return Bool(g_.IsLeaf(x));
      case Attribute::kCtypeSemdprel:
        return Typed(x, "C-");
      case Attribute::kRtypeSemdprel:
        return Typed(x, "R-");
      case Attribute::kIsCtypeSemdprel:
      case Attribute::kIsRtypeSemdprel: {
        const std::string *role = state.Role(p, x);
        const char *prefix =
            ref.attr == Attribute::kIsCtypeSemdprel ? "C-" : "R-";
        return Bool(role && role->rfind(prefix, 0) == 0);
      }
      case Attribute::kExistSemdprel:
        return Bool(state.HasRole(p, ref.label, x));
      case Attribute::kBaselineAx:
        return BaselineAx(x);
      case Attribute::kBaselineMod:
        if (g_.classes().IsModal(tok.pos) && g_.head(x) == p) return "AM-MOD";
        return Nil();
    }
    return Nil();
  }

  std::string Voice(int x) const {
    const Token &tok = g_.token(x);
    if (!g_.classes().IsVerb(tok.pos)) return "default";
    if (!Contains(options_.passive_pos, tok.pos)) return "Active";
    for (int anc : g_.Ancestors(x)) {
      if (Contains(options_.passive_aux, g_.token(anc).lemma)) return "Passive";
    }
    for (int child : g_.children(x)) {
      if (Contains(options_.passive_aux, g_.token(child).lemma)) {
        return "Passive";
      }
    }
    return "Active";
  }

  // Base label X of the latest C-X / R-X argument of predicate x.
  std::string Typed(int x, std::string_view prefix) const {
    const auto &arcs = ctx_.state->arcs();
    for (auto it = arcs.rbegin(); it != arcs.rend(); ++it) {
      if (it->predicate == x && it->role.rfind(prefix, 0) == 0) {
        return it->role.substr(prefix.size());
      }
    }
    return Nil();
  }

  std::string BaselineAx(int x) const {
    int p = ctx_.p();
    const PosClasses &c = g_.classes();
    for (int i = p - 1; i >= 1; --i) {
      if (c.IsNoun(g_.token(i).pos)) {
        if (i == x) return "A0";
        break;
      }
    }
    for (int i = p + 1; i <= g_.size(); ++i) {
      if (c.IsNoun(g_.token(i).pos)) {
        if (i == x) return "A1";
        break;
      }
    }
    return Nil();
  }

  const EvalContext &ctx_;
  const DepGraph &g_;
  const EvalOptions &options_;
};

}  // namespace

void SemanticState::SetSense(int token, std::string sense) {
  if (senses_.use_count() > 1) {
    senses_ = std::make_shared<std::vector<std::string>>(*senses_);
  }
  (*senses_)[token] = std::move(sense);
}

const std::string *SemanticState::Role(int predicate, int argument) const {
  for (const SemanticArc &arc : arcs_) {
    if (arc.predicate == predicate && arc.argument == argument) {
      return &arc.role;
    }
  }
  return nullptr;
}

bool SemanticState::HasRole(int predicate, std::string_view role,
                            int except) const {
  for (const SemanticArc &arc : arcs_) {
    if (arc.predicate == predicate && arc.argument != except &&
        arc.role == role) {
      return true;
    }
  }
  return false;
}

bool SemanticState::Crosses(int x, int y) const {
  int lo = std::min(x, y), hi = std::max(x, y);
  for (const SemanticArc &arc : arcs_) {
    int l = std::min(arc.predicate, arc.argument);
    int h = std::max(arc.predicate, arc.argument);
    if ((l < lo && lo < h && h < hi) || (lo < l && l < hi && hi < h)) {
      return true;
    }
  }
  return false;
}

std::string EscapeToken(std::string_view token) {
  std::string out;
  out.reserve(token.size());
  if (token == kNil) return std::string(token);
  for (char c : token) {
    if (c == '\\' || c == '#' || c == '=' || c == '^') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string ReduceSeq(const std::vector<std::string> &escaped) {
  std::string out;
  for (size_t i = 0; i < escaped.size(); ++i) {
    if (i > 0) out.push_back('#');
    out.append(escaped[i]);
  }
  return out;
}

std::string ReduceNoDup(const std::vector<std::string> &escaped) {
  std::vector<std::string> kept;
  for (const std::string &s : escaped) {
    if (kept.empty() || kept.back() != s) kept.push_back(s);
  }
  return ReduceSeq(kept);
}

std::string ReduceBag(const std::vector<std::string> &escaped) {
  std::vector<std::string> sorted = escaped;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return ReduceSeq(sorted);
}

std::string DistanceBucket(int distance) {
  if (distance <= 5) return std::to_string(distance);
  if (distance <= 10) return "6-10";
  return ">10";
}

std::string EvaluateValue(const FeatureTemplate &t, const EvalContext &ctx) {
  return Evaluator(ctx).Value(t);
}

std::string Evaluate(const FeatureTemplate &t, int id, const EvalContext &ctx) {
  return std::to_string(id) + "=" + EvaluateValue(t, ctx);
}

}  // namespace semdep
