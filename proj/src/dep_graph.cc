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

#include <algorithm>
#include <cctype>

namespace semdep {
namespace {

bool HasPrefix(std::string_view pos, const std::vector<std::string> &prefixes) {
  for (const auto &p : prefixes) {
    if (pos.substr(0, p.size()) == p) return true;
  }
  return false;
}

}  // namespace

bool PosClasses::IsVerb(std::string_view pos) const {
  return HasPrefix(pos, verb);
}
bool PosClasses::IsNoun(std::string_view pos) const {
  return HasPrefix(pos, noun);
}
bool PosClasses::IsPrep(std::string_view pos) const {
  return HasPrefix(pos, prep);
}
bool PosClasses::IsModal(std::string_view pos) const {
  return HasPrefix(pos, modal);
}

bool PosClasses::Is(std::string_view pos, Class c) const {
  switch (c) {
    case Class::kVerb: return IsVerb(pos);
    case Class::kNoun: return IsNoun(pos);
    case Class::kPrep: return IsPrep(pos);
  }
  return false;
}

bool PosClasses::IsPunctuation(std::string_view pos) {
  if (pos.empty()) return false;
  return std::none_of(pos.begin(), pos.end(), [](unsigned char c) {
    return std::isalnum(c);
  });
}

std::string_view TreeRelationName(TreeRelation r) {
  return TreeRelationTags()[static_cast<int>(r)];
}

const std::vector<std::string_view> &TreeRelationTags() {
  static const std::vector<std::string_view> tags = {
      "self",    "parent", "child",  "ancestor", "descendant",
      "sibling", "uncle",  "nephew", "else"};
  return tags;
}

TreeRelation Converse(TreeRelation r) {
  switch (r) {
    case TreeRelation::kParent: return TreeRelation::kChild;
    case TreeRelation::kChild: return TreeRelation::kParent;
    case TreeRelation::kAncestor: return TreeRelation::kDescendant;
    case TreeRelation::kDescendant: return TreeRelation::kAncestor;
    case TreeRelation::kUncle: return TreeRelation::kNephew;
    case TreeRelation::kNephew: return TreeRelation::kUncle;
    default: return r;
  }
}

DepGraph::DepGraph(const Sentence &sentence, PosClasses classes)
    : sentence_(&sentence), classes_(std::move(classes)), n_(sentence.size()) {
  head_.assign(n_ + 1, 0);
  for (int i = 1; i <= n_; ++i) {
    int h = sentence.token(i).head;
    head_[i] = (h < 0 || h > n_ || h == i) ? 0 : h;
    if (h != head_[i]) repaired_ = true;
  }
  for (int i = 1; i <= n_ && root_ == 0; ++i) {
    if (head_[i] == 0) root_ = i;
  }
  // Break cycles: 0 = unvisited, 1 = on current walk, 2 = reaches the root.
  std::vector<int> mark(n_ + 1, 0);
  mark[0] = 2;
  for (int i = 1; i <= n_; ++i) {
    std::vector<int> walk;
    int cur = i;
    while (mark[cur] == 0) {
      mark[cur] = 1;
      walk.push_back(cur);
      cur = head_[cur];
    }
    if (mark[cur] == 1) {
      // `cur` closes a cycle; re-head its smallest member.
      auto start = std::find(walk.begin(), walk.end(), cur);
      int victim = *std::min_element(start, walk.end());
      if (root_ == 0) {
        root_ = victim;
        head_[victim] = 0;
      } else {
        head_[victim] = root_;
      }
      repaired_ = true;
    }
    for (int w : walk) mark[w] = 2;
  }
  // Re-attach extra roots to the primary root.
  for (int i = 1; i <= n_; ++i) {
    if (head_[i] == 0 && i != root_) {
      head_[i] = root_;
      repaired_ = true;
    }
  }
  children_.assign(n_ + 1, {});
  for (int i = 1; i <= n_; ++i) children_[head_[i]].push_back(i);
  depth_.assign(n_ + 1, 0);
  // Children are pushed in id order, so lists are already sorted; depths
  // follow by walking from the root.
  std::vector<int> stack = {root_};
  if (root_ != 0) depth_[root_] = 0;
  while (!stack.empty() && root_ != 0) {
    int node = stack.back();
    stack.pop_back();
    for (int c : children_[node]) {
      depth_[c] = depth_[node] + 1;
      stack.push_back(c);
    }
  }
}

Family DepGraph::family(int node) const {
  Family f;
  f.children = children_[node];
  if (f.children.empty()) return f;
  f.lm = f.children.front();
  f.rm = f.children.back();
  for (int c : f.children) {
    if (c < node) f.ln = c;
    if (c > node && !f.rn) f.rn = c;
  }
  for (int c : f.children) {
    if (c != *f.lm && c != *f.rm) f.no_far_children.push_back(c);
  }
  return f;
}

std::vector<int> DepGraph::Ancestors(int node) const {
  std::vector<int> out;
  for (int cur = head_[node]; cur != 0; cur = head_[cur]) out.push_back(cur);
  return out;
}

PathDecomposition DepGraph::DecomposePaths(int a, int p) const {
  auto chain = [this](int node) {
    std::vector<int> c = {node};
    for (int cur = head_[node]; cur != 0; cur = head_[cur]) c.push_back(cur);
    return c;
  };
  std::vector<int> ca = chain(a), cp = chain(p);
  // Both chains end at the root; strip the common suffix.
  size_t ia = ca.size(), ip = cp.size();
  while (ia > 0 && ip > 0 && ca[ia - 1] == cp[ip - 1]) {
    --ia;
    --ip;
  }
  PathDecomposition d;
  d.meet = ca[ia];
  d.argu.assign(ca.begin(), ca.begin() + ia + 1);
  d.pred.assign(cp.begin(), cp.begin() + ip + 1);
  d.shared.assign(ca.begin() + ia, ca.end());
  d.full = d.argu;
  for (size_t i = ip; i-- > 0;) d.full.push_back(cp[i]);
  return d;
}

std::vector<int> DepGraph::LinearPath(int a, int p) {
  std::vector<int> out;
  int step = a <= p ? 1 : -1;
  for (int i = a;; i += step) {
    out.push_back(i);
    if (i == p) break;
  }
  return out;
}

std::optional<int> DepGraph::SupportWord(int node, PosClasses::Class c,
                                         SupportLevel level) const {
  std::optional<int> found;
  for (int cur = head_[node]; cur != 0; cur = head_[cur]) {
    if (classes_.Is(token(cur).pos, c)) {
      found = cur;
      if (level == SupportLevel::kLow) break;
    }
  }
  return found;
}

int DepGraph::PpHead(int node) const {
  int h = head_[node];
  if (h == 0) return node;
  if (!classes_.IsPrep(token(h).pos)) return h;
  for (int sibling : children_[h]) {
    if (sibling != node) return sibling;
  }
  return h;
}

TreeRelation DepGraph::Relation(int a, int p) const {
  if (a == p) return TreeRelation::kSelf;
  PathDecomposition d = DecomposePaths(a, p);
  size_t up_a = d.argu.size() - 1, up_p = d.pred.size() - 1;
  if (up_p == 0) return up_a == 1 ? TreeRelation::kChild : TreeRelation::kDescendant;
  if (up_a == 0) return up_p == 1 ? TreeRelation::kParent : TreeRelation::kAncestor;
  if (up_a == 1 && up_p == 1) return TreeRelation::kSibling;
  if (up_a == 1 && up_p == 2) return TreeRelation::kUncle;
  if (up_a == 2 && up_p == 1) return TreeRelation::kNephew;
  return TreeRelation::kElse;
}

}  // namespace semdep
