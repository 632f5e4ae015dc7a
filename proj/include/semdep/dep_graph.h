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

#ifndef SEMDEP_DEP_GRAPH_H_
#define SEMDEP_DEP_GRAPH_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semdep/conll.h"

namespace semdep {

// POS-class membership by tag prefix. Defaults follow Penn tags.
struct PosClasses {
  std::vector<std::string> verb = {"V"};
  std::vector<std::string> noun = {"N"};
  std::vector<std::string> prep = {"IN"};
  std::vector<std::string> modal = {"MD"};

  enum class Class { kVerb, kNoun, kPrep };

  bool IsVerb(std::string_view pos) const;
  bool IsNoun(std::string_view pos) const;
  bool IsPrep(std::string_view pos) const;
  bool IsModal(std::string_view pos) const;
  bool Is(std::string_view pos, Class c) const;
  // Tags made only of punctuation characters ("." "," "``" ...).
  static bool IsPunctuation(std::string_view pos);
};

// Relation of an argument candidate a to a predicate p in the tree, read as
// "a is the <tag> of p".
enum class TreeRelation {
  kSelf,
  kParent,
  kChild,
  kAncestor,
  kDescendant,
  kSibling,
  kUncle,
  kNephew,
  kElse,
};
std::string_view TreeRelationName(TreeRelation r);
// All nine tags, in enum order.
const std::vector<std::string_view> &TreeRelationTags();
TreeRelation Converse(TreeRelation r);

struct Family {
  std::optional<int> lm, ln, rm, rn;
  std::vector<int> children;
  std::vector<int> no_far_children;
};

struct PathDecomposition {
  int meet = 0;                  // lowest common ancestor r'
  std::vector<int> argu;         // a ... r'
  std::vector<int> pred;         // p ... r'
  std::vector<int> shared;       // r' ... root
  std::vector<int> full;         // a ... r' ... p
};

enum class SupportLevel { kLow, kHigh };

// Indexed, repaired view of a sentence's dependency tree. Node ids are the
// 1-based token ids; 0 is the virtual root above the tree. Immutable after
// construction.
class DepGraph {
 public:
  explicit DepGraph(const Sentence &sentence, PosClasses classes = {});

  int size() const { return n_; }
  bool Valid(int node) const { return node >= 1 && node <= n_; }
  // Root of the repaired tree (0 for an empty sentence).
  int root() const { return root_; }
  // Repaired head; 0 for the root.
  int head(int node) const { return head_[node]; }
  const std::vector<int> &children(int node) const { return children_[node]; }
  int depth(int node) const { return depth_[node]; }
  bool repaired() const { return repaired_; }
  const PosClasses &classes() const { return classes_; }
  const Sentence &sentence() const { return *sentence_; }
  const Token &token(int node) const { return sentence_->token(node); }

  Family family(int node) const;
  // Strict ancestors of `node`, nearest first (excludes the virtual root).
  std::vector<int> Ancestors(int node) const;
  PathDecomposition DecomposePaths(int a, int p) const;
  // Inclusive surface-order sequence from a to p.
  static std::vector<int> LinearPath(int a, int p);
  std::optional<int> SupportWord(int node, PosClasses::Class c,
                                 SupportLevel level) const;
  int PpHead(int node) const;
  TreeRelation Relation(int a, int p) const;
  bool IsLeaf(int node) const { return children_[node].empty(); }

 private:
  const Sentence *sentence_;
  PosClasses classes_;
  int n_;
  int root_ = 0;
  bool repaired_ = false;
  std::vector<int> head_;
  std::vector<std::vector<int>> children_;
  std::vector<int> depth_;
};

}  // namespace semdep

#endif  // SEMDEP_DEP_GRAPH_H_
