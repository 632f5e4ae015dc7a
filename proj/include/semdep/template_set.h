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

#ifndef SEMDEP_TEMPLATE_SET_H_
#define SEMDEP_TEMPLATE_SET_H_

#include <istream>
#include <string>
#include <vector>

#include "semdep/feature_eval.h"
#include "semdep/feature_template.h"

namespace semdep {

// Ordered, duplicate-free list of templates. A "# provenance: <tag>" line in
// a template file sets the provenance tag.
class TemplateSet {
 public:
  TemplateSet() = default;
  explicit TemplateSet(std::string name) : name_(std::move(name)) {}

  const std::string &name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::string &provenance() const { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  const std::vector<FeatureTemplate> &templates() const { return templates_; }
  int size() const { return static_cast<int>(templates_.size()); }
  bool empty() const { return templates_.empty(); }
  const FeatureTemplate &operator[](int i) const { return templates_[i]; }

  // Throws Error on a duplicate.
  void Add(FeatureTemplate t);
  void Add(std::string_view text) { Add(FeatureTemplate::Parse(text)); }
  bool Contains(const FeatureTemplate &t) const;
  // Lint messages for every template that breaks a lint rule.
  std::vector<std::string> Lint() const;

  bool operator==(const TemplateSet &o) const {
    return templates_ == o.templates_;
  }

 private:
  std::string name_;
  std::string provenance_;
  std::vector<FeatureTemplate> templates_;
};

// Parse errors are FormatError naming the line.
TemplateSet ParseTemplateSet(std::istream &in, const std::string &name = "");
TemplateSet ParseTemplateSetText(std::string_view text,
                                 const std::string &name = "");
TemplateSet LoadTemplateFile(const std::string &path);
std::string SerializeTemplateSet(const TemplateSet &set);
void SaveTemplateFile(const TemplateSet &set, const std::string &path);

// One "<index>=<value>" string per template, in set order.
std::vector<std::string> EvaluateAll(const TemplateSet &set,
                                     const EvalContext &ctx);

}  // namespace semdep

#endif  // SEMDEP_TEMPLATE_SET_H_
