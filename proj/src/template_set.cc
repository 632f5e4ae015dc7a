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

#include <fstream>
#include <sstream>

namespace semdep {
namespace {

constexpr std::string_view kProvenanceTag = "provenance:";

std::string Trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

void TemplateSet::Add(FeatureTemplate t) {
  if (Contains(t)) throw Error("duplicate template '" + t.text() + "'");
  templates_.push_back(std::move(t));
}

bool TemplateSet::Contains(const FeatureTemplate &t) const {
  for (const auto &existing : templates_) {
    if (existing == t) return true;
  }
  return false;
}

std::vector<std::string> TemplateSet::Lint() const {
  std::vector<std::string> out;
  for (const auto &t : templates_) {
    if (auto msg = LintTemplate(t)) out.push_back(*msg);
  }
  return out;
}

TemplateSet ParseTemplateSet(std::istream &in, const std::string &name) {
  TemplateSet set(name);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string text = Trim(line);
    if (text.empty()) continue;
    if (text[0] == '#') {
      std::string body = Trim(std::string_view(text).substr(1));
      if (body.rfind(kProvenanceTag, 0) == 0) {
        set.set_provenance(Trim(body.substr(kProvenanceTag.size())));
      }
      continue;
    }
    try {
      set.Add(FeatureTemplate::Parse(text));
    } catch (const Error &e) {
      throw FormatError(e.what(), number);
    }
  }
  return set;
}

TemplateSet ParseTemplateSetText(std::string_view text,
                                 const std::string &name) {
  std::istringstream in{std::string(text)};
  return ParseTemplateSet(in, name);
}

TemplateSet LoadTemplateFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open template file " + path);
  return ParseTemplateSet(in, path);
}

std::string SerializeTemplateSet(const TemplateSet &set) {
  std::string out;
  if (!set.provenance().empty()) {
    out += "# provenance: " + set.provenance() + "\n";
  }
  for (const auto &t : set.templates()) out += t.text() + "\n";
  return out;
}

void SaveTemplateFile(const TemplateSet &set, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write template file " + path);
  out << SerializeTemplateSet(set);
  if (!out) throw Error("write failed: " + path);
}

std::vector<std::string> EvaluateAll(const TemplateSet &set,
                                     const EvalContext &ctx) {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (int i = 0; i < set.size(); ++i) out.push_back(Evaluate(set[i], i, ctx));
  return out;
}

}  // namespace semdep
