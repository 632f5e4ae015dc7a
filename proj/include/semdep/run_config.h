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

#ifndef SEMDEP_RUN_CONFIG_H_
#define SEMDEP_RUN_CONFIG_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "semdep/decoder.h"
#include "semdep/evaluation.h"
#include "semdep/feature_selection.h"
#include "semdep/maxent.h"
#include "semdep/pipeline.h"
#include "semdep/synthetic.h"

namespace semdep {

struct ConfigKey {
  std::string_view name;  // "section.key"
  std::string_view default_value;
  std::string_view help;
};

// Every setting of a run, stored as text and validated when read. The file
// form is
//
//   [section]
//   key = value   # comment
//
// and Serialize() lists every key, so a dump reproduces the run.
class RunConfig {
 public:
  RunConfig();

  static const std::vector<ConfigKey> &Keys();

  // Throws Error for unknown keys.
  void Set(const std::string &key, const std::string &value);
  const std::string &Get(const std::string &key) const;
  bool IsSet(const std::string &key) const { return !Get(key).empty(); }

  // Merges a file/text into this config. Errors name the line.
  void ParseText(std::string_view text);
  void LoadFile(const std::string &path);
  std::string Serialize() const;

  // Typed views; throw Error naming the key on invalid values.
  double GetDouble(const std::string &key) const;
  long long GetInt(const std::string &key) const;
  bool GetBool(const std::string &key) const;

  TraverseScheme scheme() const;
  PipelineOptions pipeline() const;
  TrainConfig train() const;
  DecodeConfig decode() const;
  SelectionConfig selection() const;
  GrammarParams grammar() const;
  ScoreOptions scoring() const;
  uint64_t seed() const;
  int threads() const;

  bool operator==(const RunConfig &o) const { return values_ == o.values_; }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace semdep

#endif  // SEMDEP_RUN_CONFIG_H_
