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

#include "semdep/run_config.h"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "semdep/error.h"

namespace semdep {
namespace {

std::string Trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void Invalid(const std::string &key, const std::string &value,
                          const std::string &expected) {
  throw Error("config " + key + ": expected " + expected + ", got '" + value +
              "'");
}

}  // namespace

const std::vector<ConfigKey> &RunConfig::Keys() {
  static const auto *keys = new std::vector<ConfigKey>{
      {"pipeline.scheme", "synPth", "traversal scheme: synPth or linPth"},
      {"pipeline.templates", "", "template file (empty: built-in default)"},
      {"pipeline.adaptive", "true", "adaptive stop labels in training pairs"},
      {"pipeline.raw_distance", "false", "distance features without buckets"},
      {"pipeline.threads", "1", "worker threads; results do not depend on it"},
      {"corpus.layout", "auto", "column layout: auto, simple, split, conll2008"},
      {"corpus.predicted_layout", "auto", "layout of the predicted corpus"},
      {"train.sigma2", "1.0", "Gaussian prior variance"},
      {"train.memory", "10", "L-BFGS memory"},
      {"train.max_iterations", "200", "L-BFGS iteration limit"},
      {"train.tolerance", "1e-05", "relative gradient-norm tolerance"},
      {"train.cutoff", "1", "drop features seen in fewer samples"},
      {"decode.beam", "8", "beam width"},
      {"decode.mask", "stage", "label mask: stage or none"},
      {"decode.forbid_crossing", "false", "reject arguments crossing arcs"},
      {"select.init_fraction", "0.1", "fraction of FT in the initial set"},
      {"select.seed", "1", "seed of the initial set"},
      {"select.initial", "", "explicit initial set: comma-separated indices"},
      {"select.importance", "true", "rank the selected templates"},
      {"eval.exclude_punctuation", "false", "leave punctuation out of LAS"},
      {"synthetic.seed", "1", "generator seed"},
      {"synthetic.sentences", "500", "number of sentences"},
      {"synthetic.nouns", "30", "noun vocabulary"},
      {"synthetic.verbs", "12", "verb vocabulary"},
      {"synthetic.adverbs", "5", "adverb vocabulary"},
      {"synthetic.predicate_nouns", "4", "noun lemmas acting as predicates"},
      {"synthetic.ergative_verbs", "0",
       "verbs without objects whose active subject is A1"},
      {"synthetic.max_len", "24", "longest sentence"},
      {"synthetic.max_depth", "2", "clause nesting limit"},
      {"synthetic.embed_prob", "0.2", "embedded object clause"},
      {"synthetic.object_prob", "0.7", "object noun phrase"},
      {"synthetic.passive_prob", "0.2", "passive clause"},
      {"synthetic.modal_prob", "0.15", "modal"},
      {"synthetic.adverb_prob", "0.3", "manner adverb"},
      {"synthetic.pp_prob", "0.3", "prepositional phrase"},
      {"synthetic.det_prob", "0.5", "determiner"},
      {"synthetic.nmod_prob", "0.3", "noun modifier"},
      {"synthetic.unreachable_rate", "0", "roles placed out of synPth reach"},
      {"paths.train", "", "training corpus"},
      {"paths.dev", "", "development corpus"},
      {"paths.input", "", "corpus to parse"},
      {"paths.gold", "", "gold corpus"},
      {"paths.predicted", "", "predicted corpus"},
      {"paths.model", "", "model file"},
      {"paths.ft", "", "template space for selection"},
      {"paths.output", "", "output file"},
      {"paths.report", "", "machine-readable report (JSON)"},
  };
  return *keys;
}

RunConfig::RunConfig() {
  for (const ConfigKey &k : Keys()) {
    values_[std::string(k.name)] = std::string(k.default_value);
  }
}

void RunConfig::Set(const std::string &key, const std::string &value) {
  auto it = values_.find(key);
  if (it == values_.end()) throw Error("unknown config key '" + key + "'");
  it->second = value;
}

const std::string &RunConfig::Get(const std::string &key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw Error("unknown config key '" + key + "'");
  return it->second;
}

void RunConfig::ParseText(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line, section;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    size_t hash = line.find('#');
    std::string body = Trim(hash == std::string::npos ? line : line.substr(0, hash));
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']') throw FormatError("unterminated section", number);
      section = Trim(std::string_view(body).substr(1, body.size() - 2));
      continue;
    }
    size_t eq = body.find('=');
    if (eq == std::string::npos) {
      throw FormatError("expected 'key = value'", number);
    }
    std::string key = Trim(std::string_view(body).substr(0, eq));
    if (!section.empty()) key = section + "." + key;
    try {
      Set(key, Trim(std::string_view(body).substr(eq + 1)));
    } catch (const Error &e) {
      throw FormatError(e.what(), number);
    }
  }
}

void RunConfig::LoadFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    ParseText(buf.str());
  } catch (const FormatError &e) {
    throw Error(path + ": " + e.what());
  }
}

std::string RunConfig::Serialize() const {
  std::string out, section;
  for (const ConfigKey &k : Keys()) {
    std::string name(k.name);
    size_t dot = name.find('.');
    std::string s = name.substr(0, dot);
    if (s != section) {
      if (!section.empty()) out += "\n";
      out += "[" + s + "]\n";
      section = s;
    }
    out += name.substr(dot + 1) + " = " + values_.at(name) + "\n";
  }
  return out;
}

double RunConfig::GetDouble(const std::string &key) const {
  const std::string &v = Get(key);
  char *end = nullptr;
  errno = 0;
  double d = std::strtod(v.c_str(), &end);
  if (v.empty() || *end != '\0' || errno != 0) Invalid(key, v, "a number");
  return d;
}

long long RunConfig::GetInt(const std::string &key) const {
  const std::string &v = Get(key);
  char *end = nullptr;
  errno = 0;
  long long i = std::strtoll(v.c_str(), &end, 10);
  if (v.empty() || *end != '\0' || errno != 0) Invalid(key, v, "an integer");
  return i;
}

bool RunConfig::GetBool(const std::string &key) const {
  const std::string &v = Get(key);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  Invalid(key, v, "true or false");
}

TraverseScheme RunConfig::scheme() const {
  try {
    return ParseScheme(Get("pipeline.scheme"));
  } catch (const Error &) {
    Invalid("pipeline.scheme", Get("pipeline.scheme"), "synPth or linPth");
  }
}

int RunConfig::threads() const {
  long long t = GetInt("pipeline.threads");
  if (t < 1 || t > 256) Invalid("pipeline.threads", Get("pipeline.threads"), "1..256");
  return static_cast<int>(t);
}

uint64_t RunConfig::seed() const {
  return static_cast<uint64_t>(GetInt("select.seed"));
}

PipelineOptions RunConfig::pipeline() const {
  PipelineOptions o;
  o.scheme = scheme();
  o.pairs.adaptive = GetBool("pipeline.adaptive");
  o.eval.raw_distance = GetBool("pipeline.raw_distance");
  o.threads = threads();
  return o;
}

TrainConfig RunConfig::train() const {
  TrainConfig c;
  c.sigma2 = GetDouble("train.sigma2");
  if (!(c.sigma2 > 0)) Invalid("train.sigma2", Get("train.sigma2"), "a positive number");
  c.memory = static_cast<int>(GetInt("train.memory"));
  if (c.memory < 1) Invalid("train.memory", Get("train.memory"), "at least 1");
  c.max_iterations = static_cast<int>(GetInt("train.max_iterations"));
  if (c.max_iterations < 0) {
    Invalid("train.max_iterations", Get("train.max_iterations"), "at least 0");
  }
  c.tolerance = GetDouble("train.tolerance");
  if (c.tolerance < 0) Invalid("train.tolerance", Get("train.tolerance"), "at least 0");
  c.cutoff = static_cast<int>(GetInt("train.cutoff"));
  if (c.cutoff < 0) Invalid("train.cutoff", Get("train.cutoff"), "at least 0");
  c.threads = threads();
  return c;
}

DecodeConfig RunConfig::decode() const {
  DecodeConfig c;
  c.beam = static_cast<int>(GetInt("decode.beam"));
  if (c.beam < 1) Invalid("decode.beam", Get("decode.beam"), "at least 1");
  const std::string &mask = Get("decode.mask");
  if (mask == "stage") {
    c.mask = MaskPolicy::kStage;
  } else if (mask == "none") {
    c.mask = MaskPolicy::kNone;
  } else {
    Invalid("decode.mask", mask, "stage or none");
  }
  c.forbid_crossing = GetBool("decode.forbid_crossing");
  return c;
}

SelectionConfig RunConfig::selection() const {
  SelectionConfig c;
  c.init_fraction = GetDouble("select.init_fraction");
  if (!(c.init_fraction > 0 && c.init_fraction <= 1)) {
    Invalid("select.init_fraction", Get("select.init_fraction"), "a value in (0, 1]");
  }
  c.seed = seed();
  c.threads = threads();
  c.importance = GetBool("select.importance");
  std::stringstream in(Get("select.initial"));
  std::string item;
  while (std::getline(in, item, ',')) {
    item = Trim(item);
    if (item.empty()) continue;
    char *end = nullptr;
    long v = std::strtol(item.c_str(), &end, 10);
    if (*end != '\0' || v < 0) {
      Invalid("select.initial", Get("select.initial"), "comma-separated indices");
    }
    c.initial.push_back(static_cast<int>(v));
  }
  return c;
}

GrammarParams RunConfig::grammar() const {
  GrammarParams g;
  auto prob = [&](const char *key) {
    double v = GetDouble(key);
    if (v < 0 || v > 1) Invalid(key, Get(key), "a probability");
    return v;
  };
  g.nouns = static_cast<int>(GetInt("synthetic.nouns"));
  g.verbs = static_cast<int>(GetInt("synthetic.verbs"));
  g.adverbs = static_cast<int>(GetInt("synthetic.adverbs"));
  g.predicate_nouns = static_cast<int>(GetInt("synthetic.predicate_nouns"));
  g.ergative_verbs = static_cast<int>(GetInt("synthetic.ergative_verbs"));
  g.max_len = static_cast<int>(GetInt("synthetic.max_len"));
  g.max_depth = static_cast<int>(GetInt("synthetic.max_depth"));
  g.embed_prob = prob("synthetic.embed_prob");
  g.object_prob = prob("synthetic.object_prob");
  g.passive_prob = prob("synthetic.passive_prob");
  g.modal_prob = prob("synthetic.modal_prob");
  g.adverb_prob = prob("synthetic.adverb_prob");
  g.pp_prob = prob("synthetic.pp_prob");
  g.det_prob = prob("synthetic.det_prob");
  g.nmod_prob = prob("synthetic.nmod_prob");
  g.unreachable_rate = prob("synthetic.unreachable_rate");
  return g;
}

ScoreOptions RunConfig::scoring() const {
  ScoreOptions o;
  o.exclude_punctuation = GetBool("eval.exclude_punctuation");
  return o;
}

}  // namespace semdep
