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

#include "semdep/pipeline.h"

#include <fstream>
#include <sstream>
#include <thread>

#include "semdep/error.h"

namespace semdep {
namespace {

constexpr std::string_view kMagic = "semdep-parser";
constexpr int kVersion = 1;

void ExtractSentence(const Sentence &s, const TemplateSet &templates,
                     const PipelineOptions &options, FeatureTable *out) {
  DepGraph graph(s, options.classes);
  WalkTrainingPairs(
      s, graph, options.scheme, options.pairs,
      [&](const WordPair &pair, const SemanticState &state) {
        EvalContext ctx;
        ctx.graph = &graph;
        ctx.state = &state;
        ctx.options = &options.eval;
        ctx.head = pair.head;
        ctx.dependent = pair.dependent;
        ctx.stage = pair.stage;
        std::vector<std::string> values;
        values.reserve(templates.size());
        for (const auto &t : templates.templates()) {
          values.push_back(EvaluateValue(t, ctx));
        }
        out->labels.push_back(*pair.label);
        out->stages.push_back(pair.stage);
        out->values.push_back(std::move(values));
      });
}

}  // namespace

void WalkTrainingPairs(
    const Sentence &sentence, const DepGraph &graph, TraverseScheme scheme,
    PairOptions options,
    const std::function<void(const WordPair &, const SemanticState &)> &visit) {
  SemanticState state(sentence.size());
  bool senses_done = false;
  for (const WordPair &pair :
       GenerateTrainingPairs(sentence, graph, scheme, options)) {
    if (pair.stage == PairStage::kArgument && !senses_done) {
      // Gold predicates outside the candidate filter still get their sense.
      for (const SemanticFrame &f : sentence.frames) {
        if (IsSenseLabel(f.sense)) state.SetSense(f.predicate, f.sense);
      }
      senses_done = true;
    }
    visit(pair, state);
    const std::string &label = *pair.label;
    if (pair.stage == PairStage::kPredicate) {
      if (IsSenseLabel(label)) state.SetSense(pair.dependent, label);
    } else if (IsArgumentRole(label)) {
      state.AddArc(pair.head, pair.dependent, label);
    }
  }
}

std::vector<Sample> FeatureTable::Samples(const std::vector<int> &subset) const {
  std::vector<Sample> out(labels.size());
  for (size_t i = 0; i < labels.size(); ++i) {
    out[i].label = labels[i];
    out[i].features.reserve(subset.size());
    for (size_t k = 0; k < subset.size(); ++k) {
      out[i].features.push_back(std::to_string(k) + "=" + values[i][subset[k]]);
    }
  }
  return out;
}

FeatureTable ExtractFeatureTable(const std::vector<Sentence> &corpus,
                                 const TemplateSet &templates,
                                 const PipelineOptions &options) {
  int threads = std::max(1, std::min<int>(options.threads, corpus.size()));
  std::vector<FeatureTable> parts(threads);
  auto work = [&](int shard) {
    size_t chunk = (corpus.size() + threads - 1) / threads;
    size_t b = std::min(corpus.size(), shard * chunk);
    size_t e = std::min(corpus.size(), b + chunk);
    for (size_t i = b; i < e; ++i) {
      ExtractSentence(corpus[i], templates, options, &parts[shard]);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> workers;
    for (int s = 0; s < threads; ++s) workers.emplace_back(work, s);
    for (auto &w : workers) w.join();
  }
  FeatureTable table = std::move(parts[0]);
  for (int s = 1; s < threads; ++s) {
    for (int i = 0; i < parts[s].size(); ++i) {
      table.labels.push_back(std::move(parts[s].labels[i]));
      table.stages.push_back(parts[s].stages[i]);
      table.values.push_back(std::move(parts[s].values[i]));
    }
  }
  return table;
}

ParserModel TrainParserFromTable(const FeatureTable &table,
                                 const TemplateSet &all_templates,
                                 const std::vector<int> &subset,
                                 const PipelineOptions &options,
                                 const TrainConfig &config) {
  ParserModel model;
  model.scheme = options.scheme;
  model.eval = options.eval;
  model.classes = options.classes;
  model.templates.set_name(all_templates.name());
  model.templates.set_provenance(all_templates.provenance());
  for (int t : subset) model.templates.Add(all_templates[t]);
  model.maxent = TrainMaxEnt(table.Samples(subset), config);
  model.maxent.set_provenance(all_templates.provenance());
  return model;
}

ParserModel TrainParser(const std::vector<Sentence> &corpus,
                        const TemplateSet &templates,
                        const PipelineOptions &options,
                        const TrainConfig &config) {
  FeatureTable table = ExtractFeatureTable(corpus, templates, options);
  std::vector<int> all(templates.size());
  for (int i = 0; i < templates.size(); ++i) all[i] = i;
  return TrainParserFromTable(table, templates, all, options, config);
}

void ParserModel::Save(std::ostream &out) const {
  out << kMagic << ' ' << kVersion << '\n';
  out << "scheme " << SchemeName(scheme) << '\n';
  out << "raw_distance " << (eval.raw_distance ? 1 : 0) << '\n';
  out << "templates " << templates.size() << '\n';
  for (const auto &t : templates.templates()) out << t.text() << '\n';
  maxent.Save(out);
}

ParserModel ParserModel::Load(std::istream &in) {
  ParserModel m;
  std::string line;
  int line_no = 0;
  auto keyed = [&](const std::string &key) {
    if (!std::getline(in, line)) {
      throw FormatError("model file: unexpected end of file", line_no + 1);
    }
    ++line_no;
    if (line.rfind(key + " ", 0) != 0) {
      throw FormatError("model file: expected '" + key + "'", line_no);
    }
    return line.substr(key.size() + 1);
  };
  if (keyed(std::string(kMagic)) != std::to_string(kVersion)) {
    throw FormatError("model file: unsupported version", line_no);
  }
  try {
    m.scheme = ParseScheme(keyed("scheme"));
    m.eval.raw_distance = keyed("raw_distance") == "1";
    int n = std::stoi(keyed("templates"));
    for (int i = 0; i < n; ++i) {
      if (!std::getline(in, line)) throw Error("unexpected end of file");
      ++line_no;
      m.templates.Add(line);
    }
  } catch (const FormatError &) {
    throw;
  } catch (const std::exception &e) {
    throw FormatError(std::string("model file: ") + e.what(), line_no);
  }
  m.maxent = MaxEntModel::Load(in);
  m.templates.set_provenance(m.maxent.provenance());
  return m;
}

void ParserModel::SaveFile(const std::string &path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write model file " + path);
  Save(out);
  if (!out) throw Error("write failed: " + path);
}

ParserModel ParserModel::LoadFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file " + path);
  return Load(in);
}

}  // namespace semdep
