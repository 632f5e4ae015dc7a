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

// Command-line driver: train, select-features, parse, evaluate, prune-stats
// and gen-synthetic. Every command reads the same key/value configuration
// (see --help-config); flags override the config file.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "semdep/conll.h"
#include "semdep/decoder.h"
#include "semdep/error.h"
#include "semdep/evaluation.h"
#include "semdep/feature_selection.h"
#include "semdep/pipeline.h"
#include "semdep/pruning.h"
#include "semdep/run_config.h"
#include "semdep/synthetic.h"
#include "semdep/template_set.h"

namespace semdep {
namespace {

using json = nlohmann::ordered_json;

struct Flags {
  std::string config_file;
  std::vector<std::string> sets;
  // Shortcut flags; each maps onto one config key.
  std::vector<std::pair<std::string, std::string>> shortcuts;
};

struct Shortcut {
  const char *flag;
  const char *key;
  const char *help;
};

constexpr Shortcut kShortcuts[] = {
    {"--scheme", "pipeline.scheme", "synPth or linPth"},
    {"--templates", "pipeline.templates", "template file"},
    {"--threads", "pipeline.threads", "worker threads"},
    {"--layout", "corpus.layout", "auto, simple, split or conll2008"},
    {"--sigma2", "train.sigma2", "Gaussian prior variance"},
    {"--beam", "decode.beam", "beam width"},
    {"--seed", "select.seed", "selection seed"},
    {"--train", "paths.train", "training corpus"},
    {"--dev", "paths.dev", "development corpus"},
    {"--input", "paths.input", "input corpus"},
    {"--gold", "paths.gold", "gold corpus"},
    {"--predicted", "paths.predicted", "predicted corpus"},
    {"--model", "paths.model", "model file"},
    {"--ft", "paths.ft", "template space for selection"},
    {"--output", "paths.output", "output file"},
    {"--report", "paths.report", "JSON report file"},
};

void AddCommonOptions(CLI::App *cmd, Flags *flags,
                      std::vector<std::string> *shortcut_values) {
  cmd->add_option("-c,--config", flags->config_file, "config file");
  cmd->add_option("--set", flags->sets, "override: section.key=value")
      ->take_all();
  for (size_t i = 0; i < std::size(kShortcuts); ++i) {
    cmd->add_option(kShortcuts[i].flag, (*shortcut_values)[i],
                    std::string(kShortcuts[i].help) + " (" + kShortcuts[i].key +
                        ")");
  }
}

RunConfig BuildConfig(const Flags &flags,
                      const std::vector<std::string> &shortcut_values) {
  RunConfig config;
  if (!flags.config_file.empty()) config.LoadFile(flags.config_file);
  for (const std::string &s : flags.sets) {
    size_t eq = s.find('=');
    if (eq == std::string::npos) {
      throw Error("--set expects key=value, got '" + s + "'");
    }
    config.Set(s.substr(0, eq), s.substr(eq + 1));
  }
  for (size_t i = 0; i < std::size(kShortcuts); ++i) {
    if (!shortcut_values[i].empty()) {
      config.Set(kShortcuts[i].key, shortcut_values[i]);
    }
  }
  return config;
}

const std::string &Require(const RunConfig &config, const std::string &key) {
  const std::string &v = config.Get(key);
  if (v.empty()) {
    throw Error("missing " + key + " (set it in the config or with a flag)");
  }
  return v;
}

ParseOptions CorpusOptions(const RunConfig &config,
                           const std::string &layout_key) {
  ParseOptions o;
  const std::string &layout = config.Get(layout_key);
  if (layout == "auto") {
    o.layout = ColumnLayout::kAuto;
  } else if (layout == "simple") {
    o.layout = ColumnLayout::kSimple;
  } else if (layout == "split") {
    o.layout = ColumnLayout::kSplit;
  } else if (layout == "conll2008") {
    o.layout = ColumnLayout::kConll2008;
  } else {
    throw Error("config " + layout_key + ": expected auto, simple, split or "
                "conll2008, got '" + layout + "'");
  }
  return o;
}

std::vector<Sentence> ReadCorpus(
    const RunConfig &config, const std::string &key,
    const std::string &layout_key = "corpus.layout") {
  const std::string &path = Require(config, key);
  ParseResult r = ReadCorpusFile(path, CorpusOptions(config, layout_key));
  for (const ParseIssue &issue : r.issues) {
    std::cerr << path << ":" << issue.line << ": "
              << (issue.severity == ParseIssue::Severity::kWarning ? "warning"
                                                                    : "error")
              << ": " << issue.message << "\n";
  }
  return std::move(r.sentences);
}

TemplateSet LoadTemplates(const RunConfig &config) {
  std::string path = config.Get("pipeline.templates");
  if (path.empty()) path = std::string(SEMDEP_DATA_DIR) + "/templates/default.txt";
  TemplateSet set = LoadTemplateFile(path);
  for (const std::string &w : set.Lint()) std::cerr << "lint: " << w << "\n";
  return set;
}

void WriteText(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed: " + path);
}

// The effective configuration goes next to every output.
void DumpConfig(const RunConfig &config, const std::string &output) {
  WriteText(output + ".config", config.Serialize());
}

void WriteReport(const RunConfig &config, const json &report) {
  const std::string &path = config.Get("paths.report");
  if (path.empty()) return;
  WriteText(path, report.dump(2) + "\n");
}

json Optional(std::optional<double> v) {
  if (!v) return nullptr;
  return *v * 100.0;
}

std::string Fixed(double v, int digits = 2) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

int CmdTrain(const RunConfig &config) {
  std::vector<Sentence> corpus = ReadCorpus(config, "paths.train");
  const std::string &model_path = Require(config, "paths.model");
  TemplateSet templates = LoadTemplates(config);
  PipelineOptions options = config.pipeline();
  FeatureTable table = ExtractFeatureTable(corpus, templates, options);
  std::vector<int> all(templates.size());
  for (int i = 0; i < templates.size(); ++i) all[i] = i;
  ParserModel model =
      TrainParserFromTable(table, templates, all, options, config.train());
  model.SaveFile(model_path);
  DumpConfig(config, model_path);
  for (const std::string &w : model.maxent.warnings()) {
    std::cerr << "warning: " << w << "\n";
  }
  std::printf("sentences   %zu\n", corpus.size());
  std::printf("pairs       %d\n", table.size());
  std::printf("templates   %d\n", templates.size());
  std::printf("features    %d\n", model.maxent.features().size());
  std::printf("labels      %d\n", model.maxent.num_labels());
  std::printf("iterations  %d\n", model.maxent.iterations());
  std::printf("objective   %s\n", Fixed(model.maxent.objective(), 6).c_str());
  json report = {
      {"command", "train"},
      {"sentences", corpus.size()},
      {"pairs", table.size()},
      {"templates", templates.size()},
      {"features", model.maxent.features().size()},
      {"labels", model.maxent.labels()},
      {"iterations", model.maxent.iterations()},
      {"objective", model.maxent.objective()},
      {"objective_history", model.maxent.objective_history()},
      {"warnings", model.maxent.warnings()},
  };
  WriteReport(config, report);
  return 0;
}

int CmdParse(const RunConfig &config) {
  ParserModel model = ParserModel::LoadFile(Require(config, "paths.model"));
  std::vector<Sentence> input = ReadCorpus(config, "paths.input");
  const std::string &output = Require(config, "paths.output");
  Decoder decoder(model, config.decode());
  std::vector<Sentence> parsed = decoder.AnnotateCorpus(input, config.threads());
  WriteCorpusFile(output, parsed);
  DumpConfig(config, output);
  size_t frames = 0, args = 0;
  for (const Sentence &s : parsed) {
    frames += s.frames.size();
    for (const SemanticFrame &f : s.frames) args += f.arguments.size();
  }
  std::printf("sentences   %zu\npredicates  %zu\narguments   %zu\n",
              parsed.size(), frames, args);
  WriteReport(config, {{"command", "parse"},
                       {"sentences", parsed.size()},
                       {"predicates", frames},
                       {"arguments", args}});
  return 0;
}

int CmdEvaluate(const RunConfig &config) {
  std::vector<Sentence> gold = ReadCorpus(config, "paths.gold");
  std::vector<Sentence> predicted = ReadCorpus(config, "paths.predicted", "corpus.predicted_layout");
  ScoreReport r = Score(gold, predicted, config.scoring());
  std::fputs(FormatReport(r).c_str(), stdout);
  json fields = json::object();
  for (const auto &[name, value] : ReportFields(r)) fields[name] = Optional(value);
  auto counts = [](const Counts &c) {
    return json{{"correct", c.correct}, {"predicted", c.predicted},
                {"gold", c.gold}};
  };
  json report = {
      {"command", "evaluate"},
      {"sentences", r.sentences},
      {"scores", fields},
      {"counts",
       {{"sem", counts(r.sem)},
        {"pred", counts(r.pred)},
        {"argu", counts(r.argu)},
        {"verb", counts(r.verb)},
        {"nomi", counts(r.nomi)},
        {"las", {{"correct", r.las_correct}, {"total", r.las_total}}}}},
  };
  WriteReport(config, report);
  if (!config.Get("paths.report").empty()) {
    DumpConfig(config, config.Get("paths.report"));
  }
  return 0;
}

int CmdPruneStats(const RunConfig &config) {
  std::vector<Sentence> corpus = ReadCorpus(config, "paths.input");
  PipelineOptions options = config.pipeline();
  PruneStats s = CoverageAndReductionStats(corpus, options.scheme,
                                           options.classes, options.pairs);
  std::printf("%-8s %12s %12s %10s %10s %10s %10s\n", "scheme", "before",
              "after", "reduction", "gold", "covered", "coverage");
  std::printf("%-8s %12lld %12lld %10s %10lld %10lld %10s\n",
              std::string(SchemeName(options.scheme)).c_str(), s.pairs_before,
              s.pairs_after, Fixed(s.ReductionPercent()).c_str(),
              s.gold_arguments, s.covered_arguments,
              Fixed(s.CoveragePercent(), 1).c_str());
  WriteReport(config, {{"command", "prune-stats"},
                       {"scheme", SchemeName(options.scheme)},
                       {"adaptive", options.pairs.adaptive},
                       {"sentences", s.sentences},
                       {"predicates", s.predicates},
                       {"pairs_before", s.pairs_before},
                       {"pairs_after", s.pairs_after},
                       {"reduction_percent", s.ReductionPercent()},
                       {"gold_arguments", s.gold_arguments},
                       {"covered_arguments", s.covered_arguments},
                       {"coverage_percent", s.CoveragePercent()}});
  return 0;
}

int CmdSelect(const RunConfig &config) {
  std::vector<Sentence> train = ReadCorpus(config, "paths.train");
  std::vector<Sentence> dev = ReadCorpus(config, "paths.dev");
  TemplateSet space = LoadTemplateFile(Require(config, "paths.ft"));
  const std::string &output = Require(config, "paths.output");
  DevSetScorer scorer(train, dev, space, config.pipeline(), config.train(),
                      config.decode());
  FeatureSelector selector(space.size(), scorer.AsFunction(),
                           config.selection());
  SelectionReport r = selector.Run();
  TemplateSet selected = SubsetOf(space, r.selected);
  SaveTemplateFile(selected, output);
  DumpConfig(config, output);

  std::printf("%-4s %6s %6s %9s %9s %7s %7s %9s %s\n", "k1", "|S|",
              "|FT-S|", "scr(S)", "|Cr|", "|Smax|", "passes", "scr(S')",
              "accepted");
  for (const SelectionIteration &it : r.iterations) {
    std::printf("%-4d %6d %6d %9s %9zu %7d %7d %9s %s\n", it.index,
                it.set_size, it.complement, Fixed(100 * it.score).c_str(),
                it.recruited.size(), it.shaken_size, it.shakeoff_passes,
                it.recruited.empty() ? "-" : Fixed(100 * it.result_score).c_str(),
                it.accepted ? "yes" : "no");
  }
  std::printf("initial score   %s (%zu templates)\n",
              Fixed(100 * r.initial_score).c_str(), r.initial.size());
  std::printf("selected score  %s (%zu templates)\n",
              Fixed(100 * r.selected_score).c_str(), r.selected.size());
  std::printf("k1 %d  k2 %d  routine calls %lld  bound %lld  importance "
              "calls %lld\n",
              r.k1, r.k2, r.routine_calls, r.CallBound(), r.importance_calls);
  std::printf("%-5s %9s  %s\n", "rank", "drop", "template");
  for (const TemplateImportance &t : r.importance) {
    std::printf("%-5d %9s  %s\n", t.rank, Fixed(100 * t.drop).c_str(),
                space[t.templ].text().c_str());
  }

  json iterations = json::array();
  for (const SelectionIteration &it : r.iterations) {
    iterations.push_back({{"k1", it.index},
                          {"set_size", it.set_size},
                          {"complement", it.complement},
                          {"score", it.score},
                          {"recruited", it.recruited},
                          {"shaken_size", it.shaken_size},
                          {"shakeoff_passes", it.shakeoff_passes},
                          {"result", it.result},
                          {"result_score", it.result_score},
                          {"accepted", it.accepted}});
  }
  json importance = json::array();
  for (const TemplateImportance &t : r.importance) {
    importance.push_back({{"rank", t.rank},
                          {"template", t.templ},
                          {"text", space[t.templ].text()},
                          {"drop", t.drop}});
  }
  WriteReport(config, {{"command", "select-features"},
                       {"space_size", space.size()},
                       {"initial", r.initial},
                       {"initial_score", r.initial_score},
                       {"selected", r.selected},
                       {"selected_score", r.selected_score},
                       {"iterations", iterations},
                       {"k1", r.k1},
                       {"k2", r.k2},
                       {"max_complement", r.max_complement},
                       {"max_shaken", r.max_shaken},
                       {"routine_calls", r.routine_calls},
                       {"call_bound", r.CallBound()},
                       {"importance_calls", r.importance_calls},
                       {"importance", importance}});
  return 0;
}

int CmdGenSynthetic(const RunConfig &config) {
  const std::string &output = Require(config, "paths.output");
  long long n = config.GetInt("synthetic.sentences");
  if (n < 0) throw Error("config synthetic.sentences: must be non-negative");
  std::vector<Sentence> corpus = GenerateSyntheticCorpus(
      static_cast<uint64_t>(config.GetInt("synthetic.seed")),
      static_cast<int>(n), config.grammar());
  WriteCorpusFile(output, corpus);
  DumpConfig(config, output);
  std::printf("sentences   %zu\n", corpus.size());
  return 0;
}

}  // namespace
}  // namespace semdep

int main(int argc, char **argv) {
  using namespace semdep;
  CLI::App app{"Semantic dependency parser: word-pair classification with "
               "adaptive pruning, beam decoding and greedy template "
               "selection."};
  app.require_subcommand(1);
  bool help_config = false;
  app.add_flag("--help-config", help_config,
               "list every config key with its default");

  struct Command {
    const char *name;
    const char *help;
    int (*run)(const RunConfig &);
  };
  const Command commands[] = {
      {"train", "train a parser model", CmdTrain},
      {"select-features", "greedy template selection", CmdSelect},
      {"parse", "fill predicate and argument columns", CmdParse},
      {"evaluate", "score a prediction against gold", CmdEvaluate},
      {"prune-stats", "candidate reduction and coverage", CmdPruneStats},
      {"gen-synthetic", "write a synthetic corpus", CmdGenSynthetic},
  };
  std::vector<Flags> flags(std::size(commands));
  std::vector<std::vector<std::string>> shortcut_values(
      std::size(commands), std::vector<std::string>(std::size(kShortcuts)));
  std::vector<CLI::App *> subs;
  for (size_t i = 0; i < std::size(commands); ++i) {
    CLI::App *sub = app.add_subcommand(commands[i].name, commands[i].help);
    AddCommonOptions(sub, &flags[i], &shortcut_values[i]);
    subs.push_back(sub);
  }
  // Handled before parsing so it works without a subcommand.
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--help-config") {
      for (const ConfigKey &k : RunConfig::Keys()) {
        std::printf("%-28s %-10s %s\n", std::string(k.name).c_str(),
                    std::string(k.default_value).c_str(),
                    std::string(k.help).c_str());
      }
      return 0;
    }
  }
  CLI11_PARSE(app, argc, argv);
  for (size_t i = 0; i < subs.size(); ++i) {
    if (!subs[i]->parsed()) continue;
    try {
      RunConfig config = BuildConfig(flags[i], shortcut_values[i]);
      return commands[i].run(config);
    } catch (const std::exception &e) {
      std::cerr << "semdep " << commands[i].name << ": " << e.what() << "\n";
      return 1;
    }
  }
  return 1;
}
