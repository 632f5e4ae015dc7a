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

#include "semdep/maxent.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "semdep/error.h"
#include "semdep/labels.h"
#include "semdep/lbfgs.h"

namespace semdep {
namespace {

constexpr std::string_view kMagic = "semdep-maxent";
constexpr int kVersion = 1;

std::string FormatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int LabelRank(const std::string &label) {
  int i = LabelSet::ForScheme(TraverseScheme::kSynPth).IndexOf(label);
  if (i >= 0) return i;
  i = LabelSet::ForScheme(TraverseScheme::kLinPth).IndexOf(label);
  if (i >= 0) return i + 1;
  return -1;
}

constexpr size_t kMaxShards = 8;

// Log-likelihood terms of samples[begin, end) into *grad (not including the
// prior). Returns the negated log-likelihood.
double ShardObjective(const std::vector<double> &w,
                      const std::vector<IndexedSample> &samples, size_t begin,
                      size_t end, int num_labels, std::vector<double> *grad) {
  std::vector<double> scores(num_labels);
  double total = 0;
  for (size_t i = begin; i < end; ++i) {
    const IndexedSample &s = samples[i];
    std::fill(scores.begin(), scores.end(), 0.0);
    for (int f : s.features) {
      const double *row = &w[static_cast<size_t>(f) * num_labels];
      for (int l = 0; l < num_labels; ++l) scores[l] += row[l];
    }
    double mx = *std::max_element(scores.begin(), scores.end());
    double z = 0;
    for (double &v : scores) {
      v = std::exp(v - mx);
      z += v;
    }
    double log_z = mx + std::log(z);
    double gold_score = 0;
    for (int f : s.features) {
      gold_score += w[static_cast<size_t>(f) * num_labels + s.label];
    }
    total += log_z - gold_score;
    for (double &v : scores) v /= z;
    for (int f : s.features) {
      double *row = &(*grad)[static_cast<size_t>(f) * num_labels];
      for (int l = 0; l < num_labels; ++l) row[l] += scores[l];
      row[s.label] -= 1.0;
    }
  }
  return total;
}

[[noreturn]] void Corrupt(int line, const std::string &what) {
  throw FormatError("model file: " + what, line);
}

}  // namespace

int FeatureIndex::Add(const std::string &feature) {
  auto it = ids_.find(feature);
  if (it != ids_.end()) return it->second;
  if (frozen_) return -1;
  int id = static_cast<int>(strings_.size());
  strings_.push_back(feature);
  ids_.emplace(feature, id);
  return id;
}

int FeatureIndex::Find(std::string_view feature) const {
  auto it = ids_.find(std::string(feature));
  return it == ids_.end() ? -1 : it->second;
}

MaxEntModel::MaxEntModel(std::vector<std::string> labels, FeatureIndex features,
                         double sigma2)
    : labels_(std::move(labels)),
      features_(std::move(features)),
      weights_(static_cast<size_t>(features_.size()) * labels_.size(), 0.0),
      sigma2_(sigma2) {
  features_.Freeze();
}

int MaxEntModel::LabelIndex(std::string_view label) const {
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

std::vector<int> MaxEntModel::Lookup(
    const std::vector<std::string> &features) const {
  std::vector<int> ids;
  ids.reserve(features.size());
  for (const std::string &f : features) {
    int id = features_.Find(f);
    if (id >= 0) ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

void MaxEntModel::AccumulateScores(const std::vector<int> &ids,
                                   double *scores) const {
  const int L = num_labels();
  for (int f : ids) {
    const double *row = &weights_[static_cast<size_t>(f) * L];
    for (int l = 0; l < L; ++l) scores[l] += row[l];
  }
}

std::vector<double> Softmax(std::vector<double> scores) {
  if (scores.empty()) return scores;
  double mx = *std::max_element(scores.begin(), scores.end());
  double z = 0;
  for (double &v : scores) {
    v = std::exp(v - mx);
    z += v;
  }
  for (double &v : scores) v /= z;
  return scores;
}

std::vector<double> MaxEntModel::PredictIds(const std::vector<int> &ids) const {
  std::vector<double> scores(labels_.size(), 0.0);
  AccumulateScores(ids, scores.data());
  return Softmax(std::move(scores));
}

std::vector<double> MaxEntModel::Predict(
    const std::vector<std::string> &features) const {
  return PredictIds(Lookup(features));
}

double ObjectiveAndGradient(const std::vector<double> &weights,
                            const std::vector<IndexedSample> &samples,
                            int num_labels, double sigma2,
                            std::vector<double> *gradient, int threads) {
  if (num_labels <= 0 || weights.size() % num_labels != 0) {
    throw Error("weight vector does not match the label count");
  }
  const size_t num_features = weights.size() / num_labels;
  for (const IndexedSample &s : samples) {
    if (s.label < 0 || s.label >= num_labels) throw Error("label out of range");
    for (int f : s.features) {
      if (f < 0 || static_cast<size_t>(f) >= num_features) {
        throw Error("feature id out of range");
      }
    }
  }
  gradient->assign(weights.size(), 0.0);
  // The partition and the reduction order depend only on the sample count,
  // so every thread count gives the same bits.
  const int shards = static_cast<int>(
      std::min<size_t>(kMaxShards, samples.size() / 64 + 1));
  const size_t chunk = (samples.size() + shards - 1) / shards;
  auto bounds = [&](int s) {
    size_t b = std::min(samples.size(), s * chunk);
    return std::make_pair(b, std::min(samples.size(), b + chunk));
  };
  double nll = 0;
  threads = std::max(1, std::min(threads, shards));
  if (shards == 1) {
    nll = ShardObjective(weights, samples, 0, samples.size(), num_labels,
                         gradient);
  } else if (threads == 1) {
    std::vector<double> scratch(weights.size());
    for (int s = 0; s < shards; ++s) {
      std::fill(scratch.begin(), scratch.end(), 0.0);
      auto [b, e] = bounds(s);
      nll += ShardObjective(weights, samples, b, e, num_labels, &scratch);
      for (size_t j = 0; j < weights.size(); ++j) (*gradient)[j] += scratch[j];
    }
  } else {
    std::vector<std::vector<double>> grads(shards,
                                           std::vector<double>(weights.size()));
    std::vector<double> values(shards);
    std::vector<std::thread> workers;
    for (int t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (int s = t; s < shards; s += threads) {
          auto [b, e] = bounds(s);
          values[s] =
              ShardObjective(weights, samples, b, e, num_labels, &grads[s]);
        }
      });
    }
    for (auto &t : workers) t.join();
    for (int s = 0; s < shards; ++s) {
      nll += values[s];
      for (size_t j = 0; j < weights.size(); ++j) (*gradient)[j] += grads[s][j];
    }
  }
  double prior = 0;
  for (size_t j = 0; j < weights.size(); ++j) {
    prior += weights[j] * weights[j];
    (*gradient)[j] += weights[j] / sigma2;
  }
  return nll + prior / (2 * sigma2);
}

std::vector<std::string> OrderLabels(const std::vector<Sample> &samples) {
  std::vector<std::string> seen;
  std::unordered_map<std::string, int> first;
  for (const Sample &s : samples) {
    if (first.emplace(s.label, static_cast<int>(first.size())).second) {
      seen.push_back(s.label);
    }
  }
  std::stable_sort(seen.begin(), seen.end(),
                   [&](const std::string &a, const std::string &b) {
                     int ra = LabelRank(a), rb = LabelRank(b);
                     if (ra < 0) ra = std::numeric_limits<int>::max();
                     if (rb < 0) rb = std::numeric_limits<int>::max();
                     return ra < rb;
                   });
  return seen;
}

MaxEntModel TrainMaxEnt(const std::vector<Sample> &samples,
                        const TrainConfig &config) {
  if (samples.empty()) throw Error("no training samples");
  if (!(config.sigma2 > 0)) throw Error("sigma2 must be positive");
  if (config.memory < 1) throw Error("L-BFGS memory must be at least 1");
  if (config.cutoff < 0) throw Error("feature cutoff must be non-negative");

  std::vector<std::string> labels = OrderLabels(samples);
  std::unordered_map<std::string, int> label_ids;
  for (size_t i = 0; i < labels.size(); ++i) label_ids[labels[i]] = i;

  // Count the samples each feature occurs in, keeping first-seen order.
  std::unordered_map<std::string, int> counts;
  std::vector<std::string> order;
  for (const Sample &s : samples) {
    std::vector<std::string> distinct = s.features;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    for (const std::string &f : distinct) {
      if (counts[f]++ == 0) order.push_back(f);
    }
  }
  FeatureIndex index;
  for (const std::string &f : order) {
    if (counts[f] >= config.cutoff) index.Add(f);
  }
  index.Freeze();

  std::vector<IndexedSample> indexed;
  indexed.reserve(samples.size());
  for (const Sample &s : samples) {
    IndexedSample is;
    is.label = label_ids[s.label];
    for (const std::string &f : s.features) {
      int id = index.Find(f);
      if (id >= 0) is.features.push_back(id);
    }
    std::sort(is.features.begin(), is.features.end());
    is.features.erase(std::unique(is.features.begin(), is.features.end()),
                      is.features.end());
    indexed.push_back(std::move(is));
  }

  MaxEntModel model(labels, std::move(index), config.sigma2);
  if (labels.size() == 1) {
    model.warnings_.push_back("only one label (" + labels[0] +
                              ") in the training samples");
  }
  const int L = static_cast<int>(labels.size());
  LbfgsConfig lc;
  lc.memory = config.memory;
  lc.max_iterations = config.max_iterations;
  lc.tolerance = config.tolerance;
  LbfgsResult r = MinimizeLbfgs(
      [&](const std::vector<double> &w, std::vector<double> *g) {
        return ObjectiveAndGradient(w, indexed, L, config.sigma2, g,
                                    config.threads);
      },
      model.weights_, lc);
  model.weights_ = std::move(r.x);
  model.iterations_ = r.iterations;
  model.objective_ = r.value;
  model.history_ = std::move(r.history);
  if (!r.converged) {
    model.warnings_.push_back("optimizer stopped before convergence after " +
                              std::to_string(r.iterations) + " iterations");
  }
  return model;
}

void MaxEntModel::Save(std::ostream &out) const {
  out << kMagic << ' ' << kVersion << '\n';
  out << "sigma2 " << FormatDouble(sigma2_) << '\n';
  out << "iterations " << iterations_ << '\n';
  out << "objective " << FormatDouble(objective_) << '\n';
  out << "provenance " << provenance_ << '\n';
  out << "labels " << labels_.size() << '\n';
  for (const auto &l : labels_) out << l << '\n';
  out << "features " << features_.size() << '\n';
  for (int i = 0; i < features_.size(); ++i) out << features_.Get(i) << '\n';
  size_t nonzero = 0;
  for (double w : weights_) nonzero += w != 0.0;
  out << "weights " << nonzero << '\n';
  const size_t L = labels_.size();
  for (size_t j = 0; j < weights_.size(); ++j) {
    if (weights_[j] == 0.0) continue;
    out << j / L << ' ' << j % L << ' ' << FormatDouble(weights_[j]) << '\n';
  }
  out << "end\n";
}

MaxEntModel MaxEntModel::Load(std::istream &in) {
  int line_no = 0;
  std::string line;
  auto next = [&]() -> std::string & {
    if (!std::getline(in, line)) Corrupt(line_no + 1, "unexpected end of file");
    ++line_no;
    return line;
  };
  auto keyed = [&](std::string_view key) {
    std::string &l = next();
    if (l.compare(0, key.size(), key) != 0 ||
        (l.size() > key.size() && l[key.size()] != ' ')) {
      Corrupt(line_no, "expected '" + std::string(key) + "'");
    }
    return l.size() > key.size() ? l.substr(key.size() + 1) : std::string();
  };
  auto number = [&](const std::string &s) {
    char *end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (s.empty() || *end != '\0') Corrupt(line_no, "bad number '" + s + "'");
    return v;
  };
  auto count = [&](const std::string &s) {
    double v = number(s);
    if (v < 0 || v != std::floor(v)) Corrupt(line_no, "bad count '" + s + "'");
    return static_cast<long long>(v);
  };

  std::string header = keyed(kMagic);
  if (header != std::to_string(kVersion)) {
    Corrupt(line_no, "unsupported version '" + header + "'");
  }
  MaxEntModel m;
  m.sigma2_ = number(keyed("sigma2"));
  m.iterations_ = static_cast<int>(count(keyed("iterations")));
  m.objective_ = number(keyed("objective"));
  m.provenance_ = keyed("provenance");
  long long num_labels = count(keyed("labels"));
  for (long long i = 0; i < num_labels; ++i) m.labels_.push_back(next());
  long long num_features = count(keyed("features"));
  for (long long i = 0; i < num_features; ++i) {
    if (m.features_.Add(next()) != i) Corrupt(line_no, "duplicate feature");
  }
  m.features_.Freeze();
  m.weights_.assign(static_cast<size_t>(num_features) * num_labels, 0.0);
  long long num_weights = count(keyed("weights"));
  for (long long i = 0; i < num_weights; ++i) {
    std::istringstream row(next());
    long long f, l;
    std::string w;
    if (!(row >> f >> l >> w) || f < 0 || f >= num_features || l < 0 ||
        l >= num_labels) {
      Corrupt(line_no, "bad weight entry");
    }
    double v = number(w);
    if (!std::isfinite(v)) Corrupt(line_no, "non-finite weight");
    m.weights_[f * num_labels + l] = v;
  }
  if (next() != "end") Corrupt(line_no, "expected 'end'");
  return m;
}

void MaxEntModel::SaveFile(const std::string &path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write model file " + path);
  Save(out);
  if (!out) throw Error("write failed: " + path);
}

MaxEntModel MaxEntModel::LoadFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file " + path);
  return Load(in);
}

}  // namespace semdep
