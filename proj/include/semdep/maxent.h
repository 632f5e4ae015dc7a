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

#ifndef SEMDEP_MAXENT_H_
#define SEMDEP_MAXENT_H_

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace semdep {

// Bidirectional feature-string <-> dense id map.
class FeatureIndex {
 public:
  // Returns the id, adding the string unless frozen (then -1 for new ones).
  int Add(const std::string &feature);
  // -1 when unknown.
  int Find(std::string_view feature) const;
  const std::string &Get(int id) const { return strings_[id]; }
  int size() const { return static_cast<int>(strings_.size()); }
  void Freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

 private:
  std::vector<std::string> strings_;
  std::unordered_map<std::string, int> ids_;
  bool frozen_ = false;
};

struct TrainConfig {
  double sigma2 = 1.0;  // Gaussian prior variance
  int memory = 10;      // L-BFGS corrections
  int max_iterations = 200;
  double tolerance = 1e-5;
  int cutoff = 1;   // minimum number of samples a feature occurs in
  int threads = 1;  // never changes the result
};

struct Sample {
  std::vector<std::string> features;
  std::string label;
};

struct IndexedSample {
  std::vector<int> features;  // distinct ids
  int label = 0;
};

class MaxEntModel {
 public:
  MaxEntModel() = default;
  // All-zero weights.
  MaxEntModel(std::vector<std::string> labels, FeatureIndex features,
              double sigma2 = 1.0);

  const std::vector<std::string> &labels() const { return labels_; }
  int num_labels() const { return static_cast<int>(labels_.size()); }
  const FeatureIndex &features() const { return features_; }
  int LabelIndex(std::string_view label) const;

  // Row-major [feature][label].
  const std::vector<double> &weights() const { return weights_; }
  std::vector<double> &mutable_weights() { return weights_; }
  double weight(int feature, int label) const {
    return weights_[static_cast<size_t>(feature) * labels_.size() + label];
  }

  double sigma2() const { return sigma2_; }
  int iterations() const { return iterations_; }
  double objective() const { return objective_; }
  const std::vector<double> &objective_history() const { return history_; }
  const std::vector<std::string> &warnings() const { return warnings_; }
  const std::string &provenance() const { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  // Ids of the known features among `features`, duplicates removed.
  std::vector<int> Lookup(const std::vector<std::string> &features) const;
  // Adds the weights of `ids` to scores[0..L).
  void AccumulateScores(const std::vector<int> &ids, double *scores) const;
  // Softmax over labels; unseen features contribute nothing.
  std::vector<double> Predict(const std::vector<std::string> &features) const;
  std::vector<double> PredictIds(const std::vector<int> &ids) const;

  void Save(std::ostream &out) const;
  // Throws FormatError on malformed input.
  static MaxEntModel Load(std::istream &in);
  void SaveFile(const std::string &path) const;
  static MaxEntModel LoadFile(const std::string &path);

 private:
  friend MaxEntModel TrainMaxEnt(const std::vector<Sample> &,
                                 const TrainConfig &);
  std::vector<std::string> labels_;
  FeatureIndex features_;
  std::vector<double> weights_;
  double sigma2_ = 1.0;
  int iterations_ = 0;
  double objective_ = 0;
  std::vector<double> history_;
  std::vector<std::string> warnings_;
  std::string provenance_;
};

// Negated penalized log-likelihood
//   -sum_i log p(y_i | x_i) + sum w^2 / (2 sigma2)
// and its gradient (resized to weights.size()).
double ObjectiveAndGradient(const std::vector<double> &weights,
                            const std::vector<IndexedSample> &samples,
                            int num_labels, double sigma2,
                            std::vector<double> *gradient, int threads = 1);

// Label order of a trained model: SRL labels in label-set order, then any
// other label in order of first appearance.
std::vector<std::string> OrderLabels(const std::vector<Sample> &samples);

// Throws Error on an empty sample set or a bad config.
MaxEntModel TrainMaxEnt(const std::vector<Sample> &samples,
                        const TrainConfig &config);

std::vector<double> Softmax(std::vector<double> scores);

}  // namespace semdep

#endif  // SEMDEP_MAXENT_H_
