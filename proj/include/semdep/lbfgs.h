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

#ifndef SEMDEP_LBFGS_H_
#define SEMDEP_LBFGS_H_

#include <functional>
#include <vector>

namespace semdep {

struct LbfgsConfig {
  int memory = 10;
  int max_iterations = 200;
  // Stop when |g| <= tolerance * max(1, |x|).
  double tolerance = 1e-5;
};

struct LbfgsResult {
  std::vector<double> x;
  double value = 0;
  int iterations = 0;
  bool converged = false;
  // Objective after each accepted step, starting with the initial point.
  std::vector<double> history;
};

// Returns f(x) and writes the gradient into *grad (already sized).
using DifferentiableFunction =
    std::function<double(const std::vector<double> &x, std::vector<double> *grad)>;

// Limited-memory BFGS with a backtracking Armijo line search. Every accepted
// step strictly decreases f.
LbfgsResult MinimizeLbfgs(const DifferentiableFunction &f,
                          std::vector<double> x0, const LbfgsConfig &config);

}  // namespace semdep

#endif  // SEMDEP_LBFGS_H_
