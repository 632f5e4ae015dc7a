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

#include "semdep/lbfgs.h"

#include <algorithm>
#include <cmath>
#include <deque>

namespace semdep {
namespace {

double Dot(const std::vector<double> &a, const std::vector<double> &b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double Norm(const std::vector<double> &a) { return std::sqrt(Dot(a, a)); }

struct Correction {
  std::vector<double> s, y;
  double rho;
};

}  // namespace

LbfgsResult MinimizeLbfgs(const DifferentiableFunction &f,
                          std::vector<double> x0, const LbfgsConfig &config) {
  const size_t n = x0.size();
  LbfgsResult result;
  result.x = std::move(x0);
  std::vector<double> g(n), g_new(n), x_new(n), d(n);
  double fx = f(result.x, &g);
  result.history.push_back(fx);
  std::deque<Correction> memory;
  const int m = std::max(1, config.memory);

  auto converged = [&](const std::vector<double> &grad,
                       const std::vector<double> &x) {
    return Norm(grad) <= config.tolerance * std::max(1.0, Norm(x));
  };

  while (result.iterations < config.max_iterations) {
    if (n == 0 || converged(g, result.x)) {
      result.converged = true;
      break;
    }
    // Two-loop recursion: d = -H g.
    d = g;
    std::vector<double> alpha(memory.size());
    for (int i = static_cast<int>(memory.size()) - 1; i >= 0; --i) {
      alpha[i] = memory[i].rho * Dot(memory[i].s, d);
      for (size_t j = 0; j < n; ++j) d[j] -= alpha[i] * memory[i].y[j];
    }
    double gamma = 1.0;
    if (!memory.empty()) {
      const Correction &c = memory.back();
      gamma = Dot(c.s, c.y) / Dot(c.y, c.y);
    } else {
      gamma = 1.0 / std::max(1.0, Norm(g));
    }
    for (double &v : d) v *= gamma;
    for (size_t i = 0; i < memory.size(); ++i) {
      double beta = memory[i].rho * Dot(memory[i].y, d);
      for (size_t j = 0; j < n; ++j) d[j] += (alpha[i] - beta) * memory[i].s[j];
    }
    for (double &v : d) v = -v;

    double slope = Dot(g, d);
    if (slope >= 0) {
      // Not a descent direction; restart from steepest descent.
      memory.clear();
      for (size_t j = 0; j < n; ++j) d[j] = -g[j] / std::max(1.0, Norm(g));
      slope = Dot(g, d);
    }

    double step = 1.0, f_new = 0;
    bool accepted = false;
    for (int tries = 0; tries < 40; ++tries) {
      for (size_t j = 0; j < n; ++j) x_new[j] = result.x[j] + step * d[j];
      f_new = f(x_new, &g_new);
      if (std::isfinite(f_new) && f_new <= fx + 1e-4 * step * slope &&
          f_new < fx) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      result.converged = converged(g, result.x);
      break;
    }

    Correction c;
    c.s.resize(n);
    c.y.resize(n);
    for (size_t j = 0; j < n; ++j) {
      c.s[j] = x_new[j] - result.x[j];
      c.y[j] = g_new[j] - g[j];
    }
    double sy = Dot(c.s, c.y);
    if (sy > 1e-12) {
      c.rho = 1.0 / sy;
      memory.push_back(std::move(c));
      if (static_cast<int>(memory.size()) > m) memory.pop_front();
    }
    result.x.swap(x_new);
    g.swap(g_new);
    double decrease = fx - f_new;
    fx = f_new;
    ++result.iterations;
    result.history.push_back(fx);
    if (decrease <= 1e-12 * std::max(1.0, std::fabs(fx))) {
      result.converged = true;
      break;
    }
  }
  result.value = fx;
  return result;
}

}  // namespace semdep
