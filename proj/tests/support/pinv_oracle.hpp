/*
 * Copyright 2026 The headline-scorer Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Reference least-squares solver for tests. It shares no code with the
// library: plain std::vector storage, long double arithmetic and a one-sided
// Jacobi (Hestenes) SVD.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace headline::testing {

/// Row-major m x p matrix.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<long double> data;

  long double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  long double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// pinv(A) * y. Singular values below max(m, p) * eps(double) * sigma_max
/// are dropped, the same cutoff rule the library documents.
inline std::vector<long double> pinv_solve(const DenseMatrix& a, const std::vector<long double>& y) {
  const std::size_t m = a.rows;
  const std::size_t p = a.cols;
  DenseMatrix w = a;
  DenseMatrix v{p, p, std::vector<long double>(p * p, 0.0L)};
  for (std::size_t j = 0; j < p; ++j) v(j, j) = 1.0L;

  const long double eps = std::numeric_limits<long double>::epsilon();
  for (int sweep = 0; sweep < 200; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < p; ++i) {
      for (std::size_t j = i + 1; j < p; ++j) {
        long double alpha = 0, beta = 0, gamma = 0;
        for (std::size_t k = 0; k < m; ++k) {
          alpha += w(k, i) * w(k, i);
          beta += w(k, j) * w(k, j);
          gamma += w(k, i) * w(k, j);
        }
        if (gamma == 0.0L || std::fabs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const long double zeta = (beta - alpha) / (2.0L * gamma);
        const long double t = (zeta >= 0 ? 1.0L : -1.0L) / (std::fabs(zeta) + std::sqrt(1.0L + zeta * zeta));
        const long double c = 1.0L / std::sqrt(1.0L + t * t);
        const long double s = c * t;
        for (std::size_t k = 0; k < m; ++k) {
          const long double wi = w(k, i), wj = w(k, j);
          w(k, i) = c * wi - s * wj;
          w(k, j) = s * wi + c * wj;
        }
        for (std::size_t k = 0; k < p; ++k) {
          const long double vi = v(k, i), vj = v(k, j);
          v(k, i) = c * vi - s * vj;
          v(k, j) = s * vi + c * vj;
        }
      }
    }
    if (!rotated) break;
  }

  // Columns of W are now sigma_j * u_j.
  std::vector<long double> sigma(p, 0.0L);
  for (std::size_t j = 0; j < p; ++j) {
    long double norm2 = 0;
    for (std::size_t k = 0; k < m; ++k) norm2 += w(k, j) * w(k, j);
    sigma[j] = std::sqrt(norm2);
  }
  const long double sigma_max = p ? *std::max_element(sigma.begin(), sigma.end()) : 0.0L;
  const long double cutoff = static_cast<long double>(std::max(m, p)) *
                             static_cast<long double>(std::numeric_limits<double>::epsilon()) * sigma_max;

  std::vector<long double> x(p, 0.0L);
  for (std::size_t j = 0; j < p; ++j) {
    if (sigma[j] <= 0 || sigma[j] < cutoff) continue;
    long double dot = 0;
    for (std::size_t k = 0; k < m; ++k) dot += w(k, j) * y[k];
    const long double coef = dot / (sigma[j] * sigma[j]);
    for (std::size_t k = 0; k < p; ++k) x[k] += coef * v(k, j);
  }
  return x;
}

/// Least squares with intercept: solves over [X | 1]; the last entry of the
/// result is the intercept.
inline std::vector<long double> ols_oracle(const std::vector<std::vector<double>>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  const std::size_t d = n ? x[0].size() : 0;
  DenseMatrix a{n, d + 1, std::vector<long double>(n * (d + 1))};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) a(i, j) = x[i][j];
    a(i, d) = 1.0L;
  }
  return pinv_solve(a, std::vector<long double>(y.begin(), y.end()));
}

}  // namespace headline::testing
