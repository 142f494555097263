#pragma once

// Brute-force reference computations used to derive expected values.
// Nothing here calls into the library's metric, tuple or profile code.

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;
using Dense = std::vector<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline Matrix floyd_warshall(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  Matrix d(n, std::vector<double>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& [u, v] : edges) {
    d[u][v] = 1;
    d[v][u] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline Matrix cycle_metric(std::size_t m) {
  Matrix d(m, std::vector<double>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t a = i > j ? i - j : j - i;
      d[i][j] = static_cast<double>(a < m - a ? a : m - a);
    }
  return d;
}

/// Every tuple in X^len, lexicographic, filtered by pairwise distance <= R.
inline std::vector<std::vector<std::size_t>> all_tuples(const Matrix& d, std::size_t len, double R) {
  const std::size_t n = d.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> t(len, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i)
      for (std::size_t j = 0; j < len && ok; ++j) ok = d[t[i]][t[j]] <= R;
    if (ok) out.push_back(t);
    std::size_t k = len;
    while (k > 0) {
      if (++t[k - 1] < n) break;
      t[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

/// Reduced words of length <= radius over rank generators and their inverses.
inline std::size_t count_reduced_words(int rank, int radius) {
  std::size_t count = 0;
  std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& w) {
    ++count;
    if (static_cast<int>(w.size()) == radius) return;
    for (int g = 1; g <= rank; ++g) {
      for (const int s : {g, -g}) {
        if (!w.empty() && w.back() == -s) continue;
        w.push_back(s);
        grow(w);
        w.pop_back();
      }
    }
  };
  std::vector<int> w;
  grow(w);
  return count;
}

/// Uniform probability on the closed ball, as a dense vector.
inline Dense ball_average(const Matrix& d, std::size_t x, double S) {
  const std::size_t n = d.size();
  std::size_t size = 0;
  for (std::size_t z = 0; z < n; ++z) size += d[x][z] <= S;
  const double mass = 1.0 / static_cast<double>(size);
  Dense v(n, 0.0);
  for (std::size_t z = 0; z < n; ++z)
    if (d[x][z] <= S) v[z] = mass;
  return v;
}

inline double l1(const Dense& a, const Dense& b) {
  double t = 0;
  for (std::size_t z = 0; z < a.size(); ++z) t += std::abs(a[z] - b[z]);
  return t;
}

inline double l1(const Dense& a) {
  double t = 0;
  for (const double v : a) t += std::abs(v);
  return t;
}

/// max over x0 < x1 with d(x0, x1) <= R of |f(x1) - f(x0)|_1 for the ball-average family.
inline double nu_ball_average(const Matrix& d, double S, double R) {
  const std::size_t n = d.size();
  std::vector<Dense> f;
  for (std::size_t x = 0; x < n; ++x) f.push_back(ball_average(d, x, S));
  double best = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (d[a][b] <= R) best = std::max(best, l1(f[b], f[a]));
  return best;
}

/// A dense cochain value: (x tuple, y tuple) -> vector in R^n.
using DenseCochain =
    std::function<Dense(const std::vector<std::size_t>&, const std::vector<std::size_t>&)>;

/// sup over x in Delta_R^{p+1}, y in X^{q+1} of |phi(x, y)|_1.
inline double seminorm(const Matrix& d, const DenseCochain& phi, int p, int q, double R) {
  const auto xs = all_tuples(d, static_cast<std::size_t>(p + 1), R);
  const auto ys = q < 0 ? std::vector<std::vector<std::size_t>>{{}}
                        : all_tuples(d, static_cast<std::size_t>(q + 1), kInf);
  double best = 0;
  for (const auto& x : xs)
    for (const auto& y : ys) best = std::max(best, l1(phi(x, y)));
  return best;
}

/// D phi((x0..x_{p+1}), y) = sum (-1)^i phi(x without i, y), dense.
inline DenseCochain D(DenseCochain phi, std::size_t n) {
  return [phi, n](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
    Dense out(n, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      std::vector<std::size_t> face;
      for (std::size_t j = 0; j < x.size(); ++j)
        if (j != i) face.push_back(x[j]);
      const Dense v = phi(face, y);
      const double sign = i % 2 == 0 ? 1.0 : -1.0;
      for (std::size_t z = 0; z < n; ++z) out[z] += sign * v[z];
    }
    return out;
  };
}

inline Dense delta(std::size_t n, std::size_t x, double c = 1.0) {
  Dense v(n, 0.0);
  v[x] = c;
  return v;
}

}  // namespace oracle
