#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "constants.hpp"

namespace embody {

// Nodes and weights of a 1D quadrature rule.
struct Quadrature1D {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

// Gauss-Legendre rule on [-1, 1], Newton iteration on the Legendre recurrence.
inline Quadrature1D gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  Quadrature1D q;
  q.nodes.resize(n);
  q.weights.resize(n);
  const std::size_t m = (n + 1) / 2;  // roots come in +/- pairs
  for (std::size_t k = 0; k < m; ++k) {
    double x = std::cos(pi * (static_cast<double>(k) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre P_n(x) and derivative by upward recurrence.
      double p0 = 1.0, p1 = x;
      for (std::size_t j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    q.nodes[k] = -x;          // ascending order
    q.weights[k] = w;
    q.nodes[n - 1 - k] = x;
    q.weights[n - 1 - k] = w;
  }
  return q;
}

// Gauss-Legendre rule mapped to [a, b].
inline Quadrature1D gauss_legendre(std::size_t n, double a, double b) {
  Quadrature1D q = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (std::size_t k = 0; k < n; ++k) {
    q.nodes[k] = mid + half * q.nodes[k];
    q.weights[k] *= half;
  }
  return q;
}

// Catmull-Rom cubic on a uniform grid x_k = k*h, clamped at the ends.
// Returns 0 outside [0, (n-1)h].
class UniformCubicInterpolant {
 public:
  UniformCubicInterpolant(std::vector<double> values, double spacing)
      : v_(std::move(values)), h_(spacing) {
    if (v_.size() < 4) throw std::invalid_argument("interpolant: need >= 4 samples");
    if (!(h_ > 0.0)) throw std::invalid_argument("interpolant: spacing must be > 0");
  }

  double operator()(double x) const {
    const std::size_t n = v_.size();
    if (x < 0.0 || x > h_ * static_cast<double>(n - 1)) return 0.0;
    const double u = x / h_;
    std::size_t k = static_cast<std::size_t>(u);
    if (k >= n - 1) k = n - 2;
    const double t = u - static_cast<double>(k);
    const double p0 = v_[k > 0 ? k - 1 : 0];
    const double p1 = v_[k];
    const double p2 = v_[k + 1];
    const double p3 = v_[k + 2 < n ? k + 2 : n - 1];
    const double a = 0.5 * (-p0 + 3.0 * p1 - 3.0 * p2 + p3);
    const double b = 0.5 * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3);
    const double c = 0.5 * (p2 - p0);
    return ((a * t + b) * t + c) * t + p1;
  }

  double spacing() const { return h_; }
  double x_max() const { return h_ * static_cast<double>(v_.size() - 1); }

 private:
  std::vector<double> v_;
  double h_;
};

// Evaluates f(i) for i in [0, n) into a vector, optionally on several threads.
// Results are stored by index, so any later reduction is deterministic.
template <class F>
std::vector<double> indexed_map(std::size_t n, unsigned threads, F&& f) {
  std::vector<double> out(n);
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  const unsigned nt = std::min<unsigned>(threads, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (unsigned w = 0; w < nt; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += nt) out[i] = f(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

// Ordered sum, fixed index order regardless of thread count.
inline double ordered_sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace embody
