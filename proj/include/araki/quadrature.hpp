#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "araki/errors.hpp"

namespace araki {

/// 7-point Gauss / 15-point Kronrod nodes and weights on [-1, 1].
struct GaussKronrod15 {
  static const std::array<double, 8> kronrod_nodes;    // x_0 = 0 last; symmetric
  static const std::array<double, 8> kronrod_weights;
  static const std::array<double, 4> gauss_weights;   // for nodes 1, 3, 5, 7
};

struct QuadratureOptions {
  double abs_tol = 1e-9;
  int max_intervals = 4000;
};

template <typename Value>
struct QuadratureResult {
  Value value;
  double error_estimate = 0.0;
  int intervals = 0;
};

/// Globally adaptive Gauss-Kronrod integration of a vector-space valued
/// function over the finite interval [a, b]. `norm` measures the local error.
/// The final sum is taken in left-to-right interval order, so the result is
/// independent of the refinement history.
template <typename Value, typename F, typename Norm>
QuadratureResult<Value> integrate_adaptive(F&& f, double a, double b, Norm&& norm,
                                           const QuadratureOptions& opts) {
  struct Panel {
    double lo, hi;
    Value value;
    double err;
  };
  const auto& xk = GaussKronrod15::kronrod_nodes;
  const auto& wk = GaussKronrod15::kronrod_weights;
  const auto& wg = GaussKronrod15::gauss_weights;

  auto rule = [&](double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    Value center = f(c);
    Value kron = center * wk[7];
    Value gauss = center * wg[3];
    for (int j = 0; j < 7; ++j) {
      const Value left = f(c - h * xk[j]);
      const Value right = f(c + h * xk[j]);
      Value pair = left + right;
      kron = kron + pair * wk[j];
      if (j % 2 == 1) gauss = gauss + pair * wg[j / 2];
    }
    Value value = kron * h;
    const double err = norm(Value((kron - gauss) * h));
    return Panel{lo, hi, std::move(value), err};
  };

  auto cmp = [](const Panel& x, const Panel& y) { return x.err < y.err; };
  std::vector<Panel> heap;
  heap.push_back(rule(a, b));
  double total_err = heap.front().err;

  while (total_err > opts.abs_tol) {
    if (static_cast<int>(heap.size()) >= opts.max_intervals)
      throw ConvergenceError("adaptive quadrature exceeded its interval budget", total_err);
    std::pop_heap(heap.begin(), heap.end(), cmp);
    Panel worst = std::move(heap.back());
    heap.pop_back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi))
      throw ConvergenceError("adaptive quadrature cannot subdivide further", total_err);
    Panel left = rule(worst.lo, mid);
    Panel right = rule(mid, worst.hi);
    total_err += left.err + right.err - worst.err;
    heap.push_back(std::move(left));
    std::push_heap(heap.begin(), heap.end(), cmp);
    heap.push_back(std::move(right));
    std::push_heap(heap.begin(), heap.end(), cmp);
  }

  std::sort(heap.begin(), heap.end(), [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
  QuadratureResult<Value> out{heap.front().value, 0.0, static_cast<int>(heap.size())};
  double err = heap.front().err;
  for (std::size_t i = 1; i < heap.size(); ++i) {
    out.value = out.value + heap[i].value;
    err += heap[i].err;
  }
  out.error_estimate = err;
  return out;
}

}  // namespace araki
