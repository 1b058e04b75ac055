#pragma once

// Perron eigenpair, geometric-mean weights and the four equivalent
// characterisations of a consistent matrix.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pcmtk/pcm.hpp"

namespace pcmtk {

struct EigenOptions {
  double tol = 1e-12;
  int max_iter = 10'000;
};

struct EigenResult {
  double lambda_max;
  WeightVector vector;
  int iterations;
  /// ||A v - lambda v||_inf / (lambda ||v||_inf)
  double residual;
};

namespace detail {

inline void matvec(const std::vector<double>& m, std::size_t n, const std::vector<double>& v, std::vector<double>& out) {
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += m[i * n + j] * v[j];
    out[i] = s;
  }
}

}  // namespace detail

/// Dominant eigenpair by power iteration from the uniform vector.
///
/// Iterates with A + sigma I where sigma is the current Collatz-Wielandt lower
/// bound of lambda_max. The shift keeps the eigenvector and pushes the
/// subdominant ratio away from 1, which otherwise approaches 1 for strongly
/// inconsistent matrices (e.g. corner matrices with huge entries).
/// Converged when successive Rayleigh quotients differ by at most
/// tol * max(1, lambda) and the scaled residual is at most 10 * tol.
inline EigenResult principal_eigen(const Pcm& a, EigenOptions opt = {}) {
  if (!(opt.tol > 0.0) || opt.max_iter < 1) throw PcmError(ErrorCode::InvalidArgument, "tol must be > 0 and max_iter >= 1");
  const std::size_t n = a.order();
  const std::vector<double> m = a.dense();
  std::vector<double> v(n, 1.0 / static_cast<double>(n)), av(n);

  auto rayleigh = [&](const std::vector<double>& x, const std::vector<double>& ax) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      num += x[i] * ax[i];
      den += x[i] * x[i];
    }
    return num / den;
  };
  auto scaled_residual = [&](const std::vector<double>& x, const std::vector<double>& ax, double lambda) {
    double r = 0.0, vmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      r = std::max(r, std::abs(ax[i] - lambda * x[i]));
      vmax = std::max(vmax, std::abs(x[i]));
    }
    return r / (lambda * vmax);
  };

  // Width of the Collatz-Wielandt bracket min_i (Av)_i/v_i <= lambda <= max_i (Av)_i/v_i.
  auto bracket = [&](double& lo) {
    lo = av[0] / v[0];
    double hi = lo;
    for (std::size_t i = 1; i < n; ++i) {
      lo = std::min(lo, av[i] / v[i]);
      hi = std::max(hi, av[i] / v[i]);
    }
    return hi - lo;
  };

  detail::matvec(m, n, v, av);
  double lambda = rayleigh(v, av);
  double residual = scaled_residual(v, av, lambda);
  bool settled = false;
  double best_width = INFINITY;
  int stalls = 0;
  for (int it = 1; it <= opt.max_iter; ++it) {
    double shift = 0.0;
    bracket(shift);
    shift = std::max(shift, 0.0);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = av[i] + shift * v[i];
      sum += v[i];
    }
    for (double& x : v) x /= sum;
    detail::matvec(m, n, v, av);
    const double next = rayleigh(v, av);
    residual = scaled_residual(v, av, next);
    if (!settled) settled = std::abs(next - lambda) <= opt.tol * std::max(1.0, next) && residual <= 10.0 * opt.tol;
    lambda = next;
    // Past the stopping test, keep iterating until the bracket stops
    // shrinking, so that results sit at rounding level rather than at tol.
    // Otherwise equal inputs presented differently (permuted, transposed)
    // can disagree by about tol.
    if (settled) {
      double lo = 0.0;
      const double width = bracket(lo);
      if (width < 0.99 * best_width) {
        best_width = width;
        stalls = 0;
      } else if (++stalls >= 3) {
        return EigenResult{lambda, WeightVector::normalized(v), it, residual};
      }
    }
  }
  throw PcmError(ErrorCode::NoConvergence, "power iteration did not converge in " + std::to_string(opt.max_iter) +
                                               " iterations (last residual " + std::to_string(residual) + ")");
}

/// w_i proportional to (prod_j a_ij)^(1/n), computed in log space.
inline WeightVector geometric_mean_weights(const Pcm& a) {
  const std::size_t n = a.order();
  std::vector<double> logs(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double l = std::log(a.at(i, j));
      logs[i] += l;
      logs[j] -= l;
    }
  const double top = *std::max_element(logs.begin(), logs.end());
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = std::exp((logs[i] - top) / static_cast<double>(n));
  return WeightVector::normalized(std::move(w));
}

/// Rank by Gaussian elimination with complete pivoting; pivots at or below
/// tol * max|a_ij| count as zero.
inline std::size_t numerical_rank(const Pcm& a, double tol) {
  const std::size_t n = a.order();
  std::vector<double> m = a.dense();
  const double scale = *std::max_element(m.begin(), m.end());
  const double threshold = tol * scale;
  std::size_t rank = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pr = step, pc = step;
    double best = 0.0;
    for (std::size_t i = step; i < n; ++i)
      for (std::size_t j = step; j < n; ++j)
        if (std::abs(m[i * n + j]) > best) {
          best = std::abs(m[i * n + j]);
          pr = i;
          pc = j;
        }
    if (best <= threshold) break;
    ++rank;
    for (std::size_t j = 0; j < n; ++j) std::swap(m[step * n + j], m[pr * n + j]);
    for (std::size_t i = 0; i < n; ++i) std::swap(m[i * n + step], m[i * n + pc]);
    for (std::size_t i = step + 1; i < n; ++i) {
      const double f = m[i * n + step] / m[step * n + step];
      for (std::size_t j = step; j < n; ++j) m[i * n + j] -= f * m[step * n + j];
    }
  }
  return rank;
}

struct EquivalenceReport {
  bool consistent;
  bool lambda_is_n;
  bool rank_is_one;
  bool ratio_representable;
  double lambda_deviation;
  double max_ratio_deviation;

  /// The four characterisations are equivalent, so they must agree.
  bool coherent() const {
    return consistent == lambda_is_n && lambda_is_n == rank_is_one && rank_is_one == ratio_representable;
  }
  bool all_true() const { return consistent && lambda_is_n && rank_is_one && ratio_representable; }
};

/// Evaluates each characterisation of consistency with its own routine.
inline EquivalenceReport verify_equivalences(const Pcm& a, double tol, EigenOptions eig = {}) {
  EquivalenceReport r{};
  const double n = static_cast<double>(a.order());
  r.consistent = is_consistent(a, tol);
  r.lambda_deviation = std::abs(principal_eigen(a, eig).lambda_max - n);
  r.lambda_is_n = r.lambda_deviation <= tol;
  r.rank_is_one = numerical_rank(a, tol) == 1;
  const WeightVector w = geometric_mean_weights(a);
  double dev = 0.0;
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j) dev = std::max(dev, std::abs(a.at(i, j) * w[j] / w[i] - 1.0));
  r.max_ratio_deviation = dev;
  r.ratio_representable = dev <= tol;
  return r;
}

}  // namespace pcmtk
