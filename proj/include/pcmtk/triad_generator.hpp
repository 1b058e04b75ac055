#pragma once

// Local-inconsistency function + aggregation pair from which triad-based
// indices are assembled, and the sampled checks a pair must pass.

#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pcmtk/random.hpp"
#include "pcmtk/verdict.hpp"

namespace pcmtk {

struct TriadGenerator {
  /// Local inconsistency of eta = a_ij a_jk a_ki.
  std::function<double(double)> local;
  /// Symmetric, nondecreasing aggregation of the C(n,3) local values.
  std::function<double(std::span<const double>)> aggregate;
};

namespace aggregators {

inline double max(std::span<const double> v) {
  double m = -INFINITY;
  for (double x : v) m = std::max(m, x);
  return m;
}

inline double mean(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace aggregators

namespace detail {

inline Witness generator_witness(std::string check, std::string relation, std::vector<double> params,
                                 std::vector<double> values) {
  return Witness{std::move(check), std::move(relation), {}, std::move(values), std::move(params)};
}

/// x values spread log-uniformly over [1e-4, 1e4], plus 1.
inline std::vector<double> generator_grid() {
  std::vector<double> grid;
  for (int e = -400; e <= 400; e += 5) grid.push_back(std::pow(10.0, e / 100.0));
  return grid;
}

}  // namespace detail

/// Sampled verification of: F(x) = F(1/x); F minimal at 1; F quasi-convex on
/// (0, inf); aggregation symmetric under permutation and nondecreasing in
/// every component. Any violation yields a Falsified verdict whose params
/// hold the offending points.
inline AxiomVerdict check_generator_properties(const TriadGenerator& gen, const CheckConfig& cfg) {
  const double tol = cfg.tol;
  const auto grid = detail::generator_grid();
  const double f1 = gen.local(1.0);
  std::size_t trials = 0;
  if (!std::isfinite(f1)) {
    return AxiomVerdict::falsified(detail::generator_witness("gen.finite", "F(x) is finite", {1.0}, {f1}), 1);
  }

  for (double x : grid) {
    ++trials;
    const double fx = gen.local(x), fi = gen.local(1.0 / x);
    if (!std::isfinite(fx)) {
      return AxiomVerdict::falsified(detail::generator_witness("gen.finite", "F(x) is finite", {x}, {fx}), trials);
    }
    if (std::abs(fx - fi) > tol * std::max(1.0, std::abs(fx))) {
      return AxiomVerdict::falsified(detail::generator_witness("gen.symmetry", "F(x) = F(1/x)", {x}, {fx, fi}), trials);
    }
    if (fx < f1 - tol) {
      return AxiomVerdict::falsified(detail::generator_witness("gen.minimum", "F(1) <= F(x)", {x}, {f1, fx}), trials);
    }
  }
  for (std::size_t p = 0; p < grid.size(); ++p)
    for (std::size_t q = p + 2; q < grid.size(); q += 3) {
      ++trials;
      const double x = grid[p], y = grid[q], mid = 0.5 * (x + y);
      const double fx = gen.local(x), fy = gen.local(y), fm = gen.local(mid);
      if (fm > std::max(fx, fy) + tol) {
        return AxiomVerdict::falsified(
            detail::generator_witness("gen.quasiconvex", "F((x+y)/2) <= max(F(x), F(y))", {x, y}, {fx, fy, fm}),
            trials);
      }
    }

  Rng rng(derive_seed(cfg.seed, "generator"));
  const std::size_t agg_trials = std::min<std::size_t>(cfg.trials, 2'000);
  for (std::size_t t = 0; t < agg_trials; ++t) {
    ++trials;
    const std::size_t n = cfg.orders.empty() ? 4 : cfg.orders[t % cfg.orders.size()];
    const std::size_t m = std::max<std::size_t>(n * (n - 1) * (n - 2) / 6, 2);
    std::vector<double> v(m);
    for (double& x : v) x = gen.local(std::exp(rng.uniform(-3.0, 3.0)));
    const double base = gen.aggregate(v);
    std::vector<double> perm = v;
    rng.shuffle(perm);
    if (perm == v) std::swap(perm.front(), perm.back());
    const double permuted = gen.aggregate(perm);
    if (std::abs(base - permuted) > tol * std::max(1.0, std::abs(base))) {
      std::vector<double> params = v;
      params.insert(params.end(), perm.begin(), perm.end());
      return AxiomVerdict::falsified(
          detail::generator_witness("gen.agg_symmetry", "aggregate(v) = aggregate(permuted v)", params, {base, permuted}),
          trials);
    }
    std::vector<double> raised = v;
    const std::size_t c = rng.below(m);
    raised[c] += rng.uniform(0.0, 1.0) + 1e-3;
    const double up = gen.aggregate(raised);
    if (up < base - tol * std::max(1.0, std::abs(base))) {
      std::vector<double> params = v;
      params.insert(params.end(), raised.begin(), raised.end());
      return AxiomVerdict::falsified(
          detail::generator_witness("gen.agg_monotone", "aggregate nondecreasing in each component", params, {base, up}),
          trials);
    }
  }
  return AxiomVerdict::not_falsified(trials, "no counterexample in " + std::to_string(trials) + " trials");
}

/// Re-evaluates a generator witness; true iff the recorded violation reproduces.
inline bool replay_generator_witness(const Witness& w, const TriadGenerator& gen, double tol) {
  const auto& p = w.params;
  if (w.check == "gen.finite") return !std::isfinite(gen.local(p[0]));
  if (w.check == "gen.symmetry") {
    const double fx = gen.local(p[0]), fi = gen.local(1.0 / p[0]);
    return fx == w.values[0] && fi == w.values[1] && std::abs(fx - fi) > tol * std::max(1.0, std::abs(fx));
  }
  if (w.check == "gen.minimum") return gen.local(p[0]) < gen.local(1.0) - tol;
  if (w.check == "gen.quasiconvex") {
    const double fm = gen.local(0.5 * (p[0] + p[1]));
    return fm > std::max(gen.local(p[0]), gen.local(p[1])) + tol;
  }
  const std::size_t half = p.size() / 2;
  std::span<const double> a(p.data(), half), b(p.data() + half, half);
  const double fa = gen.aggregate(a), fb = gen.aggregate(b);
  if (w.check == "gen.agg_symmetry") return std::abs(fa - fb) > tol * std::max(1.0, std::abs(fa));
  if (w.check == "gen.agg_monotone") return fb < fa - tol * std::max(1.0, std::abs(fa));
  return false;
}

}  // namespace pcmtk
