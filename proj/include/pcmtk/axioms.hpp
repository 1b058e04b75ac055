#pragma once

// Randomised falsification of inconsistency-index axioms.
//
// A checker either finds a counterexample (Falsified, with a witness that can
// be replayed) or reports how many trials it ran without finding one
// (NotFalsified). Nothing here proves that an axiom holds.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcmtk/indices.hpp"
#include "pcmtk/pcm.hpp"
#include "pcmtk/random.hpp"
#include "pcmtk/verdict.hpp"

namespace pcmtk {

struct AxiomInfo {
  std::string_view id;
  std::string_view system;
  std::string_view label;
  std::string_view statement;
};

/// The twenty axioms of the default compliance grid, in report order.
inline const std::vector<AxiomInfo>& default_axioms() {
  static const std::vector<AxiomInfo> axioms{
      {"bf_a1", "BF", "A1", "A is consistent iff f(A) = omega"},
      {"bf_a2", "BF", "A2", "f(P^T A P) = f(A)"},
      {"bf_a3", "BF", "A3", "f(A^k) >= f(A) for k > 1"},
      {"bf_a4", "BF", "A4", "moving one entry of a consistent matrix away from its value never decreases f"},
      {"bf_a5", "BF", "A5", "f is continuous in the upper-triangle entries"},
      {"bf6_transpose", "BF", "A6", "f(A^T) = f(A)"},
      {"mz_bounded", "MZ", "A6", "f is bounded from above"},
      {"ku_a1", "KU", "A1", "A is consistent iff f(A) = 0"},
      {"ku_a2", "KU", "A2", "f(A) in ]0,1] for inconsistent A"},
      {"ku_a3", "KU", "A3", "f grows with the deviation of a triad from b = ac"},
      {"ku_a4", "KU", "A4", "f(submatrix) <= f(A)"},
      {"ks_a1", "KS", "A1", "consistent triads map to 0"},
      {"ks_a2", "KS", "A2", "f takes values in [0,1["},
      {"ks_a3", "KS", "A3", "altering a consistent triad makes it inconsistent; f quasi-convex with minimum on b = ac"},
      {"cs_1", "CS", "I", "positive responsiveness: f(1,a,1) <= f(1,b,1) iff a <= b"},
      {"cs_2", "CS", "II", "invariance under inversion of preferences"},
      {"cs_3", "CS", "III", "homogeneous treatment of entities: f(1,a,b) = f(1,a/b,1)"},
      {"cs_4", "CS", "IV", "scale invariance: f(a,b,c) = f(ka,k^2 b,kc)"},
      {"cs_5", "CS", "V", "monotony: no triad is more inconsistent than the matrix"},
      {"cs_6", "CS", "VI", "reducibility: some triad is as inconsistent as the matrix"},
  };
  return axioms;
}

/// Axioms outside the default grid that can still be checked on request.
inline const std::vector<AxiomInfo>& extra_axioms() {
  static const std::vector<AxiomInfo> axioms{
      {"a7", "B7", "A7", "C(A) >= C(B) implies f(A) >= f(B), C = number of intransitive triples"},
  };
  return axioms;
}

inline std::optional<AxiomInfo> find_axiom(std::string_view id) {
  for (const auto& a : default_axioms())
    if (a.id == id) return a;
  for (const auto& a : extra_axioms())
    if (a.id == id) return a;
  return std::nullopt;
}

namespace detail {

inline double scaled(double tol, double x, double y) { return tol * std::max({1.0, std::abs(x), std::abs(y)}); }

inline std::string no_counterexample(std::size_t trials) {
  return "no counterexample in " + std::to_string(trials) + " trials";
}

inline Pcm log_uniform_pcm(std::size_t n, Rng& rng, double half_width) {
  std::vector<double> upper(upper_size(n));
  for (double& x : upper) x = std::exp(rng.uniform(-half_width, half_width));
  return Pcm(n, std::move(upper));
}

inline Pcm perturbed_consistent(std::size_t n, Rng& rng) {
  const Pcm base = random_consistent(n, rng);
  const double s = std::exp(rng.uniform(std::log(0.05), std::log(2.0)));
  std::vector<double> upper(base.upper().begin(), base.upper().end());
  for (double& x : upper) x *= std::exp(rng.uniform(-s, s));
  return Pcm(n, std::move(upper));
}

/// Inconsistent matrix whose worst triad deviates by at least `separation` in
/// log scale. Cycles through Saaty-scale draws, noisy consistent matrices and
/// wide log-uniform matrices (entries up to 1e3).
inline Pcm sample_inconsistent(std::size_t n, Rng& rng, double separation) {
  for (;;) {
    const std::size_t kind = rng.below(3);
    Pcm a = kind == 0 ? random_pcm(n, rng) : kind == 1 ? perturbed_consistent(n, rng) : log_uniform_pcm(n, rng, std::log(1e3));
    if (n < 3 || max_triad_log_deviation(a) >= separation) return a;
  }
}

/// Consistent a quarter of the time, otherwise as sample_inconsistent.
inline Pcm sample_any(std::size_t n, Rng& rng, double separation) {
  if (rng.below(4) == 0) return random_consistent(n, rng);
  return sample_inconsistent(n, rng, separation);
}

inline Triad random_triad(Rng& rng, double half_width) {
  return Triad{std::exp(rng.uniform(-half_width, half_width)), std::exp(rng.uniform(-half_width, half_width)),
               std::exp(rng.uniform(-half_width, half_width))};
}

inline Triad consistent_triad(Rng& rng) {
  const double w = std::log(9.0);
  const double a = std::exp(rng.uniform(-w, w)), c = std::exp(rng.uniform(-w, w));
  return Triad{a, a * c, c};
}

inline std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  rng.shuffle(p);
  return p;
}

inline Witness make_witness(std::string check, std::string relation, std::vector<NamedMatrix> ms,
                            std::vector<double> params, const IndexHandle& f) {
  std::vector<double> values;
  values.reserve(ms.size());
  for (const auto& m : ms) values.push_back(f(m.matrix));
  return Witness{std::move(check), std::move(relation), std::move(ms), std::move(values), std::move(params)};
}

inline double deviation(const Triad& t, DeviationMeasure m) {
  const double ac = t.t12 * t.t23;
  if (m == DeviationMeasure::Absolute) return std::abs(ac - t.t13);
  return std::max(ac / t.t13, t.t13 / ac);
}

inline Triad triad_of(const Pcm& a) { return Triad{a.at(0, 1), a.at(0, 2), a.at(1, 2)}; }

/// Growth along a corner ladder that indicates unboundedness: strictly
/// increasing, and either above 1e6 or with increments that do not shrink over
/// the upper half of the ladder.
inline bool unbounded_growth(const std::vector<double>& v) {
  if (v.size() < 4) return false;
  for (std::size_t k = 1; k < v.size(); ++k)
    if (!(v[k] > v[k - 1])) return false;
  if (v.back() > 1e6) return true;
  for (std::size_t k = v.size() / 2; k + 1 < v.size(); ++k) {
    const double prev = v[k] - v[k - 1], next = v[k + 1] - v[k];
    if (next < prev) return false;
  }
  return true;
}

}  // namespace detail

// ---- Koczkodaj-Szwarc -----------------------------------------------------

/// KS axioms on triads, each evaluated as the 3x3 matrix it spans.
/// Axiom 3 combines the alteration test with a quasi-convexity probe in log
/// coordinates (geometric midpoints of two triads).
inline AxiomVerdict check_ks(const IndexHandle& f, int axiom, const CheckConfig& cfg) {
  if (f.min_order > 3) return AxiomVerdict::inapplicable("index is not defined on 3x3 matrices");
  if (axiom < 1 || axiom > 3) throw PcmError(ErrorCode::InvalidArgument, "KS axiom id must be 1..3");
  Rng rng(derive_seed(cfg.seed, f.name, "ks_a" + std::to_string(axiom)));
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    if (axiom == 1) {
      const Pcm m = from_triad(detail::consistent_triad(rng));
      const double v = f(m);
      if (std::abs(v) > cfg.tol) {
        return AxiomVerdict::falsified(detail::make_witness("ks1.zero", "consistent triad maps to 0", {{"T", m}}, {cfg.tol}, f),
                                       t + 1);
      }
    } else if (axiom == 2) {
      const double width = t % 2 == 0 ? std::log(9.0) : std::log(1e3);
      const Pcm m = from_triad(detail::random_triad(rng, width));
      const double v = f(m);
      if (v < -cfg.tol || !(v < 1.0)) {
        return AxiomVerdict::falsified(detail::make_witness("range.ks2", "f(T) in [0,1[", {{"T", m}}, {cfg.tol}, f), t + 1);
      }
    } else if (t % 2 == 0) {
      const Triad base = detail::consistent_triad(rng);
      Triad altered = base;
      const double factor = std::exp((rng.coin() ? 1.0 : -1.0) * rng.uniform(cfg.separation, 2.0));
      switch (rng.below(3)) {
        case 0: altered.t12 *= factor; break;
        case 1: altered.t13 *= factor; break;
        default: altered.t23 *= factor; break;
      }
      const Pcm m0 = from_triad(base), m1 = from_triad(altered);
      if (!(f(m1) > cfg.tol)) {
        return AxiomVerdict::falsified(
            detail::make_witness("ks3.positive", "altered consistent triad has f > 0", {{"T", m0}, {"T'", m1}}, {cfg.tol}, f),
            t + 1);
      }
    } else {
      const Triad p = detail::random_triad(rng, std::log(9.0)), q = detail::random_triad(rng, std::log(9.0));
      const Triad mid{std::sqrt(p.t12 * q.t12), std::sqrt(p.t13 * q.t13), std::sqrt(p.t23 * q.t23)};
      const Pcm mp = from_triad(p), mq = from_triad(q), mm = from_triad(mid);
      const double fp = f(mp), fq = f(mq), fm = f(mm);
      if (fm > std::max(fp, fq) + detail::scaled(cfg.tol, fp, fq)) {
        return AxiomVerdict::falsified(detail::make_witness("qc.midpoint", "f(midpoint) <= max(f(P), f(Q))",
                                                            {{"P", mp}, {"Q", mq}, {"M", mm}}, {cfg.tol}, f),
                                       t + 1);
      }
    }
  }
  std::string note = detail::no_counterexample(cfg.trials);
  if (axiom == 2) note += "; whether the supremum 1 is attained is not testable";
  return AxiomVerdict::not_falsified(cfg.trials, note);
}

// ---- Brunelli-Fedrizzi ----------------------------------------------------

namespace detail {

/// Consistent => f = omega, and inconsistent => f != omega. omega is learned
/// from the first consistent sample unless pinned.
inline AxiomVerdict check_unique_consistent_value(const IndexHandle& f, const CheckConfig& cfg, std::string_view axiom_id,
                                                  std::optional<double> pinned) {
  Rng rng(derive_seed(cfg.seed, f.name, axiom_id));
  const double omega = pinned ? *pinned : f(random_consistent(cfg.orders.front(), rng));
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const std::size_t n = cfg.orders[t % cfg.orders.size()];
    if (t % 2 == 0) {
      const Pcm a = random_consistent(n, rng);
      if (std::abs(f(a) - omega) > cfg.tol) {
        return AxiomVerdict::falsified(
            make_witness("abs.gt", "consistent A has f(A) = omega", {{"A", a}}, {omega, cfg.tol}, f), t + 1);
      }
    } else {
      const Pcm a = sample_inconsistent(n, rng, cfg.separation);
      if (std::abs(f(a) - omega) <= cfg.tol) {
        return AxiomVerdict::falsified(make_witness("abs.leq", "inconsistent A has f(A) != omega", {{"A", a}},
                                                    {omega, cfg.tol, cfg.separation}, f),
                                       t + 1);
      }
    }
  }
  std::string note = no_counterexample(cfg.trials) + "; omega = " + std::to_string(omega);
  if (!pinned && std::abs(omega) > cfg.tol) note += " (flag: omega differs from 0)";
  return AxiomVerdict::not_falsified(cfg.trials, note);
}

inline AxiomVerdict check_metamorphic(const IndexHandle& f, const CheckConfig& cfg, std::string_view axiom_id,
                                      bool use_permutation) {
  Rng rng(derive_seed(cfg.seed, f.name, axiom_id));
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const std::size_t n = cfg.orders[t % cfg.orders.size()];
    const Pcm a = sample_any(n, rng, cfg.separation);
    Pcm b = a;
    std::string role;
    if (use_permutation) {
      std::vector<std::size_t> sigma(n);
      for (std::size_t i = 0; i < n; ++i) sigma[i] = i;
      if (t > 0) sigma = random_permutation(n, rng);  // trial 0 uses the identity
      b = permute(a, sigma);
      role = "PtAP";
    } else {
      b = transpose(a);
      role = "At";
    }
    const double fa = f(a), fb = f(b);
    if (!approx_equal(fa, fb, cfg.equality_rel)) {
      return AxiomVerdict::falsified(make_witness("metamorphic.equal", use_permutation ? "f(P^T A P) = f(A)" : "f(A^T) = f(A)",
                                                  {{"A", a}, {role, b}}, {cfg.equality_rel}, f),
                                     t + 1);
    }
  }
  return AxiomVerdict::not_falsified(cfg.trials, no_counterexample(cfg.trials));
}

}  // namespace detail

/// Numerical probe of continuity. Never falsifies: the verdict is Heuristic
/// and the note says whether any probed point showed differences that fail to
/// shrink as the perturbation goes from 1e-2 to 1e-8.
inline AxiomVerdict check_continuity(const IndexHandle& f, const CheckConfig& cfg) {
  Rng rng(derive_seed(cfg.seed, f.name, "bf_a5"));
  const std::size_t per_order = std::max<std::size_t>(1, std::min<std::size_t>(cfg.trials / 1000, 10));
  std::size_t points = 0;
  std::optional<Witness> evidence;
  std::string where;
  for (std::size_t n : cfg.orders) {
    if (n < f.min_order) continue;
    std::vector<std::pair<std::string, Pcm>> probes{{"ones", ones(n)}};
    for (std::size_t p = 0; p < per_order; ++p) {
      probes.emplace_back("consistent", random_consistent(n, rng));
      probes.emplace_back("inconsistent", detail::sample_inconsistent(n, rng, cfg.separation));
    }
    for (const auto& [label, a] : probes) {
      ++points;
      std::vector<double> dir(upper_size(n));
      for (double& x : dir) x = rng.uniform(-1.0, 1.0);
      const double fa = f(a);
      std::vector<double> diffs;
      Pcm last = a;
      for (int e = 2; e <= 8; ++e) {
        const double eps = std::pow(10.0, -e);
        std::vector<double> upper(a.upper().begin(), a.upper().end());
        for (std::size_t k = 0; k < upper.size(); ++k) upper[k] *= std::exp(eps * dir[k]);
        last = Pcm(n, std::move(upper));
        diffs.push_back(std::abs(f(last) - fa));
      }
      const bool shrinks = diffs.back() <= 1e-4 * diffs.front() + cfg.tol;
      if (!shrinks && !evidence) {
        evidence = detail::make_witness("heuristic.discontinuity", "|f(A_eps) - f(A)| -> 0 as eps -> 0",
                                        {{"A", a}, {"A_eps", last}}, {1e-8, diffs.front(), diffs.back()}, f);
        where = label + " n=" + std::to_string(n);
      }
    }
  }
  AxiomVerdict v{VerdictKind::Heuristic, evidence, points, {}};
  v.note = evidence ? "discontinuity evidence near " + where + ": difference at eps=1e-8 is " +
                          std::to_string(evidence->params[2]) + " (at eps=1e-2: " + std::to_string(evidence->params[1]) + ")"
                    : "no discontinuity evidence at " + std::to_string(points) + " probed points";
  return v;
}

inline AxiomVerdict check_bf(const IndexHandle& f, int axiom, const CheckConfig& cfg) {
  for (std::size_t n : cfg.orders)
    if (n < f.min_order) return AxiomVerdict::inapplicable("order " + std::to_string(n) + " below the index's minimum order");
  switch (axiom) {
    case 1: return detail::check_unique_consistent_value(f, cfg, "bf_a1", std::nullopt);
    case 2: return detail::check_metamorphic(f, cfg, "bf_a2", true);
    case 3: {
      Rng rng(derive_seed(cfg.seed, f.name, "bf_a3"));
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        const std::size_t n = cfg.orders[t % cfg.orders.size()];
        const Pcm a = detail::sample_any(n, rng, cfg.separation);
        const double k = t == 0 ? 1.0 : 4.0 - 3.0 * rng.uniform01();  // (1, 4]; trial 0 is the fixed point k = 1
        const Pcm b = intensify(a, k);
        const double fa = f(a), fb = f(b);
        if (fb < fa - detail::scaled(cfg.tol, fa, fb)) {
          return AxiomVerdict::falsified(
              detail::make_witness("order.geq", "f(A^k) >= f(A)", {{"A", a}, {"A^k", b}}, {cfg.tol, k}, f), t + 1);
        }
      }
      return AxiomVerdict::not_falsified(cfg.trials, detail::no_counterexample(cfg.trials));
    }
    case 4: {
      Rng rng(derive_seed(cfg.seed, f.name, "bf_a4"));
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        const std::size_t n = cfg.orders[t % cfg.orders.size()];
        const Pcm a = random_consistent(n, rng);
        const std::size_t i = rng.below(n);
        std::size_t j = rng.below(n - 1);
        if (j >= i) ++j;
        const auto [p, q] = std::minmax(i, j);
        const double side = rng.coin() ? 1.0 : -1.0;
        std::vector<double> steps(4);
        for (double& s : steps) s = rng.uniform(0.0, 3.0);
        std::sort(steps.begin(), steps.end());
        std::vector<NamedMatrix> chain{{"A", a}};
        for (std::size_t s = 0; s < steps.size(); ++s)
          chain.push_back({"A" + std::to_string(s + 1), perturb_entry(a, p, q, a.at(p, q) * std::exp(side * steps[s]))});
        std::vector<double> values;
        for (const auto& m : chain) values.push_back(f(m.matrix));
        for (std::size_t s = 0; s + 1 < values.size(); ++s) {
          if (values[s + 1] < values[s] - detail::scaled(cfg.tol, values[s], values[s + 1])) {
            return AxiomVerdict::falsified(
                Witness{"chain.nondecreasing", "f nondecreasing as a_ij moves away from its consistent value", chain,
                        values, {cfg.tol, static_cast<double>(p), static_cast<double>(q)}},
                t + 1);
          }
        }
      }
      return AxiomVerdict::not_falsified(cfg.trials, detail::no_counterexample(cfg.trials));
    }
    case 5: return check_continuity(f, cfg);
    case 6: return detail::check_metamorphic(f, cfg, "bf6_transpose", false);
    default: throw PcmError(ErrorCode::InvalidArgument, "BF axiom id must be 1..6");
  }
}

// ---- boundedness ----------------------------------------------------------

/// Evaluates the index on corner matrices with a_1n = 10^1 .. 10^12.
inline AxiomVerdict check_bounded_above(const IndexHandle& f, const CheckConfig& cfg) {
  std::size_t evals = 0;
  double top = 0.0;
  for (std::size_t n : cfg.orders) {
    if (n < 3 || n < f.min_order) continue;
    std::vector<NamedMatrix> ladder;
    std::vector<double> values;
    for (int e = 1; e <= 12; ++e) {
      ladder.push_back({"x=1e" + std::to_string(e), corner_matrix(n, std::pow(10.0, e))});
      values.push_back(f(ladder.back().matrix));
      ++evals;
    }
    top = std::max(top, values.back());
    if (detail::unbounded_growth(values)) {
      return AxiomVerdict::falsified(Witness{"bounded.ladder", "f bounded along the corner ladder", ladder, values,
                                             {static_cast<double>(n)}},
                                     evals, "unbounded growth on order-" + std::to_string(n) + " corner matrices, reaching " +
                                                std::to_string(values.back()));
    }
    if (f.claimed_range.bounded_above()) {
      for (std::size_t k = 0; k < values.size(); ++k)
        if (!f.claimed_range.contains(values[k])) {
          return AxiomVerdict::falsified(Witness{"bounded.claimed", "f stays inside its claimed range", {ladder[k]},
                                                 {values[k]},
                                                 {f.claimed_range.hi, f.claimed_range.hi_inclusive ? 1.0 : 0.0}},
                                         evals);
        }
    }
  }
  std::string note = detail::no_counterexample(evals) + "; ladder maximum " + std::to_string(top);
  if (f.claimed_range.bounded_above()) note += ", below the claimed upper limit " + std::to_string(f.claimed_range.hi);
  return AxiomVerdict::not_falsified(evals, note);
}

// ---- Brunelli axiom 7 -----------------------------------------------------

/// Searches pairs (A, B) of equal order with C(A) >= C(B) but f(A) < f(B).
/// Half of the pairs put a mildly intransitive matrix against a transitive but
/// strongly inconsistent one.
inline AxiomVerdict check_axiom7(const IndexHandle& f, const CheckConfig& cfg) {
  Rng rng(derive_seed(cfg.seed, f.name, "a7"));
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const std::size_t n = cfg.orders[t % cfg.orders.size()];
    Pcm a = detail::sample_any(n, rng, cfg.separation);
    Pcm b = detail::sample_any(n, rng, cfg.separation);
    if (t % 2 == 0) {
      a = detail::log_uniform_pcm(n, rng, 0.3);
      do {
        b = detail::perturbed_consistent(n, rng);
      } while (count_intransitive(b) != 0);
    }
    const double ca = static_cast<double>(count_intransitive(a)), cb = static_cast<double>(count_intransitive(b));
    if (ca < cb) {
      std::swap(a, b);
    }
    const double fa = f(a), fb = f(b);
    if (fa < fb - detail::scaled(cfg.tol, fa, fb)) {
      return AxiomVerdict::falsified(detail::make_witness("a7.pair", "C(A) >= C(B) implies f(A) >= f(B)",
                                                          {{"A", a}, {"B", b}}, {cfg.tol}, f),
                                     t + 1);
    }
  }
  return AxiomVerdict::not_falsified(cfg.trials, detail::no_counterexample(cfg.trials));
}

// ---- Koczkodaj-Urban ------------------------------------------------------

inline AxiomVerdict check_ku(const IndexHandle& f, int axiom, const CheckConfig& cfg) {
  switch (axiom) {
    case 1: return detail::check_unique_consistent_value(f, cfg, "ku_a1", 0.0);
    case 2: {
      Rng rng(derive_seed(cfg.seed, f.name, "ku_a2"));
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        const std::size_t n = cfg.orders[t % cfg.orders.size()];
        if (n < f.min_order) continue;
        const Pcm a = detail::sample_inconsistent(n, rng, cfg.separation);
        const double v = f(a);
        if (v <= cfg.tol || v > 1.0 + cfg.tol) {
          return AxiomVerdict::falsified(detail::make_witness("range.ku2", "f(A) in ]0,1] for inconsistent A", {{"A", a}},
                                                              {cfg.tol}, f),
                                         t + 1);
        }
      }
      return AxiomVerdict::not_falsified(cfg.trials, detail::no_counterexample(cfg.trials));
    }
    case 3: {
      if (f.min_order > 3) return AxiomVerdict::inapplicable("index is not defined on triads");
      Rng rng(derive_seed(cfg.seed, f.name, "ku_a3"));
      const double measure = cfg.ku_a3_measure == DeviationMeasure::Ratio ? 0.0 : 1.0;
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        auto draw = [&] {
          const double w = std::log(9.0);
          const double a = std::exp(rng.uniform(-w, w)), c = std::exp(rng.uniform(-w, w));
          return Triad{a, a * c * std::exp(rng.uniform(-2.0, 2.0)), c};
        };
        Triad t1 = draw(), t2 = draw();
        if (detail::deviation(t1, cfg.ku_a3_measure) > detail::deviation(t2, cfg.ku_a3_measure)) std::swap(t1, t2);
        const Pcm m1 = from_triad(t1), m2 = from_triad(t2);
        const double f1 = f(m1), f2 = f(m2);
        if (f1 > f2 + detail::scaled(cfg.tol, f1, f2)) {
          return AxiomVerdict::falsified(detail::make_witness("ku3.pair", "deviation(T1) <= deviation(T2) implies f(T1) <= f(T2)",
                                                              {{"T1", m1}, {"T2", m2}}, {cfg.tol, measure}, f),
                                         t + 1);
        }
      }
      std::string note = detail::no_counterexample(cfg.trials);
      note += measure == 0.0 ? "; deviation max(ac/b, b/ac)" : "; deviation |ac - b|";
      return AxiomVerdict::not_falsified(cfg.trials, note);
    }
    case 4: {
      Rng rng(derive_seed(cfg.seed, f.name, "ku_a4"));
      const std::size_t smallest = std::max<std::size_t>(2, f.min_order);
      std::size_t ran = 0;
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        const std::size_t n = cfg.orders[t % cfg.orders.size()];
        if (n <= smallest) continue;
        ++ran;
        const Pcm a = detail::sample_any(n, rng, cfg.separation);
        const std::size_t m = smallest + rng.below(n - smallest);
        auto perm = detail::random_permutation(n, rng);
        std::vector<std::size_t> subset(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(m));
        std::sort(subset.begin(), subset.end());
        const Pcm s = submatrix(a, subset);
        const double fa = f(a), fs = f(s);
        if (fs > fa + detail::scaled(cfg.tol, fa, fs)) {
          return AxiomVerdict::falsified(detail::make_witness("order.sub_leq", "f(submatrix) <= f(A)",
                                                              {{"A", a}, {"sub", s}}, {cfg.tol}, f),
                                         ran);
        }
      }
      return AxiomVerdict::not_falsified(ran, detail::no_counterexample(ran));
    }
    default: throw PcmError(ErrorCode::InvalidArgument, "KU axiom id must be 1..4");
  }
}

// ---- Csato ----------------------------------------------------------------

inline AxiomVerdict check_cs(const IndexHandle& f, int property, const CheckConfig& cfg) {
  if (property < 1 || property > 6) throw PcmError(ErrorCode::InvalidArgument, "CS property id must be 1..6");
  if (f.min_order > 3) return AxiomVerdict::inapplicable("index is not defined on triads");
  Rng rng(derive_seed(cfg.seed, f.name, "cs_" + std::to_string(property)));
  const double w9 = std::log(9.0);
  std::size_t ran = 0;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    switch (property) {
      case 1: {
        double a = std::exp(rng.uniform(1e-6, std::log(100.0))), b = std::exp(rng.uniform(1e-6, std::log(100.0)));
        if (std::abs(std::log(a) - std::log(b)) < 1e-6) continue;
        if (a > b) std::swap(a, b);
        ++ran;
        const Pcm ma = from_triad({1.0, a, 1.0}), mb = from_triad({1.0, b, 1.0});
        if (!(f(ma) < f(mb))) {
          return AxiomVerdict::falsified(detail::make_witness("cs1.strict", "a < b implies f(1,a,1) < f(1,b,1)",
                                                              {{"(1,a,1)", ma}, {"(1,b,1)", mb}}, {a, b}, f),
                                         ran);
        }
        break;
      }
      case 2:
      case 3:
      case 4: {
        ++ran;
        Pcm x = from_triad(detail::random_triad(rng, w9)), y = x;
        std::string relation;
        if (property == 2) {
          y = transpose(x);
          relation = "f(T) = f(T^T)";
        } else if (property == 3) {
          const double a = std::exp(rng.uniform(-w9, w9)), b = std::exp(rng.uniform(-w9, w9));
          x = from_triad({1.0, a, b});
          y = from_triad({1.0, a / b, 1.0});
          relation = "f(1,a,b) = f(1,a/b,1)";
        } else {
          const double k = std::exp(rng.uniform(-w9, w9));
          const Triad tx = detail::triad_of(x);
          y = from_triad({k * tx.t12, k * k * tx.t13, k * tx.t23});
          relation = "f(a,b,c) = f(ka,k^2 b,kc)";
        }
        if (!approx_equal(f(x), f(y), cfg.equality_rel)) {
          return AxiomVerdict::falsified(
              detail::make_witness("metamorphic.equal", relation, {{"X", x}, {"Y", y}}, {cfg.equality_rel}, f), ran);
        }
        break;
      }
      case 5:
      case 6: {
        const std::size_t n = cfg.orders[t % cfg.orders.size()];
        if (n < 3) continue;
        ++ran;
        const Pcm a = detail::sample_any(n, rng, cfg.separation);
        const double fa = f(a);
        std::vector<NamedMatrix> subs;
        for_each_triad(a, [&](std::size_t i, std::size_t j, std::size_t k, const Triad& tr) {
          subs.push_back({"T" + std::to_string(i + 1) + std::to_string(j + 1) + std::to_string(k + 1), from_triad(tr)});
        });
        if (property == 5) {
          for (const auto& s : subs) {
            const double fs = f(s.matrix);
            if (fs > fa + detail::scaled(cfg.tol, fa, fs)) {
              return AxiomVerdict::falsified(
                  detail::make_witness("order.sub_leq", "f(triad) <= f(A)", {{"A", a}, s}, {cfg.tol}, f), ran);
            }
          }
        } else {
          double best = INFINITY;
          for (const auto& s : subs) best = std::min(best, std::abs(fa - f(s.matrix)));
          if (best > detail::scaled(cfg.tol, fa, 0.0)) {
            std::vector<NamedMatrix> ms{{"A", a}};
            ms.insert(ms.end(), subs.begin(), subs.end());
            return AxiomVerdict::falsified(
                detail::make_witness("cs6.reducible", "some triad has f(triad) = f(A)", std::move(ms), {cfg.tol}, f), ran);
          }
        }
        break;
      }
    }
  }
  return AxiomVerdict::not_falsified(ran, detail::no_counterexample(ran));
}

// ---- triad-worsening search -----------------------------------------------

/// Random-restart coordinate hill climb in log-entry space for a single-entry
/// change that worsens some triad containing the entry (its KI value grows)
/// while the index decreases. Returns the first witness or nullopt once
/// `cfg.search_budget` index evaluations are spent.
inline std::optional<Witness> search_triad_worsening(const IndexHandle& f, std::size_t n, const CheckConfig& cfg) {
  if (n < 3) throw PcmError(ErrorCode::OrderTooSmall, "triad-worsening search needs n >= 3");
  Rng rng(derive_seed(cfg.seed, f.name, "triad_worsening_" + std::to_string(n)));
  std::size_t evals = 0;
  const double w9 = std::log(9.0);

  struct Move {
    std::size_t i, j, k;
    double log_step;
  };
  // KI of the triad spanned by {i, j, k}.
  auto local = [](const Pcm& a, std::size_t i, std::size_t j, std::size_t k) {
    std::size_t idx[3] = {i, j, k};
    std::sort(idx, idx + 3);
    return ki_triad(Triad{a.at(idx[0], idx[1]), a.at(idx[0], idx[2]), a.at(idx[1], idx[2])});
  };
  auto apply = [](const Pcm& a, const Move& m) { return perturb_entry(a, m.i, m.j, a.at(m.i, m.j) * std::exp(m.log_step)); };
  auto random_move = [&](const Pcm& a) -> std::optional<Move> {
    const std::size_t i = rng.below(n);
    std::size_t j = rng.below(n - 1);
    if (j >= i) ++j;
    std::size_t k;
    do {
      k = rng.below(n);
    } while (k == i || k == j);
    const auto [p, q] = std::minmax(i, j);
    const double step = std::exp(rng.uniform(std::log(0.01), std::log(1.0)));
    for (double dir : {1.0, -1.0}) {
      const Move m{p, q, k, dir * step};
      if (local(apply(a, m), p, q, k) > local(a, p, q, k)) return m;
    }
    return std::nullopt;
  };

  while (evals < cfg.search_budget) {
    Pcm a = rng.coin() ? random_pcm(n, rng) : detail::perturbed_consistent(n, rng);
    std::optional<Move> move = random_move(a);
    if (!move) continue;
    double fa = f(a), fb = f(apply(a, *move));
    evals += 2;
    for (int step = 0; step < 200 && evals < cfg.search_budget; ++step) {
      if (fb < fa - detail::scaled(cfg.tol, fa, fb)) {
        const Pcm b = apply(a, *move);
        return Witness{"worsening",
                       "worsening one triad through a_ij does not decrease f",
                       {{"A", a}, {"A'", b}},
                       {fa, fb},
                       {static_cast<double>(move->i), static_cast<double>(move->j), static_cast<double>(move->k),
                        local(a, move->i, move->j, move->k), local(b, move->i, move->j, move->k), cfg.tol}};
      }
      // Climb: nudge one other entry of A, keep it if the candidate move now
      // lowers f by more (or raises it by less).
      std::size_t p = rng.below(n), q = rng.below(n - 1);
      if (q >= p) ++q;
      if (p > q) std::swap(p, q);
      if (p == move->i && q == move->j) continue;
      const double current = std::log(a.at(p, q));
      const double proposal = std::clamp(current + rng.uniform(-0.5, 0.5), -2.0 * w9, 2.0 * w9);
      const Pcm a2 = perturb_entry(a, p, q, std::exp(proposal));
      const Pcm b2 = apply(a2, *move);
      if (!(local(b2, move->i, move->j, move->k) > local(a2, move->i, move->j, move->k))) continue;
      const double fa2 = f(a2), fb2 = f(b2);
      evals += 2;
      if (fa2 - fb2 > fa - fb) {
        a = a2;
        fa = fa2;
        fb = fb2;
      }
    }
  }
  return std::nullopt;
}

// ---- dispatch and replay --------------------------------------------------

/// Runs the checker for an axiom identifier (see default_axioms / extra_axioms).
inline AxiomVerdict run_check(const IndexHandle& f, std::string_view axiom_id, const CheckConfig& cfg) {
  if (cfg.trials < 1) throw PcmError(ErrorCode::InvalidArgument, "trials must be >= 1");
  if (cfg.orders.empty()) throw PcmError(ErrorCode::InvalidArgument, "orders must not be empty");
  for (std::size_t n : cfg.orders)
    if (n < 3) throw PcmError(ErrorCode::InvalidArgument, "checker orders must be >= 3");
  const std::string id(axiom_id);
  if (id.starts_with("bf_a") && id.size() == 5) return check_bf(f, id[4] - '0', cfg);
  if (id == "bf6_transpose") return check_bf(f, 6, cfg);
  if (id == "mz_bounded") return check_bounded_above(f, cfg);
  if (id.starts_with("ku_a") && id.size() == 5) return check_ku(f, id[4] - '0', cfg);
  if (id.starts_with("ks_a") && id.size() == 5) return check_ks(f, id[4] - '0', cfg);
  if (id.starts_with("cs_") && id.size() == 4) return check_cs(f, id[3] - '0', cfg);
  if (id == "a7") return check_axiom7(f, cfg);
  throw PcmError(ErrorCode::InvalidArgument, "unknown axiom '" + id + "'");
}

/// Re-evaluates a witness from scratch: every recorded index value must be
/// reproduced bit for bit and the recorded relation must still be violated.
inline bool replay(const Witness& w, const IndexHandle& f) {
  if (w.matrices.size() != w.values.size()) return false;
  std::vector<double> v;
  for (const auto& m : w.matrices) v.push_back(f(m.matrix));
  if (v != w.values) return false;
  const auto& p = w.params;
  const std::string& c = w.check;
  auto sc = [](double tol, double x, double y) { return detail::scaled(tol, x, y); };
  if (c == "abs.gt") return std::abs(v[0] - p[0]) > p[1];
  if (c == "abs.leq") return std::abs(v[0] - p[0]) <= p[1] && max_triad_log_deviation(w.matrices[0].matrix) >= p[2];
  if (c == "metamorphic.equal") return !approx_equal(v[0], v[1], p[0]);
  if (c == "order.geq") return v[1] < v[0] - sc(p[0], v[0], v[1]);
  if (c == "order.sub_leq") return v[1] > v[0] + sc(p[0], v[0], v[1]);
  if (c == "chain.nondecreasing") {
    for (std::size_t s = 0; s + 1 < v.size(); ++s)
      if (v[s + 1] < v[s] - sc(p[0], v[s], v[s + 1])) return true;
    return false;
  }
  if (c == "range.ku2") return v[0] <= p[0] || v[0] > 1.0 + p[0];
  if (c == "range.ks2") return v[0] < -p[0] || !(v[0] < 1.0);
  if (c == "ks1.zero") return std::abs(v[0]) > p[0] && is_consistent(w.matrices[0].matrix);
  if (c == "ks3.positive") return !(v[1] > p[0]);
  if (c == "qc.midpoint") return v[2] > std::max(v[0], v[1]) + sc(p[0], v[0], v[1]);
  if (c == "ku3.pair") {
    const auto m = p[1] == 0.0 ? DeviationMeasure::Ratio : DeviationMeasure::Absolute;
    return detail::deviation(detail::triad_of(w.matrices[0].matrix), m) <=
               detail::deviation(detail::triad_of(w.matrices[1].matrix), m) &&
           v[0] > v[1] + sc(p[0], v[0], v[1]);
  }
  if (c == "cs1.strict") return !(v[0] < v[1]);
  if (c == "cs6.reducible") {
    double best = INFINITY;
    for (std::size_t q = 1; q < v.size(); ++q) best = std::min(best, std::abs(v[0] - v[q]));
    return best > sc(p[0], v[0], 0.0);
  }
  if (c == "bounded.ladder") return detail::unbounded_growth(v);
  if (c == "bounded.claimed") return p[1] != 0.0 ? v[0] > p[0] : !(v[0] < p[0]);
  if (c == "a7.pair") {
    return count_intransitive(w.matrices[0].matrix) >= count_intransitive(w.matrices[1].matrix) &&
           v[0] < v[1] - sc(p[0], v[0], v[1]);
  }
  if (c == "worsening") {
    const auto i = static_cast<std::size_t>(p[0]), j = static_cast<std::size_t>(p[1]), k = static_cast<std::size_t>(p[2]);
    std::size_t idx[3] = {i, j, k};
    std::sort(idx, idx + 3);
    auto local = [&](const Pcm& a) { return ki_triad(Triad{a.at(idx[0], idx[1]), a.at(idx[0], idx[2]), a.at(idx[1], idx[2])}); };
    const double before = local(w.matrices[0].matrix), after = local(w.matrices[1].matrix);
    return before == p[3] && after == p[4] && after > before && v[1] < v[0] - sc(p[5], v[0], v[1]);
  }
  if (c == "heuristic.discontinuity") return true;
  return false;
}

}  // namespace pcmtk
