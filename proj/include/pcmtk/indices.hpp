#pragma once

// Inconsistency indices and the index registry.

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pcmtk/eigen.hpp"
#include "pcmtk/pcm.hpp"
#include "pcmtk/random.hpp"
#include "pcmtk/triad_generator.hpp"

namespace pcmtk {

// ---- Saaty ----------------------------------------------------------------

/// (lambda_max - n) / (n - 1)
inline double ci_saaty(const Pcm& a, EigenOptions opt = {}) {
  const double n = static_cast<double>(a.order());
  return (principal_eigen(a, opt).lambda_max - n) / (n - 1.0);
}

/// Mean CI over `samples` random Saaty-scale matrices of order n.
inline double random_index(std::size_t n, std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw PcmError(ErrorCode::InvalidArgument, "samples must be >= 1");
  Rng rng(seed);
  double sum = 0.0;
  for (std::size_t s = 0; s < samples; ++s) sum += ci_saaty(random_pcm(n, rng));
  return sum / static_cast<double>(samples);
}

using RiTable = std::map<std::size_t, double>;

/// RI for n = 3..12, Monte Carlo means over 10^6 draws each
/// (`pcmtk ri --n 3..12 --samples 1000000 --seed 42`).
inline const RiTable& default_ri_table() {
  static const RiTable table{
      {3, 0.52356714141127747},  {4, 0.88359246883648546},  {5, 1.1082738758306092},
      {6, 1.2488172209571629},   {7, 1.3410197616376098},   {8, 1.4044926014599317},
      {9, 1.4507348126319783},   {10, 1.4860582205430541},  {11, 1.5137352967341757},
      {12, 1.5364354454521914},
  };
  return table;
}

/// CI / RI(n). Orders below 3 are always consistent and map to 0.
inline double cr_saaty(const Pcm& a, const RiTable& ri) {
  if (a.order() < 3) return 0.0;
  const auto it = ri.find(a.order());
  if (it == ri.end()) throw PcmError(ErrorCode::MissingRiEntry, "no RI entry for n = " + std::to_string(a.order()));
  return ci_saaty(a) / it->second;
}

// ---- Koczkodaj ------------------------------------------------------------

/// min(|1 - b/(ac)|, |1 - ac/b|) for the triad (a, b, c) = (t12, t13, t23).
inline double ki_triad(const Triad& t) {
  const double ac = t.t12 * t.t23;
  return std::min(std::abs(1.0 - t.t13 / ac), std::abs(1.0 - ac / t.t13));
}

/// Maximum local triad inconsistency; 0 for n = 2.
inline double ki_koczkodaj(const Pcm& a) {
  double m = 0.0;
  for_each_triad(a, [&](std::size_t, std::size_t, std::size_t, const Triad& t) { m = std::max(m, ki_triad(t)); });
  return m;
}

// ---- weight-based indices -------------------------------------------------

/// Geometric consistency index: 2 / ((n-1)(n-2)) * sum_{i<j} ln^2(a_ij w_j / w_i).
/// Its normaliser vanishes at n = 2, where every matrix is consistent; returns 0 there.
inline double gci(const Pcm& a) {
  const std::size_t n = a.order();
  if (n < 3) return 0.0;
  const WeightVector w = geometric_mean_weights(a);
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double e = std::log(a.at(i, j) * w[j] / w[i]);
      s += e * e;
    }
  const double nd = static_cast<double>(n);
  return 2.0 * s / ((nd - 1.0) * (nd - 2.0));
}

/// Mean over triads of eta + 1/eta - 2, eta = a_ik / (a_ij a_jk). 0 for n = 2.
inline double ci_star(const Pcm& a) {
  if (a.order() < 3) return 0.0;
  double s = 0.0;
  std::size_t count = 0;
  for_each_triad(a, [&](std::size_t, std::size_t, std::size_t, const Triad& t) {
    const double eta = t.t13 / (t.t12 * t.t23);
    s += eta + 1.0 / eta - 2.0;
    ++count;
  });
  return s / static_cast<double>(count);
}

/// Harmonic consistency index from the column sums s_j:
/// HM = n / sum_j 1/s_j, HCI = (HM - n)(n + 1) / (n (n - 1)).
inline double hci(const Pcm& a) {
  const std::size_t n = a.order();
  double inv = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a.at(i, j);
    inv += 1.0 / s;
  }
  const double nd = static_cast<double>(n);
  const double hm = nd / inv;
  return (hm - nd) * (nd + 1.0) / (nd * (nd - 1.0));
}

/// Golden-Wang: (1/n) sum_ij |abar_ij - w_i| with abar the column-normalised
/// matrix and w the geometric-mean weights.
inline double gw(const Pcm& a) {
  const std::size_t n = a.order();
  const WeightVector w = geometric_mean_weights(a);
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a.at(i, j);
    for (std::size_t i = 0; i < n; ++i) total += std::abs(a.at(i, j) / s - w[i]);
  }
  return total / static_cast<double>(n);
}

/// Barzilai's relative error. With d = ln A, r_i the row means of d and
/// e_ij = d_ij - (r_i - r_j): RE = sum e^2 / sum d^2, and 0 when sum d^2 = 0
/// (the all-ones matrix), where the quotient is 0/0.
inline double re_barzilai(const Pcm& a) {
  const std::size_t n = a.order();
  std::vector<double> d(n * n), r(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d[i * n + j] = i == j ? 0.0 : (i < j ? std::log(a.at(i, j)) : -std::log(a.at(j, i)));
      r[i] += d[i * n + j];
    }
  for (double& x : r) x /= static_cast<double>(n);
  double se = 0.0, sd = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double e = d[i * n + j] - (r[i] - r[j]);
      se += e * e;
      sd += d[i * n + j] * d[i * n + j];
    }
  return sd == 0.0 ? 0.0 : se / sd;
}

// ---- handles and registry -------------------------------------------------

struct ValueRange {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  bool hi_inclusive = false;

  bool bounded_above() const { return std::isfinite(hi); }
  bool contains(double v) const { return v >= lo && (hi_inclusive ? v <= hi : v < hi); }
};

/// A named inconsistency index with the metadata the checkers need.
struct IndexHandle {
  std::string name;
  std::function<double(const Pcm&)> eval;
  std::size_t min_order = 2;
  ValueRange claimed_range;
  bool triad_decomposable = false;

  double operator()(const Pcm& a) const { return eval(a); }
};

/// Triad-aggregation index: agg over i<j<k of F(a_ij a_jk a_ki).
/// Throws GeneratorRejected if the pair fails the sampled generator checks.
inline IndexHandle build_triad_index(const TriadGenerator& gen, std::string name, const CheckConfig& cfg = {}) {
  const AxiomVerdict v = check_generator_properties(gen, cfg);
  if (v.kind == VerdictKind::Falsified) {
    std::string reason = v.witness ? v.witness->relation : std::string("unknown");
    throw PcmError(ErrorCode::GeneratorRejected, name + ": violates " + reason);
  }
  auto eval = [gen](const Pcm& a) {
    if (a.order() < 3) throw PcmError(ErrorCode::OrderTooSmall, "triad indices need order >= 3");
    std::vector<double> local;
    local.reserve(a.order() * (a.order() - 1) * (a.order() - 2) / 6);
    for_each_triad(a, [&](std::size_t i, std::size_t j, std::size_t k, const Triad&) {
      local.push_back(gen.local(a.at(i, j) * a.at(j, k) * a.at(k, i)));
    });
    return gen.aggregate(local);
  };
  return IndexHandle{std::move(name), eval, 3, {0.0, std::numeric_limits<double>::infinity(), false}, true};
}

namespace detail {

inline std::vector<IndexHandle> make_registry() {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return {
      {"ci", [](const Pcm& a) { return ci_saaty(a); }, 2, {0.0, inf, false}, false},
      {"cr", [](const Pcm& a) { return cr_saaty(a, default_ri_table()); }, 3, {0.0, inf, false}, false},
      {"ki", ki_koczkodaj, 2, {0.0, 1.0, false}, true},
      {"gci", gci, 3, {0.0, inf, false}, true},
      {"ci_star", ci_star, 3, {0.0, inf, false}, true},
      {"hci", hci, 2, {0.0, inf, false}, false},
      // Each normalised column differs from w by at most 2 in L1.
      {"gw", gw, 2, {0.0, 2.0, true}, false},
      {"re", re_barzilai, 2, {0.0, 1.0, true}, false},
  };
}

}  // namespace detail

/// The eight built-in indices, in the fixed order ci, cr, ki, gci, ci_star, hci, gw, re.
inline const std::vector<IndexHandle>& registry() {
  static const std::vector<IndexHandle> handles = detail::make_registry();
  return handles;
}

/// Names reserved for indices that are known but not implemented.
inline const std::array<std::string_view, 10>& reserved_index_names() {
  static constexpr std::array<std::string_view, 10> names{"cm", "cci", "ni_g", "ci_h", "s",
                                                          "i_chi2", "fg", "ati", "i_cp", "ci_beta"};
  return names;
}

inline const IndexHandle& lookup(std::string_view name) {
  for (const auto& h : registry())
    if (h.name == name) return h;
  for (auto r : reserved_index_names())
    if (r == name) throw PcmError(ErrorCode::NotImplemented, "index '" + std::string(name) + "' is not implemented");
  throw PcmError(ErrorCode::UnknownIndex, "unknown index '" + std::string(name) + "'");
}

}  // namespace pcmtk
