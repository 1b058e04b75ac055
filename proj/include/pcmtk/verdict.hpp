#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcmtk/pcm.hpp"

namespace pcmtk {

/// How KU axiom 3 measures the distance of a triad from b = ac.
enum class DeviationMeasure {
  Ratio,     ///< max(ac/b, b/ac)
  Absolute,  ///< |ac - b|
};

struct CheckConfig {
  std::size_t trials = 10'000;
  std::vector<std::size_t> orders{3, 4, 5, 6};
  std::uint64_t seed = 42;
  double tol = 1e-9;
  /// Candidate evaluations allowed to the hill-climbing searches.
  std::size_t search_budget = 100'000;
  /// Matrices sampled as "inconsistent" have some triad with |ln(ac/b)| at
  /// least this large, so that index values are distinguishable from the
  /// consistent value in double precision.
  double separation = 1e-3;
  /// Tolerance for metamorphic equalities: |x - y| <= rel * max(1, |x|, |y|).
  double equality_rel = 1e-12;
  DeviationMeasure ku_a3_measure = DeviationMeasure::Absolute;
};

enum class VerdictKind { Falsified, NotFalsified, Heuristic, Inapplicable };

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Falsified: return "Falsified";
    case VerdictKind::NotFalsified: return "NotFalsified";
    case VerdictKind::Heuristic: return "Heuristic";
    case VerdictKind::Inapplicable: return "Inapplicable";
  }
  return "?";
}

struct NamedMatrix {
  std::string role;
  Pcm matrix;

  friend bool operator==(const NamedMatrix&, const NamedMatrix&) = default;
};

/// Evidence for a falsification. `check` names the violated relation and
/// selects the replay rule; `values` are the recorded index values, one per
/// matrix unless the relation says otherwise; `params` hold the remaining
/// scalars (tolerances, exponents, entry positions, ...).
struct Witness {
  std::string check;
  std::string relation;
  std::vector<NamedMatrix> matrices;
  std::vector<double> values;
  std::vector<double> params;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct AxiomVerdict {
  VerdictKind kind = VerdictKind::Inapplicable;
  std::optional<Witness> witness;
  std::size_t trials_run = 0;
  std::string note;

  static AxiomVerdict falsified(Witness w, std::size_t trials, std::string note = {}) {
    return {VerdictKind::Falsified, std::move(w), trials, std::move(note)};
  }
  static AxiomVerdict not_falsified(std::size_t trials, std::string note = {}) {
    return {VerdictKind::NotFalsified, std::nullopt, trials, std::move(note)};
  }
  static AxiomVerdict inapplicable(std::string note) { return {VerdictKind::Inapplicable, std::nullopt, 0, std::move(note)}; }

  friend bool operator==(const AxiomVerdict&, const AxiomVerdict&) = default;
};

/// |x - y| <= rel * max(1, |x|, |y|)
inline bool approx_equal(double x, double y, double rel) {
  const double scale = std::max({1.0, std::abs(x), std::abs(y)});
  return std::abs(x - y) <= rel * scale;
}

}  // namespace pcmtk
