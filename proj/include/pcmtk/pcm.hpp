#pragma once

// Pairwise comparison matrices, triads and weight vectors.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcmtk/error.hpp"

namespace pcmtk {

inline constexpr double kDefaultConsistencyTol = 1e-9;

/// Number of stored entries for an order-n matrix.
constexpr std::size_t upper_size(std::size_t n) { return n * (n - 1) / 2; }

/// Positive reciprocal matrix stored as its strict upper triangle.
///
/// The lower triangle is never stored; `at(j, i)` is computed as `1 / at(i, j)`
/// so reciprocity holds by construction no matter what arithmetic produced the
/// upper entries.
class Pcm {
 public:
  /// Builds from `n` and the row-major upper triangle (pairs (i, j), i < j).
  Pcm(std::size_t n, std::vector<double> upper) : n_(n), upper_(std::move(upper)) {
    if (n_ < 2) throw PcmError(ErrorCode::OrderTooSmall, "order must be >= 2, got " + std::to_string(n_));
    if (upper_.size() != upper_size(n_)) {
      throw PcmError(ErrorCode::LengthMismatch, "order " + std::to_string(n_) + " needs " +
                                                    std::to_string(upper_size(n_)) + " upper entries, got " +
                                                    std::to_string(upper_.size()));
    }
    for (std::size_t k = 0; k < upper_.size(); ++k) {
      if (!std::isfinite(upper_[k]) || !(upper_[k] > 0.0)) {
        throw PcmError(ErrorCode::NonPositiveEntry, "upper entry #" + std::to_string(k) + " is not a finite positive number");
      }
    }
  }

  std::size_t order() const noexcept { return n_; }
  std::span<const double> upper() const noexcept { return upper_; }

  std::size_t offset(std::size_t i, std::size_t j) const noexcept {
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
  }

  double at(std::size_t i, std::size_t j) const noexcept {
    if (i == j) return 1.0;
    if (i < j) return upper_[offset(i, j)];
    return 1.0 / upper_[offset(j, i)];
  }

  /// Dense row-major copy.
  std::vector<double> dense() const {
    std::vector<double> m(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m[i * n_ + j] = at(i, j);
    return m;
  }

  friend bool operator==(const Pcm&, const Pcm&) = default;

 private:
  std::size_t n_;
  std::vector<double> upper_;
};

/// (t12, t13, t23) = (a_ij, a_ik, a_jk) for some i < j < k. Consistent iff t12 * t23 == t13.
struct Triad {
  double t12;
  double t13;
  double t23;

  friend bool operator==(const Triad&, const Triad&) = default;
};

/// ac / b, i.e. a_ij * a_jk / a_ik. Equals 1 exactly for a consistent triad.
inline double transitivity_ratio(const Triad& t) { return t.t12 * t.t23 / t.t13; }

struct IndexedTriad {
  std::size_t i, j, k;
  Triad triad;
};

/// Positive weights summing to one.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> w) : w_(std::move(w)) {
    if (w_.size() < 2) throw PcmError(ErrorCode::OrderTooSmall, "weight vector needs at least 2 entries");
    double sum = 0.0;
    for (double x : w_) {
      if (!std::isfinite(x) || !(x > 0.0)) throw PcmError(ErrorCode::NonPositiveEntry, "weights must be positive");
      sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw PcmError(ErrorCode::InvalidArgument, "weights must sum to 1 (got " + std::to_string(sum) + ")");
    }
  }

  /// Scales arbitrary positive values to sum one.
  static WeightVector normalized(std::vector<double> v) {
    const double s = std::accumulate(v.begin(), v.end(), 0.0);
    for (double& x : v) x /= s;
    return WeightVector(std::move(v));
  }

  std::size_t size() const noexcept { return w_.size(); }
  double operator[](std::size_t i) const noexcept { return w_[i]; }
  std::span<const double> values() const noexcept { return w_; }

 private:
  std::vector<double> w_;
};

/// Validates a dense matrix and keeps its upper triangle.
inline Pcm new_pcm(const std::vector<std::vector<double>>& full, double tol = 1e-12) {
  const std::size_t n = full.size();
  for (const auto& row : full) {
    if (row.size() != n) throw PcmError(ErrorCode::NonSquare, "matrix is not square");
  }
  if (n < 2) throw PcmError(ErrorCode::OrderTooSmall, "order must be >= 2");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(full[i][j]) || !(full[i][j] > 0.0)) {
        throw PcmError(ErrorCode::NonPositiveEntry, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                        ") is not a finite positive number");
      }
    }
  }
  std::vector<double> upper;
  upper.reserve(upper_size(n));
  for (std::size_t i = 0; i < n; ++i) {
    const double diag = std::abs(full[i][i] - 1.0);
    if (diag > tol) {
      throw PcmError(ErrorCode::ReciprocityViolation, "diagonal entry (" + std::to_string(i + 1) + "," +
                                                          std::to_string(i + 1) + ") deviates from 1 by " +
                                                          std::to_string(diag));
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dev = std::abs(full[i][j] * full[j][i] - 1.0);
      if (dev > tol) {
        throw PcmError(ErrorCode::ReciprocityViolation, "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                            ") a_ij*a_ji deviates from 1 by " + std::to_string(dev));
      }
      upper.push_back(full[i][j]);
    }
  }
  return Pcm(n, std::move(upper));
}

inline Pcm from_upper(std::size_t n, std::vector<double> upper) { return Pcm(n, std::move(upper)); }

/// a_ij = w_i / w_j.
inline Pcm from_weights(const WeightVector& w) {
  const std::size_t n = w.size();
  std::vector<double> upper;
  upper.reserve(upper_size(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) upper.push_back(w[i] / w[j]);
  return Pcm(n, std::move(upper));
}

inline Pcm from_triad(const Triad& t) { return Pcm(3, {t.t12, t.t13, t.t23}); }

inline Pcm ones(std::size_t n) { return Pcm(n, std::vector<double>(upper_size(n), 1.0)); }

/// All C(n,3) triads in lexicographic (i, j, k) order.
inline std::vector<IndexedTriad> triads(const Pcm& a) {
  const std::size_t n = a.order();
  if (n < 3) throw PcmError(ErrorCode::OrderTooSmall, "triads need order >= 3");
  std::vector<IndexedTriad> out;
  out.reserve(n * (n - 1) * (n - 2) / 6);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) out.push_back({i, j, k, Triad{a.at(i, j), a.at(i, k), a.at(j, k)}});
  return out;
}

/// Visits every (i, j, k), i < j < k, without materialising the list.
template <typename Fn>
void for_each_triad(const Pcm& a, Fn&& fn) {
  const std::size_t n = a.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) fn(i, j, k, Triad{a.at(i, j), a.at(i, k), a.at(j, k)});
}

inline bool is_consistent(const Pcm& a, double tol = kDefaultConsistencyTol) {
  if (!(tol > 0.0)) throw PcmError(ErrorCode::InvalidArgument, "tolerance must be positive");
  bool ok = true;
  for_each_triad(a, [&](std::size_t, std::size_t, std::size_t, const Triad& t) {
    if (std::abs(transitivity_ratio(t) - 1.0) > tol) ok = false;
  });
  return ok;
}

/// max over triads of |ln(a_ij a_jk / a_ik)|; 0 for n = 2.
inline double max_triad_log_deviation(const Pcm& a) {
  double m = 0.0;
  for_each_triad(a, [&](std::size_t, std::size_t, std::size_t, const Triad& t) {
    m = std::max(m, std::abs(std::log(transitivity_ratio(t))));
  });
  return m;
}

/// Number of unordered triples {i, j, k} admitting a labelling (p, q, r) with
/// a_pq > 1, a_qr > 1 and a_pr <= 1. Entries equal to 1 are not preferences.
inline std::size_t count_intransitive(const Pcm& a) {
  std::size_t count = 0;
  const std::size_t n = a.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::size_t idx[3] = {i, j, k};
        static constexpr int kLabels[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const auto& l : kLabels) {
          const std::size_t p = idx[l[0]], q = idx[l[1]], r = idx[l[2]];
          if (a.at(p, q) > 1.0 && a.at(q, r) > 1.0 && !(a.at(p, r) > 1.0)) {
            ++count;
            break;
          }
        }
      }
  return count;
}

inline bool is_ordinally_consistent(const Pcm& a) { return count_intransitive(a) == 0; }

// ---- transformations -------------------------------------------------------

/// Sets a_ij = value (and a_ji = 1 / value).
inline Pcm perturb_entry(const Pcm& a, std::size_t i, std::size_t j, double value) {
  const std::size_t n = a.order();
  if (i >= n || j >= n || i == j) {
    throw PcmError(ErrorCode::IndexOutOfRange, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                   ") is not an off-diagonal entry of an order-" + std::to_string(n) +
                                                   " matrix");
  }
  if (!std::isfinite(value) || !(value > 0.0)) throw PcmError(ErrorCode::NonPositiveEntry, "new value must be positive");
  std::vector<double> upper(a.upper().begin(), a.upper().end());
  if (i < j)
    upper[a.offset(i, j)] = value;
  else
    upper[a.offset(j, i)] = 1.0 / value;
  return Pcm(n, std::move(upper));
}

/// Entrywise power a_ij -> a_ij^k.
inline Pcm intensify(const Pcm& a, double k) {
  std::vector<double> upper(a.upper().begin(), a.upper().end());
  for (double& x : upper) x = std::pow(x, k);
  return Pcm(a.order(), std::move(upper));
}

/// P^T A P for the permutation sigma: result(i, j) = a(sigma[i], sigma[j]).
inline Pcm permute(const Pcm& a, std::span<const std::size_t> sigma) {
  const std::size_t n = a.order();
  if (sigma.size() != n) throw PcmError(ErrorCode::LengthMismatch, "permutation length differs from order");
  std::vector<bool> seen(n, false);
  for (std::size_t s : sigma) {
    if (s >= n || seen[s]) throw PcmError(ErrorCode::IndexOutOfRange, "sigma is not a permutation of 0..n-1");
    seen[s] = true;
  }
  std::vector<double> upper;
  upper.reserve(upper_size(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) upper.push_back(a.at(sigma[i], sigma[j]));
  return Pcm(n, std::move(upper));
}

inline Pcm transpose(const Pcm& a) {
  std::vector<double> upper(a.upper().begin(), a.upper().end());
  for (double& x : upper) x = 1.0 / x;
  return Pcm(a.order(), std::move(upper));
}

/// Restriction to the rows/columns in `subset` (in the given order).
inline Pcm submatrix(const Pcm& a, std::span<const std::size_t> subset) {
  const std::size_t n = a.order();
  if (subset.size() < 2) throw PcmError(ErrorCode::SubsetTooSmall, "subset needs at least 2 elements");
  std::vector<bool> seen(n, false);
  for (std::size_t s : subset) {
    if (s >= n || seen[s]) throw PcmError(ErrorCode::IndexOutOfRange, "subset has an invalid or repeated index");
    seen[s] = true;
  }
  const std::size_t m = subset.size();
  std::vector<double> upper;
  upper.reserve(upper_size(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) upper.push_back(a.at(subset[i], subset[j]));
  return Pcm(m, std::move(upper));
}

/// All ones except a_1n = x.
inline Pcm corner_matrix(std::size_t n, double x) {
  if (n < 3) throw PcmError(ErrorCode::OrderTooSmall, "corner matrix needs order >= 3");
  std::vector<double> upper(upper_size(n), 1.0);
  upper[n - 2] = x;  // offset(0, n-1)
  return Pcm(n, std::move(upper));
}

}  // namespace pcmtk
