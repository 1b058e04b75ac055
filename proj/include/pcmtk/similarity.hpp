#pragma once

// Jaccard similarity between the four axiomatic systems KS, KU, BF and CS.
//
// Only the number of shared axioms per pair is stored. Which axioms are
// considered the same is not recorded anywhere, only the counts.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "pcmtk/error.hpp"

namespace pcmtk {

struct AxiomSystem {
  std::string_view name;
  std::size_t axiom_count;
};

inline constexpr std::array<AxiomSystem, 4> kAxiomSystems{{{"KS", 3}, {"KU", 4}, {"BF", 5}, {"CS", 6}}};

namespace detail {

inline std::size_t system_position(std::string_view name) {
  for (std::size_t i = 0; i < kAxiomSystems.size(); ++i)
    if (kAxiomSystems[i].name == name) return i;
  throw PcmError(ErrorCode::UnknownSystem, "unknown axiomatic system '" + std::string(name) + "'");
}

// Shared-axiom counts, symmetric, order KS, KU, BF, CS. Diagonal unused.
inline constexpr std::size_t kShared[4][4] = {
    {0, 1, 2, 1},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {1, 2, 1, 0},
};

}  // namespace detail

inline const AxiomSystem& axiom_system(std::string_view name) { return kAxiomSystems[detail::system_position(name)]; }

inline std::size_t shared_axioms(std::string_view a, std::string_view b) {
  const std::size_t i = detail::system_position(a), j = detail::system_position(b);
  return i == j ? kAxiomSystems[i].axiom_count : detail::kShared[i][j];
}

/// |A n B| / (|A| + |B|): the denominator is the plain sum of sizes, not the
/// set union. A system compared with itself is 1.
inline double jaccard(std::string_view a, std::string_view b) {
  const std::size_t i = detail::system_position(a), j = detail::system_position(b);
  if (i == j) return 1.0;
  return static_cast<double>(detail::kShared[i][j]) /
         static_cast<double>(kAxiomSystems[i].axiom_count + kAxiomSystems[j].axiom_count);
}

/// Textbook Jaccard |A n B| / |A u B| = shared / (|A| + |B| - shared).
inline double jaccard_set_union(std::string_view a, std::string_view b) {
  const std::size_t i = detail::system_position(a), j = detail::system_position(b);
  if (i == j) return 1.0;
  const std::size_t shared = detail::kShared[i][j];
  return static_cast<double>(shared) /
         static_cast<double>(kAxiomSystems[i].axiom_count + kAxiomSystems[j].axiom_count - shared);
}

using SimilarityMatrix = std::array<std::array<double, 4>, 4>;

/// Pairwise jaccard() over KS, KU, BF, CS.
inline SimilarityMatrix similarity_matrix() {
  SimilarityMatrix m{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = jaccard(kAxiomSystems[i].name, kAxiomSystems[j].name);
  return m;
}

}  // namespace pcmtk
