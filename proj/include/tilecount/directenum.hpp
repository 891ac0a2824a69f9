#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "tilecount/multipoly.hpp"
#include "tilecount/numbers.hpp"
#include "tilecount/region.hpp"

namespace tilecount {

enum class TilingMode { Dimer, MonomerDimer };

/// Weight variables: h (horizontal dominoes), v (vertical dominoes) and, in
/// monomer-dimer mode, m (monomers).
inline constexpr int kVarH = 0;
inline constexpr int kVarV = 1;
inline constexpr int kVarM = 2;

constexpr int weight_arity(TilingMode mode) { return mode == TilingMode::Dimer ? 2 : 3; }

/// A cell outside the region, adjacent to exactly one region cell, that a
/// domino from that cell may stick out into. Each overhang has its own bit
/// in the profile mask. Uncredited overhang dominoes carry weight 1.
struct Overhang {
  Cell cell;
  int bit = 0;
  bool credited = true;
};

/// Tiling weight per overhang profile (the mask of covered overhang cells).
using ProfileCounts = std::map<std::uint64_t, Integer>;
using ProfileWeights = std::map<std::uint64_t, MultiPoly>;

/// Number of complete tilings. The pivot is always the bottom-most cell of
/// the left-most column still uncovered; it is covered rightward, upward,
/// or (monomer-dimer only) by a monomer. Memoised on the uncovered set.
Integer count_tilings(const Region& region, TilingMode mode);

/// Sum over tilings of h^#horizontal v^#vertical (m^#monomers).
MultiPoly count_weighted(const Region& region, TilingMode mode);

/// Tilings where dominoes may also cover overhang cells, grouped by which
/// overhang cells are covered. Throws std::invalid_argument for an overhang
/// inside the region, not adjacent to exactly one region cell, or with a
/// repeated bit.
ProfileCounts count_overhang_tilings(const Region& region, std::span<const Overhang> overhangs, TilingMode mode);
ProfileWeights weigh_overhang_tilings(const Region& region, std::span<const Overhang> overhangs, TilingMode mode);

}  // namespace tilecount
