#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "tilecount/directenum.hpp"
#include "tilecount/matrix.hpp"

namespace tilecount {

/// Cells of one column still available for tiling. Bit k is cell k+1
/// counted from the bottom; the matrix index of a state is its bit value.
struct ColumnState {
  std::uint32_t bits = 0;
  int width = 0;

  static ColumnState full(int width) { return {(std::uint32_t{1} << width) - 1, width}; }
  static ColumnState empty(int width) { return {0, width}; }
  /// Cells are 1-based, bottom to top.
  static ColumnState of(std::initializer_list<int> cells, int width);

  std::size_t index() const { return bits; }
  ColumnState complement() const { return {~bits & full(width).bits, width}; }
  bool contains(int cell) const { return (bits >> (cell - 1)) & 1U; }
  auto operator<=>(const ColumnState&) const = default;
};

struct Follower {
  ColumnState next;
  MultiPoly weight;
};

/// States that can follow `state`: place disjoint vertical dominoes (v) and,
/// in monomer-dimer mode, monomers (m) inside the available cells; every
/// other available cell starts a horizontal domino (h) into the next
/// column. The follower is the complement of that protruding set. Weights
/// are aggregated per follower, sorted by follower.
std::vector<Follower> followers(ColumnState state, TilingMode mode);

/// The 2^m x 2^m transfer matrix. `counts` is always filled; `weights` only
/// when weighted. Horizontal dominoes are credited to the column they start
/// in, so protrusions entering the first column carry no weight.
struct TransferMatrix {
  int width = 0;
  TilingMode mode = TilingMode::Dimer;
  bool weighted = false;
  IntMatrix counts;
  PolyMatrix weights;
};

int transfer_width_cap();
void set_transfer_width_cap(int cap);

/// Cached per (m, mode, weighted); safe to call concurrently. Throws
/// std::invalid_argument when m is outside [1, cap].
std::shared_ptr<const TransferMatrix> build_tm(int m, TilingMode mode, bool weighted = false);

/// Uncached construction with a serial row loop; the reference for build_tm.
TransferMatrix build_tm_serial(int m, TilingMode mode, bool weighted);

/// Tilings of the m x n rectangle for n = 0..N.
std::vector<Integer> seq_rect(int m, int N, TilingMode mode);
std::vector<MultiPoly> seq_rect_weighted(int m, int N, TilingMode mode);

}  // namespace tilecount
