#pragma once

#include <memory>
#include <vector>

#include "tilecount/directenum.hpp"
#include "tilecount/matrix.hpp"
#include "tilecount/region.hpp"

namespace tilecount {

enum class Side { Up = 1, Left = 2, Down = 3, Right = 4 };

/// Number of cells along `side` of an a x b (rows x columns) rectangle.
int side_length(int a, int b, Side side);

/// RTM(a, b, s1, s2): tilings of the a x b rectangle whose dominoes may
/// stick out through s1 and s2 only. Entry (i, j) has stick-out set i on s1
/// and j on s2, where bit k is the k-th cell of the side counted bottom to
/// top (Left/Right) or left to right (Up/Down).
///
/// In the weighted matrix, stick-outs through s2 are credited and those
/// through s1 are not: s1 is the side fed by the preceding strip when
/// corners are chained.
struct CornerTransfer {
  int height = 0;
  int width = 0;
  Side s1 = Side::Up;
  Side s2 = Side::Right;
  TilingMode mode = TilingMode::Dimer;
  bool weighted = false;
  IntMatrix counts;
  PolyMatrix weights;
};

/// Cached; throws std::invalid_argument when s1 == s2 or a, b < 1.
std::shared_ptr<const CornerTransfer> corner_transfer(int a, int b, Side s1, Side s2, TilingMode mode,
                                                      bool weighted = false);

/// Tilings of build_frame(spec), as the trace of the corner/strip cycle
/// SW -> South -> SE -> East -> NE -> North -> NW -> West.
Integer frame_count(const FrameSpec& spec, TilingMode mode);
MultiPoly frame_count_weighted(const FrameSpec& spec, TilingMode mode);

/// Square holes n x n for n = 0..N.
std::vector<Integer> frame_seq(int a1, int a2, int b1, int b2, int N, TilingMode mode);
std::vector<MultiPoly> frame_seq_weighted(int a1, int a2, int b1, int b2, int N, TilingMode mode);

using IntTable = std::vector<std::vector<Integer>>;

/// D(m, n) for 0 <= m <= M, 0 <= n <= N. Entries are computed in parallel;
/// frame_table_serial is the single-threaded reference.
IntTable frame_table(int a1, int a2, int b1, int b2, int M, int N, TilingMode mode);
IntTable frame_table_serial(int a1, int a2, int b1, int b2, int M, int N, TilingMode mode);

/// Tilings of build_cross({a, b, n}) for n = 0..N: every stick-out tiling of
/// the center block, times the four arm counts read off transfer powers.
std::vector<Integer> cross_seq(int a, int b, int N, TilingMode mode);
std::vector<MultiPoly> cross_seq_weighted(int a, int b, int N, TilingMode mode);

}  // namespace tilecount
