#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tilecount {

/// A unit cell; x grows rightward (columns), y grows upward (rows).
/// Ordering is column-major: by x, then by y.
struct Cell {
  int x = 0;
  int y = 0;
  auto operator<=>(const Cell&) const = default;
};

std::string to_string(const Cell& c);

/// A blocked edge between two orthogonally adjacent cells. No tile may
/// cover both. Stored with first < second.
struct Wall {
  Cell first;
  Cell second;
  auto operator<=>(const Wall&) const = default;
};

/// Frame(a1,a2,b1,b2,m,n): an (a1+m+a2) x (b1+n+b2) rectangle with the m x n
/// hole whose lower-left cell is (b1, a1). a1/a2 are the bottom/top
/// thicknesses and b1/b2 the left/right thicknesses.
struct FrameSpec {
  int a1 = 1, a2 = 1, b1 = 1, b2 = 1;
  int m = 0, n = 0;
  void validate() const;
  int height() const { return a1 + m + a2; }
  int width() const { return b1 + n + b2; }
};

/// A central a x b block (a columns wide, b rows tall) with four arms of
/// length n attached along its full sides.
struct CrossSpec {
  int a = 1, b = 1;
  int n = 0;
  void validate() const;
};

/// A finite set of cells, optionally with walls between adjacent cells.
class Region {
 public:
  Region() = default;
  /// Throws std::invalid_argument naming the first duplicate cell, or a
  /// wall that does not join two adjacent cells of the region.
  explicit Region(std::vector<Cell> cells, std::vector<Wall> walls = {});

  /// Cells in column-major order.
  const std::vector<Cell>& cells() const { return cells_; }
  const std::vector<Wall>& walls() const { return walls_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  bool contains(Cell c) const;
  bool blocked(Cell a, Cell b) const;

  Region translated(int dx, int dy) const;
  /// Quarter turn counterclockwise about the origin.
  Region rotated() const;
  /// Mirror image in the y axis.
  Region reflected() const;
  /// Translated so the minimum x and minimum y are both 0.
  Region canonical() const;

  friend bool operator==(const Region& a, const Region& b) {
    return a.cells_ == b.cells_ && a.walls_ == b.walls_;
  }

 private:
  std::vector<Cell> cells_;
  std::vector<Wall> walls_;
};

/// m rows by n columns.
Region build_rectangle(int m, int n);

/// The frame's cells. When exactly one hole dimension is zero the hole is a
/// slit: all cells are present and a wall of the other dimension's length
/// runs where the hole would be.
Region build_frame(const FrameSpec& spec);

Region build_cross(const CrossSpec& spec);

class RegionParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One "x y" pair per line; blank lines and '#' comments are ignored.
Region parse_region_file(std::string_view text);

/// Inverse of parse_region_file for wall-free regions.
std::string format_region_file(const Region& region);

}  // namespace tilecount
