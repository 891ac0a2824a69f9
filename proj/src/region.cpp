#include "tilecount/region.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace tilecount {

namespace {

bool adjacent(Cell a, Cell b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1; }

Wall make_wall(Cell a, Cell b) { return a < b ? Wall{a, b} : Wall{b, a}; }

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool parse_int(std::string_view tok, int& out) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size() && !tok.empty();
}

}  // namespace

std::string to_string(const Cell& c) { return "(" + std::to_string(c.x) + ", " + std::to_string(c.y) + ")"; }

void FrameSpec::validate() const {
  if (a1 < 1 || a2 < 1 || b1 < 1 || b2 < 1) throw std::invalid_argument("frame thicknesses must be >= 1");
  if (m < 0 || n < 0) throw std::invalid_argument("frame hole dimensions must be >= 0");
}

void CrossSpec::validate() const {
  if (a < 1 || b < 1) throw std::invalid_argument("cross center dimensions must be >= 1");
  if (n < 0) throw std::invalid_argument("cross arm length must be >= 0");
}

Region::Region(std::vector<Cell> cells, std::vector<Wall> walls) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  auto dup = std::adjacent_find(cells_.begin(), cells_.end());
  if (dup != cells_.end()) throw std::invalid_argument("duplicate cell " + to_string(*dup));
  walls_.reserve(walls.size());
  for (const auto& w : walls) {
    if (!adjacent(w.first, w.second) || !contains(w.first) || !contains(w.second)) {
      throw std::invalid_argument("wall " + to_string(w.first) + "-" + to_string(w.second) +
                                  " does not join adjacent cells of the region");
    }
    walls_.push_back(make_wall(w.first, w.second));
  }
  std::sort(walls_.begin(), walls_.end());
  walls_.erase(std::unique(walls_.begin(), walls_.end()), walls_.end());
}

bool Region::contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

bool Region::blocked(Cell a, Cell b) const {
  if (walls_.empty()) return false;
  return std::binary_search(walls_.begin(), walls_.end(), make_wall(a, b));
}

Region Region::translated(int dx, int dy) const {
  auto move = [&](Cell c) { return Cell{c.x + dx, c.y + dy}; };
  std::vector<Cell> cells;
  cells.reserve(cells_.size());
  for (auto c : cells_) cells.push_back(move(c));
  std::vector<Wall> walls;
  for (const auto& w : walls_) walls.push_back({move(w.first), move(w.second)});
  return Region(std::move(cells), std::move(walls));
}

Region Region::rotated() const {
  auto turn = [](Cell c) { return Cell{-c.y, c.x}; };
  std::vector<Cell> cells;
  cells.reserve(cells_.size());
  for (auto c : cells_) cells.push_back(turn(c));
  std::vector<Wall> walls;
  for (const auto& w : walls_) walls.push_back({turn(w.first), turn(w.second)});
  return Region(std::move(cells), std::move(walls));
}

Region Region::reflected() const {
  auto flip = [](Cell c) { return Cell{-c.x, c.y}; };
  std::vector<Cell> cells;
  cells.reserve(cells_.size());
  for (auto c : cells_) cells.push_back(flip(c));
  std::vector<Wall> walls;
  for (const auto& w : walls_) walls.push_back({flip(w.first), flip(w.second)});
  return Region(std::move(cells), std::move(walls));
}

Region Region::canonical() const {
  if (cells_.empty()) return *this;
  int min_x = cells_.front().x;
  int min_y = cells_.front().y;
  for (auto c : cells_) min_y = std::min(min_y, c.y);
  return translated(-min_x, -min_y);
}

Region build_rectangle(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("rectangle dimensions must be >= 0");
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < m; ++y) cells.push_back({x, y});
  }
  return Region(std::move(cells));
}

Region build_frame(const FrameSpec& spec) {
  spec.validate();
  const int hx0 = spec.b1, hx1 = spec.b1 + spec.n;
  const int hy0 = spec.a1, hy1 = spec.a1 + spec.m;
  std::vector<Cell> cells;
  for (int x = 0; x < spec.width(); ++x) {
    for (int y = 0; y < spec.height(); ++y) {
      if (x >= hx0 && x < hx1 && y >= hy0 && y < hy1) continue;
      cells.push_back({x, y});
    }
  }
  std::vector<Wall> walls;
  if (spec.m == 0 && spec.n > 0) {
    for (int x = hx0; x < hx1; ++x) walls.push_back({{x, hy0 - 1}, {x, hy0}});
  } else if (spec.n == 0 && spec.m > 0) {
    for (int y = hy0; y < hy1; ++y) walls.push_back({{hx0 - 1, y}, {hx0, y}});
  }
  return Region(std::move(cells), std::move(walls));
}

Region build_cross(const CrossSpec& spec) {
  spec.validate();
  const int a = spec.a, b = spec.b, n = spec.n;
  std::vector<Cell> cells;
  auto block = [&](int x0, int x1, int y0, int y1) {
    for (int x = x0; x < x1; ++x) {
      for (int y = y0; y < y1; ++y) cells.push_back({x, y});
    }
  };
  block(n, n + a, n, n + b);              // center
  block(0, n, n, n + b);                  // left arm
  block(n + a, 2 * n + a, n, n + b);      // right arm
  block(n, n + a, 0, n);                  // lower arm
  block(n, n + a, n + b, 2 * n + b);      // upper arm
  return Region(std::move(cells));
}

Region parse_region_file(std::string_view text) {
  std::vector<Cell> cells;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    auto sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos) {
      throw RegionParseError("line " + std::to_string(line_no) + ": expected two integers 'x y'");
    }
    std::string_view xs = line.substr(0, sep);
    std::string_view ys = trim(line.substr(sep));
    Cell c;
    if (!parse_int(xs, c.x) || !parse_int(ys, c.y)) {
      throw RegionParseError("line " + std::to_string(line_no) + ": expected two integers 'x y'");
    }
    cells.push_back(c);
  }
  std::vector<Cell> sorted = cells;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw RegionParseError("duplicate cell " + to_string(*dup));
  return Region(std::move(cells));
}

std::string format_region_file(const Region& region) {
  std::ostringstream out;
  for (auto c : region.cells()) out << c.x << ' ' << c.y << '\n';
  return out.str();
}

}  // namespace tilecount
