#include "tilecount/directenum.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace tilecount {

namespace {

// Coverage of the cells just after the pivot, bit k = pivot index + k.
struct Window {
  static constexpr int kBits = 256;
  std::array<std::uint64_t, 4> w{};

  bool test(int k) const { return (w[static_cast<std::size_t>(k >> 6)] >> (k & 63)) & 1U; }
  void set(int k) { w[static_cast<std::size_t>(k >> 6)] |= std::uint64_t{1} << (k & 63); }

  void shift_down(int s) {
    if (s >= kBits) {
      w = {};
      return;
    }
    const int words = s >> 6, bits = s & 63;
    std::array<std::uint64_t, 4> out{};
    for (int i = 0; i + words < 4; ++i) {
      std::uint64_t lo = w[static_cast<std::size_t>(i + words)] >> bits;
      std::uint64_t hi = 0;
      if (bits != 0 && i + words + 1 < 4) hi = w[static_cast<std::size_t>(i + words + 1)] << (64 - bits);
      out[static_cast<std::size_t>(i)] = lo | hi;
    }
    w = out;
  }

  bool operator==(const Window&) const = default;
};

struct Key {
  std::uint32_t pivot;
  Window window;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ k.pivot;
    for (auto x : k.window.w) {
      h ^= x + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
      h *= 0xBF58476D1CE4E5B9ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

struct Move {
  int target = -1;        // region cell index, or -1
  int overhang_bit = -1;  // overhang covered, or -1
  int var = kVarH;
  bool credited = true;
};

template <class W>
W move_weight(const Move& mv, int arity);

template <>
Integer move_weight<Integer>(const Move&, int) {
  return 1;
}

template <>
MultiPoly move_weight<MultiPoly>(const Move& mv, int arity) {
  if (!mv.credited) return MultiPoly::constant(1, arity);
  return MultiPoly::variable(mv.var, arity);
}

template <class W>
class Tiler {
 public:
  using Profile = std::map<std::uint64_t, W>;

  Tiler(const Region& region, std::span<const Overhang> overhangs, TilingMode mode)
      : cells_(region.cells()), arity_(weight_arity(mode)) {
    const auto index_of = [&](Cell c) -> int {
      auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
      return (it != cells_.end() && *it == c) ? static_cast<int>(it - cells_.begin()) : -1;
    };

    moves_.resize(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      const Cell c = cells_[i];
      const Cell right{c.x + 1, c.y};
      const Cell up{c.x, c.y + 1};
      if (int r = index_of(right); r >= 0 && !region.blocked(c, right)) moves_[i].push_back({r, -1, kVarH, true});
      if (int u = index_of(up); u >= 0 && !region.blocked(c, up)) moves_[i].push_back({u, -1, kVarV, true});
    }

    std::uint64_t seen_bits = 0;
    for (const auto& oh : overhangs) {
      if (oh.bit < 0 || oh.bit >= 64 || ((seen_bits >> oh.bit) & 1U)) {
        throw std::invalid_argument("overhang bits must be distinct and in [0, 64)");
      }
      seen_bits |= std::uint64_t{1} << oh.bit;
      if (index_of(oh.cell) >= 0) throw std::invalid_argument("overhang " + to_string(oh.cell) + " lies inside the region");
      int owner = -1, neighbours = 0, var = kVarH;
      for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
        int k = index_of({oh.cell.x + dx, oh.cell.y + dy});
        if (k < 0) continue;
        ++neighbours;
        owner = k;
        var = dx != 0 ? kVarH : kVarV;
      }
      if (neighbours != 1) {
        throw std::invalid_argument("overhang " + to_string(oh.cell) + " must touch exactly one region cell");
      }
      moves_[static_cast<std::size_t>(owner)].push_back({-1, oh.bit, var, oh.credited});
    }
    if (mode == TilingMode::MonomerDimer) {
      for (auto& mv : moves_) mv.push_back({-1, -1, kVarM, true});
    }

    reach_ = 1;
    for (std::size_t i = 0; i < moves_.size(); ++i) {
      for (const auto& mv : moves_[i]) {
        if (mv.target >= 0) reach_ = std::max(reach_, mv.target - static_cast<int>(i));
      }
    }
    if (reach_ >= Window::kBits) throw std::invalid_argument("region columns too tall for direct enumeration");
  }

  Profile run() {
    if (cells_.empty()) return Profile{{0, ring_one()}};
    return solve(0, Window{});
  }

 private:
  static W ring_one() {
    if constexpr (std::is_same_v<W, Integer>) {
      return Integer(1);
    } else {
      return MultiPoly::constant(1);
    }
  }

  // Marks the pivot covered and slides to the next uncovered cell.
  std::pair<int, Window> advance(int p, Window win) const {
    win.set(0);
    int k = 1;
    while (k <= reach_ && win.test(k)) ++k;
    int q = std::min(p + k, static_cast<int>(cells_.size()));
    win.shift_down(q - p);
    return {q, win};
  }

  const Profile& terminal() {
    static const Profile base{{0, ring_one()}};
    return base;
  }

  const Profile& solve(int p, const Window& win) {
    if (p == static_cast<int>(cells_.size())) return terminal();
    Key key{static_cast<std::uint32_t>(p), win};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Profile result;
    for (const auto& mv : moves_[static_cast<std::size_t>(p)]) {
      Window next = win;
      std::uint64_t extra = 0;
      if (mv.target >= 0) {
        const int off = mv.target - p;
        if (next.test(off)) continue;
        next.set(off);
      }
      if (mv.overhang_bit >= 0) extra = std::uint64_t{1} << mv.overhang_bit;
      auto [q, shifted] = advance(p, next);
      const Profile& child = solve(q, shifted);
      if (child.empty()) continue;
      const W factor = move_weight<W>(mv, arity_);
      for (const auto& [mask, w] : child) {
        W& slot = result[mask | extra];
        if constexpr (std::is_same_v<W, Integer>) {
          slot += w;
        } else {
          slot.add_product(factor, w);
        }
      }
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

  const std::vector<Cell>& cells_;
  int arity_;
  int reach_ = 1;
  std::vector<std::vector<Move>> moves_;
  std::unordered_map<Key, Profile, KeyHash> memo_;
};

}  // namespace

Integer count_tilings(const Region& region, TilingMode mode) {
  if (mode == TilingMode::Dimer && region.size() % 2 == 1) return 0;
  auto profile = Tiler<Integer>(region, {}, mode).run();
  auto it = profile.find(0);
  return it == profile.end() ? Integer(0) : it->second;
}

MultiPoly count_weighted(const Region& region, TilingMode mode) {
  const int arity = weight_arity(mode);
  if (mode == TilingMode::Dimer && region.size() % 2 == 1) return MultiPoly(arity);
  auto profile = Tiler<MultiPoly>(region, {}, mode).run();
  MultiPoly out(arity);
  if (auto it = profile.find(0); it != profile.end()) out += it->second;
  return out;
}

ProfileCounts count_overhang_tilings(const Region& region, std::span<const Overhang> overhangs, TilingMode mode) {
  auto profile = Tiler<Integer>(region, overhangs, mode).run();
  ProfileCounts out;
  for (auto& [mask, w] : profile) {
    if (w != 0) out.emplace(mask, std::move(w));
  }
  return out;
}

ProfileWeights weigh_overhang_tilings(const Region& region, std::span<const Overhang> overhangs, TilingMode mode) {
  const int arity = weight_arity(mode);
  auto profile = Tiler<MultiPoly>(region, overhangs, mode).run();
  ProfileWeights out;
  for (auto& [mask, w] : profile) {
    if (w.is_zero()) continue;
    MultiPoly p(arity);
    p += w;
    out.emplace(mask, std::move(p));
  }
  return out;
}

}  // namespace tilecount
