#include "tilecount/skinny.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "tilecount/transfer.hpp"

namespace tilecount {

namespace {

constexpr bool kWeighted = true;

std::vector<Overhang> side_overhangs(int a, int b, Side side, int first_bit, bool credited) {
  std::vector<Overhang> out;
  const int len = side_length(a, b, side);
  for (int k = 0; k < len; ++k) {
    Cell c{};
    switch (side) {
      case Side::Up: c = {k, a}; break;
      case Side::Down: c = {k, -1}; break;
      case Side::Left: c = {-1, k}; break;
      case Side::Right: c = {b, k}; break;
    }
    out.push_back({c, first_bit + k, credited});
  }
  return out;
}

template <class W>
const RingMatrix<W>& corner_of(const CornerTransfer& c) {
  if constexpr (std::is_same_v<W, Integer>) {
    return c.counts;
  } else {
    return c.weights;
  }
}

// The strip transfer matrix re-indexed by protrusion sets instead of
// available sets: K[X][Y] = TM[~X][~Y]. A corner's stick-out set meets the
// strip through this complement. Strips running vertically see horizontal
// and vertical exchanged.
template <class W>
RingMatrix<W> strip_matrix(int width, TilingMode mode, bool vertical) {
  auto tm = build_tm(width, mode, std::is_same_v<W, MultiPoly>);
  const std::size_t dim = std::size_t{1} << width;
  const std::size_t mask = dim - 1;
  RingMatrix<W> k(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if constexpr (std::is_same_v<W, Integer>) {
        k(i, j) = tm->counts(~i & mask, ~j & mask);
      } else {
        const MultiPoly& w = tm->weights(~i & mask, ~j & mask);
        k(i, j) = vertical ? w.swapped(kVarH, kVarV) : w;
      }
    }
  }
  return k;
}

template <class W>
std::vector<RingMatrix<W>> powers_upto(const RingMatrix<W>& base, int n) {
  std::vector<RingMatrix<W>> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  out.push_back(RingMatrix<W>::identity(base.rows()));
  for (int k = 1; k <= n; ++k) out.push_back(mat_mul(out.back(), base));
  return out;
}

template <class W>
struct FramePlan {
  std::shared_ptr<const CornerTransfer> sw, se, ne, nw;
  RingMatrix<W> south, east, north, west;

  FramePlan(int a1, int a2, int b1, int b2, TilingMode mode) {
    if (a1 < 1 || a2 < 1 || b1 < 1 || b2 < 1) throw std::invalid_argument("frame thicknesses must be >= 1");
    constexpr bool weighted = std::is_same_v<W, MultiPoly>;
    sw = corner_transfer(a1, b1, Side::Up, Side::Right, mode, weighted);
    se = corner_transfer(a1, b2, Side::Left, Side::Up, mode, weighted);
    ne = corner_transfer(a2, b2, Side::Down, Side::Left, mode, weighted);
    nw = corner_transfer(a2, b1, Side::Right, Side::Down, mode, weighted);
    south = strip_matrix<W>(a1, mode, false);
    east = strip_matrix<W>(b2, mode, true);
    north = strip_matrix<W>(a2, mode, false);
    west = strip_matrix<W>(b1, mode, true);
  }

  // SW * S^n * SE and NE * N^n * NW.
  RingMatrix<W> lower(const RingMatrix<W>& south_pow) const {
    return mat_mul(mat_mul(corner_of<W>(*sw), south_pow), corner_of<W>(*se));
  }
  RingMatrix<W> upper(const RingMatrix<W>& north_pow) const {
    return mat_mul(mat_mul(corner_of<W>(*ne), north_pow), corner_of<W>(*nw));
  }

  W close(const RingMatrix<W>& lower_n, const RingMatrix<W>& east_pow, const RingMatrix<W>& upper_n,
          const RingMatrix<W>& west_pow) const {
    return trace_of_product(mat_mul(lower_n, east_pow), mat_mul(upper_n, west_pow));
  }
};

template <class W>
W frame_count_impl(const FrameSpec& spec, TilingMode mode) {
  spec.validate();
  FramePlan<W> plan(spec.a1, spec.a2, spec.b1, spec.b2, mode);
  return plan.close(plan.lower(mat_pow(plan.south, static_cast<unsigned long>(spec.n))),
                    mat_pow(plan.east, static_cast<unsigned long>(spec.m)),
                    plan.upper(mat_pow(plan.north, static_cast<unsigned long>(spec.n))),
                    mat_pow(plan.west, static_cast<unsigned long>(spec.m)));
}

template <class W>
std::vector<W> frame_seq_impl(int a1, int a2, int b1, int b2, int N, TilingMode mode) {
  FramePlan<W> plan(a1, a2, b1, b2, mode);
  std::vector<W> out;
  auto ps = RingMatrix<W>::identity(plan.south.rows());
  auto pe = RingMatrix<W>::identity(plan.east.rows());
  auto pn = RingMatrix<W>::identity(plan.north.rows());
  auto pw = RingMatrix<W>::identity(plan.west.rows());
  for (int n = 0; n <= N; ++n) {
    out.push_back(plan.close(plan.lower(ps), pe, plan.upper(pn), pw));
    if (n == N) break;
    ps = mat_mul(ps, plan.south);
    pe = mat_mul(pe, plan.east);
    pn = mat_mul(pn, plan.north);
    pw = mat_mul(pw, plan.west);
  }
  return out;
}

struct TableInputs {
  FramePlan<Integer> plan;
  std::vector<IntMatrix> lower, upper, east, west;

  TableInputs(int a1, int a2, int b1, int b2, int M, int N, TilingMode mode) : plan(a1, a2, b1, b2, mode) {
    if (M < 0 || N < 0) throw std::invalid_argument("table bounds must be >= 0");
    for (const auto& p : powers_upto(plan.south, N)) lower.push_back(plan.lower(p));
    for (const auto& p : powers_upto(plan.north, N)) upper.push_back(plan.upper(p));
    east = powers_upto(plan.east, M);
    west = powers_upto(plan.west, M);
  }

  Integer entry(int m, int n) const {
    const auto mi = static_cast<std::size_t>(m), ni = static_cast<std::size_t>(n);
    return trace_of_product(mat_mul_serial(lower[ni], east[mi]), mat_mul_serial(upper[ni], west[mi]));
  }
};

IntTable empty_table(int M, int N) {
  return IntTable(static_cast<std::size_t>(M) + 1, std::vector<Integer>(static_cast<std::size_t>(N) + 1));
}

template <class W>
std::vector<W> cross_seq_impl(int a, int b, int N, TilingMode mode) {
  CrossSpec{a, b, 0}.validate();
  if (N < 0) return {};
  // Center is a columns wide and b rows tall.
  const Region center = build_rectangle(b, a);
  std::vector<Overhang> overhangs;
  int bit = 0;
  for (Side s : {Side::Left, Side::Right, Side::Down, Side::Up}) {
    for (auto& oh : side_overhangs(b, a, s, bit, true)) overhangs.push_back(oh);
    bit += side_length(b, a, s);
  }
  std::map<std::uint64_t, W> profiles;
  if constexpr (std::is_same_v<W, Integer>) {
    profiles = count_overhang_tilings(center, overhangs, mode);
  } else {
    profiles = weigh_overhang_tilings(center, overhangs, mode);
  }

  // Arm counts: entry [~X][full] of the n-th transfer power, for each
  // stick-out set X. Column vectors T^n e_full, advanced one step per n.
  auto arm_matrix = [&](int width, bool vertical) {
    auto tm = build_tm(width, mode, std::is_same_v<W, MultiPoly>);
    if constexpr (std::is_same_v<W, Integer>) {
      return tm->counts;
    } else {
      return vertical ? map_entries(tm->weights, [](const MultiPoly& p) { return p.swapped(kVarH, kVarV); })
                      : tm->weights;
    }
  };
  const RingMatrix<W> side_tm = arm_matrix(b, false);
  const RingMatrix<W> end_tm = arm_matrix(a, true);
  std::vector<W> side_vec(side_tm.rows(), ring_zero<W>());
  std::vector<W> end_vec(end_tm.rows(), ring_zero<W>());
  side_vec.back() = ring_one<W>();
  end_vec.back() = ring_one<W>();

  const std::uint64_t side_mask = (std::uint64_t{1} << b) - 1;
  const std::uint64_t end_mask = (std::uint64_t{1} << a) - 1;
  std::vector<W> out;
  for (int n = 0; n <= N; ++n) {
    W total = ring_zero<W>();
    for (const auto& [mask, w] : profiles) {
      const std::uint64_t left = mask & side_mask;
      const std::uint64_t right = (mask >> b) & side_mask;
      const std::uint64_t down = (mask >> (2 * b)) & end_mask;
      const std::uint64_t up = (mask >> (2 * b + a)) & end_mask;
      const W& l = side_vec[~left & side_mask];
      const W& r = side_vec[~right & side_mask];
      const W& d = end_vec[~down & end_mask];
      const W& u = end_vec[~up & end_mask];
      if (ring_is_zero(l) || ring_is_zero(r) || ring_is_zero(d) || ring_is_zero(u)) continue;
      W term = w * l;
      term = term * r;
      term = term * d;
      fused_add_product(total, term, u);
    }
    if constexpr (std::is_same_v<W, MultiPoly>) {
      MultiPoly typed(weight_arity(mode));
      typed += total;
      out.push_back(std::move(typed));
    } else {
      out.push_back(std::move(total));
    }
    if (n < N) {
      side_vec = mat_vec(side_tm, side_vec);
      end_vec = mat_vec(end_tm, end_vec);
    }
  }
  return out;
}

}  // namespace

int side_length(int a, int b, Side side) {
  return (side == Side::Up || side == Side::Down) ? b : a;
}

std::shared_ptr<const CornerTransfer> corner_transfer(int a, int b, Side s1, Side s2, TilingMode mode,
                                                      bool weighted) {
  if (s1 == s2) throw std::invalid_argument("corner_transfer: the two stick-out sides must differ");
  if (a < 1 || b < 1) throw std::invalid_argument("corner_transfer: dimensions must be >= 1");

  static std::mutex mu;
  static std::map<std::tuple<int, int, Side, Side, TilingMode, bool>, std::shared_ptr<const CornerTransfer>> cache;
  const auto key = std::make_tuple(a, b, s1, s2, mode, weighted);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  const int len1 = side_length(a, b, s1);
  const int len2 = side_length(a, b, s2);
  if (len1 + len2 > 62) throw std::invalid_argument("corner_transfer: rectangle too large");
  std::vector<Overhang> overhangs = side_overhangs(a, b, s1, 0, false);
  for (auto& oh : side_overhangs(a, b, s2, len1, true)) overhangs.push_back(oh);

  auto ct = std::make_shared<CornerTransfer>();
  ct->height = a;
  ct->width = b;
  ct->s1 = s1;
  ct->s2 = s2;
  ct->mode = mode;
  ct->weighted = weighted;
  const std::size_t rows = std::size_t{1} << len1;
  const std::size_t cols = std::size_t{1} << len2;
  const std::uint64_t low = rows - 1;
  ct->counts = IntMatrix(rows, cols);
  const Region rect = build_rectangle(a, b);
  if (weighted) {
    ct->weights = PolyMatrix(rows, cols);
    for (auto& [mask, w] : weigh_overhang_tilings(rect, overhangs, mode)) {
      ct->counts(mask & low, mask >> len1) = w.evaluate_at_ones().get_num();
      ct->weights(mask & low, mask >> len1) = std::move(w);
    }
  } else {
    for (auto& [mask, c] : count_overhang_tilings(rect, overhangs, mode)) ct->counts(mask & low, mask >> len1) = c;
  }

  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(ct)).first->second;
}

Integer frame_count(const FrameSpec& spec, TilingMode mode) { return frame_count_impl<Integer>(spec, mode); }

MultiPoly frame_count_weighted(const FrameSpec& spec, TilingMode mode) {
  MultiPoly out(weight_arity(mode));
  out += frame_count_impl<MultiPoly>(spec, mode);
  return out;
}

std::vector<Integer> frame_seq(int a1, int a2, int b1, int b2, int N, TilingMode mode) {
  if (N < 0) return {};
  return frame_seq_impl<Integer>(a1, a2, b1, b2, N, mode);
}

std::vector<MultiPoly> frame_seq_weighted(int a1, int a2, int b1, int b2, int N, TilingMode mode) {
  if (N < 0) return {};
  auto raw = frame_seq_impl<MultiPoly>(a1, a2, b1, b2, N, mode);
  std::vector<MultiPoly> out;
  for (auto& p : raw) {
    MultiPoly typed(weight_arity(mode));
    typed += p;
    out.push_back(std::move(typed));
  }
  return out;
}

IntTable frame_table(int a1, int a2, int b1, int b2, int M, int N, TilingMode mode) {
  const TableInputs in(a1, a2, b1, b2, M, N, mode);
  IntTable table = empty_table(M, N);
  const long cells = static_cast<long>(M + 1) * (N + 1);
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < cells; ++k) {
    const int m = static_cast<int>(k / (N + 1));
    const int n = static_cast<int>(k % (N + 1));
    table[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] = in.entry(m, n);
  }
  return table;
}

IntTable frame_table_serial(int a1, int a2, int b1, int b2, int M, int N, TilingMode mode) {
  const TableInputs in(a1, a2, b1, b2, M, N, mode);
  IntTable table = empty_table(M, N);
  for (int m = 0; m <= M; ++m) {
    for (int n = 0; n <= N; ++n) table[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] = in.entry(m, n);
  }
  return table;
}

std::vector<Integer> cross_seq(int a, int b, int N, TilingMode mode) { return cross_seq_impl<Integer>(a, b, N, mode); }

std::vector<MultiPoly> cross_seq_weighted(int a, int b, int N, TilingMode mode) {
  return cross_seq_impl<MultiPoly>(a, b, N, mode);
}

}  // namespace tilecount
