#include "tilecount/transfer.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace tilecount {

namespace {

std::atomic<int> g_width_cap{8};

void place(std::uint32_t avail, int cell, int width, TilingMode mode, std::uint32_t protruding, MultiPoly weight,
           std::map<std::uint32_t, MultiPoly>& out) {
  while (cell < width && !((avail >> cell) & 1U)) ++cell;
  if (cell == width) {
    const std::uint32_t next = ~protruding & ColumnState::full(width).bits;
    out[next] += weight;
    return;
  }
  const int arity = weight_arity(mode);
  const std::uint32_t bit = std::uint32_t{1} << cell;
  // Horizontal domino into the next column.
  place(avail & ~bit, cell + 1, width, mode, protruding | bit, weight * MultiPoly::variable(kVarH, arity), out);
  // Vertical domino with the cell above.
  if (cell + 1 < width && ((avail >> (cell + 1)) & 1U)) {
    place(avail & ~bit & ~(bit << 1), cell + 2, width, mode, protruding, weight * MultiPoly::variable(kVarV, arity),
          out);
  }
  if (mode == TilingMode::MonomerDimer) {
    place(avail & ~bit, cell + 1, width, mode, protruding, weight * MultiPoly::variable(kVarM, arity), out);
  }
}

void fill_row(TransferMatrix& tm, std::uint32_t state) {
  for (auto& f : followers({state, tm.width}, tm.mode)) {
    tm.counts(state, f.next.index()) = f.weight.evaluate_at_ones().get_num();
    if (tm.weighted) tm.weights(state, f.next.index()) = std::move(f.weight);
  }
}

TransferMatrix blank_tm(int m, TilingMode mode, bool weighted) {
  if (m < 1 || m > transfer_width_cap()) {
    throw std::invalid_argument("transfer width " + std::to_string(m) + " outside [1, " +
                                std::to_string(transfer_width_cap()) + "]");
  }
  const std::size_t dim = std::size_t{1} << m;
  TransferMatrix tm;
  tm.width = m;
  tm.mode = mode;
  tm.weighted = weighted;
  tm.counts = IntMatrix(dim, dim);
  if (weighted) tm.weights = PolyMatrix(dim, dim);
  return tm;
}

}  // namespace

ColumnState ColumnState::of(std::initializer_list<int> cells, int width) {
  ColumnState s{0, width};
  for (int c : cells) {
    if (c < 1 || c > width) throw std::invalid_argument("column cell out of range");
    s.bits |= std::uint32_t{1} << (c - 1);
  }
  return s;
}

std::vector<Follower> followers(ColumnState state, TilingMode mode) {
  if (state.width < 1 || state.width > 30 || (state.bits & ~ColumnState::full(state.width).bits) != 0) {
    throw std::invalid_argument("invalid column state");
  }
  std::map<std::uint32_t, MultiPoly> agg;
  place(state.bits, 0, state.width, mode, 0, MultiPoly::constant(1, weight_arity(mode)), agg);
  std::vector<Follower> out;
  out.reserve(agg.size());
  for (auto& [bits, w] : agg) out.push_back({{bits, state.width}, std::move(w)});
  return out;
}

int transfer_width_cap() { return g_width_cap.load(); }

void set_transfer_width_cap(int cap) {
  if (cap < 1 || cap > 16) throw std::invalid_argument("width cap must be in [1, 16]");
  g_width_cap.store(cap);
}

TransferMatrix build_tm_serial(int m, TilingMode mode, bool weighted) {
  TransferMatrix tm = blank_tm(m, mode, weighted);
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << m); ++s) fill_row(tm, s);
  return tm;
}

std::shared_ptr<const TransferMatrix> build_tm(int m, TilingMode mode, bool weighted) {
  static std::mutex mu;
  static std::map<std::tuple<int, TilingMode, bool>, std::shared_ptr<const TransferMatrix>> cache;
  const auto key = std::make_tuple(m, mode, weighted);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto tm = std::make_shared<TransferMatrix>(blank_tm(m, mode, weighted));
  const long dim = 1L << m;
#pragma omp parallel for schedule(dynamic) if (dim >= 64)
  for (long s = 0; s < dim; ++s) fill_row(*tm, static_cast<std::uint32_t>(s));

  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(tm)).first->second;
}

std::vector<Integer> seq_rect(int m, int N, TilingMode mode) {
  auto tm = build_tm(m, mode, false);
  const std::size_t full = ColumnState::full(m).index();
  std::vector<Integer> v(tm->counts.rows(), Integer(0));
  v[full] = 1;
  std::vector<Integer> out;
  for (int n = 0; n <= N; ++n) {
    out.push_back(v[full]);
    if (n < N) v = vec_mat(v, tm->counts);
  }
  return out;
}

std::vector<MultiPoly> seq_rect_weighted(int m, int N, TilingMode mode) {
  auto tm = build_tm(m, mode, true);
  const std::size_t full = ColumnState::full(m).index();
  std::vector<MultiPoly> v(tm->weights.rows());
  v[full] = MultiPoly::constant(1, weight_arity(mode));
  std::vector<MultiPoly> out;
  for (int n = 0; n <= N; ++n) {
    MultiPoly term(weight_arity(mode));
    term += v[full];
    out.push_back(std::move(term));
    if (n < N) v = vec_mat(v, tm->weights);
  }
  return out;
}

}  // namespace tilecount
