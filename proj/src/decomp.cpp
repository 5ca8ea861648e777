#include "zeroseq/decomp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zeroseq/thresholds.hpp"

namespace zeroseq {

LayeredInstance LayeredInstance::from_values(std::span<const int> vals, int n, int m, int r, int s) {
  if (n < 1 || m < 1) throw std::invalid_argument("LayeredInstance: n and m must be positive");
  if (r < 1 || s < 1) throw std::invalid_argument("LayeredInstance: r and s must be positive");
  if (static_cast<long long>(vals.size()) != static_cast<long long>(n) * m)
    throw std::invalid_argument("LayeredInstance: need exactly n*m values");
  LayeredInstance inst;
  inst.n = n;
  inst.m = m;
  inst.r = r;
  inst.s = s;
  inst.cells.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(n)));
  for (int layer = 0; layer < m; ++layer) {
    for (int col = 0; col < n; ++col) {
      int v = vals[static_cast<std::size_t>(layer) * n + col];
      if (v != -r && v != s) throw std::invalid_argument("LayeredInstance: cell outside {-r, s}");
      inst.cells[static_cast<std::size_t>(layer)][static_cast<std::size_t>(col)] = v;
    }
  }
  return inst;
}

long long LayeredInstance::total() const {
  long long sum = 0;
  for (const auto& layer : cells)
    for (int v : layer) sum += v;
  return sum;
}

long long path_weight(const LayeredInstance& inst, const PathSel& path) {
  if (static_cast<int>(path.size()) != inst.m)
    throw std::invalid_argument("path_weight: path must pick one cell per layer");
  long long w = 0;
  for (int layer = 0; layer < inst.m; ++layer) {
    int col = path[static_cast<std::size_t>(layer)];
    if (col < 0 || col >= inst.n) throw std::out_of_range("path_weight: column out of range");
    w += inst.cells[static_cast<std::size_t>(layer)][static_cast<std::size_t>(col)];
  }
  return w;
}

PathSel path_interpolate(const LayeredInstance& inst, const PathSel& P, const PathSel& Q, long long p) {
  long long wp = path_weight(inst, P);
  long long wq = path_weight(inst, Q);
  long long lo = std::min(wp, wq), hi = std::max(wp, wq);
  if (p < lo || p > hi)
    throw std::invalid_argument("path_interpolate: target outside the two path weights");
  long long rm = static_cast<long long>(inst.r) * inst.m;
  if ((p + rm) % (inst.r + inst.s) != 0)
    throw std::invalid_argument("path_interpolate: target not an achievable level");

  // Swapping one layer changes the weight by 0 or +-(r+s); every level
  // between the endpoints is therefore hit along the swap walk.
  PathSel cur = P;
  long long w = wp;
  if (w == p) return cur;
  for (int layer = 0; layer < inst.m; ++layer) {
    auto& row = inst.cells[static_cast<std::size_t>(layer)];
    w += row[static_cast<std::size_t>(Q[static_cast<std::size_t>(layer)])] -
         row[static_cast<std::size_t>(cur[static_cast<std::size_t>(layer)])];
    cur[static_cast<std::size_t>(layer)] = Q[static_cast<std::size_t>(layer)];
    if (w == p) return cur;
  }
  throw std::logic_error("path_interpolate: swap walk missed a guaranteed level");
}

PathDecomposition decompose(const LayeredInstance& inst) {
  const int n = inst.n;
  const int m = inst.m;
  Rational q = inst.per_path_mean();
  const long long lam = lambda_floor(q, inst.r, inst.s, m);
  const long long Lam = lambda_ceil(q, inst.r, inst.s, m);

  std::vector<PathSel> active(static_cast<std::size_t>(n), PathSel(static_cast<std::size_t>(m)));
  for (int j = 0; j < n; ++j)
    for (int layer = 0; layer < m; ++layer) active[static_cast<std::size_t>(j)][static_cast<std::size_t>(layer)] = j;
  std::vector<long long> weights(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) weights[static_cast<std::size_t>(j)] = path_weight(inst, active[static_cast<std::size_t>(j)]);

  PathDecomposition out;
  out.lambda = lam;
  out.Lambda = Lam;
  long long total_rem = inst.total();
  int n_rem = n;

  while (n_rem > 0) {
    Rational q_cur(total_rem, n_rem);
    long long lam_cur = lambda_floor(q_cur, inst.r, inst.s, m);
    long long Lam_cur = lambda_ceil(q_cur, inst.r, inst.s, m);
    // Peeling a path keeps the running mean inside the original band; the
    // recomputed bracket may shrink onto one end but never escapes it.
    if (lam_cur < lam || Lam_cur > Lam)
      throw std::logic_error("decompose: band escaped across removals");

    bool all_in_band = true;
    for (int j = 0; j < n_rem; ++j)
      if (weights[static_cast<std::size_t>(j)] < lam_cur || weights[static_cast<std::size_t>(j)] > Lam_cur) {
        all_in_band = false;
        break;
      }
    if (all_in_band) {
      for (int j = 0; j < n_rem; ++j) {
        out.paths.push_back(std::move(active[static_cast<std::size_t>(j)]));
        out.weights.push_back(weights[static_cast<std::size_t>(j)]);
      }
      break;
    }

    int imax = 0, imin = 0;
    for (int j = 1; j < n_rem; ++j) {
      if (weights[static_cast<std::size_t>(j)] > weights[static_cast<std::size_t>(imax)]) imax = j;
      if (weights[static_cast<std::size_t>(j)] < weights[static_cast<std::size_t>(imin)]) imin = j;
    }
    // Pin the peeled path to the nearer band end; ties take the lower end.
    bool take_low =
        static_cast<__int128>(2) * total_rem <= static_cast<__int128>(lam_cur + Lam_cur) * n_rem;
    long long target = take_low ? lam_cur : Lam_cur;

    PathSel star = path_interpolate(inst, active[static_cast<std::size_t>(imin)],
                                    active[static_cast<std::size_t>(imax)], target);
    PathSel leftover(static_cast<std::size_t>(m));
    for (int layer = 0; layer < m; ++layer) {
      int a = active[static_cast<std::size_t>(imin)][static_cast<std::size_t>(layer)];
      int b = active[static_cast<std::size_t>(imax)][static_cast<std::size_t>(layer)];
      leftover[static_cast<std::size_t>(layer)] = star[static_cast<std::size_t>(layer)] == a ? b : a;
    }

    int hi_idx = std::max(imax, imin), lo_idx = std::min(imax, imin);
    active.erase(active.begin() + hi_idx);
    weights.erase(weights.begin() + hi_idx);
    active.erase(active.begin() + lo_idx);
    weights.erase(weights.begin() + lo_idx);
    active.push_back(std::move(leftover));
    weights.push_back(path_weight(inst, active.back()));

    out.paths.push_back(std::move(star));
    out.weights.push_back(target);
    total_rem -= target;
    n_rem -= 1;
  }
  return out;
}

PathDecomposition zs_decompose(const LayeredInstance& inst) {
  if (!zero_in_level_set(inst.r, inst.s, inst.m))
    throw std::invalid_argument("zs_decompose: (r+s)/gcd(r,s) must divide m");
  if (inst.total() != 0) throw std::invalid_argument("zs_decompose: total weight must be zero");
  PathDecomposition dec = decompose(inst);
  for (long long w : dec.weights)
    if (w != 0) throw std::logic_error("zs_decompose: nonzero path weight despite zero band");
  return dec;
}

std::pair<long long, long long> pm1_band(const LayeredInstance& inst) {
  if (inst.r != 1 || inst.s != 1) throw std::invalid_argument("pm1_band: requires r == s == 1");
  Rational q = inst.per_path_mean();
  long long k = rational_ceil(q);
  bool same_parity = ((inst.m - k) % 2 + 2) % 2 == 0;
  if (same_parity) return {k - 2, k};
  return {k - 1, k + 1};
}

std::vector<BlockWitness> decompose_interval(const SignedSeq& f, int n, int m) {
  if (static_cast<long long>(f.size()) != static_cast<long long>(n) * m)
    throw std::invalid_argument("decompose_interval: sequence length must be n*m");
  LayeredInstance inst = LayeredInstance::from_values(f.values(), n, m, f.r(), f.s());
  PathDecomposition dec = decompose(inst);
  std::vector<BlockWitness> out;
  out.reserve(dec.paths.size());
  for (std::size_t j = 0; j < dec.paths.size(); ++j) {
    BlockWitness w;
    w.kind = BlockKind::Gap;
    w.param = 2 * n - 1;
    w.indices.reserve(static_cast<std::size_t>(m));
    for (int layer = 0; layer < m; ++layer)
      w.indices.push_back(layer * n + dec.paths[j][static_cast<std::size_t>(layer)] + 1);
    w.weight = dec.weights[j];
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace zeroseq
