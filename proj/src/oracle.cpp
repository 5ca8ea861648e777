#include "zeroseq/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zeroseq/decomp.hpp"
#include "zeroseq/extremal.hpp"
#include "zeroseq/scan.hpp"
#include "zeroseq/thresholds.hpp"

namespace zeroseq {

std::uint64_t encode_pm1(const SignedSeq& f) {
  if (!f.is_pm1()) throw std::invalid_argument("encode_pm1: sequence must be +-1 valued");
  if (f.size() > 62) throw std::invalid_argument("encode_pm1: at most 62 positions");
  std::uint64_t bits = 0;
  for (int i = 0; i < f.size(); ++i)
    if (f.value(i + 1) > 0) bits |= 1ull << i;
  return bits;
}

SignedSeq decode_pm1(std::uint64_t bits, int n) {
  if (n < 1 || n > 62) throw std::invalid_argument("decode_pm1: need 1 <= n <= 62");
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = (bits >> i) & 1 ? 1 : -1;
  return SignedSeq(std::move(values), 1, 1);
}

namespace {

int thread_count(int workers) {
#ifdef _OPENMP
  return workers > 0 ? workers : omp_get_max_threads();
#else
  (void)workers;
  return 1;
#endif
}

void check_budget(int n, std::uint64_t budget) {
  if (n < 1 || n > 62) throw std::invalid_argument("oracle: enumeration length out of range");
  if ((1ull << n) > budget)
    throw std::runtime_error("oracle: enumeration budget exceeded (raise the cap to opt in)");
}

struct EnumShard {
  long long eligible = 0;
  std::vector<std::uint64_t> no_block;
};

// ---- bounded-window side ---------------------------------------------------

// Scans encodings in [lo, hi) at length n. exact_total selects |total| == q
// (extremal hunt below the threshold) instead of |total| <= q.
EnumShard scan_block_encodings(int n, int k, int t, int q, bool exact_total, std::uint64_t lo,
                               std::uint64_t hi) {
  EnumShard shard;
  const std::uint64_t window_mask = (k == 62) ? ~0ull >> 2 : (1ull << k) - 1;
  for (std::uint64_t x = lo; x < hi; ++x) {
    int ones = std::popcount(x);
    long long total = 2LL * ones - n;
    long long abs_total = total < 0 ? -total : total;
    if (exact_total ? abs_total != q : abs_total > q) continue;
    ++shard.eligible;
    int win = std::popcount(x & window_mask);
    bool found = std::abs(2 * win - k) <= t;
    for (int i = 0; !found && i + k < n; ++i) {
      win += static_cast<int>((x >> (i + k)) & 1) - static_cast<int>((x >> i) & 1);
      found = std::abs(2 * win - k) <= t;
    }
    if (!found) shard.no_block.push_back(x);
  }
  return shard;
}

EnumPhase merge_shards(int n, std::vector<EnumShard> shards) {
  EnumPhase phase;
  phase.n = n;
  phase.space = 1ull << n;
  for (auto& s : shards) {
    phase.eligible += s.eligible;
    phase.no_block_encodings.insert(phase.no_block_encodings.end(), s.no_block.begin(),
                                    s.no_block.end());
  }
  std::sort(phase.no_block_encodings.begin(), phase.no_block_encodings.end());
  phase.no_block = static_cast<long long>(phase.no_block_encodings.size());
  return phase;
}

EnumPhase run_block_phase(int n, int k, int t, int q, bool exact_total, int workers) {
  const std::uint64_t space = 1ull << n;
  const int nt = thread_count(workers);
  std::vector<EnumShard> shards(static_cast<std::size_t>(nt));
#pragma omp parallel for num_threads(nt) schedule(static)
  for (int w = 0; w < nt; ++w) {
    std::uint64_t lo = space / nt * w + std::min<std::uint64_t>(w, space % nt);
    std::uint64_t hi = lo + space / nt + (static_cast<std::uint64_t>(w) < space % nt ? 1 : 0);
    shards[static_cast<std::size_t>(w)] = scan_block_encodings(n, k, t, q, exact_total, lo, hi);
  }
  return merge_shards(n, std::move(shards));
}

EnumPhase run_block_phase_serial(int n, int k, int t, int q, bool exact_total) {
  std::vector<EnumShard> one;
  one.push_back(scan_block_encodings(n, k, t, q, exact_total, 0, 1ull << n));
  return merge_shards(n, std::move(one));
}

std::vector<std::uint64_t> family_encodings(std::vector<SignedSeq> family) {
  std::vector<std::uint64_t> enc;
  enc.reserve(family.size());
  for (const SignedSeq& f : family) enc.push_back(encode_pm1(f));
  std::sort(enc.begin(), enc.end());
  return enc;
}

BlockVerifyReport finish_block_report(int k, int t, int q, EnumPhase at, EnumPhase below) {
  BlockVerifyReport report;
  report.k = k;
  report.t = t;
  report.q = q;
  report.s_residue = residue_s(k, t, q);
  report.n_threshold = block_threshold(k, t, q);
  report.at_threshold = std::move(at);
  report.below = std::move(below);
  std::vector<std::uint64_t> family = family_encodings(enumerate_block_family(k, t, q));
  report.family_size = static_cast<long long>(family.size());
  report.sets_equal = family == report.below.no_block_encodings;
  report.pass = report.at_threshold.no_block == 0 && report.sets_equal;
  return report;
}

}  // namespace

BlockVerifyReport verify_block_threshold(int k, int t, int q, int workers, std::uint64_t budget) {
  long long threshold = block_threshold(k, t, q);
  if (threshold <= k)
    throw std::invalid_argument("verify_block_threshold: no extremal regime, threshold equals k");
  int n = static_cast<int>(threshold);
  check_budget(n, budget);
  return finish_block_report(k, t, q, run_block_phase(n, k, t, q, false, workers),
                             run_block_phase(n - 1, k, t, q, true, workers));
}

BlockVerifyReport verify_block_threshold_serial(int k, int t, int q, std::uint64_t budget) {
  long long threshold = block_threshold(k, t, q);
  if (threshold <= k)
    throw std::invalid_argument("verify_block_threshold: no extremal regime, threshold equals k");
  int n = static_cast<int>(threshold);
  check_budget(n, budget);
  return finish_block_report(k, t, q, run_block_phase_serial(n, k, t, q, false),
                             run_block_phase_serial(n - 1, k, t, q, true));
}

// ---- gap-block side ---------------------------------------------------------

namespace {

// Reachable chain sums as bitmasks, offset by +k: weights[p*(k+1)+j] is the
// set of sums of d-bounded ascending chains of j elements starting at p.
// Returns true as soon as a zero-sum size-k chain exists.
bool dp_zs_gap_bits(std::uint64_t x, int n, int d, int k, std::vector<std::uint64_t>& scratch) {
  if (k > n) return false;
  scratch.assign(static_cast<std::size_t>(n + 2) * (k + 1), 0);
  auto at = [&](int p, int j) -> std::uint64_t& {
    return scratch[static_cast<std::size_t>(p) * (k + 1) + j];
  };
  const std::uint64_t zero_bit = 1ull << k;
  bool found = false;
  for (int p = n; p >= 1 && !found; --p) {
    bool plus = (x >> (p - 1)) & 1;
    at(p, 1) = plus ? (zero_bit << 1) : (zero_bit >> 1);
    int reach = std::min(n, p + d);
    for (int j = 2; j <= k; ++j) {
      std::uint64_t acc = 0;
      for (int nxt = p + 1; nxt <= reach; ++nxt) acc |= at(nxt, j - 1);
      at(p, j) = plus ? (acc << 1) : (acc >> 1);
    }
    found = (at(p, k) & zero_bit) != 0;
  }
  return found;
}

void check_dp_params(const SignedSeq& f, int d, int k) {
  if (!f.is_pm1()) throw std::invalid_argument("dp_zs_gap: sequence must be +-1 valued");
  if (d < 1) throw std::invalid_argument("dp_zs_gap: need d >= 1");
  if (k < 1) throw std::invalid_argument("dp_zs_gap: need k >= 1");
  if (k > 31) throw std::invalid_argument("dp_zs_gap: k > 31 exceeds the bitmask weight range");
}

}  // namespace

bool dp_zs_gap_exists(const SignedSeq& f, int d, int k) {
  check_dp_params(f, d, k);
  if (k > f.size()) return false;
  if (k & 1) return false;  // odd chains have odd weight
  std::vector<std::uint64_t> scratch;
  return dp_zs_gap_bits(encode_pm1(f), f.size(), d, k, scratch);
}

std::optional<BlockWitness> dp_zs_gap_witness(const SignedSeq& f, int d, int k) {
  check_dp_params(f, d, k);
  const int n = f.size();
  if (k > n || (k & 1)) return std::nullopt;

  // Full table, then greedy left-to-right recovery of the least witness.
  std::vector<std::uint64_t> can(static_cast<std::size_t>(n + 2) * (k + 1), 0);
  auto at = [&](int p, int j) -> std::uint64_t& {
    return can[static_cast<std::size_t>(p) * (k + 1) + j];
  };
  const std::uint64_t x = encode_pm1(f);
  for (int p = n; p >= 1; --p) {
    bool plus = (x >> (p - 1)) & 1;
    at(p, 1) = plus ? (1ull << (k + 1)) : (1ull << (k - 1));
    int reach = std::min(n, p + d);
    for (int j = 2; j <= k; ++j) {
      std::uint64_t acc = 0;
      for (int nxt = p + 1; nxt <= reach; ++nxt) acc |= at(nxt, j - 1);
      at(p, j) = plus ? (acc << 1) : (acc >> 1);
    }
  }

  int start = 0;
  for (int p = 1; p <= n && !start; ++p)
    if (at(p, k) & (1ull << k)) start = p;
  if (!start) return std::nullopt;

  BlockWitness out;
  out.kind = BlockKind::Gap;
  out.param = d;
  out.indices.push_back(start);
  int target = k;  // offset form of the remaining sum, including the chosen head
  int cur = start;
  for (int j = k; j >= 2; --j) {
    target -= f.value(cur) > 0 ? 1 : -1;
    int reach = std::min(n, cur + d);
    int chosen = 0;
    for (int nxt = cur + 1; nxt <= reach && !chosen; ++nxt) {
      if (target >= 0 && target <= 2 * k && (at(nxt, j - 1) & (1ull << target))) chosen = nxt;
    }
    if (!chosen) throw std::logic_error("dp_zs_gap_witness: backtracking lost the chain");
    out.indices.push_back(chosen);
    cur = chosen;
  }
  out.weight = f.weight_of(out.indices);
  if (out.weight != 0 || !witness_consistent(out, f))
    throw std::logic_error("dp_zs_gap_witness: recovered witness is inconsistent");
  return out;
}

namespace {

EnumShard scan_gap_encodings(int n, int d, int k, long long bound_num, long long bound_den,
                             bool exact_total, std::uint64_t lo, std::uint64_t hi) {
  EnumShard shard;
  std::vector<std::uint64_t> scratch;
  for (std::uint64_t x = lo; x < hi; ++x) {
    long long total = 2LL * std::popcount(x) - n;
    long long abs_total = total < 0 ? -total : total;
    // Filter |total| <= bound (or ==), with bound = bound_num / bound_den.
    long long lhs = abs_total * bound_den;
    if (exact_total ? lhs != bound_num : lhs > bound_num) continue;
    ++shard.eligible;
    if (!dp_zs_gap_bits(x, n, d, k, scratch)) shard.no_block.push_back(x);
  }
  return shard;
}

EnumPhase run_gap_phase(int n, int d, int k, bool exact_total, int workers) {
  const std::uint64_t space = 1ull << n;
  const long long bound_num = static_cast<long long>(d - 1) * n;
  const long long bound_den = d + 1;
  const int nt = thread_count(workers);
  std::vector<EnumShard> shards(static_cast<std::size_t>(nt));
#pragma omp parallel for num_threads(nt) schedule(static)
  for (int w = 0; w < nt; ++w) {
    std::uint64_t lo = space / nt * w + std::min<std::uint64_t>(w, space % nt);
    std::uint64_t hi = lo + space / nt + (static_cast<std::uint64_t>(w) < space % nt ? 1 : 0);
    shards[static_cast<std::size_t>(w)] = scan_gap_encodings(n, d, k, bound_num, bound_den,
                                                             exact_total, lo, hi);
  }
  return merge_shards(n, std::move(shards));
}

EnumPhase run_gap_phase_serial(int n, int d, int k, bool exact_total) {
  std::vector<EnumShard> one;
  one.push_back(scan_gap_encodings(n, d, k, static_cast<long long>(d - 1) * n, d + 1, exact_total,
                                   0, 1ull << n));
  return merge_shards(n, std::move(one));
}

GapVerifyReport finish_gap_report(int d, int k, EnumPhase at, EnumPhase below) {
  GapVerifyReport report;
  report.d = d;
  report.k = k;
  report.s_residue = gap_residue(k);
  report.n_threshold = gap_threshold(d, k);
  report.at_threshold = std::move(at);
  report.below = std::move(below);
  std::vector<std::uint64_t> family = family_encodings(enumerate_gap_family(d, k));
  report.family_size = static_cast<long long>(family.size());
  report.sets_equal = family == report.below.no_block_encodings;
  report.pass = report.at_threshold.no_block == 0 && report.sets_equal;
  return report;
}

void check_gap_verify_params(int d, int k) {
  if (k < 6) throw std::invalid_argument("verify_gap_threshold: sharpness holds for k >= 6 only");
  gap_params(d, k);  // validates d and parity
}

}  // namespace

GapVerifyReport verify_gap_threshold(int d, int k, int workers, std::uint64_t budget) {
  check_gap_verify_params(d, k);
  int n = static_cast<int>(gap_threshold(d, k));
  check_budget(n, budget);
  return finish_gap_report(d, k, run_gap_phase(n, d, k, false, workers),
                           run_gap_phase(n - 1, d, k, true, workers));
}

GapVerifyReport verify_gap_threshold_serial(int d, int k, std::uint64_t budget) {
  check_gap_verify_params(d, k);
  int n = static_cast<int>(gap_threshold(d, k));
  check_budget(n, budget);
  return finish_gap_report(d, k, run_gap_phase_serial(n, d, k, false),
                           run_gap_phase_serial(n - 1, d, k, true));
}

// ---- exact-window interpolation sweep ---------------------------------------

namespace {

struct SweepShard {
  long long straddles = 0;
  long long misses = 0;
};

SweepShard sweep_encodings(int n, std::uint64_t lo, std::uint64_t hi) {
  SweepShard shard;
  for (std::uint64_t x = lo; x < hi; ++x) {
    SignedSeq f = decode_pm1(x, n);
    for (int k = 1; k <= n; ++k) {
      const std::uint64_t mask = (1ull << k) - 1;
      int ones = std::popcount(x & mask);
      int wmin = 2 * ones - k, wmax = wmin;
      for (int i = 0; i + k < n; ++i) {
        ones += static_cast<int>((x >> (i + k)) & 1) - static_cast<int>((x >> i) & 1);
        int w = 2 * ones - k;
        wmin = std::min(wmin, w);
        wmax = std::max(wmax, w);
      }
      for (int t = wmin + 2; t <= wmax - 2; t += 2) {
        ++shard.straddles;
        auto hit = scan_exact_block(f, k, t);
        if (!hit || hit->weight != t || !witness_consistent(*hit, f)) ++shard.misses;
      }
    }
  }
  return shard;
}

InterpolationSweepReport finish_sweep(int max_n, std::vector<SweepShard> shards, long long sequences) {
  InterpolationSweepReport report;
  report.max_n = max_n;
  report.sequences = sequences;
  for (const auto& s : shards) {
    report.straddle_cases += s.straddles;
    report.misses += s.misses;
  }
  report.pass = report.misses == 0;
  return report;
}

}  // namespace

InterpolationSweepReport verify_exact_block_interpolation(int max_n, int workers) {
  if (max_n < 1 || max_n > 24)
    throw std::invalid_argument("verify_exact_block_interpolation: need 1 <= max_n <= 24");
  const int nt = thread_count(workers);
  std::vector<SweepShard> shards(static_cast<std::size_t>(nt));
  long long sequences = 0;
  for (int n = 1; n <= max_n; ++n) {
    const std::uint64_t space = 1ull << n;
    sequences += static_cast<long long>(space);
#pragma omp parallel for num_threads(nt) schedule(static)
    for (int w = 0; w < nt; ++w) {
      std::uint64_t lo = space / nt * w + std::min<std::uint64_t>(w, space % nt);
      std::uint64_t hi = lo + space / nt + (static_cast<std::uint64_t>(w) < space % nt ? 1 : 0);
      SweepShard part = sweep_encodings(n, lo, hi);
      shards[static_cast<std::size_t>(w)].straddles += part.straddles;
      shards[static_cast<std::size_t>(w)].misses += part.misses;
    }
  }
  return finish_sweep(max_n, std::move(shards), sequences);
}

InterpolationSweepReport verify_exact_block_interpolation_serial(int max_n) {
  if (max_n < 1 || max_n > 24)
    throw std::invalid_argument("verify_exact_block_interpolation: need 1 <= max_n <= 24");
  std::vector<SweepShard> shards(1);
  long long sequences = 0;
  for (int n = 1; n <= max_n; ++n) {
    sequences += 1LL << n;
    SweepShard part = sweep_encodings(n, 0, 1ull << n);
    shards[0].straddles += part.straddles;
    shards[0].misses += part.misses;
  }
  return finish_sweep(max_n, std::move(shards), sequences);
}

// ---- decomposition contract --------------------------------------------------

namespace {

// Exhaustive feasibility: does some one-cell-per-layer partition keep every
// path weight inside [lo, hi]? Paths are interchangeable, so the search runs
// as a dynamic program over sorted multisets of partial path weights; layer
// arrangements are the distinct permutations of the layer's cell multiset.
// States that cannot reach the band through the remaining layers are cut.
bool exhaustive_band_feasible(const LayeredInstance& inst, long long lo, long long hi) {
  const int n = inst.n, m = inst.m;
  std::vector<long long> suffix_min(static_cast<std::size_t>(m) + 1, 0);
  std::vector<long long> suffix_max(static_cast<std::size_t>(m) + 1, 0);
  for (int layer = m - 1; layer >= 0; --layer) {
    long long cmin = inst.cells[static_cast<std::size_t>(layer)][0];
    long long cmax = cmin;
    for (int v : inst.cells[static_cast<std::size_t>(layer)]) {
      cmin = std::min<long long>(cmin, v);
      cmax = std::max<long long>(cmax, v);
    }
    suffix_min[static_cast<std::size_t>(layer)] = suffix_min[static_cast<std::size_t>(layer) + 1] + cmin;
    suffix_max[static_cast<std::size_t>(layer)] = suffix_max[static_cast<std::size_t>(layer) + 1] + cmax;
  }
  auto viable = [&](const std::vector<long long>& weights, int next_layer) {
    for (long long w : weights)
      if (w + suffix_min[static_cast<std::size_t>(next_layer)] > hi ||
          w + suffix_max[static_cast<std::size_t>(next_layer)] < lo)
        return false;
    return true;
  };

  std::vector<long long> first(inst.cells[0].begin(), inst.cells[0].end());
  std::sort(first.begin(), first.end());
  std::set<std::vector<long long>> states;
  if (viable(first, 1)) states.insert(std::move(first));

  std::vector<long long> arrangement(static_cast<std::size_t>(n));
  for (int layer = 1; layer < m; ++layer) {
    std::set<std::vector<long long>> next;
    for (int j = 0; j < n; ++j) arrangement[static_cast<std::size_t>(j)] = inst.cells[static_cast<std::size_t>(layer)][static_cast<std::size_t>(j)];
    std::sort(arrangement.begin(), arrangement.end());
    std::vector<std::vector<long long>> arrangements;
    do {
      arrangements.push_back(arrangement);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    for (const auto& state : states) {
      for (const auto& arr : arrangements) {
        std::vector<long long> merged(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) merged[static_cast<std::size_t>(j)] = state[static_cast<std::size_t>(j)] + arr[static_cast<std::size_t>(j)];
        std::sort(merged.begin(), merged.end());
        if (viable(merged, layer + 1)) next.insert(std::move(merged));
      }
    }
    states = std::move(next);
    if (states.empty()) return false;
  }
  for (const auto& state : states) {
    bool ok = true;
    for (long long w : state) ok = ok && w >= lo && w <= hi;
    if (ok) return true;
  }
  return false;
}

// Validates one decompose run against every contract it must satisfy.
// Returns false and leaves counters untouched on the first violation.
bool check_instance(const LayeredInstance& inst, DecompVerifyReport& report, bool cross_check) {
  PathDecomposition dec = decompose(inst);
  const int n = inst.n, m = inst.m;
  if (static_cast<int>(dec.paths.size()) != n) return false;

  Rational q = inst.per_path_mean();
  long long lam = lambda_floor(q, inst.r, inst.s, m);
  long long Lam = lambda_ceil(q, inst.r, inst.s, m);
  if (dec.lambda != lam || dec.Lambda != Lam) return false;

  long long sum = 0;
  bool hit_lam = false, hit_Lam = false;
  for (std::size_t j = 0; j < dec.paths.size(); ++j) {
    if (static_cast<int>(dec.paths[j].size()) != m) return false;
    if (path_weight(inst, dec.paths[j]) != dec.weights[j]) return false;
    if (dec.weights[j] < lam || dec.weights[j] > Lam) return false;
    sum += dec.weights[j];
    hit_lam |= dec.weights[j] == lam;
    hit_Lam |= dec.weights[j] == Lam;
  }
  if (sum != inst.total()) return false;
  // Partition: each layer's columns must be used exactly once.
  for (int layer = 0; layer < m; ++layer) {
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const auto& path : dec.paths) {
      int col = path[static_cast<std::size_t>(layer)];
      if (col < 0 || col >= n || used[static_cast<std::size_t>(col)]) return false;
      used[static_cast<std::size_t>(col)] = true;
    }
  }

  if (lam < Lam) {
    if (hit_lam) ++report.lambda_attained;
    if (hit_Lam) ++report.Lambda_attained;
  }

  if (zero_in_level_set(inst.r, inst.s, m) && inst.total() == 0) {
    ++report.zs_checked;
    PathDecomposition zs = zs_decompose(inst);
    long long g = std::gcd(inst.r, inst.s);
    long long qq = g * m / (inst.r + inst.s);
    long long want_s = qq * inst.r / g;   // cells valued +s per path
    long long want_r = qq * inst.s / g;   // cells valued -r per path
    for (const auto& path : zs.paths) {
      long long cs = 0, cr = 0;
      for (int layer = 0; layer < m; ++layer) {
        int v = inst.cells[static_cast<std::size_t>(layer)][static_cast<std::size_t>(path[static_cast<std::size_t>(layer)])];
        if (v > 0) ++cs;
        else ++cr;
      }
      if (cs != want_s || cr != want_r) return false;
    }
  }

  if (inst.r == 1 && inst.s == 1) {
    ++report.band_checked;
    auto band = pm1_band(inst);
    for (long long w : dec.weights)
      if (w != band.first && w != band.second) return false;
  }

  if (cross_check) {
    report.cross_checked = true;
    if (!exhaustive_band_feasible(inst, lam, Lam)) return false;
  }
  return true;
}

}  // namespace

DecompVerifyReport verify_decomposition(int n, int m, int r, int s, int trials, std::uint64_t seed,
                                        bool exhaustive) {
  if (n < 1 || m < 1 || r < 1 || s < 1)
    throw std::invalid_argument("verify_decomposition: n, m, r, s must be positive");
  DecompVerifyReport report;
  report.n = n;
  report.m = m;
  report.r = r;
  report.s = s;
  report.trials = trials;

  const bool small = n <= 4 && m <= 5;
  int cross_budget = small ? 20 : 0;

  auto run_one = [&](const LayeredInstance& inst) {
    bool cross = cross_budget > 0;
    if (cross) --cross_budget;
    if (!check_instance(inst, report, cross)) ++report.violations;
  };

  const long long cells = static_cast<long long>(n) * m;
  if (exhaustive) {
    if (cells > 16) throw std::invalid_argument("verify_decomposition: exhaustive mode needs n*m <= 16");
    std::vector<int> vals(static_cast<std::size_t>(cells));
    for (std::uint64_t pattern = 0; pattern < (1ull << cells); ++pattern) {
      for (long long i = 0; i < cells; ++i)
        vals[static_cast<std::size_t>(i)] = (pattern >> i) & 1 ? s : -r;
      run_one(LayeredInstance::from_values(vals, n, m, r, s));
      ++report.exhaustive_instances;
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<int> vals(static_cast<std::size_t>(cells));
  for (int trial = 0; trial < trials; ++trial) {
    for (long long i = 0; i < cells; ++i) vals[static_cast<std::size_t>(i)] = (rng() & 1) ? s : -r;
    run_one(LayeredInstance::from_values(vals, n, m, r, s));
  }

  report.pass = report.violations == 0;
  return report;
}

// ---- arithmetic-progression proposition ---------------------------------------

ApVerifyReport verify_ap_proposition(int k) {
  if (k < 6 || k % 4 != 2)
    throw std::invalid_argument("verify_ap_proposition: need k == 2 (mod 4), k >= 6");
  const int half = k / 2;
  bool composite = false;
  for (int dv = 2; dv < half; ++dv)
    if (half % dv == 0) composite = true;
  if (!composite) throw std::invalid_argument("verify_ap_proposition: k/2 must be composite");

  ApVerifyReport report;
  report.k = k;
  report.n = static_cast<long long>(k) * k / 4 - 1;
  if (block_threshold(k, 0, 0) != report.n + 1)
    throw std::logic_error("verify_ap_proposition: threshold does not match k^2/4");

  // The unique balanced pattern without a zero-sum k-window: runs of k/2 - 1
  // minus ones at the front of every k-block.
  const int n = static_cast<int>(report.n);
  const int r = half - 1;
  const int m = n / k;
  std::vector<int> values(static_cast<std::size_t>(n), 1);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j < r; ++j) values[static_cast<std::size_t>(i) * k + j] = -1;
  SignedSeq f(std::move(values), 1, 1);
  if (f.total() != 0) throw std::logic_error("verify_ap_proposition: pattern is not balanced");
  if (!is_block_family_member(f, k, 0, 0))
    throw std::logic_error("verify_ap_proposition: pattern is not the extremal member");

  report.block_free = !scan_bounded_block(f, k, 0).has_value();

  auto ap = find_zs_ap(f, k);
  bool divisors_ok = true;
  for (int dv = 2; dv < half; ++dv) {
    if (half % dv != 0) continue;
    report.divisors_checked.push_back(dv);
    std::vector<int> indices(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) indices[static_cast<std::size_t>(j)] = 1 + j * dv;
    if (f.weight_of(indices) != 0) divisors_ok = false;
  }

  if (ap) report.ap = *ap;
  report.pass = report.block_free && ap.has_value() && ap->weight == 0 &&
                witness_consistent(*ap, f) && divisors_ok && !report.divisors_checked.empty();
  return report;
}

}  // namespace zeroseq
