#include "zeroseq/scan.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zeroseq/oracle.hpp"

namespace zeroseq {

namespace {

void require_pm1(const SignedSeq& f, const char* where) {
  if (!f.is_pm1()) throw std::invalid_argument(std::string(where) + ": sequence must be +-1 valued");
}

BlockWitness contiguous_witness(int start, int k, long long w) {
  BlockWitness out;
  out.indices.resize(k);
  std::iota(out.indices.begin(), out.indices.end(), start);
  out.kind = BlockKind::Contiguous;
  out.param = 1;
  out.weight = w;
  return out;
}

}  // namespace

std::optional<BlockWitness> scan_exact_block(const SignedSeq& f, int k, int t) {
  require_pm1(f, "scan_exact_block");
  if (k < 1 || k > f.size()) throw std::invalid_argument("scan_exact_block: need 1 <= k <= n");
  if (t <= -k || t >= k) throw std::invalid_argument("scan_exact_block: need |t| < k");
  if (((k - t) % 2 + 2) % 2 != 0) throw std::invalid_argument("scan_exact_block: need t == k (mod 2)");
  for (int i = 1; i + k - 1 <= f.size(); ++i) {
    long long w = f.window_weight(i, k);
    if (w == t) return contiguous_witness(i, k, w);
  }
  return std::nullopt;
}

std::optional<BlockWitness> scan_bounded_block(const SignedSeq& f, int k, int t) {
  require_pm1(f, "scan_bounded_block");
  if (k < 1 || k > f.size()) throw std::invalid_argument("scan_bounded_block: need 1 <= k <= n");
  if (t < 0 || t >= k) throw std::invalid_argument("scan_bounded_block: need 0 <= t < k");
  if ((k - t) % 2 != 0) throw std::invalid_argument("scan_bounded_block: need t == k (mod 2)");
  for (int i = 1; i + k - 1 <= f.size(); ++i) {
    long long w = f.window_weight(i, k);
    if (w >= -t && w <= t) return contiguous_witness(i, k, w);
  }
  return std::nullopt;
}

std::optional<BlockWitness> find_zs_gap_block_construction(const SignedSeq& f, int d, int k) {
  require_pm1(f, "find_zs_gap_block");
  if (d < 2) throw std::invalid_argument("find_zs_gap_block: need d >= 2");
  if (k < 2 || (k & 1)) throw std::invalid_argument("find_zs_gap_block: k must be even and >= 2");
  if (k > f.size()) throw std::invalid_argument("find_zs_gap_block: need k <= n");

  const int n = f.size();
  // Orient so the surplus sign is +1.
  const bool flipped = f.total() < 0;
  auto val = [&](int pos) { return flipped ? -f.value(pos) : f.value(pos); };
  const long long surplus = flipped ? -f.total() : f.total();

  // Residue class x == i (mod d) carrying the fewest +1s; ties to smallest i.
  std::vector<long long> ones_per_class(d, 0);
  for (int x = 1; x <= n; ++x)
    if (val(x) > 0) ++ones_per_class[x % d];
  int best_class = 1 % d;
  for (int i = 1; i <= d; ++i)
    if (ones_per_class[i % d] < ones_per_class[best_class]) best_class = i % d;

  // Drop the first `surplus` +1s outside the chosen class. Every member of
  // the class survives, so consecutive survivors are at most d apart.
  std::vector<int> survivors;
  survivors.reserve(n);
  long long to_delete = surplus;
  for (int x = 1; x <= n; ++x) {
    if (to_delete > 0 && val(x) > 0 && x % d != best_class) {
      --to_delete;
      continue;
    }
    survivors.push_back(x);
  }
  if (to_delete > 0) return std::nullopt;  // not enough surplus ones outside the class
  if (static_cast<int>(survivors.size()) < k) return std::nullopt;

  std::vector<int> vals(survivors.size());
  for (std::size_t j = 0; j < survivors.size(); ++j) vals[j] = val(survivors[j]);
  SignedSeq balanced(std::move(vals), 1, 1);
  auto window = scan_exact_block(balanced, k, 0);
  if (!window) return std::nullopt;

  BlockWitness out;
  out.kind = BlockKind::Gap;
  out.param = d;
  out.indices.reserve(k);
  for (int j : window->indices) out.indices.push_back(survivors[static_cast<std::size_t>(j) - 1]);
  out.weight = f.weight_of(out.indices);
  if (out.weight != 0 || !witness_consistent(out, f))
    throw std::logic_error("find_zs_gap_block: construction produced an invalid witness");
  return out;
}

std::optional<BlockWitness> find_zs_gap_block(const SignedSeq& f, int d, int k) {
  auto constructed = find_zs_gap_block_construction(f, d, k);
  if (constructed) return constructed;
  return dp_zs_gap_witness(f, d, k);
}

BlockWitness interpolate_gap_block(const SignedSeq& f, int d, int k, const BlockWitness& S,
                                   const BlockWitness& T) {
  require_pm1(f, "interpolate_gap_block");
  if (k < 2 || (k & 1)) throw std::invalid_argument("interpolate_gap_block: k must be even and >= 2");
  auto check_block = [&](const BlockWitness& w, const char* name) {
    if (static_cast<int>(w.indices.size()) != k || w.kind != BlockKind::Gap || w.param > d ||
        !witness_consistent(w, f))
      throw std::invalid_argument(std::string("interpolate_gap_block: ") + name +
                                  " is not a valid (d,k)-block of f");
  };
  check_block(S, "S");
  check_block(T, "T");
  long long ws = f.weight_of(S.indices);
  long long wt = f.weight_of(T.indices);
  if (!(ws < 0 && wt > 0))
    throw std::invalid_argument("interpolate_gap_block: need weight(S) < 0 < weight(T)");

  auto valid_gap_set = [&](const std::vector<int>& sorted) {
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      int step = sorted[i] - sorted[i - 1];
      if (step < 1 || step > d) return false;
    }
    return true;
  };

  // Swap in T's elements front to back; sets are re-sorted after each swap.
  std::vector<int> cur = S.indices;
  for (int i = 0; i < k; ++i) {
    if (f.weight_of(cur) == 0) {
      BlockWitness out{cur, BlockKind::Gap, d, 0};
      return out;
    }
    cur[static_cast<std::size_t>(i)] = T.indices[static_cast<std::size_t>(i)];
    std::vector<int> sorted = cur;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || !valid_gap_set(sorted)) {
      // Intermediate left the exchange graph; the straddling pair still
      // guarantees a zero, so recover it exhaustively.
      auto fallback = dp_zs_gap_witness(f, d, k);
      if (!fallback) throw std::logic_error("interpolate_gap_block: guaranteed witness missing");
      return *fallback;
    }
    cur = sorted;
  }
  if (f.weight_of(cur) == 0) return BlockWitness{cur, BlockKind::Gap, d, 0};
  auto fallback = dp_zs_gap_witness(f, d, k);
  if (!fallback) throw std::logic_error("interpolate_gap_block: guaranteed witness missing");
  return *fallback;
}

std::optional<BlockWitness> find_zs_ap(const SignedSeq& f, int k) {
  require_pm1(f, "find_zs_ap");
  if (k < 1 || k > f.size()) throw std::invalid_argument("find_zs_ap: need 1 <= k <= n");
  if (k == 1) return std::nullopt;  // single +-1 term is never zero
  const int n = f.size();
  for (int a = 1; a <= n; ++a) {
    int max_diff = (n - a) / (k - 1);
    for (int diff = 1; diff <= max_diff; ++diff) {
      long long w = 0;
      for (int j = 0; j < k; ++j) w += f.value(a + j * diff);
      if (w == 0) {
        BlockWitness out;
        out.kind = BlockKind::Arithmetic;
        out.param = diff;
        out.indices.resize(k);
        for (int j = 0; j < k; ++j) out.indices[static_cast<std::size_t>(j)] = a + j * diff;
        out.weight = 0;
        return out;
      }
    }
  }
  return std::nullopt;
}

std::vector<BlockWitness> stream_zs_blocks(const SignedSeq& f, int k, int window_limit) {
  require_pm1(f, "stream_zs_blocks");
  if (k < 2 || (k & 1)) throw std::invalid_argument("stream_zs_blocks: k must be even and >= 2");
  std::vector<BlockWitness> out;
  int last_start = std::min(window_limit, f.size() - k + 1);
  for (int i = 1; i <= last_start; ++i) {
    if (f.window_weight(i, k) == 0) {
      BlockWitness w;
      w.indices.resize(k);
      std::iota(w.indices.begin(), w.indices.end(), i);
      w.kind = BlockKind::Contiguous;
      w.param = 1;
      w.weight = 0;
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace zeroseq
