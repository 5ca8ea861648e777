#include "zeroseq/extremal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "zeroseq/thresholds.hpp"

namespace zeroseq {

namespace {

// All size-s subsets of [1..r], each ascending, in lexicographic order.
std::vector<std::vector<int>> subsets_of_run(int r, int s) {
  std::vector<std::vector<int>> out;
  if (s == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == s) {
      out.push_back(cur);
      return;
    }
    int need = s - static_cast<int>(cur.size());
    for (int v = next; v + need - 1 <= r; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// Offsets of the +1 exceptions may only move left from one run to the next:
// a^{i+1}_l <= a^i_l + k collapses to offset domination.
bool dominated(const std::vector<int>& next, const std::vector<int>& prev) {
  for (std::size_t l = 0; l < next.size(); ++l)
    if (next[l] > prev[l]) return false;
  return true;
}

SignedSeq negate_string_seq(const SignedSeq& f) { return f.negated(); }

std::vector<SignedSeq> emit_sorted_with_negations(std::vector<std::string> positives, int n) {
  std::sort(positives.begin(), positives.end());
  positives.erase(std::unique(positives.begin(), positives.end()), positives.end());
  std::vector<SignedSeq> out;
  std::set<std::string> seen;
  out.reserve(positives.size() * 2);
  for (const std::string& pat : positives) {
    SignedSeq f = parse_seq(pat, 1, 1);
    if (f.size() != n) throw std::logic_error("family enumeration: bad pattern length");
    std::string neg = format_seq(negate_string_seq(f));
    if (seen.insert(pat).second) out.push_back(f);
    if (seen.insert(neg).second) out.push_back(f.negated());
  }
  return out;
}

}  // namespace

BlockFamilySpec block_family_spec(int k, int t, int q) {
  BlockParams p = block_params(k, t, q);
  long long threshold = block_threshold(k, t, q);
  if (threshold <= k)
    throw std::invalid_argument("block family: defined only when block_threshold(k,t,q) > k");
  BlockFamilySpec spec;
  spec.k = k;
  spec.t = t;
  spec.q = q;
  spec.s_residue = p.s_residue;
  spec.n = threshold - 1;
  spec.m = spec.n / k;
  spec.r = spec.n % k;
  if (spec.r != (k - t) / 2 + p.s_residue - 1)
    throw std::logic_error("block family: remainder does not match layout");
  return spec;
}

std::vector<SignedSeq> enumerate_block_family(int k, int t, int q) {
  BlockFamilySpec spec = block_family_spec(k, t, q);
  const int n = static_cast<int>(spec.n);
  const int m = static_cast<int>(spec.m);
  const int r = static_cast<int>(spec.r);
  const int s = spec.s_residue;

  std::vector<std::string> positives;
  if (r == 0) {
    positives.emplace_back(static_cast<std::size_t>(n), '+');
    return emit_sorted_with_negations(std::move(positives), n);
  }

  std::vector<std::vector<int>> choices = subsets_of_run(r, s);
  std::vector<const std::vector<int>*> chain(static_cast<std::size_t>(m) + 1, nullptr);
  auto emit = [&]() {
    std::string pat(static_cast<std::size_t>(n), '+');
    for (int i = 0; i <= m; ++i) {
      const std::vector<int>& ones = *chain[static_cast<std::size_t>(i)];
      for (int j = 1; j <= r; ++j) {
        if (!std::binary_search(ones.begin(), ones.end(), j))
          pat[static_cast<std::size_t>(i) * k + j - 1] = '-';
      }
    }
    positives.push_back(std::move(pat));
  };
  auto rec = [&](auto&& self, int i) -> void {
    for (const auto& c : choices) {
      if (i > 0 && !dominated(c, *chain[static_cast<std::size_t>(i) - 1])) continue;
      chain[static_cast<std::size_t>(i)] = &c;
      if (i == m) {
        emit();
      } else {
        self(self, i + 1);
      }
    }
  };
  rec(rec, 0);
  return emit_sorted_with_negations(std::move(positives), n);
}

namespace {

bool block_layout_matches(const SignedSeq& g, const BlockFamilySpec& spec) {
  const int k = spec.k;
  const int m = static_cast<int>(spec.m);
  const int r = static_cast<int>(spec.r);
  const int s = spec.s_residue;
  // Everything outside the runs R_i must be +1.
  for (int i = 0; i <= m; ++i) {
    int base = i * k;
    int hi = std::min<long long>(spec.n, static_cast<long long>(base) + k);
    for (int pos = base + r + 1; pos <= hi; ++pos)
      if (g.value(pos) < 0) return false;
  }
  if (r == 0) return true;
  // Each run carries exactly s exceptions, at offsets that never move right.
  std::vector<int> prev;
  for (int i = 0; i <= m; ++i) {
    std::vector<int> ones;
    for (int j = 1; j <= r; ++j)
      if (g.value(i * k + j) > 0) ones.push_back(j);
    if (static_cast<int>(ones.size()) != s) return false;
    if (i > 0 && !dominated(ones, prev)) return false;
    prev = std::move(ones);
  }
  return true;
}

}  // namespace

bool is_block_family_member(const SignedSeq& f, int k, int t, int q) {
  BlockFamilySpec spec = block_family_spec(k, t, q);
  if (!f.is_pm1() || f.size() != spec.n) return false;
  return block_layout_matches(f, spec) || block_layout_matches(f.negated(), spec);
}

GapFamilySpec gap_family_spec(int d, int k) {
  if (d < 2) throw std::invalid_argument("gap family: need d >= 2");
  if (k < 6 || (k & 1)) throw std::invalid_argument("gap family: k must be even and >= 6");
  GapFamilySpec spec;
  spec.d = d;
  spec.k = k;
  spec.s_residue = gap_residue(k);
  spec.n = gap_threshold(d, k) - 1;
  spec.m = (k - 2LL * spec.s_residue - 2) / 4;
  spec.b = static_cast<long long>(d + 1) * k / 2 + d - 1;
  spec.r = k / 2 - 1 + static_cast<long long>(d) * spec.s_residue;
  if (spec.n != spec.m * spec.b + spec.r) throw std::logic_error("gap family: layout mismatch");
  return spec;
}

namespace {

// One run's fill pattern together with the features the chaining rules use.
struct RunFill {
  std::string pattern;  // '+'/'-' of length r
  bool ones_form_block = false;
  int first_one = 0;  // 1-based; 0 when there is none
  int last_one = 0;
  int leading = 0;   // leading '+' run
  int trailing = 0;  // trailing '+' run
};

RunFill make_fill(std::string pattern) {
  RunFill fill;
  fill.pattern = std::move(pattern);
  const int r = static_cast<int>(fill.pattern.size());
  std::vector<int> ones;
  for (int j = 1; j <= r; ++j)
    if (fill.pattern[static_cast<std::size_t>(j) - 1] == '+') ones.push_back(j);
  if (!ones.empty()) {
    fill.first_one = ones.front();
    fill.last_one = ones.back();
    fill.ones_form_block = ones.back() - ones.front() + 1 == static_cast<int>(ones.size());
  } else {
    fill.ones_form_block = true;  // vacuous; only reachable for s = 0
  }
  while (fill.leading < r && fill.pattern[static_cast<std::size_t>(fill.leading)] == '+') ++fill.leading;
  while (fill.trailing < r && fill.pattern[static_cast<std::size_t>(r - 1 - fill.trailing)] == '+')
    ++fill.trailing;
  return fill;
}

// Chaining rules between consecutive runs (s = 1 case). The full-ones stretch
// covering T_i extends trailing(X) cells into R_i and leading(Y) into R_{i+1}.
bool runs_compatible(const RunFill& x, const RunFill& y, int d, int k, long long r) {
  if (!x.ones_form_block) return x.trailing + y.leading >= d;
  if (x.trailing == 0) {
    if (!y.ones_form_block) return false;
    long long gap_minus = (r - x.last_one) + (y.first_one - 1);
    return gap_minus <= k / 2 - 1;
  }
  return true;
}

std::vector<RunFill> all_run_fills(long long r, int ones) {
  std::vector<RunFill> out;
  std::vector<std::vector<int>> subsets = subsets_of_run(static_cast<int>(r), ones);
  out.reserve(subsets.size());
  for (const auto& sub : subsets) {
    std::string pat(static_cast<std::size_t>(r), '-');
    for (int j : sub) pat[static_cast<std::size_t>(j) - 1] = '+';
    out.push_back(make_fill(std::move(pat)));
  }
  return out;
}

}  // namespace

std::vector<SignedSeq> enumerate_gap_family(int d, int k) {
  GapFamilySpec spec = gap_family_spec(d, k);
  const int n = static_cast<int>(spec.n);
  const int m = static_cast<int>(spec.m);
  const int b = static_cast<int>(spec.b);
  const int r = static_cast<int>(spec.r);

  std::vector<std::string> positives;
  if (spec.s_residue == 0) {
    std::string pat(static_cast<std::size_t>(n), '+');
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j < r; ++j) pat[static_cast<std::size_t>(i) * b + j] = '-';
    positives.push_back(std::move(pat));
    return emit_sorted_with_negations(std::move(positives), n);
  }

  std::vector<RunFill> fills = all_run_fills(r, d);
  std::vector<const RunFill*> chain(static_cast<std::size_t>(m) + 1, nullptr);
  auto emit = [&]() {
    std::string pat(static_cast<std::size_t>(n), '+');
    for (int i = 0; i <= m; ++i) {
      const std::string& fp = chain[static_cast<std::size_t>(i)]->pattern;
      for (int j = 0; j < r; ++j) pat[static_cast<std::size_t>(i) * b + j] = fp[static_cast<std::size_t>(j)];
    }
    positives.push_back(std::move(pat));
  };
  auto rec = [&](auto&& self, int i) -> void {
    for (const RunFill& fill : fills) {
      if (i > 0 && !runs_compatible(*chain[static_cast<std::size_t>(i) - 1], fill, d, k, r)) continue;
      chain[static_cast<std::size_t>(i)] = &fill;
      if (i == m) {
        emit();
      } else {
        self(self, i + 1);
      }
    }
  };
  rec(rec, 0);
  return emit_sorted_with_negations(std::move(positives), n);
}

namespace {

bool gap_layout_matches(const SignedSeq& g, const GapFamilySpec& spec) {
  const int m = static_cast<int>(spec.m);
  const int b = static_cast<int>(spec.b);
  const int r = static_cast<int>(spec.r);
  // The stretches T_i are all +1.
  for (int i = 0; i < m; ++i)
    for (int pos = i * b + r + 1; pos <= (i + 1) * b; ++pos)
      if (g.value(pos) < 0) return false;
  // Each run holds exactly d*s ones.
  std::vector<RunFill> fills;
  fills.reserve(static_cast<std::size_t>(m) + 1);
  const int expected_ones = spec.d * spec.s_residue;
  for (int i = 0; i <= m; ++i) {
    std::string pat(static_cast<std::size_t>(r), '-');
    int ones = 0;
    for (int j = 1; j <= r; ++j) {
      if (g.value(i * b + j) > 0) {
        pat[static_cast<std::size_t>(j) - 1] = '+';
        ++ones;
      }
    }
    if (ones != expected_ones) return false;
    fills.push_back(make_fill(std::move(pat)));
  }
  if (spec.s_residue == 0) return true;
  for (int i = 0; i < m; ++i)
    if (!runs_compatible(fills[static_cast<std::size_t>(i)], fills[static_cast<std::size_t>(i) + 1],
                         spec.d, spec.k, spec.r))
      return false;
  return true;
}

}  // namespace

bool is_gap_family_member(const SignedSeq& f, int d, int k) {
  GapFamilySpec spec = gap_family_spec(d, k);
  if (!f.is_pm1() || f.size() != spec.n) return false;
  return gap_layout_matches(f, spec) || gap_layout_matches(f.negated(), spec);
}

}  // namespace zeroseq
