#include "zeroseq/thresholds.hpp"

#include <algorithm>
#include <stdexcept>

namespace zeroseq {

namespace {

void check_block_params(int k, int t, int q) {
  if (k < 1) throw std::invalid_argument("block params: k must be >= 1");
  if (t < 0 || t >= k) throw std::invalid_argument("block params: need 0 <= t < k");
  if (((k - t) & 1) != 0) throw std::invalid_argument("block params: need t == k (mod 2)");
  if (q < 0) throw std::invalid_argument("block params: q must be >= 0");
}

}  // namespace

int residue_s(int k, int t, int q) {
  check_block_params(k, t, q);
  int mod = t + 2;
  long long target = static_cast<long long>(q) + (k - t - 2) / 2;
  int s = static_cast<int>(((target % mod) + mod) % mod);
  return s;  // 0 <= s <= t+1
}

BlockParams block_params(int k, int t, int q) { return BlockParams{k, t, q, residue_s(k, t, q)}; }

long long block_threshold(int k, int t, int q) {
  int s = residue_s(k, t, q);
  // N = A*k + (k-t)/2 + s with A = (q + (k-t-2)/2 - s)/(t+2); the residue
  // choice makes A a non-negative integer, which keeps everything exact.
  long long numer = static_cast<long long>(q) + (k - t - 2) / 2 - s;
  if (numer % (t + 2) != 0) throw std::logic_error("block_threshold: residue arithmetic broken");
  long long a = numer / (t + 2);
  if (a < 0) throw std::logic_error("block_threshold: negative quotient");
  long long formula = a * k + (k - t) / 2 + s;
  return std::max<long long>(k, formula);
}

int gap_residue(int k) {
  if (k < 2 || (k & 1) != 0) throw std::invalid_argument("gap params: k must be even and >= 2");
  return ((k - 2) / 2) & 1;
}

GapParams gap_params(int d, int k) {
  if (d < 2) throw std::invalid_argument("gap params: d must be >= 2");
  return GapParams{d, k, gap_residue(k)};
}

long long gap_threshold(int d, int k) {
  GapParams p = gap_params(d, k);
  long long s = p.s_residue;
  long long core = static_cast<long long>(k) * k - 2 * s * k + 4 * s - 4;
  if (core % 8 != 0) throw std::logic_error("gap_threshold: formula not integral");
  long long formula = (d + 1) * (core / 8) + 1;
  return std::max<long long>(k, formula);
}

bool LevelSet::contains(long long p) const {
  return std::binary_search(values.begin(), values.end(), p);
}

LevelSet level_set(int r, int s, int m) {
  if (r < 1 || s < 1 || m < 1) throw std::invalid_argument("level_set: r, s, m must be positive");
  LevelSet out{r, s, m, {}};
  out.values.reserve(static_cast<std::size_t>(m) + 1);
  for (int y = 0; y <= m; ++y)
    out.values.push_back(static_cast<long long>(r + s) * y - static_cast<long long>(r) * m);
  return out;
}

namespace {

void check_level_range(const Rational& q, int r, int s, int m) {
  if (r < 1 || s < 1 || m < 1) throw std::invalid_argument("level bracket: r, s, m must be positive");
  Rational lo(-static_cast<long long>(r) * m);
  Rational hi(static_cast<long long>(s) * m);
  if (q < lo || q > hi) throw std::invalid_argument("level bracket: q outside [-rm, sm]");
}

}  // namespace

long long lambda_floor(const Rational& q, int r, int s, int m) {
  check_level_range(q, r, s, m);
  // Largest (r+s)y - rm <= q  <=>  y = floor((q + rm) / (r+s)).
  long long num = q.num + static_cast<long long>(r) * m * q.den;
  long long y = floor_div(num, static_cast<long long>(r + s) * q.den);
  return static_cast<long long>(r + s) * y - static_cast<long long>(r) * m;
}

long long lambda_ceil(const Rational& q, int r, int s, int m) {
  check_level_range(q, r, s, m);
  long long num = q.num + static_cast<long long>(r) * m * q.den;
  long long y = ceil_div(num, static_cast<long long>(r + s) * q.den);
  return static_cast<long long>(r + s) * y - static_cast<long long>(r) * m;
}

bool zero_in_level_set(int r, int s, int m) {
  if (r < 1 || s < 1 || m < 1) throw std::invalid_argument("zero_in_level_set: positivity required");
  long long g = std::gcd(r, s);
  return m % ((r + s) / g) == 0;
}

}  // namespace zeroseq
