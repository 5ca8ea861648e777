#include "zeroseq/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zeroseq {

LiouvilleTable liouville_sieve(long long limit) {
  if (limit < 1) throw std::invalid_argument("liouville_sieve: limit must be >= 1");
  LiouvilleTable table;
  table.limit = limit;
  table.values.assign(static_cast<std::size_t>(limit) + 1, 0);
  table.values[0] = 0;
  if (limit >= 1) table.values[1] = 1;

  // Linear sieve; the sign is completely multiplicative, so value(i*p) is
  // always -value(i) whether or not p divides i.
  std::vector<long long> primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (long long i = 2; i <= limit; ++i) {
    if (!composite[static_cast<std::size_t>(i)]) {
      primes.push_back(i);
      table.values[static_cast<std::size_t>(i)] = -1;
    }
    for (long long p : primes) {
      if (i * p > limit) break;
      composite[static_cast<std::size_t>(i * p)] = true;
      table.values[static_cast<std::size_t>(i * p)] = static_cast<std::int8_t>(-table.values[static_cast<std::size_t>(i)]);
      if (i % p == 0) break;
    }
  }

  table.partials.assign(static_cast<std::size_t>(limit) + 1, 0);
  for (long long i = 1; i <= limit; ++i)
    table.partials[static_cast<std::size_t>(i)] =
        table.partials[static_cast<std::size_t>(i) - 1] + table.values[static_cast<std::size_t>(i)];
  return table;
}

namespace {

bool is_odd_prime(long long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long long q = 3; q * q <= p; q += 2)
    if (p % q == 0) return false;
  return true;
}

long long mulmod(long long a, long long b, long long mod) {
  return static_cast<long long>(static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) %
                                static_cast<unsigned __int128>(mod));
}

long long powmod(long long base, long long exp, long long mod) {
  long long acc = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) acc = mulmod(acc, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return acc;
}

}  // namespace

int legendre(long long a, long long p) {
  if (!is_odd_prime(p)) throw std::invalid_argument("legendre: p must be an odd prime");
  long long am = ((a % p) + p) % p;
  if (am == 0) return 0;
  long long e = powmod(am, (p - 1) / 2, p);
  if (e == 1) return 1;
  if (e == p - 1) return -1;
  throw std::logic_error("legendre: Euler criterion returned a non-root");
}

std::vector<long long> primes_up_to(long long limit) {
  std::vector<long long> primes;
  if (limit < 2) return primes;
  long long root = static_cast<long long>(std::sqrt(static_cast<double>(limit))) + 1;
  while (root * root > limit) --root;

  std::vector<bool> base_composite(static_cast<std::size_t>(root) + 1, false);
  std::vector<long long> base;
  for (long long i = 2; i <= root; ++i) {
    if (base_composite[static_cast<std::size_t>(i)]) continue;
    base.push_back(i);
    for (long long j = i * i; j <= root; j += i) base_composite[static_cast<std::size_t>(j)] = true;
  }
  primes = base;

  constexpr long long kSegment = 1 << 16;
  std::vector<bool> seg;
  for (long long lo = root + 1; lo <= limit; lo += kSegment) {
    long long hi = std::min(limit, lo + kSegment - 1);
    seg.assign(static_cast<std::size_t>(hi - lo + 1), false);
    for (long long p : base) {
      if (p * p > hi) break;
      long long start = std::max(p * p, ((lo + p - 1) / p) * p);
      for (long long j = start; j <= hi; j += p) seg[static_cast<std::size_t>(j - lo)] = true;
    }
    for (long long j = lo; j <= hi; ++j)
      if (!seg[static_cast<std::size_t>(j - lo)]) primes.push_back(j);
  }
  return primes;
}

LegendreSeq legendre_seq(long long p, long long limit) {
  if (!is_odd_prime(p)) throw std::invalid_argument("legendre_seq: p must be an odd prime");
  LegendreSeq seq;
  seq.p = p;
  for (long long q : primes_up_to(limit)) {
    if (q == p) continue;  // skip the single zero entry
    seq.primes.push_back(q);
    seq.values.push_back(static_cast<std::int8_t>(legendre(q, p)));
  }
  return seq;
}

long long count_zero_windows(std::span<const std::int8_t> values, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > values.size()) return 0;
  long long count = 0;
  long long w = 0;
  for (int i = 0; i < k; ++i) w += values[static_cast<std::size_t>(i)];
  if (w == 0) ++count;
  for (std::size_t i = 0; i + k < values.size(); ++i) {
    w += values[i + static_cast<std::size_t>(k)] - values[i];
    if (w == 0) ++count;
  }
  return count;
}

long long count_zero_windows_parallel(std::span<const std::int8_t> values, int k, int workers) {
  if (k < 1 || static_cast<std::size_t>(k) > values.size()) return 0;
  const long long windows = static_cast<long long>(values.size()) - k + 1;
  long long count = 0;
#ifdef _OPENMP
  int nt = workers > 0 ? workers : omp_get_max_threads();
#else
  int nt = 1;
  (void)workers;
#endif
#pragma omp parallel for num_threads(nt) reduction(+ : count) schedule(static)
  for (int shard = 0; shard < nt; ++shard) {
    long long lo = windows * shard / nt;
    long long hi = windows * (shard + 1) / nt;
    if (lo >= hi) continue;
    long long w = 0;
    for (long long i = lo; i < lo + k; ++i) w += values[static_cast<std::size_t>(i)];
    if (w == 0) ++count;
    for (long long i = lo; i + 1 < hi; ++i) {
      w += values[static_cast<std::size_t>(i + k)] - values[static_cast<std::size_t>(i)];
      if (w == 0) ++count;
    }
  }
  return count;
}

ZsBlockReport zs_block_report(std::span<const std::int8_t> values, int k) {
  ZsBlockReport report;
  report.count = count_zero_windows(values, k);
  for (std::int8_t v : values) report.partial_sum += v;
  if (k >= 1 && static_cast<std::size_t>(k) <= values.size()) {
    long long w = 0;
    for (int i = 0; i < k; ++i) w += values[static_cast<std::size_t>(i)];
    if (w == 0) report.first_starts.push_back(1);
    for (std::size_t i = 0; i + k < values.size() && report.first_starts.size() < 10; ++i) {
      w += values[i + static_cast<std::size_t>(k)] - values[i];
      if (w == 0) report.first_starts.push_back(static_cast<long long>(i) + 2);
    }
  }
  return report;
}

namespace {

void check_even_k(int k) {
  if (k < 2 || (k & 1)) throw std::invalid_argument("zero-sum block scan: k must be even and >= 2");
}

}  // namespace

ZsBlockReport liouville_zs_blocks(const LiouvilleTable& table, int k) {
  check_even_k(k);
  if (k > table.limit) throw std::invalid_argument("liouville_zs_blocks: k exceeds the table limit");
  std::span<const std::int8_t> values(table.values.data() + 1, static_cast<std::size_t>(table.limit));
  return zs_block_report(values, k);
}

ZsBlockReport liouville_zs_blocks(long long limit, int k) {
  return liouville_zs_blocks(liouville_sieve(limit), k);
}

ZsBlockReport liouville_ap_zs(const LiouvilleTable& table, int k, long long d) {
  check_even_k(k);
  if (d < 1) throw std::invalid_argument("liouville_ap_zs: d must be >= 1");
  long long terms = table.limit / d;
  if (terms < k) throw std::invalid_argument("liouville_ap_zs: fewer than k multiples of d in range");
  std::vector<std::int8_t> dilated(static_cast<std::size_t>(terms));
  for (long long j = 1; j <= terms; ++j)
    dilated[static_cast<std::size_t>(j) - 1] = table.values[static_cast<std::size_t>(j * d)];
  return zs_block_report(dilated, k);
}

ZsBlockReport liouville_ap_zs(long long limit, int k, long long d) {
  return liouville_ap_zs(liouville_sieve(limit), k, d);
}

ZsBlockReport legendre_zs_blocks(long long p, long long limit, int k) {
  check_even_k(k);
  LegendreSeq seq = legendre_seq(p, limit);
  if (static_cast<std::size_t>(k) > seq.values.size())
    throw std::invalid_argument("legendre_zs_blocks: fewer than k primes below the limit");
  return zs_block_report(seq.values, k);
}

}  // namespace zeroseq
