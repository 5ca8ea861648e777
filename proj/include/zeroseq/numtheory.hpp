#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace zeroseq {

// Completely multiplicative sign of n: +1 when n has an even number of prime
// factors counted with multiplicity, -1 otherwise. partials[i] is the sum of
// values(1..i).
struct LiouvilleTable {
  long long limit = 0;
  std::vector<std::int8_t> values;   // values[i] for i in [1, limit]; values[0] unused
  std::vector<long long> partials;   // partials[i] = sum of values[1..i]

  int value(long long n) const { return values[static_cast<std::size_t>(n)]; }
};

LiouvilleTable liouville_sieve(long long limit);

// Legendre symbol via Euler's criterion; p must be an odd prime.
int legendre(long long a, long long p);

// Segmented sieve of Eratosthenes.
std::vector<long long> primes_up_to(long long limit);

// The +-1 sequence (p_j / p) over primes p_j <= limit excluding p itself, so
// no zero entries occur.
struct LegendreSeq {
  long long p = 3;
  std::vector<long long> primes;
  std::vector<std::int8_t> values;
};

LegendreSeq legendre_seq(long long p, long long limit);

struct ZsBlockReport {
  long long count = 0;
  std::vector<long long> first_starts;  // up to 10 earliest 1-based starts
  long long partial_sum = 0;            // total weight of the scanned sequence
};

// Number of length-k windows with zero sum. The serial loop is the reference;
// the parallel version shards the window range and must agree exactly.
long long count_zero_windows(std::span<const std::int8_t> values, int k);
long long count_zero_windows_parallel(std::span<const std::int8_t> values, int k, int workers = 0);

// Full report (count, earliest 10 starts, total) over an arbitrary +-1 table.
ZsBlockReport zs_block_report(std::span<const std::int8_t> values, int k);

ZsBlockReport liouville_zs_blocks(const LiouvilleTable& table, int k);
ZsBlockReport liouville_zs_blocks(long long limit, int k);

// Zero-sum k-windows of the dilated sequence value(d), value(2d), ...; starts
// are reported in dilated index space, so start j stands for the arithmetic
// progression {jd, (j+1)d, ..., (j+k-1)d}.
ZsBlockReport liouville_ap_zs(const LiouvilleTable& table, int k, long long d);
ZsBlockReport liouville_ap_zs(long long limit, int k, long long d);

ZsBlockReport legendre_zs_blocks(long long p, long long limit, int k);

}  // namespace zeroseq
