#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "zeroseq/numtheory.hpp"

using namespace zeroseq;

namespace {

// Trial-division reference for the prime-factor parity sign.
int sign_by_factorization(long long n) {
  int omega = 0;
  for (long long p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      n /= p;
      ++omega;
    }
  if (n > 1) ++omega;
  return omega % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("liouville_sieve small values") {
  LiouvilleTable table = liouville_sieve(16);
  CHECK(table.value(1) == 1);
  CHECK(table.value(2) == -1);
  CHECK(table.value(4) == 1);
  CHECK(table.value(12) == -1);  // three prime factors with multiplicity
  for (long long p : {2, 3, 5, 7, 11, 13}) CHECK(table.value(p) == -1);
  CHECK_THROWS_AS(liouville_sieve(0), std::invalid_argument);
}

TEST_CASE("liouville_sieve matches trial division up to 10^4") {
  LiouvilleTable table = liouville_sieve(10000);
  for (long long n = 1; n <= 10000; ++n) CHECK(table.value(n) == sign_by_factorization(n));
  CHECK(table.partials[10000] == table.partials[9999] + table.value(10000));
  CHECK(table.partials[1] == 1);
}

TEST_CASE("complete multiplicativity spot checks") {
  LiouvilleTable table = liouville_sieve(400);
  for (long long a = 1; a <= 20; ++a)
    for (long long b = 1; b <= 20; ++b)
      CHECK(table.value(a * b) == table.value(a) * table.value(b));
}

TEST_CASE("legendre symbol basics") {
  CHECK(legendre(1, 3) == 1);
  CHECK(legendre(2, 3) == -1);
  CHECK(legendre(3, 3) == 0);
  CHECK(legendre(2, 7) == 1);  // 3^2 == 2 (mod 7)
  CHECK(legendre(-1, 7) == -1);
  CHECK_THROWS_AS(legendre(2, 9), std::invalid_argument);
  CHECK_THROWS_AS(legendre(2, 2), std::invalid_argument);
}

TEST_CASE("legendre agrees with the explicit residue set for p <= 97") {
  for (long long p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                      79, 83, 89, 97}) {
    std::set<long long> squares;
    for (long long x = 1; x < p; ++x) squares.insert(x * x % p);
    for (long long a = 0; a < p; ++a) {
      int expect = a == 0 ? 0 : (squares.count(a) ? 1 : -1);
      CHECK(legendre(a, p) == expect);
    }
  }
}

TEST_CASE("primes_up_to crosses segment boundaries correctly") {
  auto primes = primes_up_to(200000);
  CHECK(primes.size() == 17984);  // pi(2*10^5)
  CHECK(primes.front() == 2);
  CHECK(primes.back() == 199999);
  // Reference check on a small range.
  auto small = primes_up_to(50);
  CHECK(small == std::vector<long long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47});
  CHECK(primes_up_to(1).empty());
}

TEST_CASE("liouville_zs_blocks at desk scale") {
  LiouvilleTable table = liouville_sieve(10);
  ZsBlockReport two = liouville_zs_blocks(table, 2);
  CHECK(two.first_starts == std::vector<long long>{1, 3, 4, 5, 6, 8});
  CHECK(two.count == 6);

  ZsBlockReport four = liouville_zs_blocks(table, 4);
  REQUIRE(!four.first_starts.empty());
  CHECK(four.first_starts.front() == 1);  // +1 -1 -1 +1

  CHECK_THROWS_AS(liouville_zs_blocks(table, 3), std::invalid_argument);
  CHECK_THROWS_AS(liouville_zs_blocks(table, 12), std::invalid_argument);
}

TEST_CASE("liouville_ap_zs dilation") {
  LiouvilleTable table = liouville_sieve(100);
  // Stride 1 reduces to the plain block scan.
  ZsBlockReport direct = liouville_zs_blocks(table, 2);
  ZsBlockReport strided = liouville_ap_zs(table, 2, 1);
  CHECK(direct.count == strided.count);
  CHECK(direct.first_starts == strided.first_starts);

  // Stride 2 within 20: values at 2,4 sum to zero, so start index 1.
  LiouvilleTable t20 = liouville_sieve(20);
  ZsBlockReport d2 = liouville_ap_zs(t20, 2, 2);
  REQUIRE(!d2.first_starts.empty());
  CHECK(d2.first_starts.front() == 1);

  // Dilation identity value(j*d) = value(j)*value(d) for d = 3.
  for (long long j = 1; j <= 33; ++j)
    CHECK(table.value(3 * j) == table.value(3) * table.value(j));
}

TEST_CASE("legendre_zs_blocks small cases") {
  // p = 3: primes 2, 5, 7, 11 map to -1, -1, +1, -1; first zero pair at (5, 7).
  ZsBlockReport r3 = legendre_zs_blocks(3, 30, 2);
  REQUIRE(!r3.first_starts.empty());
  CHECK(r3.first_starts.front() == 2);

  // p = 5: primes 2, 3, 7, 11 map to -1, -1, -1, +1; first zero pair at (7, 11).
  ZsBlockReport r5 = legendre_zs_blocks(5, 30, 2);
  REQUIRE(!r5.first_starts.empty());
  CHECK(r5.first_starts.front() == 3);

  CHECK_THROWS_AS(legendre_zs_blocks(3, 100, 3), std::invalid_argument);
  CHECK_THROWS_AS(legendre_zs_blocks(9, 100, 2), std::invalid_argument);
}

TEST_CASE("every reported block recomputes to zero on the underlying table") {
  LiouvilleTable table = liouville_sieve(5000);
  for (int k : {2, 4, 6}) {
    ZsBlockReport report = liouville_zs_blocks(table, k);
    for (long long start : report.first_starts) {
      long long w = 0;
      for (int i = 0; i < k; ++i) w += table.value(start + i);
      CHECK(w == 0);
    }
  }
}

TEST_CASE("parallel window count equals the serial reference") {
  LiouvilleTable table = liouville_sieve(200000);
  std::span<const std::int8_t> values(table.values.data() + 1,
                                      static_cast<std::size_t>(table.limit));
  for (int k : {2, 4, 8, 16}) {
    long long serial = count_zero_windows(values, k);
    for (int workers : {1, 2, 3, 7}) {
      CHECK(count_zero_windows_parallel(values, k, workers) == serial);
    }
  }
}
