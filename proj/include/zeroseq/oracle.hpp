#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zeroseq/seq.hpp"

namespace zeroseq {

// Independent brute-force verifiers. Everything here enumerates bit-encoded
// sequences or runs its own dynamic programs; none of it reuses the search
// logic it is checking. Enumeration kernels exist in a serial reference
// version and an OpenMP version sharded over the encoding space; both must
// produce identical reports.

inline constexpr std::uint64_t kDefaultEnumBudget = 1ull << 26;

// Bit encoding of a +-1 sequence: bit i set means position i+1 carries +1.
std::uint64_t encode_pm1(const SignedSeq& f);
SignedSeq decode_pm1(std::uint64_t bits, int n);

// One enumeration pass at a fixed length.
struct EnumPhase {
  long long n = 0;
  std::uint64_t space = 0;      // 2^n encodings scanned
  long long eligible = 0;       // encodings passing the total-weight filter
  long long no_block = 0;       // eligible encodings without the required block
  std::vector<std::uint64_t> no_block_encodings;  // sorted
};

struct BlockVerifyReport {
  int k = 0, t = 0, q = 0, s_residue = 0;
  long long n_threshold = 0;
  EnumPhase at_threshold;   // expects no_block == 0
  EnumPhase below;          // extremal candidates at n_threshold - 1
  long long family_size = 0;
  bool sets_equal = false;
  bool pass = false;
};

// Checks both directions of the sharpness statement for (k, t, q):
// at n = block_threshold every sequence with |total| <= q has a k-window of
// |weight| <= t, and at n - 1 the sequences with |total| == q and no such
// window are exactly the enumerated extremal family.
BlockVerifyReport verify_block_threshold(int k, int t, int q, int workers = 0,
                                         std::uint64_t budget = kDefaultEnumBudget);
BlockVerifyReport verify_block_threshold_serial(int k, int t, int q,
                                                std::uint64_t budget = kDefaultEnumBudget);

// Exhaustive existence of a zero-sum d-bounded gap set of size k, by dynamic
// programming over (position, picked count, running weight). Witness recovery
// returns the lexicographically least such set.
bool dp_zs_gap_exists(const SignedSeq& f, int d, int k);
std::optional<BlockWitness> dp_zs_gap_witness(const SignedSeq& f, int d, int k);

struct GapVerifyReport {
  int d = 0, k = 0, s_residue = 0;
  long long n_threshold = 0;
  EnumPhase at_threshold;
  EnumPhase below;
  long long family_size = 0;
  bool sets_equal = false;
  bool pass = false;
};

GapVerifyReport verify_gap_threshold(int d, int k, int workers = 0,
                                     std::uint64_t budget = kDefaultEnumBudget);
GapVerifyReport verify_gap_threshold_serial(int d, int k,
                                            std::uint64_t budget = kDefaultEnumBudget);

struct DecompVerifyReport {
  int n = 0, m = 0, r = 0, s = 0;
  long long trials = 0;
  long long exhaustive_instances = 0;   // full value-pattern enumeration runs
  long long violations = 0;             // decompose outputs breaking any contract
  long long lambda_attained = 0;        // instances with some path at lambda < Lambda
  long long Lambda_attained = 0;
  long long zs_checked = 0;             // instances meeting the zero-sum preconditions
  long long band_checked = 0;           // +-1 instances checked against the parity band
  bool cross_checked = false;           // exhaustive search confirmed feasibility
  bool pass = false;
};

// Contract check for decompose: partition validity, one cell per layer, band
// membership, weight bookkeeping; zero-sum counts and the +-1 parity band
// where their preconditions hold. Exhaustive feasibility cross-check runs
// when n <= 4 and m <= 5. exhaustive = true additionally enumerates every
// value pattern of the (n, m) grid instead of sampling.
DecompVerifyReport verify_decomposition(int n, int m, int r, int s, int trials,
                                        std::uint64_t seed = 0x5eedULL, bool exhaustive = false);

struct ApVerifyReport {
  int k = 0;
  long long n = 0;
  BlockWitness ap;                      // zero-sum k-term AP found in the extremal pattern
  std::vector<int> divisors_checked;    // proper divisors 1 < d < k/2 of k/2
  bool block_free = false;              // no contiguous zero-sum k-window
  bool pass = false;
};

// For k == 2 (mod 4) with composite k/2: builds the unique length k^2/4 - 1
// extremal pattern (t = q = 0), confirms it has no zero-sum k-window yet
// contains a zero-sum k-term AP, and checks the explicit residue-class AP for
// every proper divisor d with 1 < d < k/2.
ApVerifyReport verify_ap_proposition(int k);

struct InterpolationSweepReport {
  int max_n = 0;
  long long sequences = 0;
  long long straddle_cases = 0;  // (f, k, t) with window weights on both sides of t
  long long misses = 0;          // straddle cases where the scan found nothing
  bool pass = false;
};

// Exhausts every +-1 sequence with n <= max_n and every (k, t) of matching
// parity: whenever the window weights straddle t, scan_exact_block must
// return a witness.
InterpolationSweepReport verify_exact_block_interpolation(int max_n, int workers = 0);
InterpolationSweepReport verify_exact_block_interpolation_serial(int max_n);

}  // namespace zeroseq
