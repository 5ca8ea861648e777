#pragma once

#include <vector>

#include "zeroseq/rational.hpp"

namespace zeroseq {

// Parameter triple for bounded-weight window searches: window length k,
// weight bound t with t == k (mod 2), and total-weight bound q. s_residue is
// the unique s in [0, t+1] with s == q + (k-t-2)/2 (mod t+2); it controls
// both the sharp threshold and the extremal layout.
struct BlockParams {
  int k = 0;
  int t = 0;
  int q = 0;
  int s_residue = 0;
};

// Parameters for zero-sum searches over d-bounded gap sets of even length k.
// s_residue is in {0, 1} with s == (k-2)/2 (mod 2).
struct GapParams {
  int d = 0;
  int k = 0;
  int s_residue = 0;
};

int residue_s(int k, int t, int q);
BlockParams block_params(int k, int t, int q);

// Sharp length threshold: any +-1 sequence of length >= block_threshold(k,t,q)
// with |total| <= q contains a window of length k with |weight| <= t, and
// length block_threshold - 1 admits counterexamples. Exact integer arithmetic;
// throws if the parameters violate the congruence preconditions.
long long block_threshold(int k, int t, int q);

int gap_residue(int k);
GapParams gap_params(int d, int k);

// Sharp threshold for zero-sum d-bounded gap sets of even size k >= 6; for
// k in {2, 4} the value is max(k, formula) and sharpness is not claimed.
long long gap_threshold(int d, int k);

// The set of weights reachable by m cells valued in {-r, s}: exactly the
// m+1 values (r+s)y - rm for y in [0, m], ascending.
struct LevelSet {
  int r = 1;
  int s = 1;
  int m = 1;
  std::vector<long long> values;

  bool contains(long long p) const;
};

LevelSet level_set(int r, int s, int m);

// Largest level <= q, resp. smallest level >= q, for exact rational q in
// [-rm, sm]. Throws when q lies outside that range.
long long lambda_floor(const Rational& q, int r, int s, int m);
long long lambda_ceil(const Rational& q, int r, int s, int m);

// True iff 0 is a reachable weight, i.e. (r+s)/gcd(r,s) divides m.
bool zero_in_level_set(int r, int s, int m);

}  // namespace zeroseq
