#pragma once

#include <vector>

#include "zeroseq/seq.hpp"

namespace zeroseq {

// Layout of the extremal family for (k, t, q): sequences of length
// n = block_threshold - 1 attaining |total| = q with every k-window heavier
// than t. n = m*k + r with r = (k-t)/2 + s - 1; the runs
// R_i = {(i-1)k+1, ..., (i-1)k+r} carry the -1s apart from s chained
// exceptions per run. Defined only when block_threshold(k,t,q) > k.
struct BlockFamilySpec {
  int k = 0;
  int t = 0;
  int q = 0;
  int s_residue = 0;
  long long n = 0;
  long long m = 0;
  long long r = 0;
};

BlockFamilySpec block_family_spec(int k, int t, int q);

// All members of the extremal family, positives in lexicographic order of
// their '+'/'-' strings with each negation following its positive.
std::vector<SignedSeq> enumerate_block_family(int k, int t, int q);

// Direct layout recognition of f or -f. Returns false for sequences of the
// wrong length or alphabet.
bool is_block_family_member(const SignedSeq& f, int k, int t, int q);

// Layout of the gap extremal family for (d, k), k >= 6 even, d >= 2:
// n = gap_threshold - 1 = m*b + r with m = (k-2s-2)/4, b = (d+1)k/2 + d - 1
// and r = k/2 - 1 + d*s. The runs R_i (length r) hold the -1s, the stretches
// T_i (length b - r) are all +1.
struct GapFamilySpec {
  int d = 0;
  int k = 0;
  int s_residue = 0;
  long long n = 0;
  long long m = 0;
  long long b = 0;
  long long r = 0;
};

GapFamilySpec gap_family_spec(int d, int k);

std::vector<SignedSeq> enumerate_gap_family(int d, int k);

bool is_gap_family_member(const SignedSeq& f, int d, int k);

}  // namespace zeroseq
