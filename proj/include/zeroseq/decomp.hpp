#pragma once

#include <span>
#include <utility>
#include <vector>

#include "zeroseq/rational.hpp"
#include "zeroseq/seq.hpp"

namespace zeroseq {

// m layers of n cells, each cell valued -r or s. Consecutive layers are
// completely joined, so a directed m-path is exactly a choice of one cell
// per layer; paths are stored as per-layer column indices (0-based) and the
// arc set is never materialized.
struct LayeredInstance {
  int n = 1;
  int m = 1;
  int r = 1;
  int s = 1;
  std::vector<std::vector<int>> cells;  // cells[layer][column]

  // Layer-major flattening: vals[layer * n + column].
  static LayeredInstance from_values(std::span<const int> vals, int n, int m, int r, int s);

  long long total() const;
  Rational per_path_mean() const { return Rational(total(), n); }
};

using PathSel = std::vector<int>;  // column per layer

struct PathDecomposition {
  std::vector<PathSel> paths;
  std::vector<long long> weights;
  long long lambda = 0;
  long long Lambda = 0;
};

long long path_weight(const LayeredInstance& inst, const PathSel& path);

// Path of weight exactly p obtained by swapping P's layer choices to Q's one
// layer at a time, front to back, stopping at the first hit. Requires p in
// the level set and between the two path weights.
PathSel path_interpolate(const LayeredInstance& inst, const PathSel& P, const PathSel& Q, long long p);

// Partition of all cells into n one-per-layer paths whose weights all lie in
// [lambda(q), Lambda(q)] with q = total/n. Follows the inductive scheme:
// repeatedly interpolate between the heaviest and lightest path to peel off a
// path pinned to the nearer end of the band.
PathDecomposition decompose(const LayeredInstance& inst);

// Zero-sum specialization: requires (r+s)/gcd(r,s) | m and total == 0; every
// returned path weighs exactly 0.
PathDecomposition zs_decompose(const LayeredInstance& inst);

// For r == s == 1: the two-value band {k-2, k} or {k-1, k+1}, k = ceil(q),
// depending on whether m == k (mod 2). decompose's weights always land in it.
std::pair<long long, long long> pm1_band(const LayeredInstance& inst);

// Splits [n*m] into n index sets of size m, one element per interval
// I_i = {(i-1)n+1, ..., in}, hence each a (2n-1)-bounded gap set, with
// weights in [lambda(q), Lambda(q)], q = total/n.
std::vector<BlockWitness> decompose_interval(const SignedSeq& f, int n, int m);

}  // namespace zeroseq
