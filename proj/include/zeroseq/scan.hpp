#pragma once

#include <optional>

#include "zeroseq/seq.hpp"

namespace zeroseq {

// Leftmost window of length k with weight exactly t, or nullopt. Requires a
// +-1 sequence, |t| < k <= n and t == k (mod 2). Whenever some window weighs
// less than t and some more, a hit is guaranteed: sliding the window one step
// changes the weight by 0 or +-2, so it cannot jump over t.
std::optional<BlockWitness> scan_exact_block(const SignedSeq& f, int k, int t);

// Leftmost window of length k with |weight| <= t, or nullopt. Requires
// 0 <= t < k <= n and t == k (mod 2). Guaranteed to succeed whenever
// n >= block_threshold(k, t, q) and |total| <= q.
std::optional<BlockWitness> scan_bounded_block(const SignedSeq& f, int k, int t);

// Zero-sum d-bounded gap set of size k. Runs the constructive search first
// (orient to the majority sign, drop the surplus ones avoiding the thinnest
// residue class mod d, then scan the survivors for a zero window); falls back
// to the exhaustive dynamic program when the construction finds nothing but a
// witness still exists. k must be even, d >= 2.
std::optional<BlockWitness> find_zs_gap_block(const SignedSeq& f, int d, int k);

// The construction path alone, without the fallback. Exposed so tests can
// check that it succeeds unaided whenever the threshold hypotheses hold.
std::optional<BlockWitness> find_zs_gap_block_construction(const SignedSeq& f, int d, int k);

// Morphs gap block S into T one element at a time and returns the first
// intermediate of weight zero. Requires weight(S) < 0 < weight(T). When an
// intermediate violates the gap bound or collapses (duplicate element), the
// result comes from the exhaustive dynamic program instead; existence is
// still guaranteed by the straddling pair.
BlockWitness interpolate_gap_block(const SignedSeq& f, int d, int k, const BlockWitness& S,
                                   const BlockWitness& T);

// Lexicographically least zero-sum k-term arithmetic progression, scanning
// start positions ascending and differences ascending, or nullopt.
std::optional<BlockWitness> find_zs_ap(const SignedSeq& f, int k);

// All zero-sum k-blocks with start position <= window_limit, in increasing
// start order. k must be even.
std::vector<BlockWitness> stream_zs_blocks(const SignedSeq& f, int k, int window_limit);

}  // namespace zeroseq
