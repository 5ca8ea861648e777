#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zeroseq {

// A finite sequence over the two-letter alphabet {-r, +s} with a prefix-sum
// table, so any window weight costs O(1). Positions are 1-based throughout
// the library; only the storage layer is 0-based. Immutable after
// construction, safe for concurrent reads.
class SignedSeq {
 public:
  SignedSeq(std::vector<int> values, int r = 1, int s = 1);

  int size() const { return static_cast<int>(values_.size()); }
  int r() const { return r_; }
  int s() const { return s_; }
  bool is_pm1() const { return r_ == 1 && s_ == 1; }

  // Value at 1-based position.
  int value(int pos) const;

  // Total weight of the whole sequence.
  long long total() const { return prefix_.back(); }

  // Weight of the window {i, ..., i+k-1}, 1-based, O(1).
  long long window_weight(int i, int k) const;

  // Weight of an arbitrary 1-based index set.
  long long weight_of(std::span<const int> indices) const;

  const std::vector<int>& values() const { return values_; }
  const std::vector<long long>& prefix() const { return prefix_; }

  SignedSeq negated() const;

  friend bool operator==(const SignedSeq& a, const SignedSeq& b) {
    return a.r_ == b.r_ && a.s_ == b.s_ && a.values_ == b.values_;
  }

 private:
  std::vector<int> values_;
  std::vector<long long> prefix_;
  int r_ = 1;
  int s_ = 1;
};

// Parses the line-oriented text format: '+'/'-' tokens for the +-1 alphabet,
// otherwise whitespace-separated decimal integers, each equal to -r or s.
// Lines whose first non-blank character is '#' are comments. Rejects empty
// input and any symbol outside the alphabet.
SignedSeq parse_seq(std::string_view text, int r = 1, int s = 1);

// Inverse of parse_seq: '+'/'-' string when r == s == 1, else
// space-separated integers.
std::string format_seq(const SignedSeq& f);

enum class BlockKind { Contiguous, Gap, Arithmetic };

// Certificate returned by every search: an increasing 1-based index set, its
// structural kind and its recomputable weight. param carries the gap bound d
// (Gap) or the common difference (Arithmetic).
struct BlockWitness {
  std::vector<int> indices;
  BlockKind kind = BlockKind::Contiguous;
  int param = 1;
  long long weight = 0;
};

// Recomputes the weight and checks the structural invariant of the witness
// against f. Used by tests and by every search before returning.
bool witness_consistent(const BlockWitness& w, const SignedSeq& f);

}  // namespace zeroseq
