#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "zeroseq/extremal.hpp"
#include "zeroseq/scan.hpp"
#include "zeroseq/thresholds.hpp"

using namespace zeroseq;

namespace {

std::set<std::string> as_strings(const std::vector<SignedSeq>& family) {
  std::set<std::string> out;
  for (const SignedSeq& f : family) out.insert(format_seq(f));
  return out;
}

}  // namespace

TEST_CASE("block family spec layout") {
  BlockFamilySpec spec = block_family_spec(6, 0, 1);
  CHECK(spec.n == 9);
  CHECK(spec.m == 1);
  CHECK(spec.r == 3);
  CHECK(spec.s_residue == 1);
  CHECK_THROWS_AS(block_family_spec(2, 0, 0), std::invalid_argument);  // threshold == k
}

TEST_CASE("enumerate_block_family reproduces the worked families") {
  auto f600 = enumerate_block_family(6, 0, 0);
  CHECK(f600.size() == 2);
  CHECK(as_strings(f600) == std::set<std::string>{"--++++--", "++----++"});

  auto f601 = enumerate_block_family(6, 0, 1);
  CHECK(f601.size() == 12);
  std::set<std::string> expected601 = {
      "+--++++--", "-+-++++--", "-+-+++-+-", "--+++++--", "--++++-+-", "--++++--+",
  };
  std::set<std::string> got;
  for (const auto& f : f601)
    if (f.total() > 0) got.insert(format_seq(f));
  CHECK(got == expected601);

  auto f714 = enumerate_block_family(7, 1, 4);
  CHECK(f714.size() == 2);
  CHECK(as_strings(f714).count("--+++++--+++++--") == 1);
}

TEST_CASE("block family members attain the bound and dodge every bounded window") {
  for (auto [k, t, q] : std::vector<std::array<int, 3>>{{6, 0, 0}, {6, 0, 1}, {7, 1, 4}, {4, 0, 1}}) {
    BlockFamilySpec spec = block_family_spec(k, t, q);
    for (const SignedSeq& f : enumerate_block_family(k, t, q)) {
      CHECK(f.size() == spec.n);
      long long total = f.total();
      CHECK((total < 0 ? -total : total) == q);
      CHECK_FALSE(scan_bounded_block(f, k, t).has_value());
      CHECK(is_block_family_member(f, k, t, q));
      CHECK(is_block_family_member(f.negated(), k, t, q));
    }
  }
}

TEST_CASE("is_block_family_member recognizes the listed pattern and rejects others") {
  SignedSeq g3 = parse_seq("-+-+++-+-");
  CHECK(is_block_family_member(g3, 6, 0, 1));
  CHECK_FALSE(is_block_family_member(parse_seq("--++++--"), 6, 0, 1));  // wrong length
  // Any sequence with a zero-sum 6-window is excluded from the q = 0 family.
  SignedSeq with_block = parse_seq("-+++---+");
  REQUIRE(scan_bounded_block(with_block, 6, 0).has_value());
  CHECK_FALSE(is_block_family_member(with_block, 6, 0, 0));
}

TEST_CASE("membership equals enumeration over the whole length-n cube") {
  for (auto [k, t, q] : std::vector<std::array<int, 3>>{{6, 0, 0}, {6, 0, 1}, {4, 0, 1}}) {
    BlockFamilySpec spec = block_family_spec(k, t, q);
    const int n = static_cast<int>(spec.n);
    std::set<std::string> family = as_strings(enumerate_block_family(k, t, q));
    long long members = 0;
    for (std::uint64_t x = 0; x < (1ull << n); ++x) {
      std::vector<int> vals(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = (x >> i) & 1 ? 1 : -1;
      SignedSeq f(vals, 1, 1);
      bool member = is_block_family_member(f, k, t, q);
      CHECK(member == (family.count(format_seq(f)) == 1));
      members += member;
    }
    CHECK(members == static_cast<long long>(family.size()));
  }
}

TEST_CASE("gap family spec layout") {
  GapFamilySpec spec = gap_family_spec(2, 8);
  CHECK(spec.n == 18);
  CHECK(spec.m == 1);
  CHECK(spec.b == 13);
  CHECK(spec.r == 5);
  CHECK(spec.s_residue == 1);
  CHECK_THROWS_AS(gap_family_spec(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(gap_family_spec(1, 6), std::invalid_argument);
  CHECK_THROWS_AS(gap_family_spec(2, 7), std::invalid_argument);
}

TEST_CASE("enumerate_gap_family worked cases") {
  auto f26 = enumerate_gap_family(2, 6);
  CHECK(f26.size() == 2);
  CHECK(as_strings(f26).count("--++++++++--") == 1);

  auto f28 = enumerate_gap_family(2, 8);
  CHECK(f28.size() == 62);

  // Run pair X = D, Y = J is admissible; X = A, Y = B is not.
  const std::string mid = "++++++++";
  CHECK(is_gap_family_member(parse_seq("---++" + mid + "--+-+"), 2, 8));
  CHECK_FALSE(is_gap_family_member(parse_seq("++---" + mid + "-++--"), 2, 8));
  CHECK_FALSE(is_gap_family_member(parse_seq(std::string(18, '+')), 2, 8));
}

TEST_CASE("gap family X/Y pairing table") {
  // For n = 18 the members are X ++++++++ Y; collect the admissible pairs.
  std::map<std::string, std::set<std::string>> pairs;
  for (const SignedSeq& f : enumerate_gap_family(2, 8)) {
    if (f.total() < 0) continue;
    std::string str = format_seq(f);
    pairs[str.substr(0, 5)].insert(str.substr(13, 5));
  }
  const std::string A = "++---", B = "-++--", C = "--++-", D = "---++", E = "+-+--";
  const std::string F = "+--+-", G = "+---+", H = "-+-+-", I = "-+--+", J = "--+-+";
  std::set<std::string> all10 = {A, B, C, D, E, F, G, H, I, J};
  CHECK(pairs[A] == std::set<std::string>{A});
  CHECK(pairs[E] == std::set<std::string>{A});
  CHECK(pairs[F] == std::set<std::string>{A});
  CHECK(pairs[H] == std::set<std::string>{A});
  CHECK(pairs[B] == std::set<std::string>{A, B});
  CHECK(pairs[C] == std::set<std::string>{A, B, C});
  CHECK(pairs[D] == all10);
  CHECK(pairs[G] == std::set<std::string>{A, E, F, G});
  CHECK(pairs[I] == std::set<std::string>{A, E, F, G});
  CHECK(pairs[J] == std::set<std::string>{A, E, F, G});
}

TEST_CASE("gap family members attain the bound and have no zero-sum gap set") {
  for (auto [d, k] : std::vector<std::array<int, 2>>{{2, 6}, {2, 8}, {3, 6}}) {
    GapFamilySpec spec = gap_family_spec(d, k);
    auto family = enumerate_gap_family(d, k);
    CHECK(!family.empty());
    for (const SignedSeq& f : family) {
      CHECK(f.size() == spec.n);
      long long total = f.total();
      CHECK((total < 0 ? -total : total) * (d + 1) == static_cast<long long>(d - 1) * spec.n);
      CHECK_FALSE(find_zs_gap_block(f, d, k).has_value());
      CHECK(is_gap_family_member(f, d, k));
      CHECK(is_gap_family_member(f.negated(), d, k));
    }
  }
}

TEST_CASE("negation closure and interleaved emission") {
  auto family = enumerate_gap_family(2, 8);
  std::set<std::string> strs = as_strings(family);
  for (const SignedSeq& f : family) CHECK(strs.count(format_seq(f.negated())) == 1);
  // Positives precede their negations pairwise.
  for (std::size_t i = 0; i + 1 < family.size(); i += 2)
    CHECK(format_seq(family[i + 1]) == format_seq(family[i].negated()));
}
