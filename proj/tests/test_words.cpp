#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "invseq/automaton.hpp"
#include "invseq/words.hpp"

using namespace invseq;

namespace {

using u64 = std::uint64_t;

void check_reports_equal(const RepetitionReport& a, const RepetitionReport& b) {
  CHECK(a.power == b.power);
  CHECK(a.prefix_len == b.prefix_len);
  REQUIRE(a.period_witness == b.period_witness);
}

}  // namespace

TEST_CASE("claimed square periods") {
  CHECK(claimed_square_periods(2) == std::vector<u64>{1, 2});
  CHECK(claimed_square_periods(10) == std::vector<u64>{1, 2, 3, 6});
  const auto big = claimed_square_periods(4096);
  CHECK(big.back() == 3072);
}

TEST_CASE("square scan fixtures") {
  const auto rep = scan_powers(2, 1u << 10);
  CHECK(rep.periods() == std::vector<u64>{1, 2, 3, 6, 12, 24, 48, 96});
  CHECK(rep.period_witness.at(1) == 0);
  CHECK(rep.period_witness.at(2) == 7);
  CHECK(rep.period_witness.at(3) == 0);
  CHECK(rep.period_witness.at(6) == 22);
  CHECK(rep.period_witness.at(12) == 44);
  CHECK(rep.period_witness.at(24) == 88);
  CHECK(rep.period_witness.at(96) == 352);

  const auto rep14 = scan_powers(2, 1u << 14);
  CHECK(rep14.periods() ==
        std::vector<u64>{1, 2, 3, 6, 12, 24, 48, 96, 192, 384, 768, 1536});
  CHECK(rep14.period_witness.at(1536) == 5632);
}

TEST_CASE("longer prefixes only add periods") {
  const auto small = scan_powers(2, 1u << 12);
  const auto large = scan_powers(2, 1u << 14);
  for (const auto& [p, s] : small.period_witness) {
    REQUIRE(large.period_witness.contains(p));
    CHECK(large.period_witness.at(p) == s);
  }
}

TEST_CASE("earliest period-3072 square sits just past 2^14") {
  CHECK_FALSE(scan_powers(2, 1u << 14).period_witness.contains(3072));
  const auto wide = scan_powers(2, 17 * 1024);
  REQUIRE(wide.period_witness.contains(3072));
  CHECK(wide.period_witness.at(3072) == 11264);  // 11*2^10, ending at 17*2^10 - 1
}

TEST_CASE("witness-fit rule matches the scans") {
  CHECK(square_witness_fits(1, 2));
  CHECK_FALSE(square_witness_fits(1, 1));
  CHECK(square_witness_fits(2, 11));
  CHECK_FALSE(square_witness_fits(2, 10));
  CHECK(square_witness_fits(3, 9));
  CHECK(square_witness_fits(1536, 1u << 14));
  CHECK_FALSE(square_witness_fits(3072, 1u << 14));
  CHECK(square_witness_fits(3072, 17 * 1024));
  CHECK_FALSE(square_witness_fits(5, 1u << 14));   // not an admissible period
  CHECK_FALSE(square_witness_fits(9, 1u << 14));

  for (std::size_t len : {std::size_t{1} << 10, std::size_t{1} << 12, std::size_t{1} << 14}) {
    const auto rep = scan_powers(2, len);
    for (u64 p : claimed_square_periods(len / 2)) {
      CAPTURE(len);
      CAPTURE(p);
      REQUIRE(rep.period_witness.contains(p) == square_witness_fits(p, len));
    }
  }
}

TEST_CASE("cubes") {
  const auto rep = scan_powers(3, 1u << 14);
  CHECK(rep.periods() == std::vector<u64>{3});
  CHECK(rep.period_witness.at(3) == 0);
  // i_0..i_8 = + + - + + - + + -
  const auto w = sign_prefix(9);
  for (int j = 0; j < 6; ++j) CHECK(w[j] == w[j + 3]);
}

TEST_CASE("no fifth powers") {
  CHECK(scan_powers(5, 1u << 14).period_witness.empty());
}

TEST_CASE("fourth powers reported but unconstrained") {
  const auto rep = scan_powers(4, 1u << 14);
  CHECK(rep.period_witness.contains(3));
  CHECK(rep.period_witness.at(3) == 22);
}

TEST_CASE("cube periods are square periods") {
  const auto cubes = scan_powers(3, 1u << 13);
  const auto squares = scan_powers(2, 1u << 13);
  for (const auto& [p, s] : cubes.period_witness)
    REQUIRE(squares.period_witness.contains(p));
}

TEST_CASE("serial scanner agrees with the parallel one") {
  for (int power : {2, 3, 5}) {
    check_reports_equal(serial::scan_powers(power, 1u << 12),
                        scan_powers(power, 1u << 12));
  }
  check_reports_equal(serial::scan_powers(2, 1000), scan_powers(2, 1000));
}

TEST_CASE("palindrome fixtures") {
  const auto tiny = scan_palindromes(2);
  CHECK(tiny.max_length == 2);  // ++ at position 0
  CHECK(tiny.even_start == 0);

  const auto p10 = scan_palindromes(1u << 10);
  CHECK(p10.max_length == 512);
  CHECK(p10.max_even_length == 512);
  CHECK(p10.even_start == 0);
  CHECK(p10.max_odd_length == 9);
  CHECK(p10.odd_start == 1);

  const auto p14 = scan_palindromes(1u << 14);
  CHECK(p14.max_length == 8192);
  CHECK(p14.even_start == 0);
  CHECK(p14.max_odd_length == 9);

  CHECK(p14.max_length > p10.max_length);
}

TEST_CASE("palindrome witnesses read the same both ways") {
  const auto rep = scan_palindromes(1u << 12);
  const auto w = sign_prefix(1u << 12);
  auto is_pal = [&w](std::size_t start, std::size_t len) {
    for (std::size_t j = 0; j < len / 2; ++j)
      if (w[start + j] != w[start + len - 1 - j]) return false;
    return true;
  };
  CHECK(is_pal(rep.even_start, rep.max_even_length));
  CHECK(is_pal(rep.odd_start, rep.max_odd_length));
}

TEST_CASE("Manacher agrees with center expansion") {
  for (std::size_t len : {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{17},
                          std::size_t{1} << 10, std::size_t{1} << 14}) {
    const auto a = serial::scan_palindromes(len);
    const auto b = scan_palindromes(len);
    CAPTURE(len);
    REQUIRE(a == b);
  }
}

TEST_CASE("combined words check") {
  CHECK(check_words(1u << 10).passed());
  const auto c = check_words(1u << 14);
  CHECK(c.squares_ok);
  CHECK(c.cubes_ok);
  CHECK(c.fifth_powers_absent);
  CHECK(c.palindromes_grow);
  CHECK_THROWS_AS(check_words(16), std::invalid_argument);
}

TEST_CASE("scanner argument checks") {
  CHECK_THROWS_AS(scan_powers(1, 100), std::invalid_argument);
  CHECK_THROWS_AS(scan_powers(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(scan_palindromes(0), std::invalid_argument);
}
