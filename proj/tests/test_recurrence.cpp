#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invseq/digits.hpp"
#include "invseq/recurrence.hpp"

using namespace invseq;

TEST_CASE("gamma constants") {
  CHECK(gamma(0) == TransferMatrix::identity());
  CHECK(gamma(3) == TransferMatrix::identity());
  CHECK(gamma(1) == TransferMatrix{{{{0, 1}, {-1, 0}}}});
  CHECK(gamma(2) == TransferMatrix{{{{0, -1}, {1, 0}}}});
  CHECK_THROWS_AS(gamma(4), std::invalid_argument);
}

TEST_CASE("gamma invariants") {
  for (unsigned r = 0; r < 4; ++r) {
    const TransferMatrix m = gamma(r);
    CHECK((m.det() == 1 || m.det() == -1));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(std::abs(m.e[i][j]) <= 1);
  }
  CHECK(gamma(1) == -gamma(2));
  TransferMatrix sum = gamma(0) + gamma(1) + gamma(2) + gamma(3);
  CHECK(sum == TransferMatrix{{{{2, 0}, {0, 2}}}});
}

TEST_CASE("pair vector spot values") {
  CHECK(v(0) == PairVector{Sign::plus(), Sign::plus()});
  CHECK(v(1) == PairVector{Sign::plus(), Sign::minus()});   // i_1 = +1, i_2 = -1
  CHECK(v(3) == PairVector{Sign::plus(), Sign::plus()});    // i_3 = +1, i_6 = +1
}

TEST_CASE("pair vector equals the direct evaluator") {
  for (std::uint64_t n = 0; n < (1u << 16); ++n) {
    const PairVector p = v(n);
    REQUIRE(p.top == i_direct(n));
    REQUIRE(p.bottom == i_direct(2 * n));
  }
}

TEST_CASE("matrix step consistency") {
  for (std::uint64_t n = 0; n < (1u << 12); ++n) {
    const PairVector base = v(n);
    for (unsigned r = 0; r < 4; ++r) REQUIRE(apply(gamma(r), base) == v(4 * n + r));
  }
}

TEST_CASE("halving recursion") {
  const int expect[8] = {+1, +1, -1, +1, +1, -1, +1, +1};
  for (std::uint64_t n = 0; n < 8; ++n) CHECK(i_rec2(n).value() == expect[n]);
  CHECK(i_rec2(12) == Sign::plus());
  CHECK(i_rec2(std::uint64_t{1} << 20) == Sign::plus());
  CHECK(i_rec2(std::uint64_t{1} << 21) == Sign::minus());
}

TEST_CASE("base-4 recursion") {
  CHECK(i_rec4(6) == Sign::plus());   // 6 = 4*1+2 -> -i_2
  CHECK(i_rec4(4) == Sign::plus());   // 4 = 4*1+0 -> i_1
  CHECK(i_rec4(1000000) == i_direct(1000000));
}

TEST_CASE("every evaluator agrees") {
  for (std::uint64_t n = 0; n < (1u << 14); ++n) {
    const Sign expect = i_direct(n);
    REQUIRE(i_rec2(n) == expect);
    REQUIRE(i_rec4(n) == expect);
    REQUIRE(v(n).top == expect);
  }
}

TEST_CASE("range guard") {
  CHECK_THROWS_AS(v(kMaxIndex + 1), std::out_of_range);
  CHECK_THROWS_AS(i_rec2(kMaxIndex + 1), std::out_of_range);
  CHECK_THROWS_AS(i_rec4(kMaxIndex + 1), std::out_of_range);
}

TEST_CASE("apply rejects non-sign results") {
  TransferMatrix zero{};
  CHECK_THROWS_AS(apply(zero, PairVector{Sign::plus(), Sign::plus()}), std::logic_error);
}
