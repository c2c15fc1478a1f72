#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>

#include "invseq/automaton.hpp"
#include "invseq/digits.hpp"
#include "invseq/summatory.hpp"

using namespace invseq;

namespace {

// In-test oracle, written against the raw definition: parity of the number of
// (1, 0) bit pairs, accumulated term by term.
std::int64_t oracle_sum(std::uint64_t n_max) {
  std::int64_t s = 0;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    std::uint64_t ones = 0, parity = 0;
    for (std::uint64_t b = 64; b-- > 0;) {
      if ((n >> b) & 1u)
        ++ones;
      else
        parity ^= (ones & 1u);
    }
    s += parity ? -1 : +1;
  }
  return s;
}

void check_same_outcome(const SweepReport& a, const SweepReport& b) {
  CHECK(a.suite == b.suite);
  CHECK(a.passed() == b.passed());
  if (a.first_violation && b.first_violation)
    CHECK(a.first_violation->n == b.first_violation->n);
  if (a.passed()) CHECK(a.cases == b.cases);
}

}  // namespace

TEST_CASE("first partial sums") {
  const std::int64_t expect[8] = {1, 2, 1, 2, 3, 2, 3, 4};
  SummatoryStream stream;
  for (int n = 0; n < 8; ++n) {
    const auto p = stream.next();
    CHECK(p.value == expect[n]);
    CHECK(s_fast(static_cast<std::uint64_t>(n)) == expect[n]);
  }
  CHECK(s_fast(23) == 4);
  CHECK(s_fast(15) == 4);
}

TEST_CASE("spot values at scale") {
  CHECK(s_fast((1u << 11) - 1) == 64);    // 2^{k+1} at 2^{2k+1}-1, k = 5
  CHECK(s_fast(3071) == 32);              // 2^{k-1} at 3*4^{k-1}-1, k = 6
  CHECK(s_fast(100000) == 303);
}

TEST_CASE("fast evaluator equals streaming and the in-test oracle") {
  CHECK(s_fast(1u << 12) == oracle_sum(1u << 12));
  SummatoryStream stream;
  for (std::uint64_t n = 0; n < (1u << 16); ++n) {
    const auto p = stream.next();
    REQUIRE(p.index == n);
    REQUIRE(s_fast(n) == p.value);
  }
}

TEST_CASE("seeded streams continue the plain one") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint64_t start = rng() % (1u << 16);
    auto seeded = SummatoryStream::seeded(start);
    const auto p = seeded.next();
    CHECK(p.index == start);
    CHECK(p.value == s_fast(start));
  }
}

TEST_CASE("tables match between chunked and serial fills") {
  const auto par = s_table(1u << 16);
  const auto ser = serial::s_table(1u << 16);
  REQUIRE(par == ser);
}

TEST_CASE("parity sweep") {
  const auto rep = check_parity(1u << 20);
  CHECK(rep.passed());
  CHECK(rep.cases == (1u << 20));
  check_same_outcome(rep, serial::check_parity(1u << 20));
  CHECK_THROWS_AS(check_parity(0), std::invalid_argument);
}

TEST_CASE("floor bound sweep") {
  // spot: S(7) = 4, S(1) = 2; S(4) = 3, S(1) = 2
  CHECK(std::abs(2 * s_fast(1) - s_fast(7)) <= 2);
  CHECK(std::abs(2 * s_fast(1) - s_fast(4)) <= 2);
  const auto rep = check_floor_bound(1u << 20);
  CHECK(rep.passed());
  check_same_outcome(rep, serial::check_floor_bound(1u << 20));
}

TEST_CASE("dividing identities") {
  CHECK(s_fast(24) == s_fast(0) + 4);        // k=1 shift by 3*2^3
  CHECK(s_fast(16) == -s_fast(8) + 8);       // k=1 shift by 2^3
  for (unsigned k = 1; k <= 5; ++k) {
    const auto rep = check_dividing_identities(k);
    CHECK(rep.passed());
    CHECK(rep.cases == (std::uint64_t{6} << (2 * k)));
  }
}

TEST_CASE("interval extrema") {
  const auto r1 = interval_extrema(1);
  CHECK(r1.max_value == 4);
  CHECK(r1.argmax == std::vector<std::uint64_t>{7});
  CHECK(r1.min_value == 1);
  CHECK(r1.argmin == std::vector<std::uint64_t>{2});
  const auto r2 = interval_extrema(2);
  CHECK(r2.max_value == 8);
  CHECK(r2.argmax == std::vector<std::uint64_t>{31});
  CHECK(r2.min_value == 2);
  CHECK(r2.argmin == std::vector<std::uint64_t>{11});
  for (unsigned k = 1; k <= 6; ++k) CHECK(interval_extrema(k).matches_expected());

  const auto ser = serial::interval_extrema(5);
  const auto par = interval_extrema(5);
  CHECK(ser.max_value == par.max_value);
  CHECK(ser.min_value == par.min_value);
  CHECK(ser.argmax == par.argmax);
  CHECK(ser.argmin == par.argmin);
}

TEST_CASE("form sets") {
  const auto f1 = jk_form_set(1);
  REQUIRE(f1.size() == 2);
  CHECK(f1[0].first == 3);
  CHECK(f1[1].first == 1);
  const auto f2 = jk_form_set(2);
  std::vector<std::uint64_t> got;
  for (const auto& [n, rep] : f2) {
    got.push_back(n);
    CHECK(rep.encode() == n);
  }
  CHECK(got == std::vector<std::uint64_t>{15, 13, 9, 7});
  for (const auto& [n, rep] : f2) CHECK(s_fast(n) == 4);

  for (unsigned k = 1; k <= 6; ++k) {
    const auto rep = check_jk_forms(k);
    CHECK(rep.passed());
    CHECK(rep.members.size() == (std::size_t{1} << k));  // 2^{k-1} masks x 2 betas
  }
}

TEST_CASE("ratio bound sweeps") {
  CHECK(s_fast(8) == 3);  // 9 < 16
  CHECK(check_upper_ratio(1u << 16).passed());
  CHECK(check_lower_ratio(1u << 16).passed());
  check_same_outcome(check_upper_ratio(1u << 16), serial::check_upper_ratio(1u << 16));
  check_same_outcome(check_lower_ratio(1u << 16), serial::check_lower_ratio(1u << 16));
  CHECK_THROWS_AS(check_upper_ratio(4), std::invalid_argument);
}

TEST_CASE("ratio table") {
  const auto rows = ratio_limit_table(8);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0].max_ratio == doctest::Approx(4.0 / std::sqrt(7.0)).epsilon(1e-12));
  CHECK(rows[0].min_ratio == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  const auto check = validate_ratio_table(rows);
  CHECK(check.extrema_at_expected_positions);
  CHECK(check.max_strictly_decreasing);
  CHECK(check.min_strictly_decreasing);
}

TEST_CASE("fluctuation samples") {
  const auto samples = g_sample(2, 8);
  std::vector<std::uint64_t> indices;
  for (const auto& g : samples) indices.push_back(g.index);
  CHECK(indices == std::vector<std::uint64_t>{18, 22, 26, 31, 37, 44, 53, 63});
  bool saw31 = false;
  for (const auto& g : samples) {
    if (g.index == 31) {
      saw31 = true;
      CHECK(g.x == doctest::Approx(0.4772).epsilon(1e-3));
      CHECK(g.y == doctest::Approx(8.0 / std::sqrt(31.0)).epsilon(1e-12));
    }
    CHECK(g.x >= 0.0);
    CHECK(g.x < 1.0);
    CHECK(g.y > 0.0);
  }
  CHECK(saw31);
  for (std::size_t i = 1; i < samples.size(); ++i) CHECK(samples[i - 1].x < samples[i].x);

  // a crowded grid collapses duplicates
  const auto crowded = g_sample(2, 64);
  CHECK(crowded.size() < 64);
  for (std::size_t i = 1; i < crowded.size(); ++i)
    CHECK(crowded[i - 1].index < crowded[i].index);

  CHECK_THROWS_AS(g_sample(1, 8), std::invalid_argument);
  CHECK_THROWS_AS(g_sample(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(g_sample(31, 8), std::out_of_range);
}

TEST_CASE("pair running sums double at 4n+3") {
  const std::size_t limit = 1u << 14;
  const auto w = sign_prefix(8 * limit + 8);
  std::vector<std::int64_t> top(4 * limit + 4), bottom(4 * limit + 4);
  std::int64_t at = 0, ab = 0;
  for (std::size_t n = 0; n < top.size(); ++n) {
    at += w[n];
    ab += w[2 * n];
    top[n] = at;
    bottom[n] = ab;
  }
  for (std::size_t n = 0; n < limit; ++n) {
    REQUIRE(top[4 * n + 3] == 2 * top[n]);
    REQUIRE(bottom[4 * n + 3] == 2 * bottom[n]);
  }
}

TEST_CASE("range guards") {
  CHECK_THROWS_AS(s_fast(kMaxIndex + 1), std::out_of_range);
  CHECK_THROWS_AS(check_dividing_identities(0), std::invalid_argument);
  CHECK_THROWS_AS(interval_extrema(0), std::invalid_argument);
  CHECK_THROWS_AS(jk_form_set(0), std::invalid_argument);
}
