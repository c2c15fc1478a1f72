#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invseq/sign.hpp"

namespace invseq {

// S(N) here is the INCLUSIVE sum over 0 <= n <= N, so S(0) = 1. Every check in
// this module compares exact integers; floating point appears only in emitted
// plot data (GSample, RatioRow).

struct SummatoryPoint {
  std::uint64_t index;  ///< N
  std::int64_t value;   ///< S(N)
};

/// Streams (N, S(N)) one index at a time using the digit-definition evaluator.
/// A default-constructed stream starts at N = 0 and never consults the fast
/// evaluator, which keeps it usable as an independent reference; seeded()
/// jumps to an arbitrary start via s_fast and is what the chunked sweep
/// kernels build on. Single-owner: movable, not copyable.
class SummatoryStream {
 public:
  SummatoryStream() = default;
  static SummatoryStream seeded(std::uint64_t start);

  SummatoryStream(SummatoryStream&&) = default;
  SummatoryStream& operator=(SummatoryStream&&) = default;
  SummatoryStream(const SummatoryStream&) = delete;
  SummatoryStream& operator=(const SummatoryStream&) = delete;

  SummatoryPoint next();

 private:
  std::uint64_t next_n_ = 0;
  std::int64_t sum_ = 0;
};

/// S(n) in O(log n) by the divide-by-4 identities
///   S(4n) = 2S(n) - i_n          S(4n+1) = 2S(n) - i_n + i_{2n}
///   S(4n+2) = 2S(n) - i_n        S(4n+3) = 2S(n)
/// with bases S(0..3) = 1,2,1,2; the needed (i_n, i_{2n}) pair rides along the
/// same recursion. Recursion depth is at most 32.
std::int64_t s_fast(std::uint64_t n);

/// S(0..n_max) as a table, filled by parallel chunks.
std::vector<std::int64_t> s_table(std::uint64_t n_max);

struct Violation {
  std::uint64_t n;
  std::string expected;
  std::string actual;
};

struct SweepReport {
  std::string suite;
  std::uint64_t cases = 0;
  std::optional<Violation> first_violation;

  bool passed() const { return !first_violation.has_value(); }
};

/// Sweeps above this index are sampled with the given stride instead of
/// visited exhaustively.
inline constexpr std::uint64_t kFullSweepLimit = std::uint64_t{1} << 24;

/// S(n) and n have opposite parity for all 1 <= n <= n_max.
SweepReport check_parity(std::uint64_t n_max, std::uint64_t stride_above = 997);

/// 2*S(floor(n/4)) lies in [S(n)-2, S(n)+2] for all 1 <= n <= n_max.
SweepReport check_floor_bound(std::uint64_t n_max, std::uint64_t stride_above = 997);

/// The four shift identities, each over its full stated domain:
///   S(n + 2^{2k})     = -S(n) + 3*2^k   on [2^{2k},   2^{2k+1}-1]
///   S(n + 3*2^{2k})   =  S(n) + 2^k     on [0,        2^{2k}-1]
///   S(n + 2^{2k+1})   = -S(n) + 2^{k+2} on [2^{2k+1}, 2^{2k+2}-1]
///   S(n + 3*2^{2k+1}) =  S(n) + 2^{k+1} on [0,        2^{2k+1}-1]
SweepReport check_dividing_identities(unsigned k);

/// The dyadic interval [2^{2k-1}, 2^{2k+1}-1].
struct IntervalIk {
  unsigned k;
  std::uint64_t lo() const { return std::uint64_t{1} << (2 * k - 1); }
  std::uint64_t hi() const { return (std::uint64_t{1} << (2 * k + 1)) - 1; }
};

struct ExtremaReport {
  unsigned k;
  std::int64_t max_value = 0;
  std::int64_t min_value = 0;
  std::vector<std::uint64_t> argmax;
  std::vector<std::uint64_t> argmin;

  /// max = 2^{k+1} uniquely at 2^{2k+1}-1 and min = 2^{k-1} uniquely at
  /// 3*4^{k-1}-1.
  bool matches_expected() const;
};

/// Exhaustive scan of S over I_k.
ExtremaReport interval_extrema(unsigned k);

/// n = 2^{2k} - 1 - sum_r eps_r * 3*2^{2r+1} - beta with eps_r in {0,1}
/// (r = 0..k-2) and beta in {0,2}; such n fill the S(n) = 2^k level set of
/// J_k = [2^{2k-1}-1, 2^{2k}-1].
struct FormRep {
  unsigned k;
  std::uint32_t eps_mask;  ///< bit r = eps_r
  unsigned beta;           ///< 0 or 2

  std::uint64_t encode() const;
};

std::uint64_t jk_lo(unsigned k);
std::uint64_t jk_hi(unsigned k);

/// All (encoded value, representation) pairs, in enumeration order
/// (eps ascending, beta 0 then 2 inside).
std::vector<std::pair<std::uint64_t, FormRep>> jk_form_set(unsigned k);

struct JkReport {
  unsigned k;
  std::vector<std::uint64_t> members;
  bool set_matches_level_set = false;  ///< {n in J_k : S(n) = 2^k} == members
  bool all_signs_positive = false;     ///< i_n = +1 on every member
  bool max_is_two_pow_k = false;       ///< max of S over J_k is 2^k
  bool closure_holds = false;          ///< 4m+3 of a member is a member at k+1

  bool passed() const {
    return set_matches_level_set && all_signs_positive && max_is_two_pow_k &&
           closure_holds;
  }
};

JkReport check_jk_forms(unsigned k);

/// S(n)^2 < 2n for 8 <= n <= n_max off the family n = 2^{2k+1}-1, k >= 1
/// (binary all-ones of odd length); on the family S(n)^2 > 2n. Exact integers.
SweepReport check_upper_ratio(std::uint64_t n_max, std::uint64_t stride_above = 997);

/// 3*S(n)^2 > n and S(n) > 0 for all 1 <= n <= n_max. Exact integers.
SweepReport check_lower_ratio(std::uint64_t n_max, std::uint64_t stride_above = 997);

struct RatioRow {
  unsigned k;
  std::uint64_t argmax_n = 0;
  std::uint64_t argmin_n = 0;
  std::int64_t max_s = 0;
  std::int64_t min_s = 0;
  double max_ratio = 0.0;  ///< max over I_k of S(n)/sqrt(n)
  double min_ratio = 0.0;  ///< min over I_k of S(n)/sqrt(n)
};

/// Scans I_1..I_{k_max} for the extrema of S(n)/sqrt(n); comparisons are done
/// by exact cross-multiplication, only the reported ratios are floating point.
std::vector<RatioRow> ratio_limit_table(unsigned k_max);

struct RatioTableCheck {
  bool extrema_at_expected_positions = false;  ///< 2^{k+1}@2^{2k+1}-1, 2^{k-1}@3*4^{k-1}-1
  bool max_strictly_decreasing = false;
  bool min_strictly_decreasing = false;

  bool passed() const {
    return extrema_at_expected_positions && max_strictly_decreasing &&
           min_strictly_decreasing;
  }
};

RatioTableCheck validate_ratio_table(const std::vector<RatioRow>& rows);

/// One point of the fluctuation profile: S(N)/sqrt(N) against frac(log4 N).
struct GSample {
  double x;             ///< log4(N) - octave, in [0, 1)
  double y;             ///< S(N)/sqrt(N)
  std::uint64_t index;  ///< N
};

/// count samples across [4^m, 4^{m+1}): the grid point for j = 1..count is
/// N = round(4^{m + j/count}) - 1, so the midpoint grid lands exactly on the
/// peak 2^{2m+1}-1. Duplicate N after rounding are dropped. Requires m >= 2,
/// count >= 2 and 4^{m+1} within range.
std::vector<GSample> g_sample(unsigned octave, std::size_t count);

namespace serial {

// Pure streaming references: one pass from N = 0, never seeded by s_fast.
// Kept for tests and the benchmark; the public kernels above must agree with
// these exactly.

SweepReport check_parity(std::uint64_t n_max);
SweepReport check_floor_bound(std::uint64_t n_max);
ExtremaReport interval_extrema(unsigned k);
SweepReport check_upper_ratio(std::uint64_t n_max);
SweepReport check_lower_ratio(std::uint64_t n_max);
std::vector<std::int64_t> s_table(std::uint64_t n_max);

}  // namespace serial

}  // namespace invseq
