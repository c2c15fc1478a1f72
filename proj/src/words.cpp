#include "invseq/words.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

#include "invseq/automaton.hpp"
#include "invseq/parallel.hpp"

namespace invseq {

namespace {

using u64 = std::uint64_t;

struct Best {
  std::size_t len = 0;
  std::size_t start = 0;

  void offer(std::size_t l, std::size_t s) {
    if (l > len || (l == len && l > 0 && s < start)) {
      len = l;
      start = s;
    }
  }
  void merge(const Best& o) { offer(o.len, o.start); }
};

void check_power_args(int power, std::size_t prefix_len) {
  if (power < 2) throw std::invalid_argument("power must be at least 2");
  if (prefix_len < static_cast<std::size_t>(power))
    throw std::invalid_argument("prefix too short for a single repetition");
}

}  // namespace

std::vector<std::uint64_t> RepetitionReport::periods() const {
  std::vector<u64> out;
  out.reserve(period_witness.size());
  for (const auto& [p, s] : period_witness) out.push_back(p);
  return out;
}

RepetitionReport scan_powers(int power, std::size_t prefix_len) {
  check_power_args(power, prefix_len);
  const auto w = sign_prefix(prefix_len);
  const std::size_t max_period = prefix_len / static_cast<std::size_t>(power);
  std::vector<std::int64_t> earliest(max_period + 1, -1);

  // A k-power of period p starting at s is a run of p-shifted matches of
  // length (k-1)p ending at s+(k-1)p-1. Periods are independent.
  const std::int64_t pmax = static_cast<std::int64_t>(max_period);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t p = 1; p <= pmax; ++p) {
    const std::size_t period = static_cast<std::size_t>(p);
    const std::size_t need = static_cast<std::size_t>(power - 1) * period;
    std::size_t run = 0;
    for (std::size_t t = 0; t + period < prefix_len; ++t) {
      if (w[t] == w[t + period]) {
        if (++run >= need) {
          earliest[period] = static_cast<std::int64_t>(t + 1 - need);
          break;
        }
      } else {
        run = 0;
      }
    }
  }

  RepetitionReport rep;
  rep.power = power;
  rep.prefix_len = prefix_len;
  for (std::size_t p = 1; p <= max_period; ++p)
    if (earliest[p] >= 0) rep.period_witness[p] = static_cast<u64>(earliest[p]);
  return rep;
}

PalindromeReport scan_palindromes(std::size_t prefix_len) {
  if (prefix_len < 1) throw std::invalid_argument("prefix must be non-empty");
  const auto w = sign_prefix(prefix_len);

  const std::int64_t n = static_cast<std::int64_t>(prefix_len);
  const int workers = par::max_threads();
  std::vector<Best> odd_part(workers), even_part(workers);

#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < n; ++c) {
#ifdef _OPENMP
    const int me = omp_get_thread_num();
#else
    const int me = 0;
#endif
    // odd factor centered at c
    std::size_t r = 0;
    while (c - static_cast<std::int64_t>(r) - 1 >= 0 &&
           c + static_cast<std::int64_t>(r) + 1 < n &&
           w[static_cast<std::size_t>(c - static_cast<std::int64_t>(r) - 1)] ==
               w[static_cast<std::size_t>(c + static_cast<std::int64_t>(r) + 1)])
      ++r;
    odd_part[me].offer(2 * r + 1, static_cast<std::size_t>(c) - r);
    // even factor centered between c and c+1
    if (c + 1 < n) {
      r = 0;
      while (c - static_cast<std::int64_t>(r) >= 0 &&
             c + static_cast<std::int64_t>(r) + 1 < n &&
             w[static_cast<std::size_t>(c - static_cast<std::int64_t>(r))] ==
                 w[static_cast<std::size_t>(c + static_cast<std::int64_t>(r) + 1)])
        ++r;
      if (r > 0) even_part[me].offer(2 * r, static_cast<std::size_t>(c) - r + 1);
    }
  }

  Best odd, even;
  for (const Best& b : odd_part) odd.merge(b);
  for (const Best& b : even_part) even.merge(b);

  PalindromeReport rep;
  rep.prefix_len = prefix_len;
  rep.max_odd_length = odd.len;
  rep.odd_start = odd.start;
  rep.max_even_length = even.len;
  rep.even_start = even.start;
  rep.max_length = std::max(odd.len, even.len);
  return rep;
}

std::vector<std::uint64_t> claimed_square_periods(std::uint64_t max_period) {
  std::vector<u64> out;
  if (max_period >= 1) out.push_back(1);
  if (max_period >= 2) out.push_back(2);
  for (u64 p = 3; p <= max_period; p <<= 1) out.push_back(p);
  return out;
}

bool square_witness_fits(std::uint64_t period, std::size_t prefix_len) {
  // Earliest occurrences, measured on the sequence and pinned by tests:
  // period 1 at 0, period 2 at 7, period 3 at 0, and period 3*2^j (j >= 1)
  // at 11*2^j, occupying [11*2^j, 17*2^j - 1].
  switch (period) {
    case 1: return prefix_len >= 2;
    case 2: return prefix_len >= 11;
    case 3: return prefix_len >= 9;
    default: break;
  }
  if (period % 3 != 0) return false;
  const u64 pow2 = period / 3;
  if (!std::has_single_bit(pow2) || pow2 < 2) return false;
  return prefix_len >= 17 * pow2;
}

WordsCheck check_words(std::size_t prefix_len) {
  if (prefix_len < 32)
    throw std::invalid_argument("prefix must be at least 32 for the growth comparison");

  WordsCheck out;
  out.prefix_len = prefix_len;
  const auto w = sign_prefix(prefix_len);

  auto witness_valid = [&w](int power, u64 p, u64 s) {
    const u64 need = static_cast<u64>(power - 1) * p;
    for (u64 j = 0; j < need; ++j)
      if (w[s + j] != w[s + j + p]) return false;
    return true;
  };

  const RepetitionReport squares = scan_powers(2, prefix_len);
  out.squares_ok = true;
  std::unordered_set<u64> admissible;
  for (u64 p : claimed_square_periods(prefix_len / 2)) admissible.insert(p);
  for (const auto& [p, s] : squares.period_witness) {
    if (!admissible.contains(p)) {
      out.squares_ok = false;
      out.detail += "square with inadmissible period " + std::to_string(p) +
                    " at " + std::to_string(s) + "; ";
    }
    if (!witness_valid(2, p, s)) {
      out.squares_ok = false;
      out.detail += "bad square witness for period " + std::to_string(p) + "; ";
    }
  }
  for (u64 p : admissible) {
    if (square_witness_fits(p, prefix_len) && !squares.period_witness.contains(p)) {
      out.squares_ok = false;
      out.detail += "missing square of period " + std::to_string(p) + "; ";
    }
  }

  const RepetitionReport cubes = scan_powers(3, prefix_len);
  out.cubes_ok = (cubes.periods() == std::vector<u64>{3});
  if (out.cubes_ok && !witness_valid(3, 3, cubes.period_witness.at(3)))
    out.cubes_ok = false;
  if (!out.cubes_ok) out.detail += "cube periods differ from {3}; ";

  const RepetitionReport fifths = scan_powers(5, prefix_len);
  out.fifth_powers_absent = fifths.period_witness.empty();
  if (!out.fifth_powers_absent) out.detail += "unexpected 5th power; ";

  const PalindromeReport small = scan_palindromes(prefix_len / 16);
  const PalindromeReport big = scan_palindromes(prefix_len);
  out.palindromes_grow = big.max_length > small.max_length;
  if (!out.palindromes_grow) out.detail += "palindrome length did not grow; ";

  return out;
}

namespace serial {

RepetitionReport scan_powers(int power, std::size_t prefix_len) {
  check_power_args(power, prefix_len);
  const auto w = sign_prefix(prefix_len);
  const std::size_t max_period = prefix_len / static_cast<std::size_t>(power);

  RepetitionReport rep;
  rep.power = power;
  rep.prefix_len = prefix_len;
  // Position-major with early exit on the first mismatch.
  for (std::size_t p = 1; p <= max_period; ++p) {
    const std::size_t need = static_cast<std::size_t>(power - 1) * p;
    for (std::size_t s = 0; s + need + p <= prefix_len; ++s) {
      bool all = true;
      for (std::size_t j = 0; j < need; ++j) {
        if (w[s + j] != w[s + j + p]) {
          all = false;
          break;
        }
      }
      if (all) {
        rep.period_witness[p] = s;
        break;
      }
    }
  }
  return rep;
}

PalindromeReport scan_palindromes(std::size_t prefix_len) {
  if (prefix_len < 1) throw std::invalid_argument("prefix must be non-empty");
  const auto w = sign_prefix(prefix_len);

  // Manacher over the separator-interleaved word; radius parity matches the
  // center kind, so the factor length in the original word equals the radius.
  const std::size_t m = 2 * prefix_len + 1;
  std::vector<std::int8_t> t(m, -2);
  for (std::size_t i = 0; i < prefix_len; ++i) t[2 * i + 1] = w[i];
  std::vector<std::int64_t> rad(m, 0);

  Best odd, even;
  std::int64_t center = 0, right = 0;
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(m); ++idx) {
    if (idx < right) rad[idx] = std::min(right - idx, rad[2 * center - idx]);
    while (idx - rad[idx] - 1 >= 0 && idx + rad[idx] + 1 < static_cast<std::int64_t>(m) &&
           t[idx - rad[idx] - 1] == t[idx + rad[idx] + 1])
      ++rad[idx];
    if (idx + rad[idx] > right) {
      center = idx;
      right = idx + rad[idx];
    }
    const std::size_t len = static_cast<std::size_t>(rad[idx]);
    if (len == 0) continue;
    const std::size_t start = static_cast<std::size_t>(idx - rad[idx]) / 2;
    if (idx & 1)
      odd.offer(len, start);
    else
      even.offer(len, start);
  }

  PalindromeReport rep;
  rep.prefix_len = prefix_len;
  rep.max_odd_length = odd.len;
  rep.odd_start = odd.start;
  rep.max_even_length = even.len;
  rep.even_start = even.start;
  rep.max_length = std::max(odd.len, even.len);
  return rep;
}

}  // namespace serial

}  // namespace invseq
