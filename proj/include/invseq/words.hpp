#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace invseq {

/// Occurrences of k-th powers (x repeated k times) inside a prefix of (i_n).
struct RepetitionReport {
  int power = 2;
  std::size_t prefix_len = 0;
  /// period |x| -> earliest start position of a witness occurrence.
  std::map<std::uint64_t, std::uint64_t> period_witness;

  std::vector<std::uint64_t> periods() const;
};

/// Exhaustive scan over all (period, position) pairs with
/// period <= prefix_len / power. Parallel over periods.
RepetitionReport scan_powers(int power, std::size_t prefix_len);

struct PalindromeReport {
  std::size_t prefix_len = 0;
  std::size_t max_length = 0;
  std::size_t max_even_length = 0;
  std::size_t even_start = 0;  ///< earliest start of a maximal even factor
  std::size_t max_odd_length = 0;
  std::size_t odd_start = 0;

  friend bool operator==(const PalindromeReport&, const PalindromeReport&) = default;
};

/// Longest palindromic factors of the prefix, even and odd tracked separately.
/// Parallel center expansion.
PalindromeReport scan_palindromes(std::size_t prefix_len);

/// {1, 2} union {3*2^j <= max_period}: the only square periods the sequence
/// admits.
std::vector<std::uint64_t> claimed_square_periods(std::uint64_t max_period);

/// Whether the earliest square of the given period fits inside the prefix.
/// Measured positions, pinned by tests: period 1 starts at 0, period 2 at 7,
/// period 3 at 0, and period 3*2^j (j >= 1) at 11*2^j, ending at 17*2^j - 1.
bool square_witness_fits(std::uint64_t period, std::size_t prefix_len);

struct WordsCheck {
  std::size_t prefix_len = 0;
  bool squares_ok = false;         ///< found periods match the admissible set
  bool cubes_ok = false;           ///< cube periods are exactly {3}
  bool fifth_powers_absent = false;
  bool palindromes_grow = false;   ///< max length strictly grows with the prefix
  std::string detail;              ///< human-readable description on failure

  bool passed() const {
    return squares_ok && cubes_ok && fifth_powers_absent && palindromes_grow;
  }
};

/// Runs the three power scans plus the palindrome growth comparison against
/// the shorter prefix prefix_len/16.
WordsCheck check_words(std::size_t prefix_len);

namespace serial {

/// Position-major reference scanner: for every period, slide the start and
/// compare letter by letter with early exit.
RepetitionReport scan_powers(int power, std::size_t prefix_len);

/// Manacher's algorithm; linear time, no parallelism.
PalindromeReport scan_palindromes(std::size_t prefix_len);

}  // namespace serial

}  // namespace invseq
