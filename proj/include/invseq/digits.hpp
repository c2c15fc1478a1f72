#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "invseq/sign.hpp"

namespace invseq {

/// Largest index accepted anywhere in the library. Larger inputs are rejected
/// with std::out_of_range so that counts and partial sums stay inside int64.
inline constexpr std::uint64_t kMaxIndex = std::uint64_t{1} << 62;

/// Base-k digit word, most significant digit first.
struct DigitString {
  std::vector<std::uint8_t> digits;
  unsigned base = 2;

  /// No leading zero unless the word is exactly "0".
  bool canonical() const;
  std::string str() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;
};

/// Canonical base-k representation of n (n = 0 yields the single digit 0).
DigitString to_base_digits(std::uint64_t n, unsigned base);

/// Inverse of to_base_digits; accepts non-canonical words.
std::uint64_t to_integer(const DigitString& w);

/// Builds a digit word from text like "1100"; digits above 9 are not supported.
DigitString parse_digits(std::string_view text, unsigned base);

/// Number of ways to pick pattern inside word at strictly increasing positions.
std::uint64_t count_scattered(const DigitString& pattern, const DigitString& word);

/// Number of contiguous (possibly overlapping) occurrences of block in word.
std::uint64_t count_block(const DigitString& block, const DigitString& word);

/// Occurrences of "10" as a scattered subsequence of the binary representation:
/// the inversion count of n.
std::uint64_t inv2(std::uint64_t n);

/// Number of 1 bits of n.
std::uint64_t s2(std::uint64_t n);

Sign i_direct(std::uint64_t n);  ///< (-1)^inv2(n)
Sign t_direct(std::uint64_t n);  ///< (-1)^s2(n)
Sign r_direct(std::uint64_t n);  ///< (-1)^(occurrences of block 11 in binary n)

/// (-1)^(scattered occurrences of w in binary n); w must be a non-empty
/// base-2 word. With w = "10" this is i_direct.
Sign sign_of_subseq_count(const DigitString& w, std::uint64_t n);

}  // namespace invseq
