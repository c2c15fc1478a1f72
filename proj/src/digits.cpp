#include "invseq/digits.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace invseq {

namespace {

void check_index(std::uint64_t n) {
  if (n > kMaxIndex) throw std::out_of_range("index exceeds 2^62");
}

void check_base(unsigned base) {
  if (base < 2) throw std::invalid_argument("base must be at least 2");
}

}  // namespace

bool DigitString::canonical() const {
  if (digits.empty()) return false;
  if (digits.size() == 1) return true;
  return digits.front() != 0;
}

std::string DigitString::str() const {
  std::string s;
  s.reserve(digits.size());
  for (auto d : digits) s.push_back(static_cast<char>('0' + d));
  return s;
}

DigitString to_base_digits(std::uint64_t n, unsigned base) {
  check_base(base);
  check_index(n);
  DigitString w{{}, base};
  if (n == 0) {
    w.digits.push_back(0);
    return w;
  }
  while (n > 0) {
    w.digits.push_back(static_cast<std::uint8_t>(n % base));
    n /= base;
  }
  std::reverse(w.digits.begin(), w.digits.end());
  return w;
}

std::uint64_t to_integer(const DigitString& w) {
  check_base(w.base);
  std::uint64_t n = 0;
  for (auto d : w.digits) {
    if (d >= w.base) throw std::invalid_argument("digit out of range for base");
    n = n * w.base + d;
  }
  return n;
}

DigitString parse_digits(std::string_view text, unsigned base) {
  check_base(base);
  if (base > 10) throw std::invalid_argument("parse_digits supports bases up to 10");
  if (text.empty()) throw std::invalid_argument("empty digit string");
  DigitString w{{}, base};
  w.digits.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c >= static_cast<char>('0' + base))
      throw std::invalid_argument("invalid digit for base");
    w.digits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return w;
}

std::uint64_t count_scattered(const DigitString& pattern, const DigitString& word) {
  if (pattern.digits.empty()) throw std::invalid_argument("empty pattern");
  if (pattern.base != word.base) throw std::invalid_argument("base mismatch");
  // ways[j] = number of ways to pick the first j pattern digits so far.
  // 64-bit on purpose: counts grow combinatorially with the word length.
  const std::size_t m = pattern.digits.size();
  std::vector<std::uint64_t> ways(m + 1, 0);
  ways[0] = 1;
  for (auto d : word.digits) {
    for (std::size_t j = m; j >= 1; --j) {
      if (pattern.digits[j - 1] == d) ways[j] += ways[j - 1];
    }
  }
  return ways[m];
}

std::uint64_t count_block(const DigitString& block, const DigitString& word) {
  if (block.digits.empty()) throw std::invalid_argument("empty block");
  if (block.base != word.base) throw std::invalid_argument("base mismatch");
  const auto& b = block.digits;
  const auto& w = word.digits;
  if (w.size() < b.size()) return 0;
  std::uint64_t count = 0;
  for (std::size_t s = 0; s + b.size() <= w.size(); ++s) {
    if (std::equal(b.begin(), b.end(), w.begin() + static_cast<std::ptrdiff_t>(s)))
      ++count;
  }
  return count;
}

std::uint64_t inv2(std::uint64_t n) {
  check_index(n);
  std::uint64_t ones = 0, inversions = 0;
  for (int b = std::bit_width(n); b-- > 0;) {
    if ((n >> b) & 1u)
      ++ones;
    else
      inversions += ones;
  }
  return inversions;
}

std::uint64_t s2(std::uint64_t n) {
  check_index(n);
  return static_cast<std::uint64_t>(std::popcount(n));
}

Sign i_direct(std::uint64_t n) { return Sign::from_parity(inv2(n)); }

Sign t_direct(std::uint64_t n) { return Sign::from_parity(s2(n)); }

Sign r_direct(std::uint64_t n) {
  check_index(n);
  // Overlapping 11 blocks: adjacent 1-bit pairs.
  std::uint64_t blocks = static_cast<std::uint64_t>(std::popcount(n & (n >> 1)));
  return Sign::from_parity(blocks);
}

Sign sign_of_subseq_count(const DigitString& w, std::uint64_t n) {
  if (w.digits.empty()) throw std::invalid_argument("empty pattern");
  if (w.base != 2) throw std::invalid_argument("pattern must be base 2");
  return Sign::from_parity(count_scattered(w, to_base_digits(n, 2)));
}

}  // namespace invseq
