#include "invseq/automaton.hpp"

#include <stdexcept>

#include "invseq/digits.hpp"

namespace invseq {

namespace {

// Letters A..D as indices 0..3. Shared by the morphism constructors and the
// fast prefix generator; A maps to the automaton's initial state.
constexpr std::uint8_t kImageG[4][2] = {{0, 1}, {2, 0}, {1, 3}, {3, 2}};
constexpr std::uint8_t kImageRs[4][2] = {{0, 1}, {0, 2}, {3, 1}, {3, 2}};
constexpr std::int8_t kCode[4] = {+1, +1, -1, -1};

MorphismSystem make_system(const std::uint8_t img[4][2]) {
  MorphismSystem m;
  m.alphabet = "ABCD";
  m.seed = 'A';
  for (int a = 0; a < 4; ++a) {
    const char letter = static_cast<char>('A' + a);
    m.images[letter] = {static_cast<char>('A' + img[a][0]),
                        static_cast<char>('A' + img[a][1])};
    m.coding[letter] = Sign::from_int(kCode[a]);
  }
  return m;
}

}  // namespace

Dfao inversion_dfao() {
  Dfao a;
  a.initial = 0;
  a.transition = {{0, 1}, {2, 0}, {1, 3}, {3, 2}};
  a.output = {{Sign::plus(), Sign::plus()},
              {Sign::minus(), Sign::plus()},
              {Sign::minus(), Sign::minus()},
              {Sign::plus(), Sign::minus()}};
  return a;
}

std::size_t dfao_run(const Dfao& a, std::span<const std::uint8_t> digits) {
  std::size_t state = a.initial;
  for (auto d : digits) {
    if (d > 1) throw std::invalid_argument("binary digit expected");
    state = a.transition[state][d];
  }
  return state;
}

std::pair<Sign, Sign> dfao_eval(const Dfao& a, std::uint64_t n) {
  const DigitString w = to_base_digits(n, 2);
  return a.output[dfao_run(a, w.digits)];
}

bool MorphismSystem::prolongable() const {
  auto it = images.find(seed);
  if (it == images.end()) return false;
  if (it->second.size() < 2 || it->second.front() != seed) return false;
  for (char letter : alphabet) {
    auto im = images.find(letter);
    if (im == images.end() || im->second.empty()) return false;
    for (char c : im->second)
      if (alphabet.find(c) == std::string::npos) return false;
  }
  return true;
}

MorphismSystem morphism_g() { return make_system(kImageG); }

MorphismSystem morphism_rs() { return make_system(kImageRs); }

std::string fixed_point_prefix(const MorphismSystem& m, std::size_t len) {
  if (len == 0) throw std::invalid_argument("prefix length must be positive");
  if (!m.prolongable()) throw std::invalid_argument("morphism is not prolongable at its seed");

  // out stays a prefix of the fixed point: out = image(out[0..r-1]) and
  // out[0..r-1] is itself a prefix of out. Images are non-empty and the seed
  // image has length >= 2, so out grows strictly ahead of r.
  std::string out = m.images.at(m.seed);
  std::size_t r = 1;
  while (out.size() < len) {
    out += m.images.at(out[r]);
    ++r;
  }
  out.resize(len);
  return out;
}

std::vector<Sign> coded_prefix(const MorphismSystem& m, std::size_t len) {
  const std::string letters = fixed_point_prefix(m, len);
  std::vector<Sign> out;
  out.reserve(len);
  for (char c : letters) out.push_back(m.coding.at(c));
  return out;
}

std::vector<std::int8_t> sign_prefix(std::size_t len) {
  std::vector<std::int8_t> out(len);
  if (len == 0) return out;
  std::vector<std::uint8_t> letters;
  letters.reserve(len + 2);
  letters.push_back(kImageG[0][0]);
  letters.push_back(kImageG[0][1]);
  std::size_t r = 1;
  while (letters.size() < len) {
    const auto* im = kImageG[letters[r++]];
    letters.push_back(im[0]);
    letters.push_back(im[1]);
  }
  for (std::size_t i = 0; i < len; ++i) out[i] = kCode[letters[i]];
  return out;
}

}  // namespace invseq
