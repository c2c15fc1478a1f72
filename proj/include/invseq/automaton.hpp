#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "invseq/sign.hpp"

namespace invseq {

/// Finite automaton with a (Sign, Sign) output attached to every state.
/// Binary digits are consumed most significant first; the halting state's
/// output pair is the value. For the built-in automaton the pair is
/// (t_n, i_n): upper component tracks bit-count parity, lower tracks
/// inversion parity.
struct Dfao {
  std::size_t initial = 0;
  std::vector<std::array<std::size_t, 2>> transition;  // transition[state][digit]
  std::vector<std::pair<Sign, Sign>> output;

  std::size_t num_states() const { return transition.size(); }
};

/// The four-state automaton generating (t_n, i_n).
///
/// States q0..q3 carry outputs (+1,+1), (-1,+1), (-1,-1), (+1,-1) and move by
///   q0: 0->q0 1->q1   q1: 0->q2 1->q0   q2: 0->q1 1->q3   q3: 0->q3 1->q2.
/// Reading a digit d maps the state value (t, i) of the prefix to the value of
/// prefix*2+d: on 0 the pair becomes (t, i*t), on 1 it becomes (-t, i).
Dfao inversion_dfao();

/// Raw run over an explicit digit word (leading zeros allowed); returns the
/// halting state index.
std::size_t dfao_run(const Dfao& a, std::span<const std::uint8_t> digits);

/// Feeds the canonical binary digits of n and returns the halting output pair.
std::pair<Sign, Sign> dfao_eval(const Dfao& a, std::uint64_t n);

/// Letter-to-word substitution iterated from a seed letter, with a letter
/// coding applied afterwards.
struct MorphismSystem {
  std::string alphabet;
  std::map<char, std::string> images;
  std::map<char, Sign> coding;
  char seed = 'A';

  /// True when the image of the seed starts with the seed, has length at
  /// least two, and every letter has a non-empty image over the alphabet.
  bool prolongable() const;
};

/// A -> AB, B -> CA, C -> BD, D -> DC with coding A,B -> +1 and C,D -> -1;
/// the coded fixed point is (i_n). The letters track the automaton states
/// under the identification A=q0, B=q1, C=q2, D=q3.
MorphismSystem morphism_g();

/// A -> AB, B -> AC, C -> DB, D -> DC with the same coding; the coded fixed
/// point is the Rudin-Shapiro sequence (r_n).
MorphismSystem morphism_rs();

/// First len letters of the fixed point that starts with the seed. Generated
/// incrementally, one image at a time, so the cost is O(len) letter writes.
std::string fixed_point_prefix(const MorphismSystem& m, std::size_t len);

/// Letterwise coding of fixed_point_prefix.
std::vector<Sign> coded_prefix(const MorphismSystem& m, std::size_t len);

/// i_0 .. i_{len-1} as +1/-1 bytes; morphism-backed, O(len).
std::vector<std::int8_t> sign_prefix(std::size_t len);

}  // namespace invseq
