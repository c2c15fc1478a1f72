#pragma once

#include <array>
#include <cstdint>

#include "invseq/sign.hpp"

namespace invseq {

/// 2x2 integer matrix; all arithmetic is exact.
struct TransferMatrix {
  std::array<std::array<std::int64_t, 2>, 2> e{};

  static constexpr TransferMatrix identity() { return {{{{1, 0}, {0, 1}}}}; }

  std::int64_t det() const { return e[0][0] * e[1][1] - e[0][1] * e[1][0]; }

  friend constexpr TransferMatrix operator+(const TransferMatrix& a, const TransferMatrix& b) {
    TransferMatrix r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.e[i][j] = a.e[i][j] + b.e[i][j];
    return r;
  }
  friend constexpr TransferMatrix operator*(const TransferMatrix& a, const TransferMatrix& b) {
    TransferMatrix r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r.e[i][j] = a.e[i][0] * b.e[0][j] + a.e[i][1] * b.e[1][j];
    return r;
  }
  constexpr TransferMatrix operator-() const {
    TransferMatrix r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.e[i][j] = -e[i][j];
    return r;
  }
  friend constexpr bool operator==(const TransferMatrix&, const TransferMatrix&) = default;
};

/// The vector (i_n, i_{2n}).
struct PairVector {
  Sign top;     ///< i_n
  Sign bottom;  ///< i_{2n}

  friend constexpr bool operator==(PairVector, PairVector) = default;
};

/// Matrix-vector product; the result must again be a +-1 pair.
PairVector apply(const TransferMatrix& m, PairVector v);

/// The transfer matrix with (i_{4n+r}, i_{8n+2r}) = gamma(r) * (i_n, i_{2n}).
/// gamma(0) = gamma(3) = I, gamma(1) = ((0,1),(-1,0)), gamma(2) = -gamma(1).
TransferMatrix gamma(unsigned r);

/// (i_n, i_{2n}) by folding gamma along the base-4 digits of n; O(log n).
PairVector v(std::uint64_t n);

/// i_n by the halving rules i_{2n} = i_n t_n, i_{2n+1} = i_n carried together
/// with t (t_{2n} = t_n, t_{2n+1} = -t_n); O(log n).
Sign i_rec2(std::uint64_t n);

/// i_n by the base-4 rules i_{4n} = i_{4n+3} = i_n, i_{4n+1} = i_{2n},
/// i_{4n+2} = -i_{2n} with bases i_0..i_3 = +1,+1,-1,+1; O(log n).
Sign i_rec4(std::uint64_t n);

}  // namespace invseq
