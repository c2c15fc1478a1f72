#include "invseq/recurrence.hpp"

#include <stdexcept>

#include "invseq/digits.hpp"

namespace invseq {

PairVector apply(const TransferMatrix& m, PairVector v) {
  const std::int64_t a = v.top.value();
  const std::int64_t b = v.bottom.value();
  return {Sign::from_int(m.e[0][0] * a + m.e[0][1] * b),
          Sign::from_int(m.e[1][0] * a + m.e[1][1] * b)};
}

TransferMatrix gamma(unsigned r) {
  if (r > 3) throw std::invalid_argument("gamma index must be 0..3");
#ifdef INVSEQ_MUTATE_GAMMA
  // Deliberately corrupted entry; this build exists only for the mutation
  // smoke test of the verification suites.
  if (r == 1) return TransferMatrix{{{{0, 1}, {1, 0}}}};
#endif
  static constexpr TransferMatrix kGamma[4] = {
      TransferMatrix::identity(),
      {{{{0, 1}, {-1, 0}}}},
      {{{{0, -1}, {1, 0}}}},
      TransferMatrix::identity(),
  };
  return kGamma[r];
}

PairVector v(std::uint64_t n) {
  if (n > kMaxIndex) throw std::out_of_range("index exceeds 2^62");
  PairVector vec{Sign::plus(), Sign::plus()};  // V_0 = (i_0, i_0)
  if (n == 0) return vec;
  // V_n = gamma(d_0) * gamma(d_1) * ... * gamma(d_L) * V_0 with d_0 the least
  // significant base-4 digit, so the most significant digit applies first.
  unsigned digits[32];
  int count = 0;
  for (std::uint64_t m = n; m > 0; m >>= 2) digits[count++] = m & 3u;
  for (int i = count; i-- > 0;) vec = apply(gamma(digits[i]), vec);
  return vec;
}

namespace {

struct IT {
  Sign i, t;
};

IT rec2_impl(std::uint64_t n) {
  if (n == 0) return {Sign::plus(), Sign::plus()};
  const IT h = rec2_impl(n >> 1);
  if (n & 1u) return {h.i, -h.t};    // i_{2m+1} = i_m,     t_{2m+1} = -t_m
  return {h.i * h.t, h.t};           // i_{2m}   = i_m t_m, t_{2m}   = t_m
}

Sign rec4_impl(std::uint64_t n) {
  static constexpr std::int8_t kBase[4] = {+1, +1, -1, +1};
  if (n <= 3) return Sign::from_int(kBase[n]);
  const std::uint64_t m = n >> 2;
  switch (n & 3u) {
    case 0: return rec4_impl(m);
    case 1: return rec4_impl(2 * m);
    case 2: return -rec4_impl(2 * m);
    default: return rec4_impl(m);
  }
}

}  // namespace

Sign i_rec2(std::uint64_t n) {
  if (n > kMaxIndex) throw std::out_of_range("index exceeds 2^62");
  return rec2_impl(n).i;
}

Sign i_rec4(std::uint64_t n) {
  if (n > kMaxIndex) throw std::out_of_range("index exceeds 2^62");
  return rec4_impl(n);
}

}  // namespace invseq
