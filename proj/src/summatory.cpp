#include "invseq/summatory.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "invseq/digits.hpp"
#include "invseq/parallel.hpp"
#include "invseq/recurrence.hpp"

namespace invseq {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using i128 = __int128;

void check_index(u64 n) {
  if (n > kMaxIndex) throw std::out_of_range("index exceeds 2^62");
}

struct SumAndPair {
  i64 s;
  PairVector vec;
};

// S(n) together with (i_n, i_{2n}), both carried down one divide-by-4 level
// at a time.
SumAndPair s_eval(u64 n) {
  if (n <= 3) {
    static constexpr i64 kS[4] = {1, 2, 1, 2};
    static constexpr std::int8_t kI[4] = {+1, +1, -1, +1};
    static constexpr std::int8_t kI2[4] = {+1, -1, +1, +1};  // i_0, i_2, i_4, i_6
    return {kS[n], {Sign::from_int(kI[n]), Sign::from_int(kI2[n])}};
  }
  const unsigned r = n & 3u;
  const SumAndPair sub = s_eval(n >> 2);
  i64 s = 2 * sub.s;
  switch (r) {
    case 0:
    case 2: s -= sub.vec.top.value(); break;
    case 1: s += -sub.vec.top.value() + sub.vec.bottom.value(); break;
    default: break;  // r == 3: S(4n+3) = 2S(n)
  }
  return {s, apply(gamma(r), sub.vec)};
}

// ---- chunked sweep machinery ----
//
// Production sweeps run in chunks: each chunk is seeded with s_fast at its
// left edge and then streamed with the digit-definition evaluator, so every
// sweep exercises both evaluation routes. On top of that, every chunk
// cross-checks the streamed sum against s_fast once, at a pseudorandomly
// mixed interior index; chunk edges alone tend to land on degenerate digit
// patterns. A mismatch throws, since it means the two routesディverged.
// The serial:: variants stream the whole range from N = 0 and are the pure
// reference.

constexpr u64 kMinChunk = u64{1} << 15;

u64 splitmix64(u64 x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

u64 probe_index(const par::Range& chunk) {
  return chunk.lo + splitmix64(chunk.lo) % (chunk.hi - chunk.lo);
}

struct ProbeHit {
  u64 n;
  i64 streamed;
  i64 fast;
};

[[noreturn]] void throw_probe(const ProbeHit& hit) {
  throw std::logic_error("streamed sum " + std::to_string(hit.streamed) +
                         " disagrees with the fast evaluator " +
                         std::to_string(hit.fast) + " at n = " +
                         std::to_string(hit.n));
}

struct CheckState {
  u64 cases = 0;
  std::optional<Violation> first;

  void merge(CheckState&& o) {
    cases += o.cases;
    if (o.first && (!first || o.first->n < first->n)) first = std::move(o.first);
  }
};

// step(state, n, S(n)) -> keep going?
template <class State, class Step>
State chunked_sweep(u64 lo, u64 hi_incl, Step step) {
  State total;
  if (lo > hi_incl) return total;
  const auto chunks = par::split(lo, hi_incl + 1, kMinChunk);
  std::vector<State> partial(chunks.size());
  std::vector<std::optional<ProbeHit>> probes(chunks.size());
  const std::int64_t n_chunks = static_cast<std::int64_t>(chunks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < n_chunks; ++c) {
    auto stream = SummatoryStream::seeded(chunks[c].lo);
    const u64 probe = probe_index(chunks[c]);
    State& local = partial[static_cast<std::size_t>(c)];
    for (u64 n = chunks[c].lo; n < chunks[c].hi; ++n) {
      const auto p = stream.next();
      if (p.index == probe) {
        const i64 f = s_fast(p.index);
        if (f != p.value) {
          probes[static_cast<std::size_t>(c)] = ProbeHit{p.index, p.value, f};
          break;
        }
      }
      if (!step(local, p.index, p.value)) break;
    }
  }
  for (const auto& hit : probes)
    if (hit) throw_probe(*hit);
  for (auto& p : partial) total.merge(std::move(p));
  return total;
}

// Lockstep pair sweep: visits (n, S(n), S(n + offset)) over [lo, hi].
template <class State, class Step>
State chunked_offset_sweep(u64 lo, u64 hi_incl, u64 offset, Step step) {
  State total;
  if (lo > hi_incl) return total;
  check_index(hi_incl + offset);
  const auto chunks = par::split(lo, hi_incl + 1, kMinChunk);
  std::vector<State> partial(chunks.size());
  std::vector<std::optional<ProbeHit>> probes(chunks.size());
  const std::int64_t n_chunks = static_cast<std::int64_t>(chunks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < n_chunks; ++c) {
    auto base = SummatoryStream::seeded(chunks[c].lo);
    auto shifted = SummatoryStream::seeded(chunks[c].lo + offset);
    const u64 probe = probe_index(chunks[c]);
    State& local = partial[static_cast<std::size_t>(c)];
    for (u64 n = chunks[c].lo; n < chunks[c].hi; ++n) {
      const auto a = base.next();
      const auto b = shifted.next();
      if (a.index == probe) {
        const i64 f = s_fast(a.index);
        const i64 fs = s_fast(a.index + offset);
        if (f != a.value || fs != b.value) {
          probes[static_cast<std::size_t>(c)] =
              ProbeHit{a.index, f != a.value ? a.value : b.value,
                       f != a.value ? f : fs};
          break;
        }
      }
      if (!step(local, a.index, a.value, b.value)) break;
    }
  }
  for (const auto& hit : probes)
    if (hit) throw_probe(*hit);
  for (auto& p : partial) total.merge(std::move(p));
  return total;
}

// Sampled tail for sweeps beyond kFullSweepLimit; S comes from s_fast alone.
template <class State, class Step>
void strided_tail(State& total, u64 lo, u64 hi_incl, u64 stride, Step step) {
  if (lo > hi_incl) return;
  if (stride == 0) stride = 1;
  const u64 count = (hi_incl - lo) / stride + 1;
  std::vector<State> partial(par::split(0, count, 1).size());
  const auto chunks = par::split(0, count, 1);
  const std::int64_t n_chunks = static_cast<std::int64_t>(chunks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < n_chunks; ++c) {
    State& local = partial[static_cast<std::size_t>(c)];
    for (u64 idx = chunks[c].lo; idx < chunks[c].hi; ++idx) {
      const u64 n = lo + idx * stride;
      if (!step(local, n, s_fast(n))) break;
    }
  }
  for (auto& p : partial) total.merge(std::move(p));
}

bool same_parity(u64 n, i64 s) { return ((static_cast<u64>(s) ^ n) & 1u) == 0; }

auto parity_step() {
  return [](CheckState& st, u64 n, i64 s) {
    ++st.cases;
    if (same_parity(n, s)) {
      st.first = Violation{n, "S(n) and n of opposite parity",
                           "S(n) = " + std::to_string(s)};
      return false;
    }
    return true;
  };
}

// n = 2^{2k+1} - 1 for some k >= 1: binary all-ones of odd length >= 3.
bool is_upper_family(u64 n) {
  return n >= 7 && (n & (n + 1)) == 0 && (std::bit_width(n) & 1) == 1;
}

auto upper_ratio_step() {
  return [](CheckState& st, u64 n, i64 s) {
    ++st.cases;
    const i128 sq = static_cast<i128>(s) * s;
    const i128 two_n = static_cast<i128>(n) * 2;
    if (is_upper_family(n)) {
      if (!(sq > two_n)) {
        st.first = Violation{n, "S(n)^2 > 2n on the all-ones family",
                             "S(n) = " + std::to_string(s)};
        return false;
      }
    } else if (!(sq < two_n)) {
      st.first = Violation{n, "S(n)^2 < 2n", "S(n) = " + std::to_string(s)};
      return false;
    }
    return true;
  };
}

auto lower_ratio_step() {
  return [](CheckState& st, u64 n, i64 s) {
    ++st.cases;
    if (s <= 0 || !(static_cast<i128>(s) * s * 3 > static_cast<i128>(n))) {
      st.first = Violation{n, "S(n) > 0 and 3*S(n)^2 > n",
                           "S(n) = " + std::to_string(s)};
      return false;
    }
    return true;
  };
}

struct ExtremaState {
  static constexpr std::size_t kArgCap = 16;
  i64 mx = std::numeric_limits<i64>::min();
  i64 mn = std::numeric_limits<i64>::max();
  std::vector<u64> argmax, argmin;

  void see(u64 n, i64 s) {
    if (s > mx) {
      mx = s;
      argmax.assign(1, n);
    } else if (s == mx && argmax.size() < kArgCap) {
      argmax.push_back(n);
    }
    if (s < mn) {
      mn = s;
      argmin.assign(1, n);
    } else if (s == mn && argmin.size() < kArgCap) {
      argmin.push_back(n);
    }
  }

  void merge(ExtremaState&& o) {
    if (o.mx > mx) {
      mx = o.mx;
      argmax = std::move(o.argmax);
    } else if (o.mx == mx) {
      for (u64 n : o.argmax)
        if (argmax.size() < kArgCap) argmax.push_back(n);
    }
    if (o.mn < mn) {
      mn = o.mn;
      argmin = std::move(o.argmin);
    } else if (o.mn == mn) {
      for (u64 n : o.argmin)
        if (argmin.size() < kArgCap) argmin.push_back(n);
    }
  }
};

// ratio ordering via exact cross-multiplication: S_a/sqrt(a) < S_b/sqrt(b)
// iff S_a^2 * b < S_b^2 * a (all S positive here).
bool ratio_less(i64 sa, u64 na, i64 sb, u64 nb) {
  return static_cast<i128>(sa) * sa * static_cast<i128>(nb) <
         static_cast<i128>(sb) * sb * static_cast<i128>(na);
}

struct RatioState {
  bool any = false;
  i64 max_s = 0, min_s = 0;
  u64 max_n = 0, min_n = 0;

  void see(u64 n, i64 s) {
    if (!any) {
      any = true;
      max_s = min_s = s;
      max_n = min_n = n;
      return;
    }
    if (ratio_less(max_s, max_n, s, n)) {
      max_s = s;
      max_n = n;
    }
    if (ratio_less(s, n, min_s, min_n)) {
      min_s = s;
      min_n = n;
    }
  }

  void merge(RatioState&& o) {
    if (!o.any) return;
    if (!any) {
      *this = o;
      return;
    }
    if (ratio_less(max_s, max_n, o.max_s, o.max_n)) {
      max_s = o.max_s;
      max_n = o.max_n;
    }
    if (ratio_less(o.min_s, o.min_n, min_s, min_n)) {
      min_s = o.min_s;
      min_n = o.min_n;
    }
  }
};

struct JkState {
  u64 cases = 0;
  i64 max_s = std::numeric_limits<i64>::min();
  std::optional<Violation> first;

  void merge(JkState&& o) {
    cases += o.cases;
    max_s = std::max(max_s, o.max_s);
    if (o.first && (!first || o.first->n < first->n)) first = std::move(o.first);
  }
};

}  // namespace

SummatoryStream SummatoryStream::seeded(std::uint64_t start) {
  check_index(start);
  SummatoryStream st;
  st.next_n_ = start;
  st.sum_ = start == 0 ? 0 : s_fast(start - 1);
  return st;
}

SummatoryPoint SummatoryStream::next() {
  check_index(next_n_);
  sum_ += i_direct(next_n_).value();
  return {next_n_++, sum_};
}

std::int64_t s_fast(std::uint64_t n) {
  check_index(n);
  return s_eval(n).s;
}

std::vector<std::int64_t> s_table(std::uint64_t n_max) {
  check_index(n_max);
  std::vector<i64> table(n_max + 1);
  const auto chunks = par::split(0, n_max + 1, kMinChunk);
  const std::int64_t n_chunks = static_cast<std::int64_t>(chunks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < n_chunks; ++c) {
    auto stream = SummatoryStream::seeded(chunks[c].lo);
    for (u64 n = chunks[c].lo; n < chunks[c].hi; ++n) table[n] = stream.next().value;
  }
  return table;
}

SweepReport check_parity(std::uint64_t n_max, std::uint64_t stride_above) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  check_index(n_max);
  auto step = parity_step();
  CheckState st = chunked_sweep<CheckState>(1, std::min(n_max, kFullSweepLimit), step);
  if (n_max > kFullSweepLimit)
    strided_tail(st, kFullSweepLimit + 1, n_max, stride_above, step);
  return {"parity", st.cases, std::move(st.first)};
}

SweepReport check_floor_bound(std::uint64_t n_max, std::uint64_t stride_above) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  check_index(n_max);
  CheckState total;
  const u64 full_hi = std::min(n_max, kFullSweepLimit);
  const auto chunks = par::split(1, full_hi + 1, kMinChunk);
  std::vector<CheckState> partial(chunks.size());
  const std::int64_t n_chunks = static_cast<std::int64_t>(chunks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < n_chunks; ++c) {
    auto main = SummatoryStream::seeded(chunks[c].lo);
    auto quarter = SummatoryStream::seeded(chunks[c].lo >> 2);
    SummatoryPoint q = quarter.next();
    CheckState& local = partial[static_cast<std::size_t>(c)];
    for (u64 n = chunks[c].lo; n < chunks[c].hi; ++n) {
      const auto p = main.next();
      while (q.index < (n >> 2)) q = quarter.next();
      ++local.cases;
      const i64 d = 2 * q.value - p.value;
      if (d < -2 || d > 2) {
        local.first = Violation{n, "2*S(n/4) within [S(n)-2, S(n)+2]",
                                "S(n) = " + std::to_string(p.value) +
                                    ", S(n/4) = " + std::to_string(q.value)};
        break;
      }
    }
  }
  for (auto& p : partial) total.merge(std::move(p));
  if (n_max > kFullSweepLimit) {
    strided_tail(total, kFullSweepLimit + 1, n_max, stride_above,
                 [](CheckState& st, u64 n, i64 s) {
                   ++st.cases;
                   const i64 d = 2 * s_fast(n >> 2) - s;
                   if (d < -2 || d > 2) {
                     st.first = Violation{n, "2*S(n/4) within [S(n)-2, S(n)+2]",
                                          "S(n) = " + std::to_string(s)};
                     return false;
                   }
                   return true;
                 });
  }
  return {"floor", total.cases, std::move(total.first)};
}

SweepReport check_dividing_identities(unsigned k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (k > 29) throw std::out_of_range("k too large for the index range");
  const u64 p2k = u64{1} << (2 * k);      // 2^{2k}
  const u64 p2k1 = u64{1} << (2 * k + 1); // 2^{2k+1}

  struct Eq {
    const char* name;
    u64 lo, hi, offset;
    i64 scale;  // S(n+offset) = scale*S(n) + addend
    i64 addend;
  };
  const Eq eqs[4] = {
      {"S(n+2^{2k}) = -S(n)+3*2^k", p2k, 2 * p2k - 1, p2k, -1, i64{3} << k},
      {"S(n+3*2^{2k}) = S(n)+2^k", 0, p2k - 1, 3 * p2k, +1, i64{1} << k},
      {"S(n+2^{2k+1}) = -S(n)+2^{k+2}", p2k1, 2 * p2k1 - 1, p2k1, -1, i64{1} << (k + 2)},
      {"S(n+3*2^{2k+1}) = S(n)+2^{k+1}", 0, p2k1 - 1, 3 * p2k1, +1, i64{1} << (k + 1)},
  };

  CheckState total;
  for (const Eq& eq : eqs) {
    CheckState st = chunked_offset_sweep<CheckState>(
        eq.lo, eq.hi, eq.offset, [&eq](CheckState& local, u64 n, i64 s, i64 shifted) {
          ++local.cases;
          if (shifted != eq.scale * s + eq.addend) {
            local.first = Violation{n, eq.name,
                                    "S(n) = " + std::to_string(s) +
                                        ", S(n+offset) = " + std::to_string(shifted)};
            return false;
          }
          return true;
        });
    total.merge(std::move(st));
    if (total.first) break;
  }
  return {"identities", total.cases, std::move(total.first)};
}

bool ExtremaReport::matches_expected() const {
  const i64 expect_max = i64{1} << (k + 1);
  const i64 expect_min = i64{1} << (k - 1);
  const u64 expect_argmax = (u64{1} << (2 * k + 1)) - 1;
  const u64 expect_argmin = 3 * (u64{1} << (2 * k - 2)) - 1;
  return max_value == expect_max && min_value == expect_min &&
         argmax == std::vector<u64>{expect_argmax} &&
         argmin == std::vector<u64>{expect_argmin};
}

ExtremaReport interval_extrema(unsigned k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (k > 30) throw std::out_of_range("k too large for the index range");
  const IntervalIk I{k};
  ExtremaState st = chunked_sweep<ExtremaState>(
      I.lo(), I.hi(), [](ExtremaState& local, u64 n, i64 s) {
        local.see(n, s);
        return true;
      });
  ExtremaReport rep{k, st.mx, st.mn, std::move(st.argmax), std::move(st.argmin)};
  return rep;
}

std::uint64_t jk_lo(unsigned k) { return (u64{1} << (2 * k - 1)) - 1; }
std::uint64_t jk_hi(unsigned k) { return (u64{1} << (2 * k)) - 1; }

std::uint64_t FormRep::encode() const {
  u64 n = (u64{1} << (2 * k)) - 1;
  for (unsigned r = 0; r + 2 <= k; ++r)
    if ((eps_mask >> r) & 1u) n -= u64{3} << (2 * r + 1);
  return n - beta;
}

std::vector<std::pair<std::uint64_t, FormRep>> jk_form_set(unsigned k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (k > 21) throw std::out_of_range("form set too large");
  std::vector<std::pair<u64, FormRep>> out;
  out.reserve(std::size_t{2} << (k - 1));
  const std::uint32_t masks = std::uint32_t{1} << (k - 1);
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    for (unsigned beta : {0u, 2u}) {
      FormRep rep{k, mask, beta};
      const u64 n = rep.encode();
      if (n >= jk_lo(k) && n <= jk_hi(k)) out.emplace_back(n, rep);
    }
  }
  return out;
}

JkReport check_jk_forms(unsigned k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (k > 15) throw std::out_of_range("J_k scan too large");
  const auto forms = jk_form_set(k);
  std::unordered_set<u64> member_set;
  member_set.reserve(forms.size() * 2);
  JkReport rep;
  rep.k = k;
  for (const auto& [n, f] : forms) {
    rep.members.push_back(n);
    member_set.insert(n);
  }

  const i64 target = i64{1} << k;
  JkState st = chunked_sweep<JkState>(
      jk_lo(k), jk_hi(k), [&member_set, target](JkState& local, u64 n, i64 s) {
        ++local.cases;
        local.max_s = std::max(local.max_s, s);
        const bool in_set = member_set.contains(n);
        if (in_set != (s == target)) {
          local.first = Violation{n, "S(n) = 2^k exactly on the form set",
                                  "S(n) = " + std::to_string(s)};
          return false;
        }
        return true;
      });
  rep.set_matches_level_set = !st.first.has_value();
  rep.max_is_two_pow_k = (st.max_s == target);

  rep.all_signs_positive = true;
  for (u64 n : rep.members)
    if (i_direct(n) != Sign::plus()) rep.all_signs_positive = false;

  rep.closure_holds = true;
  const auto next_forms = jk_form_set(k + 1);
  std::unordered_set<u64> next_set;
  next_set.reserve(next_forms.size() * 2);
  for (const auto& [n, f] : next_forms) next_set.insert(n);
  for (u64 n : rep.members)
    if (!next_set.contains(4 * n + 3)) rep.closure_holds = false;

  return rep;
}

SweepReport check_upper_ratio(std::uint64_t n_max, std::uint64_t stride_above) {
  if (n_max < 8) throw std::invalid_argument("n_max must be at least 8");
  check_index(n_max);
  auto step = upper_ratio_step();
  CheckState st = chunked_sweep<CheckState>(8, std::min(n_max, kFullSweepLimit), step);
  if (n_max > kFullSweepLimit)
    strided_tail(st, kFullSweepLimit + 1, n_max, stride_above, step);
  return {"upper-ratio", st.cases, std::move(st.first)};
}

SweepReport check_lower_ratio(std::uint64_t n_max, std::uint64_t stride_above) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  check_index(n_max);
  auto step = lower_ratio_step();
  CheckState st = chunked_sweep<CheckState>(1, std::min(n_max, kFullSweepLimit), step);
  if (n_max > kFullSweepLimit)
    strided_tail(st, kFullSweepLimit + 1, n_max, stride_above, step);
  return {"lower-ratio", st.cases, std::move(st.first)};
}

std::vector<RatioRow> ratio_limit_table(unsigned k_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  if (k_max > 30) throw std::out_of_range("k_max too large for the index range");
  std::vector<RatioRow> rows;
  rows.reserve(k_max);
  for (unsigned k = 1; k <= k_max; ++k) {
    const IntervalIk I{k};
    RatioState st = chunked_sweep<RatioState>(
        I.lo(), I.hi(), [](RatioState& local, u64 n, i64 s) {
          local.see(n, s);
          return true;
        });
    RatioRow row;
    row.k = k;
    row.argmax_n = st.max_n;
    row.argmin_n = st.min_n;
    row.max_s = st.max_s;
    row.min_s = st.min_s;
    row.max_ratio = static_cast<double>(st.max_s) / std::sqrt(static_cast<double>(st.max_n));
    row.min_ratio = static_cast<double>(st.min_s) / std::sqrt(static_cast<double>(st.min_n));
    rows.push_back(row);
  }
  return rows;
}

RatioTableCheck validate_ratio_table(const std::vector<RatioRow>& rows) {
  RatioTableCheck check;
  check.extrema_at_expected_positions = !rows.empty();
  for (const RatioRow& r : rows) {
    const u64 expect_argmax = (u64{1} << (2 * r.k + 1)) - 1;
    const u64 expect_argmin = 3 * (u64{1} << (2 * r.k - 2)) - 1;
    if (r.argmax_n != expect_argmax || r.max_s != (i64{1} << (r.k + 1)) ||
        r.argmin_n != expect_argmin || r.min_s != (i64{1} << (r.k - 1)))
      check.extrema_at_expected_positions = false;
  }
  check.max_strictly_decreasing = true;
  check.min_strictly_decreasing = true;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const RatioRow& a = rows[i - 1];
    const RatioRow& b = rows[i];
    if (!ratio_less(b.max_s, b.argmax_n, a.max_s, a.argmax_n))
      check.max_strictly_decreasing = false;
    if (!ratio_less(b.min_s, b.argmin_n, a.min_s, a.argmin_n))
      check.min_strictly_decreasing = false;
  }
  return check;
}

std::vector<GSample> g_sample(unsigned octave, std::size_t count) {
  if (octave < 2) throw std::invalid_argument("octave must be at least 2");
  if (count < 2) throw std::invalid_argument("count must be at least 2");
  if (octave > 30) throw std::out_of_range("4^{octave+1} exceeds the index range");
  const u64 lo = u64{1} << (2 * octave);
  const u64 hi = (u64{1} << (2 * octave + 2)) - 1;

  std::vector<u64> grid;
  grid.reserve(count);
  for (std::size_t j = 1; j <= count; ++j) {
    const double exponent =
        2.0 * (static_cast<double>(octave) + static_cast<double>(j) / static_cast<double>(count));
    const double value = std::exp2(exponent);
    u64 n = static_cast<u64>(std::llround(value));
    n = (n == 0) ? lo : n - 1;
    n = std::clamp(n, lo, hi);
    grid.push_back(n);
  }
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<GSample> out(grid.size());
  const std::int64_t total = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const u64 n = grid[static_cast<std::size_t>(idx)];
    const i64 s = s_fast(n);
    const double nd = static_cast<double>(n);
    double x = std::log2(nd) / 2.0 - static_cast<double>(octave);
    if (x < 0.0) x = 0.0;
    const double y = static_cast<double>(s) / std::sqrt(nd);
    out[static_cast<std::size_t>(idx)] = {x, y, n};
  }
  for (const GSample& g : out)
    if (!(g.y > 0.0)) throw std::logic_error("sample with non-positive S");
  return out;
}

namespace serial {

namespace {

// One pass from N = 0; pred mirrors the parallel step functions.
template <class Step>
CheckState stream_sweep(u64 lo, u64 hi_incl, Step step) {
  CheckState st;
  SummatoryStream stream;
  for (u64 n = 0; n <= hi_incl; ++n) {
    const auto p = stream.next();
    if (n < lo) continue;
    if (!step(st, p.index, p.value)) break;
  }
  return st;
}

}  // namespace

SweepReport check_parity(std::uint64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  CheckState st = stream_sweep(1, n_max, parity_step());
  return {"parity", st.cases, std::move(st.first)};
}

SweepReport check_floor_bound(std::uint64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  CheckState st;
  SummatoryStream main;
  SummatoryStream quarter;
  SummatoryPoint q = quarter.next();
  main.next();  // consume N = 0
  for (u64 n = 1; n <= n_max; ++n) {
    const auto p = main.next();
    while (q.index < (n >> 2)) q = quarter.next();
    ++st.cases;
    const i64 d = 2 * q.value - p.value;
    if (d < -2 || d > 2) {
      st.first = Violation{n, "2*S(n/4) within [S(n)-2, S(n)+2]",
                           "S(n) = " + std::to_string(p.value) +
                               ", S(n/4) = " + std::to_string(q.value)};
      break;
    }
  }
  return {"floor", st.cases, std::move(st.first)};
}

ExtremaReport interval_extrema(unsigned k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (k > 30) throw std::out_of_range("k too large for the index range");
  const IntervalIk I{k};
  ExtremaState st;
  SummatoryStream stream;
  for (u64 n = 0; n <= I.hi(); ++n) {
    const auto p = stream.next();
    if (n >= I.lo()) st.see(p.index, p.value);
  }
  return {k, st.mx, st.mn, std::move(st.argmax), std::move(st.argmin)};
}

SweepReport check_upper_ratio(std::uint64_t n_max) {
  if (n_max < 8) throw std::invalid_argument("n_max must be at least 8");
  CheckState st = stream_sweep(8, n_max, upper_ratio_step());
  return {"upper-ratio", st.cases, std::move(st.first)};
}

SweepReport check_lower_ratio(std::uint64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  CheckState st = stream_sweep(1, n_max, lower_ratio_step());
  return {"lower-ratio", st.cases, std::move(st.first)};
}

std::vector<std::int64_t> s_table(std::uint64_t n_max) {
  check_index(n_max);
  std::vector<i64> table(n_max + 1);
  SummatoryStream stream;
  for (u64 n = 0; n <= n_max; ++n) table[n] = stream.next().value;
  return table;
}

}  // namespace serial

}  // namespace invseq
