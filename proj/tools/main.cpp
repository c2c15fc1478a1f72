#include <chrono>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "invseq/automaton.hpp"
#include "invseq/digits.hpp"
#include "invseq/emit.hpp"
#include "invseq/parallel.hpp"
#include "invseq/recurrence.hpp"
#include "invseq/summatory.hpp"
#include "invseq/words.hpp"

namespace {

using invseq::Sign;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRange = 3;

// Prefix-based methods materialize i_0..i_n; keep that desk-sized.
constexpr std::uint64_t kMorphismEvalCap = std::uint64_t{1} << 24;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

// ---- eval ----

bool method_supports(const std::string& method, const std::string& sequence) {
  if (method == "direct") return true;
  if (method == "dfao") return sequence == "i" || sequence == "t";
  if (method == "morphism") return sequence == "i" || sequence == "r";
  if (method == "rec2" || method == "rec4") return sequence == "i";
  return false;
}

Sign eval_one(const std::string& method, const std::string& sequence, std::uint64_t n) {
  if (!method_supports(method, sequence))
    throw std::invalid_argument("method '" + method + "' does not evaluate sequence '" +
                                sequence + "'");
  if (method == "direct") {
    if (sequence == "i") return invseq::i_direct(n);
    if (sequence == "t") return invseq::t_direct(n);
    return invseq::r_direct(n);
  }
  if (method == "dfao") {
    const auto pair = invseq::dfao_eval(invseq::inversion_dfao(), n);
    return sequence == "t" ? pair.first : pair.second;
  }
  if (method == "morphism") {
    if (n >= kMorphismEvalCap)
      throw std::out_of_range("morphism evaluation materializes a prefix; n must be < 2^24");
    const auto m = sequence == "i" ? invseq::morphism_g() : invseq::morphism_rs();
    return invseq::coded_prefix(m, static_cast<std::size_t>(n) + 1).back();
  }
  if (method == "rec2") return invseq::i_rec2(n);
  return invseq::i_rec4(n);
}

int cmd_eval(std::uint64_t n, const std::string& sequence, const std::string& method,
             bool all_methods) {
  if (!all_methods) {
    std::printf("%s\n", invseq::to_cstr(eval_one(method, sequence, n)));
    return kExitOk;
  }
  static const char* kMethods[] = {"direct", "dfao", "morphism", "rec2", "rec4"};
  std::optional<Sign> first;
  bool consistent = true;
  for (const char* m : kMethods) {
    if (!method_supports(m, sequence)) continue;
    const Sign s = eval_one(m, sequence, n);
    std::printf("%-8s %s\n", m, invseq::to_cstr(s));
    if (!first)
      first = s;
    else if (*first != s)
      consistent = false;
  }
  std::printf("consistent: %s\n", consistent ? "yes" : "NO");
  return consistent ? kExitOk : kExitVerifyFail;
}

// ---- sum ----

int cmd_sum(std::uint64_t n, const std::string& method, bool series,
            const std::string& emit) {
  if (!series) {
    std::int64_t s;
    if (method == "fast") {
      s = invseq::s_fast(n);
    } else {
      invseq::SummatoryStream stream;
      invseq::SummatoryPoint p{0, 0};
      for (std::uint64_t i = 0; i <= n; ++i) p = stream.next();
      s = p.value;
    }
    std::printf("%" PRId64 "\n", s);
    return kExitOk;
  }
  const std::vector<std::int64_t> table =
      method == "fast" ? invseq::s_table(n) : invseq::serial::s_table(n);
  std::vector<invseq::SummatoryPoint> points(table.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    points[i] = {static_cast<std::uint64_t>(i), table[i]};
  if (emit == "csv") {
    std::fputs(invseq::emit::csv_series(points).c_str(), stdout);
  } else if (emit == "json") {
    std::printf("%s\n", invseq::emit::json_series(points).dump().c_str());
  } else {
    for (const auto& p : points)
      std::printf("%" PRIu64 " %" PRId64 "\n", p.index, p.value);
  }
  return kExitOk;
}

// ---- verify ----

struct Failure {
  std::string input;
  std::string expected;
  std::string actual;
};

struct SuiteResult {
  std::string suite;
  bool passed = false;
  std::uint64_t cases = 0;
  std::vector<Failure> failures;
  double elapsed_ms = 0.0;
};

SuiteResult from_sweep(const invseq::SweepReport& rep) {
  SuiteResult r;
  r.suite = rep.suite;
  r.passed = rep.passed();
  r.cases = rep.cases;
  if (rep.first_violation) {
    const auto& v = *rep.first_violation;
    r.failures.push_back({"n = " + std::to_string(v.n), v.expected, v.actual});
  }
  return r;
}

SuiteResult run_parity(std::uint64_t n_max, std::uint64_t stride) {
  return from_sweep(invseq::check_parity(n_max, stride));
}

SuiteResult run_floor(std::uint64_t n_max, std::uint64_t stride) {
  return from_sweep(invseq::check_floor_bound(n_max, stride));
}

SuiteResult run_identities(unsigned k_max) {
  SuiteResult r;
  r.suite = "identities";
  r.passed = true;
  for (unsigned k = 1; k <= k_max; ++k) {
    const auto rep = invseq::check_dividing_identities(k);
    r.cases += rep.cases;
    if (!rep.passed()) {
      r.passed = false;
      const auto& v = *rep.first_violation;
      r.failures.push_back(
          {"k = " + std::to_string(k) + ", n = " + std::to_string(v.n), v.expected, v.actual});
    }
  }
  return r;
}

SuiteResult run_extrema(unsigned k_max) {
  SuiteResult r;
  r.suite = "extrema";
  r.passed = true;
  for (unsigned k = 1; k <= k_max; ++k) {
    const auto rep = invseq::interval_extrema(k);
    const invseq::IntervalIk I{k};
    r.cases += I.hi() - I.lo() + 1;
    if (!rep.matches_expected()) {
      r.passed = false;
      r.failures.push_back(
          {"k = " + std::to_string(k),
           "max 2^{k+1} uniquely at 2^{2k+1}-1, min 2^{k-1} uniquely at 3*4^{k-1}-1",
           "max " + std::to_string(rep.max_value) + " (" +
               std::to_string(rep.argmax.size()) + " positions), min " +
               std::to_string(rep.min_value) + " (" + std::to_string(rep.argmin.size()) +
               " positions)"});
    }
  }
  return r;
}

SuiteResult run_jkform(unsigned k_max) {
  SuiteResult r;
  r.suite = "jkform";
  r.passed = true;
  for (unsigned k = 1; k <= k_max; ++k) {
    const auto rep = invseq::check_jk_forms(k);
    r.cases += invseq::jk_hi(k) - invseq::jk_lo(k) + 1;
    if (!rep.passed()) {
      r.passed = false;
      std::string what;
      if (!rep.set_matches_level_set) what += "level-set mismatch; ";
      if (!rep.all_signs_positive) what += "member with i_n != +1; ";
      if (!rep.max_is_two_pow_k) what += "max over J_k differs from 2^k; ";
      if (!rep.closure_holds) what += "4m+3 closure broken; ";
      r.failures.push_back({"k = " + std::to_string(k), "form-set characterization", what});
    }
  }
  return r;
}

SuiteResult run_bounds(std::uint64_t n_max, std::uint64_t stride) {
  SuiteResult r;
  r.suite = "bounds";
  r.passed = true;
  const auto lower = invseq::check_lower_ratio(n_max, stride);
  r.cases += lower.cases;
  if (!lower.passed()) {
    r.passed = false;
    const auto& v = *lower.first_violation;
    r.failures.push_back({"n = " + std::to_string(v.n), v.expected, v.actual});
  }
  if (n_max >= 8) {
    const auto upper = invseq::check_upper_ratio(n_max, stride);
    r.cases += upper.cases;
    if (!upper.passed()) {
      r.passed = false;
      const auto& v = *upper.first_violation;
      r.failures.push_back({"n = " + std::to_string(v.n), v.expected, v.actual});
    }
  }
  return r;
}

SuiteResult run_limits(unsigned k_max) {
  SuiteResult r;
  r.suite = "limits";
  r.passed = true;
  const auto rows = invseq::ratio_limit_table(k_max);
  for (const auto& row : rows) {
    const invseq::IntervalIk I{row.k};
    r.cases += I.hi() - I.lo() + 1;
  }
  const auto check = invseq::validate_ratio_table(rows);
  if (!check.passed()) {
    r.passed = false;
    std::string what;
    if (!check.extrema_at_expected_positions) what += "ratio extrema off position; ";
    if (!check.max_strictly_decreasing) what += "max ratio not strictly decreasing; ";
    if (!check.min_strictly_decreasing) what += "min ratio not strictly decreasing; ";
    r.failures.push_back({"k <= " + std::to_string(k_max), "ratio table shape", what});
  }
  return r;
}

SuiteResult run_words(std::size_t prefix_len) {
  SuiteResult r;
  r.suite = "words";
  const auto check = invseq::check_words(prefix_len);
  r.passed = check.passed();
  r.cases = prefix_len / 2 + prefix_len / 3 + prefix_len / 5;
  if (!r.passed)
    r.failures.push_back({"prefix_len = " + std::to_string(prefix_len),
                          "repetition and palindrome structure", check.detail});
  return r;
}

int cmd_verify(const std::string& suite, unsigned k_max, std::uint64_t n_max,
               std::size_t prefix_len, std::uint64_t stride, const std::string& emit) {
  const bool all = suite == "all";
  std::vector<SuiteResult> results;
  auto want = [&](const char* name) { return all || suite == name; };

  auto timed = [&](auto&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteResult r = fn();
    r.elapsed_ms = ms_since(t0);
    results.push_back(std::move(r));
  };

  if (want("parity")) timed([&] { return run_parity(n_max, stride); });
  if (want("floor")) timed([&] { return run_floor(n_max, stride); });
  if (want("identities")) timed([&] { return run_identities(k_max); });
  if (want("extrema")) timed([&] { return run_extrema(k_max); });
  if (want("jkform")) timed([&] { return run_jkform(k_max); });
  if (want("bounds")) timed([&] { return run_bounds(n_max, stride); });
  if (want("limits")) timed([&] { return run_limits(k_max); });
  if (want("words")) timed([&] { return run_words(prefix_len); });

  if (results.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");

  bool all_passed = true;
  for (const auto& r : results) all_passed = all_passed && r.passed;

  if (emit == "json") {
    json arr = json::array();
    for (const auto& r : results) {
      json failures = json::array();
      for (const auto& f : r.failures)
        failures.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
      arr.push_back({{"suite", r.suite},
                     {"passed", r.passed},
                     {"cases_run", r.cases},
                     {"failures", failures},
                     {"elapsed_ms", r.elapsed_ms}});
    }
    std::printf("%s\n", arr.dump().c_str());
  } else {
    for (const auto& r : results) {
      std::printf("%-10s %s  cases=%" PRIu64 "\n", r.suite.c_str(),
                  r.passed ? "PASS" : "FAIL", r.cases);
      for (const auto& f : r.failures)
        std::printf("           %s: expected %s, got %s\n", f.input.c_str(),
                    f.expected.c_str(), f.actual.c_str());
      std::fprintf(stderr, "%s: %.1f ms\n", r.suite.c_str(), r.elapsed_ms);
    }
  }
  return all_passed ? kExitOk : kExitVerifyFail;
}

// ---- sample-g ----

int cmd_sample_g(unsigned octave, std::size_t count, const std::string& emit) {
  const auto samples = invseq::g_sample(octave, count);
  if (emit == "json") {
    std::printf("%s\n", invseq::emit::json_gsamples(samples).dump().c_str());
  } else {
    std::fputs(invseq::emit::csv_gsamples(samples).c_str(), stdout);
  }
  double lo = samples.front().y, hi = samples.front().y;
  for (const auto& g : samples) {
    lo = std::min(lo, g.y);
    hi = std::max(hi, g.y);
  }
  std::fprintf(stderr, "y range: min=%.8f max=%.8f over %zu samples\n", lo, hi,
               samples.size());
  return kExitOk;
}

// ---- scan ----

int cmd_scan_powers(int power, std::size_t prefix_len) {
  const auto rep = invseq::scan_powers(power, prefix_len);
  std::printf("%s\n", invseq::emit::json_repetition(rep).dump().c_str());

  bool ok = true;
  if (power == 2) {
    std::vector<std::uint64_t> admissible =
        invseq::claimed_square_periods(prefix_len / 2);
    for (const auto& [p, s] : rep.period_witness) {
      if (std::find(admissible.begin(), admissible.end(), p) == admissible.end()) ok = false;
    }
    for (std::uint64_t p : admissible)
      if (invseq::square_witness_fits(p, prefix_len) && !rep.period_witness.contains(p))
        ok = false;
  } else if (power == 3) {
    ok = rep.periods() == std::vector<std::uint64_t>{3};
  } else if (power >= 5) {
    ok = rep.period_witness.empty();
  }
  if (!ok) std::fprintf(stderr, "scan: repetition structure violated\n");
  return ok ? kExitOk : kExitVerifyFail;
}

int cmd_scan_palindromes(std::size_t prefix_len) {
  const auto rep = invseq::scan_palindromes(prefix_len);
  std::printf("%s\n", invseq::emit::json_palindromes(rep).dump().c_str());

  bool ok = prefix_len < 2 || rep.max_length >= 2;
  const auto w = invseq::sign_prefix(prefix_len);
  auto is_pal = [&w](std::size_t start, std::size_t len) {
    for (std::size_t j = 0; j < len / 2; ++j)
      if (w[start + j] != w[start + len - 1 - j]) return false;
    return true;
  };
  if (rep.max_even_length > 0 && !is_pal(rep.even_start, rep.max_even_length)) ok = false;
  if (rep.max_odd_length > 0 && !is_pal(rep.odd_start, rep.max_odd_length)) ok = false;
  if (!ok) std::fprintf(stderr, "scan: palindrome witness check failed\n");
  return ok ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"evaluators, partial sums and verification suites for the "
               "binary inversion-parity sequence"};
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads, "worker threads for sweeps (default: all)");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate one sequence element");
  std::uint64_t eval_n = 0;
  std::string eval_sequence = "i", eval_method = "direct";
  bool eval_all = false;
  eval->add_option("n", eval_n, "index")->required();
  eval->add_option("--sequence", eval_sequence, "i, t or r")
      ->check(CLI::IsMember({"i", "t", "r"}));
  eval->add_option("--method", eval_method, "direct, dfao, morphism, rec2 or rec4")
      ->check(CLI::IsMember({"direct", "dfao", "morphism", "rec2", "rec4"}));
  eval->add_flag("--all-methods", eval_all, "run every method supporting the sequence");

  // sum
  auto* sum = app.add_subcommand("sum", "inclusive partial sum S(N)");
  std::uint64_t sum_n = 0;
  std::string sum_method = "fast", sum_emit = "plain";
  bool sum_series = false;
  sum->add_option("N", sum_n, "upper index")->required();
  sum->add_option("--method", sum_method, "fast or stream")
      ->check(CLI::IsMember({"fast", "stream"}));
  sum->add_flag("--series", sum_series, "emit the full table 0..N");
  sum->add_option("--emit", sum_emit, "plain, csv or json")
      ->check(CLI::IsMember({"plain", "csv", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string verify_suite = "all", verify_emit = "plain";
  unsigned verify_kmax = 8;
  std::uint64_t verify_nmax = std::uint64_t{1} << 22;
  std::size_t verify_prefix = std::size_t{1} << 14;
  std::uint64_t verify_stride = 997;
  verify->add_option("suite", verify_suite,
                     "all, parity, floor, identities, extrema, jkform, bounds, limits, words");
  verify->add_option("--kmax", verify_kmax, "largest scale index (default 8)");
  verify->add_option("--nmax", verify_nmax, "sweep bound (default 2^22)");
  verify->add_option("--prefix-len", verify_prefix, "word scan prefix (default 2^14)");
  verify->add_option("--stride", verify_stride,
                     "sample stride applied beyond 2^24 (default 997)");
  verify->add_option("--emit", verify_emit, "plain or json")
      ->check(CLI::IsMember({"plain", "json"}));

  // sample-g
  auto* sample = app.add_subcommand("sample-g", "fluctuation profile samples");
  unsigned g_octave = 10;
  std::size_t g_count = 4096;
  std::string g_emit = "csv";
  sample->add_option("--octave", g_octave, "octave m: indices span [4^m, 4^{m+1})")
      ->required();
  sample->add_option("--count", g_count, "samples per octave (default 4096)");
  sample->add_option("--emit", g_emit, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // scan
  auto* scan = app.add_subcommand("scan", "combinatorial scans over a prefix");
  scan->require_subcommand(1);
  auto* scan_powers = scan->add_subcommand("powers", "k-power occurrences");
  int scan_power = 2;
  std::size_t scan_prefix = std::size_t{1} << 14;
  scan_powers->add_option("--power", scan_power, "repetition exponent (default 2)");
  scan_powers->add_option("--prefix-len", scan_prefix, "prefix length (default 2^14)");
  auto* scan_pal = scan->add_subcommand("palindromes", "longest palindromic factors");
  std::size_t pal_prefix = std::size_t{1} << 14;
  scan_pal->add_option("--prefix-len", pal_prefix, "prefix length (default 2^14)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    invseq::par::set_threads(threads);
    if (eval->parsed()) return cmd_eval(eval_n, eval_sequence, eval_method, eval_all);
    if (sum->parsed()) return cmd_sum(sum_n, sum_method, sum_series, sum_emit);
    if (verify->parsed())
      return cmd_verify(verify_suite, verify_kmax, verify_nmax, verify_prefix,
                        verify_stride, verify_emit);
    if (sample->parsed()) return cmd_sample_g(g_octave, g_count, g_emit);
    if (scan->parsed()) {
      if (scan_powers->parsed()) return cmd_scan_powers(scan_power, scan_prefix);
      return cmd_scan_palindromes(pal_prefix);
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::fprintf(stderr, "range error: %s\n", e.what());
    return kExitRange;
  } catch (const std::bad_alloc&) {
    std::fprintf(stderr, "out of memory\n");
    return kExitRange;
  }
  return kExitUsage;
}
