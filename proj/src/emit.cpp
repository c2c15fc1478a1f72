#include "invseq/emit.hpp"

#include <cstdio>

namespace invseq::emit {

namespace {

std::string fixed8(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.8f", v);
  return buf;
}

}  // namespace

std::string csv_series(const std::vector<SummatoryPoint>& points) {
  std::string out = "N,S\n";
  for (const auto& p : points)
    out += std::to_string(p.index) + "," + std::to_string(p.value) + "\n";
  return out;
}

std::string csv_gsamples(const std::vector<GSample>& samples) {
  std::string out = "x,y,N\n";
  for (const auto& g : samples)
    out += fixed8(g.x) + "," + fixed8(g.y) + "," + std::to_string(g.index) + "\n";
  return out;
}

std::string csv_ratio_table(const std::vector<RatioRow>& rows) {
  std::string out = "k,max_ratio,min_ratio\n";
  for (const auto& r : rows)
    out += std::to_string(r.k) + "," + fixed8(r.max_ratio) + "," +
           fixed8(r.min_ratio) + "\n";
  return out;
}

nlohmann::json json_series(const std::vector<SummatoryPoint>& points) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : points) arr.push_back({{"N", p.index}, {"S", p.value}});
  return arr;
}

nlohmann::json json_gsamples(const std::vector<GSample>& samples) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& g : samples)
    arr.push_back({{"x", g.x}, {"y", g.y}, {"N", g.index}});
  return arr;
}

nlohmann::json json_ratio_table(const std::vector<RatioRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows)
    arr.push_back({{"k", r.k},
                   {"max_ratio", r.max_ratio},
                   {"min_ratio", r.min_ratio}});
  return arr;
}

nlohmann::json json_repetition(const RepetitionReport& rep) {
  nlohmann::json periods = nlohmann::json::array();
  for (const auto& [p, s] : rep.period_witness)
    periods.push_back({{"period", p}, {"first_position", s}});
  return {{"power", rep.power},
          {"prefix_len", rep.prefix_len},
          {"periods", periods}};
}

nlohmann::json json_palindromes(const PalindromeReport& rep) {
  return {{"prefix_len", rep.prefix_len},
          {"max_length", rep.max_length},
          {"max_even_length", rep.max_even_length},
          {"even_start", rep.even_start},
          {"max_odd_length", rep.max_odd_length},
          {"odd_start", rep.odd_start}};
}

}  // namespace invseq::emit
