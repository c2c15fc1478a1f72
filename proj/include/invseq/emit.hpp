#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "invseq/summatory.hpp"
#include "invseq/words.hpp"

namespace invseq::emit {

// Data streams are deterministic byte-for-byte for fixed inputs: fixed float
// precision, no timestamps.

std::string csv_series(const std::vector<SummatoryPoint>& points);          // header N,S
std::string csv_gsamples(const std::vector<GSample>& samples);              // header x,y,N
std::string csv_ratio_table(const std::vector<RatioRow>& rows);             // header k,max_ratio,min_ratio

nlohmann::json json_series(const std::vector<SummatoryPoint>& points);
nlohmann::json json_gsamples(const std::vector<GSample>& samples);
nlohmann::json json_ratio_table(const std::vector<RatioRow>& rows);
nlohmann::json json_repetition(const RepetitionReport& rep);
nlohmann::json json_palindromes(const PalindromeReport& rep);

}  // namespace invseq::emit
