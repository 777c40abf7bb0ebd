#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace lieloop {

enum class MatchState { Match, Mismatch, Unknown };
std::string to_string(MatchState m);

// One check: suite (e.g. "Prop4", "witness", "loop"), case id, observed verdict, expected
// verdict and free-form structured details. Field order is fixed for byte-stable output.
struct Record {
  std::string suite;
  std::string case_id;
  std::string verdict;
  std::string expected;
  MatchState match = MatchState::Match;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

nlohmann::ordered_json to_json(const Record& r);
nlohmann::ordered_json to_json(const std::vector<Record>& rs);
// One line per record followed by a summary line.
std::string to_text(const std::vector<Record>& rs, bool with_details = false);

struct Tally {
  std::size_t match = 0, mismatch = 0, unknown = 0;
};
Tally tally(const std::vector<Record>& rs);

// 0 when every record matches, 2 on any mismatch, otherwise 3 when some record is Unknown.
int exit_status(const std::vector<Record>& rs);

}  // namespace lieloop
