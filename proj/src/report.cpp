#include "lieloop/report.hpp"

#include <sstream>

namespace lieloop {

std::string to_string(MatchState m) {
  switch (m) {
    case MatchState::Match: return "Match";
    case MatchState::Mismatch: return "Mismatch";
    case MatchState::Unknown: return "Unknown";
  }
  return "?";
}

nlohmann::ordered_json to_json(const Record& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["case"] = r.case_id;
  j["verdict"] = r.verdict;
  j["expected"] = r.expected;
  j["match"] = to_string(r.match);
  j["details"] = r.details;
  return j;
}

nlohmann::ordered_json to_json(const std::vector<Record>& rs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(to_json(r));
  Tally t = tally(rs);
  nlohmann::ordered_json doc;
  doc["records"] = arr;
  doc["summary"] = {{"match", t.match}, {"mismatch", t.mismatch}, {"unknown", t.unknown}};
  return doc;
}

std::string to_text(const std::vector<Record>& rs, bool with_details) {
  std::ostringstream os;
  for (const auto& r : rs) {
    os << to_string(r.match) << "  " << r.suite << "  " << r.case_id << "  verdict=" << r.verdict
       << " expected=" << r.expected << "\n";
    if (with_details) os << "    " << r.details.dump() << "\n";
  }
  Tally t = tally(rs);
  os << "summary: " << t.match << " match, " << t.mismatch << " mismatch, " << t.unknown << " unknown\n";
  return os.str();
}

Tally tally(const std::vector<Record>& rs) {
  Tally t;
  for (const auto& r : rs) {
    if (r.match == MatchState::Match) ++t.match;
    else if (r.match == MatchState::Mismatch) ++t.mismatch;
    else ++t.unknown;
  }
  return t;
}

int exit_status(const std::vector<Record>& rs) {
  Tally t = tally(rs);
  if (t.mismatch) return 2;
  if (t.unknown) return 3;
  return 0;
}

}  // namespace lieloop
