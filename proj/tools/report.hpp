#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace hopf::cli {

struct Record {
  std::string name;
  std::string anchor;   // which claim the check reproduces
  bool pass = false;
  std::string witness;  // first failure or the computed value
  std::string detail;
  friend bool operator==(Record const&, Record const&) = default;
};

struct Report {
  std::string command;
  std::vector<Record> records;
  double seconds = 0;
  std::size_t failures() const;
  int exit_code() const { return failures() == 0 ? 0 : 1; }
  friend bool operator==(Report const&, Report const&) = default;
};

void to_json(nlohmann::json& j, Record const& r);
void from_json(nlohmann::json const& j, Record& r);
void to_json(nlohmann::json& j, Report const& r);
void from_json(nlohmann::json const& j, Report& r);

std::string render_json(Report const& r);
Report parse_json(std::string const& text);
std::string render_table(Report const& r);

}  // namespace hopf::cli
