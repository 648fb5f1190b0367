#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace hopf::cli {

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](Record const& r) { return !r.pass; }));
}

void to_json(nlohmann::json& j, Record const& r) {
  j = {{"name", r.name}, {"anchor", r.anchor}, {"pass", r.pass}, {"witness", r.witness},
       {"detail", r.detail}};
}

void from_json(nlohmann::json const& j, Record& r) {
  j.at("name").get_to(r.name);
  j.at("anchor").get_to(r.anchor);
  j.at("pass").get_to(r.pass);
  j.at("witness").get_to(r.witness);
  j.at("detail").get_to(r.detail);
}

void to_json(nlohmann::json& j, Report const& r) {
  j = {{"command", r.command},
       {"records", r.records},
       {"seconds", r.seconds},
       {"failures", r.failures()}};
}

void from_json(nlohmann::json const& j, Report& r) {
  j.at("command").get_to(r.command);
  j.at("records").get_to(r.records);
  j.at("seconds").get_to(r.seconds);
}

std::string render_json(Report const& r) { return nlohmann::json(r).dump(2) + "\n"; }

Report parse_json(std::string const& text) { return nlohmann::json::parse(text).get<Report>(); }

std::string render_table(Report const& r) {
  std::size_t w = 4;
  for (auto const& rec : r.records) w = std::max(w, rec.name.size());
  std::ostringstream os;
  os << "# " << r.command << "\n";
  for (auto const& rec : r.records) {
    os << (rec.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(w))
       << rec.name << "  " << rec.witness;
    if (!rec.detail.empty()) os << "  [" << rec.detail << "]";
    os << "\n";
  }
  os << "# " << r.records.size() - r.failures() << "/" << r.records.size() << " passed in "
     << std::fixed << std::setprecision(2) << r.seconds << " s\n";
  return os.str();
}

}  // namespace hopf::cli
