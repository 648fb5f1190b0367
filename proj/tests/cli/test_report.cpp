#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "report.hpp"
#include "suites.hpp"

using namespace hopf::cli;

namespace {

std::string random_text(std::mt19937& rng) {
  static const std::string alphabet = "abcXYZ019 _-+*/()[]{}\"\\\n\t@^";
  std::uniform_int_distribution<std::size_t> len(0, 12), pick(0, alphabet.size() - 1);
  std::string s(len(rng), ' ');
  for (auto& c : s) c = alphabet[pick(rng)];
  return s;
}

// PASS/FAIL column of the table, in record order.
std::vector<bool> table_verdicts(std::string const& table) {
  std::vector<bool> out;
  std::istringstream in(table);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("PASS  ", 0) == 0) out.push_back(true);
    if (line.rfind("FAIL  ", 0) == 0) out.push_back(false);
  }
  return out;
}

}  // namespace

TEST_CASE("JSON round trip on random reports") {
  std::mt19937 rng(7);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    Report r;
    r.command = random_text(rng);
    r.seconds = std::uniform_real_distribution<double>(0, 100)(rng);
    for (int k = std::uniform_int_distribution<int>(0, 6)(rng); k > 0; --k)
      r.records.push_back(
          {random_text(rng), random_text(rng), coin(rng), random_text(rng), random_text(rng)});
    CHECK(parse_json(render_json(r)) == r);
  }
}

TEST_CASE("exit code is 0 iff no record fails") {
  Report r;
  CHECK(r.exit_code() == 0);
  r.records.push_back({"a", "x", true, "", ""});
  CHECK(r.exit_code() == 0);
  r.records.push_back({"b", "x", false, "w", ""});
  CHECK(r.failures() == 1);
  CHECK(r.exit_code() == 1);
}

TEST_CASE("table and JSON agree on pass/fail for a real suite") {
  Context ctx;
  Report r{"hopf yd", yd_suite(ctx), 0.5};
  REQUIRE(!r.records.empty());
  auto back = parse_json(render_json(r));
  std::vector<bool> from_json;
  for (auto const& rec : back.records) from_json.push_back(rec.pass);
  CHECK(table_verdicts(render_table(r)) == from_json);
  CHECK(back == r);
  CHECK(nlohmann::json::parse(render_json(r)).at("failures") == r.failures());
}

TEST_CASE("census suite counts") {
  Context ctx;
  auto recs = simples_suite(ctx);
  auto find = [&](std::string const& n) {
    for (auto const& r : recs)
      if (r.name == n) return r;
    FAIL("missing record " << n);
    return Record{};
  };
  CHECK(find("one-dimensional simples").witness == "32");
  CHECK(find("two-dimensional simples").witness == "56");
  CHECK(find("total simples").witness == "88");
  CHECK(find("sum of squares").witness == "32 + 224 = 256");
}

TEST_CASE("module names") {
  Context ctx;
  CHECK(module_by_name(ctx, "M7").dim == 2);
  CHECK(module_by_name(ctx, "chi_0110").dim == 1);
  CHECK(module_by_name(ctx, "W1_100").dim == 2);
  CHECK_THROWS_AS(module_by_name(ctx, "M13"), std::invalid_argument);
  auto w = nichols_module(ctx, "W1_100", 6);
  CHECK(w.at(0).witness == "Undetermined(cap=6)");
  CHECK(w.at(0).detail == "ranks 2,4,8,11,18,28");
}
