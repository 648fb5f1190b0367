#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopf/drinfeld.hpp"
#include "hopf/kashina.hpp"
#include "hopf/liftings.hpp"
#include "hopf/ydcat.hpp"
#include "report.hpp"

namespace hopf::cli {

// Shared objects, built on first use.
class Context {
 public:
  kashina::KashinaH const& h();
  DoubleData const& d();
  std::vector<CatalogEntry> const& catalog();

 private:
  std::optional<kashina::KashinaH> h_;
  std::optional<DoubleData> d_;
  std::optional<std::vector<CatalogEntry>> cat_;
};

// Catalog names (V1, M7), characters chi_0110, or family names with one
// digit per index: V_0120, W1_100, W3_12, U_1002.
YDModule module_by_name(Context& ctx, std::string const& name);

std::vector<Record> kashina_suite(Context& ctx, unsigned seed);
std::vector<Record> double_suite(Context& ctx);
std::vector<Record> simples_suite(Context& ctx);
std::vector<Record> yd_suite(Context& ctx);
std::vector<Record> nichols_suite(Context& ctx, unsigned cap);
std::vector<Record> nichols_module(Context& ctx, std::string const& name, unsigned cap);
// Eigenvalue-one certificates and positive W-family ranks over all simples.
std::vector<Record> infinitude_evidence(Context& ctx);

struct LiftingRequest {
  std::string family;
  std::map<std::string, Scalar> values;
  bool verify = false;
  bool completed = false;
  int cap = 12;
};
std::vector<Record> lifting_one(Context& ctx, LiftingRequest const& req);
// Every family at zeros, ones and the mixed set, as written and completed.
std::vector<Record> lifting_all(Context& ctx, int cap);
std::vector<Record> zero_compare_all(Context& ctx);
std::vector<Record> parameter_iso_suite(Context& ctx);
std::vector<Record> mutation_suite(Context& ctx, unsigned seed);
std::vector<Record> presentation_file(std::string const& path, bool verify, int cap);

}  // namespace hopf::cli
