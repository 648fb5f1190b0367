#include <doctest.h>
#include <set>

#include "hopf/kashina.hpp"

using namespace hopf;
using namespace hopf::kashina;

namespace {
KashinaH const& H() {
  static const KashinaH k = build_H();
  return k;
}
}  // namespace

TEST_CASE("H from structure constants satisfies the Hopf axioms") {
  auto r = verify_hopf(H().h);
  CHECK_MESSAGE(r.pass(), r.summary());
  CHECK(H().h.dim() == 16);
}

TEST_CASE("H from its presentation matches the hand-built algebra") {
  HopfData p = build_H_presented();
  CHECK(p.dim() == 16);
  CHECK(p.labels() == H().h.labels());
  CHECK(p == H().h);
}

TEST_CASE("antipode of t matches the closed form") {
  Vec s = H().h.apply_antipode(H().t);
  CHECK(s == antipode_t_formula(H()));
}

TEST_CASE("a, b, c satisfy the dual relations") {
  auto r = verify_dual_generators(H());
  CHECK_MESSAGE(r.pass(), r.summary());
}

TEST_CASE("every row of the automorphism table is a Hopf automorphism") {
  auto rows = verify_automorphism_table(H());
  REQUIRE(rows.size() == 64);
  for (auto const& c : rows) CHECK_MESSAGE(c.ok(), c.name << " " << c.report.witness);
}

TEST_CASE("search recovers exactly the table") {
  auto found = exhaustive_automorphism_search(H());
  auto table = table_automorphisms(H());
  CHECK(found.size() == 64);
  std::set<std::vector<Scalar>> a, b;
  for (auto const& f : found) a.insert(f.matrix.data());
  for (auto const& t : table) b.insert(t.matrix.data());
  CHECK(a == b);
}

TEST_CASE("ansatz certificate") {
  auto c = general_ansatz_certificate(H());
  CHECK(c.subcoalgebra);
  CHECK(c.complement);
  CHECK(c.no_grouplikes);
}

TEST_CASE("closure of the table") {
  auto table = table_automorphisms(H());
  std::vector<Mat> gens;
  for (auto const& t : table) gens.push_back(t.matrix);
  CHECK(closure_order(gens) == 64);
  auto comp = composition_table(table);
  for (auto const& row : comp)
    for (int v : row) CHECK(v != 0);
}
