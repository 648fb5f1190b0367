// One PASS/FAIL line per acceptance criterion.  Every comparison is exact
// over Q(i); time bounds are wall-clock and only apply where stated.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hopf/drinfeld.hpp"
#include "hopf/kashina.hpp"
#include "hopf/liftings.hpp"
#include "hopf/nichols.hpp"
#include "hopf/simples.hpp"
#include "hopf/ydcat.hpp"

using namespace hopf;

namespace {

struct Outcome {
  bool pass = false;
  std::string summary;
};

struct Criterion {
  int number;
  std::string title;
  std::optional<double> time_limit;  // seconds
  std::function<Outcome()> run;
};

// Shared inputs, built once and timed with the first criterion that needs them.
kashina::KashinaH const& H() {
  static const kashina::KashinaH k = kashina::build_H();
  return k;
}
DoubleData const& D() {
  static const DoubleData d = kashina_double(H());
  return d;
}
std::vector<CatalogEntry> const& Cat() {
  static const std::vector<CatalogEntry> c = catalog(H(), D());
  return c;
}

std::string join(std::vector<std::string> const& v) {
  std::string s;
  for (auto const& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

std::string count(std::size_t good, std::size_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

bool is_w(Family f) {
  return f == Family::W1 || f == Family::W2 || f == Family::W3 || f == Family::W4;
}

Outcome h_construction() {
  kashina::KashinaH k = kashina::build_H();
  VerifyOptions opt;
  opt.force_exhaustive = true;
  AxiomReport ax = verify_hopf(k.h, opt);
  HopfData bare = k.h;
  bare.set_antipode(std::nullopt);
  Mat s = solve_antipode(bare);
  Vec st = s * k.t;
  // Independent reading of 1/2((1+y)x^2 t - (1-y)t) through the parser.
  Vec stated = k.element("1/2*((1 + y) x^2 t - (1 - y) t)");
  bool ok = k.h.dim() == 16 && ax.pass() && ax.mode == "exhaustive" && ax.checks.size() == 5 &&
            st == stated;
  return {ok, "dim " + std::to_string(k.h.dim()) + ", " + ax.summary() + ", S(t) = " +
                  k.h.render(st)};
}

Outcome dual_generators() {
  AxiomReport r = kashina::verify_dual_generators(H());
  return {r.pass(), r.summary()};
}

Outcome automorphisms() {
  auto rows = kashina::verify_automorphism_table(H());
  std::size_t good = std::count_if(rows.begin(), rows.end(), [](auto const& r) { return r.ok(); });
  auto table = kashina::table_automorphisms(H());
  auto found = kashina::exhaustive_automorphism_search(H());
  std::set<std::vector<Scalar>> a, b;
  for (auto const& t : table) a.insert(t.matrix.data());
  for (auto const& f : found) b.insert(f.matrix.data());
  std::vector<Mat> gens;
  for (auto const& t : table) gens.push_back(t.matrix);
  std::size_t order = kashina::closure_order(gens);
  std::reverse(gens.begin(), gens.end());
  std::size_t again = kashina::closure_order(gens);
  bool ok = rows.size() == 64 && good == 64 && a == b && found.size() == 64 && order == again;
  std::string flag = order == 128 ? "agrees with the claimed order 128"
                                  : "differs from the claimed order 128";
  return {ok, "table " + count(good, rows.size()) + " Hopf automorphisms, search found " +
                  std::to_string(found.size()) + (a == b ? " (same set)" : " (different set)") +
                  ", closure order " + std::to_string(order) + " (reproducible: " +
                  (order == again ? "yes" : "no") + "), " + flag};
}

Outcome double_check() {
  DoubleData const& d = D();
  AxiomReport ax = verify_hopf(d.d);
  std::vector<std::string> const cross = {"x a = a x", "x b = b x", "x c = a^2 c x",
                                          "y a = a y", "y b = b y", "y c = c y",
                                          "t a = a x^2 t", "t b = b t", "t c = a^2 b c x^2 y t"};
  std::vector<std::string> bad;
  for (auto const& rel : cross) {
    auto eq = rel.find('=');
    if (double_element(d, rel.substr(0, eq)) != double_element(d, rel.substr(eq + 1)))
      bad.push_back(rel);
  }
  bool ok = d.d.dim() == 256 && ax.pass() && bad.empty();
  return {ok, "dim " + std::to_string(d.d.dim()) + ", " + ax.summary() + ", cross relations " +
                  count(cross.size() - bad.size(), cross.size()) +
                  (bad.empty() ? "" : " failing: " + join(bad))};
}

Outcome census_check() {
  CensusReport c = census();
  std::size_t sum = 0;
  for (auto const& r : c.reps) sum += r.dim * r.dim;
  bool ok = c.ok() && c.reps.size() == 88 && sum == 256 && c.pairs_checked == 88 * 87 / 2;
  return {ok, std::to_string(c.one_dim) + " one-dim + " + std::to_string(c.two_dim) +
                  " two-dim, relation failures " + std::to_string(c.relation_failures) +
                  ", isomorphic distinct pairs " + std::to_string(c.isomorphic_distinct_pairs) +
                  " of " + std::to_string(c.pairs_checked) + ", 32*1 + 56*4 = " +
                  std::to_string(sum)};
}

Outcome yd_conversion() {
  std::size_t yd_ok = 0, chars = 0, chars_ok = 0;
  std::vector<std::string> mismatches;
  auto simples = all_simples();
  for (auto const& r : simples) {
    YDModule m = yd_from_double_module(H(), D(), r);
    yd_ok += verify_yd(H(), m).pass();
    if (r.family == Family::Character) {
      ++chars;
      int i = r.index[0], j = r.index[1], k = r.index[2], l = r.index[3];
      // coaction x^(j+2k+2l) y^k, braiding scalar (-1)^(ij+jk)
      std::size_t g = kashina::index(unsigned(j + 2 * k + 2 * l), unsigned(k), 0);
      bool ok = true;
      for (std::size_t q = 0; q < 16; ++q) ok = ok && m.coact[q](0, 0) == Scalar(q == g ? 1 : 0);
      Scalar sign = (i * j + j * k) % 2 ? Scalar(-1) : Scalar(1);
      chars_ok += ok && braiding(m, m)(0, 0) == sign;
    }
    if (!compare_closed_form(H(), m, r).match) mismatches.push_back(r.name());
  }
  bool ok = simples.size() == 88 && yd_ok == 88 && chars == 32 && chars_ok == 32;
  return {ok, "YD " + count(yd_ok, simples.size()) + ", characters " + count(chars_ok, chars) +
                  ", closed-form discrepancies reported: " + std::to_string(mismatches.size()) +
                  (mismatches.empty() ? "" : " (" + join(mismatches) + ")")};
}

Outcome nichols_dims() {
  std::size_t v_ok = 0, m_ok = 0;
  for (int i = 1; i <= 8; ++i) {
    auto r = nichols_dim(braided_space(find(Cat(), "V" + std::to_string(i))));
    v_ok += r.verdict.kind == Verdict::Kind::Finite && r.verdict.total == 2;
  }
  for (int i = 1; i <= 12; ++i) {
    auto r = nichols_dim(braided_space(find(Cat(), "M" + std::to_string(i))));
    m_ok += r.verdict.kind == Verdict::Kind::Finite && r.verdict.total == 4 &&
            r.quadratic_relations.size() == 3;
  }
  std::size_t braid_ok = 0, total = 0;
  for (auto const& r : all_simples()) {
    YDModule m = yd_from_double_module(H(), D(), r);
    ++total;
    braid_ok += braid_equation(braiding(m, m), m.dim);
  }
  bool ok = v_ok == 8 && m_ok == 12 && braid_ok == total;
  return {ok, "dim B(V_i) = 2: " + count(v_ok, 8) + ", dim B(M_i) = 4 with 3 quadratic: " +
                  count(m_ok, 12) + ", braid equation " + count(braid_ok, total)};
}

Outcome infinitude() {
  std::size_t plus_one = 0, plus_one_ok = 0, vertex_one = 0, vertex_ok = 0, w = 0, w_ok = 0;
  for (auto const& rep : all_simples()) {
    auto bs = braided_space(yd_from_double_module(H(), D(), rep));
    auto eig = eigen_one_infinite(bs);
    auto certified = [&] { return eig && bs.c * kron(*eig, *eig) == kron(*eig, *eig); };
    if (rep.family == Family::Character && bs.c(0, 0) == Scalar(1)) {
      ++plus_one;
      plus_one_ok += certified();
    }
    auto p = diagonalize(bs);
    if (p) {
      auto v = change_basis(bs, *p).diagonal->vertices();
      if (std::find(v.begin(), v.end(), Scalar(1)) != v.end()) {
        ++vertex_one;
        vertex_ok += certified();
      }
    }
    if (is_w(rep.family)) {
      ++w;
      auto r = symmetrizer_ranks(bs, 6);
      w_ok += r.size() == 6 && std::all_of(r.begin(), r.end(), [](auto x) { return x > 0; });
    }
  }
  bool ok = plus_one > 0 && plus_one_ok == plus_one && vertex_ok == vertex_one && w == 16 &&
            w_ok == w;
  return {ok, "scalar +1 characters certified " + count(plus_one_ok, plus_one) +
                  ", vertex-1 spaces certified " + count(vertex_ok, vertex_one) +
                  ", W ranks positive through degree 6 " + count(w_ok, w)};
}

Outcome pairing() {
  PairTable t = pair_table(Cat());
  auto names = [](std::set<NamePair> const& s) {
    std::vector<std::string> v;
    for (auto const& [a, b] : s) v.push_back(a + "+" + b);
    return join(v);
  };
  return {t.matches(), std::to_string(t.admissible.size()) + " admissible vs " +
                           std::to_string(t.expected.size()) + " expected; extra " +
                           std::to_string(t.extra.size()) + " [" + names(t.extra) + "]; missing " +
                           std::to_string(t.missing.size()) + " [" + names(t.missing) + "]"};
}

Outcome twists() {
  auto claims = twist_claims(H(), Cat());
  std::vector<std::string> bad;
  std::size_t good = 0;
  for (auto const& c : claims) {
    bool ok = c.result.isomorphic && c.braiding_preserved && inverse(c.result.witness).has_value();
    good += ok;
    if (!ok)
      bad.push_back(c.source + "^tau" + std::to_string(c.tau) + " claimed " + c.target +
                    ", is " + (c.actual.empty() ? "none" : c.actual));
  }
  return {!claims.empty() && bad.empty(),
          "claims with witnesses " + count(good, claims.size()) +
              (bad.empty() ? "" : "; failing: " + join(bad))};
}

Outcome liftings_sweep() {
  BuildOptions opt;
  opt.verify = true;
  std::size_t good = 0, total = 0;
  std::map<std::string, std::size_t> errors;
  for (auto const& f : liftings::families())
    for (auto const& p : {liftings::ones(f.id), liftings::zeros(f.id), liftings::mixed(f.id)}) {
      ++total;
      auto r = liftings::build_lifting(p, opt);
      bool ok = r.pass() && r.outcome.axioms && r.outcome.axioms->pass() &&
                r.outcome.hopf->antipode().has_value();
      good += ok;
      if (!ok)
        ++errors[r.outcome.error == BuildErrorKind::None ? "wrong dimension"
                                                         : to_string(r.outcome.error)];
    }
  std::vector<std::string> e;
  for (auto const& [k, v] : errors) e.push_back(k + " " + std::to_string(v));
  return {good == total, "built and verified " + count(good, total) +
                             (e.empty() ? "" : "; " + join(e))};
}

Outcome degeneration() {
  std::vector<std::string> bad;
  std::size_t good = 0, completed_iso = 0;
  for (auto const& f : liftings::families()) {
    auto z = liftings::compare_zero_parameter(f.id, H(), Cat());
    good += z.pass();
    completed_iso += z.pass() || z.completed_iso.hopf_iso();
    if (!z.pass()) bad.push_back(f.id);
  }
  std::size_t n = liftings::families().size();
  return {good == n, "as written " + count(good, n) + ", with completed quadratic relations " +
                         count(completed_iso, n) + (bad.empty() ? "" : "; failing: " + join(bad))};
}

Outcome parameter_isos() {
  auto with = [](std::string id, std::map<std::string, Scalar> v) {
    auto p = liftings::zeros(id);
    p.values = std::move(v);
    return p;
  };
  Scalar a1(2), a2(3);
  std::vector<std::string> notes;
  bool ok = true;
  auto check = [&](std::string label, liftings::ParameterIso iso, bool equations, bool expect) {
    iso.completed = true;
    auto r = liftings::verify_parameter_isomorphism(iso, H());
    bool built = r.source.pass() && r.target.pass();
    bool good = equations == expect && built &&
                (expect ? r.is_iso() : !r.morphism.algebra);
    ok = ok && good;
    notes.push_back(label + (good ? " ok" : built ? " wrong verdict"
                                                  : " not built (" +
                                                        to_string(r.source.outcome.error) + ")"));
  };
  auto t6 = with("U6", {{"lambda", Scalar(1)}, {"mu", Scalar(1)}, {"alpha", Scalar(1)}});
  auto s6 = with("U6", {{"lambda", Scalar(4)}, {"mu", Scalar(9)}, {"alpha", Scalar(6)}});
  auto v6 = with("U6", {{"lambda", Scalar(1)}, {"mu", Scalar(9)}, {"alpha", Scalar(6)}});
  check("U6 satisfying", liftings::u6_scaling(a1, a2, s6, t6), liftings::var41_holds(a1, a2, s6, t6),
        true);
  check("U6 violating", liftings::u6_scaling(a1, a2, v6, t6), liftings::var41_holds(a1, a2, v6, t6),
        false);
  auto t13 = with("U13", {{"lambda", Scalar(1)}, {"mu", Scalar(1)}, {"alpha", Scalar(1)}});
  auto s13 = with("U13", {{"lambda", Scalar(4)}, {"mu", Scalar(9)}, {"alpha", Scalar(9)}});
  auto v13 = with("U13", {{"lambda", Scalar(1)}, {"mu", Scalar(9)}, {"alpha", Scalar(9)}});
  check("U13 satisfying", liftings::u13_scaling(a1, a2, s13, t13, 13),
        liftings::var1_holds(a1, a2, s13, t13), true);
  check("U13 violating", liftings::u13_scaling(a1, a2, v13, t13, 13),
        liftings::var1_holds(a1, a2, v13, t13), false);
  return {ok, join(notes)};
}

Outcome mutation() {
  auto sweep = liftings::sign_flip_sweep(liftings::zeros("U1_1"));
  std::size_t caught = 0, valid = 0;
  for (auto const& v : sweep) {
    auto e = v.report.outcome.error;
    if (e == BuildErrorKind::NonConfluent || e == BuildErrorKind::CoproductNotWellDefined)
      ++caught;
    else if (v.report.pass() && v.report.outcome.axioms && v.report.outcome.axioms->pass())
      ++valid;
  }
  auto m = liftings::mutated_u11(1, liftings::zeros("U1_1"));
  bool ok = caught > 0 && caught + valid == sweep.size();
  return {ok, "single sign flips caught " + count(caught, sweep.size()) + ", others verified Hopf " +
                  std::to_string(valid) + "; seeded flip '" + m.description + "' gives " +
                  to_string(m.report.outcome.error)};
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "H construction", 1.0, h_construction},
      {2, "dual generators", std::nullopt, dual_generators},
      {3, "automorphisms", std::nullopt, automorphisms},
      {4, "Drinfeld double", 60.0, double_check},
      {5, "census of simples", 120.0, census_check},
      {6, "YD conversion", std::nullopt, yd_conversion},
      {7, "Nichols dimensions", 60.0, nichols_dims},
      {8, "infinitude evidence", std::nullopt, infinitude},
      {9, "pairing table", std::nullopt, pairing},
      {10, "twists", std::nullopt, twists},
      {11, "liftings at sample parameters", 180.0, liftings_sweep},
      {12, "zero-parameter degeneration", std::nullopt, degeneration},
      {13, "parameter isomorphisms", std::nullopt, parameter_isos},
      {14, "mutation sensitivity", std::nullopt, mutation},
  };
  int failures = 0;
  auto const all_start = std::chrono::steady_clock::now();
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = !c.time_limit || secs < *c.time_limit;
    bool pass = o.pass && in_time;
    failures += !pass;
    std::ostringstream limit;
    if (c.time_limit) limit << " < " << *c.time_limit << " s";
    std::printf("%s  [%2d] %-30s tolerance exact  %.2f s%s%s  %s\n", pass ? "PASS" : "FAIL",
                c.number, c.title.c_str(), secs, limit.str().c_str(),
                in_time ? "" : " (over time)", o.summary.c_str());
    std::fflush(stdout);
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - all_start).count();
  std::printf("%zu/%zu criteria pass in %.1f s (budget 600 s)\n", criteria.size() - failures,
              criteria.size(), total);
  return failures == 0 ? 0 : 1;
}
