#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopf/kashina.hpp"
#include "hopf/simples.hpp"

namespace hopf {

// Left-left Yetter-Drinfeld module over H.  The coaction is stored by
// components: delta(v) = sum_m h_m (x) coact[m] v over the basis h_m of H.
struct YDModule {
  std::string name;
  std::size_t dim = 0;
  std::array<Mat, 3> gens;  // action of x, y, t
  std::vector<Mat> coact;   // 16 components

  // Action of the basis element x^i y^j t^k (index i + 4j + 8k) or of any element.
  Mat action(std::size_t basis) const;
  Mat action(Vec const& h) const;
  // (16 dim) x dim matrix: row m * dim + r, column j holds the coefficient
  // of h_m (x) v_r in delta(v_j).
  Mat coaction_matrix() const;
  // delta(v_j) written out, e.g. "1/2 x t (x) v1 + ...".
  std::string render_coaction(kashina::KashinaH const& h, std::size_t j) const;
};

struct CompatibilityFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Action by restriction to x, y, t; coaction delta(v) = sum h_i (x) h^i . v
// over a basis and its dual basis.  Throws CompatibilityFailed when the
// result is not a YD module.
YDModule yd_from_double_module(kashina::KashinaH const& h, DoubleData const& d, Rep const& r);

// H relations on the action, coassociativity, counit, and the compatibility
// delta(g v) = g1 v(-1) S(g3) (x) g2 v(0) for g in {x, y, t} and basis v.
AxiomReport verify_yd(kashina::KashinaH const& h, YDModule const& m);

// c_{V,W}(v (x) w) = v(-1) w (x) v(0) as a (dW dV) x (dV dW) matrix; the
// source index is a dW + b, the target index r dV + s.
Mat braiding(YDModule const& v, YDModule const& w);
// (c (x) 1)(1 (x) c)(c (x) 1) = (1 (x) c)(c (x) 1)(1 (x) c) on V^(x)3.
bool braid_equation(Mat const& c, std::size_t dim);

// V^psi: action h . v = psi(h) v, coaction (psi^-1 (x) id) delta.
YDModule twist(YDModule const& m, Mat const& psi);

YDModule direct_sum(std::vector<YDModule> const& parts);

struct YDIso {
  bool isomorphic = false;
  std::size_t hom_dim = 0;  // dim of simultaneously linear and colinear maps
  Mat witness;              // invertible when isomorphic
};
// Solves for maps that are H-linear and H-colinear at once.
YDIso yd_isomorphic(YDModule const& v, YDModule const& w);

// Closed-form coactions for characters and the two-dimensional families,
// written directly from the exponent formulas.  Empty for other inputs.
std::optional<std::vector<Mat>> closed_form_coaction(kashina::KashinaH const& h, Rep const& r);

struct ClosedFormComparison {
  std::string module;
  bool match = false;
  std::string computed;  // both rendered when they differ
  std::string stated;
};
ClosedFormComparison compare_closed_form(kashina::KashinaH const& h, YDModule const& m, Rep const& r);

// The named modules V1..V8 and M1..M12 as YD modules.
struct CatalogEntry {
  std::string name;
  Rep rep;
  YDModule yd;
};
std::vector<CatalogEntry> catalog(kashina::KashinaH const& h, DoubleData const& d);
YDModule const& find(std::vector<CatalogEntry> const& cat, std::string const& name);

// Twisted-module isomorphisms: source^tau ~ target with a witness.
struct TwistClaim {
  std::string source, target;
  int tau = 1;
  int group = 0;
  YDIso result;
  bool braiding_preserved = false;
  // Catalog module the twist is actually isomorphic to ("" if none).
  std::string actual;
};
std::vector<TwistClaim> twist_claims(kashina::KashinaH const& h, std::vector<CatalogEntry> const& cat);

}  // namespace hopf
