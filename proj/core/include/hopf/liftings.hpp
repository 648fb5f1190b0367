#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopf/hopf_data.hpp"
#include "hopf/kashina.hpp"
#include "hopf/presentation.hpp"
#include "hopf/ydcat.hpp"

// Deformations of bosonizations B(N)#H over the 16-dimensional H, given by
// generators p, q (or p1, p2, q1, q2) on top of x, y, t.
namespace hopf::liftings {

struct Family {
  std::string id;                      // "U1_1", ..., "U19"
  std::vector<std::string> letters;    // new generators, precedence lowest first
  std::vector<std::string> params;     // declared parameter names
  std::vector<std::string> actions;    // "x p = p x" etc., three per letter
  std::vector<std::string> relations;  // among the new letters
  std::vector<std::string> coproduct;  // one per letter, "p = p @ 1 + ..."
  std::vector<std::string> summands;   // catalog names whose sum should be N
  std::size_t expected_dim = 0;
};

std::vector<Family> const& families();
Family const& family(std::string const& id);

struct LiftingParams {
  std::string family;
  std::map<std::string, Scalar> values;  // unset declared parameters are zero
};
// Throws std::invalid_argument for unknown families or undeclared parameters.
void validate(LiftingParams const& p);

LiftingParams zeros(std::string const& id);
LiftingParams ones(std::string const& id);
// 1, -1, 2, i, 1/2, -i in declaration order.
LiftingParams mixed(std::string const& id);

// Presentation text with every parameter defaulting to zero.
std::string presentation_text(Family const& f);
PresentedHopf presentation(LiftingParams const& p);

struct LiftingReport {
  LiftingParams params;
  std::string variant = "as-written";
  BuildOutcome outcome;
  std::size_t expected_dim = 0;
  std::size_t dim() const { return outcome.hopf ? outcome.hopf->dim() : 0; }
  bool pass() const { return outcome.ok() && dim() == expected_dim; }
};
LiftingReport build_lifting(LiftingParams const& p, BuildOptions const& opt = {});

// ---- infinitesimal braiding ----------------------------------------------

// N on the span of the new letters.  The action of g in {x, y} comes from
// g l = (g.l) g, that of t from t l = (t.l)_+ t + (t.l)_- x^2 t where _+/-
// are the y-eigencomponents; the coaction from Delta(l) - l (x) 1.
struct ReadOff {
  std::optional<YDModule> module;
  std::string detail;  // why reading off failed
};
ReadOff read_off_module(Family const& f, kashina::KashinaH const& k);

// Degree-two relations at zero parameters against ker(1 + c) on N (x) N.
struct QuadraticAudit {
  std::size_t kernel_dim = 0;
  std::size_t covered = 0;            // dim of listed relations inside the kernel
  std::vector<std::string> outside;   // listed relations not in the kernel
  std::vector<std::size_t> outside_index;  // their positions in the parsed relations
  std::vector<Vec> missing;           // kernel vectors completing the span
  bool complete() const { return outside.empty() && missing.empty() && covered == kernel_dim; }
};
QuadraticAudit quadratic_audit(Family const& f, YDModule const& n);

// The presentation with relations outside the kernel removed and the
// missing kernel vectors added as "= 0".  Deformation terms of kept
// relations are untouched.
PresentedHopf completed_presentation(LiftingParams const& p, QuadraticAudit const& audit);
LiftingReport build_completed(LiftingParams const& p, QuadraticAudit const& audit,
                              BuildOptions const& opt = {});

// ---- bosonization ---------------------------------------------------------

// Finite Nichols algebra of a YD module over H.  Degree-n elements are
// coordinates against chosen monomials (pivot words of the symmetrizer row
// basis); words are sequences of basis indices of V.
struct BraidedHopf {
  YDModule module;
  std::vector<std::vector<unsigned>> basis;  // monomials, by degree
  std::vector<std::size_t> offset;           // first basis index of each degree
  std::vector<Mat> row_bases;                // degree n at entry n
  std::vector<std::vector<Scalar>> mult;     // mult[a * dim + b] = coordinates
  std::vector<Mat> action;                   // per H basis element, dim x dim
  // coaction[b]: pairs (H basis index, coordinates of the degree part).
  std::vector<std::vector<std::pair<std::size_t, Vec>>> coaction;
  std::vector<Tensor2> coproduct;            // braided coproduct in R (x) R
  std::size_t dim() const { return basis.size(); }
  Vec word(std::vector<unsigned> const& w) const;
  std::string label(std::size_t b) const;
};

// Throws std::runtime_error when the symmetrizer ranks do not reach zero
// within `cap` degrees.
BraidedHopf braided_nichols_hopf(YDModule const& v, kashina::KashinaH const& h, unsigned cap = 8);

// Braided axioms: associativity, braided multiplicativity of the coproduct,
// coassociativity, and linearity/colinearity of the multiplication.
AxiomReport verify_braided(BraidedHopf const& r, kashina::KashinaH const& h);

struct BosonizationData {
  HopfData hopf;  // basis r_a # h_j at index a * 16 + j
  Mat pi;         // 16 x dim, r # h -> eps(r) h
  Mat iota;       // dim x 16, h -> 1 # h
};
BosonizationData bosonize(BraidedHopf const& r, kashina::KashinaH const& h);
bool projection_section_ok(BosonizationData const& b);

// Letter k -> v_k # 1, x, y, t -> 1 # x, 1 # y, 1 # t, extended over the
// basis words of the lifting.  Columns are images.
Mat generator_correspondence(BuildOutcome const& lifting, BosonizationData const& b,
                             std::size_t letters);

// ---- zero-parameter comparison ---------------------------------------------

struct ZeroComparison {
  std::string family;
  std::string read_off;          // empty when N was read off
  bool yd_ok = false;            // N passes the YD axioms
  bool matches_catalog = false;  // N is isomorphic to the declared sum
  std::size_t nichols_dim = 0;
  bool bosonization_ok = false;  // B(N)#H passes the Hopf axioms
  QuadraticAudit audit;
  LiftingReport lifting;         // as written, zero parameters
  MorphismReport iso;            // lifting -> B(N)#H
  LiftingReport completed;       // side-by-side completion
  MorphismReport completed_iso;
  std::string detail;
  bool pass() const {
    return read_off.empty() && yd_ok && matches_catalog && bosonization_ok && lifting.pass() &&
           iso.hopf_iso();
  }
};
ZeroComparison compare_zero_parameter(std::string const& id, kashina::KashinaH const& k,
                                      std::vector<CatalogEntry> const& cat);

// ---- parameter isomorphisms ---------------------------------------------------

// Phi : U(source) -> U(target) with Phi|_H = tau and Phi(letter k) given by
// coordinates over the target letters.
struct ParameterIso {
  LiftingParams source, target;
  int tau = 1;                     // row of the automorphism table
  std::vector<Vec> letter_images;  // per source letter
  bool completed = false;          // build completed presentations
};
struct ParameterIsoReport {
  LiftingReport source, target;
  MorphismReport morphism;
  std::string detail;
  bool is_iso() const { return source.pass() && target.pass() && morphism.hopf_iso(); }
};
ParameterIsoReport verify_parameter_isomorphism(ParameterIso const& iso,
                                                kashina::KashinaH const& k);

// Phi(p_i) = a1 p'_i, Phi(q_i) = a2 q'_i.
ParameterIso u6_scaling(Scalar a1, Scalar a2, LiftingParams source, LiftingParams target,
                        int tau = 1);
// Phi(p1) = a1 p'_1, Phi(p2) = s a1 p'_2, Phi(q_i) = a2 q'_i with s = -1
// for tau13 and tau14 and s = 1 otherwise.
ParameterIso u13_scaling(Scalar a1, Scalar a2, LiftingParams source, LiftingParams target,
                         int tau);
// Phi(p_i) = a1 p'_i + a2 q'_i, Phi(q_i) = b1 p'_i + b2 q'_i, tau = tau1.
ParameterIso u2_mixing(Scalar a1, Scalar a2, Scalar b1, Scalar b2, LiftingParams source,
                       LiftingParams target);

// The coefficient equations attached to each pattern.
bool var41_holds(Scalar const& a1, Scalar const& a2, LiftingParams const& s,
                 LiftingParams const& t);
bool var1_holds(Scalar const& a1, Scalar const& a2, LiftingParams const& s,
                LiftingParams const& t);
bool var7_holds(Scalar const& a1, Scalar const& a2, Scalar const& b1, Scalar const& b2,
                LiftingParams const& s, LiftingParams const& t);

// ---- variants ---------------------------------------------------------------

struct SignVariant {
  std::string description;  // relation and flipped term
  LiftingReport report;
};
// Negates one term of one family relation at a time and keeps the variants
// that build with the expected dimension.
std::vector<SignVariant> nearest_sign_variants(LiftingParams const& p, std::size_t limit = 3);

// Parsed relation `relation` with the coefficient of its `term`-th word negated.
PresentedHopf flip_sign(PresentedHopf p, std::size_t relation, std::size_t term);

// Every single-term sign flip over all relations with at least two terms.
std::vector<SignVariant> sign_flip_sweep(LiftingParams const& p, BuildOptions const& opt = {});

// One seeded entry of that sweep for U1_1.
SignVariant mutated_u11(unsigned seed, LiftingParams const& p);

}  // namespace hopf::liftings
