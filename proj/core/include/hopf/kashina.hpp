#pragma once

#include <string>
#include <vector>

#include "hopf/hopf_data.hpp"
#include "hopf/presentation.hpp"

// The 16-dimensional semisimple Hopf algebra H generated by x, y, t with
// x^4 = y^2 = 1, t^2 = x^2 y, xy = yx, tx = x^3 t, ty = yt.
namespace hopf::kashina {

// Basis x^i y^j t^k sits at index i + 4j + 8k.
constexpr std::size_t index(unsigned i, unsigned j, unsigned k) {
  return (i % 4) + 4 * (j % 2) + 8 * (k % 2);
}

// Presentation text of H in the repository's format.
std::string presentation_text();

struct KashinaH {
  HopfData h;
  Vec x, y, t;
  std::vector<Vec> grouplikes;  // x^i y^j, i < 4, j < 2
  // Element of H from a polynomial in x, y, t, e.g. "1/2*((1+i) t + (1-i) x^2 t)".
  Vec element(std::string const& expr) const;
  Alphabet const& alphabet() const { return alpha; }
  Alphabet alpha;
};

// Built directly from the multiplication rules of the basis words.
KashinaH build_H();
// Built from the presentation via rewriting.
HopfData build_H_presented();

// The closed-form antipode of t: 1/2((1+y)x^2 t - (1-y)t).
Vec antipode_t_formula(KashinaH const& k);

// Functionals on H as coordinate vectors in the dual basis.
struct DualGenerators {
  Vec a, b, c;
};
DualGenerators dual_generators(KashinaH const& k);
// Relations among a, b, c in H* plus their coproducts.
AxiomReport verify_dual_generators(KashinaH const& k);

// One row of the automorphism table: images of x, y, t as expressions.
struct TableRow {
  int number;
  std::string x, y, t;
};
std::vector<TableRow> const& automorphism_table();

struct Automorphism {
  std::string name;  // "tau17" or "search"
  Vec fx, fy, ft;
  Mat matrix;  // 16 x 16, columns are images of the basis
};
// Extends generator images multiplicatively over the basis words.
Mat extend_map(KashinaH const& k, Vec const& fx, Vec const& fy, Vec const& ft);
std::vector<Automorphism> table_automorphisms(KashinaH const& k);

struct AutomorphismCheck {
  std::string name;
  MorphismReport report;
  bool commutes_with_antipode = false;
  bool ok() const { return report.hopf_iso() && commutes_with_antipode; }
};
std::vector<AutomorphismCheck> verify_automorphism_table(KashinaH const& k);

// Order of the group generated by the given matrices, by closure.
std::size_t closure_order(std::vector<Mat> const& gens);
// Table index (1-based) of each composition tau_i o tau_j, or 0 when the
// composite is not in the table.
std::vector<std::vector<int>> composition_table(std::vector<Automorphism> const& autos);

// Sweeps every pair of group-like images for (x, y) and solves the
// coalgebra condition for f(t) = K t, K in the group algebra.  Every
// candidate is checked as a Hopf automorphism before being returned.
std::vector<Automorphism> exhaustive_automorphism_search(KashinaH const& k);

// Certificate that the ansatz f(t) in span{g t} loses nothing: C = span{g t}
// is a subcoalgebra complementing kG whose dual algebra has no characters,
// so C holds no group-likes and every coalgebra automorphism preserves it.
struct AnsatzCertificate {
  bool subcoalgebra = false;
  bool complement = false;
  bool no_grouplikes = false;
  bool ok() const { return subcoalgebra && complement && no_grouplikes; }
};
AnsatzCertificate general_ansatz_certificate(KashinaH const& k);

}  // namespace hopf::kashina
