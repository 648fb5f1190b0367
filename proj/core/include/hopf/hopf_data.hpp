#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopf/matrix.hpp"

namespace hopf {

// Sparse vector, sorted by index, no zero entries.
using SVec = std::vector<std::pair<std::uint32_t, Scalar>>;

struct Term2 {
  std::uint32_t a, b;
  Scalar c;
};
// Element of A (x) A as a list of coefficient * e_a (x) e_b, canonical
// (sorted by (a, b), merged, zeros dropped).
using Tensor2 = std::vector<Term2>;

SVec to_sparse(Vec const& v);
Vec to_dense(SVec const& v, std::size_t n);
void canonicalize(Tensor2& t);

// Dense scratch accumulator with a touched list, for repeated sparse sums.
class Accumulator {
 public:
  explicit Accumulator(std::size_t n) : v_(n), mark_(n, 0) {}
  void add(std::uint32_t i, Scalar const& c);
  SVec take();
  std::size_t size() const { return v_.size(); }

 private:
  Vec v_;
  std::vector<char> mark_;
  std::vector<std::uint32_t> touched_;
};

// Optional algebra generators: named vectors plus words in them whose
// products span the algebra.  Used for generator-reduced axiom checks and
// for solving the antipode on generators.
struct GeneratorData {
  std::vector<std::string> names;
  std::vector<Vec> vectors;
  // Each word is a list of generator indices; the products of the words
  // must form a basis of the algebra.
  std::vector<std::vector<int>> words;
};

// Finite-dimensional Hopf algebra given by structure constants on a basis.
class HopfData {
 public:
  HopfData() = default;
  explicit HopfData(std::size_t dim);

  std::size_t dim() const { return dim_; }

  // Product e_i e_j.
  SVec const& prod(std::size_t i, std::size_t j) const { return mult_[i * dim_ + j]; }
  void set_prod(std::size_t i, std::size_t j, SVec v) { mult_[i * dim_ + j] = std::move(v); }
  Tensor2 const& coprod(std::size_t i) const { return comult_[i]; }
  void set_coprod(std::size_t i, Tensor2 t);

  Vec const& unit() const { return unit_; }
  void set_unit(Vec u) { unit_ = std::move(u); }
  Vec const& counit() const { return counit_; }
  void set_counit(Vec e) { counit_ = std::move(e); }
  std::optional<Mat> const& antipode() const { return antipode_; }
  void set_antipode(std::optional<Mat> s) { antipode_ = std::move(s); }

  std::vector<std::string> const& labels() const { return labels_; }
  void set_labels(std::vector<std::string> l) { labels_ = std::move(l); }
  std::string label(std::size_t i) const;
  std::optional<GeneratorData> const& generators() const { return gens_; }
  void set_generators(std::optional<GeneratorData> g) { gens_ = std::move(g); }

  // Algebra operations on dense vectors.
  Vec mul(Vec const& a, Vec const& b) const;
  SVec mul(SVec const& a, SVec const& b) const;
  Vec power(Vec const& a, unsigned k) const;
  Scalar eps(Vec const& a) const;
  Tensor2 delta(Vec const& a) const;
  Tensor2 delta(SVec const& a) const;
  Vec apply_antipode(Vec const& a) const;
  Vec basis(std::size_t i) const { return unit_vector(dim_, i); }

  // Products and coproduct in A (x) A, elements as Tensor2.
  Tensor2 tensor_mul(Tensor2 const& x, Tensor2 const& y) const;
  std::string render(Vec const& v) const;
  std::string render(Tensor2 const& t) const;

  friend bool operator==(HopfData const& a, HopfData const& b);

 private:
  std::size_t dim_ = 0;
  std::vector<SVec> mult_;
  std::vector<Tensor2> comult_;
  Vec unit_;
  Vec counit_;
  std::optional<Mat> antipode_;
  std::vector<std::string> labels_;
  std::optional<GeneratorData> gens_;
};

struct AxiomCheck {
  std::string name;
  bool pass = true;
  std::size_t checked = 0;
  std::string witness;  // first failure, empty when passing
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  // "exhaustive" or "generator-reduced"
  std::string mode;
  bool pass() const;
  AxiomCheck const* find(std::string const& name) const;
  std::string summary() const;
};

struct VerifyOptions {
  // Dimensions above this use generator-reduced associativity and
  // bialgebra sweeps when generators are available.
  std::size_t exhaustive_limit = 64;
  bool force_exhaustive = false;
};

// Checks algebra (unit + associativity), coassociativity, counit,
// bialgebra and antipode axioms.
AxiomReport verify_hopf(HopfData const& h, VerifyOptions const& opt = {});

// Linear span of the subalgebra generated by the given vectors.
std::size_t generated_dimension(HopfData const& h, std::vector<Vec> const& gens);

struct NoAntipode : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Solves for the convolution inverse of the identity.  Small algebras use
// the full linear system (split into independent blocks); larger ones with
// generator data solve on generators and extend anti-multiplicatively.
// The result is always checked on every basis element.
Mat solve_antipode(HopfData const& h);
Mat solve_antipode_full(HopfData const& h);
Mat solve_antipode_generators(HopfData const& h);
// Checks S(h1)h2 = eps(h)1 = h1 S(h2) for all basis elements.
bool antipode_ok(HopfData const& h, Mat const& s, std::string* witness = nullptr);

HopfData dual(HopfData const& h);
HopfData op(HopfData const& h);
HopfData cop(HopfData const& h);
inline HopfData bop(HopfData const& h) { return op(cop(h)); }

bool is_grouplike(HopfData const& h, Vec const& v);
// dim {v : Delta(v) = v (x) g1 + g2 (x) v}.
std::size_t pairwise_primitive_space(HopfData const& h, Vec const& g1, Vec const& g2);

// Convenience for building: group algebra of the cyclic group of order n.
HopfData cyclic_group_algebra(std::size_t n);

// Exact linear map between algebras, checked against structure.
struct MorphismReport {
  bool algebra = false;
  bool coalgebra = false;
  bool bijective = false;
  bool antipode = false;
  std::string witness;
  bool hopf_iso() const { return algebra && coalgebra && bijective; }
};
// f is dim(b) x dim(a), columns are images of a's basis.
MorphismReport check_morphism(HopfData const& a, HopfData const& b, Mat const& f);

}  // namespace hopf
