#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopf/matrix.hpp"
#include "hopf/ydcat.hpp"

namespace hopf {

// q_ij with c(e_i (x) e_j) = q_ij e_j (x) e_i.
struct DiagonalData {
  Mat q;
  Vec vertices() const;                         // q_ii
  std::vector<std::vector<Scalar>> edges() const;  // q_ij q_ji for i < j, upper triangle
  std::string render() const;
};

struct BraidedSpace {
  std::size_t dim = 0;
  Mat c;  // on V (x) V, index a * dim + b
  std::optional<DiagonalData> diagonal;
};

BraidedSpace braided_space(Mat c, std::size_t dim);
BraidedSpace braided_space(YDModule const& m);
// Same braiding in the basis given by the columns of p.
BraidedSpace change_basis(BraidedSpace const& bs, Mat const& p);

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// c_i = 1^(i-1) (x) c (x) 1^(n-i-1), 1 <= i < n.
Mat braid_operator(BraidedSpace const& bs, unsigned n, unsigned i);
// A reduced word (positions 1..n-1) for a permutation of 0..n-1.
std::vector<unsigned> reduced_word(std::vector<unsigned> perm);
// Sum over S_n of the braid-group lifts of reduced words.  Throws
// CapExceeded when dim^n exceeds max_size.
Mat quantum_symmetrizer(BraidedSpace const& bs, unsigned n, std::size_t max_size = 1024);
// Same matrix from S_n = (S_(n-1) (x) 1)(1 + c_(n-1) + c_(n-1) c_(n-2) + ...).
Mat factorized_symmetrizer(BraidedSpace const& bs, unsigned n, std::size_t max_size = 1024);

// Ranks of S_1..S_cap.  Works on row spaces only, so the d^n x d^n matrix
// is never formed.  Stops after the first zero rank.
std::vector<std::size_t> symmetrizer_ranks(BraidedSpace const& bs, unsigned cap);
// The row bases themselves, in reduced row echelon form; entry n-1 spans the
// row space of S_n.  Same stopping rule.
std::vector<Mat> symmetrizer_row_bases(BraidedSpace const& bs, unsigned cap);

struct Verdict {
  enum class Kind { Finite, InfiniteByEigenOne, Undetermined };
  Kind kind = Kind::Undetermined;
  std::size_t total = 0;  // Finite: dim B(V)
  Vec witness;            // InfiniteByEigenOne: c(v (x) v) = v (x) v
  unsigned cap = 0;       // Undetermined: highest degree computed
  std::string str() const;
};

struct NicholsReport {
  std::vector<std::size_t> ranks;  // ranks[n-1] = dim B^n
  Verdict verdict;
  std::vector<Vec> quadratic_relations;  // kernel of id + c
};

// Tries the eigenvalue-one test first; otherwise computes ranks up to cap.
NicholsReport nichols_dim(BraidedSpace const& bs, unsigned cap = 6);

// Nonzero v with c(v (x) v) = v (x) v among basis vectors and e_i + s e_j,
// where s runs over the roots in Q(i) of the quadratic condition.
std::optional<Vec> eigen_one_infinite(BraidedSpace const& bs);
// Same search for c(v (x) v) = lambda v (x) v; all hits.
std::vector<Vec> pure_square_eigenvectors(BraidedSpace const& bs, Scalar const& lambda);

std::optional<DiagonalData> diagonal_data(BraidedSpace const& bs);
// Change of basis (columns) to one where the braiding is diagonal, built
// from pure-square eigenvectors for eigenvalues 1, -1, i, -i.
std::optional<Mat> diagonalize(BraidedSpace const& bs);

// Basis of joint eigenvectors of x, y that are homogeneous for the
// coaction, delta(v) = g (x) v with g group-like.  In it the braiding is
// diagonal.  None when V has no such basis.
std::optional<Mat> homogeneous_basis(YDModule const& m);

// c_{W,V} c_{V,W} = id on V (x) W.
bool pair_factorizes(YDModule const& v, YDModule const& w);

using NamePair = std::pair<std::string, std::string>;  // unordered, first <= second

struct PairTable {
  std::set<NamePair> admissible;
  std::set<NamePair> expected;
  std::set<NamePair> extra;    // admissible, not expected
  std::set<NamePair> missing;  // expected, not admissible
  std::vector<std::string> infinite_summands;
  bool matches() const { return extra.empty() && missing.empty() && infinite_summands.empty(); }
};

// Pairs of simple modules whose sum has B(V (+) W) = B(V) (x) B(W) finite,
// as listed for V1..V8, M1..M12.
std::set<NamePair> expected_pairs();
PairTable pair_table(std::vector<CatalogEntry> const& cat);

// One member M^n1 (+) V_(2i-1)^n2 (+) V_(2j)^n3 of the families headed by
// M1, M7, M8, M9, M10, with multiplicities at most 2.
struct FamilyMember {
  std::string family;  // "M1", ...
  std::vector<std::string> summands;
  bool pairwise = false;  // every pair of summands factorizes
  std::size_t product = 0;
  std::optional<std::size_t> dim;  // by ranks, when computed
  std::string label() const;
};
std::vector<FamilyMember> family_members(std::vector<CatalogEntry> const& cat,
                                         std::size_t rank_dim_limit = 4);

struct FiniteSumTable {
  PairTable pairs;
  std::vector<FamilyMember> members;
};
FiniteSumTable finite_sum_table(std::vector<CatalogEntry> const& cat,
                                std::size_t rank_dim_limit = 4);

}  // namespace hopf
