#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopf/drinfeld.hpp"

namespace hopf {

// Generator order for module matrices.
inline constexpr std::array<char const*, 6> kRepGenerators = {"x", "y", "t", "a", "b", "c"};

enum class Family { Character, V, W1, W2, W3, W4, U };
std::string to_string(Family f);

// A finite-dimensional D(H^cop)-module given by its generator matrices.
struct Rep {
  std::size_t dim = 0;
  std::array<Mat, 6> mats;  // x, y, t, a, b, c
  Family family = Family::Character;
  std::vector<int> index;
  std::string name() const;  // e.g. "V(0,1,2,0)"
  Mat const& act(std::string const& gen) const;
};

struct InvalidIndex : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Index sets of the two-dimensional families.
std::vector<std::vector<int>> omega1();
std::vector<std::vector<int>> omega2();
std::vector<std::vector<int>> omega();
std::vector<std::vector<int>> lambda1();
std::vector<std::vector<int>> lambda2();
std::vector<std::vector<int>> gamma_set();

// chi(x)=(-1)^i, chi(y)=(-1)^j, chi(t)=i^j, chi(a)=(-1)^k, chi(b)=(-1)^j,
// chi(c)=(-1)^l i^j.  Throws InvalidIndex outside i,k,l < 2, j < 4.
Rep character_module(int i, int j, int k, int l);
// Throws InvalidIndex when the index is outside the family's index set,
// naming the predicate that failed.
Rep two_dim_module(Family f, std::vector<int> const& index);
// The same matrices without the index-set gate (for pairing experiments).
Rep two_dim_module_unchecked(Family f, std::vector<int> const& index);

// Exact checks of the relations of D on the matrices.
std::vector<RelationCheck> verify_rep_relations(Rep const& r);
bool rep_relations_hold(Rep const& r);

// rho(e) for every basis element e of D, through the word basis.
std::vector<Mat> basis_action(DoubleData const& d, Rep const& r);
// rho(v) for any element v of D.
Mat act(DoubleData const& d, std::vector<Mat> const& basis_rho, Vec const& v);
// Certificate that the matrices define an algebra map D -> End(V): checks
// rho(g) rho(e) = rho(g e) for each generator g and basis element e.
bool algebra_map_certificate(DoubleData const& d, Rep const& r, std::string* witness = nullptr);

// Hom_D(r1, r2) = {P : P r1(g) = r2(g) P for all generators g}.
struct HomSpace {
  std::size_t dim = 0;
  std::vector<Mat> basis;  // each dim(r2) x dim(r1)
};
HomSpace intertwiners(Rep const& r1, Rep const& r2);

// Traces of the six generator matrices.
std::array<Scalar, 6> trace_signature(Rep const& r);

struct PairingResult {
  std::string pairing;  // e.g. "W2 on Lambda1"
  std::size_t two_dim_count = 0;
  std::size_t isomorphic_pairs = 0;
  bool all_relations_hold = false;
  bool all_simple = false;
  std::size_t sum_of_squares = 0;
};

struct CensusReport {
  std::vector<Rep> reps;  // all 88, characters first
  std::size_t one_dim = 0, two_dim = 0;
  std::size_t sum_of_squares = 0;
  std::size_t relation_failures = 0;
  std::size_t non_simple = 0;
  std::size_t isomorphic_distinct_pairs = 0;
  std::size_t pairs_checked = 0;
  bool traces_separate = false;
  // Alternative placements of W2, evaluated the same way.
  std::vector<PairingResult> pairings;
  bool ok() const {
    return one_dim == 32 && two_dim == 56 && sum_of_squares == 256 && relation_failures == 0 &&
           non_simple == 0 && isomorphic_distinct_pairs == 0;
  }
};
CensusReport census();

// All simples in census order: 32 characters, V on Omega, W1 and W2 on
// Lambda1, W3 and W4 on Lambda2, U on Gamma.
std::vector<Rep> all_simples();

// Named modules used downstream: V1..V8 are characters, M1..M12 are
// two-dimensional.  Throws std::out_of_range for unknown names.
Rep named_module(std::string const& name);

}  // namespace hopf
