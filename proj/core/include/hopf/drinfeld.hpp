#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopf/hopf_data.hpp"
#include "hopf/kashina.hpp"

namespace hopf {

// D(K) = K*^cop (x) K with the tensor coalgebra and the product
// (p(x)a)(q(x)b) = sum <q3,a1><q1,S^-1 a3> p q2 (x) a2 b.
// Basis e^p (x) e_a sits at index p * dim(K) + a.
struct DoubleData {
  HopfData d;
  HopfData k;
  std::size_t n = 0;  // dim K
  // Named distinguished elements (for D(H^cop): x y t a b c).
  std::map<std::string, Vec> gens;
  // D(H^cop) only: column p holds the coordinates of e^p (x) 1 in the words
  // a^i b^j c^k, word (i, j, k) at position i + 4j + 8k.
  Mat dual_in_words;

  Vec embed(Vec const& h) const;          // 1 (x) h
  Vec embed_dual(Vec const& phi) const;   // phi (x) 1
  Vec pure(Vec const& phi, Vec const& h) const;
};

// Throws NoAntipode when K has no invertible antipode.
DoubleData drinfeld_double(HopfData const& k);

// D(H^cop) with generators x, y, t from H^cop and a, b, c from the dual, and
// generator data over the words a^i b^j c^k x^l y^m t^n.
DoubleData kashina_double(kashina::KashinaH const& h);

// Relations of H^cop, of H*^bop and the nine cross relations, each checked as
// an exact identity in D.
struct RelationCheck {
  std::string relation;
  bool pass = false;
  std::string residual;  // rendered lhs - rhs when nonzero
};
std::vector<RelationCheck> verify_double_presentation(DoubleData const& d);
std::vector<std::string> const& double_relations();

// Evaluates an expression in x, y, t, a, b, c inside D.
Vec double_element(DoubleData const& d, std::string const& expr);

// Iterated coproduct (Delta (x) id) Delta as (i, j, k) -> coefficient.
using Tensor3 = std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, Scalar>;
Tensor3 delta2(HopfData const& h, Vec const& v);

}  // namespace hopf
