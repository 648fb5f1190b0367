#include "hopf/simples.hpp"

#include <map>
#include <sstream>

#include "hopf/presentation.hpp"

namespace hopf {

namespace {

Scalar xi(long k) { return Scalar::i_pow(k); }
Scalar sgn(long k) { return Scalar::i_pow(2 * k); }
Scalar neg_xi(long k) { return sgn(k) * xi(k); }

Mat diag2(Scalar a, Scalar b) { return Mat::from({{a, Scalar()}, {Scalar(), b}}); }
Mat anti2(Scalar a, Scalar b) { return Mat::from({{Scalar(), a}, {b, Scalar()}}); }
Mat scalar2(Scalar a) { return diag2(a, a); }

std::string index_str(std::vector<int> const& idx) {
  std::string s = "(";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k]);
  return s + ")";
}

bool in_set(std::vector<std::vector<int>> const& set, std::vector<int> const& idx) {
  for (auto const& e : set)
    if (e == idx) return true;
  return false;
}

Alphabet rep_alphabet() {
  Alphabet a;
  a.names = {"a", "b", "c", "x", "y", "t"};
  a.weight.assign(6, 1);
  return a;
}

// Alphabet letter -> position in Rep::mats.
constexpr int kLetterToMat[6] = {3, 4, 5, 0, 1, 2};

Mat eval_poly(NcPoly const& p, Rep const& r) {
  Mat out(r.dim, r.dim);
  for (auto const& [w, c] : p.terms()) {
    Mat m = Mat::identity(r.dim);
    for (char ch : w) m = m * r.mats[kLetterToMat[static_cast<unsigned char>(ch)]];
    out += m * c;
  }
  return out;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::Character: return "chi";
    case Family::V: return "V";
    case Family::W1: return "W1";
    case Family::W2: return "W2";
    case Family::W3: return "W3";
    case Family::W4: return "W4";
    case Family::U: return "U";
  }
  return "?";
}

std::string Rep::name() const { return to_string(family) + index_str(index); }

Mat const& Rep::act(std::string const& gen) const {
  for (std::size_t k = 0; k < kRepGenerators.size(); ++k)
    if (gen == kRepGenerators[k]) return mats[k];
  throw std::out_of_range("unknown generator " + gen);
}

std::vector<std::vector<int>> omega1() {
  std::vector<std::vector<int>> out;
  for (int j = 0; j < 4; ++j)
    for (int k : {1, 3})
      for (int l = 0; l < 2; ++l) out.push_back({0, j, k, l});
  return out;
}

std::vector<std::vector<int>> omega2() {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k : {0, 2})
        for (int l = 0; l < 2; ++l)
          if ((j + l) % 2 == 1) out.push_back({i, j, k, l});
  return out;
}

std::vector<std::vector<int>> omega() {
  auto a = omega1();
  auto b = omega2();
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<std::vector<int>> lambda1() {
  std::vector<std::vector<int>> out;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) out.push_back({1, j, k});
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      if ((j + k) % 2 == 0) out.push_back({3, j, k});
  return out;
}

std::vector<std::vector<int>> lambda2() {
  std::vector<std::vector<int>> out;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      if ((j + k) % 2 == 1) out.push_back({1, j, k});
  return out;
}

std::vector<std::vector<int>> gamma_set() {
  std::vector<std::vector<int>> out;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 4; ++l) out.push_back({1, j, k, l});
  return out;
}

Rep character_module(int i, int j, int k, int l) {
  if (i < 0 || i > 1 || k < 0 || k > 1 || l < 0 || l > 1 || j < 0 || j > 3)
    throw InvalidIndex("character index " + index_str({i, j, k, l}) + " needs i,k,l in {0,1} and j in {0..3}");
  Rep r;
  r.dim = 1;
  r.family = Family::Character;
  r.index = {i, j, k, l};
  auto one = [](Scalar s) { return Mat::from({{s}}); };
  r.mats = {one(sgn(i)), one(sgn(j)), one(xi(j)), one(sgn(k)), one(sgn(j)), one(sgn(l) * xi(j))};
  return r;
}

Rep two_dim_module_unchecked(Family f, std::vector<int> const& idx) {
  Rep r;
  r.dim = 2;
  r.family = f;
  r.index = idx;
  switch (f) {
    case Family::V: {
      if (idx.size() != 4) throw InvalidIndex("V needs four indices");
      int i = idx[0], j = idx[1], k = idx[2], l = idx[3];
      r.mats = {diag2(sgn(i), sgn(i + k)), scalar2(sgn(j)), diag2(xi(j), sgn(j + k + l) * xi(j)),
                diag2(xi(k), neg_xi(k)), scalar2(sgn(l)), anti2(Scalar(1), sgn(l))};
      break;
    }
    case Family::W1:
    case Family::W2:
    case Family::W3:
    case Family::W4: {
      if (idx.size() != 3) throw InvalidIndex(to_string(f) + " needs three indices");
      int i = idx[0], j = idx[1], k = idx[2];
      bool swapped_a = f == Family::W2 || f == Family::W4;
      bool twisted_t = f == Family::W3 || f == Family::W4;
      Mat t = twisted_t ? anti2(neg_xi(i), sgn(i + j) * xi(i)) : anti2(xi(i), sgn(j) * xi(i));
      Mat a = swapped_a ? diag2(neg_xi(i), xi(i)) : diag2(xi(i), neg_xi(i));
      r.mats = {diag2(xi(i), neg_xi(i)), scalar2(sgn(j)), t, a, scalar2(sgn(k)), anti2(Scalar(1), sgn(k))};
      break;
    }
    case Family::U: {
      if (idx.size() != 4) throw InvalidIndex("U needs four indices");
      int i = idx[0], j = idx[1], k = idx[2], l = idx[3];
      r.mats = {diag2(xi(i), neg_xi(i)), scalar2(sgn(j)), anti2(Scalar(1), sgn(i + j)),
                diag2(sgn(k), sgn(i + k)), scalar2(sgn(l)), diag2(xi(l), sgn(i + j + l) * xi(l))};
      break;
    }
    case Family::Character:
      throw InvalidIndex("characters are one-dimensional");
  }
  return r;
}

Rep two_dim_module(Family f, std::vector<int> const& idx) {
  auto gate = [&](std::vector<std::vector<int>> const& set, char const* what) {
    if (!in_set(set, idx))
      throw InvalidIndex(to_string(f) + index_str(idx) + " is not in " + what);
  };
  switch (f) {
    case Family::V:
      gate(omega(), "Omega: (0,j,k,l) with k odd, or (i,j,k,l) with i,j<2, k in {0,2}, j+l odd");
      break;
    case Family::W1:
    case Family::W2:
      gate(lambda1(), "Lambda1: (1,j,k), or (3,j,k) with j+k even");
      break;
    case Family::W3:
    case Family::W4:
      gate(lambda2(), "Lambda2: (1,j,k) with j+k odd");
      break;
    case Family::U:
      gate(gamma_set(), "Gamma: (1,j,k,l) with j,k<2, l<4");
      break;
    case Family::Character:
      throw InvalidIndex("characters are one-dimensional");
  }
  return two_dim_module_unchecked(f, idx);
}

std::vector<RelationCheck> verify_rep_relations(Rep const& r) {
  static const Alphabet alpha = rep_alphabet();
  std::vector<RelationCheck> out;
  for (auto const& rel : double_relations()) {
    auto eq = rel.find('=');
    NcPoly p = parse_polynomial(rel.substr(0, eq), alpha) - parse_polynomial(rel.substr(eq + 1), alpha);
    Mat m = eval_poly(p, r);
    RelationCheck c;
    c.relation = rel;
    c.pass = m.is_zero();
    if (!c.pass) c.residual = m.str();
    out.push_back(std::move(c));
  }
  return out;
}

bool rep_relations_hold(Rep const& r) {
  for (auto const& c : verify_rep_relations(r))
    if (!c.pass) return false;
  return true;
}

std::vector<Mat> basis_action(DoubleData const& d, Rep const& r) {
  std::size_t n = d.n;
  Mat const& A = r.act("a");
  Mat const& B = r.act("b");
  Mat const& C = r.act("c");
  std::vector<Mat> words(16);
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 2; ++j)
      for (unsigned k = 0; k < 2; ++k) words[kashina::index(i, j, k)] = A.pow(i) * B.pow(j) * C.pow(k);
  std::vector<Mat> dual(n, Mat(r.dim, r.dim));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t w = 0; w < 16; ++w)
      if (!d.dual_in_words(w, p).is_zero()) dual[p] += words[w] * d.dual_in_words(w, p);
  std::vector<Mat> h(n);
  for (unsigned l = 0; l < 4; ++l)
    for (unsigned m = 0; m < 2; ++m)
      for (unsigned t = 0; t < 2; ++t)
        h[kashina::index(l, m, t)] = r.act("x").pow(l) * r.act("y").pow(m) * r.act("t").pow(t);
  std::vector<Mat> out(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t a = 0; a < n; ++a) out[p * n + a] = dual[p] * h[a];
  return out;
}

Mat act(DoubleData const&, std::vector<Mat> const& basis_rho, Vec const& v) {
  std::size_t dim = basis_rho.front().rows();
  Mat out(dim, dim);
  for (std::size_t e = 0; e < v.size(); ++e)
    if (!v[e].is_zero()) out += basis_rho[e] * v[e];
  return out;
}

bool algebra_map_certificate(DoubleData const& d, Rep const& r, std::string* witness) {
  auto rho = basis_action(d, r);
  for (auto const* name : kRepGenerators) {
    Vec const& g = d.gens.at(name);
    if (act(d, rho, g) != r.act(name)) {
      if (witness) *witness = std::string("generator ") + name + " disagrees with its word expansion";
      return false;
    }
    for (std::size_t e = 0; e < rho.size(); ++e) {
      Mat lhs = r.act(name) * rho[e];
      Mat rhs = act(d, rho, d.d.mul(g, d.d.basis(e)));
      if (lhs != rhs) {
        if (witness) *witness = std::string(name) + " * " + d.d.label(e);
        return false;
      }
    }
  }
  return true;
}

HomSpace intertwiners(Rep const& r1, Rep const& r2) {
  std::size_t d1 = r1.dim, d2 = r2.dim, unknowns = d1 * d2;
  Mat sys(6 * unknowns, unknowns);
  std::size_t row = 0;
  for (std::size_t g = 0; g < 6; ++g) {
    Mat const& A = r1.mats[g];
    Mat const& B = r2.mats[g];
    for (std::size_t i = 0; i < d2; ++i)
      for (std::size_t j = 0; j < d1; ++j, ++row) {
        // (P A - B P)(i, j)
        for (std::size_t m = 0; m < d1; ++m) sys(row, i * d1 + m) += A(m, j);
        for (std::size_t m = 0; m < d2; ++m) sys(row, m * d1 + j) -= B(i, m);
      }
  }
  HomSpace h;
  for (Vec const& v : kernel_basis(sys)) h.basis.emplace_back(d2, d1, v);
  h.dim = h.basis.size();
  return h;
}

std::array<Scalar, 6> trace_signature(Rep const& r) {
  std::array<Scalar, 6> out;
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t k = 0; k < r.dim; ++k) out[g] += r.mats[g](k, k);
  return out;
}

std::vector<Rep> all_simples() {
  std::vector<Rep> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out.push_back(character_module(i, j, k, l));
  for (auto const& idx : omega()) out.push_back(two_dim_module(Family::V, idx));
  for (auto const& idx : lambda1()) out.push_back(two_dim_module(Family::W1, idx));
  for (auto const& idx : lambda1()) out.push_back(two_dim_module(Family::W2, idx));
  for (auto const& idx : lambda2()) out.push_back(two_dim_module(Family::W3, idx));
  for (auto const& idx : lambda2()) out.push_back(two_dim_module(Family::W4, idx));
  for (auto const& idx : gamma_set()) out.push_back(two_dim_module(Family::U, idx));
  return out;
}

namespace {

struct Sweep {
  std::size_t relation_failures = 0, non_simple = 0, iso_pairs = 0, pairs = 0, sum_sq = 0;
  std::size_t one = 0, two = 0;
  bool traces_separate = true;
};

Sweep sweep(std::vector<Rep> const& reps) {
  Sweep s;
  std::vector<std::array<Scalar, 6>> sig;
  for (auto const& r : reps) {
    if (!rep_relations_hold(r)) ++s.relation_failures;
    // D is semisimple, so a one-dimensional endomorphism ring means simple.
    if (intertwiners(r, r).dim != 1) ++s.non_simple;
    (r.dim == 1 ? s.one : s.two) += 1;
    s.sum_sq += r.dim * r.dim;
    sig.push_back(trace_signature(r));
  }
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      ++s.pairs;
      bool iso = intertwiners(reps[i], reps[j]).dim > 0;
      if (iso) ++s.iso_pairs;
      if (!iso && reps[i].dim == reps[j].dim && sig[i] == sig[j]) s.traces_separate = false;
    }
  return s;
}

}  // namespace

CensusReport census() {
  CensusReport rep;
  rep.reps = all_simples();
  Sweep s = sweep(rep.reps);
  rep.one_dim = s.one;
  rep.two_dim = s.two;
  rep.sum_of_squares = s.sum_sq;
  rep.relation_failures = s.relation_failures;
  rep.non_simple = s.non_simple;
  rep.isomorphic_distinct_pairs = s.iso_pairs;
  rep.pairs_checked = s.pairs;
  rep.traces_separate = s.traces_separate;

  for (auto const& [label, set] : {std::pair{"W2 on Lambda1", lambda1()}, std::pair{"W2 on Lambda2", lambda2()}}) {
    std::vector<Rep> reps;
    for (auto const& r : rep.reps)
      if (r.family != Family::W2) reps.push_back(r);
    for (auto const& idx : set) reps.push_back(two_dim_module_unchecked(Family::W2, idx));
    Sweep w = sweep(reps);
    PairingResult p;
    p.pairing = label;
    p.two_dim_count = w.two;
    p.isomorphic_pairs = w.iso_pairs;
    p.all_relations_hold = w.relation_failures == 0;
    p.all_simple = w.non_simple == 0;
    p.sum_of_squares = w.sum_sq;
    rep.pairings.push_back(p);
  }
  return rep;
}

Rep named_module(std::string const& name) {
  static const std::map<std::string, std::vector<int>> chars = {
      {"V1", {0, 1, 1, 0}}, {"V2", {0, 1, 1, 1}}, {"V3", {0, 3, 1, 0}}, {"V4", {0, 3, 1, 1}},
      {"V5", {1, 1, 0, 0}}, {"V6", {1, 1, 0, 1}}, {"V7", {1, 3, 0, 0}}, {"V8", {1, 3, 0, 1}}};
  static const std::map<std::string, std::pair<Family, std::vector<int>>> twos = {
      {"M1", {Family::V, {0, 1, 2, 0}}},  {"M2", {Family::V, {0, 2, 1, 0}}},
      {"M3", {Family::V, {0, 2, 1, 1}}},  {"M4", {Family::V, {0, 2, 3, 0}}},
      {"M5", {Family::V, {0, 2, 3, 1}}},  {"M6", {Family::V, {1, 0, 0, 1}}},
      {"M7", {Family::V, {1, 0, 2, 1}}},  {"M8", {Family::V, {1, 1, 2, 0}}},
      {"M9", {Family::U, {1, 0, 0, 2}}},  {"M10", {Family::U, {1, 0, 1, 0}}},
      {"M11", {Family::U, {1, 1, 0, 2}}}, {"M12", {Family::U, {1, 1, 1, 2}}}};
  if (auto it = chars.find(name); it != chars.end()) {
    auto const& v = it->second;
    return character_module(v[0], v[1], v[2], v[3]);
  }
  if (auto it = twos.find(name); it != twos.end()) return two_dim_module(it->second.first, it->second.second);
  throw std::out_of_range("unknown module " + name);
}

}  // namespace hopf
