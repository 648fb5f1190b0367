#include "hopf/nichols.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hopf {

namespace {

std::size_t ipow(std::size_t b, unsigned e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// For each source index q', the targets q with coefficient: out[q] += coef * v[q'].
using Spread = std::vector<std::vector<std::pair<std::size_t, Scalar>>>;

Spread left_spread(Mat const& c) {
  Spread s(c.cols());
  for (std::size_t q = 0; q < c.rows(); ++q)
    for (std::size_t p = 0; p < c.cols(); ++p)
      if (!c(q, p).is_zero()) s[p].emplace_back(q, c(q, p));
  return s;
}

Spread right_spread(Mat const& c) {
  Spread s(c.rows());
  for (std::size_t p = 0; p < c.rows(); ++p)
    for (std::size_t q = 0; q < c.cols(); ++q)
      if (!c(p, q).is_zero()) s[p].emplace_back(q, c(p, q));
  return s;
}

// Applies 1^(i-1) (x) m (x) 1^(n-i-1), with m given by its spread.
Vec apply_at(Vec const& v, std::size_t d, unsigned n, unsigned i, Spread const& m) {
  std::size_t post = ipow(d, n - i - 1), blk = d * d * post, pre = v.size() / blk;
  Vec out(v.size());
  for (std::size_t p = 0; p < pre; ++p)
    for (std::size_t q = 0; q < d * d; ++q)
      for (std::size_t s = 0; s < post; ++s) {
        Scalar const& x = v[p * blk + q * post + s];
        if (x.is_zero()) continue;
        for (auto const& [t, coef] : m[q]) out[p * blk + t * post + s] += coef * x;
      }
  return out;
}

void check_size(BraidedSpace const& bs, unsigned n, std::size_t max_size) {
  if (n == 0) throw std::invalid_argument("degree must be positive");
  double size = 1;
  for (unsigned k = 0; k < n; ++k) size *= static_cast<double>(bs.dim);
  if (size > static_cast<double>(max_size))
    throw CapExceeded("tensor power of dimension " + std::to_string(bs.dim) + "^" +
                      std::to_string(n) + " exceeds " + std::to_string(max_size));
}

// Roots in Q(i) of a + b s + c s^2, skipping s = 0; empty optional when
// the polynomial vanishes identically.
std::optional<std::vector<Scalar>> roots(Scalar const& a, Scalar const& b, Scalar const& c) {
  std::vector<Scalar> out;
  if (!c.is_zero()) {
    Scalar disc = b * b - Scalar(4) * a * c, r;
    if (sqrt_scalar(disc, r)) {
      Scalar den = (Scalar(2) * c).inv();
      out.push_back((-b + r) * den);
      out.push_back((-b - r) * den);
    }
  } else if (!b.is_zero()) {
    out.push_back(-a * b.inv());
  } else if (a.is_zero()) {
    return std::nullopt;
  }
  std::erase_if(out, [](Scalar const& s) { return s.is_zero(); });
  return out;
}

}  // namespace

Vec DiagonalData::vertices() const {
  Vec out;
  for (std::size_t i = 0; i < q.rows(); ++i) out.push_back(q(i, i));
  return out;
}

std::vector<std::vector<Scalar>> DiagonalData::edges() const {
  std::vector<std::vector<Scalar>> out(q.rows());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = i + 1; j < q.rows(); ++j) out[i].push_back(q(i, j) * q(j, i));
  return out;
}

std::string DiagonalData::render() const {
  std::string s = "vertices:";
  for (auto const& v : vertices()) s += " " + v.str();
  s += "; edges:";
  auto e = edges();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t k = 0; k < e[i].size(); ++k)
      s += " (" + std::to_string(i + 1) + "," + std::to_string(i + k + 2) + ")=" + e[i][k].str();
  return s;
}

BraidedSpace braided_space(Mat c, std::size_t dim) {
  if (c.rows() != dim * dim || c.cols() != dim * dim)
    throw std::invalid_argument("braiding must be dim^2 x dim^2");
  BraidedSpace bs{dim, std::move(c), std::nullopt};
  bs.diagonal = diagonal_data(bs);
  return bs;
}

BraidedSpace braided_space(YDModule const& m) { return braided_space(braiding(m, m), m.dim); }

BraidedSpace change_basis(BraidedSpace const& bs, Mat const& p) {
  Mat q = kron(p, p);
  auto qi = inverse(q);
  if (!qi) throw std::invalid_argument("change of basis is singular");
  return braided_space(*qi * bs.c * q, bs.dim);
}

Mat braid_operator(BraidedSpace const& bs, unsigned n, unsigned i) {
  if (i < 1 || i >= n) throw std::invalid_argument("braid position out of range");
  return kron(kron(Mat::identity(ipow(bs.dim, i - 1)), bs.c), Mat::identity(ipow(bs.dim, n - i - 1)));
}

std::vector<unsigned> reduced_word(std::vector<unsigned> perm) {
  std::vector<unsigned> word;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t j = 0; j + 1 < perm.size(); ++j)
      if (perm[j] > perm[j + 1]) {
        std::swap(perm[j], perm[j + 1]);
        word.push_back(static_cast<unsigned>(j + 1));
        swapped = true;
      }
  }
  return word;
}

Mat quantum_symmetrizer(BraidedSpace const& bs, unsigned n, std::size_t max_size) {
  check_size(bs, n, max_size);
  std::size_t N = ipow(bs.dim, n);
  Spread sp = left_spread(bs.c);
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<Vec> cols(N, Vec(N));
  do {
    auto word = reduced_word(perm);
    for (std::size_t k = 0; k < N; ++k) {
      Vec v = unit_vector(N, k);
      for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply_at(v, bs.dim, n, *it, sp);
      for (std::size_t r = 0; r < N; ++r) cols[k][r] += v[r];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  Mat s(N, N);
  for (std::size_t k = 0; k < N; ++k) s.set_col(k, cols[k]);
  return s;
}

Mat factorized_symmetrizer(BraidedSpace const& bs, unsigned n, std::size_t max_size) {
  check_size(bs, n, max_size);
  Mat s = Mat::identity(bs.dim);
  for (unsigned m = 2; m <= n; ++m) {
    std::size_t N = ipow(bs.dim, m);
    Mat t = Mat::identity(N), p = Mat::identity(N);
    for (unsigned k = 1; k < m; ++k) {
      p = p * braid_operator(bs, m, m - k);
      t += p;
    }
    s = kron(s, Mat::identity(bs.dim)) * t;
  }
  return s;
}

std::vector<Mat> symmetrizer_row_bases(BraidedSpace const& bs, unsigned cap) {
  std::size_t d = bs.dim;
  std::vector<Mat> out;
  if (cap == 0 || d == 0) return out;
  check_size(bs, cap, std::size_t{1} << 22);
  Spread sp = right_spread(bs.c);
  // Row basis of S_(n-1); row space of S_n is (rows (x) 1) T_n.
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < d; ++k) rows.push_back(unit_vector(d, k));
  out.push_back(Mat::identity(d));
  for (unsigned n = 2; n <= cap; ++n) {
    std::size_t N = ipow(d, n);
    Mat k(rows.size() * d, N);
    std::size_t at = 0;
    for (auto const& r : rows)
      for (std::size_t b = 0; b < d; ++b, ++at) {
        Vec u = kron(r, unit_vector(d, b)), sum = u;
        for (unsigned j = 1; j < n; ++j) {
          u = apply_at(u, d, n, n - j, sp);
          for (std::size_t x = 0; x < N; ++x)
            if (!u[x].is_zero()) sum[x] += u[x];
        }
        for (std::size_t x = 0; x < N; ++x) k(at, x) = std::move(sum[x]);
      }
    auto piv = rref(k);
    rows.clear();
    Mat basis(piv.size(), N);
    for (std::size_t r = 0; r < piv.size(); ++r) {
      rows.push_back(k.row(r));
      for (std::size_t x = 0; x < N; ++x) basis(r, x) = k(r, x);
    }
    out.push_back(std::move(basis));
    if (piv.empty()) break;
  }
  return out;
}

std::vector<std::size_t> symmetrizer_ranks(BraidedSpace const& bs, unsigned cap) {
  std::vector<std::size_t> ranks;
  for (auto const& m : symmetrizer_row_bases(bs, cap)) ranks.push_back(m.rows());
  return ranks;
}

std::string Verdict::str() const {
  switch (kind) {
    case Kind::Finite:
      return "Finite(" + std::to_string(total) + ")";
    case Kind::InfiniteByEigenOne:
      return "InfiniteByEigenOne(" + vec_str(witness) + ")";
    case Kind::Undetermined:
      break;
  }
  return "Undetermined(cap=" + std::to_string(cap) + ")";
}

NicholsReport nichols_dim(BraidedSpace const& bs, unsigned cap) {
  NicholsReport rep;
  rep.quadratic_relations = kernel_basis(Mat::identity(bs.dim * bs.dim) + bs.c);
  if (auto w = eigen_one_infinite(bs)) {
    rep.verdict.kind = Verdict::Kind::InfiniteByEigenOne;
    rep.verdict.witness = *w;
    rep.ranks = symmetrizer_ranks(bs, std::min(cap, 3u));
    return rep;
  }
  rep.ranks = symmetrizer_ranks(bs, cap);
  if (!rep.ranks.empty() && rep.ranks.back() == 0) {
    rep.verdict.kind = Verdict::Kind::Finite;
    rep.verdict.total = 1 + std::accumulate(rep.ranks.begin(), rep.ranks.end(), std::size_t{0});
  } else {
    rep.verdict.cap = cap;
  }
  return rep;
}

std::vector<Vec> pure_square_eigenvectors(BraidedSpace const& bs, Scalar const& lambda) {
  std::size_t d = bs.dim;
  std::vector<Vec> out;
  auto fixes = [&](Vec const& v) {
    Vec vv = kron(v, v);
    return bs.c * vv == scale(vv, lambda);
  };
  for (std::size_t j = 0; j < d; ++j)
    if (Vec e = unit_vector(d, j); fixes(e)) out.push_back(e);
  Mat m = bs.c - Mat::identity(d * d) * lambda;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      // (c - lambda)(v (x) v) = A + s B + s^2 C for v = e_i + s e_j.
      Vec a = m.col(i * d + i), b = add(m.col(i * d + j), m.col(j * d + i)), c = m.col(j * d + j);
      std::optional<std::vector<Scalar>> cand;
      for (std::size_t r = 0; r < d * d; ++r) {
        cand = roots(a[r], b[r], c[r]);
        if (cand) break;
      }
      std::vector<Scalar> tries = cand ? *cand : std::vector<Scalar>{Scalar(1), Scalar(-1)};
      for (auto const& s : tries) {
        Vec v = add(unit_vector(d, i), scale(unit_vector(d, j), s));
        if (fixes(v) && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
      }
    }
  return out;
}

std::optional<Vec> eigen_one_infinite(BraidedSpace const& bs) {
  auto v = pure_square_eigenvectors(bs, Scalar(1));
  if (v.empty()) return std::nullopt;
  return v.front();
}

std::optional<Mat> diagonalize(BraidedSpace const& bs) {
  std::size_t d = bs.dim;
  if (bs.diagonal) return Mat::identity(d);
  std::vector<Vec> cand;
  for (Scalar l : {Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()})
    for (auto& v : pure_square_eigenvectors(bs, l)) cand.push_back(std::move(v));
  // Greedy over candidates in order; enough for the small spaces at hand.
  for (std::size_t start = 0; start < cand.size(); ++start) {
    std::vector<Vec> pick{cand[start]};
    for (std::size_t k = 0; k < cand.size() && pick.size() < d; ++k) {
      if (k == start) continue;
      Mat p(d, pick.size() + 1);
      for (std::size_t c = 0; c < pick.size(); ++c) p.set_col(c, pick[c]);
      p.set_col(pick.size(), cand[k]);
      if (rank(p) == pick.size() + 1) pick.push_back(cand[k]);
    }
    if (pick.size() != d) continue;
    Mat p(d, d);
    for (std::size_t c = 0; c < d; ++c) p.set_col(c, pick[c]);
    if (change_basis(bs, p).diagonal) return p;
  }
  return std::nullopt;
}

std::optional<DiagonalData> diagonal_data(BraidedSpace const& bs) {
  std::size_t d = bs.dim;
  Mat q(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::size_t src = i * d + j, dst = j * d + i;
      for (std::size_t r = 0; r < d * d; ++r)
        if (r != dst && !bs.c(r, src).is_zero()) return std::nullopt;
      if (bs.c(dst, src).is_zero()) return std::nullopt;
      q(i, j) = bs.c(dst, src);
    }
  return DiagonalData{q};
}

std::optional<Mat> homogeneous_basis(YDModule const& m) {
  std::size_t d = m.dim;
  Mat const& X = m.gens[0];
  Mat const& Y = m.gens[1];
  std::vector<Vec> basis;
  const Scalar lam[] = {Scalar(1), Scalar::i(), Scalar(-1), -Scalar::i()};
  for (std::size_t g = 0; g < 8; ++g) {
    // delta(v) = g (x) v: coact[g] v = v and every other component kills v.
    Mat eq(16 * d, d);
    for (std::size_t h = 0; h < 16; ++h) {
      Mat blk = h == g ? m.coact[h] - Mat::identity(d) : m.coact[h];
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) eq(h * d + r, c) = blk(r, c);
    }
    auto ker = kernel_basis(eq);
    if (ker.empty()) continue;
    Mat b(d, ker.size());
    for (std::size_t k = 0; k < ker.size(); ++k) b.set_col(k, ker[k]);
    for (auto const& l : lam)
      for (int sign : {1, -1}) {
        Mat xb = (X - Mat::identity(d) * l) * b, yb = (Y - Mat::identity(d) * Scalar(sign)) * b;
        Mat st(2 * d, b.cols());
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < b.cols(); ++c) {
            st(r, c) = xb(r, c);
            st(d + r, c) = yb(r, c);
          }
        for (auto const& a : kernel_basis(st)) basis.push_back(b * a);
      }
  }
  if (basis.size() != d) return std::nullopt;
  Mat p(d, d);
  for (std::size_t k = 0; k < d; ++k) p.set_col(k, basis[k]);
  if (rank(p) != d) return std::nullopt;
  return p;
}

bool pair_factorizes(YDModule const& v, YDModule const& w) {
  return (braiding(w, v) * braiding(v, w)).is_identity();
}

namespace {

NamePair unordered(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {a, b};
}

std::vector<std::string> simple_names() {
  std::vector<std::string> n;
  for (int i = 1; i <= 8; ++i) n.push_back("V" + std::to_string(i));
  for (int i = 1; i <= 12; ++i) n.push_back("M" + std::to_string(i));
  return n;
}

std::string V(int i) { return "V" + std::to_string(i); }
std::string M(int i) { return "M" + std::to_string(i); }

std::size_t nichols_size(std::string const& name) { return name[0] == 'V' ? 2 : 4; }

}  // namespace

std::set<NamePair> expected_pairs() {
  std::set<NamePair> s;
  for (int i = 1; i <= 8; ++i) s.insert(unordered(V(i), V(i)));
  for (int i = 1; i <= 4; ++i) {
    s.insert(unordered(M(1), V(i)));
    s.insert(unordered(M(7), V(i)));
    s.insert(unordered(M(8), V(i + 4)));
  }
  for (int m : {9, 10})
    for (int v : {2, 4, 5, 7}) s.insert(unordered(M(m), V(v)));
  for (int i = 1; i <= 12; ++i) s.insert(unordered(M(i), M(i)));
  s.insert(unordered(M(1), M(6)));
  s.insert(unordered(M(1), M(8)));
  for (int i : {2, 3}) s.insert(unordered(M(i), M(i + 2)));
  for (int i : {6, 7, 9, 11}) s.insert(unordered(M(i), M(i + 1)));
  return s;
}

PairTable pair_table(std::vector<CatalogEntry> const& cat) {
  PairTable t;
  t.expected = expected_pairs();
  auto names = simple_names();
  for (auto const& n : names) {
    auto rep = nichols_dim(braided_space(find(cat, n)), 6);
    if (rep.verdict.kind != Verdict::Kind::Finite) t.infinite_summands.push_back(n);
  }
  for (std::size_t a = 0; a < names.size(); ++a)
    for (std::size_t b = a; b < names.size(); ++b) {
      auto const& v = find(cat, names[a]);
      auto const& w = find(cat, names[b]);
      bool both = pair_factorizes(v, w) && pair_factorizes(w, v);
      if (both) t.admissible.insert(unordered(names[a], names[b]));
    }
  std::set_difference(t.admissible.begin(), t.admissible.end(), t.expected.begin(),
                      t.expected.end(), std::inserter(t.extra, t.extra.end()));
  std::set_difference(t.expected.begin(), t.expected.end(), t.admissible.begin(),
                      t.admissible.end(), std::inserter(t.missing, t.missing.end()));
  return t;
}

std::string FamilyMember::label() const {
  std::string s;
  for (auto const& x : summands) s += (s.empty() ? "" : "+") + x;
  return s;
}

std::vector<FamilyMember> family_members(std::vector<CatalogEntry> const& cat,
                                         std::size_t rank_dim_limit) {
  struct Family {
    int head;
    std::vector<int> is, js;
  };
  // The M8 family leaves j open; V6, V8 are the characters pairing with M8.
  const std::vector<Family> families = {
      {1, {1, 2}, {1, 2}}, {7, {1, 2}, {1, 2}}, {8, {3, 4}, {3, 4}},
      {9, {3, 4}, {1, 2}}, {10, {3, 4}, {1, 2}}};
  std::vector<FamilyMember> out;
  std::set<std::vector<std::string>> seen;
  for (auto const& f : families)
    for (int i : f.is)
      for (int j : f.js)
        for (int n1 : {1, 2})
          for (int n2 : {0, 1})
            for (int n3 : {0, 1}) {
              if (n1 == 2 && n2 == 0 && n3 == 0) continue;
              FamilyMember fm;
              fm.family = M(f.head);
              fm.summands.assign(n1, M(f.head));
              if (n2) fm.summands.push_back(V(2 * i - 1));
              if (n3) fm.summands.push_back(V(2 * j));
              if (!seen.insert(fm.summands).second) continue;
              fm.pairwise = true;
              fm.product = 1;
              std::size_t total_dim = 0;
              unsigned top = 0;
              for (std::size_t a = 0; a < fm.summands.size(); ++a) {
                fm.product *= nichols_size(fm.summands[a]);
                total_dim += fm.summands[a][0] == 'V' ? 1 : 2;
                top += fm.summands[a][0] == 'V' ? 1 : 2;
                for (std::size_t b = a + 1; b < fm.summands.size(); ++b)
                  fm.pairwise = fm.pairwise && pair_factorizes(find(cat, fm.summands[a]),
                                                               find(cat, fm.summands[b]));
              }
              if (fm.pairwise && total_dim <= rank_dim_limit) {
                std::vector<YDModule> parts;
                for (auto const& s : fm.summands) parts.push_back(find(cat, s));
                auto ranks = symmetrizer_ranks(braided_space(direct_sum(parts)), top + 1);
                if (ranks.back() == 0)
                  fm.dim = 1 + std::accumulate(ranks.begin(), ranks.end(), std::size_t{0});
              }
              out.push_back(std::move(fm));
            }
  return out;
}

FiniteSumTable finite_sum_table(std::vector<CatalogEntry> const& cat, std::size_t rank_dim_limit) {
  return {pair_table(cat), family_members(cat, rank_dim_limit)};
}

}  // namespace hopf
