#include "hopf/kashina.hpp"

#include <array>
#include <deque>
#include <set>

namespace hopf::kashina {

namespace {

Alphabet h_alphabet() {
  Alphabet a;
  a.names = {"x", "y", "t"};
  a.weight = {0, 0, 1};
  return a;
}

std::string word_label(unsigned i, unsigned j, unsigned k) {
  Alphabet a = h_alphabet();
  Word w(i, char(0));
  w += Word(j, char(1));
  w += Word(k, char(2));
  return a.render(w);
}

Tensor2 outer(Vec const& u, Vec const& v) {
  Tensor2 t;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!u[i].is_zero() && !v[j].is_zero())
        t.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), u[i] * v[j]});
  canonicalize(t);
  return t;
}

bool same_tensor(Tensor2 a, Tensor2 b) {
  canonicalize(a);
  canonicalize(b);
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k].a != b[k].a || a[k].b != b[k].b || a[k].c != b[k].c) return false;
  return true;
}

Tensor2 plus(Tensor2 a, Tensor2 const& b) {
  a.insert(a.end(), b.begin(), b.end());
  canonicalize(a);
  return a;
}

}  // namespace

std::string presentation_text() {
  return R"(name: H
generators: x y t
light: x y
relations:
x^4 = 1
y^2 = 1
t^2 = x^2 y
y x = x y
t x = x^3 t
t y = y t
[coproduct]
x = x @ x
y = y @ y
t = 1/2*((1 + y) t @ t + (1 - y) t @ x^2 t)
[counit]
x = 1
y = 1
t = 1
)";
}

Vec KashinaH::element(std::string const& expr) const {
  NcPoly p = parse_polynomial(expr, alpha);
  return evaluate(h, {x, y, t}, p);
}

KashinaH build_H() {
  KashinaH k;
  k.alpha = h_alphabet();
  HopfData h(16);
  std::vector<std::string> labels(16);
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 2; ++j)
      for (unsigned c = 0; c < 2; ++c) labels[index(i, j, c)] = word_label(i, j, c);
  auto one = [](std::size_t n) { return SVec{{static_cast<std::uint32_t>(n), Scalar(1)}}; };
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 2; ++j)
      for (unsigned c = 0; c < 2; ++c)
        for (unsigned i2 = 0; i2 < 4; ++i2)
          for (unsigned j2 = 0; j2 < 2; ++j2)
            for (unsigned c2 = 0; c2 < 2; ++c2) {
              // t x^i = x^{-i} t and t^2 = x^2 y.
              unsigned xi = c ? (i + 4 - i2) : (i + i2);
              unsigned yj = j + j2;
              unsigned tk = c + c2;
              if (tk == 2) {
                xi += 2;
                yj += 1;
                tk = 0;
              }
              h.set_prod(index(i, j, c), index(i2, j2, c2), one(index(xi, yj, tk)));
            }
  Scalar half = Scalar::half();
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 2; ++j) {
      auto g = static_cast<std::uint32_t>(index(i, j, 0));
      h.set_coprod(g, Tensor2{{g, g, Scalar(1)}});
      auto gt = static_cast<std::uint32_t>(index(i, j, 1));
      auto gyt = static_cast<std::uint32_t>(index(i, j + 1, 1));
      auto gx2t = static_cast<std::uint32_t>(index(i + 2, j, 1));
      h.set_coprod(gt, Tensor2{{gt, gt, half}, {gyt, gt, half}, {gt, gx2t, half}, {gyt, gx2t, -half}});
    }
  h.set_unit(unit_vector(16, 0));
  h.set_counit(Vec(16, Scalar(1)));
  h.set_labels(labels);
  k.x = unit_vector(16, index(1, 0, 0));
  k.y = unit_vector(16, index(0, 1, 0));
  k.t = unit_vector(16, index(0, 0, 1));
  GeneratorData gd;
  gd.names = {"x", "y", "t"};
  gd.vectors = {k.x, k.y, k.t};
  gd.words.resize(16);
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 2; ++j)
      for (unsigned c = 0; c < 2; ++c) {
        auto& w = gd.words[index(i, j, c)];
        w.insert(w.end(), i, 0);
        w.insert(w.end(), j, 1);
        w.insert(w.end(), c, 2);
      }
  h.set_generators(gd);
  h.set_antipode(solve_antipode(h));
  k.h = std::move(h);
  for (unsigned j = 0; j < 2; ++j)
    for (unsigned i = 0; i < 4; ++i) k.grouplikes.push_back(unit_vector(16, index(i, j, 0)));
  return k;
}

HopfData build_H_presented() { return build_hopf(parse_presentation(presentation_text())); }

Vec antipode_t_formula(KashinaH const& k) { return k.element("1/2*((1 + y) x^2 t - (1 - y) t)"); }

DualGenerators dual_generators(KashinaH const& k) {
  // (sum c_i h_i)^* is read as sum c_i h_i^*, so the coordinates in the
  // dual basis are the coordinates of the element itself.
  return {k.element("(1 + x + x^2 + x^3)(1 - y)(1 + i t)"),
          k.element("(1 - x + x^2 - x^3)(1 + y)(1 - t)"),
          k.element("(1 + i x - x^2 - i x^3)(1 - y)(1 + t)")};
}

AxiomReport verify_dual_generators(KashinaH const& k) {
  HopfData d = dual(k.h);
  auto [a, b, c] = dual_generators(k);
  Vec one = d.unit();
  auto m = [&](Vec const& u, Vec const& v) { return d.mul(u, v); };
  Vec a2 = d.power(a, 2), a3 = d.power(a, 3);
  AxiomReport r;
  r.mode = "exhaustive";
  auto check = [&](std::string name, bool ok) { r.checks.push_back({std::move(name), ok, 1, ok ? "" : "mismatch"}); };
  check("a^4 = 1", d.power(a, 4) == one);
  check("b^2 = 1", d.power(b, 2) == one);
  check("c^2 = b", d.power(c, 2) == b);
  check("ab = ba", m(a, b) == m(b, a));
  check("ca = a^3 c", m(c, a) == m(a3, c));
  check("cb = bc", m(c, b) == m(b, c));
  check("Delta(a) = a@a", same_tensor(d.delta(a), outer(a, a)));
  check("Delta(b) = b@b", same_tensor(d.delta(b), outer(b, b)));
  Vec a2c = m(a2, c);
  Vec a2bc = m(m(a2, b), c);
  Tensor2 expect = plus(outer(scale(add(c, a2c), Scalar::half()), c),
                        outer(scale(sub(c, a2c), Scalar::half()), a2bc));
  check("Delta(c)", same_tensor(d.delta(c), expect));
  return r;
}

std::vector<TableRow> const& automorphism_table() {
  static const std::vector<TableRow> rows = {
    {1, "x", "y", "t"},
    {2, "x", "y", "x t"},
    {3, "x", "y", "x^2 t"},
    {4, "x", "y", "x^3 t"},
    {5, "x", "y", "y t"},
    {6, "x", "y", "x y t"},
    {7, "x", "y", "x^2 y t"},
    {8, "x", "y", "x^3 y t"},
    {9, "x", "x^2 y", "1/2*((1+i) y t + (1-i) x^2 y t)"},
    {10, "x", "x^2 y", "1/2*((1-i) y t + (1+i) x^2 y t)"},
    {11, "x", "x^2 y", "1/2*((1+i) x y t + (1-i) x^3 y t)"},
    {12, "x", "x^2 y", "1/2*((1-i) x y t + (1+i) x^3 y t)"},
    {13, "x", "x^2 y", "1/2*((1+i) t + (1-i) x^2 t)"},
    {14, "x", "x^2 y", "1/2*((1-i) t + (1+i) x^2 t)"},
    {15, "x", "x^2 y", "1/2*((1+i) x t + (1-i) x^3 t)"},
    {16, "x", "x^2 y", "1/2*((1-i) x t + (1+i) x^3 t)"},
    {17, "x^3", "y", "t"},
    {18, "x^3", "y", "x t"},
    {19, "x^3", "y", "x^2 t"},
    {20, "x^3", "y", "x^3 t"},
    {21, "x^3", "y", "y t"},
    {22, "x^3", "y", "x y t"},
    {23, "x^3", "y", "x^2 y t"},
    {24, "x^3", "y", "x^3 y t"},
    {25, "x^3", "x^2 y", "1/2*((1+i) y t + (1-i) x^2 y t)"},
    {26, "x^3", "x^2 y", "1/2*((1-i) y t + (1+i) x^2 y t)"},
    {27, "x^3", "x^2 y", "1/2*((1+i) x y t + (1-i) x^3 y t)"},
    {28, "x^3", "x^2 y", "1/2*((1-i) x y t + (1+i) x^3 y t)"},
    {29, "x^3", "x^2 y", "1/2*((1+i) t + (1-i) x^2 t)"},
    {30, "x^3", "x^2 y", "1/2*((1-i) t + (1+i) x^2 t)"},
    {31, "x^3", "x^2 y", "1/2*((1+i) x t + (1-i) x^3 t)"},
    {32, "x^3", "x^2 y", "1/2*((1-i) x t + (1+i) x^3 t)"},
    {33, "x y", "y", "t"},
    {34, "x y", "y", "x t"},
    {35, "x y", "y", "x^2 t"},
    {36, "x y", "y", "x^3 t"},
    {37, "x y", "y", "y t"},
    {38, "x y", "y", "x y t"},
    {39, "x y", "y", "x^2 y t"},
    {40, "x y", "y", "x^3 y t"},
    {41, "x y", "x^2 y", "1/2*((1+i) y t + (1-i) x^2 y t)"},
    {42, "x y", "x^2 y", "1/2*((1-i) y t + (1+i) x^2 y t)"},
    {43, "x y", "x^2 y", "1/2*((1+i) x y t + (1-i) x^3 y t)"},
    {44, "x y", "x^2 y", "1/2*((1-i) x y t + (1+i) x^3 y t)"},
    {45, "x y", "x^2 y", "1/2*((1+i) t + (1-i) x^2 t)"},
    {46, "x y", "x^2 y", "1/2*((1-i) t + (1+i) x^2 t)"},
    {47, "x y", "x^2 y", "1/2*((1+i) x t + (1-i) x^3 t)"},
    {48, "x y", "x^2 y", "1/2*((1-i) x t + (1+i) x^3 t)"},
    {49, "x^3 y", "y", "t"},
    {50, "x^3 y", "y", "x t"},
    {51, "x^3 y", "y", "x^2 t"},
    {52, "x^3 y", "y", "x^3 t"},
    {53, "x^3 y", "y", "y t"},
    {54, "x^3 y", "y", "x y t"},
    {55, "x^3 y", "y", "x^2 y t"},
    {56, "x^3 y", "y", "x^3 y t"},
    {57, "x^3 y", "x^2 y", "1/2*((1+i) y t + (1-i) x^2 y t)"},
    {58, "x^3 y", "x^2 y", "1/2*((1-i) y t + (1+i) x^2 y t)"},
    {59, "x^3 y", "x^2 y", "1/2*((1+i) x y t + (1-i) x^3 y t)"},
    {60, "x^3 y", "x^2 y", "1/2*((1-i) x y t + (1+i) x^3 y t)"},
    {61, "x^3 y", "x^2 y", "1/2*((1+i) t + (1-i) x^2 t)"},
    {62, "x^3 y", "x^2 y", "1/2*((1-i) t + (1+i) x^2 t)"},
    {63, "x^3 y", "x^2 y", "1/2*((1+i) x t + (1-i) x^3 t)"},
    {64, "x^3 y", "x^2 y", "1/2*((1-i) x t + (1+i) x^3 t)"},  };
  return rows;
}

Mat extend_map(KashinaH const& k, Vec const& fx, Vec const& fy, Vec const& ft) {
  HopfData const& h = k.h;
  Mat m(16, 16);
  Vec xi = h.unit();
  for (unsigned i = 0; i < 4; ++i, xi = h.mul(xi, fx)) {
    Vec xy = xi;
    for (unsigned j = 0; j < 2; ++j, xy = h.mul(xy, fy)) {
      m.set_col(index(i, j, 0), xy);
      m.set_col(index(i, j, 1), h.mul(xy, ft));
    }
  }
  return m;
}

std::vector<Automorphism> table_automorphisms(KashinaH const& k) {
  std::vector<Automorphism> out;
  for (auto const& row : automorphism_table()) {
    Automorphism a;
    a.name = "tau" + std::to_string(row.number);
    a.fx = k.element(row.x);
    a.fy = k.element(row.y);
    a.ft = k.element(row.t);
    a.matrix = extend_map(k, a.fx, a.fy, a.ft);
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<AutomorphismCheck> verify_automorphism_table(KashinaH const& k) {
  std::vector<AutomorphismCheck> out;
  Mat const& s = *k.h.antipode();
  for (auto const& a : table_automorphisms(k)) {
    AutomorphismCheck c;
    c.name = a.name;
    c.report = check_morphism(k.h, k.h, a.matrix);
    c.commutes_with_antipode = a.matrix * s == s * a.matrix;
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t closure_order(std::vector<Mat> const& gens) {
  if (gens.empty()) return 1;
  std::size_t n = gens.front().rows();
  std::set<std::vector<Scalar>> seen;
  std::deque<Mat> todo;
  Mat id = Mat::identity(n);
  seen.insert(id.data());
  todo.push_back(id);
  while (!todo.empty()) {
    Mat m = std::move(todo.front());
    todo.pop_front();
    for (auto const& g : gens) {
      Mat p = g * m;
      if (seen.insert(p.data()).second) todo.push_back(std::move(p));
    }
  }
  return seen.size();
}

std::vector<std::vector<int>> composition_table(std::vector<Automorphism> const& autos) {
  std::map<std::vector<Scalar>, int> where;
  for (std::size_t i = 0; i < autos.size(); ++i) where.emplace(autos[i].matrix.data(), int(i) + 1);
  std::vector<std::vector<int>> out(autos.size(), std::vector<int>(autos.size(), 0));
  for (std::size_t i = 0; i < autos.size(); ++i)
    for (std::size_t j = 0; j < autos.size(); ++j) {
      auto it = where.find((autos[i].matrix * autos[j].matrix).data());
      if (it != where.end()) out[i][j] = it->second;
    }
  return out;
}

namespace {

// Characters of G = <x> x <y>: chi_{m,n}(x^i y^j) = i^{mi} (-1)^{nj}, listed
// at position m + 4n.
Scalar chi(unsigned c, std::size_t g) {
  unsigned m = c % 4, n = c / 4;
  unsigned i = g % 4, j = (g / 4) % 2;
  return Scalar::i_pow(long(m * i)) * Scalar::i_pow(long(2 * n * j));
}

unsigned chi_mul(unsigned a, unsigned b) { return (a % 4 + b % 4) % 4 + 4 * ((a / 4 + b / 4) % 2); }

// chi applied to an element of kG given by its first 8 coordinates.
Scalar chi_of(unsigned c, Vec const& v) {
  Scalar s;
  for (std::size_t g = 0; g < 8; ++g)
    if (!v[g].is_zero()) s += v[g] * chi(c, g);
  return s;
}

// (chi (x) psi) of 1/2((1+gy) (x) 1 + (1-gy) (x) gx^2).
Scalar twist_hat(KashinaH const& k, Vec const& gx, Vec const& gy, unsigned c, unsigned d) {
  Scalar cy = chi_of(c, gy);
  if (cy == Scalar(1)) return Scalar(1);
  if (cy == Scalar(-1)) return chi_of(d, k.h.mul(gx, gx));
  // gy not of order two, so no solution; flag with zero.
  return Scalar();
}

std::vector<Scalar> roots(Scalar const& s, unsigned order) {
  std::vector<Scalar> out;
  Scalar r;
  if (order == 2) {
    if (sqrt_scalar(s, r)) out = {r, -r};
    return out;
  }
  for (Scalar const& w : roots(s, 2))
    for (Scalar const& u : roots(w, 2)) out.push_back(u);
  return out;
}

bool in_group_algebra(Vec const& v) {
  for (std::size_t k = 8; k < v.size(); ++k)
    if (!v[k].is_zero()) return false;
  return true;
}

}  // namespace

std::vector<Automorphism> exhaustive_automorphism_search(KashinaH const& k) {
  std::vector<Automorphism> out;
  std::set<std::vector<Scalar>> seen;
  Vec const& x = k.x;
  Vec const& y = k.y;
  for (Vec const& gx : k.grouplikes)
    for (Vec const& gy : k.grouplikes) {
      // Y = E' E with E' from the images and E from (x, y) themselves.
      auto yhat = [&](unsigned c, unsigned d) {
        return twist_hat(k, gx, gy, c, d) * twist_hat(k, x, y, c, d);
      };
      const unsigned ca = 1, cb = 4;
      Scalar pa(1);
      unsigned cm = 0;
      for (unsigned m = 0; m < 4; ++m, cm = chi_mul(cm, ca)) pa *= yhat(cm, ca);
      Scalar pb = yhat(cb, cb);
      if (pa.is_zero() || pb.is_zero()) continue;
      for (Scalar const& u : roots(pa.inv(), 4))
        for (Scalar const& v : roots(pb.inv(), 2)) {
          std::array<Scalar, 8> khat{};
          khat[0] = Scalar(1);
          for (unsigned m = 1; m < 4; ++m) khat[m] = yhat(m - 1, ca) * khat[m - 1] * u;
          for (unsigned m = 0; m < 4; ++m) khat[m + 4] = yhat(m, cb) * khat[m] * v;
          bool ok = true;
          for (unsigned c = 0; c < 8 && ok; ++c)
            for (unsigned d = 0; d < 8 && ok; ++d)
              ok = khat[chi_mul(c, d)] == yhat(c, d) * khat[c] * khat[d];
          if (!ok) continue;
          Vec ft(16);
          for (std::size_t g = 0; g < 8; ++g) {
            Scalar s;
            for (unsigned c = 0; c < 8; ++c) s += khat[c] * chi(c, g).conj();
            ft[g + 8] = s * Scalar(Rat(1, 8));
          }
          Mat m = extend_map(k, gx, gy, ft);
          if (!check_morphism(k.h, k.h, m).hopf_iso()) continue;
          if (!seen.insert(m.data()).second) continue;
          out.push_back({"search", gx, gy, ft, std::move(m)});
        }
    }
  return out;
}

AnsatzCertificate general_ansatz_certificate(KashinaH const& k) {
  AnsatzCertificate cert;
  HopfData const& h = k.h;
  cert.subcoalgebra = true;
  for (std::size_t b = 8; b < 16; ++b)
    for (auto const& term : h.coprod(b))
      if (term.a < 8 || term.b < 8) cert.subcoalgebra = false;
  bool group_ok = true;
  for (Vec const& g : k.grouplikes) group_ok = group_ok && in_group_algebra(g) && is_grouplike(h, g);
  Mat all(16, 16);
  for (std::size_t g = 0; g < 8; ++g) all.set_col(g, k.grouplikes[g]);
  for (std::size_t b = 8; b < 16; ++b) all.set_col(b, unit_vector(16, b));
  cert.complement = group_ok && rank(all) == 16;

  // C* with (e^i e^j)(c_k) = coefficient of c_i (x) c_j in Delta(c_k).
  auto prod = [&](Vec const& p, Vec const& q) {
    Vec r(8);
    for (std::size_t kk = 0; kk < 8; ++kk)
      for (auto const& term : h.coprod(kk + 8))
        if (term.a >= 8 && term.b >= 8) r[kk] += term.c * p[term.a - 8] * q[term.b - 8];
    return r;
  };
  std::vector<Vec> span;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      Vec ei = unit_vector(8, i), ej = unit_vector(8, j);
      span.push_back(sub(prod(ei, ej), prod(ej, ei)));
    }
  // Row-reduced basis of the span, so the generating set stays small.
  auto reduce = [](std::vector<Vec> const& vs) {
    Mat m(vs.size(), 8);
    for (std::size_t r = 0; r < vs.size(); ++r)
      for (std::size_t c = 0; c < 8; ++c) m(r, c) = vs[r][c];
    std::size_t piv = rref(m).size();
    std::vector<Vec> out;
    for (std::size_t r = 0; r < piv; ++r) out.push_back(m.row(r));
    return out;
  };
  span = reduce(span);
  std::size_t before = 0;
  while (span.size() != before && span.size() < 8) {
    before = span.size();
    std::vector<Vec> next = span;
    for (Vec const& v : span)
      for (std::size_t e = 0; e < 8; ++e) {
        next.push_back(prod(unit_vector(8, e), v));
        next.push_back(prod(v, unit_vector(8, e)));
      }
    span = reduce(next);
  }
  std::size_t r1 = span.size();
  cert.no_grouplikes = r1 == 8;
  return cert;
}

}  // namespace hopf::kashina
