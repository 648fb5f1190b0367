#include "hopf/ydcat.hpp"

#include <cstdlib>

namespace hopf {

using kashina::index;

namespace {

Scalar xi(long k) { return Scalar::i_pow(k); }
Scalar sgn(long k) { return Scalar::i_pow(2 * k); }

std::size_t hidx(int p, int q, int r) {
  return index(static_cast<unsigned>(((p % 4) + 4) % 4), static_cast<unsigned>(((q % 2) + 2) % 2),
               static_cast<unsigned>(((r % 2) + 2) % 2));
}

// Solutions P (rows x cols) of P A_g = B_g P for each pair.
std::vector<Mat> solve_commuting(std::vector<std::pair<Mat, Mat>> const& pairs, std::size_t rows,
                                 std::size_t cols) {
  std::size_t unknowns = rows * cols;
  Mat sys(pairs.size() * unknowns, unknowns);
  std::size_t row = 0;
  for (auto const& [A, B] : pairs)
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j, ++row) {
        for (std::size_t m = 0; m < cols; ++m) sys(row, i * cols + m) += A(m, j);
        for (std::size_t m = 0; m < rows; ++m) sys(row, m * cols + j) -= B(i, m);
      }
  std::vector<Mat> out;
  for (Vec const& v : kernel_basis(sys)) out.emplace_back(rows, cols, v);
  return out;
}

}  // namespace

Mat YDModule::action(std::size_t b) const {
  return gens[0].pow(static_cast<unsigned>(b % 4)) * gens[1].pow(static_cast<unsigned>((b / 4) % 2)) *
         gens[2].pow(static_cast<unsigned>((b / 8) % 2));
}

Mat YDModule::action(Vec const& h) const {
  Mat out(dim, dim);
  for (std::size_t b = 0; b < h.size(); ++b)
    if (!h[b].is_zero()) out += action(b) * h[b];
  return out;
}

Mat YDModule::coaction_matrix() const {
  Mat out(coact.size() * dim, dim);
  for (std::size_t m = 0; m < coact.size(); ++m)
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t j = 0; j < dim; ++j) out(m * dim + r, j) = coact[m](r, j);
  return out;
}

std::string YDModule::render_coaction(kashina::KashinaH const& h, std::size_t j) const {
  std::string out;
  for (std::size_t m = 0; m < coact.size(); ++m)
    for (std::size_t s = 0; s < dim; ++s) {
      Scalar c = coact[m](s, j);
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ") " + h.h.label(m) + " (x) v" + std::to_string(s + 1);
    }
  return out.empty() ? "0" : out;
}

AxiomReport verify_yd(kashina::KashinaH const& h, YDModule const& m) {
  AxiomReport rep;
  rep.mode = "exhaustive";
  Mat const& X = m.gens[0];
  Mat const& Y = m.gens[1];
  Mat const& T = m.gens[2];
  Mat I = Mat::identity(m.dim);

  AxiomCheck rel{"H relations", true, 0, {}};
  std::vector<std::pair<char const*, bool>> rels = {{"x^4 = 1", X.pow(4) == I},
                                                    {"y^2 = 1", Y.pow(2) == I},
                                                    {"t^2 = x^2 y", T * T == X * X * Y},
                                                    {"x y = y x", X * Y == Y * X},
                                                    {"t x = x^3 t", T * X == X.pow(3) * T},
                                                    {"t y = y t", T * Y == Y * T}};
  for (auto const& [name, ok] : rels) {
    ++rel.checked;
    if (!ok && rel.pass) {
      rel.pass = false;
      rel.witness = name;
    }
  }
  rep.checks.push_back(rel);

  std::size_t n = h.h.dim();
  AxiomCheck coas{"coassociativity", true, 0, {}};
  std::vector<Mat> left(n * n, Mat(m.dim, m.dim));
  for (std::size_t i = 0; i < n; ++i)
    for (auto const& t : h.h.coprod(i)) left[t.a * n + t.b] += m.coact[i] * t.c;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      ++coas.checked;
      if (left[p * n + q] != m.coact[q] * m.coact[p] && coas.pass) {
        coas.pass = false;
        coas.witness = h.h.label(p) + " (x) " + h.h.label(q);
      }
    }
  rep.checks.push_back(coas);

  AxiomCheck cu{"counit", true, 0, {}};
  Mat e(m.dim, m.dim);
  for (std::size_t i = 0; i < n; ++i) e += m.coact[i] * h.h.counit()[i];
  cu.checked = 1;
  if (e != I) {
    cu.pass = false;
    cu.witness = "(eps (x) id) delta != id";
  }
  rep.checks.push_back(cu);

  AxiomCheck yd{"YD compatibility", true, 0, {}};
  Mat const& S = *h.h.antipode();
  std::vector<Mat> act(n);
  for (std::size_t b = 0; b < n; ++b) act[b] = m.action(b);
  for (auto const& [gname, gi] : {std::pair{"x", index(1, 0, 0)}, std::pair{"y", index(0, 1, 0)},
                                  std::pair{"t", index(0, 0, 1)}}) {
    std::vector<Mat> rhs(n, Mat(m.dim, m.dim));
    for (auto const& [k, c] : delta2(h.h, h.h.basis(gi))) {
      auto [u1, u2, u3] = k;
      Vec s3 = S.col(u3);
      for (std::size_t i = 0; i < n; ++i) {
        if (m.coact[i].is_zero()) continue;
        Vec e3 = h.h.mul(h.h.mul(h.h.basis(u1), h.h.basis(i)), s3);
        Mat tail = act[u2] * m.coact[i];
        for (std::size_t q = 0; q < n; ++q)
          if (!e3[q].is_zero()) rhs[q] += tail * (c * e3[q]);
      }
    }
    for (std::size_t q = 0; q < n; ++q) {
      ++yd.checked;
      if (m.coact[q] * act[gi] != rhs[q] && yd.pass) {
        yd.pass = false;
        yd.witness = std::string("generator ") + gname + ", component " + h.h.label(q);
      }
    }
  }
  rep.checks.push_back(yd);
  return rep;
}

YDModule yd_from_double_module(kashina::KashinaH const& h, DoubleData const& d, Rep const& r) {
  YDModule m;
  m.name = r.name();
  m.dim = r.dim;
  m.gens = {r.act("x"), r.act("y"), r.act("t")};
  auto rho = basis_action(d, r);
  for (std::size_t p = 0; p < d.n; ++p) m.coact.push_back(rho[p * d.n + 0]);
  AxiomReport rep = verify_yd(h, m);
  if (!rep.pass()) throw CompatibilityFailed(m.name + ": " + rep.summary());
  return m;
}

Mat braiding(YDModule const& v, YDModule const& w) {
  std::size_t dv = v.dim, dw = w.dim;
  Mat c(dw * dv, dv * dw);
  for (std::size_t i = 0; i < v.coact.size(); ++i) {
    if (v.coact[i].is_zero()) continue;
    Mat hw = w.action(i);
    for (std::size_t a = 0; a < dv; ++a)
      for (std::size_t b = 0; b < dw; ++b)
        for (std::size_t r = 0; r < dw; ++r)
          for (std::size_t s = 0; s < dv; ++s) c(r * dv + s, a * dw + b) += hw(r, b) * v.coact[i](s, a);
  }
  return c;
}

bool braid_equation(Mat const& c, std::size_t dim) {
  Mat I = Mat::identity(dim);
  Mat c1 = kron(c, I), c2 = kron(I, c);
  return c1 * c2 * c1 == c2 * c1 * c2;
}

YDModule twist(YDModule const& m, Mat const& psi) {
  auto inv = inverse(psi);
  if (!inv) throw std::invalid_argument("twist: map is not invertible");
  YDModule out;
  out.name = m.name + "^psi";
  out.dim = m.dim;
  out.gens = {m.action(psi.col(index(1, 0, 0))), m.action(psi.col(index(0, 1, 0))),
              m.action(psi.col(index(0, 0, 1)))};
  std::size_t n = m.coact.size();
  out.coact.assign(n, Mat(m.dim, m.dim));
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t i = 0; i < n; ++i)
      if (!(*inv)(q, i).is_zero()) out.coact[q] += m.coact[i] * (*inv)(q, i);
  return out;
}

YDModule direct_sum(std::vector<YDModule> const& parts) {
  YDModule out;
  std::size_t n = parts.empty() ? 16 : parts.front().coact.size();
  for (auto const& p : parts) {
    out.dim += p.dim;
    out.name += (out.name.empty() ? "" : "+") + p.name;
  }
  for (auto& g : out.gens) g = Mat(out.dim, out.dim);
  out.coact.assign(n, Mat(out.dim, out.dim));
  std::size_t off = 0;
  for (auto const& p : parts) {
    for (std::size_t r = 0; r < p.dim; ++r)
      for (std::size_t c = 0; c < p.dim; ++c) {
        for (std::size_t g = 0; g < 3; ++g) out.gens[g](off + r, off + c) = p.gens[g](r, c);
        for (std::size_t m = 0; m < n; ++m) out.coact[m](off + r, off + c) = p.coact[m](r, c);
      }
    off += p.dim;
  }
  return out;
}

YDIso yd_isomorphic(YDModule const& v, YDModule const& w) {
  std::vector<std::pair<Mat, Mat>> pairs;
  for (std::size_t g = 0; g < 3; ++g) pairs.emplace_back(v.gens[g], w.gens[g]);
  for (std::size_t m = 0; m < v.coact.size(); ++m) pairs.emplace_back(v.coact[m], w.coact[m]);
  auto sol = solve_commuting(pairs, w.dim, v.dim);
  YDIso r;
  r.hom_dim = sol.size();
  if (v.dim != w.dim || sol.empty()) return r;
  std::vector<Mat> tries = sol;
  for (long s = 1; s <= 3; ++s) {
    Mat comb(w.dim, v.dim);
    for (std::size_t k = 0; k < sol.size(); ++k) comb += sol[k] * Scalar(static_cast<std::int64_t>(1 + s * long(k) * long(k + 1)));
    tries.push_back(comb);
  }
  for (auto const& p : tries)
    if (inverse(p)) {
      r.isomorphic = true;
      r.witness = p;
      return r;
    }
  return r;
}

std::optional<std::vector<Mat>> closed_form_coaction(kashina::KashinaH const& h, Rep const& r) {
  std::size_t n = h.h.dim();
  std::vector<Mat> comp(n, Mat(r.dim, r.dim));
  // Adds c * v (x) v_{s+1} to delta(v_{j+1}).
  auto put = [&](Vec const& v, std::size_t s, std::size_t j, Scalar c) {
    for (std::size_t m = 0; m < n; ++m)
      if (!v[m].is_zero()) comp[m](s, j) += c * v[m];
  };
  auto g = [&](int p, int q, int t) { return h.h.basis(hidx(p, q, t)); };
  Scalar half = Scalar::half();
  auto const& idx = r.index;
  auto two_by_two = [&](Vec const& d11, Scalar c21, Vec const& d21, Scalar c12, Vec const& d12,
                        Vec const& d22) {
    put(d11, 0, 0, half);
    put(d21, 1, 0, half * c21);
    put(d12, 0, 1, half * c12);
    put(d22, 1, 1, half);
  };
  switch (r.family) {
    case Family::Character: {
      int j = idx[1], k = idx[2], l = idx[3];
      put(g(j + 2 * k + 2 * l, k, 0), 0, 0, Scalar(1));
      return comp;
    }
    case Family::V: {
      int k = idx[2], l = idx[3];
      int k2 = k / 2, k12 = (k + 1) / 2, t = k % 2, e = k + l;
      auto A = [&](int q) { return add(g(e, q, t), g(e + 2, q, t)); };
      auto B = [&](int q) { return sub(g(e, q, t), g(e + 2, q, t)); };
      two_by_two(A(k2), sgn(k2) * xi(k + l), B(k12), sgn(k2) * xi(k - l), B(k12), A(k12));
      return comp;
    }
    case Family::W1:
    case Family::W2:
    case Family::W3:
    case Family::W4: {
      int i = idx[0], k = idx[2];
      int i2 = i / 2, e = i + k;
      auto A = [&](int q) { return add(g(e, q, 1), g(e + 2, q, 1)); };
      auto B = [&](int q) { return sub(g(e, q, 1), g(e + 2, q, 1)); };
      Scalar xe = xi(e), mxe = sgn(e) * xi(e);
      if (r.family == Family::W1)
        two_by_two(A(i2), sgn(i2) * xe, B(i2 + 1), sgn(i2) * mxe, B(i2), A(i2 + 1));
      else if (r.family == Family::W2)
        two_by_two(A(i2 + 1), sgn(i2 + 1) * xe, B(i2), sgn((i + k) / 2) * xe, B(i2 + 1), A(i2));
      else if (r.family == Family::W3)
        two_by_two(A(0), xe, B(1), mxe, B(0), A(1));
      else
        two_by_two(A(1), -xe, B(0), sgn(k) * xe, B(1), A(0));
      return comp;
    }
    case Family::U: {
      int j = idx[1], k = idx[2], l = idx[3];
      put(g(l + (j % 2 ? -2 * k : 2 * k), k, 0), 0, 0, Scalar(1));
      put(g(2 * std::abs(j - k) - l + 4, k + 1, 0), 1, 1, Scalar(1));
      return comp;
    }
  }
  return std::nullopt;
}

ClosedFormComparison compare_closed_form(kashina::KashinaH const& h, YDModule const& m, Rep const& r) {
  ClosedFormComparison c;
  c.module = m.name;
  auto stated = closed_form_coaction(h, r);
  if (!stated) return c;
  YDModule s = m;
  s.coact = *stated;
  c.match = s.coact == m.coact;
  if (!c.match)
    for (std::size_t j = 0; j < m.dim; ++j) {
      c.computed += (j ? "; " : "") + std::string("delta(v") + std::to_string(j + 1) + ") = " + m.render_coaction(h, j);
      c.stated += (j ? "; " : "") + std::string("delta(v") + std::to_string(j + 1) + ") = " + s.render_coaction(h, j);
    }
  return c;
}

std::vector<CatalogEntry> catalog(kashina::KashinaH const& h, DoubleData const& d) {
  std::vector<CatalogEntry> out;
  for (int k = 1; k <= 8; ++k) {
    std::string nm = "V" + std::to_string(k);
    Rep r = named_module(nm);
    YDModule y = yd_from_double_module(h, d, r);
    y.name = nm;
    out.push_back({nm, r, y});
  }
  for (int k = 1; k <= 12; ++k) {
    std::string nm = "M" + std::to_string(k);
    Rep r = named_module(nm);
    YDModule y = yd_from_double_module(h, d, r);
    y.name = nm;
    out.push_back({nm, r, y});
  }
  return out;
}

YDModule const& find(std::vector<CatalogEntry> const& cat, std::string const& name) {
  for (auto const& e : cat)
    if (e.name == name) return e.yd;
  throw std::out_of_range("no catalog module " + name);
}

std::vector<TwistClaim> twist_claims(kashina::KashinaH const& h, std::vector<CatalogEntry> const& cat) {
  struct Claim {
    int group;
    char const* src;
    int tau;
    char const* dst;
  };
  static const Claim claims[] = {
      {1, "V1", 17, "V2"}, {1, "V3", 17, "V4"},  {2, "V1", 49, "V5"},  {2, "V2", 49, "V6"},
      {2, "V3", 49, "V7"}, {2, "V4", 49, "V8"},  {3, "V2", 33, "V5"},  {3, "V4", 33, "V4"},
      {4, "M1", 49, "M8"}, {4, "M2", 49, "M4"},  {4, "M3", 55, "M5"},  {5, "M6", 49, "M7"},
      {5, "M9", 12, "M11"}, {5, "M10", 12, "M12"}};
  auto autos = kashina::table_automorphisms(h);
  std::vector<TwistClaim> out;
  for (auto const& c : claims) {
    TwistClaim t;
    t.group = c.group;
    t.source = c.src;
    t.target = c.dst;
    t.tau = c.tau;
    YDModule const& src = find(cat, c.src);
    YDModule tw = twist(src, autos[static_cast<std::size_t>(c.tau - 1)].matrix);
    t.result = yd_isomorphic(tw, find(cat, c.dst));
    t.braiding_preserved = braiding(tw, tw) == braiding(src, src) && verify_yd(h, tw).pass();
    for (auto const& e : cat)
      if (e.yd.dim == tw.dim && yd_isomorphic(tw, e.yd).isomorphic) {
        t.actual = e.name;
        break;
      }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace hopf
