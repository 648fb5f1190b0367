#include "hopf/drinfeld.hpp"

#include <tuple>

#include "hopf/presentation.hpp"

namespace hopf {

Vec DoubleData::embed(Vec const& h) const { return pure(k.counit(), h); }

Vec DoubleData::embed_dual(Vec const& phi) const { return pure(phi, k.unit()); }

Vec DoubleData::pure(Vec const& phi, Vec const& h) const { return kron(phi, h); }

Tensor3 delta2(HopfData const& h, Vec const& v) {
  Tensor3 out;
  for (auto const& outer : h.delta(v))
    for (auto const& inner : h.coprod(outer.a)) {
      auto& slot = out[{inner.a, inner.b, outer.b}];
      slot += outer.c * inner.c;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

DoubleData drinfeld_double(HopfData const& k) {
  if (!k.antipode()) throw NoAntipode("double: input has no antipode");
  auto sinv_opt = inverse(*k.antipode());
  if (!sinv_opt) throw NoAntipode("double: antipode not invertible");
  Mat const& sinv = *sinv_opt;
  const std::size_t n = k.dim(), N = n * n;
  auto u32 = [](std::size_t v) { return static_cast<std::uint32_t>(v); };

  std::vector<SVec> sinv_col(n);
  for (std::size_t a = 0; a < n; ++a) sinv_col[a] = to_sparse(sinv.col(a));

  // X[a][q]: a2 -> functional m -> coefficient of e_q in S^-1(a3) e_m a1,
  // summed over the terms of Delta^2(e_a).
  std::vector<std::vector<std::map<std::uint32_t, Vec>>> X(n, std::vector<std::map<std::uint32_t, Vec>>(n));
  for (std::size_t a = 0; a < n; ++a) {
    Tensor3 d2 = delta2(k, k.basis(a));
    for (auto const& [idx, c] : d2) {
      auto [a1, a2, a3] = idx;
      for (std::size_t m = 0; m < n; ++m) {
        SVec r = k.mul(k.mul(sinv_col[a3], SVec{{u32(m), Scalar(1)}}), SVec{{a1, Scalar(1)}});
        for (auto const& [q, coef] : r) {
          auto& psi = X[a][q][a2];
          if (psi.empty()) psi.assign(n, Scalar());
          psi[m] += c * coef;
        }
      }
    }
  }

  // Convolution e^p * psi evaluated on e_m needs the terms of Delta(e_m)
  // whose left leg is e_p.
  struct MV {
    std::uint32_t m, v;
    Scalar c;
  };
  std::vector<std::vector<MV>> by_left(n);
  for (std::size_t m = 0; m < n; ++m)
    for (auto const& t : k.coprod(m)) by_left[t.a].push_back({u32(m), t.b, t.c});

  HopfData d(N);
  Accumulator acc(N);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t q = 0; q < n; ++q) {
      // phi[p] = list of (a2, e^p * psi)
      std::vector<std::vector<std::pair<std::uint32_t, SVec>>> phi(n);
      for (std::size_t p = 0; p < n; ++p)
        for (auto const& [a2, psi] : X[a][q]) {
          Vec f(n);
          for (auto const& t : by_left[p]) f[t.m] += t.c * psi[t.v];
          SVec fs = to_sparse(f);
          if (!fs.empty()) phi[p].emplace_back(a2, std::move(fs));
        }
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t b = 0; b < n; ++b) {
          for (auto const& [a2, f] : phi[p])
            for (auto const& [r, cr] : f)
              for (auto const& [s, cs] : k.prod(a2, b)) acc.add(u32(r * n + s), cr * cs);
          d.set_prod(p * n + a, q * n + b, acc.take());
        }
    }

  // Delta(e^p) in K*^cop: sum m^p_{uv} e^v (x) e^u.
  std::vector<std::vector<Term2>> dual_cop(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (auto const& [p, c] : k.prod(u, v)) dual_cop[p].push_back({u32(v), u32(u), c});
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t a = 0; a < n; ++a) {
      Tensor2 t;
      for (auto const& dp : dual_cop[p])
        for (auto const& da : k.coprod(a))
          t.push_back({u32(dp.a * n + da.a), u32(dp.b * n + da.b), dp.c * da.c});
      d.set_coprod(p * n + a, std::move(t));
    }

  Vec unit(N), counit(N);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t a = 0; a < n; ++a) {
      unit[p * n + a] = k.counit()[p] * k.unit()[a];
      counit[p * n + a] = k.unit()[p] * k.counit()[a];
    }
  d.set_unit(unit);
  d.set_counit(counit);
  std::vector<std::string> labels(N);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t a = 0; a < n; ++a) labels[p * n + a] = "(" + k.label(p) + ")*|" + k.label(a);
  d.set_labels(std::move(labels));

  // S(p (x) a) = (eps (x) S a)(p o S^-1 (x) 1).
  Mat const& s = *k.antipode();
  Mat sd(N, N);
  for (std::size_t p = 0; p < n; ++p) {
    Vec left = kron(sinv.row(p), k.unit());
    for (std::size_t a = 0; a < n; ++a) sd.set_col(p * n + a, d.mul(kron(k.counit(), s.col(a)), left));
  }
  d.set_antipode(sd);

  DoubleData out;
  out.d = std::move(d);
  out.k = k;
  out.n = n;
  return out;
}

namespace {

Alphabet double_alphabet() {
  Alphabet a;
  a.names = {"a", "b", "c", "x", "y", "t"};
  a.weight.assign(6, 1);
  return a;
}

}  // namespace

DoubleData kashina_double(kashina::KashinaH const& h) {
  DoubleData d = drinfeld_double(cop(h.h));
  auto dg = kashina::dual_generators(h);
  d.gens["x"] = d.embed(h.x);
  d.gens["y"] = d.embed(h.y);
  d.gens["t"] = d.embed(h.t);
  d.gens["a"] = d.embed_dual(dg.a);
  d.gens["b"] = d.embed_dual(dg.b);
  d.gens["c"] = d.embed_dual(dg.c);
  GeneratorData g;
  g.names = {"a", "b", "c", "x", "y", "t"};
  for (auto const& nm : g.names) g.vectors.push_back(d.gens[nm]);
  const int lim[6] = {4, 2, 2, 4, 2, 2};
  for (int i = 0; i < lim[0]; ++i)
    for (int j = 0; j < lim[1]; ++j)
      for (int c = 0; c < lim[2]; ++c)
        for (int l = 0; l < lim[3]; ++l)
          for (int m = 0; m < lim[4]; ++m)
            for (int t = 0; t < lim[5]; ++t) {
              std::vector<int> w;
              w.insert(w.end(), i, 0);
              w.insert(w.end(), j, 1);
              w.insert(w.end(), c, 2);
              w.insert(w.end(), l, 3);
              w.insert(w.end(), m, 4);
              w.insert(w.end(), t, 5);
              g.words.push_back(std::move(w));
            }
  d.d.set_generators(std::move(g));

  Mat words(16, 16);
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 2; ++j)
      for (unsigned c = 0; c < 2; ++c) {
        Vec w = d.d.mul(d.d.mul(d.d.power(d.gens["a"], i), d.d.power(d.gens["b"], j)),
                        d.d.power(d.gens["c"], c));
        Vec phi(16);
        for (std::size_t p = 0; p < 16; ++p) phi[p] = w[p * 16];
        if (!is_zero(sub(w, d.embed_dual(phi)))) throw std::logic_error("dual word left the dual factor");
        words.set_col(kashina::index(i, j, c), phi);
      }
  auto inv = inverse(words);
  if (!inv) throw std::logic_error("dual words do not span");
  d.dual_in_words = *inv;
  return d;
}

Vec double_element(DoubleData const& d, std::string const& expr) {
  Alphabet a = double_alphabet();
  std::vector<Vec> images;
  for (auto const& nm : a.names) images.push_back(d.gens.at(nm));
  return evaluate(d.d, images, parse_polynomial(expr, a));
}

std::vector<std::string> const& double_relations() {
  static const std::vector<std::string> rels = {
      // H^cop
      "x^4 = 1", "y^2 = 1", "t^2 = x^2 y", "x y = y x", "t x = x^3 t", "t y = y t",
      // H*^bop
      "a^4 = 1", "b^2 = 1", "c^2 = b", "a b = b a", "a c = c a^3", "c b = b c",
      // cross relations
      "x a = a x", "x b = b x", "x c = a^2 c x",
      "y a = a y", "y b = b y", "y c = c y",
      "t a = a x^2 t", "t b = b t", "t c = a^2 b c x^2 y t"};
  return rels;
}

std::vector<RelationCheck> verify_double_presentation(DoubleData const& d) {
  std::vector<RelationCheck> out;
  for (auto const& rel : double_relations()) {
    auto eq = rel.find('=');
    Vec diff = sub(double_element(d, rel.substr(0, eq)), double_element(d, rel.substr(eq + 1)));
    RelationCheck c;
    c.relation = rel;
    c.pass = is_zero(diff);
    if (!c.pass) c.residual = d.d.render(diff);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace hopf
