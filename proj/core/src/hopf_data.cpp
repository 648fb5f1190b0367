#include "hopf/hopf_data.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace hopf {

SVec to_sparse(Vec const& v) {
  SVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return s;
}

Vec to_dense(SVec const& v, std::size_t n) {
  Vec d(n);
  for (auto const& [i, c] : v) d[i] += c;
  return d;
}

void canonicalize(Tensor2& t) {
  std::sort(t.begin(), t.end(), [](Term2 const& x, Term2 const& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  std::size_t out = 0;
  for (std::size_t k = 0; k < t.size();) {
    Term2 cur = t[k++];
    while (k < t.size() && t[k].a == cur.a && t[k].b == cur.b) cur.c += t[k++].c;
    if (!cur.c.is_zero()) t[out++] = cur;
  }
  t.resize(out);
}

namespace {

bool same(Tensor2 const& x, Tensor2 const& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k].a != y[k].a || x[k].b != y[k].b || x[k].c != y[k].c) return false;
  return true;
}

}  // namespace

void Accumulator::add(std::uint32_t i, Scalar const& c) {
  if (c.is_zero()) return;
  if (!mark_[i]) {
    mark_[i] = 1;
    touched_.push_back(i);
    v_[i] = c;
  } else {
    v_[i] += c;
  }
}

SVec Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  SVec out;
  out.reserve(touched_.size());
  for (auto i : touched_) {
    if (!v_[i].is_zero()) out.emplace_back(i, v_[i]);
    v_[i] = Scalar();
    mark_[i] = 0;
  }
  touched_.clear();
  return out;
}

HopfData::HopfData(std::size_t dim)
    : dim_(dim), mult_(dim * dim), comult_(dim), unit_(dim), counit_(dim) {}

void HopfData::set_coprod(std::size_t i, Tensor2 t) {
  canonicalize(t);
  comult_[i] = std::move(t);
}

std::string HopfData::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return "e" + std::to_string(i);
}

SVec HopfData::mul(SVec const& a, SVec const& b) const {
  Accumulator acc(dim_);
  for (auto const& [i, x] : a)
    for (auto const& [j, y] : b) {
      Scalar xy = x * y;
      for (auto const& [k, c] : prod(i, j)) acc.add(k, xy * c);
    }
  return acc.take();
}

Vec HopfData::mul(Vec const& a, Vec const& b) const {
  return to_dense(mul(to_sparse(a), to_sparse(b)), dim_);
}

Vec HopfData::power(Vec const& a, unsigned k) const {
  Vec r = unit_;
  for (unsigned n = 0; n < k; ++n) r = mul(r, a);
  return r;
}

Scalar HopfData::eps(Vec const& a) const {
  Scalar s;
  for (std::size_t i = 0; i < dim_; ++i)
    if (!a[i].is_zero()) s += a[i] * counit_[i];
  return s;
}

Tensor2 HopfData::delta(SVec const& a) const {
  Tensor2 t;
  for (auto const& [i, x] : a)
    for (auto const& term : comult_[i]) t.push_back({term.a, term.b, x * term.c});
  canonicalize(t);
  return t;
}

Tensor2 HopfData::delta(Vec const& a) const { return delta(to_sparse(a)); }

Vec HopfData::apply_antipode(Vec const& a) const {
  if (!antipode_) throw std::logic_error("antipode not set");
  return (*antipode_) * a;
}

Tensor2 HopfData::tensor_mul(Tensor2 const& x, Tensor2 const& y) const {
  Tensor2 out;
  for (auto const& s : x)
    for (auto const& t : y) {
      auto const& l = prod(s.a, t.a);
      if (l.empty()) continue;
      auto const& r = prod(s.b, t.b);
      Scalar st = s.c * t.c;
      for (auto const& [p, cp] : l)
        for (auto const& [q, cq] : r) out.push_back({p, q, st * cp * cq});
    }
  canonicalize(out);
  return out;
}

std::string HopfData::render(Vec const& v) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (v[i].is_one())
      os << label(i);
    else
      os << "(" << v[i] << ")" << label(i);
  }
  if (first) os << "0";
  return os.str();
}

std::string HopfData::render(Tensor2 const& t) const {
  std::ostringstream os;
  bool first = true;
  for (auto const& term : t) {
    if (!first) os << " + ";
    first = false;
    os << "(" << term.c << ")" << label(term.a) << "(x)" << label(term.b);
  }
  if (first) os << "0";
  return os.str();
}

bool operator==(HopfData const& a, HopfData const& b) {
  if (a.dim_ != b.dim_ || a.unit_ != b.unit_ || a.counit_ != b.counit_) return false;
  if (a.mult_ != b.mult_) return false;
  for (std::size_t i = 0; i < a.dim_; ++i)
    if (!same(a.comult_[i], b.comult_[i])) return false;
  return a.antipode_ == b.antipode_;
}

bool AxiomReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](auto const& c) { return c.pass; });
}

AxiomCheck const* AxiomReport::find(std::string const& name) const {
  for (auto const& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  os << "mode=" << mode;
  for (auto const& c : checks) {
    os << " " << c.name << "=" << (c.pass ? "ok" : "FAIL");
    if (!c.pass) os << "[" << c.witness << "]";
  }
  return os.str();
}

namespace {

bool words_span(HopfData const& h, GeneratorData const& g, Mat* products = nullptr);

Vec word_product(HopfData const& h, GeneratorData const& g, std::vector<int> const& w) {
  SVec v = to_sparse(h.unit());
  for (int letter : w) v = h.mul(v, to_sparse(g.vectors[static_cast<std::size_t>(letter)]));
  return to_dense(v, h.dim());
}

bool words_span(HopfData const& h, GeneratorData const& g, Mat* products) {
  std::size_t n = h.dim();
  if (g.words.size() != n) return false;
  Mat p(n, n);
  for (std::size_t l = 0; l < n; ++l) p.set_col(l, word_product(h, g, g.words[l]));
  bool ok;
  if (p.is_identity())
    ok = true;
  else
    ok = rank(p) == n;
  if (products) *products = std::move(p);
  return ok;
}

void fail(AxiomCheck& c, std::string const& w) {
  if (c.pass) {
    c.pass = false;
    c.witness = w;
  }
}

bool sparse_equal_basis(SVec const& v, std::size_t i) {
  return v.size() == 1 && v[0].first == i && v[0].second.is_one();
}

}  // namespace

std::size_t generated_dimension(HopfData const& h, std::vector<Vec> const& gens) {
  std::size_t n = h.dim();
  // Echelon rows keyed by pivot column.
  std::map<std::size_t, Vec> rows;
  auto reduce = [&](Vec v) {
    for (auto const& [p, r] : rows) {
      if (v[p].is_zero()) continue;
      Scalar f = v[p];
      for (std::size_t k = p; k < n; ++k)
        if (!r[k].is_zero()) v[k] -= f * r[k];
    }
    return v;
  };
  auto insert = [&](Vec v) -> bool {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < n && v[p].is_zero()) ++p;
    if (p == n) return false;
    Scalar inv = v[p].inv();
    for (auto& x : v) x *= inv;
    for (auto& [q, r] : rows)
      if (!r[p].is_zero()) {
        Scalar f = r[p];
        for (std::size_t k = p; k < n; ++k) r[k] -= f * v[k];
      }
    rows.emplace(p, std::move(v));
    return true;
  };
  std::vector<Vec> queue{h.unit()};
  insert(h.unit());
  for (std::size_t q = 0; q < queue.size() && rows.size() < n; ++q)
    for (auto const& g : gens) {
      Vec w = h.mul(g, queue[q]);
      if (insert(w)) queue.push_back(w);
    }
  return rows.size();
}

AxiomReport verify_hopf(HopfData const& h, VerifyOptions const& opt) {
  std::size_t n = h.dim();
  AxiomReport rep;
  bool reduced = !opt.force_exhaustive && n > opt.exhaustive_limit && h.generators() &&
                 !h.generators()->words.empty();
  rep.mode = reduced ? "generator-reduced" : "exhaustive";
  std::vector<SVec> gens;
  std::vector<std::string> gnames;
  if (reduced) {
    for (auto const& g : h.generators()->vectors) gens.push_back(to_sparse(g));
    gnames = h.generators()->names;
  }

  AxiomCheck alg;
  alg.name = "associativity";
  SVec one = to_sparse(h.unit());
  for (std::size_t i = 0; i < n; ++i) {
    SVec e{{static_cast<std::uint32_t>(i), Scalar(1)}};
    ++alg.checked;
    if (!sparse_equal_basis(h.mul(one, e), i) || !sparse_equal_basis(h.mul(e, one), i))
      fail(alg, "unit on " + h.label(i));
  }
  Accumulator acc(n);
  auto assoc_fail = [&](std::string const& a, std::size_t j, std::size_t k) {
    fail(alg, "(" + a + "," + h.label(j) + "," + h.label(k) + ")");
  };
  if (!reduced) {
    for (std::size_t i = 0; i < n && alg.pass; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          ++alg.checked;
          for (auto const& [m, c] : h.prod(i, j))
            for (auto const& [q, d] : h.prod(m, k)) acc.add(q, c * d);
          for (auto const& [m, c] : h.prod(j, k))
            for (auto const& [q, d] : h.prod(i, m)) acc.add(q, -(c * d));
          if (!acc.take().empty()) assoc_fail(h.label(i), j, k);
        }
  } else {
    if (!words_span(h, *h.generators())) fail(alg, "generator words do not span");
    for (std::size_t g = 0; g < gens.size() && alg.pass; ++g) {
      std::vector<SVec> gu(n);
      for (std::size_t u = 0; u < n; ++u)
        gu[u] = h.mul(gens[g], SVec{{static_cast<std::uint32_t>(u), Scalar(1)}});
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
          ++alg.checked;
          for (auto const& [m, c] : gu[u])
            for (auto const& [q, d] : h.prod(m, v)) acc.add(q, c * d);
          for (auto const& [m, c] : h.prod(u, v))
            for (auto const& [q, d] : gu[m]) acc.add(q, -(c * d));
          if (!acc.take().empty()) assoc_fail(gnames[g], u, v);
        }
    }
  }
  rep.checks.push_back(alg);

  AxiomCheck coas;
  coas.name = "coassociativity";
  for (std::size_t i = 0; i < n; ++i) {
    ++coas.checked;
    std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, Scalar> diff;
    for (auto const& t : h.coprod(i)) {
      for (auto const& s : h.coprod(t.a)) diff[{s.a, s.b, t.b}] += t.c * s.c;
      for (auto const& s : h.coprod(t.b)) diff[{t.a, s.a, s.b}] -= t.c * s.c;
    }
    for (auto const& [k, v] : diff)
      if (!v.is_zero()) {
        fail(coas, h.label(i));
        break;
      }
  }
  rep.checks.push_back(coas);

  AxiomCheck cou;
  cou.name = "counit";
  for (std::size_t i = 0; i < n; ++i) {
    ++cou.checked;
    Accumulator l(n), r(n);
    for (auto const& t : h.coprod(i)) {
      l.add(t.b, t.c * h.counit()[t.a]);
      r.add(t.a, t.c * h.counit()[t.b]);
    }
    if (!sparse_equal_basis(l.take(), i) || !sparse_equal_basis(r.take(), i))
      fail(cou, h.label(i));
  }
  rep.checks.push_back(cou);

  AxiomCheck bi;
  bi.name = "bialgebra";
  {
    ++bi.checked;
    Tensor2 d1 = h.delta(h.unit());
    Tensor2 oo;
    for (auto const& [i, x] : one)
      for (auto const& [j, y] : one) oo.push_back({i, j, x * y});
    canonicalize(oo);
    if (!same(d1, oo) || !h.eps(h.unit()).is_one()) fail(bi, "unit");
  }
  auto check_pair = [&](SVec const& a, Tensor2 const& da, std::size_t u, std::string const& an) {
    ++bi.checked;
    SVec au = h.mul(a, SVec{{static_cast<std::uint32_t>(u), Scalar(1)}});
    Tensor2 lhs = h.delta(au);
    Tensor2 rhs = h.tensor_mul(da, h.coprod(u));
    if (!same(lhs, rhs)) {
      fail(bi, "Delta(" + an + "*" + h.label(u) + ")");
      return;
    }
    Scalar ea;
    for (auto const& [k, c] : a) ea += c * h.counit()[k];
    Scalar eau;
    for (auto const& [k, c] : au) eau += c * h.counit()[k];
    if (eau != ea * h.counit()[u]) fail(bi, "eps(" + an + "*" + h.label(u) + ")");
  };
  if (!reduced) {
    for (std::size_t i = 0; i < n && bi.pass; ++i) {
      SVec e{{static_cast<std::uint32_t>(i), Scalar(1)}};
      for (std::size_t u = 0; u < n && bi.pass; ++u) check_pair(e, h.coprod(i), u, h.label(i));
    }
  } else {
    for (std::size_t g = 0; g < gens.size() && bi.pass; ++g) {
      Tensor2 dg = h.delta(gens[g]);
      for (std::size_t u = 0; u < n && bi.pass; ++u) check_pair(gens[g], dg, u, gnames[g]);
    }
  }
  rep.checks.push_back(bi);

  AxiomCheck ant;
  ant.name = "antipode";
  if (!h.antipode()) {
    ant.pass = false;
    ant.witness = "antipode not set";
  } else {
    std::string w;
    ant.checked = n;
    if (!antipode_ok(h, *h.antipode(), &w)) fail(ant, w);
  }
  rep.checks.push_back(ant);
  return rep;
}

bool antipode_ok(HopfData const& h, Mat const& s, std::string* witness) {
  std::size_t n = h.dim();
  std::vector<SVec> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = to_sparse(s.col(i));
  SVec one = to_sparse(h.unit());
  Accumulator l(n), r(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (auto const& t : h.coprod(k)) {
      for (auto const& [m, c] : cols[t.a])
        for (auto const& [q, d] : h.prod(m, t.b)) l.add(q, t.c * c * d);
      for (auto const& [m, c] : cols[t.b])
        for (auto const& [q, d] : h.prod(t.a, m)) r.add(q, t.c * c * d);
    }
    for (auto const& [q, c] : one) {
      l.add(q, -(c * h.counit()[k]));
      r.add(q, -(c * h.counit()[k]));
    }
    bool bad = !l.take().empty();
    bad = !r.take().empty() || bad;
    if (bad) {
      if (witness) *witness = h.label(k);
      return false;
    }
  }
  return true;
}

Mat solve_antipode_full(HopfData const& h) {
  std::size_t n = h.dim();
  // Union columns i that appear together in one equation.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t k = 0; k < n; ++k) {
    auto const& d = h.coprod(k);
    for (std::size_t q = 1; q < d.size(); ++q) {
      parent[find(d[q].a)] = find(d[0].a);
      parent[find(d[q].b)] = find(d[0].b);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < n; ++i) comps[find(i)].push_back(i);

  Mat s(n, n);
  std::vector<bool> used(n, false);
  for (auto const& [root, cols] : comps) {
    std::map<std::size_t, std::size_t> local;
    for (std::size_t q = 0; q < cols.size(); ++q) local[cols[q]] = q;
    std::size_t unknowns = cols.size() * n;
    std::vector<Vec> rows;
    Vec rhs;
    for (std::size_t k = 0; k < n; ++k) {
      auto const& d = h.coprod(k);
      if (d.empty()) continue;
      bool left = local.count(d[0].a), right = local.count(d[0].b);
      if (!left && !right) continue;
      // left: sum c S(e_a) e_b ; right: sum c e_a S(e_b)
      for (int side = 0; side < 2; ++side) {
        if ((side == 0 && !left) || (side == 1 && !right)) continue;
        std::vector<Vec> eq(n, Vec(unknowns));
        for (auto const& t : d) {
          std::size_t col = side == 0 ? t.a : t.b;
          std::size_t base = local.at(col) * n;
          for (std::size_t m = 0; m < n; ++m) {
            auto const& p = side == 0 ? h.prod(m, t.b) : h.prod(t.a, m);
            for (auto const& [o, c] : p) eq[o][base + m] += t.c * c;
          }
        }
        for (std::size_t o = 0; o < n; ++o) {
          rows.push_back(std::move(eq[o]));
          rhs.push_back(h.counit()[k] * h.unit()[o]);
        }
      }
    }
    Mat a(rows.size(), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < unknowns; ++c) a(r, c) = rows[r][c];
    auto sol = solve_linear(a, rhs);
    if (!sol) throw NoAntipode("convolution system inconsistent");
    for (std::size_t q = 0; q < cols.size(); ++q) {
      for (std::size_t m = 0; m < n; ++m) s(m, cols[q]) = (*sol)[q * n + m];
      used[cols[q]] = true;
    }
  }
  std::string w;
  if (!antipode_ok(h, s, &w)) throw NoAntipode("solution fails at " + w);
  return s;
}

Mat solve_antipode_generators(HopfData const& h) {
  if (!h.generators()) throw NoAntipode("no generator data");
  auto const& g = *h.generators();
  std::size_t n = h.dim(), ng = g.vectors.size();
  Mat p;
  if (!words_span(h, g, &p)) throw NoAntipode("generator words do not span");
  bool ident = p.is_identity();
  Mat q = ident ? p : *inverse(p);

  // Generator coproducts rewritten in the word basis: (coef, l, l').
  struct WT {
    Scalar c;
    std::size_t l, r;
  };
  std::vector<std::vector<WT>> dw(ng);
  for (std::size_t k = 0; k < ng; ++k) {
    std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;
    for (auto const& t : h.delta(g.vectors[k]))
      for (std::size_t l = 0; l < n; ++l) {
        if (q(l, t.a).is_zero()) continue;
        for (std::size_t r = 0; r < n; ++r)
          if (!q(r, t.b).is_zero()) acc[{l, r}] += t.c * q(l, t.a) * q(r, t.b);
      }
    for (auto const& [lr, c] : acc)
      if (!c.is_zero()) dw[k].push_back({c, lr.first, lr.second});
  }

  std::vector<std::optional<Vec>> sg(ng);
  auto count = [](std::vector<int> const& w, int letter) {
    return std::count(w.begin(), w.end(), letter);
  };
  auto known = [&](std::vector<int> const& w, int self) {
    for (int x : w)
      if (x != self && !sg[static_cast<std::size_t>(x)]) return false;
    return count(w, self) <= 1;
  };
  // S(w) = S(w_m)...S(w_1); split around the single occurrence of `self`.
  auto s_word = [&](std::vector<int> const& w, std::size_t from, std::size_t to) {
    Vec v = h.unit();
    for (std::size_t k = to; k-- > from;) v = h.mul(v, *sg[static_cast<std::size_t>(w[k])]);
    return v;
  };

  for (std::size_t round = 0; round < ng; ++round) {
    bool progressed = false;
    for (std::size_t k = 0; k < ng; ++k) {
      if (sg[k]) continue;
      int self = static_cast<int>(k);
      // Side 0 needs S on left factors only, side 1 on right factors only.
      bool use[2] = {true, true};
      for (auto const& t : dw[k]) {
        use[0] = use[0] && known(g.words[t.l], self);
        use[1] = use[1] && known(g.words[t.r], self);
      }
      if (!use[0] && !use[1]) continue;
      // rows 0..n-1: left identity, n..2n-1: right identity
      Mat a(2 * n, n);
      Vec rhs(2 * n);
      for (std::size_t o = 0; o < n; ++o) {
        rhs[o] = h.eps(g.vectors[k]) * h.unit()[o];
        rhs[n + o] = rhs[o];
      }
      for (int side = 0; side < 2; ++side) {
        if (!use[side]) {
          for (std::size_t o = 0; o < n; ++o) rhs[static_cast<std::size_t>(side) * n + o] = Scalar(0);
          continue;
        }
        for (auto const& t : dw[k]) {
          auto const& w = g.words[side == 0 ? t.l : t.r];
          Vec other = p.col(side == 0 ? t.r : t.l);
          auto pos = std::find(w.begin(), w.end(), self);
          std::size_t off = static_cast<std::size_t>(side) * n;
          if (pos == w.end()) {
            Vec sw = s_word(w, 0, w.size());
            Vec val = side == 0 ? h.mul(sw, other) : h.mul(other, sw);
            for (std::size_t o = 0; o < n; ++o) rhs[off + o] -= t.c * val[o];
            continue;
          }
          std::size_t at = static_cast<std::size_t>(pos - w.begin());
          // S(w) = L * S(self) * R with L = S(w_m..w_{at+1}), R = S(w_{at-1}..w_1)
          Vec left = s_word(w, at + 1, w.size());
          Vec right = s_word(w, 0, at);
          for (std::size_t m = 0; m < n; ++m) {
            Vec e = unit_vector(n, m);
            Vec val = h.mul(h.mul(left, e), right);
            val = side == 0 ? h.mul(val, other) : h.mul(other, val);
            for (std::size_t o = 0; o < n; ++o)
              if (!val[o].is_zero()) a(off + o, m) += t.c * val[o];
          }
        }
      }
      auto sol = solve_linear(a, rhs);
      if (!sol) throw NoAntipode("no antipode value for generator " + g.names[k]);
      sg[k] = *sol;
      progressed = true;
    }
    if (!progressed) break;
  }
  for (std::size_t k = 0; k < ng; ++k)
    if (!sg[k]) throw NoAntipode("generator system not linear at " + g.names[k]);

  std::map<std::vector<int>, Vec> memo;
  auto s_of = [&](std::vector<int> const& w) {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    Vec v = s_word(w, 0, w.size());
    memo.emplace(w, v);
    return v;
  };
  Mat s(n, n);
  for (std::size_t l = 0; l < n; ++l) {
    Vec sw = s_of(g.words[l]);
    for (std::size_t k = 0; k < n; ++k) {
      if (q(l, k).is_zero()) continue;
      for (std::size_t m = 0; m < n; ++m)
        if (!sw[m].is_zero()) s(m, k) += q(l, k) * sw[m];
    }
  }
  std::string w;
  if (!antipode_ok(h, s, &w)) throw NoAntipode("generator solution fails at " + w);
  return s;
}

Mat solve_antipode(HopfData const& h) {
  if (h.dim() <= 16 || !h.generators() || h.generators()->words.empty())
    return solve_antipode_full(h);
  return solve_antipode_generators(h);
}

HopfData dual(HopfData const& h) {
  if (!h.antipode()) throw std::invalid_argument("dual: antipode required");
  std::size_t n = h.dim();
  HopfData d(n);
  for (std::size_t k = 0; k < n; ++k)
    for (auto const& t : h.coprod(k)) {
      SVec cur = d.prod(t.a, t.b);
      cur.emplace_back(static_cast<std::uint32_t>(k), t.c);
      d.set_prod(t.a, t.b, std::move(cur));
    }
  std::vector<Tensor2> co(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (auto const& [k, c] : h.prod(i, j))
        co[k].push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), c});
  for (std::size_t k = 0; k < n; ++k) d.set_coprod(k, std::move(co[k]));
  d.set_unit(h.counit());
  d.set_counit(h.unit());
  d.set_antipode(h.antipode()->transpose());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(h.label(i) + "*");
  d.set_labels(labels);
  return d;
}

HopfData op(HopfData const& h) {
  std::size_t n = h.dim();
  HopfData o = h;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) o.set_prod(i, j, h.prod(j, i));
  o.set_generators(std::nullopt);
  if (h.antipode()) {
    auto inv = inverse(*h.antipode());
    if (!inv) throw std::runtime_error("op: antipode not invertible");
    o.set_antipode(*inv);
  }
  return o;
}

HopfData cop(HopfData const& h) {
  std::size_t n = h.dim();
  HopfData o = h;
  for (std::size_t i = 0; i < n; ++i) {
    Tensor2 t = h.coprod(i);
    for (auto& term : t) std::swap(term.a, term.b);
    o.set_coprod(i, std::move(t));
  }
  if (h.antipode()) {
    auto inv = inverse(*h.antipode());
    if (!inv) throw std::runtime_error("cop: antipode not invertible");
    o.set_antipode(*inv);
  }
  return o;
}

bool is_grouplike(HopfData const& h, Vec const& v) {
  if (!h.eps(v).is_one()) return false;
  Tensor2 d = h.delta(v);
  Tensor2 vv;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[i].is_zero() && !v[j].is_zero())
        vv.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), v[i] * v[j]});
  canonicalize(vv);
  return same(d, vv);
}

std::size_t pairwise_primitive_space(HopfData const& h, Vec const& g1, Vec const& g2) {
  std::size_t n = h.dim();
  // Rows indexed by the tensor basis, only the rows that can be nonzero.
  std::map<std::size_t, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(n);
  for (std::size_t i = 0; i < n; ++i) {
    Tensor2 t = h.coprod(i);
    for (std::size_t k = 0; k < n; ++k) {
      if (!g1[k].is_zero()) t.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k), -g1[k]});
      if (!g2[k].is_zero()) t.push_back({static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(i), -g2[k]});
    }
    canonicalize(t);
    for (auto const& term : t) {
      std::size_t key = term.a * n + term.b;
      auto it = row_of.emplace(key, row_of.size()).first;
      cols[i].emplace_back(it->second, term.c);
    }
  }
  Mat m(row_of.size(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto const& [r, c] : cols[i]) m(r, i) += c;
  return n - rank(m);
}

HopfData cyclic_group_algebra(std::size_t n) {
  HopfData h(n);
  std::vector<std::string> labels;
  Mat s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      h.set_prod(i, j, SVec{{static_cast<std::uint32_t>((i + j) % n), Scalar(1)}});
    h.set_coprod(i, Tensor2{{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i), Scalar(1)}});
    s((n - i) % n, i) = 1;
    labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
  }
  h.set_unit(unit_vector(n, 0));
  h.set_counit(Vec(n, Scalar(1)));
  h.set_antipode(s);
  h.set_labels(labels);
  return h;
}

MorphismReport check_morphism(HopfData const& a, HopfData const& b, Mat const& f) {
  MorphismReport r;
  std::size_t n = a.dim(), m = b.dim();
  if (f.rows() != m || f.cols() != n) {
    r.witness = "shape";
    return r;
  }
  std::vector<SVec> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = to_sparse(f.col(i));
  auto image = [&](SVec const& v) {
    Accumulator acc(m);
    for (auto const& [i, c] : v)
      for (auto const& [k, d] : img[i]) acc.add(k, c * d);
    return acc.take();
  };

  r.algebra = image(to_sparse(a.unit())) == to_sparse(b.unit());
  if (!r.algebra) r.witness = "unit";
  bool reduced = n > 64 && a.generators() && !a.generators()->words.empty();
  if (r.algebra) {
    std::vector<std::pair<SVec, std::string>> left;
    if (reduced) {
      for (std::size_t g = 0; g < a.generators()->vectors.size(); ++g)
        left.emplace_back(to_sparse(a.generators()->vectors[g]), a.generators()->names[g]);
    } else {
      for (std::size_t i = 0; i < n; ++i)
        left.emplace_back(SVec{{static_cast<std::uint32_t>(i), Scalar(1)}}, a.label(i));
    }
    for (auto const& [x, name] : left) {
      SVec fx = image(x);
      for (std::size_t u = 0; u < n && r.algebra; ++u) {
        SVec e{{static_cast<std::uint32_t>(u), Scalar(1)}};
        if (image(a.mul(x, e)) != b.mul(fx, img[u])) {
          r.algebra = false;
          r.witness = "f(" + name + "*" + a.label(u) + ")";
        }
      }
      if (!r.algebra) break;
    }
  }

  r.coalgebra = true;
  for (std::size_t i = 0; i < n && r.coalgebra; ++i) {
    Scalar e;
    for (auto const& [k, c] : img[i]) e += c * b.counit()[k];
    if (e != a.counit()[i]) {
      r.coalgebra = false;
      r.witness = "eps on " + a.label(i);
      break;
    }
    Tensor2 lhs = b.delta(img[i]);
    Tensor2 rhs;
    for (auto const& t : a.coprod(i))
      for (auto const& [p, cp] : img[t.a])
        for (auto const& [q, cq] : img[t.b]) rhs.push_back({p, q, t.c * cp * cq});
    canonicalize(rhs);
    if (!same(lhs, rhs)) {
      r.coalgebra = false;
      r.witness = "Delta on " + a.label(i);
    }
  }
  r.bijective = n == m && rank(f) == n;
  if (a.antipode() && b.antipode()) r.antipode = f * (*a.antipode()) == (*b.antipode()) * f;
  return r;
}

}  // namespace hopf
