#include "hopf/liftings.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hopf/nichols.hpp"

namespace hopf::liftings {

namespace {

// x l, y l, t l rewritten to the given right-hand sides.
std::vector<std::string> acts(std::string const& l, std::string const& xr, std::string const& yr,
                              std::string const& tr) {
  return {"x " + l + " = " + xr, "y " + l + " = " + yr, "t " + l + " = " + tr};
}

std::vector<std::string> join(std::initializer_list<std::vector<std::string>> parts) {
  std::vector<std::string> out;
  for (auto const& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Delta(l) = l (x) 1 + 1/2((1+x^2) g (x) l + c (1-x^2) h (x) m).
std::string half_coproduct(std::string const& l, std::string const& g, std::string const& c,
                           std::string const& h, std::string const& m) {
  return l + " = " + l + " @ 1 + 1/2*((1 + x^2) " + g + " @ " + l + " " + c + " (1 - x^2) " + h +
         " @ " + m + ")";
}

std::string skew(std::string const& l, std::string const& g) {
  return l + " = " + l + " @ 1 + " + g + " @ " + l;
}

std::vector<std::string> const two_letters{"p", "q"};
std::vector<std::string> const four_letters{"p1", "p2", "q1", "q2"};

// Characters: x p = p x, y p = -p y, t p = s i p x^2 t.
std::vector<std::string> char_act(std::string const& l, bool x_commutes, bool t_plus) {
  return acts(l, x_commutes ? l + " x" : "-" + l + " x", "-" + l + " y",
              std::string(t_plus ? "" : "-") + "i " + l + " x^2 t");
}

std::vector<std::string> const cross_zero{"p1 q1 + q1 p1 + p2 q2 + q2 p2 = 0",
                                          "p1 q2 + q1 p2 + p2 q1 + q2 p1 = 0"};

std::vector<Family> make_families() {
  std::vector<Family> f;
  auto two = [&](std::string id, std::vector<std::string> params, std::vector<std::string> act,
                 std::vector<std::string> rel, std::string cq, std::string n2) {
    f.push_back({id, two_letters, std::move(params), std::move(act), std::move(rel),
                 {skew("p", "x^3 y"), skew("q", cq)}, {"V1", std::move(n2)}, 64});
  };
  auto u111 = join({char_act("p", true, true), char_act("q", true, true)});
  auto u131 = join({char_act("p", true, true), char_act("q", true, false)});
  auto u151 = join({char_act("p", true, true), char_act("q", false, true)});
  auto u171 = join({char_act("p", true, true), char_act("q", false, false)});
  std::string const sq = "p^2 = q^2 = lambda*(1 - x^2)";

  two("U1_1", {"lambda", "mu"}, u111, {sq, "p q + q p = mu*(1 - x^2)"}, "x^3 y", "V1");
  two("U1_2", {"lambda"}, u111, {sq, "p q = q p = 0"}, "x^3 y", "V2");
  two("U1_3", {"lambda"}, u131, {sq, "p q = q p = 0"}, "x y", "V3");
  two("U1_4", {"lambda", "mu"}, u131, {sq, "p q = q p = mu*(1 - x^2)"}, "x^3 y", "V4");
  two("U1_5", {"lambda", "mu"}, u151, {sq, "p q = q p = mu*(1 - y)"}, "x", "V5");
  two("U1_6", {"lambda", "mu"}, u151, {sq, "p q = q p = mu*(1 - x^2 y)"}, "x^3", "V6");
  two("U1_7", {"lambda", "mu"}, u171, {sq, "p q = q p = mu*(1 - x^2 y)"}, "x^3", "V7");
  two("U1_8", {"lambda", "mu"}, u171, {sq, "p q = q p = mu*(1 - y)"}, "x", "V8");

  auto four = [&](std::string id, std::vector<std::string> params, std::vector<std::string> act,
                  std::vector<std::string> rel, std::vector<std::string> cop, std::string n1,
                  std::string n2) {
    f.push_back({id, four_letters, std::move(params), std::move(act), std::move(rel),
                 std::move(cop), {std::move(n1), std::move(n2)}, 256});
  };
  // Letter pairs (p1, p2) and (q1, q2) with identical action.
  auto both = [](auto act) { return join({act("p1", "p2"), act("q1", "q2")}); };

  auto m1_act = [](std::string a, std::string b) {
    return join({char_act(a, true, true), char_act(b, true, false)});
  };
  auto m1_cop = [](std::string a, std::string b, std::string g = "y") {
    return std::vector<std::string>{half_coproduct(a, "y", "-", g, b),
                                    half_coproduct(b, "y", "-", "y", a)};
  };
  four("U1", {"lambda", "mu"}, both(m1_act),
       join({{"p1^2 - p2^2 = lambda*(1 - x^2)", "p1 p2 + p2 p1 = 0",
              "q1^2 - q2^2 = mu*(1 - x^2)", "q1 q2 + q2 q1 = 0"},
             cross_zero}),
       join({m1_cop("p1", "p2"), m1_cop("q1", "q2")}), "M1", "M1");

  auto m2_act = [](std::string a, std::string b) {
    return join({acts(a, a + " x", a + " y", "-" + a + " t"),
                 acts(b, "-" + b + " x", b + " y", b + " t")});
  };
  auto m2_cop = [](std::string a, std::string b) {
    return std::vector<std::string>{
        half_coproduct(a, "x t", "+ i", "x y t", b),
        b + " = " + b + " @ 1 + 1/2*(i (1 - x^2) x y t @ " + a + " + (1 + x^2) x y t @ " + b +
            ")"};
  };
  four("U2", {"lambda", "mu", "alpha", "beta", "gamma", "eta"}, both(m2_act),
       {"p1^2 = lambda*(1 - y) + mu*(1 - x^2 y)", "p2^2 = lambda*(1 - y) - mu*(1 - x^2 y)",
        "p1 p2 + p2 p1 = 0", "q1^2 = alpha*(1 - y) + beta*(1 - x^2 y)",
        "q2^2 = alpha*(1 - y) - beta*(1 - x^2 y)", "q1 q2 + q2 q1 = 0",
        "p1 q1 + q1 p1 = gamma*(1 - y) + eta*(1 - x^2 y)",
        "p2 q2 + q2 p2 = gamma*(1 - y) - eta*(1 - x^2 y)", "p1 q2 + q2 p1 + p2 q1 + q1 p2 = 0"},
       join({m2_cop("p1", "p2"), m2_cop("q1", "q2")}), "M2", "M2");

  auto m3_act = [](std::string a, std::string b) {
    return join({acts(a, a + " x", a + " y", "-" + a + " t"),
                 acts(b, "-" + b + " x", b + " y", "-" + b + " t")});
  };
  auto m3_cop = [](std::string a, std::string b) {
    return std::vector<std::string>{half_coproduct(a, "t", "+", "y t", b),
                                    half_coproduct(b, "y t", "-", "y t", a)};
  };
  four("U3", {"lambda", "mu", "alpha"}, both(m3_act),
       {"p1^2 = p2^2 = lambda*(1 - y)", "p1 p2 + p2 p1 = 0", "q1^2 = q2^2 = mu*(1 - y)",
        "q1 q2 + q2 q1 = 0", "p1 q1 + q1 p1 + p2 q2 + q2 p2 = alpha*(1 - x^2 y)",
        "p1 q2 + q1 p2 + p2 q1 + q2 p1 = 0"},
       join({m3_cop("p1", "p2"), m3_cop("q1", "q2")}), "M3", "M3");

  auto m6_act = [](std::string a, std::string b) {
    return join({acts(a, "-" + a + " x", a + " y", a + " t"),
                 acts(b, "-" + b + " x", b + " y", "-" + b + " t")});
  };
  auto m6_cop = [](std::string a, std::string b) {
    return std::vector<std::string>{half_coproduct(a, "x", "+ i", "x", b),
                                    half_coproduct(b, "x", "- i", "x", a)};
  };
  four("U6", {"lambda", "mu", "alpha"}, both(m6_act),
       {"p1^2 = p2^2 = 0", "p1 p2 + p2 p1 = lambda*(1 - x^2)", "q1^2 = q2^2 = 0",
        "q1 q2 + q2 q1 = mu*(1 - x^2)", "p1 q1 + q1 p1 + p2 q2 + q2 p2 = 0",
        "p1 q2 + q1 p2 + p2 q1 + q2 p1 = alpha*(1 - x^2)"},
       join({m6_cop("p1", "p2"), m6_cop("q1", "q2")}), "M6", "M6");

  std::vector<std::string> const m9_rel{
      "p1^2 = p2^2 = 0", "p1 p2 + p2 p1 = lambda*(1 - y)", "q1^2 = q2^2 = 0",
      "q1 q2 + q2 q1 = mu*(1 - y)", "p1 q1 + q1 p1 + p2 q2 + q2 p2 = 0",
      "p1 q2 + q1 p2 + p2 q1 + q2 p1 = alpha*(1 - y)"};
  auto m9_act = [](std::string a, std::string b, std::string tb) {
    return join({acts(a, "i " + a + " x", a + " y", "-" + b + " t"),
                 acts(b, "-i " + b + " x", b + " y", tb)});
  };
  four("U9", {"lambda", "mu", "alpha"},
       join({m9_act("p1", "p2", "p1 t"), m9_act("q1", "q2", "q2 t")}), m9_rel,
       {skew("p1", "x^2"), skew("p2", "x^2 y"), skew("q1", "x^2"), skew("q2", "x^2 y")}, "M9",
       "M9");
  four("U10", {"lambda", "mu", "alpha"},
       join({m9_act("p1", "p2", "-p1 t"), m9_act("q1", "q2", "-q1 t")}), m9_rel,
       {skew("p1", "x^2 y"), skew("p2", "x^2"), skew("q1", "x^2 y"), skew("q2", "x^2")}, "M10",
       "M10");

  four("U13", {"lambda", "mu", "alpha"}, join({m1_act("p1", "p2"), m6_act("q1", "q2")}),
       {"p1^2 = p2^2 = lambda*(1 - x^2)", "p1 p2 + p2 p1 = 0", "q1^2 = q2^2 = mu*(1 - x^2)",
        "q1 q2 + q2 q1 = alpha*(1 - x^2)"},
       join({m1_cop("p1", "p2", "y x"), m6_cop("q1", "q2")}), "M1", "M6");
  four("U14", {"lambda", "mu"}, join({m1_act("p1", "p2"), m6_act("q1", "q2")}),
       {"p1^2 = p2^2 = lambda*(1 - x^2)", "p1 p2 + p2 p1 = 0", "q1^2 = q2^2 = mu*(1 - x^2)",
        "q1 q2 + q2 q1 = 0"},
       join({m1_cop("p1", "p2"), m1_cop("q1", "q2")}), "M1", "M8");

  four("U15", {"lambda", "mu", "alpha"}, both(m2_act),
       {"p1^2 = p2^2 = lambda*(1 - x^2 y)", "p1 p2 + p2 p1 = 0", "q1^2 + q2^2 = mu*(1 - y)",
        "q1 q2 + q2 q1 = 0", "p1 q1 + q1 p1 + p2 q2 + q2 p2 = alpha*(1 - x^2)",
        "p1 q2 + q1 p2 + p2 q1 + q2 p1 = 0"},
       join({m2_cop("p1", "p2"),
             {half_coproduct("q1", "x y t", "- i", "x t", "q2"),
              half_coproduct("q2", "x t", "- i", "x t", "q1")}}),
       "M2", "M4");

  four("U16", {"lambda", "mu"}, both(m3_act),
       join({{"p1^2 = 1/2*lambda*(1 - y) + 1/2*mu*(1 - x^2 y)", "p2^2 = lambda*(1 - y)",
              "p1 p2 + p2 p1 = 0", "q1^2 = q2^2 = mu*(1 - y)", "q1 q2 + q2 q1 = 0"},
             cross_zero}),
       join({m3_cop("p1", "p2"),
             {half_coproduct("q1", "y t", "-", "t", "q2"),
              half_coproduct("q2", "t", "+", "t", "q1")}}),
       "M3", "M5");

  four("U17", {"lambda", "mu", "alpha", "beta"},
       join({acts("p1", "-p1 x", "p1 y", "p1 t"), acts("p2", "-p2 x", "p2 y", "-p2 x^2 t"),
             acts("q1", "-q1 x", "q1 y", "q1 t"), acts("q2", "-q2 x", "q2 y", "-q2 t")}),
       {"p1^2 = p2^2 = 0", "p1 p2 + p2 p1 = lambda*(1 - x^2)", "q1^2 + q2^2 = 0",
        "q1 q2 + q2 q1 = mu*(1 - x^2)", "p1 q1 + q1 p1 + p2 q2 + q2 p2 = alpha*(1 - x^2 y)",
        "p1 q2 + q1 p2 + p2 q1 + q2 p1 = beta*(1 - y)"},
       {half_coproduct("p1", "x", "- i", "x", "p2"), half_coproduct("p2", "x", "- i", "x", "p1"),
        half_coproduct("q1", "x y", "- i", "x y", "q2"),
        half_coproduct("q2", "x y", "+ i", "x y", "q1")},
       "M6", "M7");

  four("U19", {"lambda", "mu", "alpha"},
       join({m9_act("p1", "p2", "p1 t"), m9_act("q1", "q2", "q1 t")}),
       {"p1^2 = p2^2 = 0", "p1 p2 + p2 p1 = lambda*(1 - y)", "q1^2 = q2^2 = 0",
        "q1 q2 + q2 q1 = mu*(1 - y)", "p1 q1 + q1 p1 + p2 q2 + q2 p2 = alpha*(1 - y)",
        "p1 q2 + q1 p2 + p2 q1 + q2 p1 = 0"},
       {skew("p1", "x^2"), skew("p2", "x^2 y"), skew("q1", "x^2 y"), skew("q2", "x^2")}, "M9",
       "M10");
  return f;
}

}  // namespace

std::vector<Family> const& families() {
  static std::vector<Family> const f = make_families();
  return f;
}

Family const& family(std::string const& id) {
  for (auto const& f : families())
    if (f.id == id) return f;
  throw std::invalid_argument("unknown lifting family '" + id + "'");
}

void validate(LiftingParams const& p) {
  Family const& f = family(p.family);
  for (auto const& [k, v] : p.values)
    if (std::find(f.params.begin(), f.params.end(), k) == f.params.end())
      throw std::invalid_argument(p.family + " has no parameter '" + k + "'");
}

LiftingParams zeros(std::string const& id) {
  LiftingParams p{id, {}};
  for (auto const& k : family(id).params) p.values[k] = Scalar(0);
  return p;
}

LiftingParams ones(std::string const& id) {
  LiftingParams p{id, {}};
  for (auto const& k : family(id).params) p.values[k] = Scalar(1);
  return p;
}

LiftingParams mixed(std::string const& id) {
  static Scalar const vals[] = {Scalar(1), Scalar(-1), Scalar(2), Scalar::i(), Scalar::half(),
                                -Scalar::i()};
  LiftingParams p{id, {}};
  std::size_t k = 0;
  for (auto const& name : family(id).params) p.values[name] = vals[k++ % 6];
  return p;
}

std::string presentation_text(Family const& f) {
  std::ostringstream os;
  os << "name: " << f.id << "\ngenerators:";
  for (auto const& l : f.letters) os << ' ' << l;
  os << " x y t\nlight: x y\nparameters:";
  for (auto const& k : f.params) os << ' ' << k << "=0";
  os << "\nrelations:\n";
  os << "x^4 = 1\ny^2 = 1\nt^2 = x^2 y\ny x = x y\nt x = x^3 t\nt y = y t\n";
  for (auto const& r : f.actions) os << r << '\n';
  for (auto const& r : f.relations) os << r << '\n';
  os << "[coproduct]\nx = x @ x\ny = y @ y\nt = 1/2*((1 + y) t @ t + (1 - y) t @ x^2 t)\n";
  for (auto const& c : f.coproduct) os << c << '\n';
  os << "[counit]\nx = 1\ny = 1\nt = 1\n";
  for (auto const& l : f.letters) os << l << " = 0\n";
  return os.str();
}

PresentedHopf presentation(LiftingParams const& p) {
  validate(p);
  return parse_presentation(presentation_text(family(p.family)), p.values);
}

LiftingReport build_lifting(LiftingParams const& p, BuildOptions const& opt) {
  LiftingReport r;
  r.params = p;
  r.expected_dim = family(p.family).expected_dim;
  r.outcome = build_presented(presentation(p), opt);
  return r;
}

// ---- read-off --------------------------------------------------------------

namespace {

constexpr std::size_t kH = 16;
std::size_t const kBaseRelations = 6;  // x^4, y^2, t^2, yx, tx, ty

// H element of a word in x, y, t (letters at offset n of the alphabet).
std::optional<Vec> h_word(kashina::KashinaH const& k, Word const& w, std::size_t n) {
  Vec v = k.h.unit();
  for (char ch : w) {
    auto l = static_cast<std::size_t>(static_cast<unsigned char>(ch));
    if (l < n) return std::nullopt;
    Vec const& g = l == n ? k.x : l == n + 1 ? k.y : k.t;
    v = k.h.mul(v, g);
  }
  return v;
}

Scalar param(LiftingParams const& p, std::string const& k) {
  auto it = p.values.find(k);
  return it == p.values.end() ? Scalar(0) : it->second;
}

}  // namespace

ReadOff read_off_module(Family const& f, kashina::KashinaH const& k) {
  ReadOff out;
  PresentedHopf pr = parse_presentation(presentation_text(f));
  Alphabet const& a = pr.alphabet;
  std::size_t n = f.letters.size();
  char const cx = static_cast<char>(n), ct = static_cast<char>(n + 2);
  Mat gx(n, n), gy(n, n), tp(n, n), tm(n, n);
  for (auto const& rel : f.actions) {
    auto eq = rel.find('=');
    Word lhs = a.parse_word(rel.substr(0, eq));
    NcPoly rhs = parse_polynomial(rel.substr(eq + 1), a);
    if (lhs.size() != 2) {
      out.detail = "not an action relation: " + rel;
      return out;
    }
    char g = lhs[0];
    auto l = static_cast<std::size_t>(static_cast<unsigned char>(lhs[1]));
    for (auto const& [w, c] : rhs.terms()) {
      auto l2 = w.empty() ? n : static_cast<std::size_t>(static_cast<unsigned char>(w[0]));
      Word tail = w.empty() ? w : w.substr(1);
      bool ok = l2 < n;
      if (ok && g != ct && tail == Word(1, g)) {
        (g == cx ? gx : gy)(l2, l) += c;
      } else if (ok && g == ct && tail == Word(1, ct)) {
        tp(l2, l) += c;
      } else if (ok && g == ct && tail == Word{cx, cx, ct}) {
        tm(l2, l) += c;
      } else {
        out.detail = "unexpected term in " + rel;
        return out;
      }
    }
  }
  // (t.l)_+ must be y-invariant and (t.l)_- y-anti-invariant.
  if (gy * tp != tp || gy * tm != -tm) {
    out.detail = "t-relations do not split along the y-eigenspaces";
    return out;
  }
  YDModule m;
  m.name = f.summands.size() == 2 ? "N(" + f.id + ")" : f.id;
  m.dim = n;
  m.gens = {gx, gy, tp + tm};
  m.coact.assign(kH, Mat(n, n));
  for (std::size_t l = 0; l < n; ++l) {
    for (auto const& [uv, c] : pr.coproduct[l].terms) {
      auto const& [u, v] = uv;
      if (v.empty() && u == Word(1, static_cast<char>(l))) continue;
      auto h = h_word(k, u, n);
      if (v.size() != 1 || static_cast<std::size_t>(static_cast<unsigned char>(v[0])) >= n || !h) {
        out.detail = "coproduct of " + f.letters[l] + " is not l (x) 1 + H (x) N";
        return out;
      }
      auto l2 = static_cast<std::size_t>(static_cast<unsigned char>(v[0]));
      for (std::size_t mm = 0; mm < kH; ++mm)
        if (!(*h)[mm].is_zero()) m.coact[mm](l2, l) += c * (*h)[mm];
    }
  }
  out.module = std::move(m);
  return out;
}

// ---- quadratic audit ---------------------------------------------------------

namespace {

// Relations of the family in the parsed presentation, as indices.
std::pair<std::size_t, std::size_t> family_relation_range(Family const& f, PresentedHopf const& p) {
  return {kBaseRelations + f.actions.size(), p.relations.size()};
}

std::optional<Vec> quadratic_vector(NcPoly const& rel, std::size_t n) {
  Vec v(n * n);
  for (auto const& [w, c] : rel.terms()) {
    if (w.size() != 2) return std::nullopt;
    auto a = static_cast<std::size_t>(static_cast<unsigned char>(w[0]));
    auto b = static_cast<std::size_t>(static_cast<unsigned char>(w[1]));
    if (a >= n || b >= n) return std::nullopt;
    v[a * n + b] += c;
  }
  return v;
}

std::size_t span_rank(std::vector<Vec> const& vs, std::size_t len) {
  if (vs.empty()) return 0;
  Mat m(vs.size(), len);
  for (std::size_t r = 0; r < vs.size(); ++r)
    for (std::size_t c = 0; c < len; ++c) m(r, c) = vs[r][c];
  return rank(m);
}

}  // namespace

QuadraticAudit quadratic_audit(Family const& f, YDModule const& n) {
  QuadraticAudit out;
  std::size_t d = n.dim;
  Mat s = Mat::identity(d * d) + braiding(n, n);
  auto kernel = kernel_basis(s);
  out.kernel_dim = kernel.size();
  LiftingParams z = zeros(f.id);
  PresentedHopf p = presentation(z);
  auto [lo, hi] = family_relation_range(f, p);
  std::vector<Vec> inside;
  for (std::size_t r = lo; r < hi; ++r) {
    auto v = quadratic_vector(p.relations[r], d);
    if (v && is_zero(s * *v)) {
      inside.push_back(*v);
    } else {
      out.outside.push_back(p.relation_text.size() == p.relations.size()
                                ? p.relation_text[r]
                                : p.alphabet.render(p.relations[r]));
      out.outside_index.push_back(r);
    }
  }
  out.covered = span_rank(inside, d * d);
  std::size_t have = out.covered;
  for (auto const& kv : kernel) {
    inside.push_back(kv);
    std::size_t r = span_rank(inside, d * d);
    if (r > have) {
      have = r;
      out.missing.push_back(kv);
    } else {
      inside.pop_back();
    }
  }
  return out;
}

PresentedHopf completed_presentation(LiftingParams const& p, QuadraticAudit const& audit) {
  PresentedHopf pr = presentation(p);
  Family const& f = family(p.family);
  std::size_t n = f.letters.size();
  bool texts = pr.relation_text.size() == pr.relations.size();
  for (auto it = audit.outside_index.rbegin(); it != audit.outside_index.rend(); ++it) {
    pr.relations.erase(pr.relations.begin() + static_cast<std::ptrdiff_t>(*it));
    if (texts) pr.relation_text.erase(pr.relation_text.begin() + static_cast<std::ptrdiff_t>(*it));
  }
  for (auto const& v : audit.missing) {
    NcPoly rel;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!v[a * n + b].is_zero())
          rel.add(Word{static_cast<char>(a), static_cast<char>(b)}, v[a * n + b]);
    pr.relations.push_back(rel);
    if (texts) pr.relation_text.push_back(pr.alphabet.render(rel) + " = 0");
  }
  pr.name += "+completed";
  return pr;
}

LiftingReport build_completed(LiftingParams const& p, QuadraticAudit const& audit,
                              BuildOptions const& opt) {
  LiftingReport r;
  r.params = p;
  r.variant = "completed";
  r.expected_dim = family(p.family).expected_dim;
  r.outcome = build_presented(completed_presentation(p, audit), opt);
  return r;
}

// ---- braided Nichols algebra ---------------------------------------------------

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<unsigned> digits(std::size_t idx, std::size_t d, std::size_t n) {
  std::vector<unsigned> w(n);
  for (std::size_t k = n; k-- > 0;) {
    w[k] = static_cast<unsigned>(idx % d);
    idx /= d;
  }
  return w;
}

// Tensor-level operations on V^(x)n for a YD module.
struct TensorOps {
  YDModule const& m;
  kashina::KashinaH const& k;
  std::vector<Mat> rho;  // action of each H basis element

  TensorOps(YDModule const& mod, kashina::KashinaH const& kh) : m(mod), k(kh) {
    for (std::size_t b = 0; b < kH; ++b) rho.push_back(m.action(b));
  }

  // h_b . (v_w1 (x) ... (x) v_wn) through the iterated coproduct.
  Vec act_word(std::size_t b, std::vector<unsigned> const& w, std::size_t from = 0) const {
    std::size_t d = m.dim;
    if (from == w.size()) return Vec{k.h.counit()[b]};
    Vec out(ipow(d, w.size() - from));
    for (auto const& t : k.h.coprod(b)) {
      Vec head = rho[t.a].col(w[from]);
      Vec tail = act_word(t.b, w, from + 1);
      Vec kv = kron(head, tail);
      for (std::size_t i = 0; i < kv.size(); ++i)
        if (!kv[i].is_zero()) out[i] += t.c * kv[i];
    }
    return out;
  }

  Vec act(std::size_t b, Vec const& v, std::size_t n) const {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      Vec a = act_word(b, digits(i, m.dim, n));
      for (std::size_t j = 0; j < a.size(); ++j)
        if (!a[j].is_zero()) out[j] += v[i] * a[j];
    }
    return out;
  }

  // delta(word) as 16 buckets of V^(x)n vectors.
  std::vector<Vec> coact_word(std::vector<unsigned> const& w, std::size_t from = 0) const {
    std::size_t d = m.dim;
    std::vector<Vec> out(kH, Vec(ipow(d, w.size() - from)));
    if (from == w.size()) {
      for (std::size_t b = 0; b < kH; ++b) out[b][0] = k.h.unit()[b];
      return out;
    }
    auto rest = coact_word(w, from + 1);
    for (std::size_t m1 = 0; m1 < kH; ++m1) {
      Vec head = m.coact[m1].col(w[from]);
      if (is_zero(head)) continue;
      for (std::size_t m2 = 0; m2 < kH; ++m2) {
        if (is_zero(rest[m2])) continue;
        Vec kv = kron(head, rest[m2]);
        for (auto const& [g, c] : k.h.prod(m1, m2))
          for (std::size_t i = 0; i < kv.size(); ++i)
            if (!kv[i].is_zero()) out[g][i] += c * kv[i];
      }
    }
    return out;
  }

  // Braided coproduct of a word: entry j is the (j, n-j) component, index
  // a * d^(n-j) + b.
  std::vector<Vec> coproduct_word(std::vector<unsigned> const& w, std::size_t from = 0) const {
    std::size_t d = m.dim, n = w.size() - from;
    std::vector<Vec> out(n + 1, Vec(ipow(d, n)));
    if (n == 0) {
      out[0][0] = Scalar(1);
      return out;
    }
    auto rest = coproduct_word(w, from + 1);
    unsigned v = w[from];
    std::size_t dn1 = ipow(d, n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      Vec const& r = rest[j];
      // (v (x) 1)(w' (x) w'')
      for (std::size_t i = 0; i < dn1; ++i)
        if (!r[i].is_zero()) out[j + 1][v * dn1 + i] += r[i];
      // (1 (x) v)(w' (x) w'') = v(-1) . w' (x) v(0) w''
      std::size_t right = ipow(d, n - 1 - j), left = ipow(d, j);
      for (std::size_t a = 0; a < left; ++a) {
        bool any = false;
        for (std::size_t b = 0; b < right && !any; ++b) any = !r[a * right + b].is_zero();
        if (!any) continue;
        auto wa = digits(a, d, j);
        for (std::size_t mm = 0; mm < kH; ++mm) {
          Vec cv = m.coact[mm].col(v);
          if (is_zero(cv)) continue;
          Vec ha = act_word(mm, wa);
          for (std::size_t b = 0; b < right; ++b) {
            Scalar const& c = r[a * right + b];
            if (c.is_zero()) continue;
            for (std::size_t ia = 0; ia < ha.size(); ++ia) {
              if (ha[ia].is_zero()) continue;
              for (std::size_t s = 0; s < d; ++s) {
                if (cv[s].is_zero()) continue;
                out[j][ia * (d * right) + s * right + b] += c * ha[ia] * cv[s];
              }
            }
          }
        }
      }
    }
    return out;
  }
};

}  // namespace

Vec BraidedHopf::word(std::vector<unsigned> const& w) const {
  Vec out(dim());
  std::size_t n = w.size();
  if (n >= row_bases.size()) return out;
  std::size_t d = module.dim, idx = 0;
  for (unsigned c : w) idx = idx * d + c;
  Mat const& r = row_bases[n];
  for (std::size_t i = 0; i < r.rows(); ++i) out[offset[n] + i] = r(i, idx);
  return out;
}

std::string BraidedHopf::label(std::size_t b) const {
  if (basis[b].empty()) return "1";
  std::string s;
  for (unsigned c : basis[b]) s += "v" + std::to_string(c + 1);
  return s;
}

BraidedHopf braided_nichols_hopf(YDModule const& v, kashina::KashinaH const& h, unsigned cap) {
  BraidedHopf r;
  r.module = v;
  std::size_t d = v.dim;
  auto rows = symmetrizer_row_bases(braided_space(v), cap);
  if (rows.empty() || rows.back().rows() != 0)
    throw std::runtime_error("Nichols algebra of " + v.name + " not finite within degree " +
                             std::to_string(cap));
  rows.pop_back();
  r.row_bases.push_back(Mat::identity(1));
  for (auto& m : rows) r.row_bases.push_back(std::move(m));
  for (std::size_t n = 0; n < r.row_bases.size(); ++n) {
    r.offset.push_back(r.basis.size());
    Mat const& m = r.row_bases[n];
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::size_t c = 0;
      while (m(i, c).is_zero()) ++c;
      r.basis.push_back(digits(c, d, n));
    }
  }
  std::size_t D = r.dim();
  auto project = [&](Vec const& t, std::size_t n) {
    Vec out(D);
    if (n >= r.row_bases.size()) return out;
    Vec c = r.row_bases[n] * t;
    for (std::size_t i = 0; i < c.size(); ++i) out[r.offset[n] + i] = c[i];
    return out;
  };
  for (std::size_t a = 0; a < D; ++a)
    for (std::size_t b = 0; b < D; ++b) {
      auto w = r.basis[a];
      w.insert(w.end(), r.basis[b].begin(), r.basis[b].end());
      r.mult.push_back(r.word(w));
    }
  TensorOps ops(v, h);
  r.action.assign(kH, Mat(D, D));
  for (std::size_t m = 0; m < kH; ++m)
    for (std::size_t b = 0; b < D; ++b)
      r.action[m].set_col(b, project(ops.act_word(m, r.basis[b]), r.basis[b].size()));
  r.coaction.resize(D);
  r.coproduct.resize(D);
  for (std::size_t b = 0; b < D; ++b) {
    std::size_t n = r.basis[b].size();
    auto co = ops.coact_word(r.basis[b]);
    for (std::size_t m = 0; m < kH; ++m) {
      Vec c = project(co[m], n);
      if (!is_zero(c)) r.coaction[b].emplace_back(m, std::move(c));
    }
    auto dl = ops.coproduct_word(r.basis[b]);
    Tensor2 t;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j >= r.row_bases.size() || n - j >= r.row_bases.size()) continue;
      Mat const& rl = r.row_bases[j];
      Mat const& rr = r.row_bases[n - j];
      std::size_t right = ipow(d, n - j);
      // X as ipow(d, j) x right, coordinates rl X rr^T.
      Mat x(ipow(d, j), right);
      for (std::size_t i = 0; i < dl[j].size(); ++i) x(i / right, i % right) = dl[j][i];
      Mat c = rl * x * rr.transpose();
      for (std::size_t p = 0; p < c.rows(); ++p)
        for (std::size_t q = 0; q < c.cols(); ++q)
          if (!c(p, q).is_zero())
            t.push_back({static_cast<std::uint32_t>(r.offset[j] + p),
                         static_cast<std::uint32_t>(r.offset[n - j] + q), c(p, q)});
    }
    canonicalize(t);
    r.coproduct[b] = std::move(t);
  }
  return r;
}

namespace {

// a * b on coordinate vectors of R.
Vec r_mul(BraidedHopf const& r, Vec const& a, Vec const& b) {
  std::size_t D = r.dim();
  Vec out(D);
  for (std::size_t i = 0; i < D; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < D; ++j) {
      if (b[j].is_zero()) continue;
      Vec const& m = r.mult[i * D + j];
      for (std::size_t k = 0; k < D; ++k)
        if (!m[k].is_zero()) out[k] += a[i] * b[j] * m[k];
    }
  }
  return out;
}

// Dense R (x) R as a D*D vector.
Vec tensor_dense(Tensor2 const& t, std::size_t D) {
  Vec out(D * D);
  for (auto const& e : t) out[e.a * D + e.b] += e.c;
  return out;
}

// (a1 (x) a2)(b1 (x) b2) = a1 (a2(-1) . b1) (x) a2(0) b2 on basis tensors.
Vec braided_tensor_mul(BraidedHopf const& r, Vec const& x, Vec const& y) {
  std::size_t D = r.dim();
  Vec out(D * D);
  for (std::size_t i = 0; i < D * D; ++i) {
    if (x[i].is_zero()) continue;
    std::size_t a1 = i / D, a2 = i % D;
    for (std::size_t j = 0; j < D * D; ++j) {
      if (y[j].is_zero()) continue;
      std::size_t b1 = j / D, b2 = j % D;
      for (auto const& [m, a20] : r.coaction[a2]) {
        Vec hb1 = r.action[m].col(b1);
        Vec left = r_mul(r, unit_vector(D, a1), hb1);
        Vec right = r_mul(r, a20, unit_vector(D, b2));
        for (std::size_t p = 0; p < D; ++p) {
          if (left[p].is_zero()) continue;
          for (std::size_t q = 0; q < D; ++q)
            if (!right[q].is_zero()) out[p * D + q] += x[i] * y[j] * left[p] * right[q];
        }
      }
    }
  }
  return out;
}

}  // namespace

AxiomReport verify_braided(BraidedHopf const& r, kashina::KashinaH const&) {
  AxiomReport rep;
  rep.mode = "exhaustive";
  std::size_t D = r.dim();
  AxiomCheck assoc{"associativity", true, 0, {}};
  for (std::size_t a = 0; a < D && assoc.pass; ++a)
    for (std::size_t b = 0; b < D && assoc.pass; ++b)
      for (std::size_t c = 0; c < D && assoc.pass; ++c) {
        ++assoc.checked;
        Vec l = r_mul(r, r.mult[a * D + b], unit_vector(D, c));
        Vec rr = r_mul(r, unit_vector(D, a), r.mult[b * D + c]);
        if (l != rr) assoc = {"associativity", false, assoc.checked, r.label(a) + r.label(b) + r.label(c)};
      }
  rep.checks.push_back(assoc);

  AxiomCheck mult{"braided multiplicativity", true, 0, {}};
  for (std::size_t a = 0; a < D && mult.pass; ++a)
    for (std::size_t b = 0; b < D && mult.pass; ++b) {
      ++mult.checked;
      Vec lhs(D * D);
      Vec const& ab = r.mult[a * D + b];
      for (std::size_t k = 0; k < D; ++k)
        if (!ab[k].is_zero()) {
          Vec t = tensor_dense(r.coproduct[k], D);
          for (std::size_t i = 0; i < D * D; ++i) lhs[i] += ab[k] * t[i];
        }
      Vec rhs = braided_tensor_mul(r, tensor_dense(r.coproduct[a], D), tensor_dense(r.coproduct[b], D));
      if (lhs != rhs) mult = {"braided multiplicativity", false, mult.checked, r.label(a) + "*" + r.label(b)};
    }
  rep.checks.push_back(mult);

  AxiomCheck coassoc{"coassociativity", true, 0, {}};
  for (std::size_t a = 0; a < D && coassoc.pass; ++a) {
    ++coassoc.checked;
    std::map<std::array<std::uint32_t, 3>, Scalar> l, rr;
    for (auto const& t : r.coproduct[a]) {
      for (auto const& u : r.coproduct[t.a]) l[{u.a, u.b, t.b}] += t.c * u.c;
      for (auto const& u : r.coproduct[t.b]) rr[{t.a, u.a, u.b}] += t.c * u.c;
    }
    std::erase_if(l, [](auto const& e) { return e.second.is_zero(); });
    std::erase_if(rr, [](auto const& e) { return e.second.is_zero(); });
    if (l != rr) coassoc = {"coassociativity", false, coassoc.checked, r.label(a)};
  }
  rep.checks.push_back(coassoc);
  return rep;
}

// ---- bosonization ---------------------------------------------------------------

BosonizationData bosonize(BraidedHopf const& r, kashina::KashinaH const& k) {
  std::size_t D = r.dim(), N = D * kH;
  HopfData h(N);
  auto idx = [](std::size_t a, std::size_t j) { return static_cast<std::uint32_t>(a * kH + j); };
  // (r # g)(s # h) = r (g1 . s) # g2 h
  for (std::size_t a = 0; a < D; ++a)
    for (std::size_t i = 0; i < kH; ++i)
      for (std::size_t b = 0; b < D; ++b)
        for (std::size_t j = 0; j < kH; ++j) {
          Accumulator acc(N);
          for (auto const& t : k.h.coprod(i)) {
            Vec gs = r.action[t.a].col(b);
            Vec rs = r_mul(r, unit_vector(D, a), gs);
            for (auto const& [hj, c] : k.h.prod(t.b, j))
              for (std::size_t s = 0; s < D; ++s)
                if (!rs[s].is_zero()) acc.add(idx(s, hj), t.c * rs[s] * c);
          }
          h.set_prod(idx(a, i), idx(b, j), acc.take());
        }
  // Delta(r # g) = r1 # r2(-1) g1 (x) r2(0) # g2
  for (std::size_t a = 0; a < D; ++a)
    for (std::size_t j = 0; j < kH; ++j) {
      Tensor2 t;
      for (auto const& e : r.coproduct[a])
        for (auto const& [m, r20] : r.coaction[e.b])
          for (auto const& g : k.h.coprod(j))
            for (auto const& [hm, c] : k.h.prod(m, g.a))
              for (std::size_t s = 0; s < D; ++s)
                if (!r20[s].is_zero())
                  t.push_back({idx(e.a, hm), idx(s, g.b), e.c * c * g.c * r20[s]});
      canonicalize(t);
      h.set_coprod(idx(a, j), std::move(t));
    }
  Vec unit(N), counit(N);
  for (std::size_t j = 0; j < kH; ++j) {
    unit[idx(0, j)] = k.h.unit()[j];
    counit[idx(0, j)] = k.h.counit()[j];
  }
  h.set_unit(unit);
  h.set_counit(counit);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < D; ++a)
    for (std::size_t j = 0; j < kH; ++j) labels.push_back(r.label(a) + "#" + k.h.label(j));
  h.set_labels(labels);

  GeneratorData g;
  std::size_t d = r.module.dim;
  for (std::size_t l = 0; l < d; ++l) {
    g.names.push_back("v" + std::to_string(l + 1));
    g.vectors.push_back(unit_vector(N, idx(r.offset[1] + l, 0)));
  }
  g.names.insert(g.names.end(), {"x", "y", "t"});
  for (std::size_t j : {kashina::index(1, 0, 0), kashina::index(0, 1, 0), kashina::index(0, 0, 1)})
    g.vectors.push_back(unit_vector(N, idx(0, j)));
  for (std::size_t a = 0; a < D; ++a)
    for (std::size_t j = 0; j < kH; ++j) {
      std::vector<int> w(r.basis[a].begin(), r.basis[a].end());
      w.insert(w.end(), j % 4, static_cast<int>(d));
      w.insert(w.end(), (j / 4) % 2, static_cast<int>(d + 1));
      w.insert(w.end(), (j / 8) % 2, static_cast<int>(d + 2));
      g.words.push_back(std::move(w));
    }
  h.set_generators(g);
  h.set_antipode(solve_antipode(h));

  BosonizationData out;
  out.pi = Mat(kH, N);
  out.iota = Mat(N, kH);
  for (std::size_t j = 0; j < kH; ++j) {
    out.pi(j, idx(0, j)) = Scalar(1);
    out.iota(idx(0, j), j) = Scalar(1);
  }
  out.hopf = std::move(h);
  return out;
}

bool projection_section_ok(BosonizationData const& b) {
  return (b.pi * b.iota).is_identity();
}

Mat generator_correspondence(BuildOutcome const& lifting, BosonizationData const& b,
                             std::size_t letters) {
  HopfData const& t = b.hopf;
  std::vector<SVec> img;
  for (std::size_t l = 0; l < letters; ++l) img.push_back(SVec{{static_cast<std::uint32_t>((1 + l) * kH), Scalar(1)}});
  for (std::size_t j : {kashina::index(1, 0, 0), kashina::index(0, 1, 0), kashina::index(0, 0, 1)})
    img.push_back(SVec{{static_cast<std::uint32_t>(j), Scalar(1)}});
  Mat f(t.dim(), lifting.basis.size());
  for (std::size_t c = 0; c < lifting.basis.size(); ++c) {
    SVec v = to_sparse(t.unit());
    for (char ch : lifting.basis[c]) v = t.mul(v, img[static_cast<unsigned char>(ch)]);
    for (auto const& [i, s] : v) f(i, c) = s;
  }
  return f;
}

// ---- zero-parameter comparison -----------------------------------------------

ZeroComparison compare_zero_parameter(std::string const& id, kashina::KashinaH const& k,
                                      std::vector<CatalogEntry> const& cat) {
  ZeroComparison z;
  z.family = id;
  Family const& f = family(id);
  ReadOff ro = read_off_module(f, k);
  if (!ro.module) {
    z.read_off = ro.detail;
    z.lifting = build_lifting(zeros(id));
    return z;
  }
  YDModule const& n = *ro.module;
  z.yd_ok = verify_yd(k, n).pass();
  std::vector<YDModule> parts;
  for (auto const& s : f.summands) parts.push_back(find(cat, s));
  z.matches_catalog = yd_isomorphic(n, direct_sum(parts)).isomorphic;
  z.audit = quadratic_audit(f, n);
  z.lifting = build_lifting(zeros(id));
  if (!z.yd_ok) {
    z.detail = "read-off N fails the YD axioms";
    return z;
  }
  BraidedHopf r = braided_nichols_hopf(n, k);
  z.nichols_dim = r.dim();
  BosonizationData b = bosonize(r, k);
  z.bosonization_ok = verify_hopf(b.hopf).pass() && projection_section_ok(b);
  if (z.lifting.pass()) {
    z.iso = check_morphism(*z.lifting.outcome.hopf, b.hopf,
                           generator_correspondence(z.lifting.outcome, b, f.letters.size()));
  } else {
    z.iso.witness = "as-written lifting did not build: " + to_string(z.lifting.outcome.error);
  }
  if (!z.audit.complete()) {
    z.completed = build_completed(zeros(id), z.audit);
    if (z.completed.pass())
      z.completed_iso = check_morphism(*z.completed.outcome.hopf, b.hopf,
                                       generator_correspondence(z.completed.outcome, b, f.letters.size()));
  }
  return z;
}

// ---- parameter isomorphisms ---------------------------------------------------

namespace {

LiftingReport build_variant(LiftingParams const& p, bool completed, kashina::KashinaH const& k) {
  if (!completed) return build_lifting(p);
  ReadOff ro = read_off_module(family(p.family), k);
  if (!ro.module) {
    LiftingReport r;
    r.params = p;
    r.variant = "completed";
    r.outcome.message = ro.detail;
    return r;
  }
  return build_completed(p, quadratic_audit(family(p.family), *ro.module));
}

std::size_t letter_index(BuildOutcome const& o, std::size_t letter) {
  Word w(1, static_cast<char>(letter));
  auto it = std::find(o.basis.begin(), o.basis.end(), w);
  if (it == o.basis.end()) throw std::runtime_error("letter is not a basis word");
  return static_cast<std::size_t>(it - o.basis.begin());
}

}  // namespace

ParameterIsoReport verify_parameter_isomorphism(ParameterIso const& iso,
                                                kashina::KashinaH const& k) {
  ParameterIsoReport rep;
  if (iso.source.family != iso.target.family)
    throw std::invalid_argument("parameter isomorphisms stay inside one family");
  Family const& f = family(iso.source.family);
  std::size_t n = f.letters.size();
  rep.source = build_variant(iso.source, iso.completed, k);
  rep.target = build_variant(iso.target, iso.completed, k);
  if (!rep.source.pass() || !rep.target.pass()) {
    rep.detail = "source or target did not build";
    return rep;
  }
  HopfData const& s = *rep.source.outcome.hopf;
  HopfData const& t = *rep.target.outcome.hopf;
  std::vector<Vec> letter(n + 3);
  for (std::size_t l = 0; l < n + 3; ++l) letter[l] = t.basis(letter_index(rep.target.outcome, l));
  auto const tau = kashina::table_automorphisms(k).at(static_cast<std::size_t>(iso.tau - 1));
  std::vector<Vec> img(n + 3, Vec(t.dim()));
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t j = 0; j < n; ++j)
      if (!iso.letter_images[l][j].is_zero()) img[l] = add(img[l], scale(letter[j], iso.letter_images[l][j]));
  // tau(g) as a polynomial in the target's x, y, t.
  std::array<Vec const*, 3> hv{&tau.fx, &tau.fy, &tau.ft};
  for (std::size_t g = 0; g < 3; ++g) {
    NcPoly poly;
    for (std::size_t b = 0; b < kH; ++b) {
      Scalar const& c = (*hv[g])[b];
      if (c.is_zero()) continue;
      Word w;
      w.append(b % 4, static_cast<char>(n));
      w.append((b / 4) % 2, static_cast<char>(n + 1));
      w.append((b / 8) % 2, static_cast<char>(n + 2));
      poly.add(w, c);
    }
    img[n + g] = evaluate(t, letter, poly);
  }
  Mat phi(t.dim(), s.dim());
  auto const& basis = rep.source.outcome.basis;
  for (std::size_t c = 0; c < basis.size(); ++c) {
    Vec v = t.unit();
    for (char ch : basis[c]) v = t.mul(v, img[static_cast<unsigned char>(ch)]);
    phi.set_col(c, v);
  }
  rep.morphism = check_morphism(s, t, phi);
  rep.detail = rep.morphism.witness;
  return rep;
}

namespace {

ParameterIso pattern(LiftingParams source, LiftingParams target, int tau,
                     std::vector<std::vector<std::pair<std::size_t, Scalar>>> const& rows) {
  ParameterIso p;
  p.source = std::move(source);
  p.target = std::move(target);
  p.tau = tau;
  for (auto const& r : rows) {
    Vec v(rows.size());
    for (auto const& [j, c] : r) v[j] = c;
    p.letter_images.push_back(std::move(v));
  }
  return p;
}

}  // namespace

ParameterIso u6_scaling(Scalar a1, Scalar a2, LiftingParams source, LiftingParams target, int tau) {
  return pattern(std::move(source), std::move(target), tau,
                 {{{0, a1}}, {{1, a1}}, {{2, a2}}, {{3, a2}}});
}

ParameterIso u13_scaling(Scalar a1, Scalar a2, LiftingParams source, LiftingParams target,
                         int tau) {
  Scalar s = (tau == 13 || tau == 14) ? Scalar(-1) : Scalar(1);
  return pattern(std::move(source), std::move(target), tau,
                 {{{0, a1}}, {{1, s * a1}}, {{2, a2}}, {{3, a2}}});
}

ParameterIso u2_mixing(Scalar a1, Scalar a2, Scalar b1, Scalar b2, LiftingParams source,
                       LiftingParams target) {
  return pattern(std::move(source), std::move(target), 1,
                 {{{0, a1}, {2, a2}}, {{1, a1}, {3, a2}}, {{0, b1}, {2, b2}}, {{1, b1}, {3, b2}}});
}

bool var41_holds(Scalar const& a1, Scalar const& a2, LiftingParams const& s,
                 LiftingParams const& t) {
  return a1 * a1 * param(t, "lambda") == param(s, "lambda") &&
         a2 * a2 * param(t, "mu") == param(s, "mu");
}

bool var1_holds(Scalar const& a1, Scalar const& a2, LiftingParams const& s,
                LiftingParams const& t) {
  return a1 * a1 * param(t, "lambda") == param(s, "lambda") &&
         a2 * a2 * param(t, "mu") == param(s, "mu") &&
         a2 * a2 * param(t, "alpha") == param(s, "alpha");
}

bool var7_holds(Scalar const& a1, Scalar const& a2, Scalar const& b1, Scalar const& b2,
                LiftingParams const& s, LiftingParams const& t) {
  auto P = [&](char const* k) { return param(t, k); };
  auto Q = [&](char const* k) { return param(s, k); };
  Scalar two(2);
  return a1 * a1 * P("lambda") + a1 * a2 * P("gamma") + a2 * a2 * P("alpha") == Q("lambda") &&
         a1 * a1 * P("mu") + a1 * a2 * P("eta") + a2 * a2 * P("beta") == Q("mu") &&
         b1 * b1 * P("lambda") + b1 * b2 * P("gamma") + b2 * b2 * P("alpha") == Q("alpha") &&
         b1 * b1 * P("mu") + b1 * b2 * P("eta") + b2 * b2 * P("beta") == Q("beta") &&
         two * a1 * b1 * P("lambda") + (a1 * b2 + a2 * b1) * P("gamma") +
                 two * a2 * b2 * P("alpha") ==
             Q("gamma") &&
         two * a1 * b1 * P("mu") + (a1 * b2 + a2 * b1) * P("eta") + two * a2 * b2 * P("beta") ==
             Q("eta");
}

// ---- variants ---------------------------------------------------------------

PresentedHopf flip_sign(PresentedHopf p, std::size_t relation, std::size_t term) {
  NcPoly const& r = p.relations.at(relation);
  if (term >= r.terms().size()) throw std::out_of_range("term index");
  auto it = std::next(r.terms().begin(), static_cast<std::ptrdiff_t>(term));
  NcPoly flipped = r;
  flipped.add(it->first, Scalar(-2) * it->second);
  p.relations[relation] = flipped;
  if (p.relation_text.size() == p.relations.size())
    p.relation_text[relation] += " [sign of " + p.alphabet.render(it->first) + " flipped]";
  return p;
}

namespace {

std::string flip_description(PresentedHopf const& p, std::size_t rel, std::size_t term) {
  auto it = std::next(p.relations[rel].terms().begin(), static_cast<std::ptrdiff_t>(term));
  std::string text = p.relation_text.size() == p.relations.size()
                         ? p.relation_text[rel]
                         : p.alphabet.render(p.relations[rel]) + " = 0";
  return text + ": sign of " + (it->first.empty() ? "1" : p.alphabet.render(it->first)) + " flipped";
}

}  // namespace

std::vector<SignVariant> nearest_sign_variants(LiftingParams const& p, std::size_t limit) {
  std::vector<SignVariant> out;
  Family const& f = family(p.family);
  PresentedHopf base = presentation(p);
  auto [lo, hi] = family_relation_range(f, base);
  for (std::size_t r = lo; r < hi && out.size() < limit; ++r)
    for (std::size_t t = 0; t < base.relations[r].terms().size() && out.size() < limit; ++t) {
      // A single-term relation only changes by an overall sign.
      if (base.relations[r].terms().size() < 2) break;
      SignVariant v;
      v.description = flip_description(base, r, t);
      v.report.params = p;
      v.report.variant = "sign variant";
      v.report.expected_dim = f.expected_dim;
      v.report.outcome = build_presented(flip_sign(base, r, t));
      if (v.report.pass()) out.push_back(std::move(v));
    }
  return out;
}

std::vector<SignVariant> sign_flip_sweep(LiftingParams const& p, BuildOptions const& opt) {
  Family const& f = family(p.family);
  PresentedHopf base = presentation(p);
  std::vector<SignVariant> out;
  // A single-term relation only changes by an overall sign.
  for (std::size_t r = 0; r < base.relations.size(); ++r) {
    if (base.relations[r].terms().size() < 2) continue;
    for (std::size_t t = 0; t < base.relations[r].terms().size(); ++t) {
      SignVariant v;
      v.description = flip_description(base, r, t);
      v.report.params = p;
      v.report.variant = "sign flip";
      v.report.expected_dim = f.expected_dim;
      v.report.outcome = build_presented(flip_sign(base, r, t), opt);
      out.push_back(std::move(v));
    }
  }
  return out;
}

SignVariant mutated_u11(unsigned seed, LiftingParams const& p) {
  if (p.family != "U1_1") throw std::invalid_argument("mutation test runs on U1_1");
  PresentedHopf base = presentation(p);
  std::vector<std::pair<std::size_t, std::size_t>> cand;
  for (std::size_t r = 0; r < base.relations.size(); ++r)
    if (base.relations[r].terms().size() >= 2)
      for (std::size_t t = 0; t < base.relations[r].terms().size(); ++t) cand.emplace_back(r, t);
  std::mt19937 rng(seed);
  auto [r, t] = cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(rng)];
  SignVariant v;
  v.description = flip_description(base, r, t);
  v.report.params = p;
  v.report.variant = "mutation";
  v.report.expected_dim = family("U1_1").expected_dim;
  v.report.outcome = build_presented(flip_sign(base, r, t));
  return v;
}

}  // namespace hopf::liftings
