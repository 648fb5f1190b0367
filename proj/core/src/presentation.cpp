#include "hopf/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hopf {

void TensorPoly::add(Word const& u, Word const& v, Scalar const& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.emplace(std::make_pair(u, v), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

std::string to_string(BuildErrorKind k) {
  switch (k) {
    case BuildErrorKind::None: return "ok";
    case BuildErrorKind::NonConfluent: return "NonConfluent";
    case BuildErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case BuildErrorKind::CoproductNotWellDefined: return "CoproductNotWellDefined";
    case BuildErrorKind::CounitNotWellDefined: return "CounitNotWellDefined";
    case BuildErrorKind::NoAntipode: return "NoAntipode";
    case BuildErrorKind::Collapsed: return "Collapsed";
  }
  return "?";
}

namespace {

// ---- expression parser -------------------------------------------------

struct Token {
  enum Kind { Num, Ident, Op, End } kind;
  std::string text;
  std::int64_t num = 0;
};

std::vector<Token> lex(std::string const& s, std::size_t line) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[k]);
    if (std::isspace(c)) {
      ++k;
    } else if (std::isdigit(c)) {
      std::size_t e = k;
      while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
      out.push_back({Token::Num, s.substr(k, e - k), std::stoll(s.substr(k, e - k))});
      k = e;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t e = k;
      while (e < s.size() && (std::isalnum(static_cast<unsigned char>(s[e])) || s[e] == '_')) ++e;
      out.push_back({Token::Ident, s.substr(k, e - k)});
      k = e;
    } else if (std::string("+-*/^()@=").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Token::Op, std::string(1, static_cast<char>(c))});
      ++k;
    } else {
      throw ParseError(line, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back({Token::End, ""});
  return out;
}

struct Value {
  bool tensor = false;
  NcPoly poly;
  TensorPoly tens;

  bool is_scalar() const {
    if (tensor) return false;
    for (auto const& [w, c] : poly.terms())
      if (!w.empty()) return false;
    return true;
  }
  Scalar scalar() const { return poly.coeff(Word()); }
};

class ExprParser {
 public:
  ExprParser(std::vector<Token> toks, Alphabet const& a,
             std::map<std::string, Scalar> const& params, std::size_t line)
      : t_(std::move(toks)), a_(a), params_(params), line_(line) {}

  Value parse_all() {
    Value v = sum();
    if (t_[k_].kind != Token::End) err("trailing input near '" + t_[k_].text + "'");
    return v;
  }

 private:
  [[noreturn]] void err(std::string const& m) const { throw ParseError(line_, m); }
  bool at_op(char c) const { return t_[k_].kind == Token::Op && t_[k_].text[0] == c; }

  static Value add(Value a, Value const& b, Scalar sign, ExprParser const& p) {
    if (a.tensor != b.tensor) {
      if (a.is_scalar() && a.scalar().is_zero()) return sign.is_one() ? b : neg(b);
      p.err("cannot add an algebra element and a tensor");
    }
    if (!a.tensor) {
      a.poly += b.poly * sign;
    } else {
      for (auto const& [uv, c] : b.tens.terms) a.tens.add(uv.first, uv.second, c * sign);
    }
    return a;
  }
  static Value neg(Value v) {
    if (!v.tensor) {
      v.poly *= Scalar(-1);
    } else {
      for (auto& [uv, c] : v.tens.terms) c = -c;
    }
    return v;
  }
  Value mul(Value const& a, Value const& b) const {
    Value r;
    if (!a.tensor && !b.tensor) {
      r.poly = a.poly * b.poly;
      return r;
    }
    r.tensor = true;
    if (!a.tensor || !b.tensor) {
      Value const& s = a.tensor ? b : a;
      Value const& t = a.tensor ? a : b;
      if (!s.is_scalar()) err("algebra element times tensor; use @ to form tensors");
      for (auto const& [uv, c] : t.tens.terms) r.tens.add(uv.first, uv.second, c * s.scalar());
      return r;
    }
    for (auto const& [uv, c] : a.tens.terms)
      for (auto const& [xy, d] : b.tens.terms)
        r.tens.add(uv.first + xy.first, uv.second + xy.second, c * d);
    return r;
  }

  Value sum() {
    Value v;
    bool first = true;
    while (true) {
      Scalar sign(1);
      if (at_op('+') || at_op('-')) {
        if (at_op('-')) sign = Scalar(-1);
        ++k_;
      } else if (!first) {
        break;
      }
      Value t = tens();
      v = first ? (sign.is_one() ? t : neg(t)) : add(v, t, sign, *this);
      first = false;
      if (!(at_op('+') || at_op('-'))) break;
    }
    return v;
  }

  Value tens() {
    Value l = prod();
    if (!at_op('@')) return l;
    ++k_;
    Value r = prod();
    if (l.tensor || r.tensor) err("nested tensor product");
    Value out;
    out.tensor = true;
    for (auto const& [u, c] : l.poly.terms())
      for (auto const& [v, d] : r.poly.terms()) out.tens.add(u, v, c * d);
    return out;
  }

  bool starts_atom() const {
    auto const& t = t_[k_];
    return t.kind == Token::Num || t.kind == Token::Ident || (t.kind == Token::Op && t.text[0] == '(');
  }

  Value prod() {
    Value v = unary();
    while (true) {
      if (at_op('*')) {
        ++k_;
        v = mul(v, unary());
      } else if (at_op('/')) {
        ++k_;
        Value d = unary();
        if (!d.is_scalar() || d.scalar().is_zero()) err("division by a non-scalar or zero");
        Value inv;
        inv.poly = NcPoly(d.scalar().inv());
        v = mul(v, inv);
      } else if (starts_atom()) {
        v = mul(v, unary());
      } else {
        break;
      }
    }
    return v;
  }

  Value unary() {
    if (at_op('-')) {
      ++k_;
      return neg(unary());
    }
    return power();
  }

  Value power() {
    Value base = atom();
    if (!at_op('^')) return base;
    ++k_;
    bool negexp = false;
    if (at_op('-')) {
      negexp = true;
      ++k_;
    }
    if (t_[k_].kind != Token::Num) err("exponent must be an integer");
    long e = static_cast<long>(t_[k_++].num);
    if (negexp) {
      if (!base.is_scalar()) err("negative exponent on a non-scalar");
      Value r;
      r.poly = NcPoly(base.scalar().pow(-e));
      return r;
    }
    Value r;
    r.poly = NcPoly(Scalar(1));
    for (long n = 0; n < e; ++n) r = mul(r, base);
    return r;
  }

  Value atom() {
    auto const& t = t_[k_];
    Value v;
    if (t.kind == Token::Num) {
      ++k_;
      v.poly = NcPoly(Scalar(t.num));
      return v;
    }
    if (t.kind == Token::Ident) {
      ++k_;
      if (t.text == "i") {
        v.poly = NcPoly(Scalar::i());
        return v;
      }
      int letter = a_.index(t.text);
      if (letter >= 0) {
        v.poly = NcPoly::word(Word(1, static_cast<char>(letter)));
        return v;
      }
      auto it = params_.find(t.text);
      if (it != params_.end()) {
        v.poly = NcPoly(it->second);
        return v;
      }
      err("unknown identifier '" + t.text + "' (juxtaposed letters need a space or *)");
    }
    if (at_op('(')) {
      ++k_;
      v = sum();
      if (!at_op(')')) err("expected ')'");
      ++k_;
      return v;
    }
    err("unexpected token '" + t.text + "'");
  }

  std::vector<Token> t_;
  Alphabet const& a_;
  std::map<std::string, Scalar> const& params_;
  std::size_t line_;
  std::size_t k_ = 0;
};

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_top(std::string const& s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

Value eval(std::string const& s, Alphabet const& a, std::map<std::string, Scalar> const& params,
           std::size_t line) {
  return ExprParser(lex(s, line), a, params, line).parse_all();
}

}  // namespace

NcPoly parse_polynomial(std::string const& text, Alphabet const& alphabet,
                        std::map<std::string, Scalar> const& params) {
  Value v = eval(text, alphabet, params, 0);
  if (v.tensor) throw ParseError(0, "expected an algebra element, got a tensor");
  return v.poly;
}

TensorPoly parse_tensor(std::string const& text, Alphabet const& alphabet,
                        std::map<std::string, Scalar> const& params) {
  Value v = eval(text, alphabet, params, 0);
  if (!v.tensor) throw ParseError(0, "expected a tensor (use @)");
  return v.tens;
}

PresentedHopf parse_presentation(std::string const& text,
                                 std::map<std::string, Scalar> const& overrides) {
  PresentedHopf p;
  enum class Sec { Header, Relations, Coproduct, Counit, Parameters } sec = Sec::Header;
  std::vector<std::string> light;
  std::vector<bool> have_co, have_eps;
  std::istringstream is(text);
  std::string raw;
  std::size_t line = 0;
  auto apply_overrides = [&] {
    for (auto const& [k, v] : overrides) {
      if (!p.parameters.count(k)) throw ParseError(line, "unknown parameter override " + k);
      p.parameters[k] = v;
    }
  };
  bool alphabet_ready = false;
  auto ready = [&] {
    if (alphabet_ready) return;
    if (p.alphabet.names.empty()) throw ParseError(line, "generators must be declared first");
    p.alphabet.weight.assign(p.alphabet.names.size(), 1);
    for (auto const& l : light) {
      int k = p.alphabet.index(l);
      if (k < 0) throw ParseError(line, "light letter " + l + " is not a generator");
      p.alphabet.weight[static_cast<std::size_t>(k)] = 0;
    }
    p.coproduct.assign(p.alphabet.names.size(), {});
    p.counit.assign(p.alphabet.names.size(), Scalar());
    have_co.assign(p.alphabet.names.size(), false);
    have_eps.assign(p.alphabet.names.size(), false);
    apply_overrides();
    alphabet_ready = true;
  };
  auto param_assign = [&](std::string const& item) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError(line, "parameter needs a value: " + item);
    std::string key = trim(item.substr(0, eq));
    Value v = eval(item.substr(eq + 1), Alphabet{}, p.parameters, line);
    if (!v.is_scalar()) throw ParseError(line, "parameter value must be a scalar");
    p.parameters[key] = v.scalar();
  };

  while (std::getline(is, raw)) {
    ++line;
    auto hash = raw.find('#');
    std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    if (s == "[relations]" || s == "relations:") {
      ready();
      sec = Sec::Relations;
      continue;
    }
    if (s == "[coproduct]") {
      ready();
      sec = Sec::Coproduct;
      continue;
    }
    if (s == "[counit]") {
      ready();
      sec = Sec::Counit;
      continue;
    }
    if (s == "[parameters]") {
      sec = Sec::Parameters;
      continue;
    }
    if (s.front() == '[') throw ParseError(line, "unknown section " + s);
    switch (sec) {
      case Sec::Header: {
        auto colon = s.find(':');
        if (colon == std::string::npos) throw ParseError(line, "expected 'key: value'");
        std::string key = trim(s.substr(0, colon)), val = trim(s.substr(colon + 1));
        std::istringstream vs(val);
        std::string item;
        if (key == "name") {
          p.name = val;
        } else if (key == "generators") {
          while (vs >> item) {
            if (item == "i") throw ParseError(line, "'i' is reserved for the imaginary unit");
            p.alphabet.names.push_back(item);
          }
        } else if (key == "light") {
          while (vs >> item) light.push_back(item);
        } else if (key == "parameters") {
          while (vs >> item) param_assign(item);
        } else if (key == "cap") {
          p.degree_cap = std::stoi(val);
        } else {
          throw ParseError(line, "unknown header key " + key);
        }
        break;
      }
      case Sec::Parameters:
        param_assign(s);
        break;
      case Sec::Relations: {
        auto parts = split_top(s, '=');
        if (parts.size() < 2) throw ParseError(line, "relation needs '='");
        std::vector<NcPoly> vals;
        for (auto const& part : parts) {
          Value v = eval(part, p.alphabet, p.parameters, line);
          if (v.tensor) throw ParseError(line, "tensor in a relation");
          vals.push_back(v.poly);
        }
        for (std::size_t k = 0; k + 1 < vals.size(); ++k) {
          p.relations.push_back(vals[k] - vals[k + 1]);
          p.relation_text.push_back(trim(parts[k]) + " = " + trim(parts[k + 1]));
        }
        break;
      }
      case Sec::Coproduct:
      case Sec::Counit: {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw ParseError(line, "expected 'generator = value'");
        std::string g = trim(s.substr(0, eq));
        int k = p.alphabet.index(g);
        if (k < 0) throw ParseError(line, "unknown generator " + g);
        Value v = eval(s.substr(eq + 1), p.alphabet, p.parameters, line);
        auto uk = static_cast<std::size_t>(k);
        if (sec == Sec::Coproduct) {
          if (!v.tensor) throw ParseError(line, "coproduct must be a tensor (use @)");
          p.coproduct[uk] = v.tens;
          have_co[uk] = true;
        } else {
          if (!v.is_scalar()) throw ParseError(line, "counit must be a scalar");
          p.counit[uk] = v.scalar();
          have_eps[uk] = true;
        }
        break;
      }
    }
  }
  ready();
  for (std::size_t k = 0; k < p.alphabet.names.size(); ++k) {
    if (!have_co[k]) throw ParseError(line, "missing coproduct for " + p.alphabet.names[k]);
    if (!have_eps[k]) throw ParseError(line, "missing counit for " + p.alphabet.names[k]);
  }
  return p;
}

RewriteSystem make_rewrite_system(PresentedHopf const& p) {
  RewriteSystem rs(p.alphabet, p.degree_cap);
  for (auto const& r : p.relations) rs.add_relation(r);
  return rs;
}

Vec evaluate(HopfData const& h, std::vector<Vec> const& letter_images, NcPoly const& poly) {
  Vec out(h.dim());
  for (auto const& [w, c] : poly.terms()) {
    SVec v = to_sparse(h.unit());
    for (char ch : w) v = h.mul(v, to_sparse(letter_images[static_cast<unsigned char>(ch)]));
    for (auto const& [k, d] : v) out[k] += c * d;
  }
  return out;
}

BuildOutcome build_presented(PresentedHopf const& p, BuildOptions const& opt) {
  BuildOutcome out;
  auto const& alpha = p.alphabet;
  std::size_t nl = alpha.names.size();
  try {
    RewriteSystem rs = make_rewrite_system(p);
    if (rs.collapsed()) {
      out.error = BuildErrorKind::Collapsed;
      out.message = "a relation reduces to a nonzero constant";
      return out;
    }
    out.confluence = rs.confluence_check();
    if (!out.confluence.confluent()) {
      auto const& u = out.confluence.unresolved.front();
      out.error = BuildErrorKind::NonConfluent;
      out.message = std::to_string(out.confluence.unresolved.size()) +
                    " unresolved overlaps, first at " + alpha.render(u.word) + ": " +
                    alpha.render(u.difference);
    }
    std::vector<Word> basis = rs.irreducible_words();
    // Order by letter counts from the highest-precedence letter down.
    auto key = [&](Word const& w) {
      std::vector<int> k(nl, 0);
      for (char c : w) ++k[nl - 1 - static_cast<unsigned char>(c)];
      return k;
    };
    std::stable_sort(basis.begin(), basis.end(), [&](Word const& a, Word const& b) {
      auto ka = key(a), kb = key(b);
      if (ka != kb) return ka < kb;
      return a < b;
    });
    out.basis = basis;
    if (out.error != BuildErrorKind::None) return out;

    std::size_t n = basis.size();
    std::unordered_map<Word, std::uint32_t> index;
    for (std::size_t k = 0; k < n; ++k) index[basis[k]] = static_cast<std::uint32_t>(k);
    auto to_vec = [&](NcPoly const& poly) {
      SVec v;
      for (auto const& [w, c] : poly.terms()) {
        auto it = index.find(w);
        if (it == index.end())
          throw RewriteError(RewriteError::Kind::Inconsistent,
                             "normal form leaves the basis: " + alpha.render(w));
        v.emplace_back(it->second, c);
      }
      std::sort(v.begin(), v.end(), [](auto const& a, auto const& b) { return a.first < b.first; });
      return v;
    };

    HopfData h(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) h.set_prod(a, b, to_vec(rs.normal_form(basis[a] + basis[b])));
    h.set_unit(unit_vector(n, index.at(Word())));
    std::vector<std::string> labels;
    for (auto const& w : basis) labels.push_back(alpha.render(w));
    h.set_labels(labels);

    std::vector<Vec> letters(nl);
    std::vector<Tensor2> dletter(nl);
    for (std::size_t l = 0; l < nl; ++l) {
      letters[l] = to_dense(to_vec(rs.normal_form(Word(1, static_cast<char>(l)))), n);
      Tensor2 t;
      for (auto const& [uv, c] : p.coproduct[l].terms) {
        SVec u = to_vec(rs.normal_form(uv.first)), v = to_vec(rs.normal_form(uv.second));
        for (auto const& [i, ci] : u)
          for (auto const& [j, cj] : v) t.push_back({i, j, c * ci * cj});
      }
      canonicalize(t);
      dletter[l] = std::move(t);
    }
    Tensor2 one{{index.at(Word()), index.at(Word()), Scalar(1)}};
    auto delta_word = [&](Word const& w) {
      Tensor2 t = one;
      for (char c : w) t = h.tensor_mul(t, dletter[static_cast<unsigned char>(c)]);
      return t;
    };
    auto eps_word = [&](Word const& w) {
      Scalar s(1);
      for (char c : w) s *= p.counit[static_cast<unsigned char>(c)];
      return s;
    };

    // Delta(rel) must vanish in A (x) A and eps(rel) in the field.
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
      Tensor2 acc;
      Scalar e;
      for (auto const& [w, c] : p.relations[r].terms()) {
        for (auto t : delta_word(w)) {
          t.c *= c;
          acc.push_back(t);
        }
        e += c * eps_word(w);
      }
      canonicalize(acc);
      std::string text = r < p.relation_text.size() ? p.relation_text[r] : alpha.render(p.relations[r]);
      if (!acc.empty()) {
        out.error = BuildErrorKind::CoproductNotWellDefined;
        out.message = "Delta does not respect '" + text + "': residual " + h.render(acc);
        return out;
      }
      if (!e.is_zero()) {
        out.error = BuildErrorKind::CounitNotWellDefined;
        out.message = "counit does not respect '" + text + "'";
        return out;
      }
    }

    Vec counit(n);
    for (std::size_t k = 0; k < n; ++k) {
      counit[k] = eps_word(basis[k]);
      // Delta on basis words, built from the last letter inward.
      h.set_coprod(k, k == index.at(Word()) ? one : Tensor2{});
    }
    std::vector<std::size_t> by_len(n);
    std::iota(by_len.begin(), by_len.end(), 0);
    std::stable_sort(by_len.begin(), by_len.end(),
                     [&](auto a, auto b) { return basis[a].size() < basis[b].size(); });
    for (auto k : by_len) {
      Word const& w = basis[k];
      if (w.empty()) continue;
      Tensor2 rest = h.coprod(index.at(w.substr(1)));
      h.set_coprod(k, h.tensor_mul(dletter[static_cast<unsigned char>(w[0])], rest));
    }
    h.set_counit(counit);

    GeneratorData gd;
    gd.names = alpha.names;
    gd.vectors = letters;
    for (auto const& w : basis) {
      std::vector<int> lw;
      for (char c : w) lw.push_back(static_cast<unsigned char>(c));
      gd.words.push_back(lw);
    }
    h.set_generators(gd);

    if (opt.solve_antipode) {
      try {
        h.set_antipode(solve_antipode(h));
      } catch (NoAntipode const& e) {
        out.error = BuildErrorKind::NoAntipode;
        out.message = e.what();
        out.hopf = std::move(h);
        return out;
      }
    }
    if (opt.verify) out.axioms = verify_hopf(h, opt.verify_options);
    out.hopf = std::move(h);
  } catch (RewriteError const& e) {
    out.error = e.kind == RewriteError::Kind::DegreeCapExceeded ? BuildErrorKind::DegreeCapExceeded
                                                                : BuildErrorKind::NonConfluent;
    out.message = e.what();
  }
  return out;
}

HopfData build_hopf(PresentedHopf const& p, BuildOptions const& opt) {
  BuildOutcome o = build_presented(p, opt);
  if (o.error != BuildErrorKind::None) throw BuildError(o.error, o.message);
  if (o.axioms && !o.axioms->pass())
    throw BuildError(BuildErrorKind::None, "axioms fail: " + o.axioms->summary());
  return std::move(*o.hopf);
}

}  // namespace hopf
