#include "hopf/rewriting.hpp"

#include <algorithm>
#include <sstream>

namespace hopf {

NcPoly::NcPoly(Scalar c) {
  if (!c.is_zero()) t_.emplace(Word(), c);
}

NcPoly NcPoly::word(Word const& w, Scalar c) {
  NcPoly p;
  p.add(w, c);
  return p;
}

void NcPoly::add(Word const& w, Scalar const& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Scalar NcPoly::coeff(Word const& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? Scalar() : it->second;
}

NcPoly& NcPoly::operator+=(NcPoly const& o) {
  for (auto const& [w, c] : o.t_) add(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(NcPoly const& o) {
  for (auto const& [w, c] : o.t_) add(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(Scalar const& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [w, c] : t_) c *= s;
  return *this;
}

NcPoly operator*(NcPoly const& a, NcPoly const& b) {
  NcPoly r;
  for (auto const& [u, c] : a.t_)
    for (auto const& [v, d] : b.t_) r.add(u + v, c * d);
  return r;
}

int Alphabet::index(std::string const& name) const {
  for (std::size_t k = 0; k < names.size(); ++k)
    if (names[k] == name) return static_cast<int>(k);
  return -1;
}

std::string Alphabet::render(Word const& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size();) {
    std::size_t run = 1;
    while (k + run < w.size() && w[k + run] == w[k]) ++run;
    if (!out.empty()) out += " ";
    out += names[static_cast<unsigned char>(w[k])];
    if (run > 1) out += "^" + std::to_string(run);
    k += run;
  }
  return out;
}

std::string Alphabet::render(NcPoly const& p) const {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto const& [w, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    if (c.is_one())
      out += render(w);
    else if (w.empty())
      out += "(" + c.str() + ")";
    else
      out += "(" + c.str() + ")" + render(w);
  }
  return out;
}

Word Alphabet::parse_word(std::string const& spaced) const {
  std::istringstream is(spaced);
  Word w;
  std::string tok;
  while (is >> tok) {
    int k = index(tok);
    if (k < 0) throw std::invalid_argument("unknown letter " + tok);
    w.push_back(static_cast<char>(k));
  }
  return w;
}

int TermOrder::weight(Word const& w) const {
  int s = 0;
  for (char c : w) s += alphabet->weight[static_cast<unsigned char>(c)];
  return s;
}

namespace {

long inversions(Word const& w) {
  long n = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (static_cast<unsigned char>(w[i]) > static_cast<unsigned char>(w[j])) ++n;
  return n;
}

}  // namespace

bool TermOrder::less(Word const& u, Word const& v) const {
  int wu = weight(u), wv = weight(v);
  if (wu != wv) return wu < wv;
  long iu = inversions(u), iv = inversions(v);
  if (iu != iv) return iu < iv;
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t k = 0; k < u.size(); ++k)
    if (u[k] != v[k]) return static_cast<unsigned char>(u[k]) < static_cast<unsigned char>(v[k]);
  return false;
}

RewriteSystem::RewriteSystem(Alphabet alphabet, int degree_cap)
    : alpha_(std::move(alphabet)), cap_(degree_cap) {
  if (alpha_.weight.empty()) alpha_.weight.assign(alpha_.names.size(), 1);
  order_.alphabet = &alpha_;
}

bool RewriteSystem::add_relation(NcPoly const& rel) {
  std::vector<NcPoly> queue{rel};
  bool added_any = false;
  while (!queue.empty()) {
    NcPoly p = normal_form(queue.back());
    queue.pop_back();
    if (p.is_zero()) continue;
    Word lead;
    bool have = false;
    for (auto const& [w, c] : p.terms())
      if (!have || order_.less(lead, w)) {
        lead = w;
        have = true;
      }
    if (lead.empty()) {
      collapsed_ = true;
      continue;
    }
    Scalar lc = p.coeff(lead);
    NcPoly tail = p;
    tail.add(lead, -lc);
    tail *= -lc.inv();
    std::vector<Rule> keep;
    for (auto& r : rules_) {
      if (r.lead.find(lead) != Word::npos) {
        NcPoly back = NcPoly::word(r.lead) - r.tail;
        queue.push_back(back);
      } else {
        keep.push_back(std::move(r));
      }
    }
    rules_ = std::move(keep);
    rules_.push_back({lead, tail});
    memo_.clear();
    added_any = true;
  }
  return added_any;
}

std::vector<std::pair<Word, Scalar>> const& RewriteSystem::nf_word(Word const& w) const {
  auto hit = memo_.find(w);
  if (hit != memo_.end()) return hit->second;
  if (w.size() > max_length() || order_.weight(w) > cap_)
    throw RewriteError(RewriteError::Kind::DegreeCapExceeded,
                       "word exceeds degree cap: " + alpha_.render(w));
  if (!active_.insert(w).second)
    throw RewriteError(RewriteError::Kind::NonTerminating,
                       "reduction cycle at " + alpha_.render(w));
  std::size_t best = Word::npos, which = 0;
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    auto pos = w.find(rules_[r].lead);
    if (pos < best) {
      best = pos;
      which = r;
    }
  }
  std::vector<std::pair<Word, Scalar>> out;
  try {
    if (best == Word::npos) {
      out.emplace_back(w, Scalar(1));
    } else {
      auto const& rule = rules_[which];
      Word pre = w.substr(0, best), post = w.substr(best + rule.lead.size());
      std::map<Word, Scalar> acc;
      for (auto const& [tw, tc] : rule.tail.terms())
        for (auto const& [v, c] : nf_word(pre + tw + post)) {
          auto& slot = acc[v];
          slot += tc * c;
        }
      for (auto const& [v, c] : acc)
        if (!c.is_zero()) out.emplace_back(v, c);
    }
  } catch (...) {
    active_.erase(w);
    throw;
  }
  active_.erase(w);
  return memo_.emplace(w, std::move(out)).first->second;
}

NcPoly RewriteSystem::normal_form(Word const& w) const {
  NcPoly r;
  for (auto const& [v, c] : nf_word(w)) r.add(v, c);
  return r;
}

NcPoly RewriteSystem::normal_form(NcPoly const& p) const {
  NcPoly r;
  for (auto const& [w, c] : p.terms())
    for (auto const& [v, d] : nf_word(w)) r.add(v, c * d);
  return r;
}

bool RewriteSystem::irreducible(Word const& w) const {
  for (auto const& r : rules_)
    if (w.find(r.lead) != Word::npos) return false;
  return true;
}

ConfluenceReport RewriteSystem::confluence_check() const {
  ConfluenceReport rep;
  auto resolve = [&](Word const& w, NcPoly const& one, NcPoly const& two, std::size_t i,
                     std::size_t j) {
    if (order_.weight(w) > cap_) {
      ++rep.skipped_by_cap;
      return;
    }
    ++rep.overlaps_checked;
    NcPoly d = normal_form(one) - normal_form(two);
    if (!d.is_zero()) rep.unresolved.push_back({w, d, i, j});
  };
  for (std::size_t i = 0; i < rules_.size(); ++i)
    for (std::size_t j = 0; j < rules_.size(); ++j) {
      Word const& a = rules_[i].lead;
      Word const& b = rules_[j].lead;
      for (std::size_t k = 1; k < a.size() && k < b.size(); ++k) {
        if (a.compare(a.size() - k, k, b, 0, k) != 0) continue;
        Word w = a + b.substr(k);
        NcPoly one = rules_[i].tail * NcPoly::word(b.substr(k));
        NcPoly two = NcPoly::word(a.substr(0, a.size() - k)) * rules_[j].tail;
        resolve(w, one, two, i, j);
      }
      if (i != j && b.size() <= a.size()) {
        for (auto pos = a.find(b); pos != Word::npos; pos = a.find(b, pos + 1)) {
          NcPoly two = NcPoly::word(a.substr(0, pos)) * rules_[j].tail *
                       NcPoly::word(a.substr(pos + b.size()));
          resolve(a, rules_[i].tail, two, i, j);
        }
      }
    }
  return rep;
}

std::vector<Word> RewriteSystem::irreducible_words() const {
  std::vector<Word> out{Word()};
  std::vector<Word> level{Word()};
  const std::size_t limit = 200000;
  while (!level.empty()) {
    std::vector<Word> next;
    for (auto const& w : level)
      for (std::size_t a = 0; a < alpha_.names.size(); ++a) {
        Word v = w + static_cast<char>(a);
        bool ok = true;
        for (auto const& r : rules_)
          if (r.lead.size() <= v.size() &&
              v.compare(v.size() - r.lead.size(), r.lead.size(), r.lead) == 0) {
            ok = false;
            break;
          }
        if (!ok) continue;
        if (order_.weight(v) > cap_ || v.size() > max_length())
          throw RewriteError(RewriteError::Kind::DegreeCapExceeded,
                             "irreducible words reach the degree cap, e.g. " + alpha_.render(v));
        next.push_back(std::move(v));
      }
    out.insert(out.end(), next.begin(), next.end());
    if (out.size() > limit)
      throw RewriteError(RewriteError::Kind::DegreeCapExceeded, "too many irreducible words");
    level = std::move(next);
  }
  return out;
}

}  // namespace hopf
