#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hopf/scalar.hpp"

namespace hopf {

// A word is a string whose chars are letter indices into an alphabet.
using Word = std::string;

// Noncommutative polynomial: word -> nonzero coefficient.
class NcPoly {
 public:
  NcPoly() = default;
  NcPoly(Scalar c);  // NOLINT(implicit) constant polynomial
  static NcPoly word(Word const& w, Scalar c = Scalar(1));

  std::map<Word, Scalar> const& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add(Word const& w, Scalar const& c);
  Scalar coeff(Word const& w) const;

  NcPoly& operator+=(NcPoly const& o);
  NcPoly& operator-=(NcPoly const& o);
  NcPoly& operator*=(Scalar const& s);
  friend NcPoly operator+(NcPoly a, NcPoly const& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, NcPoly const& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, Scalar const& s) { return a *= s; }
  friend NcPoly operator*(Scalar const& s, NcPoly a) { return a *= s; }
  friend NcPoly operator*(NcPoly const& a, NcPoly const& b);
  friend bool operator==(NcPoly const& a, NcPoly const& b) { return a.t_ == b.t_; }

 private:
  std::map<Word, Scalar> t_;
};

// Alphabet with a precedence (index order, smallest first) and weights.
struct Alphabet {
  std::vector<std::string> names;
  std::vector<int> weight;  // 0 for "light" letters

  int index(std::string const& name) const;  // -1 if absent
  std::string render(Word const& w) const;
  std::string render(NcPoly const& p) const;
  Word parse_word(std::string const& spaced) const;  // "p q x x t"
};

// Monomial order: weighted degree, then number of inversions against the
// letter precedence, then length, then left-to-right comparison.
struct TermOrder {
  Alphabet const* alphabet = nullptr;
  int weight(Word const& w) const;
  bool less(Word const& u, Word const& v) const;
};

struct RewriteError : std::runtime_error {
  enum class Kind { DegreeCapExceeded, NonTerminating, Inconsistent };
  RewriteError(Kind k, std::string const& msg) : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

struct Rule {
  Word lead;
  NcPoly tail;  // lead -> tail
};

struct Overlap {
  Word word;
  NcPoly difference;  // nf(route one) - nf(route two), nonzero
  std::size_t rule1, rule2;
};

struct ConfluenceReport {
  std::size_t overlaps_checked = 0;
  std::size_t skipped_by_cap = 0;
  std::vector<Overlap> unresolved;
  bool confluent() const { return unresolved.empty(); }
};

class RewriteSystem {
 public:
  RewriteSystem(Alphabet alphabet, int degree_cap = 12);

  // Orients lhs - rhs = 0 after reducing it by the current rules.
  // Returns false when the relation reduces to zero.
  bool add_relation(NcPoly const& rel);

  Alphabet const& alphabet() const { return alpha_; }
  TermOrder const& order() const { return order_; }
  std::vector<Rule> const& rules() const { return rules_; }
  int degree_cap() const { return cap_; }

  NcPoly normal_form(NcPoly const& p) const;
  NcPoly normal_form(Word const& w) const;
  bool irreducible(Word const& w) const;

  ConfluenceReport confluence_check() const;
  // Irreducible words in order of (length, lexicographic); throws
  // DegreeCapExceeded when one reaches the cap.
  std::vector<Word> irreducible_words() const;

  // Set when a relation reduced to a nonzero constant (algebra is zero).
  bool collapsed() const { return collapsed_; }

 private:
  std::vector<std::pair<Word, Scalar>> const& nf_word(Word const& w) const;
  std::size_t max_length() const { return static_cast<std::size_t>(4 * cap_ + 8); }

  Alphabet alpha_;
  TermOrder order_;
  int cap_;
  std::vector<Rule> rules_;
  bool collapsed_ = false;
  mutable std::unordered_map<Word, std::vector<std::pair<Word, Scalar>>> memo_;
  mutable std::unordered_set<Word> active_;
};

}  // namespace hopf
