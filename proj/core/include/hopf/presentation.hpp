#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopf/hopf_data.hpp"
#include "hopf/rewriting.hpp"

namespace hopf {

// Element of the free algebra on the doubled alphabet: sum of c * u (x) v.
struct TensorPoly {
  std::map<std::pair<Word, Word>, Scalar> terms;
  void add(Word const& u, Word const& v, Scalar const& c);
};

struct PresentedHopf {
  Alphabet alphabet;
  std::vector<NcPoly> relations;     // each means rel = 0
  std::vector<std::string> relation_text;
  std::vector<TensorPoly> coproduct;  // per letter
  std::vector<Scalar> counit;         // per letter
  std::map<std::string, Scalar> parameters;
  int degree_cap = 12;
  std::string name;
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t line, std::string const& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
  std::size_t line;
};

// Text format (see docs/presentation-format.md):
//
//   name: U11
//   generators: p q x y t        # precedence, lowest first
//   light: x y                   # weight-zero letters
//   parameters: lambda=1 mu=0
//   relations:
//   x^4 = 1
//   p^2 = q^2 = lambda*(1 - x^2)
//   [coproduct]
//   t = 1/2*((1 + y) t @ t + (1 - y) t @ x^2 t)
//   [counit]
//   t = 1
//
// `overrides` replaces parameter defaults before relations are evaluated.
PresentedHopf parse_presentation(std::string const& text,
                                 std::map<std::string, Scalar> const& overrides = {});

// Parses one algebra-valued expression in the grammar above.
NcPoly parse_polynomial(std::string const& text, Alphabet const& alphabet,
                        std::map<std::string, Scalar> const& params = {});
// Parses one tensor-valued expression such as "x @ x + 1/2*(t @ y t)".
TensorPoly parse_tensor(std::string const& text, Alphabet const& alphabet,
                        std::map<std::string, Scalar> const& params = {});

enum class BuildErrorKind {
  None,
  NonConfluent,
  DegreeCapExceeded,
  CoproductNotWellDefined,
  CounitNotWellDefined,
  NoAntipode,
  Collapsed,
};
std::string to_string(BuildErrorKind k);

struct BuildOptions {
  bool solve_antipode = true;
  bool verify = true;
  VerifyOptions verify_options{};
};

struct BuildOutcome {
  BuildErrorKind error = BuildErrorKind::None;
  std::string message;
  ConfluenceReport confluence;
  std::vector<Word> basis;
  std::optional<HopfData> hopf;
  std::optional<AxiomReport> axioms;
  bool ok() const { return error == BuildErrorKind::None && (!axioms || axioms->pass()); }
};

struct BuildError : std::runtime_error {
  BuildError(BuildErrorKind k, std::string const& m) : std::runtime_error(m), kind(k) {}
  BuildErrorKind kind;
};

RewriteSystem make_rewrite_system(PresentedHopf const& p);
BuildOutcome build_presented(PresentedHopf const& p, BuildOptions const& opt = {});
// Throws BuildError on any failure, including failed axioms.
HopfData build_hopf(PresentedHopf const& p, BuildOptions const& opt = {});

// Evaluates a polynomial in the letters of `p` inside its built algebra.
Vec evaluate(HopfData const& h, std::vector<Vec> const& letter_images, NcPoly const& poly);

}  // namespace hopf
