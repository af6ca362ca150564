#pragma once

// Query syntax, e.g.  [A1F T1 T1 T2] * y1^2 * yd^30
//
//   expr        := class_group (('*' | '.') monomial)*
//   class_group := '[' atom+ ']'
//   atom        := 'T' INT | 'A1F' | 'A1L' | 'PA1(' INT ')' | 'A2F' | 'A2L'
//                | 'A1A1' | 'PA3' | 'A3F'
//   monomial    := ('y1' | 'yd' | 'b' INT | 'a' INT) ('^' INT)?

#include <string>
#include <string_view>
#include <vector>

namespace curvecount {

enum class AtomKind { T, A1F, A1L, PA1, A2F, A2L, A1A1, PA3, A3F };

struct Atom {
  AtomKind kind = AtomKind::T;
  int order = 0;  // k for T, r for PA1

  friend bool operator==(const Atom&, const Atom&) = default;
};

enum class Var { Y1, Yd, B, A };

struct Factor {
  Var var = Var::Y1;
  int index = 0;  // for b and a
  int exponent = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

struct ClassExpr {
  std::vector<Atom> atoms;
  std::vector<Factor> factors;

  /// Tangency orders of the T atoms, in order of appearance.
  std::vector<int> profile() const;

  friend bool operator==(const ClassExpr&, const ClassExpr&) = default;
};

/// Throws ParseError carrying the offending offset.
ClassExpr parse(std::string_view src);
std::string print(const ClassExpr& expr);
std::string print(const Atom& atom);

}  // namespace curvecount
