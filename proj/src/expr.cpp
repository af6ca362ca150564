#include "curvecount/expr.hpp"

#include <cctype>
#include <climits>

#include "curvecount/errors.hpp"

namespace curvecount {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ClassExpr run() {
    ClassExpr out;
    skip_ws();
    if (peek() != '[') fail("expected '['");
    ++pos_;
    skip_ws();
    while (!at_end() && peek() != ']') {
      out.atoms.push_back(atom());
      skip_ws();
    }
    if (at_end()) fail("unterminated class group");
    if (out.atoms.empty()) fail("empty class group");
    ++pos_;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      if (peek() != '*' && peek() != '.') fail("expected '*' or '.'");
      ++pos_;
      skip_ws();
      if (peek() == '[') fail("duplicate class group");
      out.factors.push_back(monomial());
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool take(std::string_view word) {
    if (src_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  int integer(const char* what) {
    const std::size_t start = pos_;
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > INT_MAX / 2) {
        pos_ = start;
        fail(std::string(what) + " too large");
      }
      ++pos_;
    }
    if (pos_ == start) fail(std::string("expected ") + what);
    return static_cast<int>(value);
  }

  Atom atom() {
    if (take("A1A1")) return {AtomKind::A1A1, 0};
    if (take("A1F")) return {AtomKind::A1F, 0};
    if (take("A1L")) return {AtomKind::A1L, 0};
    if (take("A2F")) return {AtomKind::A2F, 0};
    if (take("A2L")) return {AtomKind::A2L, 0};
    if (take("A3F")) return {AtomKind::A3F, 0};
    if (take("PA3")) return {AtomKind::PA3, 0};
    if (take("PA1(")) {
      skip_ws();
      const int r = integer("branch order");
      skip_ws();
      if (!take(")")) fail("expected ')'");
      return {AtomKind::PA1, r};
    }
    if (take("T")) return {AtomKind::T, integer("tangency order")};
    fail("unknown class atom");
  }

  void index(Factor& f) {
    const std::size_t start = pos_;
    f.index = integer("point index");
    if (f.index < 1) {
      pos_ = start;
      fail("point indices start at 1");
    }
  }

  Factor monomial() {
    Factor f;
    if (take("y1")) {
      f.var = Var::Y1;
    } else if (take("yd")) {
      f.var = Var::Yd;
    } else if (take("b")) {
      f.var = Var::B;
      index(f);
    } else if (take("a")) {
      f.var = Var::A;
      index(f);
    } else {
      fail("expected y1, yd, b<j> or a<i>");
    }
    skip_ws();
    if (take("^")) {
      skip_ws();
      f.exponent = integer("exponent");
    }
    return f;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<int> ClassExpr::profile() const {
  std::vector<int> ks;
  for (const Atom& a : atoms)
    if (a.kind == AtomKind::T) ks.push_back(a.order);
  return ks;
}

ClassExpr parse(std::string_view src) { return Parser(src).run(); }

std::string print(const Atom& atom) {
  switch (atom.kind) {
    case AtomKind::T: return "T" + std::to_string(atom.order);
    case AtomKind::A1F: return "A1F";
    case AtomKind::A1L: return "A1L";
    case AtomKind::PA1: return "PA1(" + std::to_string(atom.order) + ")";
    case AtomKind::A2F: return "A2F";
    case AtomKind::A2L: return "A2L";
    case AtomKind::A1A1: return "A1A1";
    case AtomKind::PA3: return "PA3";
    case AtomKind::A3F: return "A3F";
  }
  return "?";
}

std::string print(const ClassExpr& expr) {
  std::string out = "[";
  for (std::size_t i = 0; i < expr.atoms.size(); ++i) {
    if (i) out += ' ';
    out += print(expr.atoms[i]);
  }
  out += ']';
  for (const Factor& f : expr.factors) {
    out += " * ";
    switch (f.var) {
      case Var::Y1: out += "y1"; break;
      case Var::Yd: out += "yd"; break;
      case Var::B: out += "b" + std::to_string(f.index); break;
      case Var::A: out += "a" + std::to_string(f.index); break;
    }
    if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

}  // namespace curvecount
