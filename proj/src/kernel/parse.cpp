#include "rspec/kernel/parse.hpp"

#include <cctype>

namespace rspec {

namespace {

class ExprParser {
 public:
  ExprParser(const Ring& ring, std::string_view s) : ring_(ring), pa_(ring.arith()), s_(s) {}

  Poly run() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("operator or end of expression");
    return ring_.reduce(p);
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& expected) {
    skip();
    std::string found = pos_ < s_.size() ? "'" + std::string(1, s_[pos_]) + "'" : "end of input";
    throw ParseError(pos_, expected, found);
  }

  Poly expr() {
    Poly r;
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    r = term();
    if (neg) r = pa_.neg(r);
    for (;;) {
      if (accept('+')) r = pa_.add(r, term());
      else if (accept('-')) r = pa_.sub(r, term());
      else return r;
    }
  }

  Poly term() {
    Poly r = power();
    for (;;) {
      if (accept('*')) {
        r = pa_.mul(r, power());
      } else if (accept('/')) {
        std::size_t at = pos_;
        Poly d = power();
        if (d.is_zero() || !d.is_constant()) throw ParseError(at, "nonzero constant divisor", "non-constant");
        mpq_class c = d.lead().coef;
        r = pa_.scale(r, 1 / c);
      } else {
        return r;
      }
    }
  }

  Poly power() {
    Poly b = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent");
      if (pos_ - start > 6) throw ParseError(start, "small exponent", "exponent too large");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      Poly r = pa_.constant(1);
      for (unsigned k = 0; k < e; ++k) r = ring_.reduce(pa_.mul(r, b));
      return r;
    }
    return b;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("number, variable or '('");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly r = expr();
      if (!accept(')')) fail("')'");
      return r;
    }
    if (c == '-') {
      ++pos_;
      return pa_.neg(power());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return pa_.constant(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      const auto& vars = ring_.vars();
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == name) return pa_.variable(i);
      }
      throw ParseError(start, "variable of " + ring_.to_string(), "'" + name + "'");
    }
    fail("number, variable or '('");
  }

  const Ring& ring_;
  const PolyArith& pa_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const Ring& ring, std::string_view text) {
  try {
    return ExprParser(ring, text).run();
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ParseError(0, "valid coefficient", e.what());
  }
}

}  // namespace rspec
