#include "dkit/cli/parse.hpp"

#include <algorithm>
#include <cctype>

namespace dkit::cli {

namespace {

class Parser {
 public:
  Parser(const std::string& src, const std::vector<std::string>& vars) : s_(src), vars_(vars) {}

  MultiPoly run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(unexpected(), pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string unexpected() const {
    if (pos_ >= s_.size()) return "unexpected end of input";
    return std::string("unexpected '") + s_[pos_] + "'";
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (true) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (eat('*')) acc = acc * unary();
    return acc;
  }

  MultiPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (!eat('^')) return base;
    skip();
    if (pos_ < s_.size() && s_[pos_] == '-') throw ParseError("negative exponent", pos_);
    const std::size_t at = pos_;
    Integer e = integer();
    if (!e.fits_uint_p() || e > 1000) throw ParseError("exponent too large", at);
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  Integer integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return Integer(s_.substr(start, pos_ - start));
  }

  MultiPoly primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    const std::size_t nv = vars_.size();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q(integer());
      if (eat('/')) {
        const std::size_t at = pos_;
        Integer d = integer();
        if (d == 0) throw ParseError("zero denominator", at);
        q /= Rational(d);
      }
      if (pos_ < s_.size() && s_[pos_] == '.') throw ParseError("floating literals are not allowed", pos_);
      return MultiPoly::constant(nv, GaussianRational(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (name == "i") return MultiPoly::constant(nv, GaussianRational::i());
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", start);
      return MultiPoly::variable(nv, static_cast<std::size_t>(it - vars_.begin()));
    }
    throw ParseError(unexpected(), pos_);
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& src, const std::vector<std::string>& vars) {
  if (std::find(vars.begin(), vars.end(), "i") != vars.end()) {
    throw ParseError("'i' is reserved for the imaginary unit", 0);
  }
  return Parser(src, vars).run();
}

}  // namespace dkit::cli
