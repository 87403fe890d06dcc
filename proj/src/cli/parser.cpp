#include "nodal/cli/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace nodal {

namespace {

class Parser {
 public:
  Parser(std::string_view text, VarSet vars) : s_(text), vars_(vars) {}

  QPoly parse() {
    QPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("'+', '-', '*', '^' or end of input");
    return p;
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
  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = pos_ < s_.size() ? "'" + std::string(1, s_[pos_]) + "'" : "end of input";
    throw Error(ErrorKind::SyntaxError,
                "at position " + std::to_string(pos_) + ": expected " + expected + ", found " + found);
  }
  bool peek_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  BigInt integer() {
    if (!peek_digit()) fail("integer");
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  QPoly expr() {
    QPoly acc = term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }
  QPoly term() {
    QPoly acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }
  QPoly unary() {
    if (accept('-')) return -unary();
    return power();
  }
  QPoly power() {
    QPoly base = atom();
    if (!accept('^')) return base;
    skip();
    if (!peek_digit()) fail("non-negative integer exponent");
    BigInt e = integer();
    if (e > 255) throw Error(ErrorKind::ExponentOverflow, "exponent " + e.get_str() + " is too large");
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') fail("'+', '-', '*', ')' or end of input (use parentheses for a power of a power)");
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }
  QPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("number, variable or '('");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num = integer();
      BigInt den = 1;
      if (accept('/')) {
        den = integer();
        if (den == 0) throw Error(ErrorKind::SyntaxError, "zero denominator at position " + std::to_string(pos_));
      }
      return QPoly::constant(vars_, {}, make_rational(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      auto idx = vars_.index_of(name);
      if (!idx) {
        std::string allowed;
        for (const auto& n : vars_.names()) allowed += (allowed.empty() ? "" : ", ") + n;
        throw Error(ErrorKind::UnknownVariable,
                    "unknown variable '" + std::string(name) + "' at position " + std::to_string(start) +
                        " (allowed: " + allowed + ")");
      }
      return QPoly::variable(vars_, *idx);
    }
    if (accept('(')) {
      QPoly inner = expr();
      if (!accept(')')) fail("')'");
      return inner;
    }
    fail("number, variable or '('");
  }

  std::string_view s_;
  VarSet vars_;
  std::size_t pos_ = 0;
};

}  // namespace

QPoly parse_poly(std::string_view text, VarSet alphabet) { return Parser(text, alphabet).parse(); }

std::string read_expression_source(const std::string& source) {
  std::ifstream in(source);
  if (!in) return source;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace nodal
