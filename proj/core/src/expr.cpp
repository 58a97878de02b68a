#include "expr.hpp"

#include <cctype>
#include <stdexcept>

namespace crown::detail {
namespace {

class Parser {
 public:
  Parser(const std::string& s, const std::map<std::string, long>& vars) : s_(s), vars_(vars) {}

  long parse() {
    long v = logical_or();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(const char* tok) {
    skip();
    const std::string t(tok);
    if (s_.compare(pos_, t.size(), t) == 0) {
      pos_ += t.size();
      return true;
    }
    return false;
  }

  long logical_or() {
    long v = logical_and();
    while (eat("||")) {
      long r = logical_and();
      v = (v != 0 || r != 0) ? 1 : 0;
    }
    return v;
  }
  long logical_and() {
    long v = comparison();
    while (eat("&&")) {
      long r = comparison();
      v = (v != 0 && r != 0) ? 1 : 0;
    }
    return v;
  }
  long comparison() {
    long v = additive();
    for (;;) {
      if (eat("<=")) v = v <= additive();
      else if (eat(">=")) v = v >= additive();
      else if (eat("==")) v = v == additive();
      else if (eat("!=")) v = v != additive();
      else if (eat("<")) v = v < additive();
      else if (eat(">")) v = v > additive();
      else return v;
    }
  }
  long additive() {
    long v = term();
    for (;;) {
      if (eat("+")) v += term();
      else if (eat("-")) v -= term();
      else return v;
    }
  }
  long term() {
    long v = unary();
    for (;;) {
      if (eat("*")) {
        v *= unary();
      } else if (eat("/")) {
        long d = unary();
        if (d == 0) fail("division by zero");
        long q = v / d;
        if ((v % d != 0) && ((v < 0) != (d < 0))) --q;
        v = q;
      } else {
        return v;
      }
    }
  }
  long unary() {
    if (eat("-")) return -unary();
    return primary();
  }
  long primary() {
    skip();
    if (eat("(")) {
      long v = logical_or();
      if (!eat(")")) fail("expected ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      long v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = 10 * v + (s_[pos_++] - '0');
      return v;
    }
    std::string name;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) name += s_[pos_++];
    if (name.empty()) fail("expected a value");
    if (name == "min" || name == "max") {
      if (!eat("(")) fail("expected '(' after " + name);
      long a = logical_or();
      if (!eat(",")) fail("expected ','");
      long b = logical_or();
      if (!eat(")")) fail("expected ')'");
      return name == "min" ? std::min(a, b) : std::max(a, b);
    }
    auto it = vars_.find(name);
    if (it == vars_.end()) fail("unknown parameter '" + name + "'");
    return it->second;
  }

  const std::string& s_;
  const std::map<std::string, long>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

long eval_int_expr(const std::string& text, const std::map<std::string, long>& vars) {
  return Parser(text, vars).parse();
}

}  // namespace crown::detail
