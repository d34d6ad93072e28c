#include "projrefl/expression.hpp"

#include <algorithm>
#include <cctype>

namespace projrefl {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ParseContext& ctx) : s_(text), ctx_(ctx) {}

  RationalFunction parse() {
    RationalFunction v = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  RationalFunction expr() {
    RationalFunction v = term();
    for (;;) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  RationalFunction term() {
    RationalFunction v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RationalFunction d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        v = v / d;
      } else {
        return v;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  Integer integer_literal() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  RationalFunction primary() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return AlgNumber(integer_literal());
    if (accept('(')) {
      RationalFunction v = expr();
      expect(')');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      if (name == "sqrt") return square_root(start);
      if (name == ctx_.parameter) {
        if (!ctx_.allow_parameter) throw ParseError("parameter '" + std::string(name) + "' not allowed here", start);
        return RationalFunction::variable();
      }
      if (ctx_.allow_parameter) {
        if (auto it = ctx_.definitions.find(name); it != ctx_.definitions.end()) return it->second;
      }
      throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  RationalFunction square_root(std::size_t start) {
    expect('(');
    const std::size_t at = pos_;
    const Integer d = integer_literal();
    expect(')');
    if (!d.fits_slong_p()) throw ParseError("radicand out of range", at);
    const std::int64_t n = d.get_si();
    const auto r = ctx_.field.radicands();
    const auto subs = ctx_.field.quadratic_subfields();
    const bool declared = (n > 1 && std::find(subs.begin(), subs.end(), n) != subs.end()) ||
                          (r.size() == 2 && n == r[0] * r[1]);
    if (!declared)
      throw ParseError("sqrt(" + d.get_str() + ") uses an undeclared radicand (field " + ctx_.field.to_string() + ")",
                       start);
    return AlgNumber::sqrt_of(n);
  }

  std::string_view s_;
  const ParseContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expression(std::string_view text, const ParseContext& context) {
  return Parser(text, context).parse();
}

AlgNumber parse_scalar(std::string_view text, const FieldSpec& field) {
  ParseContext ctx;
  ctx.field = field;
  return parse_expression(text, ctx).constant_value();
}

}  // namespace projrefl
