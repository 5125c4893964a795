#pragma once

#include "lpakit/path_algebra.hpp"

#include <cctype>
#include <string>

namespace lpakit {

namespace detail {

template <typename S>
class ExpressionParser {
 public:
  ExpressionParser(const std::string& text, Context ctx) : text_(text), ctx_(std::move(ctx)) {}

  Element<S> parse() {
    Element<S> out = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return out;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // A '^' '*' pair, whitespace allowed in between.
  bool accept_star() {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != '^') return false;
    const std::size_t at = pos_++;
    if (!accept('*')) throw ParseError("expected '*' after '^'", at);
    return true;
  }

  Element<S> expr() {
    skip();
    const bool negate = accept('-');
    Element<S> out = term();
    if (negate) out = -out;
    while (true) {
      if (accept('+'))
        out += term();
      else if (accept('-'))
        out -= term();
      else
        return out;
    }
  }

  Element<S> term() {
    Element<S> out = factor();
    while (true) {
      skip();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        out = out * factor();
      } else {
        return out;
      }
    }
  }

  Element<S> factor() {
    Element<S> out = primary();
    while (accept_star()) out = out.star();
    return out;
  }

  Element<S> primary() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Element<S> out = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return out;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Element<S>::scalar(ctx_, ScalarTraits<S>::from_rational(rational()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  BigInt digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return BigInt(text_.substr(start, pos_ - start));
  }

  Rational rational() {
    const BigInt num = digits();
    const std::size_t save = pos_;
    skip();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      const std::size_t slash = pos_++;
      skip();
      const BigInt den = digits();
      if (den == 0) throw ParseError("zero denominator", slash);
      return Rational(num, den);
    }
    pos_ = save;
    return Rational(num);
  }

  Element<S> identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.')
        ++pos_;
      else
        break;
    }
    const std::string name = text_.substr(start, pos_ - start);
    const auto v = ctx_->graph().find_vertex(name);
    const auto e = ctx_->graph().find_edge(name);
    if (v && e) throw ParseError("ambiguous identifier '" + name + "' names both a vertex and an edge", start);
    if (v) return Element<S>::vertex(ctx_, *v);
    if (e) return Element<S>::edge(ctx_, *e);
    throw ParseError("unknown identifier '" + name + "'", start);
  }

  const std::string& text_;
  Context ctx_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar: expr := ['-'] term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := primary ('^*')*; primary := rational | ident | '(' expr ')'.
/// A rational literal n or n/d stands for that multiple of the unit.
template <typename S = Rational>
Element<S> parse_expression(const std::string& text, const Context& ctx) {
  return detail::ExpressionParser<S>(text, ctx).parse();
}

}  // namespace lpakit
