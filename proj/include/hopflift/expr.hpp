#pragma once

// Line-oriented lexer and a small precedence-climbing parser shared by the
// scalar syntax and the presentation DSL.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopflift/scalar.hpp"

namespace hopflift::expr {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, At, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t column = 0;  // 1-based
};

/// Splits one line of text. Column numbers are reported relative to the line,
/// offset by `column_offset` so callers can tokenize the tail of a line.
std::vector<Token> tokenize(std::string_view text, std::size_t line, std::size_t column_offset = 0);

/// Cursor over a token vector with error reporting anchored at a line.
class Cursor {
 public:
  Cursor(std::vector<Token> tokens, std::size_t line) : toks_(std::move(tokens)), line_(line) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  void expect(Tok k, const char* what);
  [[noreturn]] void fail(const std::string& msg) const;
  std::size_t line() const { return line_; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

/// Precedence climbing over any value type. `Ops` supplies:
///   Value number(const std::string& digits);
///   Value ident(const Token& tok, const Cursor& cur);
///   Value add/sub/mul(const Value&, const Value&); Value neg(const Value&);
///   Value div(const Value&, const Value&, const Cursor&);   // divisor must be scalar
///   Value pow(const Value&, unsigned);
/// Optionally `Value tensor(const Value&, const Value&)`, which enables the
/// `@` operator binding looser than `*` and tighter than `+`.
template <class Ops>
class Parser {
 public:
  using Value = typename Ops::Value;

  Parser(Cursor& cur, Ops& ops) : cur_(cur), ops_(ops) {}

  Value sum() {
    Value v = tensor();
    while (cur_.at(Tok::Plus) || cur_.at(Tok::Minus)) {
      bool plus = cur_.take().kind == Tok::Plus;
      Value rhs = tensor();
      v = plus ? ops_.add(v, rhs) : ops_.sub(v, rhs);
    }
    return v;
  }

  Value tensor() {
    Value v = product();
    if constexpr (requires(Ops& o, const Value& x) { o.tensor(x, x); }) {
      while (cur_.at(Tok::At)) {
        cur_.take();
        Value rhs = product();
        v = ops_.tensor(v, rhs);
      }
    }
    return v;
  }

  Value product() {
    Value v = unary();
    while (cur_.at(Tok::Star) || cur_.at(Tok::Slash)) {
      bool star = cur_.take().kind == Tok::Star;
      Value rhs = unary();
      v = star ? ops_.mul(v, rhs) : ops_.div(v, rhs, cur_);
    }
    return v;
  }

  Value unary() {
    if (cur_.at(Tok::Minus)) {
      cur_.take();
      return ops_.neg(unary());
    }
    if (cur_.at(Tok::Plus)) {
      cur_.take();
      return unary();
    }
    return power();
  }

  Value power() {
    Value v = atom();
    if (cur_.at(Tok::Caret)) {
      cur_.take();
      if (!cur_.at(Tok::Number)) cur_.fail("expected integer exponent");
      unsigned long e = std::stoul(cur_.take().text);
      v = ops_.pow(v, static_cast<unsigned>(e));
    }
    return v;
  }

  Value atom() {
    const Token& t = cur_.peek();
    switch (t.kind) {
      case Tok::Number: return ops_.number(cur_.take().text);
      case Tok::Ident: {
        Token id = cur_.take();
        return ops_.ident(id, cur_);
      }
      case Tok::LParen: {
        cur_.take();
        Value v = sum();
        cur_.expect(Tok::RParen, "')'");
        return v;
      }
      default: cur_.fail("unexpected token '" + t.text + "'");
    }
  }

 private:
  Cursor& cur_;
  Ops& ops_;
};

}  // namespace hopflift::expr
