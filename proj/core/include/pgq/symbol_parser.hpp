#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pgq/free_expr.hpp"

namespace pgq {

enum class TokenKind { Theta, ThetaBar, QSymbol, Number, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  TokenKind kind;
  std::size_t begin = 0;  // byte offsets into the source
  std::size_t end = 0;
  Complex value = 0.0;    // Number only
  bool integral = false;  // Number written as a plain digit run
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string message, std::vector<std::string> expected = {});

  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& expected() const { return expected_; }

  /// "text\n   ^ message" style diagnostic.
  std::string render(std::string_view source) const;

 private:
  std::size_t position_;
  std::string message_;
  std::vector<std::string> expected_;
};

/// Splits an expression into tokens. Accepts "th", "thb", Unicode theta and
/// theta-with-macron, "q", numbers (2, 2.5, 1e-3, with an optional trailing
/// "i" for imaginary), a lone "i", + - * ^ and parentheses.
std::vector<Token> tokenize(std::string_view text);

/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := '-'? factor ('*'? factor)*
///   factor := atom ('^' uint)?
///   atom   := th | thb | q | number | '(' expr ')'
/// Throws ParseError.
FreeExpr parse(std::string_view text);

/// Parses a plain complex number such as "2", "-0.5" or "0+1i".
Complex parse_complex(std::string_view text);

/// Canonical anti-Wick text: terms by total degree, then by descending theta
/// power (1, th, thb, th^2, th*thb, ...), 12 significant digits,
/// unit coefficients elided, "0" for the zero element.
std::string format(const PGElement& f);

}  // namespace pgq
