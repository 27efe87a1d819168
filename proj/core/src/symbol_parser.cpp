#include "pgq/symbol_parser.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

namespace pgq {

namespace {

constexpr std::string_view kTheta = "\xCE\xB8";          // U+03B8
constexpr std::string_view kCombiningMacron = "\xCC\x84";  // U+0304

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) {
        out.push_back(Token{TokenKind::End, pos_, pos_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Token single(TokenKind kind) {
    Token t{kind, pos_, pos_ + 1};
    ++pos_;
    return t;
  }

  Token next() {
    const char c = text_[pos_];
    switch (c) {
      case '+': return single(TokenKind::Plus);
      case '-': return single(TokenKind::Minus);
      case '*': return single(TokenKind::Star);
      case '^': return single(TokenKind::Caret);
      case '(': return single(TokenKind::LParen);
      case ')': return single(TokenKind::RParen);
      default: break;
    }
    if (text_.substr(pos_).starts_with(kTheta)) {
      const std::size_t begin = pos_;
      pos_ += kTheta.size();
      if (text_.substr(pos_).starts_with(kCombiningMacron)) {
        pos_ += kCombiningMacron.size();
        return Token{TokenKind::ThetaBar, begin, pos_};
      }
      return Token{TokenKind::Theta, begin, pos_};
    }
    if (is_digit(c) || (c == '.' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1]))) {
      return number();
    }
    if (is_alpha(c)) return word();
    throw ParseError(pos_, std::string("unknown character '") + c + "'",
                     {"th", "thb", "q", "number", "(", "+", "-", "*", "^"});
  }

  Token number() {
    const std::size_t begin = pos_;
    bool integral = true;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      integral = false;
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t probe = pos_ + 1;
      if (probe < text_.size() && (text_[probe] == '+' || text_[probe] == '-')) ++probe;
      if (probe < text_.size() && is_digit(text_[probe])) {
        integral = false;
        pos_ = probe;
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      }
    }
    const double magnitude = std::strtod(std::string(text_.substr(begin, pos_ - begin)).c_str(), nullptr);
    Token t{TokenKind::Number, begin, pos_, magnitude, integral};
    const bool imaginary_suffix = pos_ < text_.size() && text_[pos_] == 'i' &&
                                  (pos_ + 1 >= text_.size() || !is_alpha(text_[pos_ + 1]));
    if (imaginary_suffix) {
      ++pos_;
      t.end = pos_;
      t.value = Complex(0.0, magnitude);
      t.integral = false;
    }
    return t;
  }

  Token word() {
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && is_alpha(text_[pos_])) ++pos_;
    const std::string_view w = text_.substr(begin, pos_ - begin);
    if (w == "th") return Token{TokenKind::Theta, begin, pos_};
    if (w == "thb") return Token{TokenKind::ThetaBar, begin, pos_};
    if (w == "q") return Token{TokenKind::QSymbol, begin, pos_};
    if (w == "i") return Token{TokenKind::Number, begin, pos_, Complex(0.0, 1.0), false};
    throw ParseError(begin, "unknown token '" + std::string(w) + "'", {"th", "thb", "q", "i"});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  FreeExpr parse_all() {
    if (peek().kind == TokenKind::End) throw ParseError(0, "empty expression", {"expression"});
    FreeExpr e = expr();
    if (peek().kind == TokenKind::RParen) {
      throw ParseError(peek().begin, "unbalanced ')'", {"end of input", "+", "-"});
    }
    if (peek().kind != TokenKind::End) {
      throw ParseError(peek().begin, "unexpected token", {"end of input", "+", "-", "*"});
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  const Token& take() { return tokens_[index_++]; }

  static bool starts_atom(TokenKind k) {
    return k == TokenKind::Theta || k == TokenKind::ThetaBar || k == TokenKind::QSymbol ||
           k == TokenKind::Number || k == TokenKind::LParen;
  }

  FreeExpr expr() {
    std::vector<FreeExpr> terms;
    terms.push_back(term());
    while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
      const bool minus = take().kind == TokenKind::Minus;
      FreeExpr t = term();
      terms.push_back(minus ? FreeExpr::negate(std::move(t)) : std::move(t));
    }
    return terms.size() == 1 ? std::move(terms.front()) : FreeExpr::sum(std::move(terms));
  }

  FreeExpr term() {
    bool negated = false;
    if (peek().kind == TokenKind::Minus) {
      take();
      negated = true;
    }
    std::vector<FreeExpr> factors;
    factors.push_back(factor());
    while (true) {
      if (peek().kind == TokenKind::Star) {
        take();
        factors.push_back(factor());
      } else if (starts_atom(peek().kind)) {
        factors.push_back(factor());
      } else {
        break;
      }
    }
    FreeExpr t = factors.size() == 1 ? std::move(factors.front()) : FreeExpr::product(std::move(factors));
    return negated ? FreeExpr::negate(std::move(t)) : t;
  }

  FreeExpr factor() {
    FreeExpr base = atom();
    if (peek().kind != TokenKind::Caret) return base;
    take();
    const Token& exp = peek();
    if (exp.kind != TokenKind::Number || !exp.integral) {
      throw ParseError(exp.begin, "non-negative integer exponent expected", {"non-negative integer"});
    }
    take();
    const double v = exp.value.real();
    if (v > static_cast<double>(std::numeric_limits<unsigned>::max())) {
      throw ParseError(exp.begin, "exponent too large", {"non-negative integer"});
    }
    return FreeExpr::power(std::move(base), static_cast<unsigned>(v));
  }

  FreeExpr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Theta: take(); return FreeExpr::theta();
      case TokenKind::ThetaBar: take(); return FreeExpr::theta_bar();
      case TokenKind::QSymbol: take(); return FreeExpr::q();
      case TokenKind::Number: take(); return FreeExpr::constant(t.value);
      case TokenKind::LParen: {
        take();
        FreeExpr inner = expr();
        if (peek().kind != TokenKind::RParen) {
          throw ParseError(peek().begin, "unbalanced '(': expected ')'", {")"});
        }
        take();
        // A parenthesized numeric group such as (1+2i) is a complex literal.
        if (inner.is_numeric()) return FreeExpr::constant(evaluate_numeric(inner));
        return inner;
      }
      case TokenKind::End:
        throw ParseError(t.begin, "unexpected end of input", {"th", "thb", "q", "number", "("});
      default:
        throw ParseError(t.begin, "unexpected token", {"th", "thb", "q", "number", "("});
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string monomial(int i, int j) {
  std::string m;
  auto append = [&m](std::string_view gen, int power) {
    if (power == 0) return;
    if (!m.empty()) m += '*';
    m += gen;
    if (power > 1) m += '^' + std::to_string(power);
  };
  append("th", i);
  append("thb", j);
  return m;
}

}  // namespace

ParseError::ParseError(std::size_t position, std::string message, std::vector<std::string> expected)
    : std::runtime_error("parse error at offset " + std::to_string(position) + ": " + message),
      position_(position),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

std::string ParseError::render(std::string_view source) const {
  std::string out(source);
  out += '\n';
  out += std::string(position_, ' ');
  out += "^ ";
  out += message_;
  if (!expected_.empty()) {
    out += " (expected ";
    for (std::size_t k = 0; k < expected_.size(); ++k) {
      if (k) out += ", ";
      out += expected_[k];
    }
    out += ')';
  }
  return out;
}

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

FreeExpr parse(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

Complex parse_complex(std::string_view text) {
  const FreeExpr e = parse(text);
  if (!e.is_numeric()) throw ParseError(0, "a plain complex number is required", {"number"});
  return evaluate_numeric(e);
}

std::string format(const PGElement& f) {
  const int l = f.order();
  std::string out;
  // Graded order: total degree ascending, then theta-heavy terms first.
  for (int degree = 0; degree <= 2 * (l - 1); ++degree)
    for (int i = std::min(degree, l - 1); i >= 0 && degree - i < l; --i) {
      const int j = degree - i;
      const Complex c = f.coeff(i, j);
      if (c == Complex(0.0)) continue;
      const std::string m = monomial(i, j);
      const std::string tail = m.empty() ? "" : "*" + m;
      bool negative = false;
      std::string body;
      if (c.imag() == 0.0) {
        negative = c.real() < 0.0;
        const double mag = std::abs(c.real());
        body = (mag == 1.0 && !m.empty()) ? m : format_real(mag) + tail;
      } else if (c.real() == 0.0) {
        negative = c.imag() < 0.0;
        body = format_real(std::abs(c.imag())) + "i" + tail;
      } else {
        body = "(" + format_real(c.real()) + (c.imag() < 0.0 ? "-" : "+") +
               format_real(std::abs(c.imag())) + "i)" + tail;
      }
      if (out.empty()) {
        out = negative ? "-" + body : body;
      } else {
        out += negative ? " - " : " + ";
        out += body;
      }
    }
  return out.empty() ? "0" : out;
}

}  // namespace pgq
