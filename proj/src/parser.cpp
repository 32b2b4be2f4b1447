#include "supm/parser.hpp"

#include <cctype>

namespace supm {

namespace {

enum class Tok { Number, Imag, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  size_t pos;
  BigRational number;  // for Tok::Number
  char ident = 0;      // for Tok::Ident
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : s_(src) {}

  Token next() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    size_t start = p_;
    if (p_ >= s_.size()) return {Tok::End, start, {}, 0};
    char c = s_[p_];
    switch (c) {
      case '+': ++p_; return {Tok::Plus, start, {}, 0};
      case '-': ++p_; return {Tok::Minus, start, {}, 0};
      case '*': ++p_; return {Tok::Star, start, {}, 0};
      case '^': ++p_; return {Tok::Caret, start, {}, 0};
      case '(': ++p_; return {Tok::LParen, start, {}, 0};
      case ')': ++p_; return {Tok::RParen, start, {}, 0};
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return lex_number(start);
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++p_;
      if (c == 'i') return {Tok::Imag, start, {}, 0};
      return {Tok::Ident, start, {}, c};
    }
    throw ParseError(start, std::string("unexpected character '") + c + "'");
  }

 private:
  Token lex_number(size_t start) {
    size_t b = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    std::string num = s_.substr(b, p_ - b);
    // A '/' continues the literal only when a digit follows: rational literals
    // bind tighter than any multiplication.
    if (p_ + 1 < s_.size() && s_[p_] == '/' &&
        std::isdigit(static_cast<unsigned char>(s_[p_ + 1]))) {
      ++p_;
      size_t d = p_;
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
      std::string den = s_.substr(d, p_ - d);
      try {
        return {Tok::Number, start, BigRational(mpz_class(num, 10), mpz_class(den, 10)), 0};
      } catch (const std::domain_error&) {
        throw ParseError(start, "zero denominator in rational literal");
      }
    }
    if (p_ < s_.size() && s_[p_] == '/')
      throw ParseError(p_, "'/' is only valid inside a rational literal p/q");
    return {Tok::Number, start, BigRational(mpz_class(num, 10)), 0};
  }

  const std::string& s_;
  size_t p_ = 0;
};

constexpr long kMaxExponent = 10000;

class Parser {
 public:
  Parser(const std::string& src, char expected_variable)
      : lex_(src), var_(expected_variable) {
    advance();
  }

  PolyExpr run(const std::string& src) {
    Poly p = parse_expr();
    expect(Tok::End, "unexpected trailing input");
    return {src, p, var_ ? var_ : 'z'};
  }

 private:
  void advance() { cur_ = lex_.next(); }

  void expect(Tok t, const char* message) {
    if (cur_.kind != t) throw ParseError(cur_.pos, message);
  }

  Poly parse_expr() {
    Poly acc = parse_term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      bool minus = cur_.kind == Tok::Minus;
      advance();
      Poly rhs = parse_term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  static bool starts_factor(Tok t) {
    return t == Tok::Number || t == Tok::Imag || t == Tok::Ident || t == Tok::LParen;
  }

  Poly parse_term() {
    Poly acc = parse_unary();
    while (true) {
      if (cur_.kind == Tok::Star) {
        advance();
        acc *= parse_unary();
      } else if (starts_factor(cur_.kind)) {
        acc *= parse_power();  // juxtaposition never consumes a sign
      } else {
        return acc;
      }
    }
  }

  Poly parse_unary() {
    bool neg = false;
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      if (cur_.kind == Tok::Minus) neg = !neg;
      advance();
    }
    Poly p = parse_power();
    return neg ? -p : p;
  }

  Poly parse_power() {
    Poly base = parse_atom();
    if (cur_.kind != Tok::Caret) return base;
    size_t caret_pos = cur_.pos;
    advance();
    long e = parse_exponent(caret_pos);
    return base.pow(static_cast<unsigned>(e));
  }

  long parse_exponent(size_t caret_pos) {
    bool neg = false;
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      if (cur_.kind == Tok::Minus) neg = !neg;
      advance();
    }
    size_t pos = cur_.pos;
    Poly e = parse_power();  // right associative: z^2^3 = z^(2^3)
    if (!e.is_constant())
      throw ParseError(pos, "exponent must be a constant integer");
    GaussianRational v = e.is_zero() ? GaussianRational() : e.coeff(0);
    if (!v.is_integer())
      throw ParseError(pos, "exponent must be an integer");
    if (neg || v.re() < BigRational(0))
      throw ParseError(caret_pos, "negative exponent is not allowed");
    if (v.re() > BigRational(kMaxExponent))
      throw ParseError(pos, "exponent too large");
    return v.re().to_long();
  }

  Poly parse_atom() {
    switch (cur_.kind) {
      case Tok::Number: {
        BigRational n = cur_.number;
        advance();
        return Poly(GaussianRational(n));
      }
      case Tok::Imag:
        advance();
        return Poly(GaussianRational::i());
      case Tok::Ident: {
        char c = cur_.ident;
        if (var_ == '\0') var_ = c;
        if (c != var_)
          throw ParseError(cur_.pos, std::string("unexpected second variable '") + c +
                                         "' (variable is '" + var_ + "')");
        advance();
        return Poly::monomial(1);
      }
      case Tok::LParen: {
        advance();
        Poly p = parse_expr();
        expect(Tok::RParen, "expected ')'");
        advance();
        return p;
      }
      default:
        throw ParseError(cur_.pos, "expected a number, variable, 'i' or '('");
    }
  }

  Lexer lex_;
  Token cur_{Tok::End, 0, {}, 0};
  char var_;
};

}  // namespace

PolyExpr parse_poly_expr(const std::string& src, char expected_variable) {
  if (src.empty()) throw ParseError(0, "empty input");
  if (expected_variable == 'i')
    throw std::invalid_argument("parse_poly_expr: 'i' cannot be the variable");
  return Parser(src, expected_variable).run(src);
}

Poly parse_poly(const std::string& src, char expected_variable) {
  return parse_poly_expr(src, expected_variable).parsed;
}

GaussianRational parse_scalar(const std::string& src) {
  PolyExpr e = parse_poly_expr(src, '\0');
  if (!e.parsed.is_constant()) throw ParseError(0, "expected a constant expression");
  return e.parsed.is_zero() ? GaussianRational() : e.parsed.coeff(0);
}

namespace {

std::string var_part(char variable, int e) {
  std::string v(1, variable);
  if (e == 1) return v;
  return v + "^" + std::to_string(e);
}

// Renders |coeff| * var^e assuming coeff != 0, returning the sign separately.
std::pair<bool, std::string> term_body(const GaussianRational& c, char variable, int e) {
  if (c.is_rational()) {
    bool neg = c.re() < BigRational(0);
    BigRational mag = c.re().abs();
    if (e == 0) return {neg, mag.str()};
    if (mag == BigRational(1)) return {neg, var_part(variable, e)};
    if (mag.is_integer()) return {neg, mag.str() + var_part(variable, e)};
    return {neg, mag.str() + " " + var_part(variable, e)};
  }
  if (c.re().is_zero()) {
    bool neg = c.im() < BigRational(0);
    BigRational mag = c.im().abs();
    std::string body = (mag == BigRational(1)) ? "i" : mag.str() + "i";
    if (e == 0) return {neg, body};
    return {neg, body + " " + var_part(variable, e)};
  }
  // Full complex coefficient: parenthesized, sign kept inside.
  std::string body = "(" + c.str() + ")";
  if (e > 0) body += var_part(variable, e);
  return {false, body};
}

}  // namespace

std::string render_poly(const Poly& f, char variable) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int e = f.degree(); e >= 0; --e) {
    const GaussianRational& c = f.coeff(e);
    if (c.is_zero()) continue;
    auto [neg, body] = term_body(c, variable, e);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += body;
  }
  return out;
}

}  // namespace supm
