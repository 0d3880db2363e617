#include "lur/parser.hpp"

#include <cctype>

namespace lur {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int col;
};

class Lexer {
 public:
  Lexer(std::string_view s, int line) : s_(s), line_(line) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s_.size()) {
      char c = s_[i];
      int col = static_cast<int>(i) + 1;
      if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j])))
          ++j;
        out.push_back({Tok::Int, std::string(s_.substr(i, j - i)), col});
        i = j;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
          ++j;
        out.push_back({Tok::Ident, std::string(s_.substr(i, j - i)), col});
        i = j;
        continue;
      }
      Tok k;
      switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        default:
          throw ParseError(line_, col,
                           std::string("unexpected character '") + c + "'");
      }
      out.push_back({k, std::string(1, c), col});
      ++i;
    }
    out.push_back({Tok::End, "", static_cast<int>(s_.size()) + 1});
    return out;
  }

 private:
  std::string_view s_;
  int line_;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, const std::vector<std::string>& vars,
         int line)
      : toks_(std::move(toks)), vars_(vars), line_(line) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    expect(Tok::End, "end of input");
    return p;
  }

 private:
  std::vector<Token> toks_;
  const std::vector<std::string>& vars_;
  int line_;
  std::size_t pos_ = 0;

  const Token& cur() const { return toks_[pos_]; }
  void advance() { if (cur().kind != Tok::End) ++pos_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, cur().col, msg);
  }

  void expect(Tok k, const std::string& what) {
    if (cur().kind != k) fail("expected " + what);
    advance();
  }

  MultiPoly expr() {
    bool neg = false;
    // leading sign
    while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
      if (cur().kind == Tok::Minus) neg = !neg;
      advance();
    }
    MultiPoly acc = term();
    if (neg) acc = -acc;
    while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
      bool minus = cur().kind == Tok::Minus;
      advance();
      MultiPoly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (cur().kind == Tok::Star || cur().kind == Tok::Slash) {
      bool div = cur().kind == Tok::Slash;
      int opcol = cur().col;
      advance();
      MultiPoly f = factor();
      if (div) {
        if (!f.is_constant() || f.is_zero())
          throw ParseError(line_, opcol,
                           "divisor must be a nonzero constant");
        acc = acc * (Rational(1) / f.coeff(Monomial(f.nvars())));
      } else {
        acc = acc * f;
      }
    }
    return acc;
  }

  MultiPoly factor() {
    if (cur().kind == Tok::Minus || cur().kind == Tok::Plus) {
      bool neg = cur().kind == Tok::Minus;
      advance();
      MultiPoly f = factor();
      return neg ? -f : f;
    }
    MultiPoly base = primary();
    if (cur().kind == Tok::Caret) {
      advance();
      if (cur().kind != Tok::Int) fail("expected integer exponent");
      unsigned long e = std::stoul(cur().text);
      if (e > 64) fail("exponent too large");
      advance();
      MultiPoly acc = MultiPoly::constant(base.nvars(), Rational(1));
      for (unsigned long k = 0; k < e; ++k) acc = acc * base;
      return acc;
    }
    return base;
  }

  MultiPoly primary() {
    switch (cur().kind) {
      case Tok::Int: {
        auto v = Rational::parse(cur().text);
        if (!v) fail("bad integer literal");
        advance();
        return MultiPoly::constant(vars_.size(), *v);
      }
      case Tok::Ident: {
        for (std::size_t k = 0; k < vars_.size(); ++k) {
          if (vars_[k] == cur().text) {
            advance();
            return MultiPoly::var(vars_.size(), k);
          }
        }
        fail("unknown variable '" + cur().text + "'");
      }
      case Tok::LParen: {
        advance();
        MultiPoly inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        fail("expected a literal, variable, or '('");
    }
  }
};

}  // namespace

MultiPoly parse_poly(std::string_view text,
                     const std::vector<std::string>& var_names, int line) {
  auto toks = Lexer(text, line).run();
  return Parser(std::move(toks), var_names, line).parse();
}

}  // namespace lur
