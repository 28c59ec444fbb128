#include "parse.hpp"

#include <cctype>
#include <functional>
#include <map>

namespace monres {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

struct Token {
  enum Kind { Ident, Number, Star, Caret, Comma, End } kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_space_and_comments();
    tok_.line = line_;
    tok_.column = col_;
    if (pos_ >= src_.size()) {
      tok_.kind = Token::End;
      tok_.text.clear();
      return;
    }
    char c = src_[pos_];
    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && is_ident_char(src_[pos_])) bump();
      tok_.kind = Token::Ident;
      tok_.text = std::string(src_.substr(start, pos_ - start));
      return;
    }
    if (is_digit(c)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && is_digit(src_[pos_])) bump();
      tok_.kind = Token::Number;
      tok_.text = std::string(src_.substr(start, pos_ - start));
      return;
    }
    switch (c) {
      case '*': tok_.kind = Token::Star; break;
      case '^': tok_.kind = Token::Caret; break;
      case ',': tok_.kind = Token::Comma; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         line_, col_);
    }
    tok_.text = std::string(1, c);
    bump();
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

Monomial::Exponent parse_uint(const Token& t) {
  Monomial::Exponent value = 0;
  for (char c : t.text) {
    if (value > (INT64_MAX - (c - '0')) / 10) {
      throw ParseError("exponent too large", t.line, t.column);
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

// Exponent map keyed by variable index; the full vector is materialized once
// all variables are known.
using SparseExponents = std::map<std::size_t, Monomial::Exponent>;

class MonomialParser {
 public:
  // resolve(name, token) -> variable index; may register new variables.
  using Resolver =
      std::function<std::size_t(const std::string&, const Token&)>;

  MonomialParser(Lexer& lex, Resolver resolve)
      : lex_(lex), resolve_(std::move(resolve)) {}

  SparseExponents parse() {
    SparseExponents exps;
    if (lex_.peek().kind == Token::Number) {
      Token t = lex_.next();
      if (t.text != "1") {
        throw ParseError("expected monomial; the only numeric literal is '1'",
                         t.line, t.column);
      }
      return exps;  // unit monomial
    }
    if (lex_.peek().kind != Token::Ident) {
      const Token& t = lex_.peek();
      throw ParseError("expected monomial", t.line, t.column);
    }
    parse_factor(exps);
    for (;;) {
      if (lex_.peek().kind == Token::Star) {
        Token star = lex_.next();
        if (lex_.peek().kind != Token::Ident) {
          const Token& t = lex_.peek();
          throw ParseError("expected identifier after '*'", t.line, t.column);
        }
        parse_factor(exps);
      } else if (lex_.peek().kind == Token::Ident) {
        parse_factor(exps);  // juxtaposition: a^3b^2
      } else {
        break;
      }
    }
    return exps;
  }

 private:
  void parse_factor(SparseExponents& exps) {
    Token ident = lex_.next();
    // A purely alphabetic multi-character ident is a run of single-letter
    // variables; an optional exponent binds to the last letter.
    std::vector<std::string> letters;
    bool all_alpha = true;
    for (char c : ident.text) {
      if (!std::isalpha(static_cast<unsigned char>(c))) {
        all_alpha = false;
        break;
      }
    }
    if (all_alpha && ident.text.size() > 1) {
      for (char c : ident.text) letters.emplace_back(1, c);
    } else {
      letters.push_back(ident.text);
    }

    Monomial::Exponent last_exp = 1;
    if (lex_.peek().kind == Token::Caret) {
      Token caret = lex_.next();
      if (lex_.peek().kind != Token::Number) {
        const Token& t = lex_.peek();
        throw ParseError("expected exponent after '^'", t.line, t.column);
      }
      last_exp = parse_uint(lex_.next());
      (void)caret;
    }
    for (std::size_t i = 0; i < letters.size(); ++i) {
      std::size_t var = resolve_(letters[i], ident);
      Monomial::Exponent e = (i + 1 == letters.size()) ? last_exp : 1;
      exps[var] = detail::checked_add(exps.count(var) ? exps[var] : 0, e);
    }
  }

  Lexer& lex_;
  Resolver resolve_;
};

Monomial materialize(const SparseExponents& exps, std::size_t nvars) {
  std::vector<Monomial::Exponent> e(nvars, 0);
  for (auto [idx, val] : exps) e.at(idx) = val;
  return Monomial(std::move(e));
}

}  // namespace

ParsedIdeal parse_ideal_text(std::string_view text) {
  Lexer lex(text);
  if (lex.peek().kind == Token::End) {
    throw ParseError("empty input", lex.peek().line, lex.peek().column);
  }
  std::vector<std::string> names;
  auto resolve = [&names](const std::string& name, const Token&) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return i;
    }
    names.push_back(name);
    return names.size() - 1;
  };

  std::vector<SparseExponents> sparse;
  MonomialParser mono(lex, resolve);
  sparse.push_back(mono.parse());
  while (lex.peek().kind == Token::Comma) {
    lex.next();
    sparse.push_back(mono.parse());
  }
  if (lex.peek().kind != Token::End) {
    const Token& t = lex.peek();
    throw ParseError("expected ',' or end of input", t.line, t.column);
  }

  if (names.empty()) {
    // Input consisted solely of unit monomials; keep a one-variable ring so
    // downstream invariants (n >= 1) hold.
    names.push_back("x");
  }
  VariableSet vars(std::move(names));
  std::vector<Monomial> gens;
  gens.reserve(sparse.size());
  for (const auto& s : sparse) gens.push_back(materialize(s, vars.size()));
  return ParsedIdeal{std::move(vars), std::move(gens)};
}

Monomial parse_monomial(std::string_view text, const VariableSet& vars) {
  Lexer lex(text);
  auto resolve = [&vars](const std::string& name, const Token& t) {
    auto idx = vars.index_of(name);
    if (!idx) {
      throw ParseError("unknown variable '" + name + "'", t.line, t.column);
    }
    return *idx;
  };
  MonomialParser mono(lex, resolve);
  SparseExponents exps = mono.parse();
  if (lex.peek().kind != Token::End) {
    const Token& t = lex.peek();
    throw ParseError("expected end of input", t.line, t.column);
  }
  return materialize(exps, vars.size());
}

}  // namespace monres
