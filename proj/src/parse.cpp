#include "sbcas/syntax.hpp"

#include "sbcas/diff.hpp"
#include "sbcas/ratnorm.hpp"

#include <cctype>
#include <vector>

namespace sbcas {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

std::optional<Lang> lang_from_string(std::string_view name) {
  if (name == "int") return Lang::Int;
  if (name == "ratexpr") return Lang::RatExpr;
  if (name == "ratfun") return Lang::RatFun;
  if (name == "diffexpr") return Lang::DiffExpr;
  return std::nullopt;
}

std::optional<Format> format_from_string(std::string_view name) {
  if (name == "infix") return Format::Infix;
  if (name == "sexpr") return Format::Sexpr;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

namespace {

enum class Tok { Number, Literal, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      const int line = line_, col = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", line, col});
        return out;
      }
      const char c = src_[pos_];
      if (c == '(' && (out.empty() || out.back().kind != Tok::Ident)) {
        if (auto lit = literal_at(pos_)) {
          out.push_back({Tok::Literal, *lit, line, col});
          advance(lit->size() + 2);
          continue;
        }
      }
      if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
        const std::size_t n = number_length(pos_);
        out.push_back({Tok::Number, std::string(src_.substr(pos_, n)), line, col});
        advance(n);
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t n = 0;
        while (pos_ + n < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_ + n])) || src_[pos_ + n] == '_')) {
          ++n;
        }
        out.push_back({Tok::Ident, std::string(src_.substr(pos_, n)), line, col});
        advance(n);
        continue;
      }
      if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        out.push_back({Tok::Arrow, "->", line, col});
        advance(2);
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
          throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      }
      out.push_back({k, std::string(1, c), line, col});
      advance(1);
    }
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance(1);
  }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  std::size_t number_length(std::size_t at) const {
    std::size_t n = 0;
    while (at + n < src_.size() && is_digit(src_[at + n])) ++n;
    if (at + n < src_.size() && src_[at + n] == '.') {
      ++n;
      while (at + n < src_.size() && is_digit(src_[at + n])) ++n;
    }
    return n;
  }

  // "(-3)", "(1/2)", "(-0.25)": the text between the parentheses.
  std::optional<std::string> literal_at(std::size_t at) const {
    std::size_t i = at + 1;
    if (i < src_.size() && src_[i] == '-') ++i;
    const std::size_t n = number_length(i);
    if (n == 0) return std::nullopt;
    i += n;
    if (i < src_.size() && src_[i] == '/') {
      ++i;
      std::size_t d = 0;
      while (i + d < src_.size() && is_digit(src_[i + d])) ++d;
      if (d == 0) return std::nullopt;
      i += d;
    }
    if (i >= src_.size() || src_[i] != ')') return std::nullopt;
    return std::string(src_.substr(at + 1, i - at - 1));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, Lang lang)
      : toks_(std::move(toks)),
        lang_(lang),
        ops_(lang == Lang::Int ? int_ops() : (lang == Lang::DiffExpr ? real_ops() : rat_ops())) {}

  Term run() {
    Term t = lang_ == Lang::RatFun ? lambda() : expr();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    return next();
  }
  [[noreturn]] void fail(const std::string& msg, const Token* at = nullptr) const {
    const Token& t = at ? *at : peek();
    const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + ", found " + found, t.line, t.column);
  }

  Term lambda() {
    const Token& kw = expect(Tok::Ident, "'fun'");
    if (kw.text != "fun") fail("expected 'fun'", &kw);
    const Token& v = expect(Tok::Ident, "'x'");
    if (v.text != "x") fail("the bound variable must be x", &v);
    expect(Tok::Arrow, "'->'");
    return Term::lambda("x", SemType::rational(), expr());
  }

  Term expr() {
    Term acc = term();
    while (true) {
      if (accept(Tok::Plus)) {
        acc = ops_.add(acc, term());
      } else if (accept(Tok::Minus)) {
        acc = ops_.sub(acc, term());
      } else {
        return acc;
      }
    }
  }

  Term term() {
    Term acc = unary();
    while (true) {
      if (accept(Tok::Star)) {
        acc = ops_.mul(acc, unary());
      } else if (accept(Tok::Slash)) {
        acc = ops_.div(acc, unary());
      } else {
        return acc;
      }
    }
  }

  Term unary() {
    if (accept(Tok::Minus)) return ops_.neg(unary());
    return power();
  }

  Term power() {
    Term base = atom();
    if (!accept(Tok::Caret)) return base;
    const Token& at = peek();
    BigRat e = exponent();
    switch (lang_) {
      case Lang::Int:
        if (!e.is_integer()) fail("integer exponent expected", &at);
        return ops_.pow(base, Term::int_lit(e.num()));
      case Lang::DiffExpr:
        return ops_.pow(base, real_lit(e));
      default: {
        if (!e.is_integer() || e.sign() < 0 || !e.num().fits_long()) {
          fail("exponent must be a nonnegative integer", &at);
        }
        const long n = e.num().to_long();
        if (n == 0) return Term::rat_lit(BigRat(1));
        Term acc = base;
        for (long i = 1; i < n; ++i) acc = ops_.mul(acc, base);
        return acc;
      }
    }
  }

  BigRat exponent() {
    const bool negative = accept(Tok::Minus);
    const Token& t = next();
    if (t.kind != Tok::Number && (negative || t.kind != Tok::Literal)) {
      --pos_;
      fail("exponent expected");
    }
    BigRat e = BigRat::parse(t.text);
    return negative ? -e : e;
  }

  Term literal(const Token& t) {
    BigRat v(0);
    try {
      v = BigRat::parse(t.text);
    } catch (const std::exception& ex) {
      fail(ex.what(), &t);
    }
    switch (lang_) {
      case Lang::Int:
        if (!v.is_integer()) fail("integer literal expected", &t);
        return Term::int_lit(v.num());
      case Lang::DiffExpr:
        return real_lit(v);
      default:
        return Term::rat_lit(v);
    }
  }

  Term atom() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Number:
      case Tok::Literal:
        return literal(t);
      case Tok::LParen: {
        Term inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident: {
        if (t.text == "x") return ops_.var("x");
        static constexpr std::string_view kFunctions[] = {sym::kSin, sym::kCos, sym::kTan,
                                                          sym::kExp, sym::kLn,  sym::kInv};
        for (std::string_view fn : kFunctions) {
          if (t.text == fn) {
            expect(Tok::LParen, "'('");
            Term arg = expr();
            expect(Tok::RParen, "')'");
            return ops_.unary(fn, arg);
          }
        }
        fail("unknown identifier", &t);
      }
      default:
        fail("expected an expression", &t);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Lang lang_;
  const Ops& ops_;
};

}  // namespace

Term parse(std::string_view src, Lang lang) {
  Term t = Parser(Lexer(src).run(), lang).run();
  switch (lang) {
    case Lang::Int:
      if (!is_expr_of(t, SemType::integer())) throw PredicateViolation("not an integer expression");
      break;
    case Lang::RatExpr:
      if (!is_rat_expr(t)) throw PredicateViolation("not a rational expression in x");
      break;
    case Lang::RatFun:
      if (!is_rat_fun(t)) throw PredicateViolation("not a rational function of x");
      break;
    case Lang::DiffExpr:
      if (!is_diff_expr(t)) throw PredicateViolation("not in the differentiable language");
      break;
  }
  return t;
}

}  // namespace sbcas
