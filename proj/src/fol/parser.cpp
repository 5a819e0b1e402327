#include "nsr/fol/parser.hpp"

#include <cctype>
#include <vector>

namespace nsr::fol {

namespace {

enum class TokenKind {
  LParen,
  RParen,
  Comma,
  Dot,
  Amp,
  Pipe,
  Neg,
  Arrow,
  Iff,
  All,
  Exists,
  Ident,
  End,
};

struct Token {
  TokenKind kind;
  std::size_t position;
  std::string text;
};

const char* token_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Amp: return "'&'";
    case TokenKind::Pipe: return "'|'";
    case TokenKind::Neg: return "'-'";
    case TokenKind::Arrow: return "'->'";
    case TokenKind::Iff: return "'<->'";
    case TokenKind::All: return "'all'";
    case TokenKind::Exists: return "'exists'";
    case TokenKind::Ident: return "identifier";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Individual-variable shape: single lowercase letter plus optional digits.
bool looks_like_variable(const std::string& name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) return false;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  }
  return true;
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    switch (c) {
      case '(': tokens.push_back({TokenKind::LParen, start, "("}); ++i; continue;
      case ')': tokens.push_back({TokenKind::RParen, start, ")"}); ++i; continue;
      case ',': tokens.push_back({TokenKind::Comma, start, ","}); ++i; continue;
      case '.': tokens.push_back({TokenKind::Dot, start, "."}); ++i; continue;
      case '&': tokens.push_back({TokenKind::Amp, start, "&"}); ++i; continue;
      case '|': tokens.push_back({TokenKind::Pipe, start, "|"}); ++i; continue;
      case '-':
        // Multi-character operators win over the negation sign.
        if (i + 1 < text.size() && text[i + 1] == '>') {
          tokens.push_back({TokenKind::Arrow, start, "->"});
          i += 2;
        } else {
          tokens.push_back({TokenKind::Neg, start, "-"});
          ++i;
        }
        continue;
      case '<':
        if (i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
          tokens.push_back({TokenKind::Iff, start, "<->"});
          i += 3;
          continue;
        }
        throw SyntaxError(SyntaxErrorKind::ForbiddenSymbol, start, "symbol '<' is not allowed");
      case '>':
        throw SyntaxError(SyntaxErrorKind::ForbiddenSymbol, start, "symbol '>' is not allowed");
      case '=':
        throw SyntaxError(SyntaxErrorKind::ForbiddenSymbol, start, "symbol '=' is not allowed");
      default: break;
    }
    if (ident_start(c)) {
      std::size_t end = i + 1;
      while (end < text.size() && ident_char(text[end])) ++end;
      std::string word(text.substr(i, end - i));
      i = end;
      if (word == "all") {
        tokens.push_back({TokenKind::All, start, std::move(word)});
      } else if (word == "exists") {
        tokens.push_back({TokenKind::Exists, start, std::move(word)});
      } else {
        tokens.push_back({TokenKind::Ident, start, std::move(word)});
      }
      continue;
    }
    throw SyntaxError(SyntaxErrorKind::UnexpectedToken, start,
                      std::string("unexpected character '") + c + "'");
  }
  tokens.push_back({TokenKind::End, text.size(), ""});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  FormulaPtr parse() {
    FormulaPtr f = parse_iff();
    expect(TokenKind::End);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  bool accept(TokenKind kind) {
    if (peek().kind == kind) {
      ++pos_;
      return true;
    }
    return false;
  }

  const Token& expect(TokenKind kind) {
    if (peek().kind != kind) {
      throw SyntaxError(SyntaxErrorKind::UnexpectedToken, peek().position,
                        std::string("expected ") + token_name(kind) + ", found " +
                            token_name(peek().kind));
    }
    return tokens_[pos_++];
  }

  FormulaPtr parse_iff() {
    FormulaPtr lhs = parse_implies();
    while (accept(TokenKind::Iff)) {
      lhs = Formula::biconditional(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  FormulaPtr parse_implies() {
    FormulaPtr lhs = parse_or();
    if (accept(TokenKind::Arrow)) {
      return Formula::implication(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  FormulaPtr parse_or() {
    FormulaPtr lhs = parse_and();
    while (accept(TokenKind::Pipe)) {
      lhs = Formula::disjunction(std::move(lhs), parse_and());
    }
    return lhs;
  }

  FormulaPtr parse_and() {
    FormulaPtr lhs = parse_unary();
    while (accept(TokenKind::Amp)) {
      lhs = Formula::conjunction(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  FormulaPtr parse_unary() {
    if (accept(TokenKind::Neg)) {
      return Formula::negation(parse_unary());
    }
    if (peek().kind == TokenKind::All || peek().kind == TokenKind::Exists) {
      return parse_quantifier();
    }
    return parse_primary();
  }

  FormulaPtr parse_quantifier() {
    const bool universal = advance().kind == TokenKind::All;
    std::vector<std::string> vars;
    vars.push_back(expect(TokenKind::Ident).text);
    while (peek().kind == TokenKind::Ident) {
      vars.push_back(advance().text);  // `all x y.` shorthand
    }
    expect(TokenKind::Dot);
    for (const std::string& v : vars) bound_.push_back(v);
    // A parenthesized group right after the dot is the whole body; otherwise
    // the body extends to the end of the enclosing expression.
    FormulaPtr body;
    if (peek().kind == TokenKind::LParen) {
      advance();
      body = parse_iff();
      expect(TokenKind::RParen);
    } else {
      body = parse_iff();
    }
    for (std::size_t i = 0; i < vars.size(); ++i) bound_.pop_back();
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
      body = universal ? Formula::forall(*it, std::move(body))
                       : Formula::exists(*it, std::move(body));
    }
    return body;
  }

  FormulaPtr parse_primary() {
    if (accept(TokenKind::LParen)) {
      FormulaPtr inner = parse_iff();
      expect(TokenKind::RParen);
      return inner;
    }
    if (peek().kind != TokenKind::Ident) {
      throw SyntaxError(SyntaxErrorKind::UnexpectedToken, peek().position,
                        std::string("expected a formula, found ") + token_name(peek().kind));
    }
    const Token name = advance();
    expect(TokenKind::LParen);
    if (peek().kind == TokenKind::RParen) {
      throw SyntaxError(SyntaxErrorKind::EmptyPredicate, name.position,
                        "predicate " + name.text + " applied to no arguments");
    }
    std::vector<Term> args;
    args.push_back(parse_term());
    while (accept(TokenKind::Comma)) {
      args.push_back(parse_term());
    }
    expect(TokenKind::RParen);
    return Formula::predicate(name.text, std::move(args));
  }

  Term parse_term() {
    const Token& tok = expect(TokenKind::Ident);
    if (is_bound(tok.text)) {
      return Term::variable(tok.text);
    }
    if (looks_like_variable(tok.text)) {
      throw SyntaxError(SyntaxErrorKind::UnboundVariable, tok.position,
                        "variable " + tok.text + " is not bound by any quantifier");
    }
    return Term::constant(tok.text);
  }

  bool is_bound(const std::string& name) const {
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
      if (*it == name) return true;
    }
    return false;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> bound_;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
  return Parser(lex(text)).parse();
}

}  // namespace nsr::fol
