#include "mbstar/formula.hpp"

#include <cctype>
#include <utility>

#include "mbstar/errors.hpp"

namespace mbstar {

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::wrap(Conn kind, std::string name, const Formula* a, const Formula* b) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  if (a) node->first = a->node_;
  if (b) node->second = b->node_;
  std::size_t h = static_cast<std::size_t>(kind) + 1;
  h = combine(h, std::hash<std::string>{}(node->name));
  if (node->first) h = combine(h, node->first->hash);
  if (node->second) h = combine(h, node->second->hash);
  node->hash = h;
  return Formula(std::move(node));
}

Formula Formula::var(std::string name) { return wrap(Conn::Var, std::move(name), nullptr, nullptr); }
Formula Formula::neg(Formula f) { return wrap(Conn::Neg, {}, &f, nullptr); }
Formula Formula::undet(Formula f) { return wrap(Conn::Undet, {}, &f, nullptr); }
Formula Formula::conj(Formula lhs, Formula rhs) { return wrap(Conn::And, {}, &lhs, &rhs); }
Formula Formula::disj(Formula lhs, Formula rhs) { return wrap(Conn::Or, {}, &lhs, &rhs); }
Formula Formula::imp(Formula lhs, Formula rhs) { return wrap(Conn::Imp, {}, &lhs, &rhs); }

const std::string& Formula::var_name() const { return node_->name; }
Formula Formula::child() const { return Formula(node_->first); }
Formula Formula::lhs() const { return Formula(node_->first); }
Formula Formula::rhs() const { return Formula(node_->second); }

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Conn::Var:
      return a.var_name().compare(b.var_name());
    case Conn::Neg:
    case Conn::Undet:
      return compare(a.child(), b.child());
    default: {
      int c = compare(a.lhs(), b.lhs());
      return c != 0 ? c : compare(a.rhs(), b.rhs());
    }
  }
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Ident, Tilde, Hash, Amp, Pipe, Arrow, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Tilde: return "'~'";
    case Tok::Hash: return "'#'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_trivia();
    std::size_t at = pos_;
    if (pos_ >= text_.size()) return {Tok::End, "", at};
    char c = text_[pos_];
    switch (c) {
      case '~': ++pos_; return {Tok::Tilde, "~", at};
      case '#': ++pos_; return {Tok::Hash, "#", at};
      case '&': ++pos_; return {Tok::Amp, "&", at};
      case '|': ++pos_; return {Tok::Pipe, "|", at};
      case '(': ++pos_; return {Tok::LParen, "(", at};
      case ')': ++pos_; return {Tok::RParen, ")", at};
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          pos_ += 2;
          return {Tok::Arrow, "->", at};
        }
        throw ParseError(at, {"'->'"}, std::string(1, c));
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      ++pos_;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') ++pos_;
        else break;
      }
      return {Tok::Ident, std::string(text_.substr(start, pos_ - start)), start};
    }
    throw ParseError(at, {"formula token"}, std::string(1, c));
  }

 private:
  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  Formula parse() {
    Formula f = parse_imp();
    expect(Tok::End);
    return f;
  }

 private:
  // formula := imp ; imp := or ("->" imp)?
  Formula parse_imp() {
    Formula lhs = parse_or();
    if (cur_.kind == Tok::Arrow) {
      advance();
      return Formula::imp(std::move(lhs), parse_imp());
    }
    return lhs;
  }

  // or := and ("|" and)*
  Formula parse_or() {
    Formula f = parse_and();
    while (cur_.kind == Tok::Pipe) {
      advance();
      f = Formula::disj(std::move(f), parse_and());
    }
    return f;
  }

  // and := unary ("&" unary)*
  Formula parse_and() {
    Formula f = parse_unary();
    while (cur_.kind == Tok::Amp) {
      advance();
      f = Formula::conj(std::move(f), parse_unary());
    }
    return f;
  }

  // unary := ("~"|"#") unary | ident | "(" formula ")"
  Formula parse_unary() {
    switch (cur_.kind) {
      case Tok::Tilde:
        advance();
        return Formula::neg(parse_unary());
      case Tok::Hash:
        advance();
        return Formula::undet(parse_unary());
      case Tok::Ident: {
        std::string name = cur_.text;
        advance();
        return Formula::var(std::move(name));
      }
      case Tok::LParen: {
        advance();
        Formula f = parse_imp();
        expect(Tok::RParen);
        return f;
      }
      default:
        throw ParseError(cur_.offset, {"identifier", "'~'", "'#'", "'('"}, found());
    }
  }

  void expect(Tok kind) {
    if (cur_.kind != kind)
      throw ParseError(cur_.offset, {describe(kind)}, found());
    advance();
  }

  std::string found() const {
    return cur_.kind == Tok::End ? "end of input" : "'" + cur_.text + "'";
  }

  void advance() { cur_ = lexer_.next(); }

  Lexer lexer_;
  Token cur_{Tok::End, "", 0};
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string ParseError::format(std::size_t offset, const std::vector<std::string>& expected,
                               const std::string& found) {
  std::string msg = "syntax error at offset " + std::to_string(offset) + ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
    msg += expected[i];
  }
  msg += ", found " + found;
  return msg;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

// Binding strength of each connective; a child is parenthesized when its top
// connective binds looser than the position requires.
int level(Conn k) {
  switch (k) {
    case Conn::Imp: return 0;
    case Conn::Or: return 1;
    case Conn::And: return 2;
    default: return 3;
  }
}

void render_into(const Formula& f, int min_level, std::string& out) {
  bool parens = level(f.kind()) < min_level;
  if (parens) out += '(';
  switch (f.kind()) {
    case Conn::Var:
      out += f.var_name();
      break;
    case Conn::Neg:
      out += '~';
      render_into(f.child(), 3, out);
      break;
    case Conn::Undet:
      out += '#';
      render_into(f.child(), 3, out);
      break;
    case Conn::And:
      render_into(f.lhs(), 2, out);
      out += " & ";
      render_into(f.rhs(), 3, out);
      break;
    case Conn::Or:
      render_into(f.lhs(), 1, out);
      out += " | ";
      render_into(f.rhs(), 2, out);
      break;
    case Conn::Imp:
      render_into(f.lhs(), 1, out);
      out += " -> ";
      render_into(f.rhs(), 0, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  render_into(f, 0, out);
  return out;
}

Formula substitute(const Formula& f, const Binding& binding) {
  switch (f.kind()) {
    case Conn::Var: {
      auto it = binding.find(f.var_name());
      return it == binding.end() ? f : it->second;
    }
    case Conn::Neg:
      return Formula::neg(substitute(f.child(), binding));
    case Conn::Undet:
      return Formula::undet(substitute(f.child(), binding));
    case Conn::And:
      return Formula::conj(substitute(f.lhs(), binding), substitute(f.rhs(), binding));
    case Conn::Or:
      return Formula::disj(substitute(f.lhs(), binding), substitute(f.rhs(), binding));
    case Conn::Imp:
      return Formula::imp(substitute(f.lhs(), binding), substitute(f.rhs(), binding));
  }
  throw InvalidInputError("corrupt formula node");
}

namespace {

void collect_subformulas(const Formula& f, FormulaSet& out) {
  switch (f.kind()) {
    case Conn::Var:
      break;
    case Conn::Neg:
    case Conn::Undet:
      collect_subformulas(f.child(), out);
      break;
    default:
      collect_subformulas(f.lhs(), out);
      collect_subformulas(f.rhs(), out);
      break;
  }
  out.insert(f);
}

}  // namespace

FormulaSet subformulas(const Formula& f) {
  FormulaSet out;
  collect_subformulas(f, out);
  return out;
}

}  // namespace mbstar
