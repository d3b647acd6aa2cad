#pragma once

#include <cctype>
#include <cmath>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sta/ideals.hpp"

// Expression mini-language over either algebra:
//
//   expr    = term { ("+"|"-") term } ;
//   term    = unary { ("*"|"."|"^") unary } ;
//   unary   = ["-"] postfix ;
//   postfix = atom { "~" } ;
//   atom    = number | ident | "(" expr ")" | func "(" expr { "," expr } ")" ;
//   func    = "rev" | "exp" | "grade" | "par" ;
//
// "*", "." and "^" share one precedence level and associate left; "+"/"-"
// bind looser; postfix "~" binds tightest. Numbers are digits['.'digits]
// (no exponent notation, which would collide with the basis names).

namespace sta {
namespace expr {

class parse_error : public error {
public:
  parse_error(std::string msg, std::size_t offset, std::string expected = "")
      : error(msg + " at byte " + std::to_string(offset) +
              (expected.empty() ? "" : " (expected " + expected + ")")),
        offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

private:
  std::size_t offset_;
  std::string expected_;
};

class eval_error : public error {
public:
  using error::error;
};

enum class BinaryOp { add, sub, mul, inner, outer };
enum class Func { rev, exp, grade, par };

inline const char* to_string(BinaryOp op) {
  switch (op) {
  case BinaryOp::add: return "+";
  case BinaryOp::sub: return "-";
  case BinaryOp::mul: return "*";
  case BinaryOp::inner: return ".";
  case BinaryOp::outer: return "^";
  }
  return "?";
}

inline const char* to_string(Func f) {
  switch (f) {
  case Func::rev: return "rev";
  case Func::exp: return "exp";
  case Func::grade: return "grade";
  case Func::par: return "par";
  }
  return "?";
}

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
  enum class Kind { number, ident, neg, reversion, binary, call } kind;

  double number = 0.0;
  std::string ident;
  BinaryOp op = BinaryOp::add;
  Func func = Func::rev;
  std::vector<NodePtr> children;

  static NodePtr make_number(double v) {
    auto n = std::make_unique<Node>();
    n->kind = Kind::number;
    n->number = v;
    return n;
  }
  static NodePtr make_ident(std::string name) {
    auto n = std::make_unique<Node>();
    n->kind = Kind::ident;
    n->ident = std::move(name);
    return n;
  }
  static NodePtr make_neg(NodePtr c) {
    auto n = std::make_unique<Node>();
    n->kind = Kind::neg;
    n->children.push_back(std::move(c));
    return n;
  }
  static NodePtr make_reversion(NodePtr c) {
    auto n = std::make_unique<Node>();
    n->kind = Kind::reversion;
    n->children.push_back(std::move(c));
    return n;
  }
  static NodePtr make_binary(BinaryOp op, NodePtr l, NodePtr r) {
    auto n = std::make_unique<Node>();
    n->kind = Kind::binary;
    n->op = op;
    n->children.push_back(std::move(l));
    n->children.push_back(std::move(r));
    return n;
  }
  static NodePtr make_call(Func f, std::vector<NodePtr> args) {
    auto n = std::make_unique<Node>();
    n->kind = Kind::call;
    n->func = f;
    n->children = std::move(args);
    return n;
  }
};

inline bool ast_equal(const Node& a, const Node& b) {
  if (a.kind != b.kind)
    return false;
  switch (a.kind) {
  case Node::Kind::number:
    return a.number == b.number;
  case Node::Kind::ident:
    return a.ident == b.ident;
  case Node::Kind::binary:
    if (a.op != b.op)
      return false;
    break;
  case Node::Kind::call:
    if (a.func != b.func)
      return false;
    break;
  default:
    break;
  }
  if (a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!ast_equal(*a.children[i], *b.children[i]))
      return false;
  return true;
}

namespace detail {

struct Token {
  enum class Kind { number, ident, op, lparen, rparen, comma, tilde, end } kind;
  std::string text;
  double number = 0.0;
  std::size_t offset = 0;
};

inline std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
        ++j;
      if (j < src.size() && src[j] == '.') {
        ++j;
        if (j >= src.size() || !std::isdigit(static_cast<unsigned char>(src[j])))
          throw parse_error("malformed number", j, "digit after decimal point");
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
          ++j;
      }
      const std::string text = src.substr(i, j - i);
      out.push_back(Token{Token::Kind::number, text, std::stod(text), start});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      out.push_back(Token{Token::Kind::ident, src.substr(i, j - i), 0.0, start});
      i = j;
      continue;
    }
    switch (c) {
    case '+': case '-': case '*': case '.': case '^':
      out.push_back(Token{Token::Kind::op, std::string(1, c), 0.0, start});
      break;
    case '(':
      out.push_back(Token{Token::Kind::lparen, "(", 0.0, start});
      break;
    case ')':
      out.push_back(Token{Token::Kind::rparen, ")", 0.0, start});
      break;
    case ',':
      out.push_back(Token{Token::Kind::comma, ",", 0.0, start});
      break;
    case '~':
      out.push_back(Token{Token::Kind::tilde, "~", 0.0, start});
      break;
    default:
      throw parse_error(std::string("unexpected character '") + c + "'", start);
    }
    ++i;
  }
  out.push_back(Token{Token::Kind::end, "", 0.0, src.size()});
  return out;
}

} // namespace detail

// Identifiers legal for an algebra: basis vectors by label, "i", and the
// ideal-generator names.
inline std::vector<std::string> known_identifiers(const Algebra& alg) {
  std::vector<std::string> names;
  for (int g = 0; g < alg.dim(); ++g)
    names.push_back(alg.label(g));
  names.insert(names.end(), {"i", "K1", "K2", "K3", "J1", "J2", "J3",
                             "Ep3", "Em3", "Dp3", "Dm3"});
  return names;
}

class Parser {
public:
  Parser(const std::string& src, const Algebra& alg)
      : tokens_(detail::lex(src)), alg_(alg) {}

  NodePtr parse() {
    NodePtr e = parse_expr();
    if (peek().kind != detail::Token::Kind::end)
      throw parse_error("trailing input", peek().offset, "end of expression");
    return e;
  }

private:
  using Token = detail::Token;

  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  bool match_op(const char* text) {
    if (peek().kind == Token::Kind::op && peek().text == text) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    while (true) {
      if (match_op("+"))
        lhs = Node::make_binary(BinaryOp::add, std::move(lhs), parse_term());
      else if (match_op("-"))
        lhs = Node::make_binary(BinaryOp::sub, std::move(lhs), parse_term());
      else
        return lhs;
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_unary();
    while (true) {
      if (match_op("*"))
        lhs = Node::make_binary(BinaryOp::mul, std::move(lhs), parse_unary());
      else if (match_op("."))
        lhs = Node::make_binary(BinaryOp::inner, std::move(lhs), parse_unary());
      else if (match_op("^"))
        lhs = Node::make_binary(BinaryOp::outer, std::move(lhs), parse_unary());
      else
        return lhs;
    }
  }

  NodePtr parse_unary() {
    if (match_op("-"))
      return Node::make_neg(parse_postfix());
    return parse_postfix();
  }

  NodePtr parse_postfix() {
    NodePtr e = parse_atom();
    while (peek().kind == Token::Kind::tilde) {
      advance();
      e = Node::make_reversion(std::move(e));
    }
    return e;
  }

  NodePtr parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
    case Token::Kind::number:
      advance();
      return Node::make_number(t.number);
    case Token::Kind::lparen: {
      advance();
      NodePtr e = parse_expr();
      expect_rparen();
      return e;
    }
    case Token::Kind::ident: {
      advance();
      if (t.text == "rev" || t.text == "exp" || t.text == "grade" || t.text == "par")
        return parse_call(t);
      validate_ident(t);
      return Node::make_ident(t.text);
    }
    default:
      throw parse_error("unexpected token '" + t.text + "'", t.offset,
                        "number, identifier, function call or '('");
    }
  }

  NodePtr parse_call(const Token& name) {
    Func f = Func::rev;
    std::size_t arity = 1;
    if (name.text == "rev") {
      f = Func::rev;
    } else if (name.text == "exp") {
      f = Func::exp;
    } else if (name.text == "par") {
      f = Func::par;
    } else {
      f = Func::grade;
      arity = 2;
    }
    if (peek().kind != Token::Kind::lparen)
      throw parse_error("function '" + name.text + "' needs arguments", peek().offset, "'('");
    advance();
    std::vector<NodePtr> args;
    args.push_back(parse_expr());
    while (peek().kind == Token::Kind::comma) {
      advance();
      args.push_back(parse_expr());
    }
    expect_rparen();
    if (args.size() != arity)
      throw parse_error("function '" + name.text + "' takes " + std::to_string(arity) +
                            " argument(s), got " + std::to_string(args.size()),
                        name.offset);
    return Node::make_call(f, std::move(args));
  }

  void expect_rparen() {
    if (peek().kind != Token::Kind::rparen)
      throw parse_error("unbalanced parenthesis", peek().offset, "')'");
    advance();
  }

  void validate_ident(const Token& t) const {
    for (const auto& name : known_identifiers(alg_))
      if (name == t.text)
        return;
    throw parse_error("unknown identifier '" + t.text + "' for this algebra", t.offset);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Algebra& alg_;
};

inline NodePtr parse(const std::string& src, const Algebra& alg) {
  return Parser(src, alg).parse();
}

class Evaluator {
public:
  explicit Evaluator(const AlgebraPtr& alg)
      : alg_(alg), gens_(IdealGenerators::make(alg)) {}

  Multivector eval(const Node& n) const {
    switch (n.kind) {
    case Node::Kind::number:
      return Multivector::scalar(alg_, n.number);
    case Node::Kind::ident:
      return ident_value(n.ident);
    case Node::Kind::neg:
      return -eval(*n.children[0]);
    case Node::Kind::reversion:
      return reverse(eval(*n.children[0]));
    case Node::Kind::binary: {
      const Multivector l = eval(*n.children[0]);
      const Multivector r = eval(*n.children[1]);
      switch (n.op) {
      case BinaryOp::add: return l + r;
      case BinaryOp::sub: return l - r;
      case BinaryOp::mul: return l * r;
      case BinaryOp::inner: return inner_product(l, r);
      case BinaryOp::outer: return outer_product(l, r);
      }
      throw eval_error("unreachable binary operator");
    }
    case Node::Kind::call:
      return eval_call(n);
    }
    throw eval_error("unreachable node kind");
  }

private:
  Multivector ident_value(const std::string& name) const {
    for (int g = 0; g < alg_->dim(); ++g)
      if (alg_->label(g) == name)
        return Multivector::basis_vector(alg_, g);
    if (name == "i")
      return Multivector::pseudoscalar(alg_);
    if (name == "K1") return gens_.K(1);
    if (name == "K2") return gens_.K(2);
    if (name == "K3") return gens_.K(3);
    if (name == "J1") return gens_.J(1);
    if (name == "J2") return gens_.J(2);
    if (name == "J3") return gens_.J(3);
    if (name == "Ep3") return gens_.E_plus();
    if (name == "Em3") return gens_.E_minus();
    if (name == "Dp3") return gens_.D_plus();
    if (name == "Dm3") return gens_.D_minus();
    throw eval_error("unknown identifier '" + name + "'");
  }

  Multivector eval_call(const Node& n) const {
    switch (n.func) {
    case Func::rev:
      return reverse(eval(*n.children[0]));
    case Func::exp:
      return exp_bivector(eval(*n.children[0]));
    case Func::par:
      if (!alg_->is_sta_signature())
        throw eval_error("par is not available in this algebra");
      return parity(eval(*n.children[0]));
    case Func::grade: {
      const Multivector arg = eval(*n.children[0]);
      const Multivector kmv = eval(*n.children[1]);
      if (kmv != grade_project(kmv, 0))
        throw eval_error("grade index must be a scalar");
      const double kd = kmv.scalar_part();
      const int k = static_cast<int>(std::llround(kd));
      if (kd != static_cast<double>(k) || k < 0 || k > alg_->dim())
        throw eval_error("grade index out of range");
      return grade_project(arg, k);
    }
    }
    throw eval_error("unreachable function");
  }

  AlgebraPtr alg_;
  IdealGenerators gens_;
};

inline Multivector eval(const Node& ast, const AlgebraPtr& alg) {
  return Evaluator(alg).eval(ast);
}

inline Multivector eval_string(const std::string& src, const AlgebraPtr& alg) {
  return eval(*parse(src, *alg), alg);
}

// Fully parenthesized form; re-parses to an identical tree.
inline std::string pretty(const Node& n) {
  switch (n.kind) {
  case Node::Kind::number: {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", n.number);
    return buf;
  }
  case Node::Kind::ident:
    return n.ident;
  case Node::Kind::neg:
    return "(-" + pretty(*n.children[0]) + ")";
  case Node::Kind::reversion:
    return "(" + pretty(*n.children[0]) + ")~";
  case Node::Kind::binary:
    return "(" + pretty(*n.children[0]) + " " + to_string(n.op) + " " +
           pretty(*n.children[1]) + ")";
  case Node::Kind::call: {
    std::string out = to_string(n.func);
    out += "(";
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      if (i)
        out += ", ";
      out += pretty(*n.children[i]);
    }
    out += ")";
    return out;
  }
  }
  return "?";
}

// Human-readable multivector rendering, e.g. "0.5 + 0.5*e0e3".
inline std::string format_multivector(const Multivector& m) {
  std::string out;
  for (unsigned k = 0; k < m.size(); ++k) {
    if (m[k] == 0.0)
      continue;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", std::abs(m[k]));
    if (out.empty())
      out += m[k] < 0 ? "-" : "";
    else
      out += m[k] < 0 ? " - " : " + ";
    out += buf;
    if (k != 0)
      out += std::string("*") + m.algebra()->blade_name(k);
  }
  return out.empty() ? "0" : out;
}

} // namespace expr
} // namespace sta
