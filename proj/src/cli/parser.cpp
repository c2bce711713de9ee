#include "lpb/cli/parser.hpp"

#include <cctype>

namespace lpb {

ExpressionError::ExpressionError(const std::string& message, int line, int column)
    : InvalidInput(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      line_(line),
      column_(column) {}

namespace {

constexpr long kMaxExponent = 1000;

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i + k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    i += n;
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    const int l = line, c = column;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && src[j] == '.') throw ExpressionError("decimal literals are not supported; write a/b", l, c);
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), l, c});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, c});
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (ch) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: throw ExpressionError(std::string("unexpected character '") + ch + "'", l, c);
    }
    out.push_back({kind, std::string(1, ch), l, c});
    advance(1);
  }
  out.push_back({Tok::End, "", line, column});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, const std::set<std::string>& vars) : tokens_(lex(src)), vars_(vars) {}

  AstPtr parse() {
    if (peek().kind == Tok::End) throw ExpressionError("empty expression", peek().line, peek().column);
    AstPtr e = expression(0);
    if (peek().kind != Tok::End) throw ExpressionError("unexpected '" + peek().text + "'", peek().line, peek().column);
    return e;
  }

 private:
  static constexpr int kUnary = 30;

  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  static int infix_power(Tok t) {
    switch (t) {
      case Tok::Plus:
      case Tok::Minus: return 10;
      case Tok::Star:
      case Tok::Slash: return 20;
      case Tok::Caret: return 40;
      default: return -1;
    }
  }

  static AstPtr node(Ast::Kind kind, std::vector<AstPtr> children, const Token& at) {
    auto a = std::make_shared<Ast>();
    a->kind = kind;
    a->children = std::move(children);
    a->line = at.line;
    a->column = at.column;
    return a;
  }

  AstPtr expression(int min_power) {
    AstPtr lhs = prefix();
    for (;;) {
      const Token& op = peek();
      const int power = infix_power(op.kind);
      if (power < 0) {
        if (op.kind == Tok::End || op.kind == Tok::RParen) return lhs;
        throw ExpressionError("expected an operator before '" + op.text + "'", op.line, op.column);
      }
      if (power <= min_power) return lhs;
      take();
      if (op.kind == Tok::Caret) {
        auto p = std::make_shared<Ast>();
        p->kind = Ast::Kind::Pow;
        p->exponent = exponent();
        p->children = {lhs};
        p->line = op.line;
        p->column = op.column;
        lhs = p;
        continue;
      }
      AstPtr rhs = expression(power);
      const Ast::Kind kind = op.kind == Tok::Plus    ? Ast::Kind::Add
                             : op.kind == Tok::Minus ? Ast::Kind::Sub
                             : op.kind == Tok::Star  ? Ast::Kind::Mul
                                                     : Ast::Kind::Div;
      lhs = node(kind, {lhs, rhs}, op);
    }
  }

  long exponent() {
    const Token& start = peek();
    bool paren = false;
    if (start.kind == Tok::LParen) {
      paren = true;
      take();
    }
    bool negative = false;
    if (peek().kind == Tok::Minus || peek().kind == Tok::Plus) negative = take().kind == Tok::Minus;
    const Token& num = peek();
    if (num.kind != Tok::Number) throw ExpressionError("exponent must be an integer literal", num.line, num.column);
    take();
    const Integer v(num.text);
    if (v > kMaxExponent) throw ExpressionError("exponent too large", num.line, num.column);
    if (paren) {
      if (peek().kind == Tok::Slash) throw ExpressionError("exponent must be an integer literal", num.line, num.column);
      if (peek().kind != Tok::RParen) throw ExpressionError("expected ')' after exponent", peek().line, peek().column);
      take();
    }
    if (peek().kind == Tok::Caret) {
      // right associativity: a^b^c = a^(b^c) with b^c an integer
      take();
      const long inner = exponent();
      if (inner < 0) throw ExpressionError("exponent must be an integer literal", num.line, num.column);
      Integer r;
      mpz_pow_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(inner));
      if (r > kMaxExponent) throw ExpressionError("exponent too large", num.line, num.column);
      return negative ? -r.get_si() : r.get_si();
    }
    return negative ? -v.get_si() : v.get_si();
  }

  AstPtr prefix() {
    const Token& tok = take();
    switch (tok.kind) {
      case Tok::Number: {
        auto a = std::make_shared<Ast>();
        a->kind = Ast::Kind::Integer;
        a->value = Integer(tok.text);
        a->line = tok.line;
        a->column = tok.column;
        return a;
      }
      case Tok::Ident: {
        if (!vars_.count(tok.text)) throw ExpressionError("unknown variable '" + tok.text + "'", tok.line, tok.column);
        auto a = std::make_shared<Ast>();
        a->kind = Ast::Kind::Variable;
        a->name = tok.text;
        a->line = tok.line;
        a->column = tok.column;
        return a;
      }
      case Tok::Minus: return node(Ast::Kind::Neg, {expression(kUnary)}, tok);
      case Tok::Plus: return expression(kUnary);
      case Tok::LParen: {
        AstPtr inner = expression(0);
        if (peek().kind != Tok::RParen) throw ExpressionError("expected ')'", peek().line, peek().column);
        take();
        return inner;
      }
      case Tok::End: throw ExpressionError("unexpected end of expression", tok.line, tok.column);
      default: throw ExpressionError("unexpected '" + tok.text + "'", tok.line, tok.column);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const std::set<std::string>& vars_;
};

RationalFunction power(const RationalFunction& base, long n) { return rf_power(base, n); }
ExtendedExpression power(const ExtendedExpression& base, long n) { return base.pow(n); }

template <class V, class Leaf>
V evaluate(const Ast& a, const Leaf& leaf) {
  switch (a.kind) {
    case Ast::Kind::Integer:
    case Ast::Kind::Variable: return leaf(a);
    case Ast::Kind::Neg: return -evaluate<V>(*a.children[0], leaf);
    case Ast::Kind::Add: return evaluate<V>(*a.children[0], leaf) + evaluate<V>(*a.children[1], leaf);
    case Ast::Kind::Sub: return evaluate<V>(*a.children[0], leaf) - evaluate<V>(*a.children[1], leaf);
    case Ast::Kind::Mul: return evaluate<V>(*a.children[0], leaf) * evaluate<V>(*a.children[1], leaf);
    case Ast::Kind::Div: {
      const V d = evaluate<V>(*a.children[1], leaf);
      if (d.is_zero()) throw ExpressionError("division by zero", a.line, a.column);
      try {
        return evaluate<V>(*a.children[0], leaf) / d;
      } catch (const ExpressionError&) {
        throw;
      } catch (const InvalidInput& e) {
        throw ExpressionError(e.what(), a.line, a.column);
      }
    }
    case Ast::Kind::Pow: {
      const V base = evaluate<V>(*a.children[0], leaf);
      if (a.exponent < 0 && base.is_zero()) throw ExpressionError("division by zero", a.line, a.column);
      try {
        return power(base, a.exponent);
      } catch (const ExpressionError&) {
        throw;
      } catch (const InvalidInput& e) {
        throw ExpressionError(e.what(), a.line, a.column);
      }
    }
  }
  throw ExpressionError("malformed expression", a.line, a.column);
}

}  // namespace

AstPtr parse_expression(std::string_view src, const std::set<std::string>& variables) {
  return Parser(src, variables).parse();
}

std::string to_sexpr(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::Integer: return a.value.get_str();
    case Ast::Kind::Variable: return a.name;
    case Ast::Kind::Neg: return "Neg(" + to_sexpr(*a.children[0]) + ")";
    case Ast::Kind::Pow: return "Pow(" + to_sexpr(*a.children[0]) + ", " + std::to_string(a.exponent) + ")";
    default: break;
  }
  const char* name = a.kind == Ast::Kind::Add ? "Add" : a.kind == Ast::Kind::Sub ? "Sub" : a.kind == Ast::Kind::Mul ? "Mul" : "Div";
  return std::string(name) + "(" + to_sexpr(*a.children[0]) + ", " + to_sexpr(*a.children[1]) + ")";
}

RationalFunction to_rational_function(const Ast& ast, std::string_view var) {
  return evaluate<RationalFunction>(ast, [&](const Ast& leaf) {
    if (leaf.kind == Ast::Kind::Integer) return RationalFunction::constant(Rational(leaf.value));
    if (leaf.name != var) throw ExpressionError("unknown variable '" + leaf.name + "'", leaf.line, leaf.column);
    return RationalFunction::variable();
  });
}

ExtendedExpression to_extended_expression(const Ast& ast, const FieldPtr& field) {
  return evaluate<ExtendedExpression>(ast, [&](const Ast& leaf) {
    if (leaf.kind == Ast::Kind::Integer) return ExtendedExpression::constant(NumberFieldElement(Rational(leaf.value)));
    if (leaf.name == "x") return ExtendedExpression::generator(Generator::X);
    if (leaf.name == "y") return ExtendedExpression::generator(Generator::Y);
    if (leaf.name == "t") return ExtendedExpression::generator(Generator::T);
    if (leaf.name == "gamma1") return ExtendedExpression::generator(Generator::Gamma1);
    if (leaf.name == "gamma2") return ExtendedExpression::generator(Generator::Gamma2);
    if (leaf.name == "z" && field) return ExtendedExpression::constant(NumberFieldElement::generator(field));
    throw ExpressionError("unknown variable '" + leaf.name + "'", leaf.line, leaf.column);
  });
}

RationalFunction parse_rational_function(std::string_view src) { return to_rational_function(*parse_expression(src)); }

Poly parse_polynomial(std::string_view src, std::string_view var) {
  const RationalFunction r = to_rational_function(*parse_expression(src, {std::string(var)}), var);
  if (!r.is_polynomial()) throw ExpressionError("expected a polynomial", 1, 1);
  return r.num();
}

ExtendedExpression parse_extended_expression(std::string_view src, const FieldPtr& field) {
  std::set<std::string> vars{"x", "y", "t", "gamma1", "gamma2"};
  if (field) vars.insert("z");
  return to_extended_expression(*parse_expression(src, vars), field);
}

}  // namespace lpb
