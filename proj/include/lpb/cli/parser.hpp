#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lpb/certify/expression.hpp"
#include "lpb/ratfield/rational_function.hpp"

namespace lpb {

/// Syntax or evaluation error in an expression, with a 1-based source position.
class ExpressionError : public InvalidInput {
 public:
  ExpressionError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

struct Ast {
  enum class Kind { Integer, Variable, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind;
  Integer value;     // Integer
  std::string name;  // Variable
  long exponent = 0; // Pow
  std::vector<AstPtr> children;
  int line = 1;
  int column = 1;
};

/// Precedence ^ > unary minus > * / > + -; ^ is right-associative and takes a signed
/// integer literal, optionally parenthesized.
AstPtr parse_expression(std::string_view src, const std::set<std::string>& variables = {"x"});

/// S-expression rendering, e.g. "Pow(x, 2)".
std::string to_sexpr(const Ast& ast);

/// Exact value in Q(var). Throws ExpressionError on division by zero or a foreign variable.
RationalFunction to_rational_function(const Ast& ast, std::string_view var = "x");

/// Value over x, y, t, gamma1, gamma2, with z the generator of `field` when given.
ExtendedExpression to_extended_expression(const Ast& ast, const FieldPtr& field = nullptr);

RationalFunction parse_rational_function(std::string_view src);
Poly parse_polynomial(std::string_view src, std::string_view var);
ExtendedExpression parse_extended_expression(std::string_view src, const FieldPtr& field = nullptr);

}  // namespace lpb
