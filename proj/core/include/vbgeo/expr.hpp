#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vbgeo {

// Closed-form scalar expression over named variables, with symbolic derivatives.
// Grammar: numbers, variables, + - * / ^, unary minus, parentheses, and the
// functions exp log sqrt sin cos sinh cosh tanh pow(a,b); constant `pi`.
class Expr {
 public:
  enum class Op { constant, variable, add, sub, mul, div, neg, pow, exp, log, sqrt,
                  sin, cos, sinh, cosh, tanh };

  Expr();  // constant 0

  static Expr parse(std::string_view text, const std::vector<std::string>& variables);
  static Expr constant(double value);
  static Expr variable(int index);

  double eval(std::span<const double> vars) const;
  double eval(double v) const { return eval(std::span<const double>(&v, 1)); }

  Expr derivative(int var) const;
  bool is_constant() const;
  std::string str() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr make(Op op, Expr a, Expr b = Expr());
  static Expr apply(Op fn, const Expr& a);
  static Expr power(const Expr& a, const Expr& b);
  friend class ExprParser;

  std::shared_ptr<const Node> node_;
};

}  // namespace vbgeo
