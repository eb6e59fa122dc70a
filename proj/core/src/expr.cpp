#include "vbgeo/expr.hpp"

#include "vbgeo/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace vbgeo {

struct Expr::Node {
  Op op;
  double value = 0;  // constant
  int var = -1;      // variable
  Expr a{nullptr}, b{nullptr};
};

namespace {

bool is_const(const Expr& e, double v) { return e.is_constant() && e.eval(std::span<const double>()) == v; }

}  // namespace

Expr::Expr() {
  static const std::shared_ptr<const Node> zero = [] {
    auto n = std::make_shared<Node>();
    n->op = Op::constant;
    return n;
  }();
  node_ = zero;
}

Expr Expr::constant(double value) {
  auto n = std::make_shared<Node>();
  n->op = Op::constant;
  n->value = value;
  return Expr(std::move(n));
}

Expr Expr::variable(int index) {
  auto n = std::make_shared<Node>();
  n->op = Op::variable;
  n->var = index;
  return Expr(std::move(n));
}

bool Expr::is_constant() const { return node_->op == Op::constant; }

Expr Expr::make(Op op, Expr a, Expr b) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  Expr e(std::move(n));
  const bool unary = op == Op::neg || op >= Op::exp;
  if (e.node_->a.is_constant() && (unary || e.node_->b.is_constant()))
    return constant(e.eval(std::span<const double>()));
  return e;
}

Expr operator+(const Expr& a, const Expr& b) {
  if (is_const(a, 0)) return b;
  if (is_const(b, 0)) return a;
  return Expr::make(Expr::Op::add, a, b);
}

Expr operator-(const Expr& a, const Expr& b) {
  if (is_const(b, 0)) return a;
  if (is_const(a, 0)) return -b;
  return Expr::make(Expr::Op::sub, a, b);
}

Expr operator*(const Expr& a, const Expr& b) {
  if (is_const(a, 0) || is_const(b, 0)) return Expr::constant(0);
  if (is_const(a, 1)) return b;
  if (is_const(b, 1)) return a;
  return Expr::make(Expr::Op::mul, a, b);
}

Expr operator/(const Expr& a, const Expr& b) {
  if (is_const(a, 0)) return Expr::constant(0);
  if (is_const(b, 1)) return a;
  return Expr::make(Expr::Op::div, a, b);
}

Expr operator-(const Expr& a) {
  if (a.node_->op == Expr::Op::neg) return a.node_->a;
  return Expr::make(Expr::Op::neg, a);
}

Expr Expr::apply(Op fn, const Expr& a) { return make(fn, a); }

Expr Expr::power(const Expr& a, const Expr& b) {
  if (is_const(b, 0)) return constant(1);
  if (is_const(b, 1)) return a;
  return make(Op::pow, a, b);
}

double Expr::eval(std::span<const double> vars) const {
  const Node& n = *node_;
  switch (n.op) {
    case Op::constant: return n.value;
    case Op::variable:
      if (n.var < 0 || static_cast<std::size_t>(n.var) >= vars.size())
        throw InvalidArgument("expression variable out of range");
      return vars[n.var];
    case Op::add: return n.a.eval(vars) + n.b.eval(vars);
    case Op::sub: return n.a.eval(vars) - n.b.eval(vars);
    case Op::mul: return n.a.eval(vars) * n.b.eval(vars);
    case Op::div: return n.a.eval(vars) / n.b.eval(vars);
    case Op::neg: return -n.a.eval(vars);
    case Op::pow: return std::pow(n.a.eval(vars), n.b.eval(vars));
    case Op::exp: return std::exp(n.a.eval(vars));
    case Op::log: return std::log(n.a.eval(vars));
    case Op::sqrt: return std::sqrt(n.a.eval(vars));
    case Op::sin: return std::sin(n.a.eval(vars));
    case Op::cos: return std::cos(n.a.eval(vars));
    case Op::sinh: return std::sinh(n.a.eval(vars));
    case Op::cosh: return std::cosh(n.a.eval(vars));
    case Op::tanh: return std::tanh(n.a.eval(vars));
  }
  return 0;
}

Expr Expr::derivative(int var) const {
  const Node& n = *node_;
  const Expr& u = n.a;
  const Expr& v = n.b;
  switch (n.op) {
    case Op::constant: return constant(0);
    case Op::variable: return constant(n.var == var ? 1 : 0);
    case Op::add: return u.derivative(var) + v.derivative(var);
    case Op::sub: return u.derivative(var) - v.derivative(var);
    case Op::mul: return u.derivative(var) * v + u * v.derivative(var);
    case Op::div: return (u.derivative(var) * v - u * v.derivative(var)) / (v * v);
    case Op::neg: return -u.derivative(var);
    case Op::pow:
      if (v.is_constant()) {
        const double c = v.eval(std::span<const double>());
        return constant(c) * power(u, constant(c - 1)) * u.derivative(var);
      }
      return *this * (v.derivative(var) * apply(Op::log, u) + v * u.derivative(var) / u);
    case Op::exp: return *this * u.derivative(var);
    case Op::log: return u.derivative(var) / u;
    case Op::sqrt: return u.derivative(var) / (constant(2) * *this);
    case Op::sin: return apply(Op::cos, u) * u.derivative(var);
    case Op::cos: return -(apply(Op::sin, u) * u.derivative(var));
    case Op::sinh: return apply(Op::cosh, u) * u.derivative(var);
    case Op::cosh: return apply(Op::sinh, u) * u.derivative(var);
    case Op::tanh: return (constant(1) - *this * *this) * u.derivative(var);
  }
  return constant(0);
}

std::string Expr::str() const {
  const Node& n = *node_;
  std::ostringstream os;
  os.precision(17);
  auto fn = [&](const char* name) { os << name << '(' << n.a.str() << ')'; };
  switch (n.op) {
    case Op::constant: os << n.value; break;
    case Op::variable: os << "$" << n.var; break;
    case Op::add: os << '(' << n.a.str() << " + " << n.b.str() << ')'; break;
    case Op::sub: os << '(' << n.a.str() << " - " << n.b.str() << ')'; break;
    case Op::mul: os << '(' << n.a.str() << " * " << n.b.str() << ')'; break;
    case Op::div: os << '(' << n.a.str() << " / " << n.b.str() << ')'; break;
    case Op::neg: os << "-(" << n.a.str() << ')'; break;
    case Op::pow: os << '(' << n.a.str() << " ^ " << n.b.str() << ')'; break;
    case Op::exp: fn("exp"); break;
    case Op::log: fn("log"); break;
    case Op::sqrt: fn("sqrt"); break;
    case Op::sin: fn("sin"); break;
    case Op::cos: fn("cos"); break;
    case Op::sinh: fn("sinh"); break;
    case Op::cosh: fn("cosh"); break;
    case Op::tanh: fn("tanh"); break;
  }
  return os.str();
}

class ExprParser {
 public:
  ExprParser(std::string_view text, const std::vector<std::string>& vars)
      : s_(text), vars_(vars) {}

  Expr run() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression '" + std::string(s_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    Expr e = term();
    for (;;) {
      if (accept('+')) e = e + term();
      else if (accept('-')) e = e - term();
      else return e;
    }
  }
  Expr term() {
    Expr e = unary();
    for (;;) {
      if (accept('*')) e = e * unary();
      else if (accept('/')) e = e / unary();
      else return e;
    }
  }
  Expr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return powexpr();
  }
  Expr powexpr() {
    Expr base = primary();
    if (accept('^')) return Expr::power(base, unary());  // right associative
    return base;
  }
  Expr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (accept('(')) {
      Expr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail(std::string("unexpected character '") + c + "'");
  }
  Expr number() {
    const std::string rest(s_.substr(pos_));
    char* end = nullptr;
    const double v = std::strtod(rest.c_str(), &end);
    if (end == rest.c_str()) fail("bad number");
    pos_ += static_cast<std::size_t>(end - rest.c_str());
    return Expr::constant(v);
  }
  Expr identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    const std::string name(s_.substr(start, pos_ - start));
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return Expr::variable(static_cast<int>(i));
    if (name == "pi") return Expr::constant(M_PI);
    using Op = Expr::Op;
    static const std::pair<const char*, Op> fns[] = {
        {"exp", Op::exp},   {"log", Op::log},   {"sqrt", Op::sqrt}, {"sin", Op::sin},
        {"cos", Op::cos},   {"sinh", Op::sinh}, {"cosh", Op::cosh}, {"tanh", Op::tanh}};
    if (name == "pow") {
      if (!accept('(')) fail("expected '(' after pow");
      Expr a = expr();
      if (!accept(',')) fail("expected ',' in pow");
      Expr b = expr();
      if (!accept(')')) fail("expected ')'");
      return Expr::power(a, b);
    }
    for (const auto& [fname, op] : fns) {
      if (name == fname) {
        if (!accept('(')) fail("expected '(' after " + name);
        Expr a = expr();
        if (!accept(')')) fail("expected ')'");
        return Expr::apply(op, a);
      }
    }
    fail("unknown identifier '" + name + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

Expr Expr::parse(std::string_view text, const std::vector<std::string>& variables) {
  return ExprParser(text, variables).run();
}

}  // namespace vbgeo
