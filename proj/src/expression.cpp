#include "admkit/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace admkit {

namespace {

enum FuncId { kExp = 0, kLog, kSqrt, kSin, kCos };

const char* kFuncNames[] = {"exp", "log", "sqrt", "sin", "cos"};

template <class T>
T call_func(int id, const T& arg) {
  using std::cos;
  using std::exp;
  using std::log;
  using std::sin;
  using std::sqrt;
  switch (id) {
    case kExp: return exp(arg);
    case kLog: return log(arg);
    case kSqrt: return sqrt(arg);
    case kSin: return sin(arg);
    case kCos: return cos(arg);
  }
  throw std::logic_error("unknown function id");
}

template <class T>
T make_scalar(double v);

template <>
double make_scalar<double>(double v) { return v; }

template <>
Jet make_scalar<Jet>(double v) { return Jet::constant(v); }

template <class T>
T power(const T& base, const T& exponent, bool integral_exponent, double exp_value);

template <>
double power<double>(const double& base, const double& exponent, bool, double) {
  return std::pow(base, exponent);
}

template <>
Jet power<Jet>(const Jet& base, const Jet& exponent, bool constant_exponent,
               double exp_value) {
  // A constant exponent uses the direct rule (valid for negative bases with
  // integer exponents); otherwise go through exp(b log a).
  if (constant_exponent) return pow(base, exp_value);
  return pow(base, exponent);
}

}  // namespace

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Expression run() {
    Expression e;
    e.text_ = std::string(text_);
    nodes_ = &e.nodes_;
    pos_ = 0;
    e.root_ = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ExpressionParseError("unexpected trailing input", pos_);
    }
    return e;
  }

 private:
  using Node = Expression::Node;
  using Op = Expression::Op;

  int add(Node n) {
    nodes_->push_back(n);
    return static_cast<int>(nodes_->size()) - 1;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  int parse_expr() {
    int lhs = parse_term();
    for (;;) {
      if (eat('+')) {
        const int rhs = parse_term();
        lhs = add({Op::Add, 0, 0, 0, lhs, rhs});
      } else if (eat('-')) {
        const int rhs = parse_term();
        lhs = add({Op::Sub, 0, 0, 0, lhs, rhs});
      } else {
        return lhs;
      }
    }
  }

  int parse_term() {
    int lhs = parse_unary();
    for (;;) {
      if (eat('*')) {
        const int rhs = parse_unary();
        lhs = add({Op::Mul, 0, 0, 0, lhs, rhs});
      } else if (eat('/')) {
        const int rhs = parse_unary();
        lhs = add({Op::Div, 0, 0, 0, lhs, rhs});
      } else {
        return lhs;
      }
    }
  }

  int parse_unary() {
    if (eat('-')) return add({Op::Neg, 0, 0, 0, parse_unary(), -1});
    if (eat('+')) return parse_unary();
    return parse_power();
  }

  int parse_power() {
    const int base = parse_primary();
    if (eat('^')) {
      const int exponent = parse_unary();  // right-associative
      return add({Op::Pow, 0, 0, 0, base, exponent});
    }
    return base;
  }

  int parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) {
      throw ExpressionParseError("expected operand", pos_);
    }
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      const int inner = parse_expr();
      if (!eat(')')) throw ExpressionParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return parse_number();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      return parse_ident();
    }
    throw ExpressionParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  int parse_number() {
    const char* start = text_.data() + pos_;
    char* end = nullptr;
    const double v = std::strtod(start, &end);
    if (end == start) throw ExpressionParseError("malformed number", pos_);
    pos_ += static_cast<std::size_t>(end - start);
    Node n;
    n.op = Op::Number;
    n.number = v;
    return add(n);
  }

  int parse_ident() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);

    if (name == "x" || name == "y" || name == "z" || name == "r") {
      Node n;
      n.op = Op::Var;
      n.var = name == "x" ? 0 : name == "y" ? 1 : name == "z" ? 2 : 3;
      return add(n);
    }
    if (name == "pi") {
      Node n;
      n.op = Op::Number;
      n.number = M_PI;
      return add(n);
    }
    for (int id = 0; id < 5; ++id) {
      if (name == kFuncNames[id]) {
        if (!eat('(')) throw ExpressionParseError("expected '(' after function name", pos_);
        const int arg = parse_expr();
        if (!eat(')')) throw ExpressionParseError("expected ')'", pos_);
        Node n;
        n.op = Op::Call;
        n.func = id;
        n.a = arg;
        return add(n);
      }
    }
    throw ExpressionParseError("unknown identifier '" + std::string(name) + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Node>* nodes_ = nullptr;
};

Expression Expression::parse(std::string_view text) {
  return ExpressionParser(text).run();
}

template <class T>
T Expression::eval(int idx, const T& x, const T& y, const T& z) const {
  const Node& n = nodes_[idx];
  switch (n.op) {
    case Op::Number:
      return make_scalar<T>(n.number);
    case Op::Var:
      switch (n.var) {
        case 0: return x;
        case 1: return y;
        case 2: return z;
        default: {
          using std::sqrt;
          return sqrt(x * x + y * y + z * z);
        }
      }
    case Op::Neg:
      return -eval<T>(n.a, x, y, z);
    case Op::Add:
      return eval<T>(n.a, x, y, z) + eval<T>(n.b, x, y, z);
    case Op::Sub:
      return eval<T>(n.a, x, y, z) - eval<T>(n.b, x, y, z);
    case Op::Mul:
      return eval<T>(n.a, x, y, z) * eval<T>(n.b, x, y, z);
    case Op::Div:
      return eval<T>(n.a, x, y, z) / eval<T>(n.b, x, y, z);
    case Op::Pow: {
      const Node& e = nodes_[n.b];
      const bool constant_exponent = e.op == Op::Number;
      return power<T>(eval<T>(n.a, x, y, z), eval<T>(n.b, x, y, z), constant_exponent,
                      constant_exponent ? e.number : 0.0);
    }
    case Op::Call:
      return call_func<T>(n.func, eval<T>(n.a, x, y, z));
  }
  throw std::logic_error("corrupt expression tree");
}

double Expression::value(const ChartPoint& p) const {
  return eval<double>(root_, p.x(), p.y(), p.z());
}

Jet Expression::jet(const ChartPoint& p) const {
  return eval<Jet>(root_, Jet::coordinate(p.x(), 0), Jet::coordinate(p.y(), 1),
                   Jet::coordinate(p.z(), 2));
}

ScalarField Expression::field(double declared_decay, double inner_radius) const {
  auto self = std::make_shared<Expression>(*this);
  return ScalarField::from_jet_evaluator(
      [self](const ChartPoint& p) { return self->value(p); },
      [self](const ChartPoint& p) { return self->jet(p); }, declared_decay,
      inner_radius);
}

}  // namespace admkit
