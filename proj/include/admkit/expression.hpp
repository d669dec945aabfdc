#ifndef ADMKIT_EXPRESSION_HPP
#define ADMKIT_EXPRESSION_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "admkit/fields.hpp"

namespace admkit {

struct ExpressionParseError : std::runtime_error {
  ExpressionParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        offset(offset) {}
  std::size_t offset;
};

// Closed-form scalar expressions over x, y, z, r with + - * / ^, the functions
// exp, log, sqrt, sin, cos, and the constant pi. Evaluating the parsed tree on
// coordinate jets yields exact derivatives, so expression fields never fall
// back to finite differences.
class Expression {
 public:
  static Expression parse(std::string_view text);

  double value(const ChartPoint& p) const;
  Jet jet(const ChartPoint& p) const;
  ScalarField field(double declared_decay = 0.0, double inner_radius = 0.0) const;
  const std::string& text() const { return text_; }

 private:
  enum class Op { Number, Var, Neg, Add, Sub, Mul, Div, Pow, Call };
  struct Node {
    Op op = Op::Number;
    double number = 0.0;
    int var = 0;   // 0..2 -> x,y,z; 3 -> r
    int func = 0;  // index into the function table
    int a = -1, b = -1;
  };

  template <class T>
  T eval(int node, const T& x, const T& y, const T& z) const;

  std::vector<Node> nodes_;
  int root_ = -1;
  std::string text_;

  friend class ExpressionParser;
};

}  // namespace admkit

#endif  // ADMKIT_EXPRESSION_HPP
