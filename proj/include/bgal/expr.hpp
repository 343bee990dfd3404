#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>

namespace bgal {

/// Names an expression may reference. Derivatives go up to second order only.
enum class Variable : std::uint8_t { X, P, DP, D2P, Q, DQ, D2Q };

enum class Function : std::uint8_t { Exp, Sin, Cos, Ln, Sqrt };

std::string_view to_string(Variable v);
std::optional<Variable> variable_from_name(std::string_view name);

using VariableSet = std::set<Variable>;

/// Values of x and the two trial functions (with derivatives) at one point.
struct PointState {
  double x = 0.0;
  double p = 0.0;
  double dp = 0.0;
  double d2p = 0.0;
  double q = 0.0;
  double dq = 0.0;
  double d2q = 0.0;

  double operator[](Variable v) const noexcept;
};

/// Immutable expression tree. Copies share nodes.
class Expr {
 public:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Number {
    double value;
  };
  struct Var {
    Variable var;
  };
  struct Negate {
    NodePtr operand;
  };
  struct Binary {
    char op;  // one of + - * /
    NodePtr lhs;
    NodePtr rhs;
  };
  /// base ^ literal
  struct Power {
    NodePtr base;
    double exponent;
  };
  struct Call {
    Function fn;
    NodePtr arg;
  };

  struct Node {
    std::variant<Number, Var, Negate, Binary, Power, Call> value;
  };

  Expr();  // the literal 0
  explicit Expr(NodePtr root);

  static Expr constant(double value);

  const Node& root() const noexcept { return *root_; }

  /// Throws EvalError on division by zero, ln/sqrt outside their domain,
  /// or a non-finite result.
  double evaluate(const PointState& state) const;
  double evaluate_at(double x) const;

  VariableSet free_vars() const;
  bool depends_only_on(const VariableSet& allowed) const;
  bool is_constant() const { return free_vars().empty(); }

  /// Text that parses back to a structurally identical tree.
  std::string to_string() const;

  friend bool operator==(const Expr& lhs, const Expr& rhs);

 private:
  NodePtr root_;
};

/// Grammar (whitespace insignificant):
///   expr    := term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor)*
///   factor  := '-' factor | power
///   power   := primary ('^' ['-'] number)?
///   primary := number | variable | function '(' expr ')' | '(' expr ')'
/// Throws ParseError carrying the byte offset of the offending token.
Expr parse_expr(std::string_view source);

}  // namespace bgal
