#include "bgal/expr.hpp"

#include <fmt/format.h>

#include <array>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <utility>

#include "bgal/error.hpp"

namespace bgal {

namespace {

constexpr std::array<std::pair<std::string_view, Variable>, 7> kVariables{{
    {"x", Variable::X},
    {"p", Variable::P},
    {"dp", Variable::DP},
    {"d2p", Variable::D2P},
    {"q", Variable::Q},
    {"dq", Variable::DQ},
    {"d2q", Variable::D2Q},
}};

constexpr std::array<std::pair<std::string_view, Function>, 5> kFunctions{{
    {"exp", Function::Exp},
    {"sin", Function::Sin},
    {"cos", Function::Cos},
    {"ln", Function::Ln},
    {"sqrt", Function::Sqrt},
}};

std::string_view function_name(Function fn) {
  for (const auto& [name, f] : kFunctions) {
    if (f == fn) return name;
  }
  return "?";
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Expr::NodePtr make(auto&& alternative) {
  return std::make_shared<const Expr::Node>(
      Expr::Node{std::forward<decltype(alternative)>(alternative)});
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr::NodePtr parse() {
    auto node = expr();
    skip_ws();
    if (pos_ != src_.size()) {
      fail(fmt::format("unexpected '{}'", src_[pos_]));
    }
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& what,
                         ParseError::Kind kind = ParseError::Kind::Syntax) const {
    throw ParseError(kind, what, pos_);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  Expr::NodePtr expr() {
    auto lhs = term();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      lhs = make(Expr::Binary{c, lhs, term()});
    }
  }

  Expr::NodePtr term() {
    auto lhs = factor();
    for (;;) {
      const char c = peek();
      if (c != '*' && c != '/') return lhs;
      ++pos_;
      lhs = make(Expr::Binary{c, lhs, factor()});
    }
  }

  Expr::NodePtr factor() {
    if (accept('-')) {
      auto operand = factor();
      // keep "-1" a literal so printed constants parse back to the same tree
      if (const auto* n = std::get_if<Expr::Number>(&operand->value)) return make(Expr::Number{-n->value});
      return make(Expr::Negate{operand});
    }
    return power();
  }

  Expr::NodePtr power() {
    auto base = primary();
    if (!accept('^')) return base;
    skip_ws();
    const bool negative = accept('-');
    skip_ws();
    if (pos_ >= src_.size() ||
        !(std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) {
      fail("exponent must be a numeric literal", ParseError::Kind::NonLiteralExponent);
    }
    const double e = number();
    return make(Expr::Power{base, negative ? -e : e});
  }

  double number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        digits();
      } else {
        pos_ = save;
      }
    }
    const std::string text(src_.substr(start, pos_ - start));
    if (text == ".") {
      pos_ = start;
      fail("malformed number");
    }
    return std::strtod(text.c_str(), nullptr);
  }

  Expr::NodePtr primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return make(Expr::Number{number()});
    }
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = src_.substr(start, pos_ - start);
      if (auto var = variable_from_name(name)) return make(Expr::Var{*var});
      for (const auto& [fname, fn] : kFunctions) {
        if (fname == name) {
          if (!accept('(')) fail(fmt::format("expected '(' after {}", name));
          auto arg = expr();
          if (!accept(')')) fail("expected ')'");
          return make(Expr::Call{fn, arg});
        }
      }
      pos_ = start;
      fail(fmt::format("unknown identifier '{}'", name), ParseError::Kind::UnknownIdentifier);
    }
    fail(fmt::format("unexpected '{}'", c));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Evaluation

double int_power(double base, int e) {
  double r = 1.0;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

double eval_node(const Expr::Node& node, const PointState& s) {
  return std::visit(
      Overloaded{
          [](const Expr::Number& n) { return n.value; },
          [&](const Expr::Var& v) { return s[v.var]; },
          [&](const Expr::Negate& n) { return -eval_node(*n.operand, s); },
          [&](const Expr::Binary& b) {
            const double l = eval_node(*b.lhs, s);
            const double r = eval_node(*b.rhs, s);
            switch (b.op) {
              case '+': return l + r;
              case '-': return l - r;
              case '*': return l * r;
              default:
                if (r == 0.0) throw EvalError("division by zero", s.x);
                return l / r;
            }
          },
          [&](const Expr::Power& p) {
            const double base = eval_node(*p.base, s);
            const double e = p.exponent;
            if (e == std::trunc(e) && std::abs(e) <= 16.0) {
              const int k = static_cast<int>(std::abs(e));
              const double v = int_power(base, k);
              if (e >= 0) return v;
              if (v == 0.0) throw EvalError("division by zero in negative power", s.x);
              return 1.0 / v;
            }
            if (base < 0.0) throw EvalError("negative base with non-integer exponent", s.x);
            if (base == 0.0 && e < 0.0) throw EvalError("division by zero in negative power", s.x);
            return std::pow(base, e);
          },
          [&](const Expr::Call& c) {
            const double a = eval_node(*c.arg, s);
            switch (c.fn) {
              case Function::Exp: return std::exp(a);
              case Function::Sin: return std::sin(a);
              case Function::Cos: return std::cos(a);
              case Function::Ln:
                if (!(a > 0.0)) throw EvalError("ln of non-positive value", s.x);
                return std::log(a);
              case Function::Sqrt:
                if (a < 0.0) throw EvalError("sqrt of negative value", s.x);
                return std::sqrt(a);
            }
            return 0.0;
          },
      },
      node.value);
}

void collect_vars(const Expr::Node& node, VariableSet& out) {
  std::visit(Overloaded{
                 [](const Expr::Number&) {},
                 [&](const Expr::Var& v) { out.insert(v.var); },
                 [&](const Expr::Negate& n) { collect_vars(*n.operand, out); },
                 [&](const Expr::Binary& b) {
                   collect_vars(*b.lhs, out);
                   collect_vars(*b.rhs, out);
                 },
                 [&](const Expr::Power& p) { collect_vars(*p.base, out); },
                 [&](const Expr::Call& c) { collect_vars(*c.arg, out); },
             },
             node.value);
}

std::string print_node(const Expr::Node& node) {
  return std::visit(
      Overloaded{
          [](const Expr::Number& n) { return fmt::format("{}", n.value); },
          [](const Expr::Var& v) { return std::string(to_string(v.var)); },
          [](const Expr::Negate& n) { return "-" + print_node(*n.operand); },
          [](const Expr::Binary& b) {
            return fmt::format("({} {} {})", print_node(*b.lhs), b.op, print_node(*b.rhs));
          },
          [](const Expr::Power& p) {
            std::string base = print_node(*p.base);
            const auto* num = std::get_if<Expr::Number>(&p.base->value);
            const bool wrap = std::holds_alternative<Expr::Negate>(p.base->value) ||
                              std::holds_alternative<Expr::Power>(p.base->value) ||
                              (num && std::signbit(num->value));
            if (wrap) base = "(" + base + ")";
            return fmt::format("{}^{}", base, p.exponent);
          },
          [](const Expr::Call& c) {
            return fmt::format("{}({})", function_name(c.fn), print_node(*c.arg));
          },
      },
      node.value);
}

bool same_node(const Expr::Node& l, const Expr::Node& r) {
  if (l.value.index() != r.value.index()) return false;
  return std::visit(
      Overloaded{
          [&](const Expr::Number& a) { return a.value == std::get<Expr::Number>(r.value).value; },
          [&](const Expr::Var& a) { return a.var == std::get<Expr::Var>(r.value).var; },
          [&](const Expr::Negate& a) {
            return same_node(*a.operand, *std::get<Expr::Negate>(r.value).operand);
          },
          [&](const Expr::Binary& a) {
            const auto& b = std::get<Expr::Binary>(r.value);
            return a.op == b.op && same_node(*a.lhs, *b.lhs) && same_node(*a.rhs, *b.rhs);
          },
          [&](const Expr::Power& a) {
            const auto& b = std::get<Expr::Power>(r.value);
            return a.exponent == b.exponent && same_node(*a.base, *b.base);
          },
          [&](const Expr::Call& a) {
            const auto& b = std::get<Expr::Call>(r.value);
            return a.fn == b.fn && same_node(*a.arg, *b.arg);
          },
      },
      l.value);
}

}  // namespace

std::string_view to_string(Variable v) {
  for (const auto& [name, var] : kVariables) {
    if (var == v) return name;
  }
  return "?";
}

std::optional<Variable> variable_from_name(std::string_view name) {
  for (const auto& [n, var] : kVariables) {
    if (n == name) return var;
  }
  return std::nullopt;
}

double PointState::operator[](Variable v) const noexcept {
  switch (v) {
    case Variable::X: return x;
    case Variable::P: return p;
    case Variable::DP: return dp;
    case Variable::D2P: return d2p;
    case Variable::Q: return q;
    case Variable::DQ: return dq;
    case Variable::D2Q: return d2q;
  }
  return 0.0;
}

Expr::Expr() : root_(make(Number{0.0})) {}

Expr::Expr(NodePtr root) : root_(std::move(root)) {}

Expr Expr::constant(double value) { return Expr(make(Number{value})); }

double Expr::evaluate(const PointState& state) const {
  const double v = eval_node(*root_, state);
  if (!std::isfinite(v)) throw EvalError("non-finite value", state.x);
  return v;
}

double Expr::evaluate_at(double x) const {
  PointState s;
  s.x = x;
  return evaluate(s);
}

VariableSet Expr::free_vars() const {
  VariableSet out;
  collect_vars(*root_, out);
  return out;
}

bool Expr::depends_only_on(const VariableSet& allowed) const {
  for (Variable v : free_vars()) {
    if (!allowed.contains(v)) return false;
  }
  return true;
}

std::string Expr::to_string() const { return print_node(*root_); }

bool operator==(const Expr& lhs, const Expr& rhs) { return same_node(*lhs.root_, *rhs.root_); }

Expr parse_expr(std::string_view source) { return Expr(Parser(source).parse()); }

}  // namespace bgal
