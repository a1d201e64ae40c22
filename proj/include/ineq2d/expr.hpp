#pragma once

// Bivariate expression language: parsing, evaluation, printing and exact
// symbolic differentiation of real functions of (x, y).
//
// Grammar (whitespace-insensitive):
//   expr  := term (('+'|'-') term)*
//   term  := factor (('*'|'/') factor)*
//   factor:= ('-')? power
//   power := atom ('^' power)?
//   atom  := number | 'x' | 'y' | 'pi' | 'e' | func '(' expr ')' | '(' expr ')'
//   func  := sin | cos | tan | exp | log | sqrt | abs | sgn | step

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ineq2d/errors.hpp"

namespace ineq2d {

enum class Var { X, Y };

struct EvalPoint {
  double x = 0.0;
  double y = 0.0;
};

enum class Op : std::uint8_t {
  Number,
  Pi,
  E,
  X,
  Y,
  Add,
  Sub,
  Mul,
  Div,
  Pow,
  Neg,
  Sin,
  Cos,
  Tan,
  Exp,
  Log,
  Sqrt,
  Abs,
  Sgn,
  Step,
};

inline constexpr int arity(Op op) noexcept {
  switch (op) {
    case Op::Number:
    case Op::Pi:
    case Op::E:
    case Op::X:
    case Op::Y:
      return 0;
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div:
    case Op::Pow:
      return 2;
    default:
      return 1;
  }
}

inline constexpr bool is_function(Op op) noexcept { return op >= Op::Sin; }

/// abs, sgn and step: differentiable only almost everywhere.
inline constexpr bool is_nonsmooth(Op op) noexcept {
  return op == Op::Abs || op == Op::Sgn || op == Op::Step;
}

inline constexpr std::string_view function_name(Op op) noexcept {
  switch (op) {
    case Op::Sin: return "sin";
    case Op::Cos: return "cos";
    case Op::Tan: return "tan";
    case Op::Exp: return "exp";
    case Op::Log: return "log";
    case Op::Sqrt: return "sqrt";
    case Op::Abs: return "abs";
    case Op::Sgn: return "sgn";
    case Op::Step: return "step";
    default: return "";
  }
}

inline std::optional<Op> function_from_name(std::string_view name) noexcept {
  for (Op op : {Op::Sin, Op::Cos, Op::Tan, Op::Exp, Op::Log, Op::Sqrt, Op::Abs, Op::Sgn, Op::Step}) {
    if (function_name(op) == name) return op;
  }
  return std::nullopt;
}

/// Scalar semantics shared by the evaluator and the constant folder.
/// step(0) = 1, sgn(0) = 0.
inline double apply_unary(Op op, double v) noexcept {
  switch (op) {
    case Op::Neg: return -v;
    case Op::Sin: return std::sin(v);
    case Op::Cos: return std::cos(v);
    case Op::Tan: return std::tan(v);
    case Op::Exp: return std::exp(v);
    case Op::Log: return std::log(v);
    case Op::Sqrt: return std::sqrt(v);
    case Op::Abs: return std::fabs(v);
    case Op::Sgn: return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
    case Op::Step: return v >= 0.0 ? 1.0 : 0.0;
    default: return v;
  }
}

inline double apply_binary(Op op, double l, double r) noexcept {
  switch (op) {
    case Op::Add: return l + r;
    case Op::Sub: return l - r;
    case Op::Mul: return l * r;
    case Op::Div: return l / r;
    case Op::Pow: return std::pow(l, r);
    default: return 0.0;
  }
}

namespace detail {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  Op op = Op::Number;
  double value = 0.0;
  NodePtr lhs;
  NodePtr rhs;
};

struct Instr {
  Op op;
  double value;
};

/// Postfix form of an AST, evaluated with a value stack.
struct Program {
  std::vector<Instr> code;
  std::size_t max_depth = 0;
};

inline void emit(const Node& n, Program& p, std::size_t& depth) {
  switch (arity(n.op)) {
    case 0:
      p.code.push_back({n.op, n.value});
      ++depth;
      break;
    case 1:
      emit(*n.lhs, p, depth);
      p.code.push_back({n.op, 0.0});
      break;
    default:
      emit(*n.lhs, p, depth);
      emit(*n.rhs, p, depth);
      p.code.push_back({n.op, 0.0});
      --depth;
      break;
  }
  if (depth > p.max_depth) p.max_depth = depth;
}

inline Program compile(const Node& root) {
  Program p;
  std::size_t depth = 0;
  emit(root, p, depth);
  return p;
}

inline bool contains_nonsmooth(const Node& n) {
  if (is_nonsmooth(n.op)) return true;
  if (n.lhs && contains_nonsmooth(*n.lhs)) return true;
  return n.rhs && contains_nonsmooth(*n.rhs);
}

inline bool contains_op(const Node& n, Op op) {
  if (n.op == op) return true;
  if (n.lhs && contains_op(*n.lhs, op)) return true;
  return n.rhs && contains_op(*n.rhs, op);
}

inline bool equal(const Node& a, const Node& b) {
  if (&a == &b) return true;
  if (a.op != b.op) return false;
  if (a.op == Op::Number) {
    return a.value == b.value && std::signbit(a.value) == std::signbit(b.value);
  }
  if (a.lhs && !equal(*a.lhs, *b.lhs)) return false;
  return !a.rhs || equal(*a.rhs, *b.rhs);
}

inline std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ec == std::errc{} ? end : buf.data());
}

inline int precedence(const Node& n) {
  switch (n.op) {
    case Op::Add:
    case Op::Sub:
      return 1;
    case Op::Mul:
    case Op::Div:
      return 2;
    case Op::Neg:
      return 3;
    case Op::Pow:
      return 4;
    case Op::Number:
      return std::signbit(n.value) ? 3 : 5;
    default:
      return 5;
  }
}

inline void print(const Node& n, std::string& out);

inline void print_child(const Node& n, int min_prec, std::string& out) {
  if (precedence(n) < min_prec) {
    out += '(';
    print(n, out);
    out += ')';
  } else {
    print(n, out);
  }
}

inline void print(const Node& n, std::string& out) {
  switch (n.op) {
    case Op::Number:
      if (std::signbit(n.value)) {
        out += '-';
        out += format_number(-n.value);
      } else {
        out += format_number(n.value);
      }
      return;
    case Op::Pi: out += "pi"; return;
    case Op::E: out += "e"; return;
    case Op::X: out += "x"; return;
    case Op::Y: out += "y"; return;
    case Op::Add:
    case Op::Sub:
      print_child(*n.lhs, 1, out);
      out += n.op == Op::Add ? " + " : " - ";
      print_child(*n.rhs, 2, out);
      return;
    case Op::Mul:
    case Op::Div:
      print_child(*n.lhs, 2, out);
      out += n.op == Op::Mul ? '*' : '/';
      print_child(*n.rhs, 3, out);
      return;
    case Op::Pow:
      print_child(*n.lhs, 5, out);
      out += '^';
      print_child(*n.rhs, 4, out);
      return;
    case Op::Neg:
      out += '-';
      print_child(*n.lhs, 4, out);
      return;
    default:
      out += function_name(n.op);
      out += '(';
      print(*n.lhs, out);
      out += ')';
      return;
  }
}

}  // namespace detail

/// Immutable expression of (x, y). Copies share the underlying tree; all
/// member functions are const and safe to call concurrently.
///
/// `smooth()` is false when the tree contains abs/sgn/step, and stays false
/// for anything derived from a non-smooth expression (derivatives, folded
/// combinations), so downstream reports can flag a.e.-derivatives.
class Expression {
 public:
  Expression() : Expression(leaf(Op::Number, 0.0), true) {}

  static Expression number(double v) { return Expression(leaf(Op::Number, v), true); }
  static Expression variable(Var v) { return Expression(leaf(v == Var::X ? Op::X : Op::Y, 0.0), true); }
  static Expression x() { return variable(Var::X); }
  static Expression y() { return variable(Var::Y); }
  static Expression pi() { return Expression(leaf(Op::Pi, 0.0), true); }
  static Expression euler() { return Expression(leaf(Op::E, 0.0), true); }

  /// Builds a node without any simplification (used by the parser).
  static Expression raw(Op op, const Expression& operand) {
    auto n = std::make_shared<detail::Node>();
    n->op = op;
    n->lhs = operand.root();
    return Expression(std::move(n), operand.smooth());
  }
  static Expression raw(Op op, const Expression& lhs, const Expression& rhs) {
    auto n = std::make_shared<detail::Node>();
    n->op = op;
    n->lhs = lhs.root();
    n->rhs = rhs.root();
    return Expression(std::move(n), lhs.smooth() && rhs.smooth());
  }

  Op op() const noexcept { return state_->root->op; }
  double value() const noexcept { return state_->root->value; }
  bool smooth() const noexcept { return state_->smooth; }

  /// Child `i` (0 = left/only operand, 1 = right operand).
  Expression operand(int i) const {
    const auto& child = i == 0 ? state_->root->lhs : state_->root->rhs;
    if (!child) throw PreconditionError("expression node has no operand " + std::to_string(i));
    return Expression(child, smooth());
  }

  bool is_number() const noexcept { return op() == Op::Number; }
  bool is_number(double v) const noexcept { return is_number() && value() == v; }

  bool depends_on(Var v) const { return detail::contains_op(*state_->root, v == Var::X ? Op::X : Op::Y); }

  /// Evaluates at (x, y). Throws EvalError instead of returning NaN/inf.
  double operator()(double x, double y) const;
  double operator()(EvalPoint p) const { return (*this)(p.x, p.y); }

  std::string to_string() const {
    std::string out;
    detail::print(*state_->root, out);
    return out;
  }

  const detail::NodePtr& root() const noexcept { return state_->root; }

  friend bool operator==(const Expression& a, const Expression& b) {
    return detail::equal(*a.root(), *b.root());
  }

 private:
  struct State {
    detail::NodePtr root;
    bool smooth = true;
    mutable std::once_flag compiled;
    mutable detail::Program program;
  };

  Expression(detail::NodePtr root, bool inherited_smooth) {
    auto s = std::make_shared<State>();
    s->smooth = inherited_smooth && !detail::contains_nonsmooth(*root);
    s->root = std::move(root);
    state_ = std::move(s);
  }

  static detail::NodePtr leaf(Op op, double v) {
    auto n = std::make_shared<detail::Node>();
    n->op = op;
    n->value = v;
    return n;
  }

  const detail::Program& program() const {
    std::call_once(state_->compiled, [this] { state_->program = detail::compile(*state_->root); });
    return state_->program;
  }

  friend Expression with_smoothness(const Expression& e, bool smooth);

  std::shared_ptr<const State> state_;
};

inline Expression with_smoothness(const Expression& e, bool smooth) {
  return Expression(e.root(), smooth && e.smooth());
}

namespace detail {

[[noreturn]] inline void domain_error(std::string_view what, double x, double y) {
  std::ostringstream os;
  os.precision(17);
  os << what << " at (" << x << ", " << y << ")";
  throw EvalError(os.str());
}

}  // namespace detail

inline double Expression::operator()(double x, double y) const {
  const detail::Program& p = program();
  constexpr std::size_t kInline = 32;
  std::array<double, kInline> small{};
  std::vector<double> large;
  double* stack = small.data();
  if (p.max_depth > kInline) {
    large.resize(p.max_depth);
    stack = large.data();
  }
  std::size_t top = 0;
  for (const detail::Instr& in : p.code) {
    switch (in.op) {
      case Op::Number: stack[top++] = in.value; break;
      case Op::Pi: stack[top++] = std::numbers::pi; break;
      case Op::E: stack[top++] = std::numbers::e; break;
      case Op::X: stack[top++] = x; break;
      case Op::Y: stack[top++] = y; break;
      case Op::Add:
      case Op::Sub:
      case Op::Mul:
      case Op::Div:
      case Op::Pow: {
        const double r = stack[--top];
        const double l = stack[top - 1];
        if (in.op == Op::Div && r == 0.0) detail::domain_error("division by zero", x, y);
        const double v = apply_binary(in.op, l, r);
        if (in.op == Op::Pow && std::isnan(v)) detail::domain_error("pow outside its real domain", x, y);
        stack[top - 1] = v;
        break;
      }
      default: {
        const double v = stack[top - 1];
        if (in.op == Op::Log && !(v > 0.0)) detail::domain_error("log of non-positive argument", x, y);
        if (in.op == Op::Sqrt && v < 0.0) detail::domain_error("sqrt of negative argument", x, y);
        stack[top - 1] = apply_unary(in.op, v);
        break;
      }
    }
  }
  const double result = stack[0];
  if (!std::isfinite(result)) detail::domain_error("non-finite value", x, y);
  return result;
}

inline double evaluate(const Expression& e, EvalPoint p) { return e(p.x, p.y); }

// ---------------------------------------------------------------------------
// Simplifying builders. Folding is limited to numeric constants, 0/1
// identities and double negation.

inline Expression operator-(const Expression& a) {
  if (a.is_number()) return with_smoothness(Expression::number(-a.value()), a.smooth());
  if (a.op() == Op::Neg) return a.operand(0);
  return Expression::raw(Op::Neg, a);
}

inline Expression operator+(const Expression& a, const Expression& b) {
  const bool s = a.smooth() && b.smooth();
  if (a.is_number() && b.is_number()) return with_smoothness(Expression::number(a.value() + b.value()), s);
  if (a.is_number(0.0)) return with_smoothness(b, s);
  if (b.is_number(0.0)) return with_smoothness(a, s);
  return Expression::raw(Op::Add, a, b);
}

inline Expression operator-(const Expression& a, const Expression& b) {
  const bool s = a.smooth() && b.smooth();
  if (a.is_number() && b.is_number()) return with_smoothness(Expression::number(a.value() - b.value()), s);
  if (b.is_number(0.0)) return with_smoothness(a, s);
  if (a.is_number(0.0)) return with_smoothness(-b, s);
  return Expression::raw(Op::Sub, a, b);
}

inline Expression operator*(const Expression& a, const Expression& b) {
  const bool s = a.smooth() && b.smooth();
  if (a.is_number() && b.is_number()) return with_smoothness(Expression::number(a.value() * b.value()), s);
  if (a.is_number(0.0) || b.is_number(0.0)) return with_smoothness(Expression::number(0.0), s);
  if (a.is_number(1.0)) return with_smoothness(b, s);
  if (b.is_number(1.0)) return with_smoothness(a, s);
  if (a.is_number(-1.0)) return with_smoothness(-b, s);
  if (b.is_number(-1.0)) return with_smoothness(-a, s);
  return Expression::raw(Op::Mul, a, b);
}

inline Expression operator/(const Expression& a, const Expression& b) {
  const bool s = a.smooth() && b.smooth();
  if (a.is_number() && b.is_number() && b.value() != 0.0) {
    return with_smoothness(Expression::number(a.value() / b.value()), s);
  }
  if (a.is_number(0.0) && !b.is_number(0.0)) return with_smoothness(Expression::number(0.0), s);
  if (b.is_number(1.0)) return with_smoothness(a, s);
  return Expression::raw(Op::Div, a, b);
}

inline Expression pow(const Expression& a, const Expression& b) {
  const bool s = a.smooth() && b.smooth();
  if (a.is_number() && b.is_number()) {
    const double v = std::pow(a.value(), b.value());
    if (std::isfinite(v)) return with_smoothness(Expression::number(v), s);
  }
  if (b.is_number(0.0)) return with_smoothness(Expression::number(1.0), s);
  if (b.is_number(1.0)) return with_smoothness(a, s);
  return Expression::raw(Op::Pow, a, b);
}

inline Expression apply(Op fn, const Expression& a) {
  if (a.is_number()) {
    const double v = a.value();
    const bool in_domain = !(fn == Op::Log && !(v > 0.0)) && !(fn == Op::Sqrt && v < 0.0);
    const double r = apply_unary(fn, v);
    // Folding a non-smooth function of a constant removes the kink.
    if (in_domain && std::isfinite(r)) return with_smoothness(Expression::number(r), a.smooth());
  }
  return Expression::raw(fn, a);
}

inline Expression operator+(const Expression& a, double b) { return a + Expression::number(b); }
inline Expression operator+(double a, const Expression& b) { return Expression::number(a) + b; }
inline Expression operator-(const Expression& a, double b) { return a - Expression::number(b); }
inline Expression operator-(double a, const Expression& b) { return Expression::number(a) - b; }
inline Expression operator*(const Expression& a, double b) { return a * Expression::number(b); }
inline Expression operator*(double a, const Expression& b) { return Expression::number(a) * b; }
inline Expression operator/(const Expression& a, double b) { return a / Expression::number(b); }
inline Expression operator/(double a, const Expression& b) { return Expression::number(a) / b; }
inline Expression pow(const Expression& a, double b) { return pow(a, Expression::number(b)); }

inline Expression sin(const Expression& a) { return apply(Op::Sin, a); }
inline Expression cos(const Expression& a) { return apply(Op::Cos, a); }
inline Expression tan(const Expression& a) { return apply(Op::Tan, a); }
inline Expression exp(const Expression& a) { return apply(Op::Exp, a); }
inline Expression log(const Expression& a) { return apply(Op::Log, a); }
inline Expression sqrt(const Expression& a) { return apply(Op::Sqrt, a); }
inline Expression abs(const Expression& a) { return apply(Op::Abs, a); }
inline Expression sgn(const Expression& a) { return apply(Op::Sgn, a); }
inline Expression step(const Expression& a) { return apply(Op::Step, a); }

// ---------------------------------------------------------------------------
// Parser

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expression parse() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("empty expression", pos_);
    Expression e = expr();
    skip_ws();
    if (pos_ < src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= src_.size()) throw ParseError(std::string("expected '") + c + "' but reached end of input", pos_);
      throw ParseError(std::string("expected '") + c + "' but found '" + src_[pos_] + "'", pos_);
    }
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  Expression expr() {
    Expression lhs = term();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      lhs = Expression::raw(c == '+' ? Op::Add : Op::Sub, lhs, term());
    }
  }

  Expression term() {
    Expression lhs = factor();
    for (;;) {
      const char c = peek();
      if (c != '*' && c != '/') return lhs;
      ++pos_;
      lhs = Expression::raw(c == '*' ? Op::Mul : Op::Div, lhs, factor());
    }
  }

  Expression factor() {
    if (accept('-')) return Expression::raw(Op::Neg, factor());
    return power();
  }

  Expression power() {
    Expression base = atom();
    if (accept('^')) {
      if (peek() == '-') throw ParseError("exponent must be parenthesized when negated", pos_);
      return Expression::raw(Op::Pow, base, power());
    }
    return base;
  }

  Expression atom() {
    const char c = peek();
    const std::size_t start = pos_;
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    if (c == '(') {
      ++pos_;
      Expression inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = src_.substr(start, pos_ - start);
      if (name == "x") return Expression::x();
      if (name == "y") return Expression::y();
      if (name == "pi") return Expression::pi();
      if (name == "e") return Expression::euler();
      const auto fn = function_from_name(name);
      if (!fn) throw ParseError("unknown identifier '" + std::string(name) + "'", start);
      if (!accept('(')) throw ParseError("function '" + std::string(name) + "' requires '('", pos_);
      if (peek() == ')') throw ParseError("function '" + std::string(name) + "' expects 1 argument, got 0", pos_);
      Expression arg = expr();
      if (peek() == ',') {
        int count = 1;
        while (accept(',')) {
          expr();
          ++count;
        }
        throw ParseError("function '" + std::string(name) + "' expects 1 argument, got " + std::to_string(count),
                         start);
      }
      expect(')');
      return Expression::raw(*fn, arg);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Expression number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) throw ParseError("malformed number", start);
    // An exponent is only consumed when digits follow; otherwise 'e' is Euler's number.
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
      if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
        pos_ = look;
        digits();
      }
    }
    double v = 0.0;
    const char* first = src_.data() + start;
    const char* last = src_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) throw ParseError("malformed number", start);
    return Expression::number(v);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `source`. Throws ParseError carrying the offending position.
inline Expression parse(std::string_view source) { return detail::Parser(source).parse(); }

// ---------------------------------------------------------------------------
// Symbolic differentiation

inline Expression differentiate(const Expression& e, Var v) {
  const Op op = e.op();
  switch (op) {
    case Op::Number:
    case Op::Pi:
    case Op::E:
      return with_smoothness(Expression::number(0.0), e.smooth());
    case Op::X:
      return Expression::number(v == Var::X ? 1.0 : 0.0);
    case Op::Y:
      return Expression::number(v == Var::Y ? 1.0 : 0.0);
    default:
      break;
  }
  const Expression u = e.operand(0);
  const Expression du = differentiate(u, v);
  switch (op) {
    case Op::Add:
      return du + differentiate(e.operand(1), v);
    case Op::Sub:
      return du - differentiate(e.operand(1), v);
    case Op::Mul: {
      const Expression w = e.operand(1);
      return du * w + u * differentiate(w, v);
    }
    case Op::Div: {
      const Expression w = e.operand(1);
      return (du * w - u * differentiate(w, v)) / pow(w, 2.0);
    }
    case Op::Pow: {
      const Expression w = e.operand(1);
      const Expression dw = differentiate(w, v);
      if (dw.is_number(0.0)) return with_smoothness(w * pow(u, w - 1.0) * du, dw.smooth());
      return e * (dw * log(u) + w * du / u);
    }
    case Op::Neg:
      return -du;
    case Op::Sin:
      return cos(u) * du;
    case Op::Cos:
      return -(sin(u) * du);
    case Op::Tan:
      return du / pow(cos(u), 2.0);
    case Op::Exp:
      return e * du;
    case Op::Log:
      return du / u;
    case Op::Sqrt:
      return du / (2.0 * e);
    case Op::Abs:
    case Op::Sgn:
    case Op::Step:
      // Derivative almost everywhere; the jump parts are dropped.
      return with_smoothness(Expression::number(0.0), false);
    default:
      return Expression::number(0.0);
  }
}

/// d^2 e / (dx dy), differentiating in x first.
inline Expression mixed_partial(const Expression& e) {
  return differentiate(differentiate(e, Var::X), Var::Y);
}

}  // namespace ineq2d
