#include "curvcones/expr.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "curvcones/errors.hpp"
#include "curvcones/numfmt.hpp"

namespace curvcones::expr {

namespace {

constexpr std::array<const char*, 10> kFunctions = {
    "sin", "cos", "tan", "exp", "log", "sqrt", "sinh", "cosh", "tanh", "abs"};

bool is_function(const std::string& name) {
  for (const char* f : kFunctions)
    if (name == f) return true;
  return false;
}

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  NodePtr run() {
    NodePtr root = expression();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return root;
  }

 private:
  const std::string& text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
        ++pos_;
      else
        break;
    }
  }

  // Peeks past whitespace; '\0' signals end of input.
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static NodePtr make_binary(char op, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Binary;
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
  }

  NodePtr expression() {
    NodePtr left = term();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return left;
      ++pos_;
      left = make_binary(c, std::move(left), term());
    }
  }

  NodePtr term() {
    NodePtr left = factor();
    for (;;) {
      const char c = peek();
      if (c != '*' && c != '/') return left;
      ++pos_;
      left = make_binary(c, std::move(left), factor());
    }
  }

  NodePtr factor() {
    if (peek() == '-') {
      ++pos_;
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Negate;
      n->a = factor();
      return n;
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (peek() != '^') return base;
    ++pos_;
    // Right-associative; the exponent may itself carry a leading minus.
    return make_binary('^', std::move(base), factor());
  }

  NodePtr primary() {
    const char c = peek();
    if (c == '\0')
      throw ParseError("unexpected end of input: expected an expression",
                       pos_);
    if (c == '(') {
      ++pos_;
      NodePtr inner = expression();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (digit(c) || c == '.') return number();
    if (ident_start(c)) return identifier();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  NodePtr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t probe = pos_ + 1;
      if (probe < text_.size() &&
          (text_[probe] == '+' || text_[probe] == '-'))
        ++probe;
      if (probe >= text_.size() || !digit(text_[probe]))
        throw ParseError("malformed exponent in number", pos_);
      pos_ = probe;
      while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last)
      throw ParseError("malformed number", start);
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Number;
    n->number = value;
    return n;
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    const std::string name = text_.substr(start, pos_ - start);
    if (peek() == '(' && is_function(name)) {
      ++pos_;  // consume '('
      NodePtr arg = expression();
      if (peek() == ',')
        throw ParseError("function '" + name + "' takes exactly one argument",
                         pos_);
      if (peek() != ')')
        throw ParseError("expected ')' after function argument", pos_);
      ++pos_;
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Call;
      n->name = name;
      n->a = std::move(arg);
      return n;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) {
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::Variable;
        n->var_index = i;
        n->name = name;
        return n;
      }
    }
    if (name == "pi" || name == "e") {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Constant;
      n->name = name;
      return n;
    }
    if (is_function(name))
      throw ParseError("function '" + name + "' needs an argument list",
                       start);
    throw ParseError("unknown identifier '" + name + "'", start);
  }
};

double apply_call(const std::string& name, double x) {
  if (name == "sin") return std::sin(x);
  if (name == "cos") return std::cos(x);
  if (name == "tan") return std::tan(x);
  if (name == "exp") return std::exp(x);
  if (name == "log") {
    if (!(x > 0.0)) throw EvalError("log of a non-positive value");
    return std::log(x);
  }
  if (name == "sqrt") {
    if (x < 0.0) throw EvalError("sqrt of a negative value");
    return std::sqrt(x);
  }
  if (name == "sinh") return std::sinh(x);
  if (name == "cosh") return std::cosh(x);
  if (name == "tanh") return std::tanh(x);
  if (name == "abs") return std::fabs(x);
  throw EvalError("unknown function '" + name + "'");
}

double eval_node(const Node& node, const std::vector<double>& values) {
  switch (node.kind) {
    case Node::Kind::Number:
      return node.number;
    case Node::Kind::Variable:
      if (node.var_index >= values.size())
        throw ArgumentError("evaluate: not enough values for variable '" +
                            node.name + "'");
      return values[node.var_index];
    case Node::Kind::Constant:
      return node.name == "pi" ? 3.14159265358979323846
                               : 2.71828182845904523536;
    case Node::Kind::Negate:
      return -eval_node(*node.a, values);
    case Node::Kind::Call:
      return apply_call(node.name, eval_node(*node.a, values));
    case Node::Kind::Binary: {
      const double a = eval_node(*node.a, values);
      const double b = eval_node(*node.b, values);
      switch (node.op) {
        case '+':
          return a + b;
        case '-':
          return a - b;
        case '*':
          return a * b;
        case '/':
          if (b == 0.0) throw EvalError("division by zero");
          return a / b;
        case '^': {
          const double r = std::pow(a, b);
          if (std::isnan(r))
            throw EvalError("power with a negative base and fractional "
                            "exponent");
          return r;
        }
        default:
          break;
      }
      throw EvalError("unknown binary operator");
    }
  }
  throw EvalError("corrupt expression node");
}

std::string render(const Node& node) {
  switch (node.kind) {
    case Node::Kind::Number:
      return format_double(node.number);
    case Node::Kind::Variable:
    case Node::Kind::Constant:
      return node.name;
    case Node::Kind::Negate:
      return "(-" + render(*node.a) + ")";
    case Node::Kind::Call:
      return node.name + "(" + render(*node.a) + ")";
    case Node::Kind::Binary:
      return "(" + render(*node.a) + std::string(1, node.op) +
             render(*node.b) + ")";
  }
  return "?";
}

}  // namespace

Expression::Expression(NodePtr root, std::string source)
    : root_(std::move(root)), source_(std::move(source)) {}

double Expression::evaluate(const std::vector<double>& values) const {
  if (!root_) throw ArgumentError("evaluate: empty expression");
  const double r = eval_node(*root_, values);
  if (!std::isfinite(r))
    throw EvalError("evaluation produced a non-finite value");
  return r;
}

std::string Expression::to_string() const {
  if (!root_) return "";
  return render(*root_);
}

Expression parse(const std::string& text,
                 const std::vector<std::string>& variables) {
  Parser p(text, variables);
  return Expression(p.run(), text);
}

}  // namespace curvcones::expr
