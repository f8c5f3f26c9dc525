// Small arithmetic expression language for metric entries in chart files.
//
// Grammar (classic precedence; '^' binds tightest and associates right):
//   expression := term (('+'|'-') term)*
//   term       := factor (('*'|'/') factor)*
//   factor     := '-' factor | power
//   power      := primary ('^' factor)?
//   primary    := number | identifier | identifier '(' expression ')'
//                 | '(' expression ')'
//
// Identifiers resolve to coordinate variables, the constants pi and e, or
// one of the unary functions sin cos tan exp log sqrt sinh cosh tanh abs.
// Parse failures raise ParseError carrying the byte offset of the offending
// token; evaluation failures (division by zero, sqrt of a negative number,
// log of a non-positive number, overflow to non-finite) raise EvalError.
#pragma once

#include <memory>
#include <string>
#include <vector>

namespace curvcones::expr {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  enum class Kind { Number, Variable, Constant, Negate, Binary, Call };

  Kind kind = Kind::Number;
  double number = 0.0;        // Number
  std::size_t var_index = 0;  // Variable
  std::string name;           // Variable / Constant / Call
  char op = 0;                // Binary: one of + - * / ^
  NodePtr a, b;
};

class Expression {
 public:
  Expression() = default;
  Expression(NodePtr root, std::string source);

  // values[i] is the value of the i-th declared variable.
  double evaluate(const std::vector<double>& values) const;

  // Fully parenthesized canonical rendering; parsing it back yields an
  // expression with identical values.
  std::string to_string() const;

  const std::string& source() const { return source_; }
  bool empty() const { return root_ == nullptr; }

 private:
  NodePtr root_;
  std::string source_;
};

// Parses `text` against a fixed variable list.  Unknown identifiers,
// malformed numbers, and syntax errors raise ParseError with the byte
// offset where the problem starts.
Expression parse(const std::string& text,
                 const std::vector<std::string>& variables);

}  // namespace curvcones::expr
