// Copyright 2026 The Coarse Utility Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CUE_EXPRESSION_H_
#define CUE_EXPRESSION_H_

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cue {

// Arithmetic payoff expression over the strategy variables s1 and s2.
//
// Grammar, loosest binding first:
//
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer-literal)*
//   primary := number | s1 | s2 | name | min(sum, sum) | max(sum, sum)
//            | '(' sum ')'
//
// Binary operators associate to the left. Exponents are restricted to
// non-negative integer literals, so `-s1^2` is `-(s1^2)`. Named constants
// are bound at parse time from the `constants` map and print back by name.
class Expression {
 public:
  enum class Op {
    kLiteral,
    kConstant,
    kVariable,
    kAdd,
    kSub,
    kMul,
    kDiv,
    kPow,
    kNeg,
    kMin,
    kMax,
  };

  struct Node {
    Op op = Op::kLiteral;
    double value = 0.0;  // kLiteral, kConstant
    int variable = 0;    // kVariable: 0 for s1, 1 for s2
    int exponent = 0;    // kPow
    std::string name;    // kConstant
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  Expression() = default;

  // Throws ParseError with a line/column position on malformed input or an
  // unknown identifier.
  static Expression Parse(std::string_view text,
                          const std::map<std::string, double>& constants = {});

  // Throws EvaluationError on division by zero or a non-finite result.
  double Evaluate(double s1, double s2) const;

  // Canonical text form; Parse(ToString()) evaluates identically.
  std::string ToString() const;

  const Node* root() const { return root_.get(); }
  bool empty() const { return root_ == nullptr; }

 private:
  struct Instruction {
    Op op;
    double value;
    int argument;
  };

  explicit Expression(std::shared_ptr<const Node> root);
  void Compile(const Node& node);

  std::shared_ptr<const Node> root_;
  std::vector<Instruction> program_;
  int max_stack_ = 0;
};

// Shortest decimal text that round-trips to the same double.
std::string FormatNumber(double value);

// Parses a decimal literal or a fraction "p/q" of two decimal literals.
// Throws ParseError (column 1) on anything else, including q = 0.
double ParseNumber(std::string_view text);

}  // namespace cue

#endif  // CUE_EXPRESSION_H_
