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

#include "cue/expression.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <utility>

#include "cue/errors.h"

namespace cue {
namespace {

enum class TokenKind { kNumber, kIdentifier, kSymbol, kEnd };

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  double number = 0.0;
  bool integral = false;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> Tokenize() {
    std::vector<Token> tokens;
    while (true) {
      SkipSpace();
      Token token;
      token.line = line_;
      token.column = column_;
      if (pos_ >= text_.size()) {
        token.kind = TokenKind::kEnd;
        tokens.push_back(token);
        return tokens;
      }
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        LexNumber(token);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_')) {
          Advance();
        }
        token.kind = TokenKind::kIdentifier;
        token.text = std::string(text_.substr(start, pos_ - start));
      } else if (std::string_view("+-*/^(),").find(c) !=
                 std::string_view::npos) {
        token.kind = TokenKind::kSymbol;
        token.text = std::string(1, c);
        Advance();
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'",
                         line_, column_);
      }
      tokens.push_back(std::move(token));
    }
  }

 private:
  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      Advance();
    }
  }

  void LexNumber(Token& token) {
    size_t start = pos_;
    bool integral = true;
    auto digits = [&] {
      size_t count = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        Advance();
        ++count;
      }
      return count;
    };
    size_t whole = digits();
    size_t fraction = 0;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      integral = false;
      Advance();
      fraction = digits();
    }
    if (whole + fraction == 0) {
      throw ParseError("malformed number", token.line, token.column);
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      integral = false;
      Advance();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        Advance();
      }
      if (digits() == 0) {
        throw ParseError("malformed exponent in number", token.line,
                         token.column);
      }
    }
    std::string_view literal = text_.substr(start, pos_ - start);
    double value = 0.0;
    auto [ptr, ec] =
        std::from_chars(literal.data(), literal.data() + literal.size(), value);
    if (ec != std::errc() || ptr != literal.data() + literal.size()) {
      throw ParseError("malformed number", token.line, token.column);
    }
    token.kind = TokenKind::kNumber;
    token.text = std::string(literal);
    token.number = value;
    token.integral = integral;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

using NodePtr = std::shared_ptr<const Expression::Node>;

NodePtr MakeBinary(Expression::Op op, NodePtr lhs, NodePtr rhs) {
  auto node = std::make_shared<Expression::Node>();
  node->op = op;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens,
         const std::map<std::string, double>& constants)
      : tokens_(std::move(tokens)), constants_(constants) {}

  NodePtr ParseAll() {
    NodePtr node = ParseSum();
    if (Peek().kind != TokenKind::kEnd) {
      Fail("unexpected '" + Peek().text + "'");
    }
    return node;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }
  const Token& Next() { return tokens_[pos_++]; }

  bool AcceptSymbol(char symbol) {
    if (Peek().kind == TokenKind::kSymbol && Peek().text[0] == symbol) {
      ++pos_;
      return true;
    }
    return false;
  }

  void ExpectSymbol(char symbol) {
    if (!AcceptSymbol(symbol)) {
      Fail(std::string("expected '") + symbol + "'");
    }
  }

  [[noreturn]] void Fail(const std::string& message) const {
    const Token& token = Peek();
    if (token.kind == TokenKind::kEnd) {
      throw ParseError(message + " at end of input", token.line, token.column);
    }
    throw ParseError(message, token.line, token.column);
  }

  NodePtr ParseSum() {
    NodePtr lhs = ParseProduct();
    while (true) {
      if (AcceptSymbol('+')) {
        lhs = MakeBinary(Expression::Op::kAdd, lhs, ParseProduct());
      } else if (AcceptSymbol('-')) {
        lhs = MakeBinary(Expression::Op::kSub, lhs, ParseProduct());
      } else {
        return lhs;
      }
    }
  }

  NodePtr ParseProduct() {
    NodePtr lhs = ParseUnary();
    while (true) {
      if (AcceptSymbol('*')) {
        lhs = MakeBinary(Expression::Op::kMul, lhs, ParseUnary());
      } else if (AcceptSymbol('/')) {
        lhs = MakeBinary(Expression::Op::kDiv, lhs, ParseUnary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr ParseUnary() {
    if (AcceptSymbol('-')) {
      auto node = std::make_shared<Expression::Node>();
      node->op = Expression::Op::kNeg;
      node->lhs = ParseUnary();
      return node;
    }
    return ParsePower();
  }

  NodePtr ParsePower() {
    NodePtr base = ParsePrimary();
    while (AcceptSymbol('^')) {
      const Token& exponent = Peek();
      if (exponent.kind != TokenKind::kNumber || !exponent.integral) {
        Fail("exponent must be a non-negative integer literal");
      }
      if (exponent.number > 64) {
        Fail("exponent too large");
      }
      ++pos_;
      auto node = std::make_shared<Expression::Node>();
      node->op = Expression::Op::kPow;
      node->exponent = static_cast<int>(exponent.number);
      node->lhs = std::move(base);
      base = std::move(node);
    }
    return base;
  }

  NodePtr ParsePrimary() {
    const Token& token = Peek();
    if (token.kind == TokenKind::kNumber) {
      ++pos_;
      auto node = std::make_shared<Expression::Node>();
      node->op = Expression::Op::kLiteral;
      node->value = token.number;
      return node;
    }
    if (token.kind == TokenKind::kIdentifier) {
      const std::string& name = token.text;
      if (name == "s1" || name == "s2") {
        ++pos_;
        auto node = std::make_shared<Expression::Node>();
        node->op = Expression::Op::kVariable;
        node->variable = name == "s1" ? 0 : 1;
        return node;
      }
      if (name == "min" || name == "max") {
        ++pos_;
        ExpectSymbol('(');
        NodePtr lhs = ParseSum();
        ExpectSymbol(',');
        NodePtr rhs = ParseSum();
        ExpectSymbol(')');
        return MakeBinary(
            name == "min" ? Expression::Op::kMin : Expression::Op::kMax, lhs,
            rhs);
      }
      auto it = constants_.find(name);
      if (it == constants_.end()) {
        Fail("unknown identifier '" + name + "'");
      }
      ++pos_;
      auto node = std::make_shared<Expression::Node>();
      node->op = Expression::Op::kConstant;
      node->name = name;
      node->value = it->second;
      return node;
    }
    if (AcceptSymbol('(')) {
      NodePtr inner = ParseSum();
      ExpectSymbol(')');
      return inner;
    }
    Fail(token.kind == TokenKind::kEnd ? "expected an operand"
                                       : "unexpected '" + token.text + "'");
  }

  std::vector<Token> tokens_;
  const std::map<std::string, double>& constants_;
  size_t pos_ = 0;
};

int Precedence(Expression::Op op) {
  switch (op) {
    case Expression::Op::kAdd:
    case Expression::Op::kSub:
      return 1;
    case Expression::Op::kMul:
    case Expression::Op::kDiv:
      return 2;
    case Expression::Op::kNeg:
      return 3;
    case Expression::Op::kPow:
      return 4;
    default:
      return 5;
  }
}

void Print(const Expression::Node& node, std::ostringstream& out) {
  using Op = Expression::Op;
  auto child = [&](const Expression::Node& c, bool parenthesize) {
    if (parenthesize) out << '(';
    Print(c, out);
    if (parenthesize) out << ')';
  };
  int prec = Precedence(node.op);
  switch (node.op) {
    case Op::kLiteral:
      out << FormatNumber(node.value);
      return;
    case Op::kConstant:
      out << node.name;
      return;
    case Op::kVariable:
      out << (node.variable == 0 ? "s1" : "s2");
      return;
    case Op::kNeg:
      out << '-';
      child(*node.lhs, Precedence(node.lhs->op) < prec);
      return;
    case Op::kPow:
      // A literal base must be wrapped so a leading '-' is never re-read as
      // part of it.
      child(*node.lhs, Precedence(node.lhs->op) <= prec);
      out << '^' << node.exponent;
      return;
    case Op::kMin:
    case Op::kMax:
      out << (node.op == Op::kMin ? "min(" : "max(");
      Print(*node.lhs, out);
      out << ", ";
      Print(*node.rhs, out);
      out << ')';
      return;
    default:
      break;
  }
  const char* symbol = node.op == Op::kAdd   ? " + "
                       : node.op == Op::kSub ? " - "
                       : node.op == Op::kMul ? "*"
                                             : "/";
  child(*node.lhs, Precedence(node.lhs->op) < prec);
  out << symbol;
  child(*node.rhs, Precedence(node.rhs->op) <= prec);
}

}  // namespace

std::string FormatNumber(double value) {
  if (value == 0.0) return "0";
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

double ParseNumber(std::string_view text) {
  auto parse_decimal = [&](std::string_view part) {
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front())))
      part.remove_prefix(1);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back())))
      part.remove_suffix(1);
    if (!part.empty() && part.front() == '+') part.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] =
        std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() ||
        ptr != part.data() + part.size() || !std::isfinite(value)) {
      throw ParseError("malformed number '" + std::string(text) + "'", 1, 1);
    }
    return value;
  };
  size_t slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  double numerator = parse_decimal(text.substr(0, slash));
  double denominator = parse_decimal(text.substr(slash + 1));
  if (denominator == 0.0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'", 1, 1);
  }
  return numerator / denominator;
}

Expression::Expression(std::shared_ptr<const Node> root)
    : root_(std::move(root)) {
  Compile(*root_);
  int depth = 0;
  for (const Instruction& instruction : program_) {
    switch (instruction.op) {
      case Op::kLiteral:
      case Op::kConstant:
      case Op::kVariable:
        ++depth;
        break;
      case Op::kNeg:
      case Op::kPow:
        break;
      default:
        --depth;
        break;
    }
    max_stack_ = std::max(max_stack_, depth);
  }
}

Expression Expression::Parse(std::string_view text,
                             const std::map<std::string, double>& constants) {
  Parser parser(Lexer(text).Tokenize(), constants);
  return Expression(parser.ParseAll());
}

void Expression::Compile(const Node& node) {
  if (node.lhs) Compile(*node.lhs);
  if (node.rhs) Compile(*node.rhs);
  Instruction instruction{node.op, node.value, 0};
  if (node.op == Op::kVariable) instruction.argument = node.variable;
  if (node.op == Op::kPow) instruction.argument = node.exponent;
  program_.push_back(instruction);
}

double Expression::Evaluate(double s1, double s2) const {
  if (empty()) throw EvaluationError("empty expression");
  // Small fixed stack; payoff expressions are shallow.
  std::vector<double> heap;
  double local[32] = {};
  double* stack = local;
  if (max_stack_ > 32) {
    heap.resize(max_stack_);
    stack = heap.data();
  }
  int top = 0;
  for (const Instruction& in : program_) {
    switch (in.op) {
      case Op::kLiteral:
      case Op::kConstant:
        stack[top++] = in.value;
        break;
      case Op::kVariable:
        stack[top++] = in.argument == 0 ? s1 : s2;
        break;
      case Op::kNeg:
        stack[top - 1] = -stack[top - 1];
        break;
      case Op::kPow: {
        double base = stack[top - 1];
        double result = 1.0;
        for (int k = 0; k < in.argument; ++k) result *= base;
        stack[top - 1] = result;
        break;
      }
      default: {
        double rhs = stack[--top];
        double& lhs = stack[top - 1];
        switch (in.op) {
          case Op::kAdd:
            lhs += rhs;
            break;
          case Op::kSub:
            lhs -= rhs;
            break;
          case Op::kMul:
            lhs *= rhs;
            break;
          case Op::kDiv:
            if (rhs == 0.0) {
              throw EvaluationError("division by zero at (s1, s2) = (" +
                                    FormatNumber(s1) + ", " +
                                    FormatNumber(s2) + ")");
            }
            lhs /= rhs;
            break;
          case Op::kMin:
            lhs = std::min(lhs, rhs);
            break;
          case Op::kMax:
            lhs = std::max(lhs, rhs);
            break;
          default:
            break;
        }
      }
    }
  }
  double result = stack[0];
  if (!std::isfinite(result)) {
    throw EvaluationError("non-finite value at (s1, s2) = (" +
                          FormatNumber(s1) + ", " + FormatNumber(s2) + ")");
  }
  return result;
}

std::string Expression::ToString() const {
  if (empty()) return "";
  std::ostringstream out;
  Print(*root_, out);
  return out.str();
}

}  // namespace cue
