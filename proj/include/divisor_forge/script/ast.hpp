#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dforge::script {

struct Loc {
  int line = 1;
  int column = 1;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Arg {
  std::string name;  // empty for positional arguments
  ExprPtr value;
};

struct Expr {
  enum class Kind { Number, Name, Negate, Binary, Call, DivisorLiteral };

  Kind kind = Kind::Number;
  Loc loc;
  std::string text;                                   // digits, identifier, operator or callee
  std::vector<ExprPtr> operands;                      // Negate: 1, Binary: 2
  std::vector<Arg> args;                              // Call
  std::vector<std::pair<ExprPtr, ExprPtr>> entries;   // DivisorLiteral: coefficient, ideal
};

// Structural equality, ignoring source locations.
bool operator==(const Expr& a, const Expr& b);

struct RingDecl {
  std::string name;
  std::vector<std::string> variables;
  std::vector<ExprPtr> relations;
  // One degree vector per variable; empty means standard grading.
  std::vector<std::vector<long>> degrees;
};

struct MapDecl {
  std::string name;
  std::string source;
  std::string target;
  std::vector<ExprPtr> images;
};

struct UseStmt {
  std::string ring;
};

struct Binding {
  std::string name;
  ExprPtr value;
};

struct PrintStmt {
  ExprPtr value;
};

struct CheckStmt {
  ExprPtr value;
};

struct Statement {
  Loc loc;
  std::variant<RingDecl, MapDecl, UseStmt, Binding, PrintStmt, CheckStmt> body;
};

bool operator==(const Statement& a, const Statement& b);

struct Script {
  std::vector<Statement> statements;
};

bool operator==(const Script& a, const Script& b);

}  // namespace dforge::script
