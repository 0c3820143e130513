#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "divisor_forge/script/ast.hpp"

namespace dforge::script {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, Loc loc) : std::runtime_error(message), loc_(loc) {}
  Loc loc() const { return loc_; }

 private:
  Loc loc_;
};

Script parseScript(std::string_view text);

// Canonical source text; parseScript(printScript(s)) == s.
std::string printScript(const Script& script);
std::string printStatement(const Statement& statement);
std::string printExpr(const Expr& expr);

// "name:line:col: error: message", the offending source line, and a caret.
std::string formatDiagnostic(std::string_view source, std::string_view sourceName, Loc loc,
                             std::string_view message);

}  // namespace dforge::script
