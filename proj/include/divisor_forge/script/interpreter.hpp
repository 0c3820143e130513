#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "divisor_forge/checks.hpp"
#include "divisor_forge/divisor.hpp"
#include "divisor_forge/fractional.hpp"
#include "divisor_forge/ring.hpp"
#include "divisor_forge/script/ast.hpp"
#include "json.hpp"

namespace dforge::script {

// A number written in a script. Integer literals stay in the integer tier;
// anything produced by '/' is rational, so 1/1*D is a Q-divisor.
struct Scalar {
  Rational value;
  bool rationalTier = false;
};

struct PolyValue {
  RingPtr ring;
  Polynomial poly;
};

struct ElementValue {
  RingPtr ring;
  FieldElement element;
};

struct CheckValue {
  RingPtr ring;
  CheckReport report;
};

struct IdealList {
  std::vector<Ideal> items;
};

struct PolyList {
  RingPtr ring;
  std::vector<Polynomial> items;
};

using Value = std::variant<Scalar, bool, PolyValue, ElementValue, RingPtr, Ideal, WeilDivisor, FractionalIdeal,
                           RingMap, CheckValue, IdealList, PolyList>;

// A failure while executing, tagged with the offending location and the exit
// code the batch runner should use.
class ScriptError : public std::runtime_error {
 public:
  ScriptError(const std::string& message, Loc loc, int exitCode)
      : std::runtime_error(message), loc_(loc), exitCode_(exitCode) {}
  Loc loc() const { return loc_; }
  int exitCode() const { return exitCode_; }

 private:
  Loc loc_;
  int exitCode_;
};

struct Output {
  Loc loc;
  std::string kind;
  std::string text;
  nlohmann::json json;  // the record printed in --json mode
};

// Exit code for a library exception: 3 for incomplete decompositions
// (including a factorization over the DIVISOR_FORGE_MAXDEG cap), 2 for other
// mathematical errors.
int exitCodeFor(const std::exception& e);

class Session {
 public:
  explicit Session(bool gradedDefault = false) : gradedDefault_(gradedDefault) {}

  // Runs one statement; print and check statements produce an output.
  std::optional<Output> execute(const Statement& statement);
  std::vector<Output> run(const Script& script);

  const std::map<std::string, Value>& bindings() const { return bindings_; }
  const RingPtr& currentRing() const { return current_; }

 private:
  Value eval(const Expr& e);
  Value evalName(const Expr& e);
  Value evalBinary(const Expr& e);
  Value evalNegate(const Expr& e);
  Value evalCall(const Expr& e);
  Value evalDivisorLiteral(const Expr& e);

  RingPtr requireRing(const std::string& name, Loc loc) const;
  const RingPtr& requireCurrentRing(Loc loc) const;
  void declareRing(const RingDecl& d, Loc loc);
  void declareMap(const MapDecl& m, Loc loc);

  bool gradedDefault_;
  RingPtr current_;
  std::map<std::string, Value> bindings_;
};

std::string kindOf(const Value& v);
std::string formatValue(const Value& v);
nlohmann::json valueToJson(const Value& v);

}  // namespace dforge::script
