#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "divisor_forge/errors.hpp"
#include "divisor_forge/script/interpreter.hpp"
#include "divisor_forge/script/parser.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace dforge;
using namespace dforge::script;
using dforge::testing::ideal;

namespace {

std::string readSession(const std::string& name) {
  std::ifstream in(std::string(DFORGE_SESSIONS_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> texts(const std::vector<Output>& outputs) {
  std::vector<std::string> out;
  for (auto& o : outputs) out.push_back(o.text);
  return out;
}

// Runs a script and returns the final value bound to `name`.
Value bound(Session& session, const std::string& source, const std::string& name) {
  session.run(parseScript(source));
  auto it = session.bindings().find(name);
  REQUIRE(it != session.bindings().end());
  return it->second;
}

// (coefficient, canonical prime key) multiset of a JSON divisor.
std::multiset<std::pair<std::string, std::string>> termMultiset(const nlohmann::json& divisor) {
  std::multiset<std::pair<std::string, std::string>> out;
  for (auto& t : divisor["terms"]) out.insert({t["coeff"].get<std::string>(), t["prime"].dump()});
  return out;
}

ParseError parseFailure(const std::string& source) {
  try {
    parseScript(source);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << source);
  return ParseError("", {});
}

ScriptError runFailure(const std::string& source) {
  Session session;
  try {
    session.run(parseScript(source));
  } catch (const ScriptError& e) {
    return e;
  }
  FAIL("expected a script error for: " << source);
  return ScriptError("", {}, 0);
}

// Random ASTs for the round trip. Names avoid keywords; every node kind and
// every precedence level shows up.
class AstGen {
 public:
  explicit AstGen(uint32_t seed) : rng_(seed) {}

  ExprPtr expr(int depth) {
    Expr e;
    int pick = depth <= 0 ? pickInt(0, 1) : pickInt(0, 6);
    switch (pick) {
      case 0:
        e.kind = Expr::Kind::Number;
        e.text = std::to_string(pickInt(0, 40));
        break;
      case 1:
        e.kind = Expr::Kind::Name;
        e.text = name();
        break;
      case 2:
        e.kind = Expr::Kind::Negate;
        e.operands = {expr(depth - 1)};
        break;
      case 3:
      case 4: {
        static const char* ops[] = {"+", "-", "*", "/", "^"};
        e.kind = Expr::Kind::Binary;
        e.text = ops[pickInt(0, 4)];
        e.operands = {expr(depth - 1), expr(depth - 1)};
        break;
      }
      case 5: {
        e.kind = Expr::Kind::Call;
        e.text = name();
        int positional = pickInt(0, 3), named = pickInt(0, 2);
        for (int i = 0; i < positional; ++i) e.args.push_back({"", expr(depth - 1)});
        for (int i = 0; i < named; ++i) e.args.push_back({name(), expr(depth - 1)});
        break;
      }
      default: {
        e.kind = Expr::Kind::DivisorLiteral;
        e.text = "divisor";
        int n = pickInt(1, 3);
        for (int i = 0; i < n; ++i) e.entries.emplace_back(expr(depth - 1), expr(depth - 1));
      }
    }
    return std::make_shared<const Expr>(std::move(e));
  }

  Statement statement() {
    Statement s;
    switch (pickInt(0, 5)) {
      case 0: {
        RingDecl d;
        d.name = name();
        int n = pickInt(1, 4);
        for (int i = 0; i < n; ++i) d.variables.push_back(name());
        int rels = pickInt(0, 2);
        for (int i = 0; i < rels; ++i) d.relations.push_back(expr(2));
        if (pickInt(0, 1)) {
          int width = pickInt(1, 2);
          for (int i = 0; i < n; ++i) {
            std::vector<long> deg;
            for (int k = 0; k < width; ++k) deg.push_back(pickInt(-2, 3));
            d.degrees.push_back(deg);
          }
        }
        s.body = d;
        break;
      }
      case 1: {
        MapDecl m{name(), name(), name(), {}};
        int n = pickInt(0, 3);
        for (int i = 0; i < n; ++i) m.images.push_back(expr(2));
        s.body = m;
        break;
      }
      case 2:
        s.body = UseStmt{name()};
        break;
      case 3:
        s.body = Binding{name(), expr(4)};
        break;
      case 4:
        s.body = PrintStmt{expr(4)};
        break;
      default:
        s.body = CheckStmt{expr(4)};
    }
    return s;
  }

 private:
  int pickInt(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::string name() {
    static const char* pool[] = {"x", "y", "u", "v", "D", "E", "F", "R", "S", "phi", "ideal", "OO", "QQ",
                                 "divisor", "graded", "strategy", "sheaves", "a_1", "degrees", "toQ"};
    return pool[pickInt(0, 19)];
  }

  std::mt19937 rng_;
};

}  // namespace

TEST_CASE("parser: statement shapes") {
  Script s = parseScript("ring R = QQ[x,y,u,v] / (x*y - u*v);");
  REQUIRE(s.statements.size() == 1);
  auto& ring = std::get<RingDecl>(s.statements[0].body);
  CHECK(ring.name == "R");
  CHECK(ring.variables == std::vector<std::string>{"x", "y", "u", "v"});
  REQUIRE(ring.relations.size() == 1);
  CHECK(printExpr(*ring.relations[0]) == "x*y - u*v");
  CHECK(ring.degrees.empty());

  s = parseScript("D = divisor {2: ideal(x,u), 3: ideal(x,v)};");
  auto& b = std::get<Binding>(s.statements[0].body);
  CHECK(b.name == "D");
  CHECK(b.value->kind == Expr::Kind::DivisorLiteral);
  REQUIRE(b.value->entries.size() == 2);
  CHECK(printExpr(*b.value->entries[1].first) == "3");
  CHECK(printExpr(*b.value->entries[1].second) == "ideal(x, v)");

  s = parseScript("F = 3*D + E; print OO(F);");
  REQUIRE(s.statements.size() == 2);
  CHECK(std::holds_alternative<Binding>(s.statements[0].body));
  CHECK(std::holds_alternative<PrintStmt>(s.statements[1].body));
  CHECK(s.statements[1].loc.column == 14);

  s = parseScript("ring M = QQ[x,y,z] degrees {{1,0},{0,1},{1,-1}};\nring W = QQ[a,b] degrees {1, 2};");
  CHECK(std::get<RingDecl>(s.statements[0].body).degrees == std::vector<std::vector<long>>{{1, 0}, {0, 1}, {1, -1}});
  CHECK(std::get<RingDecl>(s.statements[1].body).degrees == std::vector<std::vector<long>>{{1}, {2}});
  CHECK(s.statements[1].loc.line == 2);

  s = parseScript("map f = A -> B (a*b, b); use B;");
  auto& m = std::get<MapDecl>(s.statements[0].body);
  CHECK(m.source == "A");
  CHECK(m.target == "B");
  CHECK(m.images.size() == 2);
  CHECK(std::get<UseStmt>(s.statements[1].body).ring == "B");

  s = parseScript("print pullback(f, D, strategy=sheaves);");
  auto& call = *std::get<PrintStmt>(s.statements[0].body).value;
  REQUIRE(call.args.size() == 3);
  CHECK(call.args[2].name == "strategy");
  CHECK(call.args[2].value->text == "sheaves");

  CHECK(parseScript("").statements.empty());
  CHECK(parseScript("# only a comment\n// and another\n").statements.empty());
}

TEST_CASE("parser: precedence") {
  auto printed = [](const std::string& e) {
    return printExpr(*std::get<PrintStmt>(parseScript("print " + e + ";").statements[0].body).value);
  };
  CHECK(printed("1 + 2 * 3") == "1 + 2*3");
  CHECK(printed("(1 + 2) * 3") == "(1 + 2)*3");
  CHECK(printed("a - (b - c)") == "a - (b - c)");
  CHECK(printed("(a - b) - c") == "a - b - c");
  CHECK(printed("a / (b * c)") == "a/(b*c)");
  CHECK(printed("-x^2") == "-x^2");
  CHECK(printed("(-x)^2") == "(-x)^2");
  CHECK(printed("x^-1") == "x^-1");
  CHECK(printed("x^(2^3)") == "x^2^3");
  CHECK(printed("(x^2)^3") == "(x^2)^3");
  CHECK(printed("2/3*D") == "2/3*D");

  // -x^2 negates the power; 2^3^2 is right associative.
  Session session;
  auto value = [&](const std::string& e) {
    return std::get<Scalar>(bound(session, "t = " + e + ";", "t")).value;
  };
  CHECK(value("-2^2") == -4);
  CHECK(value("2^3^2") == 512);
  CHECK(value("2^-2") == Rational(1, 4));
  CHECK(value("7 - 2 - 1") == 4);
  CHECK(value("12/2/3") == 2);
}

TEST_CASE("parser: diagnostics carry line, column and a caret") {
  struct Case {
    const char* source;
    int line, column;
    const char* fragment;
  };
  const Case cases[] = {
      {"ring R = QQ[x,y];\nD = divisor(x +* y);", 2, 16, "expected an expression"},
      {"print x", 1, 8, "expected ';'"},
      {"ring R = ZZ[x];", 1, 10, "expected 'QQ'"},
      {"print f(a=1, 2);", 1, 14, "positional argument after a named one"},
      {"print 3x;", 1, 7, "malformed number"},
      {"print x $ y;", 1, 9, "unexpected character"},
      {"map f = A > B (x);", 1, 11, "unexpected character '>'"},
      {"print divisor{1 ideal(x)};", 1, 17, "expected ':'"},
      {"x + 1;", 1, 1, "expected a statement"},
      {"ring R = QQ[x] degrees {a};", 1, 25, "expected a degree"},
  };
  for (auto& c : cases) {
    CAPTURE(c.source);
    ParseError e = parseFailure(c.source);
    CHECK(e.loc().line == c.line);
    CHECK(e.loc().column == c.column);
    CHECK(std::string(e.what()).find(c.fragment) != std::string::npos);
  }

  std::string diag = formatDiagnostic("ring R = QQ[x,y];\nD = divisor(x +* y);", "s.df", {2, 16}, "boom");
  CHECK(diag ==
        "s.df:2:16: error: boom\n"
        "  D = divisor(x +* y);\n"
        "                 ^\n");
}

TEST_CASE("parser: print/parse round trip") {
  for (const char* name : {"construction.df", "sheaves.df", "pullback.df", "projective.df", "cone_checks.df",
                           "twisted_cubic.df", "math_error.df", "empty.df"}) {
    CAPTURE(name);
    Script s = parseScript(readSession(name));
    std::string printed = printScript(s);
    CHECK(parseScript(printed) == s);
    CHECK(printScript(parseScript(printed)) == printed);
  }

  int checked = 0;
  for (uint32_t seed = 1; seed <= 300; ++seed) {
    AstGen gen(seed);
    Script s;
    for (int i = 0; i < 4; ++i) s.statements.push_back(gen.statement());
    std::string printed = printScript(s);
    CAPTURE(printed);
    Script back = parseScript(printed);
    CHECK(back == s);
    ++checked;
  }
  CHECK(checked == 300);
}

TEST_CASE("interpreter: construction session") {
  Session session;
  std::vector<Output> out = session.run(parseScript(readSession("construction.df")));
  REQUIRE(out.size() == 13);

  CHECK(out[0].text == "3*Div(x, v) + 2*Div(x, u)");
  CHECK(termMultiset(out[0].json["value"]) == termMultiset(nlohmann::json{{"terms", nlohmann::json::parse(
      R"([{"coeff":"3","prime":["v","x"]}, {"coeff":"2","prime":["u","x"]}])")}}));
  CHECK(termMultiset(out[1].json["value"]) == termMultiset(nlohmann::json{{"terms", nlohmann::json::parse(
      R"([{"coeff":"1","prime":["u","x"]}, {"coeff":"1","prime":["v","x"]}])")}}));
  CHECK(termMultiset(out[2].json["value"]) == termMultiset(out[0].json["value"]));
  CHECK(out[3].text == "true");

  // 1/1*D and toQ(D) are the same Q-divisor.
  CHECK(out[4].json["value"]["tier"] == "rational");
  CHECK(out[4].json["value"] == out[5].json["value"]);
  CHECK(out[6].text == "2/3*Div(x, u) + -1/2*Div(y, v)");
  CHECK(out[6].json["value"]["tier"] == "rational");
  CHECK(out[7].text == "4*Div(x, u) + -3*Div(y, v)");
  CHECK(out[7].json["value"]["tier"] == "integer");

  // The printed group operations, as term multisets.
  auto uy = R"(["u","y"])", xu = R"(["u","x"])", xv = R"(["v","x"])";
  auto term = [](const char* c, const char* prime) {
    return nlohmann::json{{"coeff", c}, {"prime", nlohmann::json::parse(prime)}};
  };
  CHECK(termMultiset(out[10].json["value"]) ==
        termMultiset({{"terms", {term("4", xu), term("-6", xv), term("1", uy)}}}));
  CHECK(termMultiset(out[11].json["value"]) ==
        termMultiset({{"terms", {term("-2", xv), term("1/2", xu), term("-1/2", uy)}}}));
  CHECK(out[12].kind == "ideal_list");
  CHECK(out[12].json["value"].size() == 3);

  // The literal builds the same value as the library constructor.
  Session fresh;
  fresh.run(parseScript("ring R = QQ[x,y,u,v] / (x*y - u*v);\nD = divisor {2: ideal(x,u), 3: ideal(x,v)};"));
  auto R = std::get<RingPtr>(fresh.bindings().at("R"));
  std::vector<Coefficient> cs = {Coefficient::integer(2), Coefficient::integer(3)};
  std::vector<Ideal> ps = {ideal(R, {"x", "u"}), ideal(R, {"x", "v"})};
  CHECK(std::get<WeilDivisor>(fresh.bindings().at("D")) == divisorFromPrimes(cs, ps));
}

TEST_CASE("interpreter: checks, sheaves and maps") {
  Session session;
  auto cone = texts(session.run(parseScript(readSession("cone_checks.df"))));
  REQUIRE(cone.size() == 9);
  CHECK(cone[0].rfind("false", 0) == 0);
  CHECK(cone[1] == "ideal(z, y, x)");
  CHECK(cone[2] == "true");
  CHECK(cone[3].rfind("true", 0) == 0);
  CHECK(cone[4] == "2");

  Session sheaves;
  auto sh = texts(sheaves.run(parseScript(readSession("sheaves.df"))));
  REQUIRE(sh.size() == 7);
  CHECK(sh[1] == "-Div(z, x)");
  CHECK(sh[2] == "Div(z, x)");

  Session maps;
  auto pb = texts(maps.run(parseScript(readSession("pullback.df"))));
  REQUIRE(pb.size() == 3);
  CHECK(pb[1] == pb[2]);
  CHECK(pb[1] == "4*Div(b) + Div(a) + Div(a+1) + Div(a-1)");

  Session proj;
  auto pr = proj.run(parseScript(readSession("projective.df")));
  REQUIRE(pr.size() == 4);
  CHECK(pr[0].text == "{v, x}");
  CHECK(pr[1].json["value"]["images"] == nlohmann::json::array({"v", "x"}));
  CHECK(pr[2].text == "ideal(y, x)");
  CHECK(pr[3].text == "ideal(1)");
}

TEST_CASE("interpreter: values and tiers") {
  Session s;
  s.run(parseScript("ring R = QQ[x,y] / (x^2 - y^3);"));
  auto scalar = [&](const std::string& e) { return std::get<Scalar>(bound(s, "t = " + e + ";", "t")); };
  CHECK_FALSE(scalar("6").rationalTier);
  CHECK(scalar("6/3").rationalTier);
  CHECK(scalar("6/3").value == 2);

  // Integer literals keep integral divisors integral; '/' makes them rational.
  auto tier = [&](const std::string& e) { return std::get<WeilDivisor>(bound(s, "t = " + e + ";", "t")).tier(); };
  CHECK(tier("2*divisor(x)") == Tier::Integer);
  CHECK(tier("4/2*divisor(x)") == Tier::Rational);
  CHECK(tier("divisor(x)/1") == Tier::Rational);

  // Polynomials reduce modulo the relations; quotients become elements.
  auto p = std::get<PolyValue>(bound(s, "t = y^3 + 1;", "t"));
  CHECK(p.ring->format(p.poly) == "x^2+1");
  auto q = std::get<PolyValue>(bound(s, "t = (x^2 - y^3 + 2*x)/2;", "t"));
  CHECK(q.ring->format(q.poly) == "x");
  CHECK(std::holds_alternative<ElementValue>(bound(s, "t = x/y;", "t")));

  // div(x^2) = div(y^3) in this ring.
  auto same = std::get<CheckValue>(bound(s, "t = isLinearEquivalent(divisor(x^2), divisor(y^3));", "t"));
  CHECK(same.report.verdict == Verdict::True);
  CHECK(std::get<WeilDivisor>(bound(s, "t = divisor(x^2/y^3);", "t")).isZero());

  // Ideal arithmetic.
  auto I = std::get<Ideal>(bound(s, "t = ideal(x) + ideal(y);", "t"));
  CHECK(I.key() == ideal(s.currentRing(), {"x", "y"}).key());
  auto J = std::get<Ideal>(bound(s, "t = ideal(x, y)^2;", "t"));
  CHECK(J.key() == ideal(s.currentRing(), {"x^2", "x*y", "y^2"}).key());
}

TEST_CASE("interpreter: errors carry locations and exit codes") {
  struct Case {
    const char* source;
    int line, column, exitCode;
    const char* fragment;
  };
  const Case cases[] = {
      {"ring R = QQ[x,y];\nprint divisor(z);", 2, 15, 2, "unbound name 'z'"},
      {"print x;", 1, 7, 2, "unbound name 'x'"},
      {"ring R = QQ[x,y];\nx = 3;", 2, 1, 2, "is a variable of the current ring"},
      {"ring R = QQ[x,y];\nprint divisor{1: ideal(x*y)};", 2, 7, 2, "is not a prime ideal"},
      {"ring R = QQ[x,y];\nprint 1/(x - x);", 2, 8, 2, "division by zero"},
      {"ring A = QQ[x];\nf = x;\nring B = QQ[x];\nprint f + x;", 4, 9, 2, "different rings"},
      {"ring R = QQ[x,y];\nprint nosuch(x);", 2, 7, 2, "unknown function"},
      {"ring R = QQ[x,y];\nprint OO(x);", 2, 10, 2, "must be a divisor"},
      {"ring R = QQ[x,y];\nprint isCartier(divisor(x), grade=true);", 2, 35, 2, "has no option 'grade'"},
      {"ring R = QQ[x,y];\ncheck divisor(x);", 2, 7, 2, "needs a predicate"},
      {"ring R = QQ[x,y];\nprint floor(divisor(x), 2);", 2, 7, 2, "takes 1 argument"},
      {"ring R = QQ[x,y];\nmap f = R -> R (x);", 2, 1, 2, "needs 2 images"},
      {"use Q;", 1, 1, 2, "unknown ring 'Q'"},
      {"ring R = QQ[x,x];", 1, 1, 2, "declared twice"},
      {"ring T = QQ[x,y,z,w] / (x*w - y*z);\nprint minimalPrimes(ideal(y^2 - x*z, z^2 - y*w));", 2, 7, 3,
       "could not split or certify"},
      {"ring T = QQ[x,y,z,w] / (x*w - y*z);\nprint divisor{1: ideal(y^2 - x*z, z^2 - y*w)};", 2, 7, 3,
       "could not certify"},
  };
  for (auto& c : cases) {
    CAPTURE(c.source);
    ScriptError e = runFailure(c.source);
    CHECK(e.loc().line == c.line);
    CHECK(e.loc().column == c.column);
    CHECK(e.exitCode() == c.exitCode);
    CHECK(std::string(e.what()).find(c.fragment) != std::string::npos);
  }

  CHECK(exitCodeFor(DecompositionIncomplete("x")) == 3);
  CHECK(exitCodeFor(PrimalityUncertain("x")) == 3);
  CHECK(exitCodeFor(FactorizationLimit("x")) == 3);
  CHECK(exitCodeFor(NotPrime("x")) == 2);
  CHECK(exitCodeFor(RingMismatch()) == 2);
}

TEST_CASE("interpreter: scoping and rebinding") {
  Session s;
  s.run(parseScript("ring A = QQ[x,y];\nf = x + y;\nD = divisor(f);\nring B = QQ[a];\nE = divisor(a);"));
  CHECK(s.currentRing()->name() == "B");
  // Values keep their rings after the current ring changes.
  CHECK(std::get<WeilDivisor>(s.bindings().at("D")).ring()->name() == "A");
  s.run(parseScript("use A;\ng = f*x;"));
  auto g = std::get<PolyValue>(s.bindings().at("g"));
  CHECK(g.ring->format(g.poly) == "x^2+x*y");

  // Rebinding replaces the value; the old value is untouched.
  WeilDivisor before = std::get<WeilDivisor>(s.bindings().at("D"));
  s.run(parseScript("D = 2*D;"));
  CHECK(std::get<WeilDivisor>(s.bindings().at("D")) == scale(Coefficient::integer(2), before));
  CHECK(before.toString() == "Div(x+y)");

  // A binding that later collides with a ring variable is shadowed by it.
  s.run(parseScript("t = 5;\nring C = QQ[t];\nu = t;"));
  CHECK(std::holds_alternative<PolyValue>(s.bindings().at("u")));
}

TEST_CASE("interpreter: determinism") {
  for (const char* name : {"construction.df", "sheaves.df", "projective.df"}) {
    CAPTURE(name);
    Script script = parseScript(readSession(name));
    std::vector<std::string> first, second;
    for (auto& o : Session().run(script)) first.push_back(o.json.dump());
    for (auto& o : Session().run(script)) second.push_back(o.json.dump());
    CHECK(first == second);
  }
}
