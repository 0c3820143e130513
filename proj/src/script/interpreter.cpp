#include "divisor_forge/script/interpreter.hpp"

#include <functional>
#include <set>

#include "divisor_forge/correspondence.hpp"
#include "divisor_forge/errors.hpp"
#include "divisor_forge/geometry_maps.hpp"
#include "divisor_forge/ideal_ops.hpp"
#include "divisor_forge/json_io.hpp"
#include "divisor_forge/primes.hpp"
#include "divisor_forge/script/parser.hpp"

namespace dforge::script {

namespace {

[[noreturn]] void fail(const std::string& message, Loc loc) { throw ScriptError(message, loc, 2); }

std::string describeRing(const QuotientRing& R) {
  std::string s = "QQ[";
  for (size_t i = 0; i < R.nvars(); ++i) s += (i ? ", " : "") + R.variables()[i];
  s += "]";
  std::string rels;
  for (auto& r : R.relations())
    if (!r.isZero()) rels += (rels.empty() ? "" : ", ") + R.format(r);
  if (!rels.empty()) s += " / (" + rels + ")";
  return s;
}

// A value of the fraction field (or a constant awaiting a ring).
struct Fraction {
  RingPtr ring;  // null for plain scalars
  Polynomial num, den;
  Rational scalar;
};

std::optional<Integer> integralExponent(const Value& v) {
  auto s = std::get_if<Scalar>(&v);
  if (!s || s->value.get_den() != 1) return std::nullopt;
  return s->value.get_num();
}

Rational power(const Rational& base, long n) {
  Rational result = 1, b = n < 0 ? Rational(1 / base) : base;
  for (long k = 0; k < std::abs(n); ++k) result *= b;
  return result;
}

// Arguments of one call: positional values plus named expressions, which are
// evaluated on demand so `strategy=sheaves` can stay a bare word.
class CallArgs {
 public:
  CallArgs(const Expr& call, std::vector<Value> positional) : call_(call), positional_(std::move(positional)) {
    for (auto& a : call.args)
      if (!a.name.empty()) named_[a.name] = a.value;
  }

  size_t size() const { return positional_.size(); }
  const Value& operator[](size_t i) const { return positional_[i]; }

  void arity(size_t lo, size_t hi, std::initializer_list<const char*> names = {}) const {
    if (positional_.size() < lo || positional_.size() > hi) {
      std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
      fail(call_.text + " takes " + want + " argument" + (hi == 1 ? "" : "s") + ", got " +
               std::to_string(positional_.size()),
           call_.loc);
    }
    std::set<std::string> allowed(names.begin(), names.end());
    for (auto& [name, e] : named_)
      if (!allowed.count(name)) fail(call_.text + " has no option '" + name + "'", e->loc);
  }

  template <class T>
  const T& get(size_t i, const char* what) const {
    if (auto p = std::get_if<T>(&positional_[i])) return *p;
    fail("argument " + std::to_string(i + 1) + " of " + call_.text + " must be " + what + ", got " +
             kindOf(positional_[i]),
         argLoc(i));
  }

  Loc argLoc(size_t i) const {
    size_t seen = 0;
    for (auto& a : call_.args)
      if (a.name.empty() && seen++ == i) return a.value->loc;
    return call_.loc;
  }

  const ExprPtr* named(const std::string& name) const {
    auto it = named_.find(name);
    return it == named_.end() ? nullptr : &it->second;
  }

 private:
  const Expr& call_;
  std::vector<Value> positional_;
  std::map<std::string, ExprPtr> named_;
};

}  // namespace

int exitCodeFor(const std::exception& e) {
  if (dynamic_cast<const DecompositionIncomplete*>(&e) || dynamic_cast<const PrimalityUncertain*>(&e) ||
      dynamic_cast<const FactorizationLimit*>(&e))
    return 3;
  if (auto s = dynamic_cast<const ScriptError*>(&e)) return s->exitCode();
  return 2;
}

std::string kindOf(const Value& v) {
  struct Visitor {
    std::string operator()(const Scalar&) const { return "scalar"; }
    std::string operator()(bool) const { return "boolean"; }
    std::string operator()(const PolyValue&) const { return "polynomial"; }
    std::string operator()(const ElementValue&) const { return "element"; }
    std::string operator()(const RingPtr&) const { return "ring"; }
    std::string operator()(const Ideal&) const { return "ideal"; }
    std::string operator()(const WeilDivisor&) const { return "divisor"; }
    std::string operator()(const FractionalIdeal&) const { return "fractional_ideal"; }
    std::string operator()(const RingMap&) const { return "map"; }
    std::string operator()(const CheckValue&) const { return "check"; }
    std::string operator()(const IdealList&) const { return "ideal_list"; }
    std::string operator()(const PolyList&) const { return "polynomial_list"; }
  };
  return std::visit(Visitor{}, v);
}

std::string formatValue(const Value& v) {
  struct Visitor {
    std::string operator()(const Scalar& s) const { return toString(s.value); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const PolyValue& p) const { return p.ring->format(p.poly); }
    std::string operator()(const ElementValue& e) const { return e.element.toString(*e.ring); }
    std::string operator()(const RingPtr& R) const { return describeRing(*R); }
    std::string operator()(const Ideal& I) const { return I.toString(); }
    std::string operator()(const WeilDivisor& D) const { return D.toString(); }
    std::string operator()(const FractionalIdeal& F) const { return F.toString(); }
    std::string operator()(const RingMap& m) const {
      std::string s = "map " + m.source()->name() + " -> " + m.target()->name() + " (";
      for (size_t i = 0; i < m.images().size(); ++i) s += (i ? ", " : "") + m.target()->format(m.images()[i]);
      return s + ")";
    }
    std::string operator()(const CheckValue& c) const {
      std::string s = verdictString(c.report.verdict);
      return c.report.note.empty() ? s : s + " (" + c.report.note + ")";
    }
    std::string operator()(const IdealList& l) const {
      std::string s = "{";
      for (size_t i = 0; i < l.items.size(); ++i) s += (i ? ", " : "") + l.items[i].toString();
      return s + "}";
    }
    std::string operator()(const PolyList& l) const {
      std::string s = "{";
      for (size_t i = 0; i < l.items.size(); ++i) s += (i ? ", " : "") + l.ring->format(l.items[i]);
      return s + "}";
    }
  };
  return std::visit(Visitor{}, v);
}

nlohmann::json valueToJson(const Value& v) {
  struct Visitor {
    nlohmann::json operator()(const Scalar& s) const { return toJson(s.value); }
    nlohmann::json operator()(bool b) const { return b; }
    nlohmann::json operator()(const PolyValue& p) const {
      return {{"ring", p.ring->name()}, {"value", p.ring->format(p.poly)}};
    }
    nlohmann::json operator()(const ElementValue& e) const { return toJson(*e.ring, e.element); }
    nlohmann::json operator()(const RingPtr& R) const { return toJson(*R); }
    nlohmann::json operator()(const Ideal& I) const { return toJson(I); }
    nlohmann::json operator()(const WeilDivisor& D) const { return toJson(D); }
    nlohmann::json operator()(const FractionalIdeal& F) const { return toJson(F); }
    nlohmann::json operator()(const RingMap& m) const { return toJson(m); }
    nlohmann::json operator()(const CheckValue& c) const { return toJson(c.report, *c.ring); }
    nlohmann::json operator()(const IdealList& l) const {
      nlohmann::json out = nlohmann::json::array();
      for (auto& I : l.items) out.push_back(toJson(I));
      return out;
    }
    nlohmann::json operator()(const PolyList& l) const {
      nlohmann::json out = nlohmann::json::array();
      for (auto& p : l.items) out.push_back(l.ring->format(p));
      return out;
    }
  };
  return std::visit(Visitor{}, v);
}

std::vector<Output> Session::run(const Script& script) {
  std::vector<Output> out;
  for (auto& s : script.statements)
    if (auto o = execute(s)) out.push_back(std::move(*o));
  return out;
}

std::optional<Output> Session::execute(const Statement& statement) {
  try {
    struct Runner {
      Session& self;
      Loc loc;
      std::optional<Output> operator()(const RingDecl& d) const {
        self.declareRing(d, loc);
        return std::nullopt;
      }
      std::optional<Output> operator()(const MapDecl& m) const {
        self.declareMap(m, loc);
        return std::nullopt;
      }
      std::optional<Output> operator()(const UseStmt& u) const {
        self.current_ = self.requireRing(u.ring, loc);
        return std::nullopt;
      }
      std::optional<Output> operator()(const Binding& b) const {
        if (self.current_ && self.current_->variableIndex(b.name))
          fail("'" + b.name + "' is a variable of the current ring", loc);
        if (b.name == "true" || b.name == "false") fail("'" + b.name + "' is reserved", loc);
        self.bindings_.insert_or_assign(b.name, self.eval(*b.value));
        return std::nullopt;
      }
      std::optional<Output> operator()(const PrintStmt& p) const { return record(self.eval(*p.value), "print"); }
      std::optional<Output> operator()(const CheckStmt& c) const {
        Value v = self.eval(*c.value);
        if (!std::holds_alternative<CheckValue>(v) && !std::holds_alternative<bool>(v) &&
            !std::holds_alternative<Scalar>(v))
          fail("check needs a predicate such as isCartier(D), got " + kindOf(v), c.value->loc);
        return record(v, "check");
      }
      Output record(const Value& v, const char* statementKind) const {
        Output o{loc, kindOf(v), formatValue(v), {}};
        o.json = {{"line", loc.line},   {"column", loc.column}, {"statement", statementKind},
                  {"kind", o.kind},     {"text", o.text},       {"value", valueToJson(v)}};
        return o;
      }
    };
    return std::visit(Runner{*this, statement.loc}, statement.body);
  } catch (const ScriptError&) {
    throw;
  } catch (const std::exception& e) {
    throw ScriptError(e.what(), statement.loc, exitCodeFor(e));
  }
}

RingPtr Session::requireRing(const std::string& name, Loc loc) const {
  auto it = bindings_.find(name);
  if (it == bindings_.end()) fail("unknown ring '" + name + "'", loc);
  if (auto R = std::get_if<RingPtr>(&it->second)) return *R;
  fail("'" + name + "' is a " + kindOf(it->second) + ", not a ring", loc);
}

const RingPtr& Session::requireCurrentRing(Loc loc) const {
  if (!current_) fail("no ring declared yet", loc);
  return current_;
}

void Session::declareRing(const RingDecl& d, Loc loc) {
  std::set<std::string> seen;
  for (auto& v : d.variables)
    if (!seen.insert(v).second) fail("variable '" + v + "' declared twice", loc);
  Grading grading = Grading::standard(d.variables.size());
  if (!d.degrees.empty()) {
    if (d.degrees.size() != d.variables.size())
      fail("expected " + std::to_string(d.variables.size()) + " degrees, got " + std::to_string(d.degrees.size()), loc);
    std::vector<std::vector<int64_t>> rows(d.degrees[0].size(), std::vector<int64_t>(d.variables.size()));
    for (size_t i = 0; i < d.degrees.size(); ++i) {
      if (d.degrees[i].size() != rows.size()) fail("degrees must all have the same length", loc);
      for (size_t k = 0; k < rows.size(); ++k) rows[k][i] = d.degrees[i][k];
    }
    grading = Grading(rows);
  }
  RingPtr ambient = QuotientRing::make(d.name, d.variables, grading, {});
  RingPtr saved = current_;
  current_ = ambient;
  std::vector<Polynomial> relations;
  try {
    for (auto& r : d.relations) {
      Value v = eval(*r);
      if (auto p = std::get_if<PolyValue>(&v))
        relations.push_back(p->poly);
      else if (auto s = std::get_if<Scalar>(&v))
        relations.push_back(ambient->constant(s->value));
      else
        fail("relations must be polynomials", r->loc);
    }
  } catch (...) {
    current_ = saved;
    throw;
  }
  current_ = QuotientRing::make(d.name, d.variables, grading, relations);
  bindings_.insert_or_assign(d.name, current_);
}

void Session::declareMap(const MapDecl& m, Loc loc) {
  RingPtr source = requireRing(m.source, loc), target = requireRing(m.target, loc);
  if (m.images.size() != source->nvars())
    fail("a map from " + m.source + " needs " + std::to_string(source->nvars()) + " images", loc);
  RingPtr saved = current_;
  current_ = target;
  std::vector<Polynomial> images;
  try {
    for (auto& e : m.images) {
      Value v = eval(*e);
      if (auto p = std::get_if<PolyValue>(&v))
        images.push_back(p->poly);
      else if (auto s = std::get_if<Scalar>(&v))
        images.push_back(target->constant(s->value));
      else
        fail("map images must be polynomials", e->loc);
    }
  } catch (...) {
    current_ = saved;
    throw;
  }
  current_ = saved;
  bindings_.insert_or_assign(m.name, RingMap(source, target, images));
}

Value Session::eval(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return Scalar{Rational(Integer(e.text)), false};
    case Expr::Kind::Name:
      return evalName(e);
    case Expr::Kind::Negate:
      return evalNegate(e);
    case Expr::Kind::Binary:
      return evalBinary(e);
    case Expr::Kind::Call:
      return evalCall(e);
    case Expr::Kind::DivisorLiteral:
      return evalDivisorLiteral(e);
  }
  fail("unsupported expression", e.loc);
}

Value Session::evalName(const Expr& e) {
  if (e.text == "true") return true;
  if (e.text == "false") return false;
  if (current_)
    if (auto i = current_->variableIndex(e.text)) return PolyValue{current_, current_->variable(*i)};
  auto it = bindings_.find(e.text);
  if (it == bindings_.end()) fail("unbound name '" + e.text + "'", e.loc);
  return it->second;
}

Value Session::evalNegate(const Expr& e) {
  Value v = eval(*e.operands[0]);
  if (auto s = std::get_if<Scalar>(&v)) return Scalar{-s->value, s->rationalTier};
  if (auto p = std::get_if<PolyValue>(&v)) return PolyValue{p->ring, p->poly * Rational(-1)};
  if (auto x = std::get_if<ElementValue>(&v))
    return ElementValue{x->ring, {x->element.numerator * Rational(-1), x->element.denominator}};
  if (auto D = std::get_if<WeilDivisor>(&v)) return -*D;
  fail("cannot negate a " + kindOf(v), e.loc);
}

Value Session::evalBinary(const Expr& e) {
  Value a = eval(*e.operands[0]), b = eval(*e.operands[1]);
  const std::string& op = e.text;
  try {
    if (op == "^") {
      auto n = integralExponent(b);
      if (!n || !n->fits_slong_p()) fail("exponents must be integers", e.operands[1]->loc);
      long k = n->get_si();
      if (auto s = std::get_if<Scalar>(&a)) {
        if (s->value == 0 && k < 0) fail("division by zero", e.loc);
        return Scalar{power(s->value, k), s->rationalTier};
      }
      if (auto p = std::get_if<PolyValue>(&a)) {
        if (k < 0) return ElementValue{p->ring, {p->ring->one(), p->ring->normalForm(p->poly.pow(static_cast<unsigned>(-k)))}};
        return PolyValue{p->ring, p->ring->normalForm(p->poly.pow(static_cast<unsigned>(k)))};
      }
      if (auto x = std::get_if<ElementValue>(&a)) {
        const RingPtr& R = x->ring;
        Polynomial num = R->normalForm(x->element.numerator.pow(static_cast<unsigned>(std::abs(k))));
        Polynomial den = R->normalForm(x->element.denominator.pow(static_cast<unsigned>(std::abs(k))));
        if (k < 0) std::swap(num, den);
        return ElementValue{R, {num, den}};
      }
      if (auto I = std::get_if<Ideal>(&a)) {
        if (k < 0) fail("ideal powers must be nonnegative", e.operands[1]->loc);
        return idealPower(*I, static_cast<unsigned>(k));
      }
      fail("cannot raise a " + kindOf(a) + " to a power", e.loc);
    }

    auto sa = std::get_if<Scalar>(&a);
    auto sb = std::get_if<Scalar>(&b);
    if (sa && sb) {
      if (op == "+") return Scalar{sa->value + sb->value, sa->rationalTier || sb->rationalTier};
      if (op == "-") return Scalar{sa->value - sb->value, sa->rationalTier || sb->rationalTier};
      if (op == "*") return Scalar{sa->value * sb->value, sa->rationalTier || sb->rationalTier};
      if (sb->value == 0) fail("division by zero", e.loc);
      return Scalar{sa->value / sb->value, true};
    }

    auto Da = std::get_if<WeilDivisor>(&a);
    auto Db = std::get_if<WeilDivisor>(&b);
    if (Da || Db) {
      auto coefficient = [](const Scalar& s) {
        return s.rationalTier ? Coefficient::rational(s.value) : Coefficient::integer(s.value.get_num());
      };
      if (Da && Db && op == "+") return *Da + *Db;
      if (Da && Db && op == "-") return *Da - *Db;
      if (op == "*" && sa && Db) return scale(coefficient(*sa), *Db);
      if (op == "*" && Da && sb) return scale(coefficient(*sb), *Da);
      if (op == "/" && Da && sb) {
        if (sb->value == 0) fail("division by zero", e.loc);
        return scale(Coefficient::rational(1 / sb->value), *Da);
      }
      fail("cannot combine " + kindOf(a) + " and " + kindOf(b) + " with '" + op + "'", e.loc);
    }

    auto Ia = std::get_if<Ideal>(&a);
    auto Ib = std::get_if<Ideal>(&b);
    if (Ia || Ib) {
      if (Ia && Ib && op == "+") return idealSum(*Ia, *Ib);
      if (Ia && Ib && op == "*") return idealProduct(*Ia, *Ib);
      fail("cannot combine " + kindOf(a) + " and " + kindOf(b) + " with '" + op + "'", e.loc);
    }

    // Field arithmetic on scalars, polynomials and fractions.
    auto fraction = [&](const Value& v, Loc loc) -> Fraction {
      if (auto s = std::get_if<Scalar>(&v)) return {nullptr, {}, {}, s->value};
      if (auto p = std::get_if<PolyValue>(&v)) return {p->ring, p->poly, p->ring->one(), 0};
      if (auto x = std::get_if<ElementValue>(&v)) return {x->ring, x->element.numerator, x->element.denominator, 0};
      fail("cannot use a " + kindOf(v) + " in '" + op + "'", loc);
    };
    Fraction fa = fraction(a, e.operands[0]->loc), fb = fraction(b, e.operands[1]->loc);
    RingPtr R = fa.ring ? fa.ring : fb.ring;
    if (fa.ring && fb.ring && fa.ring != fb.ring) throw RingMismatch();
    for (Fraction* f : {&fa, &fb})
      if (!f->ring) {
        f->num = R->constant(f->scalar);
        f->den = R->one();
      }
    Polynomial num, den;
    if (op == "+" || op == "-") {
      Polynomial cross = fb.num * fa.den;
      num = op == "+" ? fa.num * fb.den + cross : fa.num * fb.den - cross;
      den = fa.den * fb.den;
    } else if (op == "*") {
      num = fa.num * fb.num;
      den = fa.den * fb.den;
    } else {
      if (R->normalForm(fb.num).isZero()) fail("division by zero", e.loc);
      num = fa.num * fb.den;
      den = fa.den * fb.num;
    }
    num = R->normalForm(num);
    den = R->normalForm(den);
    if (den.isConstant()) return PolyValue{R, num * Rational(1 / den.leadingCoefficient())};
    return ElementValue{R, {num, den}};
  } catch (const ScriptError&) {
    throw;
  } catch (const std::exception& ex) {
    throw ScriptError(ex.what(), e.loc, exitCodeFor(ex));
  }
}

Value Session::evalDivisorLiteral(const Expr& e) {
  std::vector<Coefficient> coefficients;
  std::vector<Ideal> primes;
  for (auto& [c, P] : e.entries) {
    Value cv = eval(*c), pv = eval(*P);
    auto s = std::get_if<Scalar>(&cv);
    if (!s) fail("divisor coefficients must be numbers, got " + kindOf(cv), c->loc);
    auto I = std::get_if<Ideal>(&pv);
    if (!I) fail("divisor components must be ideals, got " + kindOf(pv), P->loc);
    coefficients.push_back(s->rationalTier ? Coefficient::rational(s->value) : Coefficient::integer(s->value.get_num()));
    primes.push_back(*I);
  }
  try {
    return divisorFromPrimes(coefficients, primes);
  } catch (const std::exception& ex) {
    throw ScriptError(ex.what(), e.loc, exitCodeFor(ex));
  }
}

Value Session::evalCall(const Expr& e) {
  std::vector<Value> positional;
  for (auto& a : e.args)
    if (a.name.empty()) positional.push_back(eval(*a.value));
  CallArgs args(e, std::move(positional));
  const std::string& f = e.text;

  auto flag = [&](const char* name, bool fallback) {
    const ExprPtr* x = args.named(name);
    if (!x) return fallback;
    Value v = eval(**x);
    if (auto b = std::get_if<bool>(&v)) return *b;
    fail(std::string(name) + " must be true or false", (*x)->loc);
  };
  auto graded = [&] { return flag("graded", gradedDefault_); };
  auto divisorArg = [&](size_t i) -> const WeilDivisor& { return args.get<WeilDivisor>(i, "a divisor"); };
  auto check = [&](const RingPtr& R, CheckReport r) -> Value { return CheckValue{R, std::move(r)}; };
  auto element = [&](size_t i) -> std::pair<RingPtr, FieldElement> {
    const Value& v = args[i];
    if (auto p = std::get_if<PolyValue>(&v)) return {p->ring, {p->poly, p->ring->one()}};
    if (auto x = std::get_if<ElementValue>(&v)) return {x->ring, x->element};
    if (auto s = std::get_if<Scalar>(&v)) {
      const RingPtr& R = requireCurrentRing(e.loc);
      return {R, {R->constant(s->value), R->one()}};
    }
    fail("argument " + std::to_string(i + 1) + " of " + f + " must be a ring element, got " + kindOf(v),
         args.argLoc(i));
  };

  try {
    if (f == "ideal") {
      args.arity(0, SIZE_MAX);
      RingPtr R;
      for (size_t i = 0; i < args.size(); ++i)
        if (auto p = std::get_if<PolyValue>(&args[i])) R = R ? R : p->ring;
      if (!R) R = requireCurrentRing(e.loc);
      std::vector<Polynomial> gens;
      for (size_t i = 0; i < args.size(); ++i) {
        auto [ring, s] = element(i);
        if (ring != R) throw RingMismatch();
        if (!s.denominator.isConstant()) fail("ideal generators must be polynomials", args.argLoc(i));
        gens.push_back(s.numerator);
      }
      return Ideal(R, gens);
    }
    if (f == "divisor") {
      args.arity(1, 1, {"graded"});
      if (auto I = std::get_if<Ideal>(&args[0])) return divisorOfIdeal(*I);
      if (auto F = std::get_if<FractionalIdeal>(&args[0])) return divisorOfFractionalIdeal(*F, graded());
      auto [R, s] = element(0);
      return divisorOfElement(R, s);
    }
    if (f == "prime") {
      args.arity(1, 1, {"assume"});
      return primeDivisor(args.get<Ideal>(0, "an ideal"), flag("assume", false));
    }
    if (f == "OO") {
      args.arity(1, 1);
      return sheafOf(divisorArg(0));
    }
    if (f == "divisorOf") {
      args.arity(1, 1, {"graded"});
      return divisorOfFractionalIdeal(args.get<FractionalIdeal>(0, "a fractional ideal"), graded());
    }
    if (f == "section") {
      args.arity(2, 2);
      return divisorWithSection(args.get<FractionalIdeal>(0, "a fractional ideal"), element(1).second).divisor;
    }
    if (f == "dual") {
      args.arity(1, 1);
      return dual(args.get<FractionalIdeal>(0, "a fractional ideal"));
    }
    if (f == "reflexify") {
      args.arity(1, 1);
      if (auto F = std::get_if<FractionalIdeal>(&args[0])) return reflexiveHull(*F);
      return reflexify(args.get<Ideal>(0, "an ideal"));
    }
    if (f == "pullback") {
      args.arity(2, 2, {"strategy"});
      PullbackStrategy strategy = PullbackStrategy::Primes;
      if (const ExprPtr* s = args.named("strategy")) {
        const Expr& x = **s;
        if (x.kind != Expr::Kind::Name || (x.text != "primes" && x.text != "sheaves"))
          fail("strategy must be primes or sheaves", x.loc);
        if (x.text == "sheaves") strategy = PullbackStrategy::Sheaves;
      }
      return pullbackDivisor(args.get<RingMap>(0, "a ring map"), divisorArg(1), strategy);
    }
    if (f == "mapToProjectiveSpace") {
      args.arity(1, 1);
      return mapToProjectiveSpace(divisorArg(0));
    }
    if (f == "baseLocus") {
      args.arity(1, 1);
      return baseLocus(divisorArg(0));
    }
    if (f == "globalSections") {
      args.arity(1, 1);
      return PolyList{divisorArg(0).ring(), globalSectionNumerators(divisorArg(0))};
    }
    if (f == "canonicalDivisor") {
      args.arity(0, 1, {"graded"});
      RingPtr R = args.size() ? args.get<RingPtr>(0, "a ring") : requireCurrentRing(e.loc);
      return canonicalDivisor(R, flag("graded", true));
    }
    if (f == "floor" || f == "ceiling" || f == "toWeil" || f == "toQ") {
      args.arity(1, 1);
      const WeilDivisor& D = divisorArg(0);
      if (f == "floor") return floorOf(D);
      if (f == "ceiling") return ceilingOf(D);
      return coerceTier(D, f == "toWeil" ? Tier::Integer : Tier::Rational);
    }
    if (f == "isCartier") {
      args.arity(1, 1, {"graded"});
      return check(divisorArg(0).ring(), isCartier(divisorArg(0), graded()));
    }
    if (f == "nonCartierLocus") {
      args.arity(1, 1, {"graded"});
      return nonCartierLocus(divisorArg(0), graded());
    }
    if (f == "isQCartier") {
      args.arity(2, 2);
      const Scalar& bound = args.get<Scalar>(0, "a positive integer");
      if (bound.value.get_den() != 1 || bound.value < 1 || !bound.value.get_num().fits_sint_p())
        fail("the bound must be a positive integer", args.argLoc(0));
      return Scalar{isQCartier(static_cast<int>(bound.value.get_num().get_si()), divisorArg(1)), false};
    }
    if (f == "isPrincipal") {
      args.arity(1, 1, {"graded"});
      return check(divisorArg(0).ring(), isPrincipal(divisorArg(0), graded()));
    }
    if (f == "isLinearEquivalent") {
      args.arity(2, 2, {"graded"});
      return check(divisorArg(0).ring(), isLinearEquivalent(divisorArg(0), divisorArg(1), graded()));
    }
    if (f == "isSNC") {
      args.arity(1, 1, {"graded"});
      return check(divisorArg(0).ring(), isSNC(divisorArg(0), graded()));
    }
    if (f == "isRegular") {
      args.arity(1, 1, {"graded"});
      return isRegular(args.get<Ideal>(0, "an ideal"), graded());
    }
    if (f == "isEffective") {
      args.arity(1, 1);
      return divisorArg(0).isEffective();
    }
    if (f == "support") {
      args.arity(1, 1);
      return IdealList{divisorArg(0).support()};
    }
    if (f == "minimalPrimes") {
      args.arity(1, 1);
      return IdealList{minimalHeightOnePrimes(args.get<Ideal>(0, "an ideal"))};
    }
    if (f == "symbolicPower") {
      args.arity(2, 2);
      auto n = integralExponent(args[1]);
      if (!n || *n < 0 || !n->fits_uint_p()) fail("the power must be a nonnegative integer", args.argLoc(1));
      return symbolicPower(args.get<Ideal>(0, "an ideal"), static_cast<unsigned>(n->get_ui()));
    }
  } catch (const ScriptError&) {
    throw;
  } catch (const std::exception& ex) {
    throw ScriptError(ex.what(), e.loc, exitCodeFor(ex));
  }
  fail("unknown function '" + f + "'", e.loc);
}

}  // namespace dforge::script
