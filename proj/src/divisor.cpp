#include "divisor_forge/divisor.hpp"

#include <algorithm>
#include <atomic>

#include "divisor_forge/errors.hpp"
#include "divisor_forge/primes.hpp"

namespace dforge {

namespace {

std::atomic<bool> gMemoization{true};

void requireSameRing(const WeilDivisor& a, const WeilDivisor& b) {
  if (a.ring() != b.ring()) throw RingMismatch();
}

Tier widest(Tier a, Tier b) { return a == Tier::Rational || b == Tier::Rational ? Tier::Rational : Tier::Integer; }

bool integral(const Rational& q) { return q.get_den() == 1; }

WeilDivisor mapped(const WeilDivisor& D, Tier tier, const std::function<Rational(const Rational&)>& fn) {
  WeilDivisor out(D.ring(), tier);
  if (D.primalityAssumed()) out.markAssumed();
  for (auto& [key, term] : D.terms()) out.addTerm(fn(term.coefficient), term.prime);
  return out;
}

}  // namespace

void setDivisorMemoization(bool enabled) { gMemoization = enabled; }
bool divisorMemoizationEnabled() { return gMemoization; }

WeilDivisor::WeilDivisor(RingPtr ring, Tier tier)
    : ring_(std::move(ring)), tier_(tier), memo_(std::make_shared<DivisorMemo>()) {}

bool WeilDivisor::isEffective() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.coefficient > 0; });
}

bool WeilDivisor::isIntegral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return integral(kv.second.coefficient); });
}

std::vector<Ideal> WeilDivisor::support() const {
  std::vector<Ideal> out;
  for (auto& [key, term] : terms_) out.push_back(term.prime);
  return out;
}

Rational WeilDivisor::coefficientOf(const Ideal& P) const {
  auto it = terms_.find(P.key());
  return it == terms_.end() ? Rational(0) : it->second.coefficient;
}

std::vector<const WeilDivisor::Term*> WeilDivisor::displayOrder() const {
  std::vector<std::pair<const std::string*, const Term*>> entries;
  for (auto& [key, term] : terms_) entries.emplace_back(&key, &term);
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.second->coefficient != b.second->coefficient) return a.second->coefficient > b.second->coefficient;
    return *a.first < *b.first;
  });
  std::vector<const Term*> out;
  for (auto& e : entries) out.push_back(e.second);
  return out;
}

std::string formatCoefficient(const Rational& c) {
  if (c == 1) return "";
  if (c == -1) return "-";
  return toString(c) + "*";
}

std::string WeilDivisor::toString() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const Term* t : displayOrder()) {
    if (!s.empty()) s += " + ";
    s += formatCoefficient(t->coefficient) + "Div(" + t->prime.generatorsString() + ")";
  }
  return s;
}

bool WeilDivisor::operator==(const WeilDivisor& o) const {
  if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
  for (auto& [key, term] : terms_) {
    auto it = o.terms_.find(key);
    if (it == o.terms_.end() || it->second.coefficient != term.coefficient) return false;
  }
  return true;
}

void WeilDivisor::addTerm(const Rational& value, const Ideal& prime) {
  if (prime.ring() != ring_) throw RingMismatch();
  Rational c = value;
  c.canonicalize();
  if (c == 0) return;
  auto it = terms_.find(prime.key());
  if (it == terms_.end()) {
    terms_.emplace(prime.key(), Term{c, prime});
    return;
  }
  it->second.coefficient += c;
  if (it->second.coefficient == 0) terms_.erase(it);
}

void requireHeightOnePrime(const Ideal& P, bool assumePrime) {
  if (P.isZero() || P.isUnit()) throw HeightNotOne("a prime divisor needs a proper nonzero ideal, got " + P.toString());
  if (P.height() != 1) throw HeightNotOne(P.toString() + " has height " + std::to_string(P.height()));
  if (assumePrime || certifyPrime(P)) return;
  std::vector<Ideal> components;
  try {
    components = minimalHeightOnePrimes(P);
  } catch (const DecompositionIncomplete&) {
    throw PrimalityUncertain("could not certify that " + P.toString() + " is prime");
  }
  if (components.size() != 1 || !(components[0] == P))
    throw NotPrime(P.toString() + " is not a prime ideal");
}

WeilDivisor divisorFromPrimes(std::span<const Coefficient> coefficients, std::span<const Ideal> primes,
                              bool assumePrime) {
  if (coefficients.size() != primes.size()) throw std::invalid_argument("coefficient and prime lists differ in length");
  if (primes.empty()) throw std::invalid_argument("a divisor needs at least one prime to fix its ring");
  Tier tier = Tier::Integer;
  for (auto& c : coefficients) tier = widest(tier, c.tier);
  WeilDivisor D(primes[0].ring(), tier);
  if (assumePrime) D.markAssumed();
  for (size_t i = 0; i < primes.size(); ++i) {
    requireHeightOnePrime(primes[i], assumePrime);
    D.addTerm(coefficients[i].value, primes[i]);
  }
  return D;
}

WeilDivisor primeDivisor(const Ideal& P, bool assumePrime) {
  Coefficient one = Coefficient::integer(1);
  return divisorFromPrimes(std::span(&one, 1), std::span(&P, 1), assumePrime);
}

WeilDivisor divisorOfElement(const RingPtr& ring, const Polynomial& f) {
  Polynomial g = ring->normalForm(f);
  if (g.isZero()) throw MathError("the zero element has no divisor");
  if (g.isConstant()) return WeilDivisor(ring);
  return divisorOfIdeal(Ideal::principal(ring, g));
}

WeilDivisor divisorOfElement(const RingPtr& ring, const FieldElement& s) {
  return divisorOfElement(ring, s.numerator) - divisorOfElement(ring, s.denominator);
}

WeilDivisor divisorOfIdeal(const Ideal& I) {
  WeilDivisor D(I.ring());
  if (I.isZero()) throw MathError("the zero ideal has no divisor");
  if (I.isUnit()) return D;
  for (auto& P : minimalHeightOnePrimes(I)) D.addTerm(maxSymbolicContainment(I, P), P);
  return D;
}

WeilDivisor operator+(const WeilDivisor& a, const WeilDivisor& b) {
  requireSameRing(a, b);
  WeilDivisor out = mapped(a, widest(a.tier(), b.tier()), [](const Rational& c) { return c; });
  if (b.primalityAssumed()) out.markAssumed();
  for (auto& [key, term] : b.terms()) out.addTerm(term.coefficient, term.prime);
  return out;
}

WeilDivisor operator-(const WeilDivisor& a) {
  return mapped(a, a.tier(), [](const Rational& c) { return Rational(-c); });
}

WeilDivisor operator-(const WeilDivisor& a, const WeilDivisor& b) { return a + (-b); }

WeilDivisor scale(const Coefficient& c, const WeilDivisor& D) {
  return mapped(D, widest(c.tier, D.tier()), [&](const Rational& x) { return Rational(c.value * x); });
}

WeilDivisor coerceTier(const WeilDivisor& D, Tier target) {
  if (target == Tier::Integer && !D.isIntegral())
    throw NonIntegralCoercion("divisor " + D.toString() + " has non-integral coefficients");
  return mapped(D, target, [](const Rational& c) { return c; });
}

WeilDivisor floorOf(const WeilDivisor& D) {
  return mapped(D, Tier::Integer, [](const Rational& c) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
    return Rational(q);
  });
}

WeilDivisor ceilingOf(const WeilDivisor& D) {
  return mapped(D, Tier::Integer, [](const Rational& c) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
    return Rational(q);
  });
}

WeilDivisor applyToCoefficients(const WeilDivisor& D, const std::function<Rational(const Rational&)>& fn) {
  WeilDivisor out = mapped(D, D.tier(), fn);
  if (!out.isIntegral()) out.setTier(Tier::Rational);
  return out;
}

void requireIntegral(const WeilDivisor& D) {
  if (D.tier() != Tier::Integer)
    throw NonIntegralCoercion("expected an integral divisor; coerce " + D.toString() + " to integer tier first");
}

}  // namespace dforge
