#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "divisor_forge/fractional.hpp"
#include "divisor_forge/ideal.hpp"

namespace dforge {

enum class Tier { Integer, Rational };

struct Coefficient {
  Tier tier = Tier::Integer;
  Rational value;

  static Coefficient integer(const Integer& n) { return {Tier::Integer, Rational(n)}; }
  // Rational tier even when the value happens to be integral.
  static Coefficient rational(Rational q) {
    q.canonicalize();
    return {Tier::Rational, q};
  }
};

// Results memoized per divisor value. Entries are pure functions of the
// divisor, so racing writers store identical values.
struct DivisorMemo {
  std::mutex mutex;
  std::optional<FractionalIdeal> sheaf;
  std::map<bool, Ideal> nonCartierLocus;  // keyed by the graded flag
};

// Process-wide switch, used by tests to check that memoization is transparent.
void setDivisorMemoization(bool enabled);
bool divisorMemoizationEnabled();

// A finite formal sum of height-one primes, keyed by the primes' canonical
// keys. Immutable apart from the memo table.
class WeilDivisor {
 public:
  struct Term {
    Rational coefficient;
    Ideal prime;  // as displayed; equal primes share a key
  };

  explicit WeilDivisor(RingPtr ring, Tier tier = Tier::Integer);

  const RingPtr& ring() const { return ring_; }
  Tier tier() const { return tier_; }
  bool primalityAssumed() const { return assumed_; }
  const std::map<std::string, Term>& terms() const { return terms_; }

  bool isZero() const { return terms_.empty(); }
  bool isEffective() const;
  // Every coefficient is an integer (regardless of tier).
  bool isIntegral() const;
  std::vector<Ideal> support() const;
  Rational coefficientOf(const Ideal& P) const;

  // Terms by decreasing coefficient, then key.
  std::vector<const Term*> displayOrder() const;
  std::string toString() const;

  bool operator==(const WeilDivisor& o) const;

  DivisorMemo& memo() const { return *memo_; }

  // Building blocks for the free functions below.
  void addTerm(const Rational& c, const Ideal& prime);
  void setTier(Tier t) { tier_ = t; }
  void markAssumed() { assumed_ = true; }

 private:
  RingPtr ring_;
  Tier tier_;
  bool assumed_ = false;
  std::map<std::string, Term> terms_;
  std::shared_ptr<DivisorMemo> memo_;
};

std::string formatCoefficient(const Rational& c);

// Checks that P is a height-one prime; throws HeightNotOne, NotPrime, or
// PrimalityUncertain when P can be neither certified nor split. With
// assumePrime only the height is checked.
void requireHeightOnePrime(const Ideal& P, bool assumePrime);

WeilDivisor divisorFromPrimes(std::span<const Coefficient> coefficients, std::span<const Ideal> primes,
                              bool assumePrime = false);
WeilDivisor primeDivisor(const Ideal& P, bool assumePrime = false);

// Sum of ord_P(f) P over the height-one primes P containing f.
WeilDivisor divisorOfElement(const RingPtr& ring, const Polynomial& f);
WeilDivisor divisorOfElement(const RingPtr& ring, const FieldElement& s);
// Sum of n_i Q_i over the height-one primes Q_i containing I, n_i the largest
// n with I inside the n-th symbolic power of Q_i.
WeilDivisor divisorOfIdeal(const Ideal& I);

WeilDivisor operator+(const WeilDivisor& a, const WeilDivisor& b);
WeilDivisor operator-(const WeilDivisor& a, const WeilDivisor& b);
WeilDivisor operator-(const WeilDivisor& a);
WeilDivisor scale(const Coefficient& c, const WeilDivisor& D);

// Integer tier requires integral coefficients (NonIntegralCoercion otherwise).
WeilDivisor coerceTier(const WeilDivisor& D, Tier target);
WeilDivisor floorOf(const WeilDivisor& D);
WeilDivisor ceilingOf(const WeilDivisor& D);
// Applies fn to every coefficient, dropping zeros; the tier is kept unless
// a non-integral value appears in an Integer-tier divisor, which widens it.
WeilDivisor applyToCoefficients(const WeilDivisor& D, const std::function<Rational(const Rational&)>& fn);

void requireIntegral(const WeilDivisor& D);

}  // namespace dforge
