#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dforge {

// Exact coefficients. mpq_class keeps values in lowest terms with a positive
// denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

Rational makeRational(const Integer& num, const Integer& den);
std::string toString(const Rational& q);

class Monomial {
 public:
  using Exponents = boost::container::small_vector<int32_t, 8>;

  Monomial() = default;
  explicit Monomial(size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<int32_t> exps);
  explicit Monomial(Exponents exps);

  size_t size() const { return exps_.size(); }
  int32_t operator[](size_t i) const { return exps_[i]; }
  const Exponents& exponents() const { return exps_; }
  int64_t degree() const { return degree_; }
  bool isOne() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  // Requires divides(*this, other) to hold for `other / *this`.
  Monomial quotient(const Monomial& divisor) const;
  Monomial operator*(const Monomial& other) const;

  Monomial withInserted(size_t pos, size_t count) const;
  Monomial withErased(size_t pos, size_t count) const;
  Monomial permuted(std::span<const size_t> newIndexOf) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

 private:
  void recomputeDegree();

  Exponents exps_;
  int64_t degree_ = 0;
};

// Graded reverse lexicographic order, optionally refined into an elimination
// order: the first `eliminationBlock` variables are compared by their partial
// degree first, then grevlex on the whole monomial breaks ties.
struct MonomialOrder {
  size_t eliminationBlock = 0;

  int compare(const Monomial& a, const Monomial& b) const;
  bool operator==(const MonomialOrder&) const = default;
};

struct Term {
  Monomial mono;
  Rational coeff;
};

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(size_t nvars, MonomialOrder order) : nvars_(nvars), order_(order) {}

  static Polynomial constant(size_t nvars, MonomialOrder order, const Rational& c);
  static Polynomial variable(size_t nvars, MonomialOrder order, size_t index);
  static Polynomial monomial(MonomialOrder order, const Monomial& m, const Rational& c);
  // Terms in arbitrary order; equal monomials are combined and zeros dropped.
  static Polynomial fromTerms(size_t nvars, MonomialOrder order, std::vector<Term> terms);

  size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.isOne()); }
  bool isOne() const;

  const Term& leadingTerm() const { return terms_.front(); }
  const Monomial& leadingMonomial() const { return terms_.front().mono; }
  const Rational& leadingCoefficient() const { return terms_.front().coeff; }
  int64_t totalDegree() const;
  int32_t degreeIn(size_t var) const;
  bool involves(size_t var) const { return degreeIn(var) > 0; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial pow(unsigned n) const;
  Polynomial mulTerm(const Monomial& m, const Rational& c) const;
  Polynomial monic() const;
  // Scales to integer coefficients with content 1 and positive leading coefficient.
  Polynomial primitive() const;

  // Exact division in the free polynomial ring; empty result when `d` does not divide.
  bool divideExact(const Polynomial& d, Polynomial& quotient) const;

  Polynomial withOrder(MonomialOrder order) const;
  Polynomial withVariablesInserted(size_t pos, size_t count, MonomialOrder order) const;
  Polynomial withVariablesErased(size_t pos, size_t count, MonomialOrder order) const;
  Polynomial permuted(std::span<const size_t> newIndexOf, size_t newNvars, MonomialOrder order) const;
  // Substitutes `image` for variable `var`.
  Polynomial substitute(size_t var, const Polynomial& image) const;
  Polynomial derivative(size_t var) const;

  bool operator==(const Polynomial& o) const;
  // Total order used for canonical sorting of polynomial lists.
  int compare(const Polynomial& o) const;

  std::string toString(std::span<const std::string> names) const;

 private:
  size_t nvars_ = 0;
  MonomialOrder order_;
  std::vector<Term> terms_;  // strictly decreasing under order_
};

// Evaluates a polynomial whose variable i is replaced by images[i].
Polynomial evaluate(const Polynomial& f, std::span<const Polynomial> images, const Polynomial& one);

}  // namespace dforge
