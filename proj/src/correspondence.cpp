#include "divisor_forge/correspondence.hpp"

#include "divisor_forge/errors.hpp"
#include "divisor_forge/ideal_ops.hpp"
#include "divisor_forge/smith.hpp"

namespace dforge {

FractionalIdeal sheafOf(const WeilDivisor& D) {
  requireIntegral(D);
  DivisorMemo& memo = D.memo();
  if (divisorMemoizationEnabled()) {
    std::lock_guard lock(memo.mutex);
    if (memo.sheaf) return *memo.sheaf;
  }
  const RingPtr& R = D.ring();
  Ideal plus = Ideal::unit(R), minus = Ideal::unit(R);
  for (auto& [key, term] : D.terms()) {
    const Rational& a = term.coefficient;
    unsigned n = static_cast<unsigned>(Rational(abs(a)).get_num().get_ui());
    if (a > 0)
      plus = idealProduct(plus, bracketPower(term.prime, n));
    else
      minus = idealProduct(minus, bracketPower(term.prime, n));
  }
  plus = reflexify(plus);
  minus = reflexify(minus);
  std::optional<FractionalIdeal> result;
  if (plus.isUnit()) {
    result.emplace(minus, R->one());
  } else {
    Polynomial f = chooseNonzerodivisor(plus);
    Ideal numerator = idealQuotient(idealProduct(Ideal::principal(R, f), minus), plus);
    result.emplace(FractionalIdeal(numerator, f).normalized());
  }
  if (divisorMemoizationEnabled()) {
    std::lock_guard lock(memo.mutex);
    memo.sheaf = *result;
  }
  return *result;
}

Degree degreeOf(const QuotientRing& R, const Polynomial& f) {
  Polynomial g = R.normalForm(f);
  if (g.isZero()) throw GradingError("zero has no degree");
  auto d = R.grading().homogeneousDegree(g);
  if (!d) throw GradingError(R.format(g) + " is not homogeneous");
  return *d;
}

Degree degreeOf(const QuotientRing& R, const FieldElement& s) {
  Degree a = degreeOf(R, s.numerator), b = degreeOf(R, s.denominator);
  for (size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

std::vector<Integer> findElementOfDegree(const Degree& target, const QuotientRing& R) {
  const auto& rows = R.grading().rows();
  if (target.size() != rows.size()) throw GradingError("degree has the wrong number of components");
  IntMatrix A;
  for (auto& row : rows) {
    A.emplace_back();
    for (int64_t v : row) A.back().emplace_back(static_cast<long>(v));
  }
  std::vector<Integer> b;
  for (int64_t v : target) b.emplace_back(static_cast<long>(v));
  return solveDiophantine(A, b);
}

FieldElement laurentMonomial(const QuotientRing& R, const std::vector<Integer>& exponents) {
  Polynomial num = R.one(), den = R.one();
  for (size_t i = 0; i < exponents.size(); ++i) {
    if (!exponents[i].fits_sint_p()) throw MathError("exponent out of range");
    long e = exponents[i].get_si();
    if (e > 0) num *= R.variable(i).pow(static_cast<unsigned>(e));
    if (e < 0) den *= R.variable(i).pow(static_cast<unsigned>(-e));
  }
  return {num, den};
}

WeilDivisor divisorOfFractionalIdeal(const FractionalIdeal& F, bool graded) {
  const RingPtr& R = F.ring();
  WeilDivisor E = -divisorOfIdeal(F.numerator());
  if (!graded) return E;
  R->grading().requirePositive();
  if (!isHomogeneous(F.numerator())) throw GradingError("numerator " + F.numerator().toString() + " is not homogeneous");
  auto e = findElementOfDegree(degreeOf(*R, F.denominator()), *R);
  return E + divisorOfElement(R, laurentMonomial(*R, e));
}

SectionedDivisor divisorWithSection(const FractionalIdeal& F, const FieldElement& s) {
  const RingPtr& R = F.ring();
  if (R->normalForm(s.numerator).isZero()) throw MathError("the zero section has no divisor");
  if (!F.contains(s)) throw MathError(s.toString(*R) + " is not an element of " + F.toString());
  WeilDivisor E = divisorOfElement(R, s) + divisorOfElement(R, F.denominator()) - divisorOfIdeal(F.numerator());
  return {E, s};
}

bool isCompleteIntersection(const QuotientRing& R) {
  size_t count = 0;
  for (auto& r : R.relations())
    if (!r.isZero()) ++count;
  return static_cast<int>(count) == static_cast<int>(R.nvars()) - R.dimension();
}

WeilDivisor canonicalDivisor(const RingPtr& R, bool graded) {
  if (!isCompleteIntersection(*R))
    throw NotCompleteIntersection("the defining ideal of " + R->name() + " is not generated by a regular sequence");
  if (!graded) return WeilDivisor(R);
  const Grading& grading = R->grading();
  Degree a(grading.components(), 0);
  for (auto& r : R->relations()) {
    if (r.isZero()) continue;
    auto d = grading.homogeneousDegree(r);
    if (!d) throw GradingError("relation " + R->format(r) + " is not homogeneous");
    for (size_t k = 0; k < a.size(); ++k) a[k] += (*d)[k];
  }
  for (size_t i = 0; i < R->nvars(); ++i) {
    Degree d = grading.variableDegree(i);
    for (size_t k = 0; k < a.size(); ++k) a[k] -= d[k];
  }
  for (auto& v : a) v = -v;
  auto e = findElementOfDegree(a, *R);
  return -divisorOfElement(R, laurentMonomial(*R, e));
}

}  // namespace dforge
