#include "divisor_forge/checks.hpp"

#include <algorithm>
#include <numeric>

#include "divisor_forge/correspondence.hpp"
#include "divisor_forge/errors.hpp"
#include "divisor_forge/ideal_ops.hpp"

namespace dforge {

namespace {

// Laplace expansion along the first row; matrices here are at most a few rows.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& M, const Polynomial& one) {
  const size_t n = M.size();
  if (n == 0) return one;
  if (n == 1) return M[0][0];
  Polynomial det = one - one;
  for (size_t j = 0; j < n; ++j) {
    if (M[0][j].isZero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (size_t i = 1; i < n; ++i) {
      minor.emplace_back();
      for (size_t k = 0; k < n; ++k)
        if (k != j) minor.back().push_back(M[i][k]);
    }
    Polynomial term = M[0][j] * determinant(minor, one);
    det = j % 2 == 0 ? det + term : det - term;
  }
  return det;
}

// Calls fn on every size-k subset of {0..n-1}, in lexicographic order.
template <class Fn>
void forEachSubset(size_t n, size_t k, Fn fn) {
  if (k > n) return;
  std::vector<size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    fn(idx);
    size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool isUnitAfterSaturation(const Ideal& I, bool graded) {
  if (I.isUnit()) return true;
  return graded && saturate(I, irrelevantIdeal(I.ring())).isUnit();
}

constexpr size_t kMaxSncSupport = 16;

}  // namespace

std::string verdictString(Verdict v) {
  switch (v) {
    case Verdict::True:
      return "true";
    case Verdict::False:
      return "false";
    case Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

Ideal nonCartierLocus(const WeilDivisor& D, bool graded) {
  requireIntegral(D);
  DivisorMemo& memo = D.memo();
  if (divisorMemoizationEnabled()) {
    std::lock_guard lock(memo.mutex);
    auto it = memo.nonCartierLocus.find(graded);
    if (it != memo.nonCartierLocus.end()) return it->second;
  }
  const RingPtr& R = D.ring();
  FractionalIdeal a = sheafOf(D), b = sheafOf(-D);
  Ideal product = idealProduct(a.numerator(), b.numerator());
  Ideal locus = idealQuotient(product, Ideal::principal(R, R->normalForm(a.denominator() * b.denominator())));
  if (graded) locus = saturate(locus, irrelevantIdeal(R));
  if (divisorMemoizationEnabled()) {
    std::lock_guard lock(memo.mutex);
    memo.nonCartierLocus.insert_or_assign(graded, locus);
  }
  return locus;
}

CheckReport isCartier(const WeilDivisor& D, bool graded) {
  Ideal locus = nonCartierLocus(D, graded);
  CheckReport report;
  report.verdict = locus.isUnit() ? Verdict::True : Verdict::False;
  if (!locus.isUnit()) {
    report.witnessIdeal = locus;
    report.note = "not Cartier along " + locus.toString();
  }
  if (graded) report.note += std::string(report.note.empty() ? "" : "; ") + "saturated by the irrelevant ideal";
  return report;
}

int isQCartier(int bound, const WeilDivisor& D) {
  if (bound < 1) throw std::invalid_argument("isQCartier needs a positive bound");
  Integer l = 1;
  for (auto& [key, term] : D.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), term.coefficient.get_den_mpz_t());
  if (!l.fits_sint_p()) throw MathError("common denominator too large");
  const long step = l.get_si();
  for (long n = step;; n += step) {
    WeilDivisor multiple = coerceTier(scale(Coefficient::integer(n), D), Tier::Integer);
    if (isCartier(multiple).verdict == Verdict::True) return static_cast<int>(n);
    if (n >= bound) return 0;
  }
}

CheckReport isPrincipal(const WeilDivisor& D, bool graded) {
  requireIntegral(D);
  const RingPtr& R = D.ring();
  CheckReport report;
  if (D.isZero()) {
    report.verdict = Verdict::True;
    report.witnessElement = FieldElement{R->one(), R->one()};
    return report;
  }
  FractionalIdeal F = sheafOf(D);
  const Ideal& N = F.numerator();
  auto principalBy = [&](const Polynomial& g) {
    report.verdict = Verdict::True;
    report.witnessElement = FieldElement{F.denominator(), g};
    report.note = "O(D) is generated by " + FieldElement{g, F.denominator()}.toString(*R);
    return report;
  };

  const bool homogeneous = R->grading().positiveWeights().has_value() && isHomogeneous(N) &&
                           R->grading().homogeneousDegree(F.denominator()).has_value();
  if (homogeneous) {
    // Graded Nakayama: the minimal number of generators is dim N / mN.
    const auto weights = R->grading().requirePositive();
    auto gens = N.displayGenerators();
    std::stable_sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
      return weights.weightOf(*R->grading().homogeneousDegree(a)) < weights.weightOf(*R->grading().homogeneousDegree(b));
    });
    Ideal mN = idealProduct(irrelevantIdeal(R), N);
    std::vector<Polynomial> kept;
    for (auto& g : gens) {
      std::vector<Polynomial> span = kept;
      span.insert(span.end(), mN.generators().begin(), mN.generators().end());
      if (!Ideal(R, span).contains(g)) kept.push_back(g);
    }
    if (kept.size() == 1) return principalBy(kept[0]);
    report.verdict = Verdict::False;
    report.witnessIdeal = N;
    report.note = "O(D) needs " + std::to_string(kept.size()) + " generators";
    return report;
  }

  auto candidates = N.displayGenerators();
  candidates.insert(candidates.end(), N.generators().begin(), N.generators().end());
  for (auto& g : candidates)
    if (Ideal::principal(R, g) == N) return principalBy(g);
  report.verdict = Verdict::Unknown;
  report.note = std::string("no single generator found") +
                (graded ? "" : "; for non-graded divisors this can be a false negative");
  return report;
}

CheckReport isLinearEquivalent(const WeilDivisor& D, const WeilDivisor& E, bool graded) {
  CheckReport report = isPrincipal(D - E, graded);
  if (!graded || report.verdict != Verdict::True) return report;
  Degree d = degreeOf(*D.ring(), *report.witnessElement);
  if (std::any_of(d.begin(), d.end(), [](int64_t c) { return c != 0; })) {
    report.verdict = Verdict::False;
    std::string deg;
    for (auto c : d) deg += (deg.empty() ? "" : ",") + std::to_string(c);
    report.note = "D - E is the divisor of an element of degree (" + deg + "), not 0";
  }
  return report;
}

bool isRegular(const Ideal& I, bool graded) {
  if (I.isUnit()) return true;
  const RingPtr& R = I.ring();
  const size_t n = R->nvars();
  const int height = static_cast<int>(n) - I.dimension();
  if (height == 0) return true;
  const auto& gens = I.basis().generators();
  std::vector<std::vector<Polynomial>> jac;
  for (auto& g : gens) {
    jac.emplace_back();
    for (size_t v = 0; v < n; ++v) jac.back().push_back(g.derivative(v));
  }
  std::vector<Polynomial> singular = I.generators();
  const size_t h = static_cast<size_t>(height);
  forEachSubset(gens.size(), h, [&](const std::vector<size_t>& rows) {
    forEachSubset(n, h, [&](const std::vector<size_t>& cols) {
      std::vector<std::vector<Polynomial>> M;
      for (size_t r : rows) {
        M.emplace_back();
        for (size_t c : cols) M.back().push_back(jac[r][c]);
      }
      Polynomial minor = R->normalForm(determinant(M, R->one()));
      if (!minor.isZero()) singular.push_back(std::move(minor));
    });
  });
  return isUnitAfterSaturation(Ideal(R, singular), graded);
}

CheckReport isSNC(const WeilDivisor& D, bool graded) {
  const RingPtr& R = D.ring();
  CheckReport report;
  report.verdict = Verdict::False;
  if (graded) report.note = "intersections saturated by the irrelevant ideal; ";
  if (!isRegular(Ideal::zero(R), graded)) {
    report.note += "the ambient ring is not regular";
    return report;
  }
  const auto primes = D.support();
  if (primes.size() > kMaxSncSupport) throw MathError("isSNC supports at most 16 components");
  for (auto& P : primes) {
    if (!isRegular(P, graded)) {
      report.witnessIdeal = P;
      report.note += "component " + P.toString() + " is not regular";
      return report;
    }
  }
  for (size_t k = 2; k <= primes.size(); ++k) {
    bool ok = true;
    forEachSubset(primes.size(), k, [&](const std::vector<size_t>& subset) {
      if (!ok) return;
      Ideal sum = primes[subset[0]];
      for (size_t i = 1; i < subset.size(); ++i) sum = idealSum(sum, primes[subset[i]]);
      if (isUnitAfterSaturation(sum, graded)) return;
      if (sum.height() != static_cast<int>(k) || !isRegular(sum, graded)) {
        ok = false;
        report.witnessIdeal = sum;
        report.note += "the intersection " + sum.toString() + " of " + std::to_string(k) +
                       " components is singular or has the wrong codimension";
      }
    });
    if (!ok) return report;
  }
  report.verdict = Verdict::True;
  if (!report.note.empty()) report.note.resize(report.note.size() - 2);
  return report;
}

}  // namespace dforge
