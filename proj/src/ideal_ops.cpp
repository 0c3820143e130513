#include "divisor_forge/ideal_ops.hpp"

#include <algorithm>
#include <functional>

#include "divisor_forge/errors.hpp"

namespace dforge {

namespace {

constexpr MonomialOrder kEliminateFirst{1};

Ideal fromPreimage(const RingPtr& ring, GroebnerBasis gb) {
  return Ideal::canonical(Ideal(ring, {}, std::move(gb)));
}

Polynomial liftT(const Polynomial& f) { return f.withVariablesInserted(0, 1, kEliminateFirst); }

// Generators of (ideal in S[t]) intersected with S, for an elimination Groebner
// basis computed with t as variable 0.
std::vector<Polynomial> dropT(const GroebnerBasis& gb, MonomialOrder order) {
  std::vector<Polynomial> kept;
  for (auto& g : gb.generators())
    if (!g.involves(0)) kept.push_back(g.withVariablesErased(0, 1, order));
  return kept;
}

// Preimage-level intersection of two ideals of the ambient ring S.
std::vector<Polynomial> intersectAmbient(std::span<const Polynomial> a, std::span<const Polynomial> b,
                                         size_t nvars, MonomialOrder order) {
  const Polynomial t = Polynomial::variable(nvars + 1, kEliminateFirst, 0);
  const Polynomial oneMinusT = Polynomial::constant(nvars + 1, kEliminateFirst, 1) - t;
  std::vector<Polynomial> gens;
  for (auto& f : a) gens.push_back(t * liftT(f));
  for (auto& f : b) gens.push_back(oneMinusT * liftT(f));
  GroebnerBasis gb = groebnerBasis(gens, nvars + 1, kEliminateFirst);
  return dropT(gb, order);
}

GroebnerBasis basisOf(const QuotientRing& R, std::span<const Polynomial> gens) {
  std::vector<Polynomial> all(gens.begin(), gens.end());
  for (auto& r : R.quotientBasis().generators()) all.push_back(r);
  return groebnerBasis(all, R.nvars(), R.order());
}

const Rational* coefficientOf(const Polynomial& f, const Monomial& m) {
  for (auto& t : f.terms())
    if (t.mono == m) return &t.coeff;
  return nullptr;
}

}  // namespace

Ideal idealSum(const Ideal& I, const Ideal& J) {
  requireSameRing(I, J);
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  std::vector<Polynomial> all = I.basis().generators();
  all.insert(all.end(), J.basis().generators().begin(), J.basis().generators().end());
  const auto& R = *I.ring();
  return Ideal(I.ring(), std::move(gens), groebnerBasis(all, R.nvars(), R.order()));
}

Ideal idealProduct(const Ideal& I, const Ideal& J) {
  requireSameRing(I, J);
  const auto& R = *I.ring();
  std::vector<Polynomial> gens;
  for (auto& f : I.generators())
    for (auto& g : J.generators()) {
      Polynomial p = R.normalForm(f * g);
      if (!p.isZero() && std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
    }
  return Ideal(I.ring(), std::move(gens));
}

Ideal idealPower(const Ideal& I, unsigned n) {
  Ideal result = Ideal::unit(I.ring());
  for (unsigned k = 0; k < n; ++k) result = idealProduct(result, I);
  return result;
}

Ideal idealIntersection(const Ideal& I, const Ideal& J) {
  requireSameRing(I, J);
  if (I.contains(J)) return J;
  if (J.contains(I)) return I;
  const auto& R = *I.ring();
  auto gens = intersectAmbient(I.basis().generators(), J.basis().generators(), R.nvars(), R.order());
  return fromPreimage(I.ring(), groebnerBasis(gens, R.nvars(), R.order()));
}

Ideal bracketPower(const Ideal& I, unsigned n) {
  if (n == 0) return Ideal::unit(I.ring());
  std::vector<Polynomial> gens;
  for (auto& g : I.generators()) gens.push_back(g.pow(n));
  return Ideal(I.ring(), std::move(gens));
}

Ideal idealQuotient(const Ideal& I, const Polynomial& g) {
  const auto& R = *I.ring();
  Polynomial h = R.normalForm(g.withOrder(R.order()));
  if (I.contains(h)) return Ideal::unit(I.ring());
  std::vector<Polynomial> single{h};
  auto meet = intersectAmbient(I.basis().generators(), single, R.nvars(), R.order());
  std::vector<Polynomial> quotients;
  for (auto& f : meet) {
    Polynomial q;
    if (!f.divideExact(h, q)) throw std::logic_error("intersection with (g) produced a non-multiple of g");
    quotients.push_back(std::move(q));
  }
  return fromPreimage(I.ring(), basisOf(R, quotients));
}

Ideal idealQuotient(const Ideal& I, const Ideal& J) {
  requireSameRing(I, J);
  Ideal result = Ideal::unit(I.ring());
  for (auto& g : J.generators()) result = idealIntersection(result, idealQuotient(I, g));
  return result;
}

Ideal saturate(const Ideal& I, const Polynomial& g) {
  const auto& R = *I.ring();
  Polynomial h = R.normalForm(g.withOrder(R.order()));
  if (h.isZero()) return Ideal::unit(I.ring());
  if (h.isConstant()) return I;
  const size_t n = R.nvars();
  std::vector<Polynomial> gens;
  for (auto& f : I.basis().generators()) gens.push_back(liftT(f));
  const Polynomial t = Polynomial::variable(n + 1, kEliminateFirst, 0);
  gens.push_back(Polynomial::constant(n + 1, kEliminateFirst, 1) - t * liftT(h));
  GroebnerBasis gb = groebnerBasis(gens, n + 1, kEliminateFirst);
  return fromPreimage(I.ring(), basisOf(R, dropT(gb, R.order())));
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  requireSameRing(I, J);
  Ideal result = Ideal::unit(I.ring());
  for (auto& g : J.generators()) result = idealIntersection(result, saturate(I, g));
  return result;
}

Ideal saturateByQuotients(const Ideal& I, const Ideal& J) {
  Ideal current = I;
  for (;;) {
    Ideal next = idealQuotient(current, J);
    if (next == current) return current;
    current = std::move(next);
  }
}

Ideal eliminate(const Ideal& I, std::span<const size_t> variables) {
  const auto& R = *I.ring();
  const size_t n = R.nvars();
  std::vector<bool> drop(n, false);
  for (size_t v : variables) {
    if (v >= n) throw std::out_of_range("variable index out of range");
    drop[v] = true;
  }
  std::vector<size_t> newIndexOf(n);
  std::vector<size_t> keep;
  size_t block = 0;
  for (size_t i = 0; i < n; ++i)
    if (drop[i]) newIndexOf[i] = block++;
  for (size_t i = 0, next = block; i < n; ++i)
    if (!drop[i]) {
      newIndexOf[i] = next++;
      keep.push_back(i);
    }
  const MonomialOrder elim{block};
  std::vector<Polynomial> gens;
  for (auto& g : I.basis().generators()) gens.push_back(g.permuted(newIndexOf, n, elim));
  GroebnerBasis gb = groebnerBasis(gens, n, elim);

  std::vector<std::string> names;
  std::vector<std::vector<int64_t>> rows(R.grading().components());
  for (size_t i : keep) {
    names.push_back(R.variables()[i]);
    for (size_t r = 0; r < rows.size(); ++r) rows[r].push_back(R.grading().rows()[r][i]);
  }
  RingPtr target = QuotientRing::make(R.name() + "_elim", names, Grading(rows), {});
  std::vector<Polynomial> kept;
  for (auto& g : gb.generators()) {
    bool free = true;
    for (size_t v = 0; v < block && free; ++v) free = !g.involves(v);
    if (free) kept.push_back(g.withVariablesErased(0, block, target->order()));
  }
  return Ideal(target, std::move(kept));
}

Ideal irrelevantIdeal(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (size_t i = 0; i < ring->nvars(); ++i) {
    Degree d = ring->grading().variableDegree(i);
    if (std::any_of(d.begin(), d.end(), [](int64_t c) { return c != 0; })) gens.push_back(ring->variable(i));
  }
  return Ideal(ring, std::move(gens));
}

bool isHomogeneous(const Ideal& I) {
  const Grading& grading = I.ring()->grading();
  return std::all_of(I.basis().generators().begin(), I.basis().generators().end(),
                     [&](const Polynomial& g) { return grading.homogeneousDegree(g).has_value(); });
}

std::vector<Monomial> monomialsOfDegree(const Grading& grading, const Degree& d) {
  const auto positivity = grading.requirePositive();
  const int64_t target = positivity.weightOf(d);
  const size_t n = grading.nvars();
  std::vector<Monomial> out;
  if (target < 0) return out;
  Monomial::Exponents e(n, 0);
  std::function<void(size_t, int64_t)> rec = [&](size_t i, int64_t remaining) {
    if (i == n) {
      if (remaining != 0) return;
      Monomial m(e);
      if (grading.degreeOf(m) == d) out.push_back(std::move(m));
      return;
    }
    const int64_t w = positivity.weights[i];
    for (int64_t k = 0; k * w <= remaining; ++k) {
      e[i] = static_cast<int32_t>(k);
      rec(i + 1, remaining - k * w);
    }
    e[i] = 0;
  };
  rec(0, target);
  const MonomialOrder order{};
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; });
  return out;
}

std::vector<Polynomial> rowEchelon(std::vector<Polynomial> rows) {
  std::vector<Polynomial> basis;
  for (auto& row : rows) {
    Polynomial v = std::move(row);
    for (auto& b : basis)
      if (const Rational* c = coefficientOf(v, b.leadingMonomial())) v -= b * Rational(*c);
    if (v.isZero()) continue;
    v = v.monic();
    for (auto& b : basis)
      if (const Rational* c = coefficientOf(b, v.leadingMonomial())) b -= v * Rational(*c);
    basis.push_back(std::move(v));
  }
  if (!basis.empty()) {
    const MonomialOrder order = basis[0].order();
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order.compare(a.leadingMonomial(), b.leadingMonomial()) < 0;
    });
  }
  return basis;
}

std::vector<Polynomial> gradedPieceBasis(const Ideal& I, const Degree& d, bool parallel) {
  const auto& R = *I.ring();
  const Grading& grading = R.grading();
  grading.requirePositive();
  if (d.size() != grading.components()) throw GradingError("degree has the wrong number of components");
  if (!isHomogeneous(I)) throw GradingError("ideal is not homogeneous");

  std::vector<std::pair<const Polynomial*, Monomial>> products;
  const auto gens = I.displayGenerators();
  for (auto& g : gens) {
    Degree e = *grading.homogeneousDegree(g);
    Degree rest(d.size());
    for (size_t k = 0; k < d.size(); ++k) rest[k] = d[k] - e[k];
    for (auto& m : monomialsOfDegree(grading, rest)) products.emplace_back(&g, std::move(m));
  }

  std::vector<Polynomial> rows(products.size());
  const long count = static_cast<long>(products.size());
#pragma omp parallel for schedule(dynamic) if (parallel && count > 1)
  for (long k = 0; k < count; ++k)
    rows[k] = R.normalForm(products[k].first->mulTerm(products[k].second, Rational(1)));
  (void)parallel;
  return rowEchelon(std::move(rows));
}

}  // namespace dforge
