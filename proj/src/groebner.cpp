#include "divisor_forge/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dforge {

namespace {

struct Descending {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order.compare(a, b) > 0; }
};

const Polynomial* findReducer(const Monomial& m, std::span<const Polynomial> divisors) {
  for (auto& g : divisors)
    if (g.leadingMonomial().divides(m)) return &g;
  return nullptr;
}

GroebnerBasis unitBasis(size_t nvars, MonomialOrder order) {
  return GroebnerBasis(nvars, order, {Polynomial::constant(nvars, order, 1)}, true);
}

void sortByLeadingMonomial(std::vector<Polynomial>& gens, const MonomialOrder& order) {
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leadingMonomial(), b.leadingMonomial()) < 0;
  });
}

// Minimal + fully interreduced + monic + sorted; input must generate the ideal
// as a Groebner basis.
std::vector<Polynomial> reduceBasis(std::vector<Polynomial> g, const MonomialOrder& order) {
  sortByLeadingMonomial(g, order);
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& mi = g[i].leadingMonomial();
      const auto& mj = g[j].leadingMonomial();
      // Ties between equal leading monomials keep the earliest one.
      if (mj.divides(mi) && (!(mj == mi) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i].monic());
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Term& lead = minimal[i].leadingTerm();
    Polynomial tail = minimal[i] - Polynomial::monomial(order, lead.mono, lead.coeff);
    Polynomial r = reduceFully(tail, others) + Polynomial::monomial(order, lead.mono, lead.coeff);
    reduced.push_back(r.monic());
  }
  sortByLeadingMonomial(reduced, order);
  return reduced;
}

struct Pair {
  size_t i, j;
  Monomial lcm;
};

}  // namespace

Polynomial GroebnerBasis::normalForm(const Polynomial& f) const { return reduceFully(f, gens_); }

Polynomial reduceFully(const Polynomial& f, std::span<const Polynomial> divisors) {
  if (f.isZero() || divisors.empty()) return f;
  const MonomialOrder order = f.order();
  std::map<Monomial, Rational, Descending> work(Descending{order});
  for (auto& t : f.terms()) work.emplace_hint(work.end(), t.mono, t.coeff);
  std::vector<Term> remainder;
  while (!work.empty()) {
    auto it = work.begin();
    const Polynomial* g = findReducer(it->first, divisors);
    if (g == nullptr) {
      remainder.push_back({it->first, it->second});
      work.erase(it);
      continue;
    }
    Monomial m = it->first.quotient(g->leadingMonomial());
    Rational c = it->second / g->leadingCoefficient();
    work.erase(it);
    const auto& gt = g->terms();
    for (size_t k = 1; k < gt.size(); ++k) {
      Monomial key = gt[k].mono * m;
      auto [pos, inserted] = work.try_emplace(std::move(key));
      pos->second -= c * gt[k].coeff;
      if (pos->second == 0) work.erase(pos);
    }
  }
  return Polynomial::fromTerms(f.nvars(), order, std::move(remainder));
}

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = f.leadingMonomial().lcm(g.leadingMonomial());
  Polynomial a = f.mulTerm(l.quotient(f.leadingMonomial()), 1 / f.leadingCoefficient());
  Polynomial b = g.mulTerm(l.quotient(g.leadingMonomial()), 1 / g.leadingCoefficient());
  return a - b;
}

GroebnerBasis groebnerBasis(std::span<const Polynomial> gens, size_t nvars, MonomialOrder order,
                            bool parallel) {
  std::vector<Polynomial> basis;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto activePolys = [&] {
    std::vector<Polynomial> out;
    for (size_t k = 0; k < basis.size(); ++k)
      if (active[k]) out.push_back(basis[k]);
    return out;
  };

  // Gebauer-Moeller installation of a new element.
  auto update = [&](Polynomial h) {
    const size_t hi = basis.size();
    const Monomial& lh = h.leadingMonomial();
    std::vector<Pair> candidates;
    for (size_t k = 0; k < basis.size(); ++k)
      if (active[k]) candidates.push_back({k, hi, basis[k].leadingMonomial().lcm(lh)});

    std::vector<Pair> kept;
    for (size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool keep = basis[p.i].leadingMonomial().coprime(lh);
      if (!keep) {
        keep = true;
        for (size_t d = c + 1; d < candidates.size() && keep; ++d)
          if (candidates[d].lcm.divides(p.lcm)) keep = false;
        for (size_t d = 0; d < kept.size() && keep; ++d)
          if (kept[d].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    std::vector<Pair> fresh;
    for (auto& p : kept)
      if (!basis[p.i].leadingMonomial().coprime(lh)) fresh.push_back(p);

    std::vector<Pair> survivors;
    for (auto& p : pairs) {
      bool drop = lh.divides(p.lcm) && !(basis[p.i].leadingMonomial().lcm(lh) == p.lcm) &&
                  !(basis[p.j].leadingMonomial().lcm(lh) == p.lcm);
      if (!drop) survivors.push_back(std::move(p));
    }
    for (auto& p : fresh) survivors.push_back(std::move(p));
    pairs = std::move(survivors);

    for (size_t k = 0; k < basis.size(); ++k)
      if (active[k] && lh.divides(basis[k].leadingMonomial())) active[k] = false;
    basis.push_back(std::move(h));
    active.push_back(true);
  };

  for (auto& g : gens) {
    if (g.isZero()) continue;
    if (g.nvars() != nvars) throw std::logic_error("generator has wrong variable count");
    Polynomial h = reduceFully(g.withOrder(order), activePolys());
    if (h.isZero()) continue;
    if (h.isConstant()) return unitBasis(nvars, order);
    update(h.monic());
  }

  while (!pairs.empty()) {
    int64_t minDeg = pairs.front().lcm.degree();
    for (auto& p : pairs) minDeg = std::min(minDeg, p.lcm.degree());
    std::vector<Pair> batch, rest;
    for (auto& p : pairs) (p.lcm.degree() == minDeg ? batch : rest).push_back(std::move(p));
    pairs = std::move(rest);
    std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) {
      int c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });

    const std::vector<Polynomial> snapshot = activePolys();
    std::vector<Polynomial> results(batch.size());
    const long count = long(batch.size());
#pragma omp parallel for schedule(dynamic) if (parallel && count > 1)
    for (long k = 0; k < count; ++k)
      results[k] = reduceFully(sPolynomial(basis[batch[k].i], basis[batch[k].j]), snapshot);

    for (auto& r : results) {
      if (r.isZero()) continue;
      Polynomial h = reduceFully(r, activePolys());
      if (h.isZero()) continue;
      if (h.isConstant()) return unitBasis(nvars, order);
      update(h.monic());
    }
  }
  return GroebnerBasis(nvars, order, reduceBasis(activePolys(), order), true);
}

GroebnerBasis groebnerBasisReference(std::span<const Polynomial> gens, size_t nvars, MonomialOrder order) {
  std::vector<Polynomial> g;
  for (auto& f : gens)
    if (!f.isZero()) g.push_back(f.withOrder(order).monic());
  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t j = 0; j < g.size(); ++j)
    for (size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    Polynomial r = reduceFully(sPolynomial(g[i], g[j]), g);
    if (r.isZero()) continue;
    if (r.isConstant()) return unitBasis(nvars, order);
    g.push_back(r.monic());
    for (size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }
  for (auto& f : g)
    if (f.isConstant()) return unitBasis(nvars, order);
  if (g.empty()) return GroebnerBasis(nvars, order, {}, true);

  // Drop elements whose leading monomial is divisible by another's, then
  // replace each survivor by its normal form modulo the others.
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      const auto& mi = g[i].leadingMonomial();
      const auto& mj = g[j].leadingMonomial();
      if (mj.divides(mi) && (!(mj == mi) || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others(minimal.begin(), minimal.end());
    others.erase(others.begin() + long(i));
    Polynomial lead = Polynomial::monomial(order, minimal[i].leadingMonomial(), 1);
    reduced.push_back(lead + reduceFully(minimal[i] - lead, others));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leadingMonomial(), b.leadingMonomial()) < 0;
  });
  return GroebnerBasis(nvars, order, std::move(reduced), true);
}

bool satisfiesBuchbergerCriterion(const GroebnerBasis& gb) {
  const auto& g = gb.generators();
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j)
      if (!reduceFully(sPolynomial(g[i], g[j]), g).isZero()) return false;
  return true;
}

int krullDimension(const GroebnerBasis& gb) {
  if (gb.isUnit()) return -1;
  const size_t n = gb.nvars();
  if (n > 24) throw std::length_error("too many variables for independent-set search");
  std::vector<uint32_t> supports;
  for (auto& g : gb.generators()) {
    uint32_t s = 0;
    const Monomial& m = g.leadingMonomial();
    for (size_t i = 0; i < n; ++i)
      if (m[i] > 0) s |= 1u << i;
    supports.push_back(s);
  }
  int best = 0;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (auto s : supports)
      if ((s & ~mask) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

}  // namespace dforge
