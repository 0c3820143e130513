#include "divisor_forge/primes.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "divisor_forge/errors.hpp"
#include "divisor_forge/factor.hpp"
#include "divisor_forge/fractional.hpp"
#include "divisor_forge/ideal_ops.hpp"

namespace dforge {

namespace {

// Returns the variable x such that g = c*x + r with c constant and r free of x.
std::optional<size_t> linearVariable(const Polynomial& g) {
  for (size_t i = g.nvars(); i-- > 0;) {
    const Term* only = nullptr;
    size_t count = 0;
    for (auto& t : g.terms())
      if (t.mono[i] > 0) {
        only = &t;
        ++count;
      }
    if (count == 1 && only->mono.degree() == 1) return i;
  }
  return std::nullopt;
}

// Solves out variables through generators c*x + r (r free of x) and returns a
// Groebner basis of what is left. Every element lies in P, and P is prime iff
// the residual ideal is prime in the remaining variables.
std::vector<Polynomial> linearResidual(const Ideal& P) {
  const size_t n = P.ring()->nvars();
  const MonomialOrder order = P.ring()->order();
  std::vector<Polynomial> gens = P.basis().generators();
  for (bool progress = true; progress && !gens.empty();) {
    progress = false;
    for (size_t k = 0; k < gens.size() && !progress; ++k) {
      auto var = linearVariable(gens[k]);
      if (!var) continue;
      const Polynomial& g = gens[k];
      Rational c;
      for (auto& t : g.terms())
        if (t.mono[*var] > 0) c = t.coeff;
      Polynomial x = Polynomial::variable(n, order, *var);
      Polynomial image = (g - x * c) * Rational(-1 / c);
      std::vector<Polynomial> rest;
      for (size_t j = 0; j < gens.size(); ++j)
        if (j != k) {
          Polynomial s = gens[j].substitute(*var, image);
          if (!s.isZero()) rest.push_back(std::move(s));
        }
      gens = groebnerBasis(rest, n, order).generators();
      progress = true;
    }
  }
  return gens;
}

constexpr int kCombinationAttempts = 8;

class Splitter {
 public:
  void split(const Ideal& J) {
    if (!visited_.insert(J.key()).second) return;
    if (J.isUnit() || J.height() != 1) return;
    if (certifyPrime(J)) {
      found_.emplace(J.key(), Ideal::canonical(J));
      return;
    }
    auto candidates = J.basis().generators();
    auto residual = linearResidual(J);
    candidates.insert(candidates.end(), residual.begin(), residual.end());
    if (tryFactors(J, candidates)) return;
    // Project V(J) to each coordinate subspace of dimension dim R; distinct
    // components usually land on distinct factors of the image.
    const auto& R = *J.ring();
    const size_t n = R.nvars(), d = static_cast<size_t>(std::max(R.dimension(), 0));
    if (d < n) {
      std::vector<bool> keep(n, false);
      std::fill(keep.end() - static_cast<std::ptrdiff_t>(d), keep.end(), true);
      do {
        std::vector<size_t> dropped, kept;
        for (size_t i = 0; i < n; ++i) (keep[i] ? kept : dropped).push_back(i);
        Ideal image = eliminate(J, dropped);
        std::vector<Polynomial> lifted;
        for (auto& g : image.basis().generators()) lifted.push_back(g.permuted(kept, n, R.order()));
        if (tryFactors(J, lifted)) return;
      } while (std::next_permutation(keep.begin(), keep.end()));
    }
    const auto& gens = J.generators();
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int attempt = 0; attempt < kCombinationAttempts; ++attempt) {
      Polynomial h = R.zero();
      for (auto& g : gens) h += g * Rational(coeff(rng));
      h = R.normalForm(h);
      if (h.isZero() || h.isConstant()) continue;
      FactorizationResult F = factorPolynomial(h);
      if (F.isIrreducible() || !informative(J, F)) continue;
      branch(J, F);
      return;
    }
    throw DecompositionIncomplete("could not split or certify the component " + J.toString());
  }

  std::vector<Ideal> result() const {
    std::vector<Ideal> out;
    for (auto& [key, P] : found_) out.push_back(P);
    return out;
  }

 private:
  bool tryFactors(const Ideal& J, const std::vector<Polynomial>& candidates) {
    for (auto& g : candidates) {
      if (g.isConstant()) continue;
      FactorizationResult F = factorPolynomial(g);
      if (F.factors.empty() || F.isIrreducible() || !informative(J, F)) continue;
      branch(J, F);
      return true;
    }
    return false;
  }

  // A factor already in J would give the branch J + (f) = J back.
  static bool informative(const Ideal& J, const FactorizationResult& F) {
    return std::none_of(F.factors.begin(), F.factors.end(), [&](const auto& fe) { return J.contains(fe.first); });
  }

  void branch(const Ideal& J, const FactorizationResult& F) {
    for (auto& [f, mult] : F.factors) split(idealSum(J, Ideal::principal(J.ring(), f)));
  }

  std::set<std::string> visited_;
  std::map<std::string, Ideal> found_;
};

}  // namespace

bool certifyPrime(const Ideal& P) {
  if (P.isUnit()) return false;
  auto gens = linearResidual(P);
  if (gens.empty()) return true;
  if (gens.size() != 1 || gens[0].isConstant()) return false;
  return factorPolynomial(gens[0]).isIrreducible();
}

std::vector<Ideal> minimalHeightOnePrimes(const Ideal& I) {
  if (I.isZero()) throw MathError("the zero ideal has no height-one primes");
  Splitter splitter;
  splitter.split(I);
  return splitter.result();
}

Ideal symbolicPower(const Ideal& P, unsigned n) {
  if (P.height() != 1) throw HeightNotOne("symbolic powers need a height-one prime");
  if (n == 0) return Ideal::unit(P.ring());
  if (n == 1) return P;
  const std::string key = "symbolic|" + P.key() + "|" + std::to_string(n);
  const RingCache& cache = P.ring()->cache();
  if (auto gb = cache.lookup(key)) return Ideal::canonical(Ideal(P.ring(), {}, *gb));
  Ideal result = reflexify(bracketPower(P, n));
  cache.store(key, result.basis());
  return result;
}

int maxSymbolicContainment(const Ideal& I, const Ideal& P) {
  requireSameRing(I, P);
  if (I.isZero()) throw MathError("the zero ideal lies in every symbolic power");
  if (!P.contains(I)) return 0;
  constexpr unsigned kCap = 1u << 12;
  unsigned lo = 1, hi = 2;
  while (symbolicPower(P, hi).contains(I)) {
    lo = hi;
    hi *= 2;
    if (hi > kCap) throw MathError("symbolic containment exceeds " + std::to_string(kCap));
  }
  while (hi - lo > 1) {
    unsigned mid = lo + (hi - lo) / 2;
    if (symbolicPower(P, mid).contains(I))
      lo = mid;
    else
      hi = mid;
  }
  return static_cast<int>(lo);
}

}  // namespace dforge
