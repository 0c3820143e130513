#pragma once

#include <span>
#include <vector>

#include "divisor_forge/polynomial.hpp"

namespace dforge {

// A Groebner basis of an ideal of a free polynomial ring. When reduced, the
// generators are monic, pairwise autoreduced and sorted by increasing leading
// monomial, so equal ideals give identical bases.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(size_t nvars, MonomialOrder order, std::vector<Polynomial> gens, bool reduced)
      : nvars_(nvars), order_(order), gens_(std::move(gens)), reduced_(reduced) {}

  size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  size_t size() const { return gens_.size(); }
  bool isReduced() const { return reduced_; }
  bool isUnit() const { return gens_.size() == 1 && gens_[0].isConstant(); }
  bool isZero() const { return gens_.empty(); }

  Polynomial normalForm(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normalForm(f).isZero(); }

  bool operator==(const GroebnerBasis& o) const { return gens_ == o.gens_; }

 private:
  size_t nvars_ = 0;
  MonomialOrder order_;
  std::vector<Polynomial> gens_;
  bool reduced_ = false;
};

// Remainder of f after full reduction by `divisors` (every term reduced).
Polynomial reduceFully(const Polynomial& f, std::span<const Polynomial> divisors);

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g);

// Production kernel: Buchberger with Gebauer-Moeller pair elimination (both
// Buchberger criteria) and normal selection. Pairs of the same minimal lcm
// degree are reduced as a batch, in parallel under OpenMP when `parallel`.
GroebnerBasis groebnerBasis(std::span<const Polynomial> gens, size_t nvars, MonomialOrder order,
                            bool parallel = true);

// Serial reference: textbook Buchberger without any pair criteria. Kept as an
// independent oracle for tests and as the benchmark baseline.
GroebnerBasis groebnerBasisReference(std::span<const Polynomial> gens, size_t nvars, MonomialOrder order);

// True iff every S-polynomial of `gb` reduces to zero modulo `gb`.
bool satisfiesBuchbergerCriterion(const GroebnerBasis& gb);

// Krull dimension of S/I from the leading-term ideal of a Groebner basis of I
// (size of a maximal independent set of variables); -1 for the unit ideal.
int krullDimension(const GroebnerBasis& gb);

}  // namespace dforge
