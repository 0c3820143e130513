#pragma once

#include <span>
#include <string>
#include <vector>

#include "divisor_forge/groebner.hpp"
#include "divisor_forge/ring.hpp"

namespace dforge {

// A finitely generated ideal of a QuotientRing. The reduced Groebner basis of
// its preimage in the ambient polynomial ring is computed at construction and
// doubles as the canonical key: two ideals are equal iff their keys are.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  // Trusted constructor for callers that already hold the preimage basis.
  Ideal(RingPtr ring, std::vector<Polynomial> generators, GroebnerBasis preimageBasis);

  static Ideal unit(const RingPtr& ring);
  static Ideal zero(const RingPtr& ring);
  static Ideal principal(const RingPtr& ring, const Polynomial& f);
  // Same ideal, generated by the normal forms of its basis elements.
  static Ideal canonical(const Ideal& I);

  const RingPtr& ring() const { return ring_; }
  // Normal forms in the ring, nonzero, in the order given.
  const std::vector<Polynomial>& generators() const { return gens_; }
  const GroebnerBasis& basis() const { return basis_; }
  const std::string& key() const { return key_; }

  bool isUnit() const { return basis_.isUnit(); }
  bool isZero() const { return gens_.empty(); }
  bool contains(const Polynomial& f) const { return basis_.contains(f); }
  bool contains(const Ideal& J) const;
  Polynomial normalForm(const Polynomial& f) const { return basis_.normalForm(f); }

  // Krull dimension of R/I (-1 for the unit ideal) and height dim R - dim R/I.
  int dimension() const { return krullDimension(basis_); }
  int height() const;

  // Normal forms of the basis elements that are nonzero in the ring, sorted
  // by increasing leading monomial.
  std::vector<Polynomial> displayGenerators() const;
  std::string generatorsString() const;
  std::string toString() const { return "ideal(" + generatorsString() + ")"; }

  bool operator==(const Ideal& o) const { return ring_ == o.ring_ && key_ == o.key_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  GroebnerBasis basis_;
  std::string key_;
};

void requireSameRing(const Ideal& a, const Ideal& b);

}  // namespace dforge
