#include "divisor_forge/ideal.hpp"

#include <algorithm>

#include "divisor_forge/errors.hpp"

namespace dforge {

namespace {

std::string keyOf(const QuotientRing& R, const GroebnerBasis& gb) {
  std::string key;
  for (auto& g : gb.generators()) {
    if (!key.empty()) key += ";";
    key += R.format(g);
  }
  return key;
}

std::vector<Polynomial> normalized(const QuotientRing& R, std::vector<Polynomial> gens) {
  std::vector<Polynomial> out;
  for (auto& g : gens) {
    if (g.nvars() != R.nvars()) throw std::invalid_argument("generator is not in the ring");
    Polynomial nf = R.normalForm(g.withOrder(R.order()));
    if (!nf.isZero()) out.push_back(std::move(nf));
  }
  return out;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  gens_ = normalized(*ring_, std::move(generators));
  std::vector<Polynomial> all = gens_;
  for (auto& r : ring_->quotientBasis().generators()) all.push_back(r);
  basis_ = groebnerBasis(all, ring_->nvars(), ring_->order());
  key_ = keyOf(*ring_, basis_);
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators, GroebnerBasis preimageBasis)
    : ring_(std::move(ring)), basis_(std::move(preimageBasis)) {
  gens_ = normalized(*ring_, std::move(generators));
  key_ = keyOf(*ring_, basis_);
}

Ideal Ideal::unit(const RingPtr& ring) { return Ideal(ring, {ring->one()}); }

Ideal Ideal::zero(const RingPtr& ring) { return Ideal(ring, {}, ring->quotientBasis()); }

Ideal Ideal::principal(const RingPtr& ring, const Polynomial& f) { return Ideal(ring, {f}); }

Ideal Ideal::canonical(const Ideal& I) { return Ideal(I.ring_, I.displayGenerators(), I.basis_); }

bool Ideal::contains(const Ideal& J) const {
  requireSameRing(*this, J);
  return std::all_of(J.gens_.begin(), J.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

int Ideal::height() const {
  if (isUnit()) return ring_->dimension() + 1;
  return ring_->dimension() - dimension();
}

std::vector<Polynomial> Ideal::displayGenerators() const {
  std::vector<Polynomial> out;
  for (auto& g : basis_.generators()) {
    Polynomial nf = ring_->normalForm(g);
    if (nf.isZero()) continue;
    if (std::find(out.begin(), out.end(), nf) == out.end()) out.push_back(std::move(nf));
  }
  const MonomialOrder order = ring_->order();
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    int c = order.compare(a.leadingMonomial(), b.leadingMonomial());
    return c != 0 ? c < 0 : a.compare(b) < 0;
  });
  return out;
}

std::string Ideal::generatorsString() const {
  if (gens_.empty()) return "0";
  std::string s;
  for (auto& g : gens_) {
    if (!s.empty()) s += ", ";
    s += ring_->format(g);
  }
  return s;
}

void requireSameRing(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) throw RingMismatch();
}

}  // namespace dforge
