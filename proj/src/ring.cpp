#include "divisor_forge/ring.hpp"

#include <set>
#include <stdexcept>

#include "divisor_forge/errors.hpp"
#include "divisor_forge/poly_parse.hpp"

namespace dforge {

// ---------------------------------------------------------------------------
// Grading

Grading::Grading(std::vector<std::vector<int64_t>> rows) : rows_(std::move(rows)) {
  for (auto& r : rows_)
    if (r.size() != rows_[0].size()) throw std::invalid_argument("ragged grading matrix");
}

Grading Grading::standard(size_t nvars) { return Grading({std::vector<int64_t>(nvars, 1)}); }

Degree Grading::degreeOf(const Monomial& m) const {
  Degree d(rows_.size(), 0);
  for (size_t r = 0; r < rows_.size(); ++r)
    for (size_t j = 0; j < m.size(); ++j) d[r] += rows_[r][j] * m[j];
  return d;
}

Degree Grading::variableDegree(size_t var) const {
  Degree d(rows_.size());
  for (size_t r = 0; r < rows_.size(); ++r) d[r] = rows_[r][var];
  return d;
}

std::optional<Degree> Grading::homogeneousDegree(const Polynomial& f) const {
  if (f.isZero()) return std::nullopt;
  Degree d = degreeOf(f.leadingMonomial());
  for (auto& t : f.terms())
    if (degreeOf(t.mono) != d) return std::nullopt;
  return d;
}

int64_t Grading::Positivity::weightOf(const Degree& d) const {
  int64_t w = 0;
  for (size_t r = 0; r < coefficients.size() && r < d.size(); ++r) w += coefficients[r] * d[r];
  return w;
}

std::optional<Grading::Positivity> Grading::positiveWeights() const {
  const size_t k = rows_.size();
  if (k == 0 || nvars() == 0) return std::nullopt;
  constexpr int64_t kMaxCoeff = 4;
  std::vector<int64_t> coeffs(k, 0);
  // Enumerate coefficient vectors in {0..4}^k.
  for (;;) {
    size_t pos = 0;
    while (pos < k && coeffs[pos] == kMaxCoeff) coeffs[pos++] = 0;
    if (pos == k) return std::nullopt;
    ++coeffs[pos];
    std::vector<int64_t> w(nvars(), 0);
    bool positive = true;
    for (size_t j = 0; j < nvars() && positive; ++j) {
      for (size_t r = 0; r < k; ++r) w[j] += coeffs[r] * rows_[r][j];
      positive = w[j] > 0;
    }
    if (positive) return Positivity{coeffs, std::move(w)};
  }
}

Grading::Positivity Grading::requirePositive() const {
  auto w = positiveWeights();
  if (!w) throw GradingError("grading is not positive; graded pieces would be infinite-dimensional");
  return *w;
}

// ---------------------------------------------------------------------------
// RingCache

std::optional<GroebnerBasis> RingCache::lookup(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void RingCache::store(const std::string& key, GroebnerBasis value) const {
  std::lock_guard lock(mutex_);
  table_.insert_or_assign(key, std::move(value));
}

// ---------------------------------------------------------------------------
// QuotientRing

RingPtr QuotientRing::make(std::string name, std::vector<std::string> variables, Grading grading,
                           std::vector<Polynomial> relations) {
  if (variables.empty()) throw std::invalid_argument("a ring needs at least one variable");
  std::set<std::string> seen;
  for (auto& v : variables)
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
  if (grading.components() > 0 && grading.nvars() != variables.size())
    throw std::invalid_argument("grading matrix must have one column per variable");

  auto ring = std::shared_ptr<QuotientRing>(new QuotientRing());
  ring->name_ = std::move(name);
  ring->variables_ = std::move(variables);
  ring->grading_ = std::move(grading);
  const size_t n = ring->variables_.size();
  for (auto& r : relations) {
    if (r.nvars() != n) throw std::invalid_argument("relation has wrong variable count");
    if (!r.isZero()) ring->relations_.push_back(r.withOrder(ring->order()));
  }
  ring->quotientGB_ = groebnerBasis(ring->relations_, n, ring->order());
  if (ring->quotientGB_.isUnit()) throw std::invalid_argument("defining ideal is the unit ideal");
  ring->dimension_ = krullDimension(ring->quotientGB_);
  return ring;
}

RingPtr QuotientRing::make(std::string name, std::vector<std::string> variables,
                           std::vector<Polynomial> relations) {
  Grading g = Grading::standard(variables.size());
  return make(std::move(name), std::move(variables), std::move(g), std::move(relations));
}

std::optional<size_t> QuotientRing::variableIndex(const std::string& name) const {
  for (size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

Polynomial QuotientRing::variable(const std::string& name) const {
  auto i = variableIndex(name);
  if (!i) throw std::invalid_argument("no variable named '" + name + "'");
  return variable(*i);
}

Polynomial QuotientRing::parse(const std::string& text) const {
  return normalForm(parsePolynomial(text, variables_, order()));
}

Polynomial normalForm(const Polynomial& f, const QuotientRing& ring) { return ring.normalForm(f); }

// ---------------------------------------------------------------------------
// RingMap

RingMap::RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)) {
  if (images.size() != source_->nvars())
    throw std::invalid_argument("ring map needs one image per source variable");
  for (auto& img : images) {
    if (img.nvars() != target_->nvars()) throw std::invalid_argument("image not in the target ring");
    images_.push_back(target_->normalForm(img));
  }
  for (auto& rel : source_->relations())
    if (!apply(rel).isZero()) throw MathError("ring map is not well defined: a relation does not map to 0");
}

Polynomial RingMap::apply(const Polynomial& f) const {
  return target_->normalForm(evaluate(f, images_, target_->one()));
}

RingMap RingMap::identity(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (size_t i = 0; i < ring->nvars(); ++i) vars.push_back(ring->variable(i));
  return RingMap(ring, ring, std::move(vars));
}

Polynomial applyRingMap(const RingMap& phi, const Polynomial& f) { return phi.apply(f); }

}  // namespace dforge
