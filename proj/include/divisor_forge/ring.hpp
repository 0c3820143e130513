#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "divisor_forge/groebner.hpp"
#include "divisor_forge/polynomial.hpp"

namespace dforge {

using Degree = std::vector<int64_t>;

// k x n integer matrix; column j is the multidegree of variable j.
class Grading {
 public:
  Grading() = default;
  explicit Grading(std::vector<std::vector<int64_t>> rows);
  static Grading standard(size_t nvars);

  size_t components() const { return rows_.size(); }
  size_t nvars() const { return rows_.empty() ? 0 : rows_[0].size(); }
  const std::vector<std::vector<int64_t>>& rows() const { return rows_; }

  Degree degreeOf(const Monomial& m) const;
  Degree variableDegree(size_t var) const;
  // Multidegree of f if every term has the same degree.
  std::optional<Degree> homogeneousDegree(const Polynomial& f) const;

  // A nonnegative integer combination of the rows giving every variable
  // positive weight, if one is found; graded-piece computations require it.
  struct Positivity {
    std::vector<int64_t> coefficients;  // one per row
    std::vector<int64_t> weights;       // one per variable
    int64_t weightOf(const Degree& d) const;
  };
  std::optional<Positivity> positiveWeights() const;
  Positivity requirePositive() const;

 private:
  std::vector<std::vector<int64_t>> rows_;
};

class QuotientRing;
using RingPtr = std::shared_ptr<const QuotientRing>;

// Memo tables hung off a ring. Entries are pure functions of their keys, so
// concurrent writers store identical values and last-writer-wins is safe.
class RingCache {
 public:
  std::optional<GroebnerBasis> lookup(const std::string& key) const;
  void store(const std::string& key, GroebnerBasis value) const;

 private:
  mutable std::mutex mutex_;
  mutable std::map<std::string, GroebnerBasis> table_;
};

// QQ[variables] / definingIdeal, with the fixed graded reverse lexicographic
// order in the declared variable order. The ring is assumed to be a normal
// domain; nothing here verifies it.
class QuotientRing {
 public:
  static RingPtr make(std::string name, std::vector<std::string> variables, Grading grading,
                      std::vector<Polynomial> relations);
  static RingPtr make(std::string name, std::vector<std::string> variables,
                      std::vector<Polynomial> relations = {});

  const std::string& name() const { return name_; }
  const std::vector<std::string>& variables() const { return variables_; }
  size_t nvars() const { return variables_.size(); }
  MonomialOrder order() const { return MonomialOrder{}; }
  const Grading& grading() const { return grading_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const GroebnerBasis& quotientBasis() const { return quotientGB_; }
  bool isPolynomialRing() const { return quotientGB_.isZero(); }
  int dimension() const { return dimension_; }
  std::optional<size_t> variableIndex(const std::string& name) const;

  Polynomial zero() const { return Polynomial(nvars(), order()); }
  Polynomial one() const { return Polynomial::constant(nvars(), order(), 1); }
  Polynomial constant(const Rational& c) const { return Polynomial::constant(nvars(), order(), c); }
  Polynomial variable(size_t i) const { return Polynomial::variable(nvars(), order(), i); }
  Polynomial variable(const std::string& name) const;
  Polynomial parse(const std::string& text) const;

  Polynomial normalForm(const Polynomial& f) const { return quotientGB_.normalForm(f); }
  std::string format(const Polynomial& f) const { return f.toString(variables_); }

  const RingCache& cache() const { return cache_; }

 private:
  QuotientRing() = default;

  std::string name_;
  std::vector<std::string> variables_;
  Grading grading_;
  std::vector<Polynomial> relations_;
  GroebnerBasis quotientGB_;
  int dimension_ = 0;
  RingCache cache_;
};

Polynomial normalForm(const Polynomial& f, const QuotientRing& ring);

// A ring map source -> target given by one target polynomial per source
// variable. Construction verifies that the relations of the source map to 0.
class RingMap {
 public:
  RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::vector<Polynomial>& images() const { return images_; }

  Polynomial apply(const Polynomial& f) const;

  static RingMap identity(const RingPtr& ring);

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<Polynomial> images_;
};

Polynomial applyRingMap(const RingMap& phi, const Polynomial& f);

}  // namespace dforge
