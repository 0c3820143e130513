#include "divisor_forge/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dforge {

Rational makeRational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string toString(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::initializer_list<int32_t> exps) : exps_(exps.begin(), exps.end()) {
  recomputeDegree();
}

Monomial::Monomial(Exponents exps) : exps_(std::move(exps)) { recomputeDegree(); }

void Monomial::recomputeDegree() {
  degree_ = 0;
  for (auto e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
    degree_ += e;
  }
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  r.degree_ = 0;
  for (size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(*this);
  r.degree_ = 0;
  for (size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r(*this);
  for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (size_t i = 0; i < exps_.size(); ++i) {
    int64_t e = int64_t(exps_[i]) + other.exps_[i];
    if (e > std::numeric_limits<int32_t>::max()) throw std::overflow_error("exponent overflow");
    r.exps_[i] = int32_t(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::withInserted(size_t pos, size_t count) const {
  Exponents e(exps_);
  e.insert(e.begin() + pos, count, 0);
  return Monomial(std::move(e));
}

Monomial Monomial::withErased(size_t pos, size_t count) const {
  Exponents e(exps_);
  e.erase(e.begin() + pos, e.begin() + pos + count);
  return Monomial(std::move(e));
}

Monomial Monomial::permuted(std::span<const size_t> newIndexOf) const {
  size_t n = 0;
  for (auto k : newIndexOf) n = std::max(n, k + 1);
  Exponents e(n, 0);
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && newIndexOf[i] >= n) throw std::logic_error("permutation drops a variable");
    if (newIndexOf[i] < n) e[newIndexOf[i]] = exps_[i];
  }
  return Monomial(std::move(e));
}

// ---------------------------------------------------------------------------
// MonomialOrder

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (eliminationBlock > 0) {
    int64_t da = 0, db = 0;
    for (size_t i = 0; i < eliminationBlock; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
  }
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(size_t nvars, MonomialOrder order, const Rational& c) {
  Polynomial p(nvars, order);
  if (c != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(size_t nvars, MonomialOrder order, size_t index) {
  Monomial::Exponents e(nvars, 0);
  e[index] = 1;
  Polynomial p(nvars, order);
  p.terms_.push_back({Monomial(std::move(e)), Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(MonomialOrder order, const Monomial& m, const Rational& c) {
  Polynomial p(m.size(), order);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::fromTerms(size_t nvars, MonomialOrder order, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  Polynomial p(nvars, order);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::isOne() const {
  return terms_.size() == 1 && terms_[0].mono.isOne() && terms_[0].coeff == 1;
}

int64_t Polynomial::totalDegree() const {
  int64_t d = -1;
  for (auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

int32_t Polynomial::degreeIn(size_t var) const {
  int32_t d = 0;
  for (auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

namespace {

// Merges a + sign*b where both are sorted decreasing.
std::vector<Term> mergeTerms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract,
                             const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = order.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (subtract) out.back().coeff = -out.back().coeff;
  }
  return out;
}

void checkCompatible(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars() || !(a.order() == b.order()))
    throw std::logic_error("polynomials from different ambient rings");
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  checkCompatible(*this, o);
  Polynomial r(nvars_, order_);
  r.terms_ = mergeTerms(terms_, o.terms_, false, order_);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  checkCompatible(*this, o);
  Polynomial r(nvars_, order_);
  r.terms_ = mergeTerms(terms_, o.terms_, true, order_);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  checkCompatible(*this, o);
  if (terms_.empty() || o.terms_.empty()) return Polynomial(nvars_, order_);
  if (o.terms_.size() == 1) return mulTerm(o.terms_[0].mono, o.terms_[0].coeff);
  if (terms_.size() == 1) return o.mulTerm(terms_[0].mono, terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (auto& a : terms_)
    for (auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
  return fromTerms(nvars_, order_, std::move(prod));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(nvars_, order_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(nvars_, order_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::mulTerm(const Monomial& m, const Rational& c) const {
  Polynomial r(nvars_, order_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order of terms.
  for (auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / leadingCoefficient();
  return *this * inv;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  Integer den = 1, num = 0;
  for (auto& t : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  for (auto& t : terms_) {
    Integer v = t.coeff.get_num() * (den / t.coeff.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale = makeRational(den, num);
  if (leadingCoefficient() < 0) scale = -scale;
  return *this * scale;
}

bool Polynomial::divideExact(const Polynomial& d, Polynomial& quotient) const {
  checkCompatible(*this, d);
  if (d.isZero()) throw std::domain_error("division by zero polynomial");
  std::vector<Term> q;
  Polynomial rem = *this;
  const Term& ld = d.leadingTerm();
  while (!rem.isZero()) {
    const Term& lr = rem.leadingTerm();
    if (!ld.mono.divides(lr.mono)) return false;
    Monomial m = lr.mono.quotient(ld.mono);
    Rational c = lr.coeff / ld.coeff;
    rem = rem - d.mulTerm(m, c);
    q.push_back({std::move(m), std::move(c)});
  }
  quotient = fromTerms(nvars_, order_, std::move(q));
  return true;
}

Polynomial Polynomial::withOrder(MonomialOrder order) const {
  return fromTerms(nvars_, order, terms_);
}

Polynomial Polynomial::withVariablesInserted(size_t pos, size_t count, MonomialOrder order) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (auto& term : terms_) t.push_back({term.mono.withInserted(pos, count), term.coeff});
  return fromTerms(nvars_ + count, order, std::move(t));
}

Polynomial Polynomial::withVariablesErased(size_t pos, size_t count, MonomialOrder order) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (auto& term : terms_) {
    for (size_t i = pos; i < pos + count; ++i)
      if (term.mono[i] != 0) throw std::logic_error("erasing a variable that occurs");
    t.push_back({term.mono.withErased(pos, count), term.coeff});
  }
  return fromTerms(nvars_ - count, order, std::move(t));
}

Polynomial Polynomial::permuted(std::span<const size_t> newIndexOf, size_t newNvars,
                                MonomialOrder order) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (auto& term : terms_) {
    Monomial m = term.mono.permuted(newIndexOf);
    if (m.size() < newNvars) m = m.withInserted(m.size(), newNvars - m.size());
    t.push_back({std::move(m), term.coeff});
  }
  return fromTerms(newNvars, order, std::move(t));
}

Polynomial Polynomial::substitute(size_t var, const Polynomial& image) const {
  Polynomial result(nvars_, order_);
  std::vector<Polynomial> powers{constant(nvars_, order_, 1)};
  for (auto& t : terms_) {
    int32_t e = t.mono[var];
    while (int32_t(powers.size()) <= e) powers.push_back(powers.back() * image);
    Monomial::Exponents ex(t.mono.exponents());
    ex[var] = 0;
    result += powers[e].mulTerm(Monomial(std::move(ex)), t.coeff);
  }
  return result;
}

Polynomial Polynomial::derivative(size_t var) const {
  std::vector<Term> t;
  for (auto& term : terms_) {
    int32_t e = term.mono[var];
    if (e == 0) continue;
    Monomial::Exponents ex(term.mono.exponents());
    ex[var] = e - 1;
    t.push_back({Monomial(std::move(ex)), term.coeff * e});
  }
  return fromTerms(nvars_, order_, std::move(t));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

int Polynomial::compare(const Polynomial& o) const {
  size_t n = std::min(terms_.size(), o.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = order_.compare(terms_[i].mono, o.terms_[i].mono);
    if (c != 0) return c;
    int cc = cmp(terms_[i].coeff, o.terms_[i].coeff);
    if (cc != 0) return cc > 0 ? 1 : -1;
  }
  if (terms_.size() != o.terms_.size()) return terms_.size() > o.terms_.size() ? 1 : -1;
  return 0;
}

std::string Polynomial::toString(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& t : terms_) {
    Rational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (negative)
      out << "-";
    else if (!first)
      out << "+";
    first = false;
    bool unitCoeff = (c == 1);
    if (!unitCoeff || t.mono.isOne()) {
      out << c.get_str();
      if (!t.mono.isOne()) out << "*";
    }
    bool firstVar = true;
    for (size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!firstVar) out << "*";
      firstVar = false;
      out << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (t.mono[i] > 1) out << "^" << t.mono[i];
    }
  }
  return out.str();
}

Polynomial evaluate(const Polynomial& f, std::span<const Polynomial> images, const Polynomial& one) {
  Polynomial result(one.nvars(), one.order());
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (auto& t : f.terms()) {
    Polynomial term = one * t.coeff;
    for (size_t i = 0; i < t.mono.size(); ++i) {
      int32_t e = t.mono[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(one);
      while (int32_t(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
      term = term * pw[e];
    }
    result += term;
  }
  return result;
}

}  // namespace dforge
