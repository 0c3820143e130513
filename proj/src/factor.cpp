#include "divisor_forge/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>

#include "divisor_forge/errors.hpp"

namespace dforge {

namespace univariate {

namespace {

// ---------------------------------------------------------------------------
// Integer and rational dense polynomials

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const ZPoly& a) { return int(a.size()) - 1; }

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitivePart(ZPoly a) {
  trim(a);
  if (a.empty()) return a;
  Integer g = content(a);
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Exact division over Z; false when g does not divide f.
bool divideExact(const ZPoly& f, const ZPoly& g, ZPoly& q) {
  if (g.empty()) throw std::domain_error("division by zero polynomial");
  ZPoly r = f;
  trim(r);
  const int dg = degree(g);
  if (degree(r) < dg) return r.empty() ? (q.clear(), true) : false;
  if (r[0] != 0 && g[0] != 0 && !mpz_divisible_p(r[0].get_mpz_t(), g[0].get_mpz_t())) return false;
  q.assign(size_t(degree(r) - dg + 1), 0);
  for (int k = degree(r) - dg; k >= 0; --k) {
    const Integer& top = r[size_t(k + dg)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), g.back().get_mpz_t())) return false;
    Integer c = top / g.back();
    q[size_t(k)] = c;
    for (int j = 0; j <= dg; ++j) r[size_t(k + j)] -= c * g[size_t(j)];
  }
  trim(r);
  trim(q);
  return r.empty();
}

using QPoly = std::vector<Rational>;

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly toQ(const ZPoly& a) { return QPoly(a.begin(), a.end()); }

ZPoly toPrimitiveZ(const QPoly& a) {
  Integer den = 1;
  for (auto& c : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  for (auto& c : a) z.push_back(c.get_num() * (den / c.get_den()));
  return primitivePart(z);
}

void qdivmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.clear();
  const int db = int(b.size()) - 1;
  if (int(r.size()) - 1 < db) return;
  q.assign(r.size() - b.size() + 1, 0);
  for (int k = int(r.size()) - 1 - db; k >= 0; --k) {
    Rational c = r[size_t(k + db)] / b.back();
    q[size_t(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[size_t(k + j)] -= c * b[size_t(j)];
  }
  trim(r);
  trim(q);
}

QPoly qdiv(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  qdivmod(a, b, q, r);
  return q;
}

QPoly qmonic(QPoly a) {
  trim(a);
  if (a.empty()) return a;
  Rational lc = a.back();
  for (auto& c : a) c /= lc;
  return a;
}

QPoly qgcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly q, r;
    qdivmod(a, b, q, r);
    a = std::move(b);
    b = qmonic(std::move(r));
  }
  return qmonic(a);
}

QPoly qderiv(const QPoly& a) {
  QPoly d;
  for (size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * long(i));
  trim(d);
  return d;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Yun's squarefree decomposition over Q.
std::vector<std::pair<ZPoly, int>> squarefreeDecomposition(const ZPoly& f) {
  std::vector<std::pair<ZPoly, int>> out;
  QPoly fq = toQ(f);
  QPoly df = qderiv(fq);
  QPoly a0 = qgcd(fq, df);
  QPoly b = qdiv(fq, a0);
  QPoly c = qdiv(df, a0);
  QPoly d = qsub(c, qderiv(b));
  for (int i = 1; b.size() > 1; ++i) {
    QPoly a = qgcd(b, d);
    if (a.size() > 1) out.emplace_back(toPrimitiveZ(a), i);
    b = qdiv(b, a);
    c = qdiv(d, a);
    d = qsub(c, qderiv(b));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials over F_p, p < 2^31

using FpPoly = std::vector<uint64_t>;

struct Field {
  uint64_t p;

  uint64_t mul(uint64_t a, uint64_t b) const { return uint64_t((unsigned __int128)a * b % p); }
  uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
  uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b) % p; }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const { return pow(a, p - 2); }

  void trim(FpPoly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  FpPoly fromZ(const ZPoly& a) const {
    FpPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
    trim(r);
    return r;
  }

  FpPoly monic(FpPoly a) const {
    trim(a);
    if (a.empty()) return a;
    uint64_t li = inv(a.back());
    for (auto& c : a) c = mul(c, li);
    return a;
  }

  FpPoly mulPoly(const FpPoly& a, const FpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
    }
    trim(r);
    return r;
  }

  FpPoly subPoly(FpPoly a, const FpPoly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = sub(a[i], b[i]);
    trim(a);
    return a;
  }

  void divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) const {
    r = a;
    trim(r);
    q.clear();
    if (b.empty()) throw std::domain_error("division by zero polynomial mod p");
    const int db = int(b.size()) - 1;
    if (int(r.size()) - 1 < db) return;
    uint64_t li = inv(b.back());
    q.assign(r.size() - b.size() + 1, 0);
    for (int k = int(r.size()) - 1 - db; k >= 0; --k) {
      uint64_t c = mul(r[size_t(k + db)], li);
      q[size_t(k)] = c;
      if (c == 0) continue;
      for (int j = 0; j <= db; ++j) r[size_t(k + j)] = sub(r[size_t(k + j)], mul(c, b[size_t(j)]));
    }
    trim(r);
    trim(q);
  }

  FpPoly mod(const FpPoly& a, const FpPoly& b) const {
    FpPoly q, r;
    divmod(a, b, q, r);
    return r;
  }

  FpPoly div(const FpPoly& a, const FpPoly& b) const {
    FpPoly q, r;
    divmod(a, b, q, r);
    return q;
  }

  FpPoly gcd(FpPoly a, FpPoly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      FpPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  FpPoly deriv(const FpPoly& a) const {
    FpPoly d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(mul(a[i], i % p));
    trim(d);
    return d;
  }

  FpPoly powMod(FpPoly base, const Integer& e, const FpPoly& m) const {
    FpPoly result{1};
    base = mod(base, m);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
      result = mod(mulPoly(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(mulPoly(result, base), m);
    }
    return result;
  }

  // Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
  // monic squarefree polynomial, p odd.
  std::vector<FpPoly> factorSquarefree(FpPoly f, std::mt19937_64& rng) const {
    std::vector<FpPoly> out;
    std::vector<std::pair<FpPoly, int>> ddf;
    FpPoly x{0, 1};
    FpPoly h = x;
    for (int i = 1; 2 * i <= int(f.size()) - 1; ++i) {
      h = powMod(h, Integer(p), f);
      FpPoly g = gcd(subPoly(h, x), f);
      if (g.size() > 1) {
        ddf.emplace_back(g, i);
        f = div(f, g);
        h = mod(h, f);
      }
    }
    if (f.size() > 1) ddf.emplace_back(f, int(f.size()) - 1);
    for (auto& [g, d] : ddf) equalDegree(g, d, rng, out);
    return out;
  }

  void equalDegree(const FpPoly& g, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) const {
    const int n = int(g.size()) - 1;
    if (n == d) {
      out.push_back(g);
      return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, unsigned(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<uint64_t> coeff(0, p - 1);
    for (;;) {
      FpPoly a(static_cast<size_t>(n), 0);
      for (auto& c : a) c = coeff(rng);
      trim(a);
      if (a.size() < 2) continue;
      FpPoly b = powMod(a, e, g);
      b = subPoly(b, FpPoly{1});
      FpPoly c = gcd(b, g);
      if (c.size() > 1 && c.size() < g.size()) {
        equalDegree(c, d, rng, out);
        equalDegree(div(g, c), d, rng, out);
        return;
      }
    }
  }

  // s*g + t*h = 1 with deg s < deg h and deg t < deg g.
  void bezout(const FpPoly& g, const FpPoly& h, FpPoly& s, FpPoly& t) const {
    FpPoly r0 = g, r1 = h, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      FpPoly q, r;
      divmod(r0, r1, q, r);
      r0 = std::move(r1);
      r1 = std::move(r);
      FpPoly s2 = subPoly(s0, mulPoly(q, s1));
      FpPoly t2 = subPoly(t0, mulPoly(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.size() != 1) throw std::logic_error("Hensel factors are not coprime mod p");
    uint64_t ci = inv(r0[0]);
    s = s0;
    t = t0;
    for (auto& c : s) c = mul(c, ci);
    for (auto& c : t) c = mul(c, ci);
  }
};

// ---------------------------------------------------------------------------
// Arithmetic modulo an integer m (coefficients kept in [0, m))

ZPoly reduceMod(ZPoly a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(a);
  return a;
}

ZPoly addZ(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

ZPoly subZ(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

ZPoly mulMod(const ZPoly& a, const ZPoly& b, const Integer& m) { return reduceMod(multiply(a, b), m); }

// Division by a monic polynomial modulo m.
void divmodMonic(const ZPoly& a, const ZPoly& h, const Integer& m, ZPoly& q, ZPoly& r) {
  r = reduceMod(a, m);
  q.clear();
  const int dh = degree(h);
  if (degree(r) < dh) return;
  q.assign(size_t(degree(r) - dh + 1), 0);
  for (int k = degree(r) - dh; k >= 0; --k) {
    Integer c = r[size_t(k + dh)];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    q[size_t(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dh; ++j) r[size_t(k + j)] -= c * h[size_t(j)];
  }
  r = reduceMod(r, m);
  q = reduceMod(q, m);
}

ZPoly fromFp(const FpPoly& a) {
  ZPoly z;
  for (auto c : a) z.emplace_back(Integer(std::to_string(c)));
  trim(z);
  return z;
}

// One quadratic Hensel step: f = g*h (mod m) lifted to mod m^2, with the
// Bezout pair s, t lifted alongside. h stays monic.
void henselStep(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m) {
  Integer m2 = m * m;
  ZPoly e = reduceMod(subZ(f, multiply(g, h)), m2);
  ZPoly q, r;
  divmodMonic(mulMod(s, e, m2), h, m2, q, r);
  ZPoly gNew = reduceMod(addZ(addZ(g, multiply(t, e)), multiply(q, g)), m2);
  ZPoly hNew = reduceMod(addZ(h, r), m2);
  ZPoly b = reduceMod(subZ(addZ(multiply(s, gNew), multiply(t, hNew)), ZPoly{1}), m2);
  ZPoly c, d;
  divmodMonic(mulMod(s, b, m2), hNew, m2, c, d);
  s = reduceMod(subZ(s, d), m2);
  t = reduceMod(subZ(subZ(t, multiply(t, b)), multiply(c, gNew)), m2);
  g = std::move(gNew);
  h = std::move(hNew);
}

// Lifts a factorization f = lc * prod(factors) (mod p) to modulus M = p^(2^k),
// producing monic lifted factors.
void liftTree(const ZPoly& f, const std::vector<FpPoly>& factors, const Field& F, const Integer& M,
              std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    Integer lc = f.back(), inv;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
    ZPoly u = f;
    for (auto& c : u) c *= inv;
    out.push_back(reduceMod(u, M));
    return;
  }
  const size_t half = factors.size() / 2;
  std::vector<FpPoly> left(factors.begin(), factors.begin() + long(half));
  std::vector<FpPoly> right(factors.begin() + long(half), factors.end());
  FpPoly g0{mpz_fdiv_ui(f.back().get_mpz_t(), F.p)};
  for (auto& u : left) g0 = F.mulPoly(g0, u);
  FpPoly h0{1};
  for (auto& u : right) h0 = F.mulPoly(h0, u);
  FpPoly s0, t0;
  F.bezout(g0, h0, s0, t0);
  ZPoly g = fromFp(g0), h = fromFp(h0), s = fromFp(s0), t = fromFp(t0);
  for (Integer m = F.p; m < M; m *= m) henselStep(reduceMod(f, m * m), g, h, s, t, m);
  liftTree(g, left, F, M, out);
  liftTree(h, right, F, M, out);
}

ZPoly symmetric(ZPoly a, const Integer& M) {
  Integer half = M / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
    if (c > half) c -= M;
  }
  trim(a);
  return a;
}

const std::vector<uint64_t>& smallPrimes() {
  static const std::vector<uint64_t> primes = [] {
    std::vector<uint64_t> out;
    std::vector<bool> composite(20000, false);
    for (uint64_t i = 2; i < composite.size(); ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (uint64_t j = i * i; j < composite.size(); j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Zassenhaus on a squarefree primitive polynomial of degree >= 2.
std::vector<ZPoly> factorSquarefreeZ(const ZPoly& f) {
  std::mt19937_64 rng(0x5eedULL);
  Field best{0};
  std::vector<FpPoly> bestFactors;
  int goodPrimes = 0;
  for (uint64_t p : smallPrimes()) {
    if (p < 11) continue;
    if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0) continue;
    Field F{p};
    FpPoly fp = F.monic(F.fromZ(f));
    if (F.gcd(fp, F.deriv(fp)).size() != 1) continue;
    auto facs = F.factorSquarefree(fp, rng);
    if (bestFactors.empty() || facs.size() < bestFactors.size()) {
      best = F;
      bestFactors = std::move(facs);
    }
    if (bestFactors.size() == 1 || ++goodPrimes == 5) break;
  }
  if (bestFactors.empty()) throw std::logic_error("no good prime found for factorization");
  if (bestFactors.size() == 1) return {f};

  // Landau-Mignotte style bound on coefficients of any factor times lc.
  const int n = degree(f);
  Integer norm = 0;
  for (auto& c : f) norm += abs(c);
  Integer bound = norm * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), unsigned(n + 1));
  Integer M = best.p;
  while (M <= bound) M *= M;

  std::vector<ZPoly> lifted;
  liftTree(f, bestFactors, best, M, lifted);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZPoly g{rest.back()};
      for (auto i : idx) g = mulMod(g, lifted[i], M);
      g = primitivePart(symmetric(g, M));
      ZPoly q;
      if (degree(g) > 0 && divideExact(rest, g, q)) {
        result.push_back(g);
        rest = q;
        for (size_t k = s; k-- > 0;) lifted.erase(lifted.begin() + long(idx[k]));
        found = true;
        break;
      }
      // Next combination in lexicographic order.
      size_t k = s;
      while (k > 0 && idx[k - 1] == lifted.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (degree(rest) > 0) result.push_back(primitivePart(rest));
  return result;
}

}  // namespace

ZPoly multiply(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

std::vector<std::pair<ZPoly, int>> factor(const ZPoly& f) {
  ZPoly g = primitivePart(f);
  if (degree(g) < 1) return {};
  std::vector<std::pair<ZPoly, int>> out;
  for (auto& [a, mult] : squarefreeDecomposition(g)) {
    if (degree(a) == 1) {
      out.emplace_back(a, mult);
      continue;
    }
    for (auto& u : factorSquarefreeZ(a)) out.emplace_back(u, mult);
  }
  return out;
}

}  // namespace univariate

// ---------------------------------------------------------------------------
// Multivariate factorization by Kronecker substitution

size_t factorDegreeLimit() {
  if (const char* env = std::getenv("DIVISOR_FORGE_MAXDEG")) {
    try {
      long v = std::stol(env);
      if (v > 0) return size_t(v);
    } catch (const std::exception&) {
    }
  }
  return 512;
}

FactorizationResult factorPolynomial(const Polynomial& f) {
  if (f.isZero()) throw std::domain_error("cannot factor the zero polynomial");
  const size_t n = f.nvars();
  const MonomialOrder order = f.order();
  FactorizationResult result;
  if (f.isConstant()) {
    result.unit = f.leadingCoefficient();
    return result;
  }

  Polynomial F = f.primitive();
  std::vector<std::pair<Polynomial, int>> factors;

  // Monomial content.
  Monomial common = F.leadingMonomial();
  for (auto& t : F.terms()) common = common.gcd(t.mono);
  for (size_t i = 0; i < n; ++i)
    if (common[i] > 0) factors.emplace_back(Polynomial::variable(n, order, i), common[i]);
  if (!common.isOne()) {
    Polynomial q;
    F.divideExact(Polynomial::monomial(order, common, 1), q);
    F = q;
  }

  if (!F.isConstant()) {
    std::vector<size_t> vars;
    std::vector<Integer> weight(n, 0);
    std::vector<int32_t> base(n, 1);
    Integer w = 1, top = 0;
    for (size_t i = 0; i < n; ++i) {
      int32_t d = F.degreeIn(i);
      if (d == 0) continue;
      vars.push_back(i);
      weight[i] = w;
      base[i] = d + 1;
      top += w * d;
      w *= d + 1;
    }
    if (top > Integer(std::to_string(factorDegreeLimit())))
      throw FactorizationLimit("Kronecker substitution degree " + top.get_str() + " exceeds the limit " +
                               std::to_string(factorDegreeLimit()));
    const size_t D = top.get_ui();

    univariate::ZPoly image(D + 1, 0);
    for (auto& t : F.terms()) {
      Integer e = 0;
      for (auto i : vars) e += weight[i] * t.mono[i];
      image[e.get_ui()] = t.coeff.get_num();
    }

    std::vector<univariate::ZPoly> pool;
    for (auto& [u, mult] : univariate::factor(image))
      for (int k = 0; k < mult; ++k) pool.push_back(u);

    auto unpack = [&](const univariate::ZPoly& u) {
      std::vector<Term> terms;
      for (size_t e = 0; e < u.size(); ++e) {
        if (u[e] == 0) continue;
        Monomial::Exponents ex(n, 0);
        size_t rest = e;
        for (auto i : vars) {
          ex[i] = int32_t(rest % size_t(base[i]));
          rest /= size_t(base[i]);
        }
        if (rest != 0) return Polynomial(n, order);
        terms.push_back({Monomial(std::move(ex)), Rational(u[e])});
      }
      return Polynomial::fromTerms(n, order, std::move(terms));
    };

    size_t s = 1;
    while (!pool.empty() && s <= pool.size()) {
      bool found = false;
      std::vector<size_t> idx(s);
      for (size_t i = 0; i < s; ++i) idx[i] = i;
      for (;;) {
        univariate::ZPoly prod{1};
        for (auto i : idx) prod = univariate::multiply(prod, pool[i]);
        Polynomial G = unpack(prod);
        Polynomial q;
        if (!G.isZero() && !G.isConstant() && F.divideExact(G, q)) {
          G = G.primitive();
          int mult = 0;
          while (F.divideExact(G, q)) {
            F = q;
            ++mult;
          }
          std::vector<univariate::ZPoly> used;
          for (auto i : idx) used.push_back(pool[i]);
          for (size_t k = s; k-- > 0;) pool.erase(pool.begin() + long(idx[k]));
          for (int extra = 1; extra < mult; ++extra)
            for (auto& u : used) {
              auto it = std::find(pool.begin(), pool.end(), u);
              if (it == pool.end()) throw std::logic_error("inconsistent Kronecker recombination");
              pool.erase(it);
            }
          factors.emplace_back(G, mult);
          found = true;
          break;
        }
        size_t k = s;
        while (k > 0 && idx[k - 1] == pool.size() - s + k - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
      }
      if (!found) ++s;
    }
    if (!pool.empty() || !F.isConstant()) throw std::logic_error("Kronecker recombination left a remainder");
  }

  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return a.first.compare(b.first) < 0; });
  Rational lead = f.leadingCoefficient();
  Polynomial product = Polynomial::constant(n, order, 1);
  for (auto& [g, e] : factors) product = product * g.pow(unsigned(e));
  result.unit = lead / product.leadingCoefficient();
  result.factors = std::move(factors);
  return result;
}

}  // namespace dforge
