#include "akashi/lambda_series.hpp"

#include <algorithm>
#include <sstream>

#include "akashi/linalg.hpp"

namespace akashi {

LambdaSeries::LambdaSeries(long long p, int N, int D) : p_(p), N_(N), D_(D) {
  if (p < 2) throw DomainError("prime must be >= 2");
  if (N < 1) throw DomainError("p-precision must be >= 1");
  if (D < 1) throw DomainError("T-degree must be >= 1");
  coeffs_.assign(D, BigInt(0));
}

LambdaSeries::LambdaSeries(long long p, int N, int D, std::vector<BigInt> coeffs) : LambdaSeries(p, N, D) {
  if (static_cast<int>(coeffs.size()) > D) throw DomainError("more coefficients than T-degree");
  BigInt m = context().modulus();
  for (size_t i = 0; i < coeffs.size(); ++i) coeffs_[i] = reduce_mod(coeffs[i], m);
}

bool LambdaSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

static void check_compatible(const LambdaSeries& a, const LambdaSeries& b) {
  if (a.prime() != b.prime() || a.p_precision() != b.p_precision() || a.t_degree() != b.t_degree())
    throw PrecisionMismatch();
}

bool LambdaSeries::operator==(const LambdaSeries& o) const {
  check_compatible(*this, o);
  return coeffs_ == o.coeffs_;
}

LambdaSeries LambdaSeries::operator+(const LambdaSeries& o) const {
  check_compatible(*this, o);
  LambdaSeries r(p_, N_, D_);
  BigInt m = context().modulus();
  for (int i = 0; i < D_; ++i) r.coeffs_[i] = reduce_mod(coeffs_[i] + o.coeffs_[i], m);
  return r;
}

LambdaSeries LambdaSeries::operator-(const LambdaSeries& o) const {
  check_compatible(*this, o);
  LambdaSeries r(p_, N_, D_);
  BigInt m = context().modulus();
  for (int i = 0; i < D_; ++i) r.coeffs_[i] = reduce_mod(coeffs_[i] - o.coeffs_[i], m);
  return r;
}

LambdaSeries LambdaSeries::operator*(const LambdaSeries& o) const {
  check_compatible(*this, o);
  LambdaSeries r(p_, N_, D_);
  BigInt m = context().modulus();
  for (int i = 0; i < D_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j < D_; ++j) {
      if (o.coeffs_[j] == 0) continue;
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  for (int i = 0; i < D_; ++i) r.coeffs_[i] = reduce_mod(r.coeffs_[i], m);
  return r;
}

LambdaSeries LambdaSeries::scaled(const BigInt& c) const {
  LambdaSeries r(p_, N_, D_);
  BigInt m = context().modulus();
  for (int i = 0; i < D_; ++i) r.coeffs_[i] = reduce_mod(coeffs_[i] * c, m);
  return r;
}

LambdaSeries LambdaSeries::shifted(int k) const {
  LambdaSeries r(p_, N_, D_);
  for (int i = 0; i + k < D_; ++i) r.coeffs_[i + k] = coeffs_[i];
  return r;
}

LambdaSeries LambdaSeries::with_degree(int D) const {
  LambdaSeries r(p_, N_, D);
  for (int i = 0; i < std::min(D, D_); ++i) r.coeffs_[i] = coeffs_[i];
  return r;
}

LambdaSeries LambdaSeries::with_precision(int M) const {
  if (M > N_) throw DomainError("cannot raise p-precision");
  return LambdaSeries(p_, M, D_, coeffs_);
}

LambdaSeries LambdaSeries::inverse() const {
  PadicInt c0 = coeff_padic(0);
  if (!is_unit(c0)) throw NotAUnit("series with non-unit constant term has no inverse");
  BigInt m = context().modulus();
  BigInt inv0 = unit_inverse(c0).value();
  LambdaSeries r(p_, N_, D_);
  r.coeffs_[0] = inv0;
  for (int n = 1; n < D_; ++n) {
    BigInt acc = 0;
    for (int i = 1; i <= n; ++i) acc += coeffs_[i] * r.coeffs_[n - i];
    r.coeffs_[n] = reduce_mod(-inv0 * acc, m);
  }
  return r;
}

LambdaSeries LambdaSeries::compose(const LambdaSeries& g) const {
  check_compatible(*this, g);
  LambdaSeries r = constant(p_, N_, D_, coeffs_[D_ - 1]);
  for (int i = D_ - 2; i >= 0; --i) r = r * g + constant(p_, N_, D_, coeffs_[i]);
  return r;
}

LambdaSeries LambdaSeries::monomial(long long p, int N, int D, int k, const BigInt& c) {
  LambdaSeries r(p, N, D);
  if (k < 0 || k >= D) throw DomainError("monomial degree out of range");
  r.coeffs_[k] = reduce_mod(c, r.context().modulus());
  return r;
}

LambdaSeries LambdaSeries::constant(long long p, int N, int D, const BigInt& c) {
  return monomial(p, N, D, 0, c);
}

// ---------------------------------------------------------------------------
// Weierstrass preparation
// ---------------------------------------------------------------------------

WeierstrassDecomposition weierstrass_prepare(const LambdaSeries& f) {
  const long long p = f.prime();
  const int N = f.p_precision();
  const int D = f.t_degree();

  int mu = N;
  for (int i = 0; i < D; ++i) {
    auto v = valuation(f.coeff_padic(i));
    if (v && *v < mu) mu = *v;
  }
  if (mu >= N) throw IndistinguishableFromZero();

  const int M = N - mu;  // certified output precision
  const BigInt pm = pow_bigint(BigInt(p), M);
  const BigInt pmu = pow_bigint(BigInt(p), mu);

  // g = f / p^mu at precision M
  std::vector<BigInt> gc(D);
  for (int i = 0; i < D; ++i) gc[i] = reduce_mod(f.coeff(i) / pmu, pm);
  LambdaSeries g(p, M, D, gc);

  int lambda = -1;
  for (int i = 0; i < D; ++i) {
    if (g.coeff(i) % p != 0) {
      lambda = i;
      break;
    }
  }
  if (lambda < 0) throw TruncationTooSmall();

  // Canonical distinguished part: the ideal (g) mod (p^M, T^D) is spanned over
  // Z/p^M by the shifts T^a * g. In the column order T^(D-1), ..., T^0 its
  // Howell form is the canonical basis of the ideal, and the unit-pivot row of
  // lowest degree is the distinguished polynomial (unit multiples of g span
  // the same ideal, so they normalize identically).
  Mat lattice(p, M, D, D);
  for (int a = 0; a < D; ++a)
    for (int c = 0; c < D; ++c) {
      int deg = D - 1 - c;
      if (deg >= a) lattice.at(a, c) = g.coeff(deg - a);
    }
  Mat h = howell_form(lattice);
  int found = -1;
  for (int i = h.rows() - 1; i >= 0 && found < 0; --i) {
    for (int c = 0; c < D; ++c) {
      if (h.at(i, c) == 0) continue;
      if (h.at(i, c) % p != 0) found = i;  // rows are ordered by pivot column
      break;
    }
  }
  if (found < 0) throw TruncationTooSmall();
  std::vector<BigInt> dist(lambda + 1, BigInt(0));
  for (int c = 0; c < D; ++c) {
    int deg = D - 1 - c;
    if (h.at(found, c) != 0 && deg > lambda)
      throw TruncationTooSmall("canonical generator exceeds the first-unit degree");
    if (deg <= lambda) dist[deg] = h.at(found, c);
  }

  // Unit cofactor: try the unit of the exact factorization of g as a
  // polynomial (back-substitution on coefficients of T^n for
  // n = D-1+lambda .. lambda); fall back to solving the convolution system
  // P * U = g mod (p^M, T^D) when the data does not admit it.
  std::vector<BigInt> uc(D, BigInt(0));
  bool have_unit = false;
  {
    std::vector<BigInt> cand(D, BigInt(0));
    for (int n = D - 1 + lambda; n >= lambda; --n) {
      BigInt acc = (n < D) ? g.coeff(n) : BigInt(0);
      for (int j = n - lambda + 1; j <= std::min(n, D - 1); ++j) acc -= cand[j] * dist[n - j];
      cand[n - lambda] = reduce_mod(acc, pm);
    }
    bool ok = cand[0] % p != 0;
    for (int n = 0; ok && n < lambda; ++n) {
      BigInt acc = 0;
      for (int i = 0; i <= n; ++i) acc += dist[i] * cand[n - i];
      ok = reduce_mod(acc, pm) == g.coeff(n);
    }
    if (ok) {
      uc = std::move(cand);
      have_unit = true;
    }
  }
  if (!have_unit) {
    Mat conv(p, M, D, D);
    for (int n = 0; n < D; ++n)
      for (int j = 0; j <= n; ++j)
        if (n - j <= lambda) conv.at(n, j) = dist[n - j];
    auto u = solve(conv, g.coeffs());
    if (!u || (*u)[0] % p == 0)
      throw TruncationTooSmall("no unit cofactor for the canonical distinguished part");
    uc = std::move(*u);
  }

  return WeierstrassDecomposition{mu, lambda, std::move(dist), LambdaSeries(p, M, D, std::move(uc)), M};
}

// ---------------------------------------------------------------------------
// CharElement
// ---------------------------------------------------------------------------

CharElement::CharElement(long long p, int provenance_N, int provenance_D, int mu,
                         std::vector<BigInt> distinguished, int cert_precision)
    : p_(p), N_(provenance_N), D_(provenance_D), mu_(mu), cert_(cert_precision), dist_(std::move(distinguished)) {
  if (mu_ < 0) throw DomainError("mu must be >= 0");
  if (cert_ < 1) throw DomainError("certified precision must be >= 1");
  if (dist_.empty() || dist_.back() != 1) throw DomainError("distinguished polynomial must be monic");
  BigInt m = pow_bigint(BigInt(p_), cert_);
  for (size_t i = 0; i + 1 < dist_.size(); ++i) {
    dist_[i] = reduce_mod(dist_[i], m);
    if (dist_[i] % p_ != 0) throw DomainError("non-leading coefficient of a distinguished polynomial must be divisible by p");
  }
}

CharElement CharElement::one(long long p, int N, int D) { return {p, N, D, 0, {BigInt(1)}, N}; }

CharElement CharElement::operator*(const CharElement& o) const {
  if (p_ != o.p_) throw PrecisionMismatch();
  int cert = std::min(cert_, o.cert_);
  BigInt m = pow_bigint(BigInt(p_), cert);
  std::vector<BigInt> prod(dist_.size() + o.dist_.size() - 1, BigInt(0));
  for (size_t i = 0; i < dist_.size(); ++i)
    for (size_t j = 0; j < o.dist_.size(); ++j) prod[i + j] += dist_[i] * o.dist_[j];
  for (auto& c : prod) c = reduce_mod(c, m);
  return {p_, std::min(N_, o.N_), std::min(D_, o.D_), mu_ + o.mu_, std::move(prod), cert};
}

bool CharElement::operator==(const CharElement& o) const {
  if (p_ != o.p_) throw PrecisionMismatch();
  if (mu_ != o.mu_ || dist_.size() != o.dist_.size()) return false;
  int cert = std::min(cert_, o.cert_);
  BigInt m = pow_bigint(BigInt(p_), cert);
  for (size_t i = 0; i < dist_.size(); ++i)
    if (reduce_mod(dist_[i], m) != reduce_mod(o.dist_[i], m)) return false;
  return true;
}

CharElement normalize_mod_units(const LambdaSeries& f) {
  WeierstrassDecomposition w = weierstrass_prepare(f);
  return {f.prime(), f.p_precision(), f.t_degree(), w.mu, std::move(w.distinguished), w.output_precision};
}

LambdaSeries substitute_tower(const LambdaSeries& f, long c) {
  if (c < 0) throw DomainError("tower exponent must be >= 0");
  const long long p = f.prime();
  const int N = f.p_precision();
  const int D = f.t_degree();
  // (1+T)^(p^c) by square-and-multiply on truncated series.
  BigInt e = pow_bigint(BigInt(p), c);
  LambdaSeries acc = LambdaSeries::constant(p, N, D, 1);
  LambdaSeries base(p, N, D, {BigInt(1), BigInt(1)});
  while (e > 0) {
    if ((e & 1) != 0) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  LambdaSeries s = acc - LambdaSeries::constant(p, N, D, 1);
  return f.compose(s);
}

int ord_at_zero(const CharElement& f) {
  const auto& d = f.distinguished();
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) return static_cast<int>(i);
  throw LeadingTermBelowPrecision("distinguished polynomial vanishes at precision");
}

int leading_term_at_zero(const CharElement& f) {
  int r = ord_at_zero(f);
  BigInt g0 = f.distinguished()[r];
  auto v = integer_valuation(g0, f.prime());
  if (!v || *v >= f.cert_precision())
    throw LeadingTermBelowPrecision();
  return f.mu() + static_cast<int>(*v);
}

// ---------------------------------------------------------------------------
// Polynomial helpers and gcd
// ---------------------------------------------------------------------------

void monic_divmod(const std::vector<BigInt>& f, const std::vector<BigInt>& divisor,
                  const BigInt& modulus, std::vector<BigInt>* quotient, std::vector<BigInt>* remainder) {
  if (divisor.empty() || divisor.back() != 1) throw DomainError("divisor must be monic");
  const int dd = static_cast<int>(divisor.size()) - 1;
  std::vector<BigInt> r = f;
  for (auto& c : r) c = reduce_mod(c, modulus);
  std::vector<BigInt> q(std::max<int>(static_cast<int>(f.size()) - dd, 0), BigInt(0));
  for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
    BigInt c = r[i];
    if (c == 0) continue;
    q[i - dd] = c;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] = reduce_mod(r[i - dd + j] - c * divisor[j], modulus);
  }
  while (r.size() > 1 && r.back() == 0) r.pop_back();
  if (quotient) *quotient = std::move(q);
  if (remainder) *remainder = std::move(r);
}

static bool all_zero(const std::vector<BigInt>& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& c) { return c == 0; });
}

// gcd of two monic distinguished polynomials at working precision W,
// Euclid-style: the remainder is re-normalized by Weierstrass preparation at
// every step, which costs precision whenever the remainder has p-content.
static std::pair<std::vector<BigInt>, int> distinguished_gcd(std::vector<BigInt> A, std::vector<BigInt> B,
                                                             long long p, int W) {
  if (A.size() < B.size()) std::swap(A, B);
  for (;;) {
    if (B.size() == 1) return {{BigInt(1)}, W};
    BigInt m = pow_bigint(BigInt(p), W);
    for (auto& c : A) c = reduce_mod(c, m);
    for (auto& c : B) c = reduce_mod(c, m);
    std::vector<BigInt> r;
    monic_divmod(A, B, m, nullptr, &r);
    if (all_zero(r)) return {B, W};
    WeierstrassDecomposition w;
    try {
      w = weierstrass_prepare(LambdaSeries(p, W, static_cast<int>(r.size()), r));
    } catch (const IndistinguishableFromZero&) {
      return {B, W};
    }
    if (W - w.mu < 1) throw PrecisionInsufficient("gcd remainder cannot be normalized at the working precision");
    W -= w.mu;
    A = std::move(B);
    B = std::move(w.distinguished);
    if (A.size() < B.size()) std::swap(A, B);
  }
}

CharElement series_gcd(const std::vector<LambdaSeries>& elems) {
  if (elems.empty()) throw DomainError("series_gcd of an empty list");
  const long long p = elems.front().prime();
  const int N = elems.front().p_precision();
  const int D = elems.front().t_degree();

  int mu = N;
  std::vector<std::vector<BigInt>> dists;
  int W = N;
  for (const auto& f : elems) {
    try {
      WeierstrassDecomposition w = weierstrass_prepare(f);
      mu = std::min(mu, w.mu);
      W = std::min(W, w.output_precision);
      dists.push_back(std::move(w.distinguished));
    } catch (const IndistinguishableFromZero&) {
      // A generator indistinguishable from zero imposes no condition.
    }
  }
  if (dists.empty()) throw IndistinguishableFromZero("all generators vanish at precision");

  std::vector<BigInt> g = dists.front();
  for (size_t i = 1; i < dists.size() && g.size() > 1; ++i) {
    auto [ng, nw] = distinguished_gcd(g, dists[i], p, W);
    g = std::move(ng);
    W = nw;
  }
  return {p, N, D, mu, std::move(g), W};
}

CharElement resolve_quotient(const CharQuotient& qt) {
  if (qt.numerator.empty()) throw DomainError("quotient with empty numerator");
  const long long p = qt.numerator.front().prime();
  int mu = 0, cert = INT32_MAX, N = INT32_MAX, D = INT32_MAX;
  for (const auto& f : qt.numerator) {
    mu += f.mu();
    cert = std::min(cert, f.cert_precision());
    N = std::min(N, f.provenance_precision());
    D = std::min(D, f.provenance_degree());
  }
  for (const auto& f : qt.denominator) {
    mu -= f.mu();
    cert = std::min(cert, f.cert_precision());
    N = std::min(N, f.provenance_precision());
    D = std::min(D, f.provenance_degree());
  }
  if (mu < 0) throw NonIntegralAkashi("p-power exponent of the alternating product is negative");

  BigInt m = pow_bigint(BigInt(p), cert);
  std::vector<BigInt> num{BigInt(1)};
  for (const auto& f : qt.numerator) {
    const auto& d = f.distinguished();
    std::vector<BigInt> prod(num.size() + d.size() - 1, BigInt(0));
    for (size_t i = 0; i < num.size(); ++i)
      for (size_t j = 0; j < d.size(); ++j) prod[i + j] += num[i] * d[j];
    for (auto& c : prod) c = reduce_mod(c, m);
    num = std::move(prod);
  }
  for (const auto& f : qt.denominator) {
    std::vector<BigInt> q, r;
    monic_divmod(num, f.distinguished(), m, &q, &r);
    if (!all_zero(r)) {
      std::ostringstream os;
      os << "denominator factor of degree " << f.lambda() << " does not divide the numerator at precision p^" << cert;
      throw NonIntegralAkashi(os.str());
    }
    num = std::move(q);
  }
  return {p, N, D, mu, std::move(num), cert};
}

}  // namespace akashi
