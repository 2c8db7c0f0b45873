// Truncated power-series arithmetic in Lambda = Z_p[[T]] mod (p^N, T^D),
// Weierstrass preparation, and characteristic elements normalized modulo units.
//
// Precision semantics: a LambdaSeries is exact data (D coefficients mod p^N).
// Weierstrass preparation of a series with p-content mu certifies its output
// only mod p^(N-mu); the precision at which a result is certified is carried on
// the result itself and never silently upgraded.
#ifndef AKASHI_LAMBDA_SERIES_HPP
#define AKASHI_LAMBDA_SERIES_HPP

#include <vector>

#include "akashi/padic.hpp"

namespace akashi {

class LambdaSeries {
 public:
  // Placeholder value (zero at p=2, N=1, D=1), so the type is usable in
  // aggregates; real construction always states (p, N, D).
  LambdaSeries() : LambdaSeries(2, 1, 1) {}
  // Zero series of T-degree D.
  LambdaSeries(long long p, int N, int D);
  LambdaSeries(long long p, int N, int D, std::vector<BigInt> coeffs);

  long long prime() const { return p_; }
  int p_precision() const { return N_; }
  int t_degree() const { return D_; }
  PadicContext context() const { return {p_, N_}; }

  const BigInt& coeff(int i) const { return coeffs_[i]; }
  PadicInt coeff_padic(int i) const { return {p_, N_, coeffs_[i]}; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool operator==(const LambdaSeries& o) const;
  bool operator!=(const LambdaSeries& o) const { return !(*this == o); }

  LambdaSeries operator+(const LambdaSeries& o) const;
  LambdaSeries operator-(const LambdaSeries& o) const;
  LambdaSeries operator*(const LambdaSeries& o) const;

  LambdaSeries scaled(const BigInt& c) const;
  // Multiplication by T^k (drops overflow past T^D).
  LambdaSeries shifted(int k) const;
  // Same coefficients, new T-degree (extends by zero / truncates).
  LambdaSeries with_degree(int D) const;
  // Same coefficients reduced mod p^M, M <= N.
  LambdaSeries with_precision(int M) const;

  // Inverse of a unit series (constant term a unit). Throws NotAUnit.
  LambdaSeries inverse() const;

  // f(g) for g with zero constant term; truncated to (p^N, T^D).
  LambdaSeries compose(const LambdaSeries& g) const;

  static LambdaSeries monomial(long long p, int N, int D, int k, const BigInt& c = BigInt(1));
  static LambdaSeries constant(long long p, int N, int D, const BigInt& c);

 private:
  long long p_;
  int N_;
  int D_;
  std::vector<BigInt> coeffs_;  // size D, each in [0, p^N)
};

// p^mu * distinguished * unit reproduces the input mod (p^N, T^D); the
// distinguished and unit factors are certified mod p^(N - mu) only, recorded
// as output_precision.
struct WeierstrassDecomposition {
  int mu = 0;
  int lambda = 0;
  std::vector<BigInt> distinguished;  // monic, degree lambda, coeffs mod p^output_precision
  LambdaSeries unit;
  int output_precision = 0;  // N - mu
};

WeierstrassDecomposition weierstrass_prepare(const LambdaSeries& f);

// A characteristic element: the unit-free representative p^mu * distinguished.
// cert_precision is the p-precision at which the distinguished coefficients
// are certified; (p, N, D) record the provenance of the computation.
class CharElement {
 public:
  // Placeholder (the identity at p=2, N=1, D=1).
  CharElement() : CharElement(2, 1, 1, 0, {BigInt(1)}, 1) {}
  CharElement(long long p, int provenance_N, int provenance_D, int mu,
              std::vector<BigInt> distinguished, int cert_precision);

  static CharElement one(long long p, int N, int D);

  long long prime() const { return p_; }
  int provenance_precision() const { return N_; }
  int provenance_degree() const { return D_; }
  int cert_precision() const { return cert_; }
  int mu() const { return mu_; }
  int lambda() const { return static_cast<int>(dist_.size()) - 1; }
  const std::vector<BigInt>& distinguished() const { return dist_; }
  bool is_one() const { return mu_ == 0 && lambda() == 0; }

  // Product: mu adds, distinguished polynomials multiply exactly; certified
  // at the coarser precision.
  CharElement operator*(const CharElement& o) const;

  // Equality mod Lambda^x at the coarser of the two operands' precisions.
  bool operator==(const CharElement& o) const;
  bool operator!=(const CharElement& o) const { return !(*this == o); }

 private:
  long long p_;
  int N_, D_;
  int mu_;
  int cert_;
  std::vector<BigInt> dist_;  // monic; dist_[i] mod p^cert_
};

CharElement normalize_mod_units(const LambdaSeries& f);

// f((1+T)^(p^c) - 1) truncated to (p^N, T^D). Realizes the inclusion
// Lambda(Gamma') into Lambda(Gamma) for the index-p^c subgroup.
LambdaSeries substitute_tower(const LambdaSeries& f, long c);

// Multiplicity of T in the distinguished polynomial.
int ord_at_zero(const CharElement& f);

// Writing distinguished = T^r * g with g(0) != 0 at precision, returns
// v_p(p^mu * g(0)): the leading-term valuation, well defined mod Z_p^x.
int leading_term_at_zero(const CharElement& f);

// --- polynomial helpers on monic polynomials over Z/p^M (coefficient vectors,
// lowest degree first, leading coefficient a unit) ---

// Exact division by a monic divisor: f = q * div + r with deg r < deg div.
void monic_divmod(const std::vector<BigInt>& f, const std::vector<BigInt>& divisor,
                  const BigInt& modulus, std::vector<BigInt>* quotient, std::vector<BigInt>* remainder);

// Formal numerator/denominator pair of CharElements, resolved by exact
// cancellation; a nonzero remainder at precision is NonIntegralAkashi.
struct CharQuotient {
  std::vector<CharElement> numerator;
  std::vector<CharElement> denominator;
};

CharElement resolve_quotient(const CharQuotient& q);

// gcd of prepared series in the UFD sense: p^(min mu) times the polynomial gcd
// of the distinguished parts. Generators indistinguishable from zero impose no
// condition and are skipped; if all vanish, IndistinguishableFromZero is thrown
// (callers computing characteristic ideals map it to NotTorsionAtPrecision).
// PrecisionInsufficient when precision is exhausted before the gcd resolves.
CharElement series_gcd(const std::vector<LambdaSeries>& elems);

}  // namespace akashi

#endif
