// Exact arithmetic in Z/p^N with valuation tracking. Every value carries its
// prime and precision; mixing them is an error, never a silent coercion.
#ifndef AKASHI_PADIC_HPP
#define AKASHI_PADIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "akashi/errors.hpp"

namespace akashi {

using BigInt = boost::multiprecision::cpp_int;

BigInt pow_bigint(const BigInt& base, long exp);

// Modulus p^N. Small helper so (p, N) pairs travel together.
struct PadicContext {
  long long p = 2;
  int N = 1;

  BigInt modulus() const { return pow_bigint(BigInt(p), N); }
  bool operator==(const PadicContext&) const = default;
};

class PadicInt {
 public:
  PadicInt(long long p, int N, BigInt value);
  PadicInt(const PadicContext& ctx, BigInt value) : PadicInt(ctx.p, ctx.N, std::move(value)) {}

  long long prime() const { return p_; }
  int precision() const { return N_; }
  PadicContext context() const { return {p_, N_}; }
  const BigInt& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  bool operator==(const PadicInt& o) const;
  bool operator!=(const PadicInt& o) const { return !(*this == o); }

  PadicInt operator+(const PadicInt& o) const;
  PadicInt operator-(const PadicInt& o) const;
  PadicInt operator*(const PadicInt& o) const;
  PadicInt operator-() const;

 private:
  long long p_;
  int N_;
  BigInt value_;  // reduced representative in [0, p^N)
};

// v_p(x); nullopt means "indistinguishable from zero at this precision" (>= N).
std::optional<int> valuation(const PadicInt& x);

bool is_unit(const PadicInt& x);

// Multiplicative inverse mod p^N. Throws NotAUnit when v_p(x) > 0.
PadicInt unit_inverse(const PadicInt& x);

// u^(p^c) mod p^N by modular exponentiation. Realizes chi(gamma_v) = chi(gamma)^(p^c)
// for gamma_v = gamma^(p^c). Throws NotAUnit.
PadicInt power_tower(const PadicInt& u, long c);

// Reduction of an arbitrary integer into [0, p^N).
BigInt reduce_mod(const BigInt& v, const BigInt& modulus);

// v_p of an exact integer (not capped by any precision); nullopt for 0.
std::optional<long> integer_valuation(const BigInt& v, long long p);

}  // namespace akashi

#endif
