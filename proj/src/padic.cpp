#include "akashi/padic.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace akashi {

BigInt pow_bigint(const BigInt& base, long exp) {
  BigInt r = 1, b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

BigInt reduce_mod(const BigInt& v, const BigInt& modulus) {
  BigInt r = v % modulus;
  if (r < 0) r += modulus;
  return r;
}

std::optional<long> integer_valuation(const BigInt& v, long long p) {
  if (v == 0) return std::nullopt;
  BigInt x = v < 0 ? BigInt(-v) : v;
  long val = 0;
  while (x % p == 0) {
    x /= p;
    ++val;
  }
  return val;
}

PadicInt::PadicInt(long long p, int N, BigInt value) : p_(p), N_(N) {
  if (p < 2) throw DomainError("prime must be >= 2");
  if (N < 1) throw DomainError("precision must be >= 1");
  value_ = reduce_mod(value, pow_bigint(BigInt(p), N));
}

static void check_compatible(const PadicInt& a, const PadicInt& b) {
  if (a.prime() != b.prime() || a.precision() != b.precision()) throw PrecisionMismatch();
}

bool PadicInt::operator==(const PadicInt& o) const {
  check_compatible(*this, o);
  return value_ == o.value_;
}

PadicInt PadicInt::operator+(const PadicInt& o) const {
  check_compatible(*this, o);
  return {p_, N_, value_ + o.value_};
}

PadicInt PadicInt::operator-(const PadicInt& o) const {
  check_compatible(*this, o);
  return {p_, N_, value_ - o.value_};
}

PadicInt PadicInt::operator*(const PadicInt& o) const {
  check_compatible(*this, o);
  return {p_, N_, value_ * o.value_};
}

PadicInt PadicInt::operator-() const { return {p_, N_, -value_}; }

std::optional<int> valuation(const PadicInt& x) {
  if (x.value() == 0) return std::nullopt;
  BigInt v = x.value();
  int val = 0;
  while (v % x.prime() == 0) {
    v /= x.prime();
    ++val;
  }
  return val;
}

bool is_unit(const PadicInt& x) { return x.value() % x.prime() != 0; }

PadicInt unit_inverse(const PadicInt& x) {
  if (!is_unit(x)) throw NotAUnit();
  // The unit group of Z/p^N has order p^(N-1)(p-1).
  BigInt order = pow_bigint(BigInt(x.prime()), x.precision() - 1) * (x.prime() - 1);
  BigInt inv = boost::multiprecision::powm(x.value(), order - 1, x.context().modulus());
  return {x.prime(), x.precision(), inv};
}

PadicInt power_tower(const PadicInt& u, long c) {
  if (!is_unit(u)) throw NotAUnit();
  if (c < 0) throw DomainError("power_tower exponent must be >= 0");
  BigInt exp = pow_bigint(BigInt(u.prime()), c);
  BigInt r = boost::multiprecision::powm(u.value(), exp, u.context().modulus());
  return {u.prime(), u.precision(), r};
}

}  // namespace akashi
