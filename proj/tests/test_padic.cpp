#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "akashi/padic.hpp"

using namespace akashi;

TEST_CASE("valuation") {
  CHECK(valuation(PadicInt(5, 3, 50)) == 2);
  CHECK_FALSE(valuation(PadicInt(5, 3, 0)).has_value());  // ">= N"
  CHECK(valuation(PadicInt(7, 2, 6)) == 0);
  CHECK_FALSE(valuation(PadicInt(5, 3, 125)).has_value());
}

TEST_CASE("unit_inverse") {
  CHECK(unit_inverse(PadicInt(5, 2, 2)).value() == 13);
  CHECK(unit_inverse(PadicInt(5, 1, 4)).value() == 4);
  CHECK_THROWS_AS(unit_inverse(PadicInt(5, 2, 5)), NotAUnit);
}

TEST_CASE("power_tower") {
  CHECK(power_tower(PadicInt(5, 3, 6), 0).value() == 6);
  CHECK(power_tower(PadicInt(5, 3, 6), 1).value() == 26);  // 6^5 mod 125
  CHECK(power_tower(PadicInt(5, 2, 1), 3).value() == 1);
  CHECK_THROWS_AS(power_tower(PadicInt(5, 3, 10), 1), NotAUnit);
}

TEST_CASE("mixed precision is an error") {
  PadicInt a(5, 2, 3), b(5, 3, 3), c(7, 2, 3);
  CHECK_THROWS_AS((void)(a + b), PrecisionMismatch);
  CHECK_THROWS_AS((void)(a * c), PrecisionMismatch);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(20240901);
  for (auto [p, N] : {std::pair<long long, int>{2, 4}, {3, 3}, {5, 2}}) {
    BigInt mod = PadicContext{p, N}.modulus();
    std::uniform_int_distribution<long long> d(0, static_cast<long long>(mod) - 1);
    for (int it = 0; it < 200; ++it) {
      PadicInt a(p, N, d(rng)), b(p, N, d(rng)), c(p, N, d(rng));
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
    }
  }
}

TEST_CASE("valuation is additive below precision") {
  std::mt19937_64 rng(77);
  long long p = 3;
  int N = 4;
  BigInt mod = PadicContext{p, N}.modulus();
  std::uniform_int_distribution<long long> d(1, static_cast<long long>(mod) - 1);
  int checked = 0;
  for (int it = 0; it < 500; ++it) {
    PadicInt a(p, N, d(rng)), b(p, N, d(rng));
    auto va = valuation(a), vb = valuation(b);
    if (!va || !vb || *va + *vb >= N) continue;
    auto vab = valuation(a * b);
    REQUIRE(vab.has_value());
    CHECK(*vab == *va + *vb);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("unit_inverse is an involution") {
  for (long long p : {2, 3, 5}) {
    int N = 3;
    BigInt mod = PadicContext{p, N}.modulus();
    for (BigInt v = 1; v < mod; ++v) {
      PadicInt x(p, N, v);
      if (!is_unit(x)) continue;
      CHECK(unit_inverse(unit_inverse(x)) == x);
      CHECK((x * unit_inverse(x)).value() == 1);
    }
  }
}

TEST_CASE("1-units stay 1-units under power_tower") {
  for (long long p : {2, 3, 5}) {
    int N = 3;
    BigInt mod = PadicContext{p, N}.modulus();
    for (BigInt v = 1; v < mod; v += p) {
      PadicInt u(p, N, v);
      auto v1 = valuation(u - PadicInt(p, N, 1));
      for (long c : {1L, 2L}) {
        auto v2 = valuation(power_tower(u, c) - PadicInt(p, N, 1));
        if (v1.has_value() && v2.has_value()) CHECK(*v2 >= *v1);
      }
    }
  }
}
