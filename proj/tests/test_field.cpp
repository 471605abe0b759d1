#include "ybcube/field.hpp"

#include <numeric>

#include "doctest.h"
#include "field_oracle.hpp"

using namespace ybcube;

TEST_CASE("default modulus is the smallest irreducible") {
  // F_4: t^2 + t + 1 is the only monic irreducible quadratic over F_2
  CHECK(FieldSpec::with_default_modulus(2, 1).modulus == Poly{1, 1, 1});
  // F_25: t^2, t^2+1 both split over F_5; t^2+2 is the first irreducible
  CHECK(FieldSpec::with_default_modulus(5, 1).modulus == Poly{2, 0, 1});
}

TEST_CASE("F_4 Zech table by direct polynomial arithmetic") {
  // delta = t in F_2[t]/(t^2+t+1): 1 + delta = t + 1 = delta^2, 1 + delta^2 = delta
  ZechTable table = build_field(FieldSpec::with_default_modulus(2, 1));
  CHECK(table.order() == 3);
  CHECK(table.zech(0) == ZechTable::kMinusInfinity);  // 1 + 1 = 0 in char 2
  CHECK(table.zech(1) == 2);
  CHECK(table.zech(2) == 1);
}

TEST_CASE("minus infinity sits exactly at (q^2-1)/2 for odd q") {
  for (auto [p, e] : {std::pair<int64_t, int>{5, 1}, {7, 1}, {3, 2}}) {
    ZechTable table = build_field(FieldSpec::with_default_modulus(p, e));
    for (int64_t t = 0; t < table.order(); ++t) {
      bool is_half = (t == table.order() / 2);
      CHECK((table.zech(t) == ZechTable::kMinusInfinity) == is_half);
    }
  }
}

TEST_CASE("1 + delta^t != 0 whenever t != 0 mod q-1") {
  ZechTable table = build_field(FieldSpec::with_default_modulus(5, 1));
  for (int64_t t = 0; t < table.order(); ++t)
    if (t % (table.q() - 1) != 0) CHECK(table.zech(t) != ZechTable::kMinusInfinity);
}

TEST_CASE("zech values satisfy delta^z = 1 + delta^t") {
  for (int64_t d : {1, 7, 19}) {
    FieldSpec spec = FieldSpec::with_default_modulus(5, 1, d);
    ZechTable table = build_field(spec);
    oracle::Fq2 F = oracle::from_table(table);
    for (int64_t t = 0; t < table.order(); ++t) {
      auto lhs = F.add_one(F.pow(table.delta(), t, table.order()));
      int64_t z = table.zech(t);
      if (z == ZechTable::kMinusInfinity) {
        CHECK(F.is_zero(lhs));
      } else {
        CHECK(F.pow(table.delta(), z, table.order()) == lhs);
      }
    }
  }
}

TEST_CASE("zech identity holds in an extension field (q = 9)") {
  ZechTable table = build_field(FieldSpec::with_default_modulus(3, 2, 7));
  oracle::Fq2 F = oracle::from_table(table);
  REQUIRE(table.order() == 80);
  for (int64_t t = 0; t < table.order(); ++t) {
    auto lhs = F.add_one(F.pow(table.delta(), t, table.order()));
    int64_t z = table.zech(t);
    if (z == ZechTable::kMinusInfinity) CHECK(F.is_zero(lhs));
    else CHECK(F.pow(table.delta(), z, table.order()) == lhs);
  }
}

TEST_CASE("kl pairs keep colors and swap under exchanging i and j") {
  for (auto [p, e] : {std::pair<int64_t, int>{5, 1}, {7, 1}, {3, 2}}) {
    ZechTable table = build_field(FieldSpec::with_default_modulus(p, e));
    const int64_t step = table.q() - 1;
    for (int64_t i = 0; i < table.order(); ++i)
      for (int64_t j = 0; j < table.order(); ++j) {
        if ((i - j) % step == 0) continue;
        KlPair kl = kl_pair(table, i, j);
        CHECK(kl.k % step == j % step);
        CHECK(kl.l % step == i % step);
        KlPair swapped = kl_pair(table, j, i);
        CHECK(swapped.k == kl.l);
        CHECK(swapped.l == kl.k);
      }
  }
}

TEST_CASE("kl pairs satisfy the displayed power identities") {
  // delta^{l(i,j)} = delta^i (1+delta^{j-i})^{1-q} and
  // delta^{k(i,j)} = delta^j (1+delta^{i-j})^{1-q}
  ZechTable table = build_field(FieldSpec::with_default_modulus(5, 1, 19));
  oracle::Fq2 F = oracle::from_table(table);
  const int64_t n = table.order();
  const int64_t q = table.q();
  auto dpow = [&](int64_t t) { return F.pow(table.delta(), t, n); };
  for (int64_t i = 0; i < n; ++i)
    for (int64_t j = 0; j < n; ++j) {
      if ((i - j) % (q - 1) == 0) continue;
      KlPair kl = kl_pair(table, i, j);
      auto base_l = F.add_one(dpow(j - i));
      CHECK(dpow(kl.l) == F.mul(dpow(i), F.pow(base_l, ((1 - q) % n + n) % n, n)));
      auto base_k = F.add_one(dpow(i - j));
      CHECK(dpow(kl.k) == F.mul(dpow(j), F.pow(base_k, ((1 - q) % n + n) % n, n)));
    }
}

TEST_CASE("kl values matching the q = 5 production run") {
  // delta = g0^19 reproduces the gamma1 fixture (see presentation tests);
  // these pairs pin that table
  ZechTable table = build_field(FieldSpec::with_default_modulus(5, 1, 19));
  CHECK(kl_pair(table, 1, 2) == KlPair{10, 5});
  CHECK(kl_pair(table, 1, 3) == KlPair{15, 5});
  CHECK(kl_pair(table, 2, 3) == KlPair{11, 6});
  CHECK(kl_pair(table, 1, 6) == KlPair{22, 21});
  CHECK(kl_pair(table, 5, 2) == KlPair{18, 9});
}

TEST_CASE("field construction rejects bad specs") {
  CHECK_THROWS_AS(build_field(FieldSpec{4, 1, {1, 1, 1}, 1}), Error);  // p not prime
  CHECK_THROWS_AS(build_field(FieldSpec{5, 1, {1, 0, 1}, 1}), Error);  // t^2+1 splits mod 5
  CHECK_THROWS_AS(build_field(FieldSpec{5, 1, {2, 0, 1}, 2}), Error);  // gcd(2,24) != 1
  CHECK_THROWS_AS(build_field(FieldSpec{5, 1, {2, 0}, 1}), Error);     // degree != 2e

  ZechTable table = build_field(FieldSpec::with_default_modulus(5, 1));
  CHECK_THROWS_AS(kl_pair(table, 1, 5), Error);  // 1 = 5 mod 4
  CHECK_THROWS_AS(kl_pair(table, 3, 3), Error);
}

TEST_CASE("every unit delta exponent gives a generator, others are rejected") {
  FieldSpec spec = FieldSpec::with_default_modulus(5, 1);
  for (int64_t d = 1; d < 24; ++d) {
    spec.delta_exponent = d;
    if (std::gcd(d, static_cast<int64_t>(24)) == 1) {
      ZechTable table = build_field(spec);
      oracle::Fq2 F = oracle::from_table(table);
      for (int64_t t = 1; t < 24; ++t) CHECK(F.pow(table.delta(), t, 24) != F.one());
    } else {
      CHECK_THROWS_AS(build_field(spec), Error);
    }
  }
}
