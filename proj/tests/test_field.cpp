#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "etm/field.hpp"

using namespace etm;

TEST_CASE("prime field basics") {
  Field f(7, 1);
  CHECK(f.size() == 7);
  CHECK(f.multiplicative_order(f.primitive_root()) == 6);
  CHECK(f.mul(f.from_int(3), f.from_int(5)) == f.from_int(15));
  CHECK(f.inv(f.from_int(3)) == f.from_int(5));
}

TEST_CASE("GF(4): the field automorphism inverts the primitive root") {
  Field f(2, 2);
  Field::Elt lam = f.primitive_root();
  CHECK(f.multiplicative_order(lam) == 3);
  CHECK(f.frobenius(lam) == f.mul(lam, lam));
  CHECK(f.frobenius(lam) == f.inv(lam));
}

TEST_CASE("GF(9): multiplicative group of order 8") {
  Field f(3, 2);
  Field::Elt lam = f.primitive_root();
  CHECK(f.multiplicative_order(lam) == 8);
  CHECK(f.pow(lam, 8) == f.one());
  CHECK(f.pow(lam, 4) == f.from_int(-1));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(3);
  for (auto [p, e] : {std::pair{2, 5}, {3, 3}, {5, 2}, {13, 1}, {7, 2}}) {
    Field f(p, e);
    for (int trial = 0; trial < 100; ++trial) {
      auto a = static_cast<Field::Elt>(rng() % f.size());
      auto b = static_cast<Field::Elt>(rng() % f.size());
      auto c = static_cast<Field::Elt>(rng() % f.size());
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == f.zero());
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == f.one());
    }
    // Frobenius is a field automorphism of order e
    for (int trial = 0; trial < 50; ++trial) {
      auto a = static_cast<Field::Elt>(rng() % f.size());
      auto b = static_cast<Field::Elt>(rng() % f.size());
      CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
      CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
      Field::Elt x = a;
      for (int i = 0; i < e; ++i) x = f.frobenius(x);
      CHECK(x == a);
    }
  }
}

TEST_CASE("non-prime characteristic is rejected") {
  CHECK_THROWS_AS(Field(6, 1), error);
  CHECK_THROWS_AS(Field(1, 2), error);
}

TEST_CASE("self-inverse-conjugate primitive roots exist only up to size 4") {
  CHECK(primitive_root_self_inverse_conjugate(2));
  CHECK(primitive_root_self_inverse_conjugate(3));
  CHECK(primitive_root_self_inverse_conjugate(4));
  CHECK_FALSE(primitive_root_self_inverse_conjugate(7));
  CHECK_FALSE(primitive_root_self_inverse_conjugate(8));
  CHECK_FALSE(primitive_root_self_inverse_conjugate(9));
  // full sweep over prime powers up to 1024
  for (uint32_t q = 2; q <= 1024; ++q) {
    if (prime_factors(q).size() != 1) continue;
    CHECK(primitive_root_self_inverse_conjugate(q) == (q <= 4));
  }
}
