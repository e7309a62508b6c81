#include <doctest.h>

#include <vector>

#include "planeforge/gf.hpp"

using planeforge::gf::Field;

namespace {

// Independent root-existence check used to cross-check the chosen modulus.
bool has_root(const std::vector<int>& poly, int p) {
  for (int x = 0; x < p; ++x) {
    int val = 0, pw = 1;
    for (int c : poly) {
      val = (val + c * pw) % p;
      pw = pw * x % p;
    }
    if (val == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("prime field modulus is x") {
  const Field F = Field::make(2, 1);
  CHECK(F.q() == 2);
  CHECK(F.spec().irreducible == std::vector<int>{0, 1});
}

TEST_CASE("GF(4) modulus is x^2+x+1") {
  const Field F = Field::make(2, 2);
  CHECK(F.spec().irreducible == std::vector<int>{1, 1, 1});
  CHECK_FALSE(has_root(F.spec().irreducible, 2));
  // The only other monic quadratics over GF(2) all have roots.
  CHECK(has_root({0, 0, 1}, 2));
  CHECK(has_root({1, 0, 1}, 2));
  CHECK(has_root({0, 1, 1}, 2));
}

TEST_CASE("GF(9) modulus is x^2+1 and lexicographically minimal") {
  const Field F = Field::make(3, 2);
  CHECK(F.spec().irreducible == std::vector<int>{1, 0, 1});
  CHECK_FALSE(has_root(F.spec().irreducible, 3));
  // Enumerate all monic quadratics in the same order and confirm every
  // earlier one is reducible (degree 2: reducible iff it has a root).
  for (int c0 = 0; c0 <= 1; ++c0)
    for (int c1 = 0; c1 < 3; ++c1) {
      if (c0 == 1 && c1 == 0) break;
      CHECK(has_root({c0, c1, 1}, 3));
    }
}

TEST_CASE("make_field rejects bad input") {
  CHECK_THROWS_AS(Field::make(4, 1), planeforge::gf::NotPrime);
  CHECK_THROWS_AS(Field::make(1, 1), planeforge::gf::NotPrime);
  CHECK_THROWS_AS(Field::make(2, 17), planeforge::gf::TooLarge);
  CHECK_THROWS_AS(Field::make(2, 0), planeforge::gf::TooLarge);
}

TEST_CASE("arithmetic spot checks") {
  const Field F2 = Field::make(2, 1);
  CHECK(F2.mul(1, 1) == 1);

  // In GF(4), x * x reduces to x + 1 mod x^2+x+1.
  const Field F4 = Field::make(2, 2);
  const int x = F4.encode({0, 1});
  CHECK(F4.mul(x, x) == F4.encode({1, 1}));

  const Field F3 = Field::make(3, 1);
  CHECK(F3.inv(2) == 2);
  CHECK(F3.mul(2, F3.inv(2)) == 1);
}

TEST_CASE("inv(0) throws") {
  const Field F = Field::make(5, 1);
  CHECK_THROWS_AS(F.inv(0), planeforge::gf::DivisionByZero);
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
  for (const auto [p, k] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                            {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
    const Field F = Field::make(p, k);
    const int q = F.q();
    CAPTURE(q);
    for (int a = 0; a < q; ++a) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        for (int c = 0; c < q; ++c) {
          CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
  }
}
