#include <catch2/catch_amalgamated.hpp>

#include "pomod/matrix.hpp"

using namespace pomod;

TEST_CASE("rref, rank, kernel over Q") {
  Matrix<Rat> a(2, 3);
  a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
  a(1, 0) = 2; a(1, 1) = 4; a(1, 2) = 6;
  REQUIRE(a.rank() == 1);
  Matrix<Rat> k = a.kernel_basis();
  REQUIRE(k.cols() == 2);
  REQUIRE((a * k).is_zero());
}

TEST_CASE("solve and inverse") {
  Matrix<Rat> a(2, 2);
  a(0, 0) = 1; a(0, 1) = 2;
  a(1, 0) = 3; a(1, 1) = 5;
  auto inv = a.inverse();
  REQUIRE(inv.has_value());
  REQUIRE((*inv * a) == Matrix<Rat>::identity(2));

  Matrix<Rat> b(2, 1);
  b(0, 0) = 7; b(1, 0) = 11;
  auto x = a.solve(b);
  REQUIRE(x.has_value());
  REQUIRE(a * *x == b);

  Matrix<Rat> sing(2, 2);
  sing(0, 0) = 1; sing(0, 1) = 1;
  sing(1, 0) = 1; sing(1, 1) = 1;
  REQUIRE(!sing.inverse().has_value());
  Matrix<Rat> rhs(2, 1);
  rhs(0, 0) = 1; rhs(1, 0) = 2;
  REQUIRE(!sing.solve(rhs).has_value());
}

TEST_CASE("exact rationals stay exact") {
  Matrix<Rat> a(1, 1);
  a(0, 0) = rat_of_string("1/3");
  Matrix<Rat> b = a;
  for (int i = 0; i < 30; ++i) b = b * a;
  REQUIRE(scalar_to_string(b(0, 0)) == "1/617673396283947");
}

TEST_CASE("prime field arithmetic") {
  FpScope scope(7);
  Matrix<Fp> a(2, 2);
  a(0, 0) = Fp(3); a(0, 1) = Fp(5);
  a(1, 0) = Fp(1); a(1, 1) = Fp(2);
  auto inv = a.inverse();
  REQUIRE(inv.has_value());
  REQUIRE((a * *inv) == Matrix<Fp>::identity(2));
  REQUIRE((Fp(3) / Fp(5)) * Fp(5) == Fp(3));
}

TEST_CASE("column space intersection") {
  Matrix<Rat> a(3, 2), b(3, 2);
  a(0, 0) = 1; a(1, 1) = 1;              // span e0, e1
  b(1, 0) = 1; b(2, 1) = 1;              // span e1, e2
  Matrix<Rat> c = intersect_column_spaces(a, b);
  REQUIRE(c.cols() == 1);
  REQUIRE(!is_zero(c(1, 0)));
  REQUIRE(is_zero(c(0, 0)));
  REQUIRE(is_zero(c(2, 0)));
}
