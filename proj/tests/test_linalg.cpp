#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adesheaf/linalg.hpp"

using namespace ade;

TEST_CASE("rational arithmetic normalises") {
  Rational a(2, 4);
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(a + Rational(1, 3) == Rational(5, 6));
  CHECK(a * Rational(4) == Rational(2));
  CHECK(a / Rational(-1, 4) == Rational(-2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));
  CHECK(Rational(5, 3).to_string() == "5/3");
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rational overflow throws rather than wraps") {
  Rational big(std::int64_t{1} << 62);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("rank and kernel of a small system") {
  Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  CHECK(rank(m) == 2);
  Kernel k = kernel(m);
  REQUIRE(k.dimension() == 1);
  CHECK(is_zero(m * k.basis[0]));
  Vector coords = k.coordinates(k.basis[0]);
  CHECK(k.combine(coords) == k.basis[0]);
}

TEST_CASE("kernel of an empty system is everything") {
  Matrix m(0, 4);
  Kernel k = kernel(m);
  CHECK(k.dimension() == 4);
  CHECK(rank(m) == 0);
}

TEST_CASE("inverse") {
  Matrix m = Matrix::from_rows({{2, 1}, {7, 4}}, 2);
  Matrix inv = inverse(m);
  CHECK(m * inv == Matrix::identity(2));
  CHECK(inv * m == Matrix::identity(2));
  CHECK_THROWS_AS(inverse(Matrix::from_rows({{1, 2}, {2, 4}}, 2)), std::domain_error);
  CHECK(inverse(Matrix()).rows() == 0);
}

TEST_CASE("transpose and products agree") {
  Matrix a = Matrix::from_rows({{1, 2, 0}, {0, 1, Rational(1, 2)}}, 3);
  Matrix b = Matrix::from_rows({{1, 0}, {3, 1}, {-2, 5}}, 2);
  CHECK((a * b).transpose() == b.transpose() * a.transpose());
}
