#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "maxeven/rational.hpp"

using maxeven::Rational;
using maxeven::compare;

TEST_CASE("rationals are always canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational());
  CHECK(Rational(0, -7).str() == "0/1");
  CHECK(Rational(6, 3).str() == "2/1");
  CHECK(Rational(-1, 2).str() == "-1/2");
}

TEST_CASE("arithmetic basics") {
  CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1));
  CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1));
  CHECK(compare(Rational(-1, 3), Rational(-1, 4)) < 0);
  CHECK(Rational(1, 3) - Rational(1, 6) == Rational(1, 6));
  CHECK(Rational(3, 4) / Rational(3) == Rational(1, 4));
  CHECK(-Rational(2, 5) == Rational(-2, 5));
  CHECK(Rational(-7, 3).abs() == Rational(7, 3));
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("ceil and floor") {
  CHECK(Rational(3, 2).ceil_to_int() == 2);
  CHECK(Rational(3, 2).floor_to_int() == 1);
  CHECK(Rational(-3, 2).ceil_to_int() == -1);
  CHECK(Rational(-3, 2).floor_to_int() == -2);
  CHECK(Rational(5).ceil_to_int() == 5);
  CHECK(Rational(5).floor_to_int() == 5);
  CHECK(Rational(0).ceil_to_int() == 0);
}

TEST_CASE("ordering is total and consistent") {
  std::vector<Rational> values = {Rational(1, 2), Rational(-1, 3), Rational(0),
                                  Rational(2, 3), Rational(-1, 2), Rational(1, 3)};
  std::sort(values.begin(), values.end());
  for (std::size_t i = 1; i < values.size(); ++i) {
    CHECK(values[i - 1] < values[i]);
  }
  CHECK(values.front() == Rational(-1, 2));
  CHECK(values.back() == Rational(2, 3));
}

TEST_CASE("randomized field identities") {
  std::mt19937_64 rng(7);
  auto draw = [&rng]() {
    const long long num = static_cast<long long>(rng() % 41) - 20;
    const long long den = 1 + static_cast<long long>(rng() % 12);
    return Rational(num, den);
  };
  for (int i = 0; i < 500; ++i) {
    const Rational a = draw();
    const Rational b = draw();
    CHECK((a + b) - b == a);
    CHECK(a + b == b + a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(compare(a, b) == (a - b).sign());
    CHECK(a * Rational(1) == a);
  }
}

TEST_CASE("sign and integrality") {
  CHECK(Rational(0).is_zero());
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(-2, 7).sign() == -1);
  CHECK(Rational(9, 2).sign() == 1);
  CHECK(Rational(4, 2).is_integer());
  CHECK(!Rational(1, 2).is_integer());
}
