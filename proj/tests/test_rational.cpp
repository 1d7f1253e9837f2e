#include <doctest.h>

#include <random>

#include "capelli/ratmatrix.hpp"
#include "capelli/rational.hpp"

using namespace capelli;

TEST_CASE("rat canonical form") {
  CHECK(Rat(6, 4) == Rat(3, 2));
  CHECK(Rat(-6, 4) == Rat(-3, 2));
  CHECK(Rat(6, -4) == Rat(-3, 2));
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(3, 2).den() == 2);
  CHECK(Rat(3, -2).den() == 2);
  CHECK(Rat(3, -2).num() == -3);
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 999);
  for (int t = 0; t < 500; ++t) {
    Rat a(num(rng), den(rng)), b(num(rng), den(rng));
    for (const Rat& r : {a + b, a - b, a * b}) {
      CHECK(r.den() > 0);
      mpz_class g;
      mpz_class n = r.num(), d = r.den();
      mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
      CHECK(g == 1);
    }
  }
}

TEST_CASE("rat arithmetic and parsing") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
  CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
  CHECK(Rat::from_string("3/2") == Rat(3, 2));
  CHECK(Rat::from_string("-7") == Rat(-7));
  CHECK(Rat(-5, 10).to_string() == "-1/2");
  CHECK(Rat(4, 2).to_string() == "2");
  CHECK(Rat(1, 2) < Rat(2, 3));
  CHECK(Rat(-1).sign() == -1);
  CHECK(Rat(2, 3).inverse() == Rat(3, 2));
}

TEST_CASE("combinatorial helpers") {
  CHECK(rat_factorial(0) == Rat(1));
  CHECK(rat_factorial(5) == Rat(120));
  CHECK(rat_binomial(4, 2) == Rat(6));
  CHECK(rat_binomial(3, 5) == Rat(0));
  CHECK(rat_odd_double_factorial(0) == Rat(1));
  CHECK(rat_odd_double_factorial(1) == Rat(1));
  CHECK(rat_odd_double_factorial(2) == Rat(3));
  CHECK(rat_odd_double_factorial(3) == Rat(15));
  CHECK(rat_pow2(5) == Rat(32));
  CHECK(half(3) == Rat(3, 2));
}

TEST_CASE("rational matrices") {
  RatMatrix g = RatMatrix::parse_csv("0,1;-1,0");
  CHECK(g.size() == 2);
  CHECK(g.at(0, 1) == Rat(1));
  CHECK(g.is_alternating());
  CHECK(!g.is_symmetric());
  CHECK(g.to_csv() == "0,1;-1,0");
  CHECK(g * g.inverse() == RatMatrix::identity(2));
  CHECK(g.transpose().at(1, 0) == Rat(1));

  CHECK(RatMatrix::split_form_o(3).is_symmetric());
  CHECK(RatMatrix::split_form_sp(4).is_alternating());
  CHECK(RatMatrix::split_form_sp(2).at(0, 1) == Rat(1));
  CHECK(RatMatrix::split_form_sp(2).at(1, 0) == Rat(-1));
  CHECK_THROWS_AS(RatMatrix::split_form_sp(3), std::invalid_argument);
  CHECK_THROWS_AS(RatMatrix(2).inverse(), std::domain_error);
  CHECK_THROWS_AS(RatMatrix::parse_csv("1,2;3"), std::invalid_argument);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> entry(-5, 5);
  for (int t = 0; t < 20; ++t) {
    RatMatrix m(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = Rat(entry(rng));
    try {
      RatMatrix inv = m.inverse();
      CHECK(m * inv == RatMatrix::identity(3));
      CHECK(inv * m == RatMatrix::identity(3));
    } catch (const std::domain_error&) {
    }
  }
}
