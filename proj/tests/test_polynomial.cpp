#include <doctest.h>

#include <random>

#include "capelli/polynomial.hpp"

using namespace capelli;

namespace {

UnivPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 8);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 50);
  UnivPoly p;
  int d = deg(rng);
  for (int e = 0; e <= d; ++e) p += UnivPoly::monomial(e, Rat(num(rng), den(rng)));
  return p;
}

}  // namespace

TEST_CASE("poly add examples") {
  UnivPoly u = UnivPoly::u();
  CHECK((u + Rat(1)) + (u - Rat(1)) == UnivPoly::monomial(1, Rat(2)));
  std::mt19937_64 rng(1);
  UnivPoly p = random_poly(rng);
  CHECK(UnivPoly::zero() + p == p);
  CHECK(UnivPoly::monomial(2, Rat(1)) + UnivPoly::monomial(2, Rat(-1)) == UnivPoly::zero());
}

TEST_CASE("poly mul examples") {
  UnivPoly u = UnivPoly::u();
  CHECK((u + Rat(1)) * u == UnivPoly::monomial(2, Rat(1)) + u);
  CHECK((u + Rat(2)) * u == UnivPoly::monomial(2, Rat(1)) + UnivPoly::monomial(1, Rat(2)));
  std::mt19937_64 rng(2);
  UnivPoly p = random_poly(rng);
  CHECK(UnivPoly::one() * p == p);
}

TEST_CASE("poly eval examples") {
  UnivPoly u = UnivPoly::u();
  CHECK((u * u + u).eval(Rat(2)) == Rat(6));
  CHECK(UnivPoly::constant(Rat(7, 3)).eval(Rat(100)) == Rat(7, 3));
  CHECK(UnivPoly::monomial(1, Rat(2)).eval(Rat(1, 2)) == Rat(1));
  CHECK((u * u * u - Rat(1)).eval(Rat(-2)) == Rat(-9));
}

TEST_CASE("poly ring axioms randomized") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 1000; ++t) {
    UnivPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("poly eval is a ring homomorphism") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> num(-99, 99);
  std::uniform_int_distribution<long> den(1, 9);
  for (int t = 0; t < 300; ++t) {
    UnivPoly p = random_poly(rng), q = random_poly(rng);
    Rat x(num(rng), den(rng));
    CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
    CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
  }
}

TEST_CASE("poly normalization invariants") {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 200; ++t) {
    UnivPoly p = random_poly(rng), q = random_poly(rng);
    for (const UnivPoly& r : {p + q, p * q, p - q, -p}) {
      for (const auto& [e, c] : r.coeffs()) {
        CHECK(e >= 0);
        CHECK(!c.is_zero());
      }
      CHECK(r.degree() == (r.coeffs().empty() ? -1 : r.coeffs().rbegin()->first));
    }
    CHECK(p - p == UnivPoly::zero());
  }
}

TEST_CASE("poly rendering") {
  UnivPoly u = UnivPoly::u();
  CHECK((u * u + UnivPoly::monomial(1, Rat(3, 2)) - Rat(1)).to_string() == "u^2 + 3/2*u - 1");
  CHECK(UnivPoly::zero().to_string() == "0");
  CHECK(UnivPoly::constant(Rat(-5, 4)).to_string() == "-5/4");
  CHECK(UnivPoly::monomial(1, Rat(2)).to_string() == "2*u");
  CHECK((u - Rat(3)).to_string() == "u - 3");
  CHECK((-(u * u) + Rat(1)).to_string() == "-u^2 + 1");
  CHECK(u.to_string() == "u");
  CHECK(UnivPoly::monomial(3, Rat(-1)).to_string() == "-u^3");
}

TEST_CASE("poly degree and constants") {
  CHECK(UnivPoly::zero().degree() == -1);
  CHECK(UnivPoly::one().degree() == 0);
  CHECK(UnivPoly::u().degree() == 1);
  CHECK(UnivPoly::one().is_one());
  CHECK(UnivPoly::u().is_constant() == false);
  CHECK(UnivPoly::constant(Rat(3)).coeff(0) == Rat(3));
  CHECK(UnivPoly::u().coeff(0) == Rat(0));
}
