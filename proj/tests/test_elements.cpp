#include <doctest.h>

#include "capelli/elements.hpp"

using namespace capelli;

namespace {
const UnivPoly u = UnivPoly::u();
}

TEST_CASE("shift families") {
  CHECK(natural_seq(4) == std::vector<Rat>{Rat(3), Rat(2), Rat(1), Rat(0)});
  CHECK(tilde_natural_seq(2) == std::vector<Rat>{Rat(0), Rat(0)});
  CHECK(tilde_natural_seq(3) == std::vector<Rat>{Rat(1, 2), Rat(0), Rat(-1, 2)});
  CHECK(tilde_natural_seq(4) == std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(-1)});
  CHECK(tilde_natural_seq(5) ==
        std::vector<Rat>{Rat(3, 2), Rat(1, 2), Rat(0), Rat(-1, 2), Rat(-3, 2)});
  CHECK(half_descending_seq(2) == std::vector<Rat>{Rat(0), Rat(-1)});
  CHECK(half_descending_seq(3) == std::vector<Rat>{Rat(1, 2), Rat(-1, 2), Rat(-3, 2)});
  CHECK(hat_descending_seq(2) == std::vector<Rat>{Rat(1), Rat(0)});

  for (int k = 1; k <= 8; ++k) {
    Rat nat_sum(0), tilde_sum(0);
    auto nat = natural_seq(k), tilde = tilde_natural_seq(k);
    for (const Rat& c : nat) nat_sum += c;
    for (const Rat& c : tilde) tilde_sum += c;
    CHECK(nat_sum == Rat(static_cast<long>(k) * (k - 1), 2));
    CHECK(tilde_sum == Rat(0));
    // Reversing the tilde sequence negates it.
    for (int t = 0; t < k; ++t)
      CHECK(tilde[static_cast<size_t>(t)] == -tilde[static_cast<size_t>(k - 1 - t)]);
  }
}

TEST_CASE("coefficient R") {
  CHECK(coeff_R(4, 1) == Rat(6));
  CHECK(coeff_R(4, 2) == Rat(3));
  CHECK(coeff_R(3, 2) == Rat(0));
  for (int k = 0; k <= 6; ++k) CHECK(coeff_R(k, 0) == Rat(1));
  // Recurrence R^{k+1}_l = R^k_l + (k - 2l + 2) R^k_{l-1}.
  for (int k = 0; k <= 10; ++k)
    for (int l = 1; 2 * l <= k + 1; ++l)
      CHECK(coeff_R(k + 1, l) == coeff_R(k, l) + Rat(k - 2 * l + 2) * coeff_R(k, l - 1));
}

TEST_CASE("gl capelli determinant") {
  auto r1 = LieRealization::make_gl(1);
  CHECK(capelli_det_gl(1, u) ==
        EnvElement::generator(r1, GenPair{1, 1}) + EnvElement::scalar(r1, u));

  // Frozen normal form at N = 2 (independently derived via the free-algebra
  // oracle and by hand).
  auto r = LieRealization::make_gl(2);
  EnvElement g11 = EnvElement::generator(r, GenPair{1, 1});
  EnvElement g22 = EnvElement::generator(r, GenPair{2, 2});
  EnvElement g12 = EnvElement::generator(r, GenPair{1, 2});
  EnvElement g21 = EnvElement::generator(r, GenPair{2, 1});
  EnvElement expect = g11 * g22 + u * g11 + (u + Rat(1)) * g22 +
                      EnvElement::scalar(r, u * (u + Rat(1))) - g21 * g12;
  CHECK(capelli_det_gl(2, u) == expect);
}

TEST_CASE("gl minor and permanent families") {
  auto r = LieRealization::make_gl(3);
  EnvElement trace = EnvElement::zero(r);
  for (int i = 1; i <= 3; ++i) trace += EnvElement::generator(r, GenPair{i, i});
  // k = 1: trace + N u for both families.
  CHECK(capelli_minor_gl(3, 1, u) == trace + EnvElement::scalar(r, u.scaled(Rat(3))));
  CHECK(nazarov_per_gl(3, 1, u) == trace + EnvElement::scalar(r, u.scaled(Rat(3))));
  // k = 0 and k > N conventions.
  CHECK(capelli_minor_gl(3, 0, u) == EnvElement::scalar(r, UnivPoly::one()));
  CHECK(nazarov_per_gl(3, 0, u) == EnvElement::scalar(r, UnivPoly::one()));
  CHECK(capelli_minor_gl(3, 4, u).is_zero());
  // k = N recovers the full determinant.
  CHECK(capelli_minor_gl(3, 3, u) == capelli_det_gl(3, u));
}

TEST_CASE("howe-umeda elements") {
  auto r = LieRealization::make_o_identity(2);
  // N = 2: C(u) = (u+1)u - F_21 F_12 with F_21 = -F_12 and zero diagonal.
  EnvElement f12 = EnvElement::generator(r, GenPair{1, 2});
  CHECK(howe_umeda_o(2, u) ==
        EnvElement::scalar(r, u * (u + Rat(1))) + f12 * f12);
  CHECK(howe_umeda_o_minor(3, 3, u) == howe_umeda_o(3, u));
  CHECK(howe_umeda_o_minor(3, 0, u) ==
        EnvElement::scalar(LieRealization::make_o_identity(3), UnivPoly::one()));
}

TEST_CASE("wachi split orthogonal elements") {
  auto r = LieRealization::make_o_split(2);
  EnvElement f11 = EnvElement::generator(r, GenPair{1, 1});
  // N = 2: off-diagonal generators vanish, C(u) = u^2 - F_11^2.
  CHECK(wachi_o_split(2, u) ==
        EnvElement::scalar(r, u * u) - f11 * f11);
  // The k = N minor route coincides with the direct tilde-natural form.
  for (int N : {2, 3, 4}) CHECK(wachi_o_split_minor(N, N, u) == wachi_o_split(N, u));
  // Hat route gives the same elements.
  CHECK(wachi_o_split_minor_hat(3, 2, u) == wachi_o_split_minor(3, 2, u));
  CHECK(wachi_o_split_minor_hat(2, 1, u) == wachi_o_split_minor(2, 1, u));
  // k = 1 degenerates to N u on both routes.
  CHECK(wachi_o_split_minor(2, 1, u) == wachi_o_split_minor_sym(2, 1, u));
}

TEST_CASE("split symplectic permanent elements") {
  auto r = LieRealization::make_sp_split(2);
  EnvElement two_u = EnvElement::scalar(r, u.scaled(Rat(2)));
  CHECK(sp_split_per(2, 1, u) == two_u);
  CHECK(sp_split_per_hat(2, 1, u) == two_u);
  CHECK(sp_split_per_sym(2, 1, u) == two_u);
  CHECK(sp_split_per(2, 0, u) == EnvElement::scalar(r, UnivPoly::one()));
  CHECK(sp_split_per_hat(2, 0, u) == EnvElement::scalar(r, UnivPoly::one()));
  CHECK(sp_split_per_hat(2, 2, u) == sp_split_per(2, 2, u));
  CHECK(sp_split_per(2, 2, u) == sp_split_per_sym(2, 2, u));
}

TEST_CASE("closed-form eigenvalues") {
  // Determinant eigenvalue shape: N=2, lambda=(1,0) -> (u+2)u.
  CHECK(eig_capelli_det_gl(2, {Rat(1), Rat(0)}, u) ==
        UnivPoly::monomial(2, Rat(1)) + UnivPoly::monomial(1, Rat(2)));
  CHECK(eig_capelli_det_gl(1, {Rat(5)}, u) == u + Rat(5));
  // sp k=1: (u + l + 1/2) + (u - l - 1/2) = 2u for every lambda.
  for (const Rat& l : {Rat(0), Rat(2), Rat(9, 2)})
    CHECK(eig_sp_split_per(2, 1, {l}, u) == UnivPoly::monomial(1, Rat(2)));
  // o-split odd case: u (u^2 - l^2) with l = lambda + 1/2.
  {
    UnivPoly expect = u * (u * u - UnivPoly::constant(Rat(9, 4)));
    CHECK(eig_wachi_o_split(3, {Rat(1)}, u) == expect);
  }
  CHECK(eig_wachi_o_split(2, {Rat(2)}, u) == u * u - UnivPoly::constant(Rat(4)));
  // Minor family at the k = N boundary matches the full determinant formula.
  CHECK(eig_capelli_minor_gl(2, 2, {Rat(3), Rat(1)}, u) ==
        eig_capelli_det_gl(2, {Rat(3), Rat(1)}, u));
  CHECK_THROWS_AS(eig_capelli_det_gl(2, {Rat(1)}, u), std::invalid_argument);
  CHECK_THROWS_AS(eig_sp_split_per(3, 1, {Rat(1)}, u), std::invalid_argument);
}

TEST_CASE("element centrality at unit scale") {
  struct Case {
    LieRealization::Ptr r;
    EnvElement e;
  };
  std::vector<Case> cases;
  cases.push_back({LieRealization::make_gl(2), capelli_minor_gl(2, 1, u)});
  cases.push_back({LieRealization::make_gl(2), nazarov_per_gl(2, 2, u)});
  cases.push_back({LieRealization::make_o_identity(3), howe_umeda_o(3, u)});
  cases.push_back({LieRealization::make_o_split(3), wachi_o_split(3, u)});
  cases.push_back({LieRealization::make_sp_split(2), sp_split_per(2, 2, u)});
  for (auto& c : cases)
    for (int g = 0; g < c.r->dim(); ++g)
      CHECK(env_commutator(c.e, EnvElement::generator(c.r, g)).is_zero());
}
