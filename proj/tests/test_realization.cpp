#include <doctest.h>

#include <random>

#include "capelli/ncmatrix.hpp"
#include "capelli/realization.hpp"

using namespace capelli;

namespace {

LinComb single(const LieRealization::Ptr& r, int i, int j, const Rat& c = Rat(1)) {
  return lin_scale(r->expand_pair(i, j), c);
}

bool jacobi_holds(const LieRealization::Ptr& r) {
  const int d = r->dim();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        LinComb cc{{static_cast<uint16_t>(c), Rat(1)}};
        LinComb aa{{static_cast<uint16_t>(a), Rat(1)}};
        LinComb bb{{static_cast<uint16_t>(b), Rat(1)}};
        LinComb s = lin_add(lin_add(r->bracket_lin(r->bracket(a, b), cc),
                                    r->bracket_lin(r->bracket(b, c), aa)),
                            r->bracket_lin(r->bracket(c, a), bb));
        if (!s.empty()) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("gl structure constants") {
  auto r = LieRealization::make_gl(2);
  CHECK(r->dim() == 4);
  // [E_11, E_12] = E_12
  CHECK(r->bracket_lin(single(r, 1, 1), single(r, 1, 2)) == single(r, 1, 2));
  // [E_12, E_21] = E_11 - E_22
  CHECK(r->bracket_lin(single(r, 1, 2), single(r, 2, 1)) ==
        lin_add(single(r, 1, 1), single(r, 2, 2, Rat(-1))));
  // [E_11, E_22] = 0
  CHECK(r->bracket_lin(single(r, 1, 1), single(r, 2, 2)).empty());
  CHECK_THROWS_AS(LieRealization::make_gl(0), std::invalid_argument);
}

TEST_CASE("gl generator order is graded then lexicographic") {
  auto r = LieRealization::make_gl(2);
  CHECK(r->basis()[0] == GenPair{2, 1});
  CHECK(r->basis()[1] == GenPair{1, 1});
  CHECK(r->basis()[2] == GenPair{2, 2});
  CHECK(r->basis()[3] == GenPair{1, 2});
  CHECK(r->grade_of(0) == Grade::minus);
  CHECK(r->grade_of(1) == Grade::zero);
  CHECK(r->grade_of(3) == Grade::plus);
  CHECK(r->cartan_indices() == std::vector<int>{1, 2});
}

TEST_CASE("sp split realization") {
  auto r = LieRealization::make_sp_split(2);
  CHECK(r->dim() == 3);
  CHECK(r->basis()[0] == GenPair{2, 1});
  CHECK(r->basis()[1] == GenPair{1, 1});
  CHECK(r->basis()[2] == GenPair{1, 2});
  // Self-paired symbol: F_12 = 2 E_12 under the embedding.
  CHECK(r->matrix_of(r->index_of(GenPair{1, 2})).at(0, 1) == Rat(2));
  // [F_12, F_21] = 4 F_11 (expand via F_12 = 2E_12, F_21 = 2E_21 in gl_2)
  CHECK(r->bracket_lin(single(r, 1, 2), single(r, 2, 1)) == single(r, 1, 1, Rat(4)));
  // canonicalize(F_22) = -F_11
  CHECK(r->expand_pair(2, 2) == single(r, 1, 1, Rat(-1)));
  CHECK_THROWS_AS(LieRealization::make_sp_split(3), std::invalid_argument);

  auto r4 = LieRealization::make_sp_split(4);
  CHECK(r4->dim() == 10);  // n(2n+1)
  CHECK(r4->eps(1) == Rat(-1));
  CHECK(r4->eps(2) == Rat(-1));
  CHECK(r4->eps(3) == Rat(1));
  CHECK(r4->eps(4) == Rat(1));
  CHECK(r4->prime(1) == 4);
  CHECK(r4->prime(3) == 2);
  // Self-paired generator F_{14} = 2 E_{14} is kept.
  CHECK(r4->expand_pair(1, 4).size() == 1);
  CHECK(r4->matrix_of(r4->index_of(GenPair{1, 4})).at(0, 3) == Rat(2));
}

TEST_CASE("o split realization") {
  auto r2 = LieRealization::make_o_split(2);
  CHECK(r2->dim() == 1);
  CHECK(r2->basis()[0] == GenPair{1, 1});
  CHECK(r2->expand_pair(1, 2).empty());  // F_12 = 0
  CHECK(r2->matrix_of(0).at(0, 0) == Rat(1));
  CHECK(r2->matrix_of(0).at(1, 1) == Rat(-1));

  auto r3 = LieRealization::make_o_split(3);
  CHECK(r3->dim() == 3);
  CHECK(r3->expand_pair(2, 2).empty());  // middle index self-paired
  CHECK_THROWS_AS(LieRealization::make_o_split(1), std::invalid_argument);
}

TEST_CASE("o identity realization") {
  auto r2 = LieRealization::make_o_identity(2);
  CHECK(r2->dim() == 1);
  CHECK(!r2->graded());
  CHECK(r2->bracket_lin(single(r2, 1, 2), single(r2, 1, 2)).empty());

  auto r3 = LieRealization::make_o_identity(3);
  // [F_12, F_23] = F_13
  CHECK(r3->bracket_lin(single(r3, 1, 2), single(r3, 2, 3)) == single(r3, 1, 3));
  CHECK(LieRealization::make_o_identity(4)->dim() == 6);
}

TEST_CASE("general realization reproduces the split and identity forms") {
  struct Case {
    LieRealization::Ptr special;
    LieRealization::Ptr general;
  };
  const int N = 3;
  std::vector<Case> cases = {
      {LieRealization::make_o_split(N),
       LieRealization::make_general(AlgKind::o_general, RatMatrix::split_form_o(N))},
      {LieRealization::make_o_identity(N),
       LieRealization::make_general(AlgKind::o_general, RatMatrix::identity(N))},
      {LieRealization::make_sp_split(4),
       LieRealization::make_general(AlgKind::sp_general, RatMatrix::split_form_sp(4))},
  };
  for (const auto& c : cases) {
    CHECK(c.special->dim() == c.general->dim());
    // Same span: every basis matrix of one expands in the other.
    for (int t = 0; t < c.special->dim(); ++t) {
      CHECK_NOTHROW(c.general->expand_member_matrix(c.special->matrix_of(t)));
      CHECK_NOTHROW(c.special->expand_member_matrix(c.general->matrix_of(t)));
    }
    // Same brackets through the embedding, for all generator symbols.
    const int n = c.special->N();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        RatMatrix a = RatMatrix(n), b = RatMatrix(n);
        for (const auto& t : c.special->expand_pair(i, j))
          a = a + c.special->matrix_of(t.gen).scaled(t.coeff);
        for (const auto& t : c.general->expand_pair(i, j))
          b = b + c.general->matrix_of(t.gen).scaled(t.coeff);
        CHECK(a == b);
      }
  }
  CHECK_THROWS_AS(LieRealization::make_general(AlgKind::o_general, RatMatrix(3)),
                  std::domain_error);
  CHECK_THROWS_AS(
      LieRealization::make_general(AlgKind::o_general, RatMatrix::split_form_sp(4)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      LieRealization::make_general(AlgKind::sp_general, RatMatrix::identity(4)),
      std::invalid_argument);
}

TEST_CASE("jacobi identity at unit scale") {
  for (int N : {2, 3, 4}) {
    CHECK(jacobi_holds(LieRealization::make_gl(N)));
    CHECK(jacobi_holds(LieRealization::make_o_identity(N)));
    CHECK(jacobi_holds(LieRealization::make_o_split(N)));
  }
  CHECK(jacobi_holds(LieRealization::make_sp_split(2)));
  CHECK(jacobi_holds(LieRealization::make_sp_split(4)));
}

TEST_CASE("embedding agrees with the closed-form relation") {
  std::vector<LieRealization::Ptr> rs = {
      LieRealization::make_gl(3), LieRealization::make_o_identity(4),
      LieRealization::make_o_split(4), LieRealization::make_sp_split(4)};
  for (const auto& r : rs)
    for (int a = 0; a < r->dim(); ++a)
      for (int b = 0; b < r->dim(); ++b)
        CHECK(r->bracket(a, b) == r->closed_form_bracket(r->pair_of(a), r->pair_of(b)));
  CHECK_THROWS_AS(
      LieRealization::make_general(AlgKind::o_general, RatMatrix::identity(3))
          ->closed_form_bracket({1, 2}, {2, 3}),
      std::invalid_argument);
}

TEST_CASE("grading respects brackets") {
  for (const auto& r : {LieRealization::make_gl(3), LieRealization::make_o_split(4),
                        LieRealization::make_sp_split(4)}) {
    for (int a = 0; a < r->dim(); ++a)
      for (int b = 0; b < r->dim(); ++b) {
        Grade ga = r->grade_of(a), gb = r->grade_of(b);
        for (const auto& t : r->bracket(a, b)) {
          Grade gt = r->grade_of(t.gen);
          if (ga == gb) CHECK(gt == ga);                      // same grade closes
          if (ga == Grade::zero) CHECK(gt == gb);             // Cartan preserves grade
          if (gb == Grade::zero) CHECK(gt == ga);
        }
      }
  }
}

TEST_CASE("trace of the generator matrix vanishes for o and sp") {
  for (const auto& r :
       {LieRealization::make_o_identity(3), LieRealization::make_o_split(4),
        LieRealization::make_sp_split(4),
        LieRealization::make_general(AlgKind::o_general,
                                     RatMatrix::parse_csv("2,1,0;1,3,0;0,0,1"))}) {
    LinComb trace;
    for (int i = 1; i <= r->N(); ++i) trace = lin_add(trace, r->expand_pair(i, i));
    CHECK(trace.empty());
  }
}

TEST_CASE("infinitesimal invariance of the generator matrix") {
  for (const auto& r : {LieRealization::make_gl(3), LieRealization::make_o_identity(3),
                        LieRealization::make_o_split(4), LieRealization::make_sp_split(4)}) {
    NCMatrix m = NCMatrix::generator_matrix(r);
    for (int x = 0; x < r->dim(); ++x) {
      RatMatrix tx = r->matrix_of(x).transpose();
      EnvElement gx = EnvElement::generator(r, x);
      NCMatrix rhs = tx * m - m * tx;
      for (int i = 1; i <= r->N(); ++i)
        for (int j = 1; j <= r->N(); ++j)
          CHECK(env_commutator(gx, m.at(i, j)) == rhs.at(i, j));
    }
  }
}

TEST_CASE("diagonal adjustments") {
  auto sp2 = LieRealization::make_sp_split(2);
  CHECK(sp2->diagonal_adjustment(LieRealization::AdjustVariant::tilde) ==
        std::vector<Rat>{Rat(0), Rat(-1)});
  CHECK(sp2->diagonal_adjustment(LieRealization::AdjustVariant::hat) ==
        std::vector<Rat>{Rat(1), Rat(0)});
  auto o3 = LieRealization::make_o_split(3);
  CHECK(o3->diagonal_adjustment(LieRealization::AdjustVariant::tilde) ==
        std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1)});
  CHECK(o3->diagonal_adjustment(LieRealization::AdjustVariant::hat) ==
        std::vector<Rat>{Rat(-1), Rat(-1, 2), Rat(0)});
  auto o4 = LieRealization::make_o_split(4);
  CHECK(o4->diagonal_adjustment(LieRealization::AdjustVariant::tilde) ==
        std::vector<Rat>{Rat(0), Rat(0), Rat(1), Rat(1)});
  CHECK_THROWS_AS(
      LieRealization::make_gl(2)->diagonal_adjustment(LieRealization::AdjustVariant::tilde),
      std::invalid_argument);
}

TEST_CASE("descriptors round trip and realizations are interned") {
  for (const char* d : {"gl:N=3", "o-id:N=2", "o-split:N=4", "sp-split:N=2"}) {
    auto r = LieRealization::from_descriptor(d);
    CHECK(r->descriptor() == d);
    CHECK(LieRealization::from_descriptor(d).get() == r.get());
  }
  auto g = LieRealization::make_general(AlgKind::o_general, RatMatrix::identity(2));
  CHECK(LieRealization::from_descriptor(g->descriptor()).get() == g.get());
  CHECK(LieRealization::make_gl(3).get() == LieRealization::make_gl(3).get());
  CHECK_THROWS_AS(LieRealization::from_descriptor("su:N=2"), std::invalid_argument);
  CHECK_THROWS_AS(LieRealization::from_descriptor("gl"), std::invalid_argument);
}

TEST_CASE("index_of rejects non-canonical pairs") {
  auto r = LieRealization::make_sp_split(2);
  CHECK(r->index_of(GenPair{1, 1}) == 1);
  CHECK_THROWS_AS(r->index_of(GenPair{2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(r->expand_pair(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(r->expand_pair(1, 3), std::invalid_argument);
}
