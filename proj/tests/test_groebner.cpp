#include <gtest/gtest.h>

#include "support.hpp"

using namespace seqcm;
using namespace seqcm::testing;

namespace {

std::vector<Polynomial> gb_polys(const Submodule& U) {
  std::vector<Polynomial> out;
  for (const auto& g : buchberger(U).gb()) out.push_back(g.component(0));
  return out;
}

}  // namespace

TEST(NormalForm, Examples) {
  auto R = make_ring(101, {"x", "y"});
  Submodule U = ideal(R, {"x^2 - y"});
  EXPECT_EQ(normal_form(P(R, "x^2"), U), P(R, "y"));
  EXPECT_TRUE(normal_form(P(R, "x^3 - x*y"), U).is_zero());
  Submodule zero = Submodule(R, 1, {});
  EXPECT_EQ(normal_form(P(R, "x^2 + y"), zero), P(R, "x^2 + y"));
}

TEST(NormalForm, AmbientMismatch) {
  auto R = ring_xy();
  Submodule U = Submodule::whole(R, 2);
  EXPECT_THROW(normal_form(FreeElement::unit(R, 3, 0), U), std::invalid_argument);
}

TEST(Buchberger, Examples) {
  auto R = ring_xy();
  EXPECT_EQ(gb_polys(ideal(R, {"x^2", "x*y"})), Ps(R, {"x^2", "x*y"}));
  EXPECT_EQ(gb_polys(ideal(R, {"x - y", "y"})), Ps(R, {"x", "y"}));
  EXPECT_EQ(gb_polys(ideal(R, {"3x^2 + y^2"})), Ps(R, {"x^2 + 10668*y^2"}));
  EXPECT_TRUE(buchberger(Submodule(R, 1, {})).gb().empty());
}

TEST(Buchberger, Idempotent) {
  auto R = ring_xyz();
  Submodule G = buchberger(ideal(R, {"x^2 - y*z", "x*y - z^2", "y^3 - x*z^2"}));
  Submodule H = buchberger(Submodule(R, 1, G.gb()));
  EXPECT_EQ(G.gb(), H.gb());
  EXPECT_TRUE(spairs_reduce_to_zero(G));
}

TEST(Buchberger, LexElimination) {
  auto R = make_ring(32003, {"x", "y"}, MonomialOrder::lex);
  auto gb = gb_polys(ideal(R, {"x - y^2", "x*y - 1"}));
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_EQ(gb.back(), P(R, "y^3 - 1"));
}

TEST(Syzygies, Examples) {
  auto R = ring_xy();
  Submodule syz = syzygies(ideal(R, {"x^2", "x*y"}));
  FreeElement expected = FreeElement::from_components(R, {P(R, "y"), P(R, "-x")});
  EXPECT_TRUE(contains(syz, expected));
  EXPECT_TRUE(is_zero_submodule(buchberger(syzygies(ideal(R, {"x^3 + y"})))));
  Submodule dup = syzygies(ideal(R, {"x", "x"}));
  EXPECT_TRUE(contains(dup, FreeElement::from_components(R, {P(R, "1"), P(R, "-1")})));
}

TEST(Syzygies, PairToZero) {
  auto R = ring_xyz();
  auto gens = Ps(R, {"x*y", "y*z", "x*z", "x^2 - z^2"});
  Submodule syz = syzygies(Submodule::ideal(R, gens));
  ASSERT_FALSE(syz.generators().empty());
  for (const auto& s : syz.generators()) {
    Polynomial sum(R);
    for (std::size_t i = 0; i < gens.size(); ++i) sum = sum + s.component(i) * gens[i];
    EXPECT_TRUE(sum.is_zero());
  }
}

TEST(Colon, Examples) {
  auto R = ring_xy();
  Submodule U = ideal(R, {"x^2", "x*y"});
  EXPECT_TRUE(same_submodule(colon(U, P(R, "x")), ideal(R, {"x", "y"})));
  EXPECT_TRUE(same_submodule(colon(U, Polynomial::constant(R, 1)), U));
  EXPECT_TRUE(is_zero_submodule(buchberger(colon(Submodule(R, 1, {}), P(R, "x")))));
  EXPECT_TRUE(same_submodule(colon(U, Submodule(R, 1, {})), Submodule::whole(R, 1)));
  EXPECT_TRUE(same_submodule(colon(U, Submodule::maximal_ideal(R)), ideal(R, {"x"})));
}

TEST(Saturate, Examples) {
  auto R = ring_xy();
  auto sat = saturate(ideal(R, {"x^2", "x*y"}), Submodule::maximal_ideal(R));
  EXPECT_TRUE(same_submodule(sat.module, ideal(R, {"x"})));
  EXPECT_EQ(sat.exponent, 1);
  // Saturating by the unit ideal changes nothing.
  auto whole = saturate(ideal(R, {"x^2"}), ideal(R, {"1"}));
  EXPECT_TRUE(same_submodule(whole.module, ideal(R, {"x^2"})));
}

TEST(Saturate, MonomialCases) {
  auto R = ring_xyz();
  // (x^3, x^2 y) : (x)^inf = (1); : (y)^inf = (x^2); : (z)^inf unchanged.
  Submodule U = ideal(R, {"x^3", "x^2*y"});
  EXPECT_TRUE(same_submodule(saturate(U, ideal(R, {"x"})).module, Submodule::whole(R, 1)));
  EXPECT_TRUE(same_submodule(saturate(U, ideal(R, {"y"})).module, ideal(R, {"x^2"})));
  auto z = saturate(U, ideal(R, {"z"}));
  EXPECT_TRUE(same_submodule(z.module, U));
  EXPECT_EQ(z.exponent, 0);
  auto m = saturate(ideal(R, {"x^3", "y^2", "x*y*z"}), Submodule::maximal_ideal(R));
  // (x^3, y^2, xyz) = (x^3, xy, y^2) cap (x^3, y^2, z), the second m-primary.
  EXPECT_TRUE(same_submodule(m.module, ideal(R, {"x^3", "x*y", "y^2"})));
}

TEST(Intersect, Examples) {
  auto R = ring_xy();
  EXPECT_TRUE(same_submodule(intersect(ideal(R, {"x"}), ideal(R, {"y"})), ideal(R, {"x*y"})));
  Submodule U = ideal(R, {"x^2 + y^2", "x*y"});
  EXPECT_TRUE(same_submodule(intersect(U, U), U));
  EXPECT_TRUE(same_submodule(intersect(ideal(R, {"x", "y"}), ideal(R, {"x^2"})), ideal(R, {"x^2"})));
  EXPECT_THROW(intersect(Submodule::whole(R, 1), Submodule::whole(R, 2)), std::invalid_argument);
}

TEST(Dimension, KrullExamples) {
  auto R = ring_xy();
  EXPECT_EQ(krull_dim_quotient(ideal(R, {"x^2", "x*y"})), 1);
  EXPECT_EQ(krull_dim_quotient(Submodule(R, 1, {})), 2);
  EXPECT_EQ(krull_dim_quotient(ideal(R, {"x", "y"})), 0);
  EXPECT_EQ(krull_dim_quotient(Submodule::whole(R, 1)), -1);
  auto S4 = ring_xyzw();
  EXPECT_EQ(krull_dim_quotient(ideal(S4, {"x*z", "x*w", "y*z", "y*w"})), 2);
}

TEST(Dimension, KDimExamples) {
  auto R = ring_xy();
  EXPECT_EQ(k_dim_quotient(ideal(R, {"x^2", "x*y", "y^2"})), 3u);
  EXPECT_EQ(k_dim_quotient(ideal(R, {"x", "y"})), 1u);
  EXPECT_FALSE(k_dim_quotient(ideal(R, {"x^2"})).has_value());
  EXPECT_EQ(k_dim_quotient(Submodule::whole(R, 1)), 0u);
}

TEST(Dimension, HilbertFunction) {
  auto R = ring_xy();
  Submodule U = ideal(R, {"x^2", "x*y"});
  EXPECT_EQ(hilbert_function(U, 0, {0}), 1u);
  EXPECT_EQ(hilbert_function(U, 1, {0}), 2u);
  EXPECT_EQ(hilbert_function(U, 5, {0}), 1u);
  EXPECT_EQ(hilbert_function(Submodule(R, 1, {}), 3, {0}), 4u);
}

TEST(ModuleQuotient, AnnihilatorOfCyclic) {
  auto R = ring_xy();
  // (U : F) for U = (x) e1 + (y) e2 inside F = S^2 is (x) cap (y) = (xy).
  Submodule U(R, 2,
              {FreeElement::from_polynomial(P(R, "x"), 2, 0),
               FreeElement::from_polynomial(P(R, "y"), 2, 1)});
  Submodule ann = module_quotient(U, Submodule::whole(R, 2));
  EXPECT_TRUE(same_submodule(ann, ideal(R, {"x*y"})));
}
