#include <gtest/gtest.h>

#include "support.hpp"

using namespace seqcm;
using namespace seqcm::testing;

namespace {

Submodule lift(const PresentedModule& M, const SubmoduleHandle& h) {
  std::vector<FreeElement> gens = M.relations();
  gens.insert(gens.end(), h.generators.begin(), h.generators.end());
  return Submodule(M.ring(), M.rows(), std::move(gens));
}

std::vector<PresentedModule> fixtures() {
  return {S_free(2), R1(), R4(), R3(), cyclic(ring_xyzw(), {"x*y", "x*z", "x*w"}),
          cyclic(ring_xyz(), {"x^2", "x*y", "x*z^2"}),
          cyclic(ring_xyz(), {"x*y*z"})};
}

void check_filtration(const PresentedModule& M) {
  FiltrationResult F = dimension_filtration(M);
  ASSERT_FALSE(F.steps.empty());
  EXPECT_EQ(F.steps.back().dim, krull_dim(M));
  for (std::size_t i = 0; i < F.steps.size(); ++i) {
    const auto& s = F.steps[i];
    EXPECT_EQ(krull_dim(s.quotient), s.dim) << "C_" << i + 1;
    if (i == 0) continue;
    EXPECT_LT(F.steps[i - 1].dim, s.dim);
    EXPECT_TRUE(is_subset(lift(M, F.steps[i - 1].handle), lift(M, s.handle)));
  }
  // The top quotient is unmixed.
  if (F.steps.size() >= 2) {
    PresentedModule top = present_quotient(M, F.steps[F.steps.size() - 2].handle);
    EXPECT_TRUE(unmixed_component(top).generators.empty() ||
                is_zero_handle(top, unmixed_component(top)));
  }
  // H^0 agrees with D_1 when d_1 = 0.
  if (F.steps.front().dim == 0)
    EXPECT_TRUE(same_submodule(lift(M, gamma_m(M)), lift(M, F.steps.front().handle)));
}

}  // namespace

TEST(GammaM, Examples) {
  EXPECT_TRUE(gamma_m(S_free(3)).generators.empty());
  PresentedModule M = R1();
  SubmoduleHandle h = gamma_m(M);
  PresentedModule H = present_submodule(M, h);
  EXPECT_EQ(length(H), 1u);
  EXPECT_TRUE(same_submodule(lift(M, h), ideal(M.ring(), {"x"})));
  PresentedModule A = cyclic(ring_xy(), {"x^2", "x*y", "y^2"});
  EXPECT_TRUE(same_submodule(lift(A, gamma_m(A)), Submodule::whole(A.ring(), 1)));
}

TEST(UnmixedComponent, Examples) {
  EXPECT_TRUE(unmixed_component(S_free(3)).generators.empty());
  PresentedModule M = R1();
  EXPECT_TRUE(same_submodule(lift(M, unmixed_component(M)), ideal(M.ring(), {"x"})));
  PresentedModule T = R3();
  EXPECT_TRUE(unmixed_component(T).generators.empty());
}

TEST(DimensionFiltration, FreeModuleHasOneStep) {
  FiltrationResult F = dimension_filtration(S_free(2));
  EXPECT_EQ(F.ell(), 1u);
  EXPECT_EQ(F.dims(), (std::vector<int>{2}));
}

TEST(DimensionFiltration, R1) {
  PresentedModule M = R1();
  FiltrationResult F = dimension_filtration(M);
  ASSERT_EQ(F.ell(), 2u);
  EXPECT_EQ(F.dims(), (std::vector<int>{0, 1}));
  EXPECT_TRUE(same_submodule(lift(M, F.steps[0].handle), ideal(M.ring(), {"x"})));
  EXPECT_EQ(length(F.steps[0].quotient), 1u);
}

TEST(DimensionFiltration, R4) {
  PresentedModule M = R4();
  auto R = M.ring();
  FiltrationResult F = dimension_filtration(M);
  ASSERT_EQ(F.ell(), 2u);
  EXPECT_EQ(F.dims(), (std::vector<int>{1, 2}));
  EXPECT_TRUE(same_submodule(lift(M, F.steps[0].handle), ideal(R, {"x"})));
  // C_1 = S/(y,z) and C_2 = S/(x), compared through annihilators and Hilbert functions.
  EXPECT_TRUE(same_submodule(annihilator(F.steps[0].quotient), ideal(R, {"y", "z"})));
  EXPECT_TRUE(same_submodule(annihilator(F.steps[1].quotient), ideal(R, {"x"})));
  // C_1 is generated by x in degree 1.
  EXPECT_EQ(hilbert_function(F.steps[0].quotient, 0), 0u);
  for (int d = 0; d < 5; ++d) {
    EXPECT_EQ(hilbert_function(F.steps[0].quotient, d + 1), 1u);
    EXPECT_EQ(hilbert_function(F.steps[1].quotient, d), static_cast<std::uint64_t>(d + 1));
  }
}

TEST(DimensionFiltration, ZeroModule) {
  auto R = ring_xy();
  EXPECT_EQ(dimension_filtration(cyclic(R, {"1"})).ell(), 0u);
}

TEST(DimensionFiltration, Invariants) {
  for (const auto& M : fixtures()) check_filtration(M);
}

TEST(DimensionFiltration, MixedDimensions) {
  EXPECT_EQ(dimension_filtration(cyclic(ring_xyz(), {"x*y*z"})).dims(), (std::vector<int>{2}));
  PresentedModule M = cyclic(ring_xyzw(), {"x*y", "x*z", "x*w", "y^2*z", "y^2*w"});
  FiltrationResult F = dimension_filtration(M);
  EXPECT_GE(F.ell(), 2u);
  check_filtration(M);
}

TEST(DimensionFiltration, Heredity) {
  for (const auto& M : {R1(), R4(), cyclic(ring_xyzw(), {"x*y", "x*z", "x*w"})}) {
    FiltrationResult F = dimension_filtration(M);
    for (std::size_t i = 0; i + 1 < F.steps.size(); ++i) {
      PresentedModule Di = present_submodule(M, F.steps[i].handle);
      FiltrationResult G = dimension_filtration(Di);
      ASSERT_EQ(G.ell(), i + 1);
      for (std::size_t k = 0; k <= i; ++k) {
        EXPECT_EQ(G.steps[k].dim, F.steps[k].dim);
        SubmoduleHandle pushed{M.rows(), {}};
        for (const auto& g : G.steps[k].handle.generators)
          pushed.generators.push_back(pushforward(g, M, F.steps[i].handle));
        EXPECT_TRUE(same_submodule(lift(M, pushed), lift(M, F.steps[k].handle)));
      }
    }
  }
}

TEST(AssInAsshOrM, Examples) {
  EXPECT_TRUE(ass_in_assh_or_m(S_free(3)));
  EXPECT_TRUE(ass_in_assh_or_m(R1()));
  EXPECT_FALSE(ass_in_assh_or_m(cyclic(ring_xyzw(), {"x*y", "x*z", "x*w"})));
  EXPECT_TRUE(ass_in_assh_or_m(R3()));
}
