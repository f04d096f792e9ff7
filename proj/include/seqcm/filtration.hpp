#pragma once

#include <vector>

#include "homology.hpp"

namespace seqcm {

/// One step D_i of the dimension filtration together with d_i = dim D_i and
/// C_i = D_i / D_{i-1}.
struct FiltrationStep {
  SubmoduleHandle handle;
  int dim;
  PresentedModule quotient;
};

/// 0 = D_0 < D_1 < ... < D_l = M; `steps` holds D_1..D_l.
struct FiltrationResult {
  std::vector<FiltrationStep> steps;

  std::size_t ell() const { return steps.size(); }
  std::vector<int> dims() const {
    std::vector<int> out;
    for (const auto& s : steps) out.push_back(s.dim);
    return out;
  }
};

namespace detail {

/// Coset representatives of U modulo the relations of M, dropping zeros.
inline SubmoduleHandle handle_from_lift(const PresentedModule& M, const Submodule& U) {
  Submodule rel = buchberger(M.relation_module());
  SubmoduleHandle h{M.rows(), {}};
  for (const auto& g : buchberger(U).gb()) {
    FreeElement r = normal_form(g, rel);
    if (!r.is_zero()) h.generators.push_back(std::move(r));
  }
  return h;
}

}  // namespace detail

/// H^0_m(M) = (0 :_M m^inf).
inline SubmoduleHandle gamma_m(const PresentedModule& M) {
  if (M.rows() == 0) return {0, {}};
  auto sat = saturate(M.relation_module(), Submodule::maximal_ideal(M.ring()));
  return detail::handle_from_lift(M, sat.module);
}

/// The largest submodule of M of dimension < dim M, computed as
/// (0 :_M b^inf) with b the product of Ann Ext^{n-j}(M, S) over j < dim M.
/// The saturation by the product is done one factor at a time.
inline SubmoduleHandle unmixed_component(const PresentedModule& M) {
  const int d = krull_dim(M);
  if (d <= 0) return {M.rows(), {}};
  const std::size_t n = M.ring()->nvars();
  Resolution res = free_resolution(M, n);
  Submodule lifted = buchberger(M.relation_module());
  for (int j = 0; j < d; ++j) {
    PresentedModule ext = ext_module(res, n - static_cast<std::size_t>(j));
    if (ext.rows() == 0) continue;
    lifted = saturate(lifted, annihilator(ext)).module;
  }
  return detail::handle_from_lift(M, lifted);
}

inline FiltrationResult dimension_filtration(const PresentedModule& M) {
  FiltrationResult result;
  if (is_zero_module(M)) return result;

  // Collect handles top-down: D_l = M, D_{l-1} = unmixed(D_l), ...
  std::vector<SubmoduleHandle> handles{all_generators(M)};
  Submodule rel = buchberger(M.relation_module());
  while (true) {
    const SubmoduleHandle& top = handles.back();
    PresentedModule X = handles.size() == 1 ? M : present_submodule(M, top);
    SubmoduleHandle inner = unmixed_component(X);
    SubmoduleHandle mapped{M.rows(), {}};
    for (const auto& g : inner.generators) {
      FreeElement v = handles.size() == 1 ? g : pushforward(g, M, top);
      v = normal_form(v, rel);
      if (!v.is_zero()) mapped.generators.push_back(std::move(v));
    }
    if (mapped.generators.empty()) break;
    handles.push_back(std::move(mapped));
  }

  SubmoduleHandle previous{M.rows(), {}};
  for (auto it = handles.rbegin(); it != handles.rend(); ++it) {
    PresentedModule C = present_submodule(present_quotient(M, previous), *it);
    int dim = krull_dim(present_submodule(M, *it));
    result.steps.push_back({*it, dim, std::move(C)});
    previous = *it;
  }
  return result;
}

/// Ass M subset Assh M + {m}, checked as dim(unmixed component) <= 0.
inline bool ass_in_assh_or_m(const PresentedModule& M) {
  if (is_zero_module(M)) return true;
  SubmoduleHandle u = unmixed_component(M);
  if (u.generators.empty()) return true;
  return krull_dim(present_submodule(M, u)) <= 0;
}

}  // namespace seqcm
