#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "filtration.hpp"

namespace seqcm {

/// r_j(M) = dim_k Soc H^j_m(M) for 0 <= j <= d, and r(M) their sum.
struct InvariantVector {
  int d = -1;
  std::vector<std::size_t> rj;
  std::size_t r_total = 0;
};

/// r_j via graded local duality: mu(Ext^{n-j}_S(M, S)).
inline std::size_t r_j(const Resolution& res, std::size_t j) {
  const std::size_t n = res.ring->nvars();
  if (j > n) return 0;
  return ext_module(res, n - j).rows();
}

inline std::size_t r_j(const PresentedModule& M, std::size_t j) {
  return r_j(free_resolution(M, M.ring()->nvars()), j);
}

inline InvariantVector r_total(const PresentedModule& M) {
  InvariantVector v;
  v.d = krull_dim(M);
  if (v.d < 0) return v;
  Resolution res = free_resolution(M, M.ring()->nvars());
  for (int j = 0; j <= v.d; ++j) v.rj.push_back(r_j(res, static_cast<std::size_t>(j)));
  v.r_total = std::accumulate(v.rj.begin(), v.rj.end(), std::size_t{0});
  return v;
}

/// N(q; M) for q = (xs) together with the two routes used to compute it.
struct IndexReport {
  std::vector<Polynomial> system;
  unsigned power = 1;
  std::size_t N = 0;
  std::uint64_t quotient_length = 0;
  std::size_t socle_basis_size = 0;
};

/// (x_1..x_s) F + relations, i.e. qM lifted to the ambient free module.
inline Submodule lift_parameter_submodule(const PresentedModule& M,
                                          const std::vector<Polynomial>& xs) {
  std::vector<FreeElement> gens = M.relations();
  for (const auto& x : xs)
    for (std::size_t i = 0; i < M.rows(); ++i)
      gens.push_back(FreeElement::from_polynomial(x, M.rows(), i));
  return Submodule(M.ring(), M.rows(), std::move(gens));
}

/// Index of reducibility as the socle dimension of M/qM:
/// N = dim_k F/U - dim_k F/(U :_F m). The socle is also presented as a
/// module and its minimal generator count must agree.
inline IndexReport index_of_reducibility(const PresentedModule& M,
                                         const std::vector<Polynomial>& xs,
                                         unsigned power = 1) {
  IndexReport report{xs, power, 0, 0, 0};
  if (M.rows() == 0) return report;
  Submodule U = buchberger(lift_parameter_submodule(M, xs));
  auto total = k_dim_quotient(U);
  if (!total) throw NotArtinian("M/qM does not have finite length; q is not a parameter ideal");
  Submodule socle = colon(U, Submodule::maximal_ideal(M.ring()));
  auto upper = k_dim_quotient(socle);
  report.quotient_length = *total;
  report.N = static_cast<std::size_t>(*total - *upper);

  PresentedModule quotient(M.ring(), M.rows(), U.gb(), M.row_degrees());
  SubmoduleHandle socle_handle = detail::handle_from_lift(quotient, socle);
  report.socle_basis_size = min_gens(present_submodule(quotient, socle_handle));
  if (report.socle_basis_size != report.N)
    throw InvariantViolation("socle length " + std::to_string(report.N) +
                             " differs from its minimal generator count " +
                             std::to_string(report.socle_basis_size));
  return report;
}

inline bool is_cohen_macaulay(const PresentedModule& M) {
  if (is_zero_module(M)) return true;
  return depth(M) == krull_dim(M);
}

struct SequentialCmVerdict {
  bool sequentially_cm = true;
  FiltrationResult filtration;
  std::vector<bool> step_cm;
};

inline SequentialCmVerdict is_sequentially_cm(const PresentedModule& M) {
  SequentialCmVerdict v;
  v.filtration = dimension_filtration(M);
  for (const auto& step : v.filtration.steps) {
    bool cm = is_cohen_macaulay(step.quotient);
    v.step_cm.push_back(cm);
    v.sequentially_cm = v.sequentially_cm && cm;
  }
  return v;
}

/// For cyclic modules S/I: Cohen-Macaulay of type r_d = 1.
inline bool is_gorenstein(const PresentedModule& R) {
  PresentedModule P = minimalize(R);
  if (P.rows() != 1) throw std::invalid_argument("is_gorenstein expects a cyclic module S/I");
  if (!is_cohen_macaulay(P)) return false;
  int d = krull_dim(P);
  return r_j(P, static_cast<std::size_t>(d)) == 1;
}

}  // namespace seqcm
