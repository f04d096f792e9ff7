#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"
#include "invariants.hpp"

namespace seqcm {

using Rng = std::mt19937_64;

/// Per-index records of the Goto conditions. Index conventions (0-based
/// storage):
///   condition1[j]  j = 0..s-1  Ass(C_i/q_j C_i) in Assh + {m} for every
///                              filtration step with d_i > 0
///   condition2[j]  element x_{j+1} kills D_i whenever d_i < j+1
///   condition3[j]  q_j M : x_{j+1} = H^0_m(M/q_j M) and x_{j+1} cuts the
///                  dimension of M/q_j M by one
///   r_values[j]    j = 0..s    r(M/q_j M)
///   type_two[j]    j = 0..s-1  r(M/q_j M) <= r(M/q_{j+1} M)
struct GotoCertificate {
  std::vector<bool> condition1;
  std::vector<bool> condition2;
  std::vector<bool> condition3;
  std::vector<std::size_t> r_values;
  std::vector<bool> type_two;
  /// Filtration steps (1-based) with d_i = 0, for which condition (1) is not evaluated.
  std::vector<std::size_t> condition1_skipped_steps;

  bool conditions_hold() const {
    auto all = [](const std::vector<bool>& v) {
      return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
    };
    return all(condition1) && all(condition2) && all(condition3);
  }
  bool is_type_two() const {
    return std::all_of(type_two.begin(), type_two.end(), [](bool b) { return b; });
  }
};

struct Certificates {
  bool is_sop = false;
  bool is_distinguished = false;
  bool is_d_sequence = false;
  std::optional<GotoCertificate> goto_sequence;
};

struct ParameterSystem {
  std::vector<Polynomial> elements;
  std::vector<unsigned> degrees;
  std::uint64_t seed = 0;
  Certificates certificates;
};

inline Coeff random_coeff(const PrimeField& F, Rng& rng) {
  return static_cast<Coeff>(rng() % F.characteristic());
}

/// A random GF(p)-combination of { g*m : g generator, deg(g*m) = degree }.
/// Throws NoFormAvailable when that set is empty or only spans zero.
inline Polynomial random_form(const Submodule& constraint, unsigned degree, Rng& rng) {
  if (constraint.rank() != 1) throw std::invalid_argument("random_form expects an ideal");
  const RingPtr& ring = constraint.ring();
  std::vector<Polynomial> spanning;
  for (const auto& g : constraint.generators()) {
    Polynomial f = g.component(0);
    if (!f.is_homogeneous()) continue;
    int dg = f.degree();
    if (dg > static_cast<int>(degree)) continue;
    for (const auto& m : monomials_of_degree(*ring, degree - static_cast<unsigned>(dg)))
      spanning.push_back(f.times_monomial(m));
  }
  if (spanning.empty())
    throw NoFormAvailable("constraint ideal has no nonzero form of degree " +
                          std::to_string(degree));
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<Term> terms;
    for (const auto& s : spanning) {
      Coeff c = random_coeff(ring->field(), rng);
      for (const auto& t : s.terms()) terms.push_back({t.monomial, ring->field().mul(c, t.coeff)});
    }
    Polynomial f = Polynomial::from_terms(ring, std::move(terms));
    if (!f.is_zero()) return f;
  }
  throw NoFormAvailable("degree-" + std::to_string(degree) + " part of constraint ideal is zero");
}

/// Every prefix x_1..x_j cuts the dimension to dim M - j.
inline bool is_sop(const PresentedModule& M, const std::vector<Polynomial>& xs) {
  const int d = krull_dim(M);
  for (std::size_t j = 1; j <= xs.size(); ++j) {
    std::vector<Polynomial> prefix(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(j));
    if (krull_dim_quotient(lift_parameter_submodule(M, prefix)) != d - static_cast<int>(j))
      return false;
  }
  return true;
}

namespace detail {

/// Index (into steps) of the largest D_i with d_i < j, or -1 for D_0 = 0.
inline int killed_step(const FiltrationResult& F, std::size_t j) {
  int best = -1;
  for (std::size_t i = 0; i < F.steps.size(); ++i)
    if (F.steps[i].dim < static_cast<int>(j)) best = static_cast<int>(i);
  return best;
}

/// Constraint ideal for x_j: Ann(D_i) with i = killed_step(j), or S.
inline std::vector<Submodule> constraint_ideals(const PresentedModule& M,
                                                const FiltrationResult& F, std::size_t d) {
  std::vector<std::optional<Submodule>> per_step(F.steps.size());
  std::vector<Submodule> out;
  for (std::size_t j = 1; j <= d; ++j) {
    int i = killed_step(F, j);
    if (i < 0) {
      out.push_back(buchberger(Submodule::whole(M.ring(), 1)));
      continue;
    }
    if (!per_step[i]) per_step[i] = annihilator(M, F.steps[i].handle);
    out.push_back(*per_step[i]);
  }
  return out;
}

/// x * D_i = 0 in M for all generators of D_i.
inline bool kills(const Submodule& rel_gb, const SubmoduleHandle& D,
                  const Polynomial& x) {
  for (const auto& h : D.generators)
    if (!contains(rel_gb, x * h)) return false;
  return true;
}

}  // namespace detail

/// x_j D_i = 0 whenever d_i < j, checked by membership in the relations.
inline bool annihilation_holds(const PresentedModule& M, const FiltrationResult& F,
                               const std::vector<Polynomial>& xs) {
  Submodule rel = buchberger(M.relation_module());
  for (std::size_t i = 0; i < F.steps.size(); ++i)
    for (std::size_t j = 1; j <= xs.size(); ++j)
      if (F.steps[i].dim < static_cast<int>(j) &&
          !detail::kills(rel, F.steps[i].handle, xs[j - 1]))
        return false;
  return true;
}

inline bool is_distinguished(const PresentedModule& M, const FiltrationResult& F,
                             const std::vector<Polynomial>& xs) {
  int d = F.steps.empty() ? -1 : F.steps.back().dim;
  return static_cast<int>(xs.size()) == d && is_sop(M, xs) && annihilation_holds(M, F, xs);
}

inline std::vector<unsigned> degrees_of(const std::vector<Polynomial>& xs) {
  std::vector<unsigned> out;
  for (const auto& x : xs) out.push_back(static_cast<unsigned>(std::max(0, x.degree())));
  return out;
}

/// Random distinguished system of parameters: x_j is drawn from Ann(D_i)
/// for the largest i with d_i < j, then the whole system is verified.
inline ParameterSystem distinguished_sop(const PresentedModule& M, const FiltrationResult& F,
                                         unsigned degree, Rng& rng, std::size_t retries = 32,
                                         std::uint64_t seed = 0) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  const int d = F.steps.empty() ? -1 : F.steps.back().dim;
  if (d < 0) throw std::invalid_argument("zero module has no system of parameters");
  auto constraints = detail::constraint_ideals(M, F, static_cast<std::size_t>(d));
  std::size_t sop_failures = 0, annihilation_failures = 0;
  for (std::size_t attempt = 0; attempt < retries; ++attempt) {
    std::vector<Polynomial> xs;
    for (const auto& c : constraints) xs.push_back(random_form(c, degree, rng));
    if (!is_sop(M, xs)) {
      ++sop_failures;
      continue;
    }
    if (!annihilation_holds(M, F, xs)) {
      ++annihilation_failures;
      continue;
    }
    ParameterSystem sys{xs, degrees_of(xs), seed, {}};
    sys.certificates.is_sop = true;
    sys.certificates.is_distinguished = true;
    return sys;
  }
  throw RetriesExhausted("no distinguished system of parameters in degree " +
                             std::to_string(degree) + " after " + std::to_string(retries) +
                             " attempts (" + std::to_string(sop_failures) + " not a sop, " +
                             std::to_string(annihilation_failures) +
                             " failed annihilation); raise the degree or the retry count",
                         sop_failures ? "sop" : "annihilation", 0);
}

/// d generic forms of the given degree, verified to be a system of
/// parameters; no annihilation constraints.
inline ParameterSystem random_sop(const PresentedModule& M, unsigned degree, Rng& rng,
                                  std::size_t retries = 32, std::uint64_t seed = 0) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  const int d = krull_dim(M);
  if (d < 0) throw std::invalid_argument("zero module has no system of parameters");
  Submodule unit = Submodule::ideal(M.ring(), {Polynomial::constant(M.ring(), 1)});
  for (std::size_t attempt = 0; attempt < retries; ++attempt) {
    std::vector<Polynomial> xs;
    for (int j = 0; j < d; ++j) xs.push_back(random_form(unit, degree, rng));
    if (!is_sop(M, xs)) continue;
    ParameterSystem sys{xs, degrees_of(xs), seed, {}};
    sys.certificates.is_sop = true;
    return sys;
  }
  throw RetriesExhausted("no system of parameters in degree " + std::to_string(degree) +
                             " after " + std::to_string(retries) + " attempts",
                         "sop", 0);
}

/// Elementwise t-th powers. Powers of a sop stay a sop; distinguishedness is
/// re-verified by membership; d-sequence and Goto certificates are dropped.
inline ParameterSystem power_system(const PresentedModule& M, const FiltrationResult& F,
                                    const ParameterSystem& sys, unsigned t) {
  if (t < 1) throw std::invalid_argument("power must be positive");
  if (t == 1) return sys;
  ParameterSystem out;
  for (const auto& x : sys.elements) out.elements.push_back(x.pow(t));
  out.degrees = degrees_of(out.elements);
  out.seed = sys.seed;
  out.certificates.is_sop = sys.certificates.is_sop;
  out.certificates.is_distinguished =
      sys.certificates.is_distinguished && annihilation_holds(M, F, out.elements);
  return out;
}

/// q_i M : x_{i+1} x_j = q_i M : x_j for all 0 <= i < j <= s.
inline bool verify_d_sequence(const PresentedModule& M, const std::vector<Polynomial>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<Polynomial> prefix(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(i));
    Submodule U = buchberger(lift_parameter_submodule(M, prefix));
    for (std::size_t j = i + 1; j <= xs.size(); ++j) {
      Submodule lhs = colon(U, xs[i] * xs[j - 1]);
      Submodule rhs = colon(U, xs[j - 1]);
      if (!same_submodule(lhs, rhs)) return false;
    }
  }
  return true;
}

namespace detail {

/// Condition (1) for q = prefix: every non-artinian C_i has
/// Ass(C_i/q C_i) in Assh + {m}.
inline bool goto_condition1(const FiltrationResult& F, const std::vector<Polynomial>& prefix) {
  for (const auto& step : F.steps) {
    if (step.dim <= 0) continue;
    if (!ass_in_assh_or_m(quotient_by_elements(step.quotient, prefix))) return false;
  }
  return true;
}

/// Condition (3) for x after prefix: (q M : x) = H^0_m(M/qM), and x is a
/// parameter on M/qM (when that module has positive dimension).
inline bool goto_condition3(const PresentedModule& M, const std::vector<Polynomial>& prefix,
                            const Polynomial& x) {
  Submodule U = buchberger(lift_parameter_submodule(M, prefix));
  Submodule lhs = colon(U, x);
  Submodule rhs = saturate(U, Submodule::maximal_ideal(M.ring())).module;
  if (!same_submodule(lhs, rhs)) return false;
  int before = krull_dim_quotient(U);
  std::vector<Polynomial> next = prefix;
  next.push_back(x);
  int after = krull_dim_quotient(lift_parameter_submodule(M, next));
  return before <= 0 || after == before - 1;
}

inline std::size_t r_of_quotient(const PresentedModule& M, const std::vector<Polynomial>& prefix) {
  return r_total(quotient_by_elements(M, prefix)).r_total;
}

}  // namespace detail

/// Builds x_1..x_d one element at a time from the annihilator constraints
/// and verifies the Goto conditions (1)-(3) directly; with want_type_two the
/// r-inequality r(M/q_{j-1}M) <= r(M/q_jM) is also required. Each element
/// gets `retries` attempts.
inline ParameterSystem goto_sequence(const PresentedModule& M, const FiltrationResult& F,
                                     unsigned degree, Rng& rng, bool want_type_two,
                                     std::size_t retries = 32, std::uint64_t seed = 0) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  const int d = F.steps.empty() ? -1 : F.steps.back().dim;
  if (d < 0) throw std::invalid_argument("zero module has no system of parameters");
  auto constraints = detail::constraint_ideals(M, F, static_cast<std::size_t>(d));
  Submodule rel = buchberger(M.relation_module());

  GotoCertificate cert;
  for (std::size_t i = 0; i < F.steps.size(); ++i)
    if (F.steps[i].dim <= 0) cert.condition1_skipped_steps.push_back(i + 1);

  std::vector<Polynomial> xs;
  if (d > 0) cert.condition1.push_back(detail::goto_condition1(F, xs));
  if (d > 0 && !cert.condition1.back())
    throw RetriesExhausted("condition (1) fails for q_0: a filtration quotient is not unmixed",
                           "condition 1", 0);
  cert.r_values.push_back(r_total(M).r_total);

  for (std::size_t j = 1; j <= static_cast<std::size_t>(d); ++j) {
    std::string last_failure;
    bool accepted = false;
    for (std::size_t attempt = 0; attempt < retries && !accepted; ++attempt) {
      Polynomial x = random_form(constraints[j - 1], degree, rng);
      bool c2 = true;
      for (std::size_t i = 0; i < F.steps.size(); ++i)
        if (F.steps[i].dim < static_cast<int>(j) && !detail::kills(rel, F.steps[i].handle, x))
          c2 = false;
      if (!c2) {
        last_failure = "condition 2";
        continue;
      }
      if (!detail::goto_condition3(M, xs, x)) {
        last_failure = "condition 3";
        continue;
      }
      std::vector<Polynomial> next = xs;
      next.push_back(x);
      bool c1 = true;
      if (j < static_cast<std::size_t>(d)) c1 = detail::goto_condition1(F, next);
      if (!c1) {
        last_failure = "condition 1";
        continue;
      }
      std::size_t r_next = detail::r_of_quotient(M, next);
      bool type_two = cert.r_values.back() <= r_next;
      if (want_type_two && !type_two) {
        last_failure = "type II";
        continue;
      }
      xs = std::move(next);
      cert.condition2.push_back(true);
      cert.condition3.push_back(true);
      if (j < static_cast<std::size_t>(d)) cert.condition1.push_back(true);
      cert.r_values.push_back(r_next);
      cert.type_two.push_back(type_two);
      accepted = true;
    }
    if (!accepted)
      throw RetriesExhausted("no element x_" + std::to_string(j) + " of degree " +
                                 std::to_string(degree) + " passed " + last_failure + " in " +
                                 std::to_string(retries) + " attempts",
                             last_failure, j);
  }

  ParameterSystem sys{xs, degrees_of(xs), seed, {}};
  sys.certificates.is_sop = is_sop(M, xs);
  sys.certificates.is_distinguished = is_distinguished(M, F, xs);
  sys.certificates.is_d_sequence = verify_d_sequence(M, xs);
  sys.certificates.goto_sequence = std::move(cert);
  return sys;
}

}  // namespace seqcm
