#pragma once

#include <random>
#include <string>
#include <vector>

#include "seqcm/seqcm.hpp"

namespace seqcm::testing {

inline RingPtr ring_xy() { return make_ring(32003, {"x", "y"}); }
inline RingPtr ring_xyz() { return make_ring(32003, {"x", "y", "z"}); }
inline RingPtr ring_xyzw() { return make_ring(32003, {"x", "y", "z", "w"}); }

inline Polynomial P(const RingPtr& R, const std::string& s) { return parse_polynomial(R, s); }

inline std::vector<Polynomial> Ps(const RingPtr& R, std::initializer_list<const char*> xs) {
  std::vector<Polynomial> out;
  for (const char* s : xs) out.push_back(P(R, s));
  return out;
}

inline Submodule ideal(const RingPtr& R, std::initializer_list<const char*> xs) {
  return Submodule::ideal(R, Ps(R, xs));
}

inline PresentedModule cyclic(const RingPtr& R, std::initializer_list<const char*> xs) {
  return PresentedModule::quotient(ideal(R, xs));
}

inline PresentedModule R1() { return cyclic(ring_xy(), {"x^2", "x*y"}); }
inline PresentedModule R4() { return cyclic(ring_xyz(), {"x*y", "x*z"}); }
inline PresentedModule R3() { return cyclic(ring_xyzw(), {"x*z", "x*w", "y*z", "y*w"}); }
inline PresentedModule S_free(std::size_t n) {
  std::vector<std::string> names{"x", "y", "z", "w"};
  names.resize(n);
  return PresentedModule::free(make_ring(32003, names), 1);
}

/// Gaussian elimination over GF(p) on dense rows.
struct Dense {
  std::uint32_t p;
  std::size_t cols;
  std::vector<std::vector<std::uint32_t>> rows;

  static std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  }

  /// Row-reduces in place and returns the rank.
  std::size_t rank() {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
      std::size_t piv = r;
      while (piv < rows.size() && rows[piv][c] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[r], rows[piv]);
      std::uint64_t iv = inv(rows[r][c], p);
      for (auto& v : rows[r]) v = static_cast<std::uint32_t>(v * iv % p);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == r || rows[i][c] == 0) continue;
        std::uint64_t f = rows[i][c];
        for (std::size_t k = c; k < cols; ++k)
          rows[i][k] = static_cast<std::uint32_t>((rows[i][k] + (p - f) * rows[r][k]) % p);
      }
      ++r;
    }
    rows.resize(r);
    return r;
  }
};

/// Socle dimension and length of the graded artinian module F/U computed
/// degree by degree with dense linear algebra only:
///   U_D = span{ m g : g in U, deg(m g) = D },
///   Soc_D = { v in F_D : x_i v in U_{D+1} for all i } / U_D.
/// Returns {-1, -1} when F/U does not vanish by degree `max_degree`.
struct DenseSocle {
  long long socle = -1;
  long long length = -1;
};

inline DenseSocle dense_socle(const RingPtr& R, std::size_t rank,
                              const std::vector<FreeElement>& gens, std::vector<int> shifts = {},
                              int max_degree = 40) {
  if (shifts.empty()) shifts.assign(rank, 0);
  const std::size_t n = R->nvars();
  const std::uint32_t p = R->field().characteristic();

  auto basis = [&](int D) {
    std::vector<std::pair<Monomial, std::uint32_t>> out;
    for (std::size_t i = 0; i < rank; ++i) {
      int e = D - shifts[i];
      if (e < 0) continue;
      for (const auto& m : monomials_of_degree(*R, static_cast<unsigned>(e)))
        out.emplace_back(m, static_cast<std::uint32_t>(i));
    }
    return out;
  };
  auto index_of = [](const std::vector<std::pair<Monomial, std::uint32_t>>& b, const Monomial& m,
                     std::uint32_t c) -> std::size_t {
    for (std::size_t k = 0; k < b.size(); ++k)
      if (b[k].second == c && b[k].first == m) return k;
    throw std::logic_error("monomial outside basis");
  };
  auto span = [&](int D, const std::vector<std::pair<Monomial, std::uint32_t>>& b) {
    Dense M{p, b.size(), {}};
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      int dg = g.degree(shifts);
      if (dg > D) continue;
      for (const auto& m : monomials_of_degree(*R, static_cast<unsigned>(D - dg))) {
        std::vector<std::uint32_t> row(b.size(), 0);
        for (const auto& t : g.terms()) row[index_of(b, t.monomial * m, t.component)] = t.coeff;
        M.rows.push_back(std::move(row));
      }
    }
    M.rank();
    return M;
  };

  int lo = *std::min_element(shifts.begin(), shifts.end());
  DenseSocle out{0, 0};
  auto bD = basis(lo);
  Dense UD = span(lo, bD);
  for (int D = lo; D <= max_degree; ++D) {
    auto bN = basis(D + 1);
    Dense UN = span(D + 1, bN);
    const std::size_t fD = bD.size();
    const std::size_t quotient_dim = fD - UD.rows.size();
    out.length += static_cast<long long>(quotient_dim);
    if (quotient_dim > 0) {
      // Kernel of F_D -> (F_{D+1}/U_{D+1})^n: stack the images x_i v next
      // to copies of U_{D+1} and read off rows with vanishing left block.
      std::size_t C = n * bN.size();
      // Columns: [ n blocks of F_{D+1} | F_D identity tag ].
      Dense A{p, C + fD, {}};
      for (std::size_t k = 0; k < fD; ++k) {
        std::vector<std::uint32_t> row(A.cols, 0);
        for (std::size_t i = 0; i < n; ++i) {
          Monomial xm = bD[k].first * R->var(i);
          row[i * bN.size() + index_of(bN, xm, bD[k].second)] = 1;
        }
        row[C + k] = 1;
        A.rows.push_back(std::move(row));
      }
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& u : UN.rows) {
          std::vector<std::uint32_t> row(A.cols, 0);
          for (std::size_t k = 0; k < bN.size(); ++k) row[i * bN.size() + k] = u[k];
          A.rows.push_back(std::move(row));
        }
      A.rank();
      // Rows whose first C entries vanish span {v : x_i v in U_{D+1}} in the tag block.
      Dense K{p, fD, {}};
      for (const auto& row : A.rows) {
        bool zero = true;
        for (std::size_t k = 0; k < C && zero; ++k) zero = row[k] == 0;
        if (zero) K.rows.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(C), row.end());
      }
      for (const auto& u : UD.rows) K.rows.push_back(u);
      std::size_t kernel_plus_u = K.rank();
      out.socle += static_cast<long long>(kernel_plus_u - UD.rows.size());
    }
    bool vanished = quotient_dim == 0 && bN.size() == UN.rows.size();
    int max_gen = *std::max_element(shifts.begin(), shifts.end());
    for (const auto& g : gens)
      if (!g.is_zero()) max_gen = std::max(max_gen, g.degree(shifts));
    if (vanished && D >= max_gen) return out;
    bD = std::move(bN);
    UD = std::move(UN);
  }
  return {-1, -1};
}

/// The dense oracle applied to M/(xs)M.
inline DenseSocle dense_socle_of_quotient(const PresentedModule& M, const std::vector<Polynomial>& xs) {
  Submodule U = lift_parameter_submodule(M, xs);
  return dense_socle(M.ring(), M.rows(), U.generators(), M.row_degrees());
}

/// Hand-rolled random polynomial: up to `terms` monomials of total degree
/// <= max_degree (exactly `degree` when homogeneous is set).
inline Polynomial random_polynomial(const RingPtr& R, std::mt19937_64& rng, unsigned max_degree,
                                    std::size_t terms, bool homogeneous = false) {
  std::uniform_int_distribution<unsigned> deg_dist(0, max_degree);
  unsigned fixed = homogeneous ? deg_dist(rng) : 0;
  std::vector<Term> ts;
  for (std::size_t k = 0; k < terms; ++k) {
    unsigned d = homogeneous ? fixed : deg_dist(rng);
    auto monos = monomials_of_degree(*R, d);
    const Monomial& m = monos[rng() % monos.size()];
    ts.push_back({m, static_cast<Coeff>(rng() % R->field().characteristic())});
  }
  return Polynomial::from_terms(R, std::move(ts));
}

inline RingPtr random_ring(std::mt19937_64& rng, std::size_t max_vars = 4) {
  std::vector<std::string> names{"x", "y", "z", "w"};
  names.resize(1 + rng() % max_vars);
  return make_ring(32003, names, rng() % 4 == 0 ? MonomialOrder::lex : MonomialOrder::grevlex);
}

/// Every S-vector of the basis reduces to zero modulo it.
inline bool spairs_reduce_to_zero(const Submodule& G) {
  const auto& gb = G.gb();
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      if (gb[i].terms().front().component != gb[j].terms().front().component) continue;
      if (!normal_form(s_vector(gb[i], gb[j]), G).is_zero()) return false;
    }
  return true;
}

/// N(q; D) + N(q; M/D) for D = D_{l-1} and N(q; M).
struct Additivity {
  std::size_t whole, sub, quotient;
};

inline Additivity additivity(const PresentedModule& M, const FiltrationResult& F,
                             const std::vector<Polynomial>& q) {
  const SubmoduleHandle& D = F.steps[F.steps.size() - 2].handle;
  PresentedModule sub = present_submodule(M, D);
  PresentedModule quo = present_quotient(M, D);
  return {index_of_reducibility(M, q).N, index_of_reducibility(sub, q).N,
          index_of_reducibility(quo, q).N};
}

}  // namespace seqcm::testing
