#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "groebner.hpp"

namespace seqcm {

/// Graded module coker(S^s -> S^g) given by its relation columns. Row degrees
/// are the degrees of the generators; column degrees follow from the entries.
class PresentedModule {
 public:
  PresentedModule() = default;
  PresentedModule(RingPtr ring, std::size_t rows, std::vector<FreeElement> relations,
                  std::vector<int> row_degrees = {})
      : ring_(std::move(ring)), rows_(rows), row_degrees_(std::move(row_degrees)) {
    if (row_degrees_.empty()) row_degrees_.assign(rows_, 0);
    if (row_degrees_.size() != rows_) throw std::invalid_argument("row degree count mismatch");
    for (auto& r : relations) {
      require_same_ring(ring_, r.ring());
      if (r.rank() != rows_) throw std::invalid_argument("relation rank mismatch");
      if (r.is_zero()) continue;
      col_degrees_.push_back(r.degree(row_degrees_));
      relations_.push_back(std::move(r));
    }
  }

  static PresentedModule free(RingPtr ring, std::size_t rank, std::vector<int> degrees = {}) {
    return PresentedModule(std::move(ring), rank, {}, std::move(degrees));
  }

  /// The cyclic module S/I.
  static PresentedModule quotient(const Submodule& ideal) {
    if (ideal.rank() != 1) throw std::invalid_argument("quotient expects an ideal");
    return PresentedModule(ideal.ring(), 1, ideal.generators());
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return relations_.size(); }
  const std::vector<FreeElement>& relations() const { return relations_; }
  const std::vector<int>& row_degrees() const { return row_degrees_; }
  const std::vector<int>& col_degrees() const { return col_degrees_; }
  bool minimal() const { return minimal_; }

  bool is_homogeneous() const {
    for (const auto& r : relations_)
      if (!r.is_homogeneous(row_degrees_)) return false;
    return true;
  }

  /// Image of the presentation inside the free module S^rows.
  Submodule relation_module() const { return Submodule(ring_, rows_, relations_); }

  Polynomial entry(std::size_t row, std::size_t col) const {
    return relations_[col].component(row);
  }

 private:
  friend PresentedModule minimalize(const PresentedModule& M);

  RingPtr ring_;
  std::size_t rows_ = 0;
  std::vector<FreeElement> relations_;
  std::vector<int> row_degrees_;
  std::vector<int> col_degrees_;
  bool minimal_ = false;
};

/// Generators of a submodule of a presented module, as coset representatives
/// in its ambient free module.
struct SubmoduleHandle {
  std::size_t ambient_rank = 0;
  std::vector<FreeElement> generators;

  Submodule lift(const PresentedModule& parent) const {
    std::vector<FreeElement> gens = generators;
    for (const auto& r : parent.relations()) gens.push_back(r);
    return Submodule(parent.ring(), parent.rows(), std::move(gens));
  }
};

inline SubmoduleHandle all_generators(const PresentedModule& M) {
  SubmoduleHandle h{M.rows(), {}};
  for (std::size_t i = 0; i < M.rows(); ++i) h.generators.push_back(FreeElement::unit(M.ring(), M.rows(), i));
  return h;
}

namespace detail {

using DenseMatrix = std::vector<std::vector<Polynomial>>;

inline DenseMatrix to_dense(const RingPtr& ring, std::size_t rows,
                            const std::vector<FreeElement>& cols) {
  DenseMatrix A(rows, std::vector<Polynomial>(cols.size(), Polynomial(ring)));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    auto comps = cols[c].components();
    for (std::size_t r = 0; r < rows; ++r) A[r][c] = std::move(comps[r]);
  }
  return A;
}

inline std::vector<FreeElement> from_dense(const RingPtr& ring, std::size_t rows,
                                           const DenseMatrix& A, std::size_t cols) {
  std::vector<FreeElement> out;
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<Polynomial> comps;
    for (std::size_t r = 0; r < rows; ++r) comps.push_back(A[r][c]);
    FreeElement v = rows ? FreeElement::from_components(ring, comps) : FreeElement(ring, 0);
    out.push_back(std::move(v));
  }
  return out;
}

/// One Gaussian pruning step on a presentation: uses the unit entry (r, c)
/// to express generator r through the others, then deletes row r and
/// column c.
inline void eliminate_unit(DenseMatrix& A, std::size_t r, std::size_t c) {
  const auto& ring = A[r][c].ring();
  const auto& F = ring->field();
  Coeff inv_u = F.inv(A[r][c].lead().coeff);
  const std::size_t rows = A.size(), cols = A[r].size();
  for (std::size_t c2 = 0; c2 < cols; ++c2) {
    if (c2 == c || A[r][c2].is_zero()) continue;
    Polynomial factor = A[r][c2].scaled(inv_u);
    for (std::size_t r2 = 0; r2 < rows; ++r2)
      if (!A[r2][c].is_zero()) A[r2][c2] = A[r2][c2] - factor * A[r2][c];
  }
  A.erase(A.begin() + static_cast<std::ptrdiff_t>(r));
  for (auto& row : A) row.erase(row.begin() + static_cast<std::ptrdiff_t>(c));
}

inline std::optional<std::pair<std::size_t, std::size_t>> find_unit(const DenseMatrix& A) {
  for (std::size_t r = 0; r < A.size(); ++r)
    for (std::size_t c = 0; c < A[r].size(); ++c)
      if (A[r][c].is_constant()) return std::make_pair(r, c);
  return std::nullopt;
}

inline std::vector<FreeElement> transpose_columns(const RingPtr& ring, std::size_t rows,
                                                  const std::vector<FreeElement>& cols) {
  DenseMatrix A = to_dense(ring, rows, cols);
  std::vector<FreeElement> out;
  for (std::size_t r = 0; r < rows; ++r) {
    if (cols.empty()) {
      out.emplace_back(ring, 0);
      continue;
    }
    out.push_back(FreeElement::from_components(ring, A[r]));
  }
  return out;
}

}  // namespace detail

/// Removes nonzero constant entries by Gaussian elimination (first unit in
/// row-major order each time). The result is isomorphic to M, carries no
/// unit entries, and has rows() == mu(M).
namespace detail {

/// For homogeneous vectors: a subset generating the same submodule with no
/// redundant member, chosen degree by degree. A vector of degree D is kept
/// iff its normal form modulo the lower-degree part is independent of the
/// normal forms kept so far in degree D.
inline std::vector<FreeElement> prune_generators(const RingPtr& ring, std::size_t rank,
                                                 std::vector<FreeElement> gens,
                                                 const std::vector<int>& shifts) {
  std::vector<std::pair<int, FreeElement>> graded;
  for (auto& g : gens)
    if (!g.is_zero()) graded.emplace_back(g.degree(shifts), std::move(g));
  std::stable_sort(graded.begin(), graded.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  const PrimeField& F = ring->field();
  std::vector<FreeElement> kept;
  std::size_t i = 0;
  while (i < graded.size()) {
    const int D = graded[i].first;
    std::optional<Submodule> lower;
    if (!kept.empty()) lower = buchberger(Submodule(ring, rank, kept));
    std::vector<FreeElement> echelon;
    for (; i < graded.size() && graded[i].first == D; ++i) {
      FreeElement v = lower ? normal_form(graded[i].second, *lower) : graded[i].second;
      std::size_t idx = 0;
      while (idx < v.terms().size()) {
        const VectorTerm t = v.terms()[idx];
        const FreeElement* hit = nullptr;
        for (const auto& e : echelon) {
          const VectorTerm& l = e.terms().front();
          if (l.component == t.component && l.monomial == t.monomial) {
            hit = &e;
            break;
          }
        }
        if (hit) v = v - hit->scaled(t.coeff);
        else ++idx;
      }
      if (v.is_zero()) continue;
      echelon.push_back(v.scaled(F.inv(v.terms().front().coeff)));
      kept.push_back(std::move(graded[i].second));
    }
  }
  return kept;
}

inline bool all_homogeneous(const std::vector<FreeElement>& vs, const std::vector<int>& shifts) {
  return std::all_of(vs.begin(), vs.end(),
                     [&](const FreeElement& v) { return v.is_homogeneous(shifts); });
}

}  // namespace detail

inline PresentedModule minimalize(const PresentedModule& M) {
  detail::DenseMatrix A = detail::to_dense(M.ring(), M.rows(), M.relations());
  std::vector<int> row_degrees = M.row_degrees();
  std::size_t cols = M.cols();
  while (auto unit = detail::find_unit(A)) {
    detail::eliminate_unit(A, unit->first, unit->second);
    row_degrees.erase(row_degrees.begin() + static_cast<std::ptrdiff_t>(unit->first));
    --cols;
  }
  std::size_t rows = row_degrees.size();
  std::vector<FreeElement> rels = detail::from_dense(M.ring(), rows, A, cols);
  if (detail::all_homogeneous(rels, row_degrees))
    rels = detail::prune_generators(M.ring(), rows, std::move(rels), row_degrees);
  PresentedModule out(M.ring(), rows, std::move(rels), std::move(row_degrees));
  out.minimal_ = true;
  return out;
}

inline std::size_t min_gens(const PresentedModule& M) { return minimalize(M).rows(); }

inline bool is_zero_module(const PresentedModule& M) { return min_gens(M) == 0; }

/// Krull dimension; -1 for the zero module.
inline int krull_dim(const PresentedModule& M) {
  if (M.rows() == 0) return -1;
  return krull_dim_quotient(M.relation_module());
}

inline std::optional<std::uint64_t> length(const PresentedModule& M) {
  if (M.rows() == 0) return 0;
  return k_dim_quotient(M.relation_module());
}

inline std::uint64_t hilbert_function(const PresentedModule& M, int degree) {
  if (M.rows() == 0) return 0;
  return hilbert_function(M.relation_module(), degree, M.row_degrees());
}

/// The submodule of `parent` generated by H, presented on H's generators:
/// relations are { a : sum a_i h_i in image of the presentation }.
inline PresentedModule present_submodule(const PresentedModule& parent, const SubmoduleHandle& H) {
  if (H.ambient_rank != parent.rows()) throw std::invalid_argument("handle does not match parent");
  Submodule kernel = kernel_modulo(H.generators, parent.relation_module());
  std::vector<int> degrees;
  for (const auto& h : H.generators) degrees.push_back(h.is_zero() ? 0 : h.degree(parent.row_degrees()));
  return PresentedModule(parent.ring(), H.generators.size(), kernel.generators(),
                         std::move(degrees));
}

/// parent / H, presented by appending H's vectors as relations.
inline PresentedModule present_quotient(const PresentedModule& parent, const SubmoduleHandle& H) {
  if (H.ambient_rank != parent.rows()) throw std::invalid_argument("handle does not match parent");
  std::vector<FreeElement> rels = parent.relations();
  for (const auto& h : H.generators) rels.push_back(h);
  return PresentedModule(parent.ring(), parent.rows(), std::move(rels), parent.row_degrees());
}

struct Subquotient {
  PresentedModule submodule;
  PresentedModule quotient;
};

inline Subquotient present_subquotient(const PresentedModule& parent, const SubmoduleHandle& H) {
  return {present_submodule(parent, H), present_quotient(parent, H)};
}

/// M / (x_1..x_s) M.
inline PresentedModule quotient_by_elements(const PresentedModule& M,
                                            const std::vector<Polynomial>& xs) {
  SubmoduleHandle h{M.rows(), {}};
  for (const auto& x : xs)
    for (std::size_t i = 0; i < M.rows(); ++i)
      h.generators.push_back(FreeElement::from_polynomial(x, M.rows(), i));
  return present_quotient(M, h);
}

/// Maps a vector a in S^k (coordinates w.r.t. H's generators) to the
/// parent's ambient free module.
inline FreeElement pushforward(const FreeElement& a, const PresentedModule& parent,
                               const SubmoduleHandle& H) {
  return combine(a, H.generators, parent.ring(), parent.rows());
}

/// Minimal graded free resolution: maps[i] is d_{i+1} : F_{i+1} -> F_i as
/// relation columns in S^{rank F_i}.
struct Resolution {
  RingPtr ring;
  std::vector<std::size_t> ranks;          // rank F_0, rank F_1, ...
  std::vector<std::vector<int>> degrees;   // generator degrees of each F_i
  std::vector<std::vector<FreeElement>> maps;

  std::size_t length() const { return maps.size(); }
  std::vector<std::size_t> betti() const { return ranks; }
};

inline Resolution free_resolution(const PresentedModule& M, std::size_t max_len) {
  PresentedModule P = minimalize(M);
  Resolution res{M.ring(), {P.rows()}, {P.row_degrees()}, {}};
  if (P.rows() == 0 || P.cols() == 0) return res;

  const std::size_t n = M.ring()->nvars();
  std::vector<FreeElement> cur = P.relations();
  std::size_t cur_rows = P.rows();
  std::vector<int> cur_row_degrees = P.row_degrees();
  const std::size_t limit = std::min(max_len, n);

  while (!cur.empty() && res.maps.size() < limit) {
    std::vector<int> col_degrees;
    for (const auto& v : cur) col_degrees.push_back(v.degree(cur_row_degrees));

    Submodule syz = syzygies(M.ring(), cur_rows, cur);
    detail::DenseMatrix K = detail::to_dense(M.ring(), cur.size(), syz.generators());
    std::size_t kcols = syz.generators().size();
    while (auto unit = detail::find_unit(K)) {
      // column unit->first of `cur` is redundant
      detail::eliminate_unit(K, unit->first, unit->second);
      cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(unit->first));
      col_degrees.erase(col_degrees.begin() + static_cast<std::ptrdiff_t>(unit->first));
      --kcols;
    }
    res.maps.push_back(cur);
    res.ranks.push_back(cur.size());
    res.degrees.push_back(col_degrees);

    std::vector<FreeElement> next;
    for (auto& v : detail::from_dense(M.ring(), cur.size(), K, kcols))
      if (!v.is_zero()) next.push_back(std::move(v));
    if (detail::all_homogeneous(next, col_degrees))
      next = detail::prune_generators(M.ring(), cur.size(), std::move(next), col_degrees);
    cur_rows = cur.size();
    cur_row_degrees = col_degrees;
    cur = std::move(next);
  }
  return res;
}

inline std::size_t projective_dimension(const PresentedModule& M) {
  return free_resolution(M, M.ring()->nvars()).length();
}

/// Auslander-Buchsbaum: depth = n - pd.
inline int depth(const PresentedModule& M) {
  Resolution res = free_resolution(M, M.ring()->nvars());
  if (res.ranks[0] == 0) throw std::domain_error("depth of the zero module");
  return static_cast<int>(M.ring()->nvars()) - static_cast<int>(res.length());
}

/// Ext^j_S(M, S) from a precomputed minimal resolution of M, as
/// ker(d_{j+1}^T) / im(d_j^T), minimalized.
inline PresentedModule ext_module(const Resolution& res, std::size_t j) {
  const RingPtr& ring = res.ring;
  if (j > ring->nvars()) throw std::out_of_range("Ext index out of range");
  if (j >= res.ranks.size() || res.ranks[j] == 0) return PresentedModule::free(ring, 0);

  const std::size_t rj = res.ranks[j];
  std::vector<int> dual_degrees;
  for (int d : res.degrees[j]) dual_degrees.push_back(-d);

  SubmoduleHandle kernel{rj, {}};
  if (j < res.maps.size()) {
    auto columns = detail::transpose_columns(ring, rj, res.maps[j]);
    kernel.generators = syzygies(ring, res.ranks[j + 1], columns).generators();
  } else {
    kernel = all_generators(PresentedModule::free(ring, rj));
  }

  std::vector<FreeElement> image;
  if (j >= 1) image = detail::transpose_columns(ring, res.ranks[j - 1], res.maps[j - 1]);
  PresentedModule parent(ring, rj, std::move(image), dual_degrees);
  return minimalize(present_submodule(parent, kernel));
}

inline PresentedModule ext_module(const PresentedModule& M, std::size_t j) {
  if (j > M.ring()->nvars()) throw std::out_of_range("Ext index out of range");
  return ext_module(free_resolution(M, M.ring()->nvars()), j);
}

/// Ann_S(M) = intersection over generators e_i of (relations :_S e_i).
inline Submodule annihilator(const PresentedModule& M) {
  if (M.rows() == 0) return buchberger(Submodule::whole(M.ring(), 1));
  return module_quotient(M.relation_module(), Submodule::whole(M.ring(), M.rows()));
}

/// Annihilator of the submodule generated by H inside M.
inline Submodule annihilator(const PresentedModule& M, const SubmoduleHandle& H) {
  return module_quotient(M.relation_module(), Submodule(M.ring(), M.rows(), H.generators));
}

/// True when every generator of H lies in the relations of M.
inline bool is_zero_handle(const PresentedModule& M, const SubmoduleHandle& H) {
  Submodule rel = buchberger(M.relation_module());
  for (const auto& h : H.generators)
    if (!contains(rel, h)) return false;
  return true;
}

}  // namespace seqcm
