#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace seqcm {

namespace detail {

using Terms = std::vector<VectorTerm>;

/// Module monomial order. Components are first compared by block (lower
/// block ranks higher), then term-over-position. With a single block this is
/// plain TOP, the storage order of FreeElement.
struct ModuleOrder {
  const Ring* ring = nullptr;
  std::vector<std::uint8_t> block;

  std::strong_ordering compare(const Monomial& a, std::uint32_t ca, const Monomial& b,
                               std::uint32_t cb) const {
    if (!block.empty() && block[ca] != block[cb]) return block[cb] <=> block[ca];
    return top_compare(*ring, a, ca, b, cb);
  }
  std::strong_ordering compare(const VectorTerm& a, const VectorTerm& b) const {
    return compare(a.monomial, a.component, b.monomial, b.component);
  }
  bool is_plain() const {
    return std::all_of(block.begin(), block.end(), [](auto b) { return b == 0; });
  }
};

/// out = f[from..] - c * m * g, merged in order.
inline Terms sub_multiple(const Terms& f, std::size_t from, Coeff c, const Monomial& m,
                          const Terms& g, const ModuleOrder& ord, const PrimeField& F) {
  Terms out;
  out.reserve(f.size() - from + g.size());
  Coeff nc = F.neg(c);
  std::size_t i = from, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    VectorTerm gt{g[j].monomial * m, g[j].component, F.mul(g[j].coeff, nc)};
    if (i == f.size()) {
      out.push_back(gt);
      ++j;
      continue;
    }
    auto cmp = ord.compare(f[i], gt);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back(gt);
      ++j;
    } else {
      Coeff s = F.add(f[i].coeff, gt.coeff);
      if (s) out.push_back({f[i].monomial, f[i].component, s});
      ++i;
      ++j;
    }
  }
  return out;
}

inline void make_monic(Terms& t, const PrimeField& F) {
  if (t.empty() || t.front().coeff == 1) return;
  Coeff inv = F.inv(t.front().coeff);
  for (auto& x : t) x.coeff = F.mul(x.coeff, inv);
}

inline unsigned max_degree(const Terms& t) {
  unsigned d = 0;
  for (const auto& x : t) d = std::max<unsigned>(d, x.monomial.degree);
  return d;
}

/// Full reduction of `f` modulo a list of monic elements whose lead terms are
/// given by `leads`; `skip` excludes one element (used for interreduction).
inline Terms reduce(Terms f, const std::vector<const Terms*>& basis, const ModuleOrder& ord,
                    const PrimeField& F, const Terms* skip = nullptr) {
  Terms result;
  std::size_t head = 0;
  while (head < f.size()) {
    const VectorTerm& lt = f[head];
    const Terms* divisor = nullptr;
    for (const Terms* g : basis) {
      if (g == skip) continue;
      const VectorTerm& gl = g->front();
      if (gl.component == lt.component && gl.monomial.divides(lt.monomial)) {
        divisor = g;
        break;
      }
    }
    if (!divisor) {
      result.push_back(lt);
      ++head;
      continue;
    }
    Monomial m = lt.monomial.divided_by(divisor->front().monomial);
    f = sub_multiple(f, head, lt.coeff, m, *divisor, ord, F);
    head = 0;
  }
  return result;
}

/// Buchberger's algorithm with Gebauer-Moeller pair management (chain
/// criterion always, coprime-lead criterion only in rank 1) and sugar-based
/// normal selection. Returns the reduced GB sorted by descending lead term.
class BuchbergerRun {
 public:
  BuchbergerRun(const Ring& ring, std::size_t rank, std::vector<std::uint8_t> blocks)
      : field_(ring.field()), rank_(rank) {
    order_.ring = &ring;
    order_.block = std::move(blocks);
  }

  const ModuleOrder& order() const { return order_; }

  std::vector<Terms> run(std::vector<Terms> gens) {
    std::sort(gens.begin(), gens.end(), [&](const Terms& a, const Terms& b) {
      if (a.empty() || b.empty()) return !a.empty() && b.empty();
      unsigned da = max_degree(a), db = max_degree(b);
      if (da != db) return da < db;
      return order_.compare(a.front(), b.front()) < 0;
    });
    for (auto& g : gens) {
      if (g.empty()) continue;
      unsigned sugar = max_degree(g);
      Terms h = reduce(std::move(g), active(), order_, field_);
      if (!h.empty()) insert(std::move(h), sugar);
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const Pair& a = pairs_[k];
        const Pair& b = pairs_[best];
        if (a.sugar < b.sugar ||
            (a.sugar == b.sugar && order_.compare(a.lcm, a.comp, b.lcm, b.comp) < 0))
          best = k;
      }
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      Terms s = spair(p);
      Terms h = reduce(std::move(s), active(), order_, field_);
      if (!h.empty()) insert(std::move(h), p.sugar);
    }
    return finish();
  }

 private:
  struct Elem {
    Terms terms;
    unsigned sugar;
    bool alive;
  };
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t comp;
    unsigned sugar;
  };

  std::vector<const Terms*> active() const {
    std::vector<const Terms*> out;
    for (const auto& e : elems_)
      if (e.alive) out.push_back(&e.terms);
    return out;
  }

  const VectorTerm& lead(std::size_t i) const { return elems_[i].terms.front(); }

  Pair make_pair(std::size_t i, std::size_t j) const {
    Monomial l = lcm(lead(i).monomial, lead(j).monomial);
    unsigned si = elems_[i].sugar + l.degree - lead(i).monomial.degree;
    unsigned sj = elems_[j].sugar + l.degree - lead(j).monomial.degree;
    return {i, j, l, lead(i).component, std::max(si, sj)};
  }

  Terms spair(const Pair& p) const {
    const Terms& a = elems_[p.i].terms;
    const Terms& b = elems_[p.j].terms;
    Monomial ma = p.lcm.divided_by(a.front().monomial);
    Monomial mb = p.lcm.divided_by(b.front().monomial);
    Terms am;
    am.reserve(a.size());
    for (const auto& t : a) am.push_back({t.monomial * ma, t.component, t.coeff});
    // both monic: ma*a - mb*b cancels the lead
    return sub_multiple(am, 0, 1, mb, b, order_, field_);
  }

  void insert(Terms h, unsigned sugar) {
    make_monic(h, field_);
    std::size_t k = elems_.size();
    elems_.push_back({std::move(h), sugar, true});
    const VectorTerm& hl = lead(k);
    const bool ideal_case = rank_ == 1;

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < k; ++g)
      if (elems_[g].alive && lead(g).component == hl.component)
        candidates.push_back(make_pair(g, k));

    auto coprime = [&](const Pair& p) {
      return ideal_case && lead(p.i).monomial.coprime(lead(p.j).monomial);
    };

    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      if (coprime(p)) {
        kept.push_back(p);
        continue;
      }
      bool redundant = false;
      for (std::size_t b = a + 1; b < candidates.size() && !redundant; ++b)
        redundant = candidates[b].lcm.divides(p.lcm);
      for (std::size_t b = 0; b < kept.size() && !redundant; ++b)
        redundant = kept[b].lcm.divides(p.lcm);
      if (!redundant) kept.push_back(p);
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (const Pair& p : pairs_) {
      if (p.comp == hl.component && hl.monomial.divides(p.lcm)) {
        Monomial l1 = lcm(lead(p.i).monomial, hl.monomial);
        Monomial l2 = lcm(lead(p.j).monomial, hl.monomial);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
      }
      next.push_back(p);
    }
    for (const Pair& p : kept)
      if (!coprime(p)) next.push_back(p);
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < k; ++g)
      if (elems_[g].alive && lead(g).component == hl.component &&
          hl.monomial.divides(lead(g).monomial))
        elems_[g].alive = false;
  }

  std::vector<Terms> finish() {
    std::vector<Terms> basis;
    for (auto& e : elems_)
      if (e.alive) basis.push_back(e.terms);
    std::vector<const Terms*> ptrs;
    for (const auto& b : basis) ptrs.push_back(&b);
    for (auto& b : basis) {
      Terms tail(b.begin() + 1, b.end());
      Terms red = reduce(std::move(tail), ptrs, order_, field_, &b);
      red.insert(red.begin(), b.front());
      b = std::move(red);
    }
    std::sort(basis.begin(), basis.end(), [&](const Terms& a, const Terms& b) {
      return order_.compare(a.front(), b.front()) > 0;
    });
    return basis;
  }

  const PrimeField& field_;
  std::size_t rank_;
  ModuleOrder order_;
  std::vector<Elem> elems_;
  std::vector<Pair> pairs_;
};

inline Terms to_order(const FreeElement& v, const ModuleOrder& ord) {
  Terms t = v.terms();
  if (!ord.is_plain())
    std::stable_sort(t.begin(), t.end(),
                     [&](const VectorTerm& a, const VectorTerm& b) { return ord.compare(a, b) > 0; });
  return t;
}

inline FreeElement from_order(const RingPtr& ring, std::size_t rank, Terms t,
                              const ModuleOrder& ord) {
  if (!ord.is_plain()) return FreeElement::from_terms(ring, rank, std::move(t));
  return FreeElement::from_sorted_terms(ring, rank, std::move(t));
}

}  // namespace detail

/// Submodule of the free module S^rank given by generators, with an optional
/// cached reduced Groebner basis (TOP order). rank == 1 encodes an ideal.
class Submodule {
 public:
  Submodule() = default;
  Submodule(RingPtr ring, std::size_t rank, std::vector<FreeElement> gens = {})
      : ring_(std::move(ring)), rank_(rank) {
    for (auto& g : gens) {
      require_same_ring(ring_, g.ring());
      if (g.rank() != rank_) throw std::invalid_argument("generator rank mismatch");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  static Submodule ideal(RingPtr ring, const std::vector<Polynomial>& gens) {
    std::vector<FreeElement> v;
    for (const auto& g : gens) v.push_back(FreeElement::from_polynomial(g, 1, 0));
    return Submodule(std::move(ring), 1, std::move(v));
  }

  /// The whole free module S^rank.
  static Submodule whole(RingPtr ring, std::size_t rank) {
    std::vector<FreeElement> v;
    for (std::size_t i = 0; i < rank; ++i) v.push_back(FreeElement::unit(ring, rank, i));
    return Submodule(std::move(ring), rank, std::move(v));
  }

  /// The homogeneous maximal ideal (x_1, ..., x_n).
  static Submodule maximal_ideal(const RingPtr& ring) {
    std::vector<Polynomial> v;
    for (std::size_t i = 0; i < ring->nvars(); ++i) v.push_back(Polynomial::variable(ring, i));
    return ideal(ring, v);
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<FreeElement>& generators() const& { return gens_; }
  std::vector<FreeElement> generators() && { return std::move(gens_); }
  bool has_gb() const { return gb_.has_value(); }
  const std::vector<FreeElement>& gb() const& {
    if (!gb_) throw std::logic_error("Groebner basis not computed");
    return *gb_;
  }
  std::vector<FreeElement> gb() && {
    if (!gb_) throw std::logic_error("Groebner basis not computed");
    return std::move(*gb_);
  }

  std::vector<Polynomial> ideal_generators() const {
    if (rank_ != 1) throw std::logic_error("not an ideal");
    std::vector<Polynomial> out;
    for (const auto& g : gens_) out.push_back(g.component(0));
    return out;
  }

 /// Wraps a list that is already a reduced monic Groebner basis in TOP
  /// order (as produced by kernel_modulo); no check is made.
  static Submodule from_groebner_basis(RingPtr ring, std::size_t rank,
                                       std::vector<FreeElement> gb) {
    Submodule s(std::move(ring), rank, gb);
    s.gb_ = std::move(gb);
    return s;
  }


 private:
  friend Submodule buchberger(const Submodule& gens);

  RingPtr ring_;
  std::size_t rank_ = 0;
  std::vector<FreeElement> gens_;
  std::optional<std::vector<FreeElement>> gb_;
};

/// Computes the reduced Groebner basis; the result keeps the generators and
/// carries the basis. Idempotent.
inline Submodule buchberger(const Submodule& U) {
  if (U.has_gb()) return U;
  detail::BuchbergerRun run(*U.ring(), U.rank(), {});
  std::vector<detail::Terms> gens;
  for (const auto& g : U.generators()) gens.push_back(g.terms());
  auto basis = run.run(std::move(gens));
  Submodule out = U;
  std::vector<FreeElement> gb;
  for (auto& b : basis) gb.push_back(FreeElement::from_sorted_terms(U.ring(), U.rank(), std::move(b)));
  out.gb_ = std::move(gb);
  return out;
}

inline Submodule with_gb(const Submodule& U) { return buchberger(U); }

inline FreeElement normal_form(const FreeElement& v, const Submodule& U) {
  require_same_ring(v.ring(), U.ring());
  if (v.rank() != U.rank()) throw std::invalid_argument("ambient mismatch in normal_form");
  Submodule G = buchberger(U);
  detail::ModuleOrder ord{U.ring().get(), {}};
  std::vector<const detail::Terms*> basis;
  for (const auto& g : G.gb()) basis.push_back(&g.terms());
  auto r = detail::reduce(v.terms(), basis, ord, U.ring()->field());
  return FreeElement::from_sorted_terms(v.ring(), v.rank(), std::move(r));
}

inline Polynomial normal_form(const Polynomial& f, const Submodule& ideal) {
  return normal_form(FreeElement::from_polynomial(f, 1, 0), ideal).component(0);
}

inline bool contains(const Submodule& U, const FreeElement& v) {
  return normal_form(v, U).is_zero();
}

inline bool is_subset(const Submodule& U, const Submodule& V) {
  Submodule G = buchberger(V);
  for (const auto& g : U.generators())
    if (!contains(G, g)) return false;
  return true;
}

/// Equality of submodules via their reduced monic Groebner bases.
inline bool same_submodule(const Submodule& U, const Submodule& V) {
  if (U.rank() != V.rank()) return false;
  return buchberger(U).gb() == buchberger(V).gb();
}

inline bool is_zero_submodule(const Submodule& U) { return U.generators().empty(); }

/// The S-vector of two elements with lead terms in the same component; zero
/// vector otherwise.
inline FreeElement s_vector(const FreeElement& a, const FreeElement& b) {
  FreeElement zero(a.ring(), a.rank());
  if (a.is_zero() || b.is_zero() || a.lead().component != b.lead().component) return zero;
  const auto& F = a.ring()->field();
  Monomial l = lcm(a.lead().monomial, b.lead().monomial);
  FreeElement ta = a.times_term(l.divided_by(a.lead().monomial), F.inv(a.lead().coeff));
  FreeElement tb = b.times_term(l.divided_by(b.lead().monomial), F.inv(b.lead().coeff));
  return ta - tb;
}

/// { a in S^k : sum_i a_i h_i in U } for h_1..h_k in the ambient of U.
/// Computed by one elimination Groebner basis in S^rank(U) + S^k where the
/// first block dominates; the result carries its reduced GB.
inline Submodule kernel_modulo(const std::vector<FreeElement>& hs, const Submodule& U) {
  const RingPtr& ring = U.ring();
  const std::size_t g = U.rank();
  const std::size_t k = hs.size();
  std::vector<std::uint8_t> blocks(g + k, 0);
  for (std::size_t i = g; i < g + k; ++i) blocks[i] = 1;
  detail::BuchbergerRun run(*ring, g + k, blocks);
  const auto& ord = run.order();

  std::vector<detail::Terms> gens;
  for (std::size_t i = 0; i < k; ++i) {
    if (hs[i].rank() != g) throw std::invalid_argument("ambient mismatch in kernel_modulo");
    detail::Terms t = hs[i].terms();
    t.push_back({ring->one(), static_cast<std::uint32_t>(g + i), 1});
    std::stable_sort(t.begin(), t.end(), [&](const VectorTerm& a, const VectorTerm& b) {
      return ord.compare(a, b) > 0;
    });
    gens.push_back(std::move(t));
  }
  const auto& ugens = U.has_gb() ? U.gb() : U.generators();
  for (const auto& u : ugens) gens.push_back(u.terms());

  auto basis = run.run(std::move(gens));
  std::vector<FreeElement> out;
  for (auto& b : basis) {
    if (b.front().component < g) continue;
    detail::Terms t;
    t.reserve(b.size());
    for (const auto& x : b)
      t.push_back({x.monomial, static_cast<std::uint32_t>(x.component - g), x.coeff});
    out.push_back(FreeElement::from_sorted_terms(ring, k, std::move(t)));
  }
  std::sort(out.begin(), out.end(), [&](const FreeElement& a, const FreeElement& b) {
    return top_compare(*ring, a.lead().monomial, a.lead().component, b.lead().monomial,
                       b.lead().component) > 0;
  });
  return Submodule::from_groebner_basis(ring, k, std::move(out));
}

/// First syzygy module of exactly the generator list of U.
inline Submodule syzygies(const Submodule& U) {
  return kernel_modulo(U.generators(), Submodule(U.ring(), U.rank()));
}

inline Submodule syzygies(const RingPtr& ring, std::size_t rank,
                          const std::vector<FreeElement>& columns) {
  return kernel_modulo(columns, Submodule(ring, rank));
}

/// sum_i a_i v_i for a in S^k.
inline FreeElement combine(const FreeElement& a, const std::vector<FreeElement>& vs,
                           const RingPtr& ring, std::size_t rank) {
  FreeElement out(ring, rank);
  auto comps = a.components();
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (!comps[i].is_zero()) out = out + comps[i] * vs[i];
  return out;
}

inline Submodule intersect(const Submodule& U, const Submodule& V);

/// Ideal (U :_S V) = { f : f V subset U } for submodules of the same free module.
inline Submodule module_quotient(const Submodule& U, const Submodule& V) {
  std::optional<Submodule> result;
  Submodule G = buchberger(U);
  for (const auto& v : V.generators()) {
    Submodule part = kernel_modulo({v}, G);
    result = result ? intersect(*result, part) : part;
  }
  if (!result) return buchberger(Submodule::whole(U.ring(), 1));
  return *result;
}

inline Submodule intersect(const Submodule& U, const Submodule& V) {
  require_same_ring(U.ring(), V.ring());
  if (U.rank() != V.rank()) throw std::invalid_argument("ambient mismatch in intersect");
  Submodule kernel = kernel_modulo(U.generators(), V);
  std::vector<FreeElement> gens;
  for (const auto& a : kernel.generators())
    gens.push_back(combine(a, U.generators(), U.ring(), U.rank()));
  return buchberger(Submodule(U.ring(), U.rank(), std::move(gens)));
}

/// (U :_F f) = { v : f v in U }.
inline Submodule colon(const Submodule& U, const Polynomial& f) {
  if (f.is_zero()) return buchberger(Submodule::whole(U.ring(), U.rank()));
  std::vector<FreeElement> hs;
  for (std::size_t i = 0; i < U.rank(); ++i)
    hs.push_back(FreeElement::from_polynomial(f, U.rank(), i));
  return kernel_modulo(hs, buchberger(U));
}

/// (U :_F J), intersected over the generators of the ideal J.
inline Submodule colon(const Submodule& U, const Submodule& J) {
  if (J.rank() != 1) throw std::invalid_argument("colon requires an ideal");
  std::optional<Submodule> acc;
  Submodule G = buchberger(U);
  for (const auto& f : J.generators()) {
    Submodule part = colon(G, f.component(0));
    acc = acc ? intersect(*acc, part) : part;
  }
  if (!acc) return buchberger(Submodule::whole(U.ring(), U.rank()));
  return *acc;
}

struct SaturationResult {
  Submodule module;
  int exponent;
};

/// (U :_F J^inf) by iterated colon; `exponent` is the first k with V_{k+1} = V_k.
inline SaturationResult saturate(const Submodule& U, const Submodule& J) {
  Submodule current = buchberger(U);
  for (int k = 0;; ++k) {
    Submodule next = colon(current, J);
    if (same_submodule(next, current)) return {current, k};
    current = next;
  }
}

namespace detail {

/// Dimension of S / (monomial ideal); -1 when the ideal contains 1.
inline int monomial_ideal_dim(const std::vector<Monomial>& gens, std::size_t n) {
  for (const auto& m : gens)
    if (m.is_unit()) return -1;
  std::vector<std::uint32_t> supports;
  for (const auto& m : gens) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m.exponents[i]) s |= 1u << i;
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    int size = __builtin_popcount(set);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](std::uint32_t s) { return (s & ~set) == 0; });
    if (independent) best = size;
  }
  return best;
}

inline std::vector<std::vector<Monomial>> leads_by_component(const Submodule& G) {
  std::vector<std::vector<Monomial>> leads(G.rank());
  for (const auto& g : G.gb()) leads[g.lead().component].push_back(g.lead().monomial);
  return leads;
}

inline bool is_standard(const Monomial& m, const std::vector<Monomial>& leads) {
  return std::none_of(leads.begin(), leads.end(),
                      [&](const Monomial& l) { return l.divides(m); });
}

inline void monomials_of_degree(std::size_t n, unsigned degree, std::size_t var, Monomial& cur,
                                std::vector<Monomial>& out) {
  if (var + 1 == n) {
    cur.exponents[var] = static_cast<std::uint16_t>(degree);
    cur.degree += degree;
    out.push_back(cur);
    cur.degree -= degree;
    cur.exponents[var] = 0;
    return;
  }
  for (unsigned e = 0; e <= degree; ++e) {
    cur.exponents[var] = static_cast<std::uint16_t>(e);
    cur.degree += e;
    monomials_of_degree(n, degree - e, var + 1, cur, out);
    cur.degree -= e;
  }
  cur.exponents[var] = 0;
}

}  // namespace detail

/// All monomials of the given total degree in the ring's variables.
inline std::vector<Monomial> monomials_of_degree(const Ring& R, unsigned degree) {
  std::vector<Monomial> out;
  Monomial cur = R.one();
  detail::monomials_of_degree(R.nvars(), degree, 0, cur, out);
  return out;
}

/// Krull dimension of F/U (-1 for the zero module), read off the lead terms
/// component by component.
inline int krull_dim_quotient(const Submodule& U) {
  Submodule G = buchberger(U);
  auto leads = detail::leads_by_component(G);
  int dim = -1;
  for (const auto& l : leads)
    dim = std::max(dim, detail::monomial_ideal_dim(l, U.ring()->nvars()));
  return dim;
}

struct StandardMonomial {
  Monomial monomial;
  std::uint32_t component;
};

/// The standard monomial basis of F/U, which must have finite length.
inline std::vector<StandardMonomial> standard_basis(const Submodule& U) {
  Submodule G = buchberger(U);
  if (krull_dim_quotient(G) > 0) throw std::domain_error("quotient is not of finite length");
  auto leads = detail::leads_by_component(G);
  const std::size_t n = U.ring()->nvars();
  std::vector<StandardMonomial> out;
  for (std::uint32_t c = 0; c < U.rank(); ++c) {
    if (!detail::is_standard(U.ring()->one(), leads[c])) continue;
    std::unordered_set<Monomial, MonomialHash> seen{U.ring()->one()};
    std::vector<Monomial> frontier{U.ring()->one()};
    while (!frontier.empty()) {
      std::vector<Monomial> next;
      for (const auto& m : frontier) {
        out.push_back({m, c});
        for (std::size_t i = 0; i < n; ++i) {
          Monomial mm = m * U.ring()->var(i);
          if (seen.count(mm) || !detail::is_standard(mm, leads[c])) continue;
          seen.insert(mm);
          next.push_back(mm);
        }
      }
      frontier = std::move(next);
    }
  }
  return out;
}

/// dim_k F/U, or nullopt (infinite) when F/U has positive Krull dimension.
inline std::optional<std::uint64_t> k_dim_quotient(const Submodule& U) {
  Submodule G = buchberger(U);
  if (krull_dim_quotient(G) > 0) return std::nullopt;
  return standard_basis(G).size();
}

/// dim_k of the degree-`degree` part of F/U where e_i has degree shifts[i].
inline std::uint64_t hilbert_function(const Submodule& U, int degree,
                                      const std::vector<int>& shifts = {}) {
  Submodule G = buchberger(U);
  auto leads = detail::leads_by_component(G);
  std::uint64_t count = 0;
  for (std::size_t c = 0; c < U.rank(); ++c) {
    int d = degree - (shifts.empty() ? 0 : shifts[c]);
    if (d < 0) continue;
    for (const auto& m : monomials_of_degree(*U.ring(), static_cast<unsigned>(d)))
      if (detail::is_standard(m, leads[c])) ++count;
  }
  return count;
}

}  // namespace seqcm
