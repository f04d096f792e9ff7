#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace seqcm {

struct Term {
  Monomial monomial;
  Coeff coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw std::invalid_argument("ring mismatch");
}

namespace detail {

inline void append_coeff(std::string& out, const PrimeField& field, Coeff c,
                         bool first, bool is_unit_monomial) {
  std::int64_t v = field.to_signed(c);
  if (v < 0) {
    out += first ? "-" : " - ";
    v = -v;
  } else if (!first) {
    out += " + ";
  }
  if (v != 1 || is_unit_monomial) {
    out += std::to_string(v);
    if (!is_unit_monomial) out += '*';
  }
}

}  // namespace detail

/// Sparse polynomial in canonical form: terms strictly descending in the ring
/// order with nonzero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, std::int64_t c) {
    Polynomial p(ring);
    Coeff v = ring->field().from_int(c);
    if (v) p.terms_.push_back({ring->one(), v});
    return p;
  }
  static Polynomial variable(RingPtr ring, std::size_t i) {
    Polynomial p(ring);
    p.terms_.push_back({ring->var(i), 1});
    return p;
  }
  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1) {
    Polynomial p(ring);
    if (c % ring->characteristic()) p.terms_.push_back({m, c % ring->characteristic()});
    return p;
  }

  /// Canonicalizes arbitrary (unsorted, possibly repeated) terms.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    const auto& F = ring->field();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return ring->compare(a.monomial, b.monomial) > 0;
    });
    Polynomial p(ring);
    for (auto& t : terms) {
      Coeff c = t.coeff % F.characteristic();
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coeff = F.add(p.terms_.back().coeff, c);
        if (!p.terms_.back().coeff) p.terms_.pop_back();
      } else if (c) {
        p.terms_.push_back({t.monomial, c});
      }
    }
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }

  /// Total degree of the highest-degree term; -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree));
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.monomial.degree != terms_.front().monomial.degree) return false;
    return true;
  }

  bool is_constant() const { return terms_.size() == 1 && terms_[0].monomial.is_unit(); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial p = *this;
    Coeff inv = ring_->field().inv(lead().coeff);
    for (auto& t : p.terms_) t.coeff = ring_->field().mul(t.coeff, inv);
    return p;
  }

  Polynomial scaled(Coeff c) const {
    Polynomial p(ring_);
    c %= ring_->characteristic();
    if (!c) return p;
    p.terms_ = terms_;
    for (auto& t : p.terms_) t.coeff = ring_->field().mul(t.coeff, c);
    return p;
  }

  Polynomial times_monomial(const Monomial& m) const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.monomial = t.monomial * m;
    return p;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    return combine(f, g, false);
  }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    return combine(f, g, true);
  }
  Polynomial operator-() const { return scaled(ring_->field().neg(1)); }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring_, g.ring_);
    std::vector<Term> out;
    out.reserve(f.size() * g.size());
    const auto& F = f.ring_->field();
    for (const auto& a : f.terms_)
      for (const auto& b : g.terms_)
        out.push_back({a.monomial * b.monomial, F.mul(a.coeff, b.coeff)});
    return from_terms(f.ring_, std::move(out));
  }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    return same_ring(f.ring_, g.ring_) && f.terms_ == g.terms_;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      detail::append_coeff(out, ring_->field(), t.coeff, first, t.monomial.is_unit());
      if (!t.monomial.is_unit()) out += ring_->monomial_string(t.monomial);
      first = false;
    }
    return out;
  }

 private:
  static Polynomial combine(const Polynomial& f, const Polynomial& g, bool subtract) {
    require_same_ring(f.ring_, g.ring_);
    const Ring& R = *f.ring_;
    const auto& F = R.field();
    Polynomial out(f.ring_);
    out.terms_.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
      if (j == g.size() ||
          (i < f.size() && R.compare(f.terms_[i].monomial, g.terms_[j].monomial) > 0)) {
        out.terms_.push_back(f.terms_[i++]);
      } else if (i == f.size() ||
                 R.compare(f.terms_[i].monomial, g.terms_[j].monomial) < 0) {
        Coeff c = subtract ? F.neg(g.terms_[j].coeff) : g.terms_[j].coeff;
        out.terms_.push_back({g.terms_[j++].monomial, c});
      } else {
        Coeff c = subtract ? F.sub(f.terms_[i].coeff, g.terms_[j].coeff)
                           : F.add(f.terms_[i].coeff, g.terms_[j].coeff);
        if (c) out.terms_.push_back({f.terms_[i].monomial, c});
        ++i;
        ++j;
      }
    }
    return out;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// A term c * m * e_component of a free module element.
struct VectorTerm {
  Monomial monomial;
  std::uint32_t component;
  Coeff coeff;
  friend bool operator==(const VectorTerm&, const VectorTerm&) = default;
};

/// Term-over-position comparison: monomial first, then lower component index
/// counts as larger.
inline std::strong_ordering top_compare(const Ring& R, const Monomial& a, std::uint32_t ca,
                                        const Monomial& b, std::uint32_t cb) {
  if (auto c = R.compare(a, b); c != 0) return c;
  return cb <=> ca;
}

/// Element of the free module S^rank, stored as TOP-sorted sparse terms.
class FreeElement {
 public:
  FreeElement() = default;
  FreeElement(RingPtr ring, std::size_t rank) : ring_(std::move(ring)), rank_(rank) {}

  static FreeElement unit(RingPtr ring, std::size_t rank, std::size_t i) {
    FreeElement v(ring, rank);
    if (i >= rank) throw std::out_of_range("component index out of range");
    v.terms_.push_back({ring->one(), static_cast<std::uint32_t>(i), 1});
    return v;
  }

  static FreeElement from_polynomial(const Polynomial& f, std::size_t rank, std::size_t i) {
    if (i >= rank) throw std::out_of_range("component index out of range");
    FreeElement v(f.ring(), rank);
    for (const auto& t : f.terms())
      v.terms_.push_back({t.monomial, static_cast<std::uint32_t>(i), t.coeff});
    return v;
  }

  static FreeElement from_components(RingPtr ring, const std::vector<Polynomial>& comps) {
    std::vector<VectorTerm> terms;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      require_same_ring(ring, comps[i].ring());
      for (const auto& t : comps[i].terms())
        terms.push_back({t.monomial, static_cast<std::uint32_t>(i), t.coeff});
    }
    return from_terms(std::move(ring), comps.size(), std::move(terms));
  }

  /// Canonicalizes arbitrary terms.
  static FreeElement from_terms(RingPtr ring, std::size_t rank, std::vector<VectorTerm> terms) {
    const Ring& R = *ring;
    const auto& F = R.field();
    std::sort(terms.begin(), terms.end(), [&](const VectorTerm& a, const VectorTerm& b) {
      return top_compare(R, a.monomial, a.component, b.monomial, b.component) > 0;
    });
    FreeElement v(ring, rank);
    for (auto& t : terms) {
      if (t.component >= rank) throw std::out_of_range("component index out of range");
      Coeff c = t.coeff % F.characteristic();
      if (!v.terms_.empty() && v.terms_.back().monomial == t.monomial &&
          v.terms_.back().component == t.component) {
        v.terms_.back().coeff = F.add(v.terms_.back().coeff, c);
        if (!v.terms_.back().coeff) v.terms_.pop_back();
      } else if (c) {
        v.terms_.push_back({t.monomial, t.component, c});
      }
    }
    return v;
  }

  /// Takes terms already in canonical TOP order (no validation beyond debug use).
  static FreeElement from_sorted_terms(RingPtr ring, std::size_t rank,
                                       std::vector<VectorTerm> terms) {
    FreeElement v(std::move(ring), rank);
    v.terms_ = std::move(terms);
    return v;
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<VectorTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const VectorTerm& lead() const { return terms_.front(); }

  Polynomial component(std::size_t i) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
      if (t.component == i) out.push_back({t.monomial, t.coeff});
    return Polynomial::from_terms(ring_, std::move(out));
  }

  std::vector<Polynomial> components() const {
    std::vector<std::vector<Term>> parts(rank_);
    for (const auto& t : terms_) parts[t.component].push_back({t.monomial, t.coeff});
    std::vector<Polynomial> out;
    out.reserve(rank_);
    for (auto& p : parts) out.push_back(Polynomial::from_terms(ring_, std::move(p)));
    return out;
  }

  /// Degree in the grading where e_i has degree shifts[i] (empty: all zero);
  /// -1 for the zero vector. Uses the highest-degree term.
  int degree(const std::vector<int>& shifts = {}) const {
    int d = -1;
    bool first = true;
    for (const auto& t : terms_) {
      int td = static_cast<int>(t.monomial.degree) + (shifts.empty() ? 0 : shifts[t.component]);
      if (first || td > d) d = td;
      first = false;
    }
    return d;
  }

  bool is_homogeneous(const std::vector<int>& shifts = {}) const {
    if (terms_.empty()) return true;
    auto deg = [&](const VectorTerm& t) {
      return static_cast<int>(t.monomial.degree) + (shifts.empty() ? 0 : shifts[t.component]);
    };
    int d = deg(terms_.front());
    for (const auto& t : terms_)
      if (deg(t) != d) return false;
    return true;
  }

  FreeElement scaled(Coeff c) const {
    FreeElement v(ring_, rank_);
    c %= ring_->characteristic();
    if (!c) return v;
    v.terms_ = terms_;
    for (auto& t : v.terms_) t.coeff = ring_->field().mul(t.coeff, c);
    return v;
  }

  FreeElement times_term(const Monomial& m, Coeff c) const {
    FreeElement v = scaled(c);
    for (auto& t : v.terms_) t.monomial = t.monomial * m;
    return v;
  }

  friend FreeElement operator*(const Polynomial& f, const FreeElement& v) {
    require_same_ring(f.ring(), v.ring_);
    FreeElement out(v.ring_, v.rank_);
    for (const auto& t : f.terms()) out = out + v.times_term(t.monomial, t.coeff);
    return out;
  }

  friend FreeElement operator+(const FreeElement& a, const FreeElement& b) {
    return combine(a, b, false);
  }
  friend FreeElement operator-(const FreeElement& a, const FreeElement& b) {
    return combine(a, b, true);
  }

  friend bool operator==(const FreeElement& a, const FreeElement& b) {
    return same_ring(a.ring_, b.ring_) && a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  /// Drops components whose index is not kept and renumbers the rest;
  /// keep[i] is the new index or -1.
  FreeElement remapped(const std::vector<int>& keep, std::size_t new_rank) const {
    std::vector<VectorTerm> out;
    for (const auto& t : terms_)
      if (keep[t.component] >= 0)
        out.push_back({t.monomial, static_cast<std::uint32_t>(keep[t.component]), t.coeff});
    return from_terms(ring_, new_rank, std::move(out));
  }

  std::string to_string() const {
    std::string s = "[";
    auto comps = components();
    for (std::size_t i = 0; i < comps.size(); ++i) s += (i ? ", " : "") + comps[i].to_string();
    return s + "]";
  }

 private:
  static FreeElement combine(const FreeElement& a, const FreeElement& b, bool subtract) {
    require_same_ring(a.ring_, b.ring_);
    if (a.rank_ != b.rank_) throw std::invalid_argument("free module rank mismatch");
    const Ring& R = *a.ring_;
    const auto& F = R.field();
    FreeElement out(a.ring_, a.rank_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      std::strong_ordering c = std::strong_ordering::greater;
      if (i == a.terms_.size())
        c = std::strong_ordering::less;
      else if (j < b.terms_.size())
        c = top_compare(R, a.terms_[i].monomial, a.terms_[i].component, b.terms_[j].monomial,
                        b.terms_[j].component);
      if (c > 0) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        auto t = b.terms_[j++];
        if (subtract) t.coeff = F.neg(t.coeff);
        out.terms_.push_back(t);
      } else {
        Coeff s = subtract ? F.sub(a.terms_[i].coeff, b.terms_[j].coeff)
                           : F.add(a.terms_[i].coeff, b.terms_[j].coeff);
        if (s) out.terms_.push_back({a.terms_[i].monomial, a.terms_[i].component, s});
        ++i;
        ++j;
      }
    }
    return out;
  }

  RingPtr ring_;
  std::size_t rank_ = 0;
  std::vector<VectorTerm> terms_;
};

}  // namespace seqcm
