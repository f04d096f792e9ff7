#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "prime_field.hpp"

namespace seqcm {

/// Exponent vectors are dense and fixed-capacity; rings have at most this
/// many variables.
inline constexpr std::size_t kMaxVariables = 8;

enum class MonomialOrder { grevlex, lex };

inline std::string to_string(MonomialOrder order) {
  return order == MonomialOrder::grevlex ? "grevlex" : "lex";
}

inline MonomialOrder parse_order(const std::string& s) {
  if (s == "grevlex") return MonomialOrder::grevlex;
  if (s == "lex") return MonomialOrder::lex;
  throw std::invalid_argument("unknown monomial order '" + s + "'");
}

struct Monomial {
  std::array<std::uint16_t, kMaxVariables> exponents{};
  std::uint32_t degree = 0;
  std::uint8_t nvars = 0;

  static Monomial unit(std::size_t n) {
    Monomial m;
    m.nvars = static_cast<std::uint8_t>(n);
    return m;
  }

  static Monomial variable(std::size_t n, std::size_t i, std::uint16_t e = 1) {
    Monomial m = unit(n);
    m.exponents[i] = e;
    m.degree = e;
    return m;
  }

  static Monomial from_exponents(const std::vector<unsigned>& exps) {
    if (exps.size() > kMaxVariables)
      throw std::invalid_argument("too many variables");
    Monomial m = unit(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
      m.exponents[i] = static_cast<std::uint16_t>(exps[i]);
      m.degree += exps[i];
    }
    return m;
  }

  std::uint16_t operator[](std::size_t i) const { return exponents[i]; }
  bool is_unit() const { return degree == 0; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exponents[i] > other.exponents[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exponents[i] && other.exponents[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < kMaxVariables; ++i) m.exponents[i] += b.exponents[i];
    m.degree += b.degree;
    return m;
  }

  /// Exact quotient; caller guarantees divisibility.
  Monomial divided_by(const Monomial& b) const {
    Monomial m = *this;
    for (std::size_t i = 0; i < kMaxVariables; ++i) m.exponents[i] -= b.exponents[i];
    m.degree -= b.degree;
    return m;
  }

  Monomial pow(unsigned t) const {
    Monomial m = *this;
    for (auto& e : m.exponents) e = static_cast<std::uint16_t>(e * t);
    m.degree *= t;
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    m.degree = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      m.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
      m.degree += m.exponents[i];
    }
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents == b.exponents;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exponents) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

namespace detail {

inline std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b,
                                              MonomialOrder order) {
  if (order == MonomialOrder::grevlex) {
    if (a.degree != b.degree) return a.degree <=> b.degree;
    for (std::size_t i = kMaxVariables; i-- > 0;)
      if (a.exponents[i] != b.exponents[i]) return b.exponents[i] <=> a.exponents[i];
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (a.exponents[i] != b.exponents[i]) return a.exponents[i] <=> b.exponents[i];
  return std::strong_ordering::equal;
}

}  // namespace detail

/// Total order on monomials; throws on a variable-count mismatch.
inline std::strong_ordering mono_compare(const Monomial& a, const Monomial& b,
                                         MonomialOrder order) {
  if (a.nvars != b.nvars) throw std::invalid_argument("monomial dimension mismatch");
  return detail::compare_unchecked(a, b, order);
}

inline std::optional<Monomial> mono_divide(const Monomial& a, const Monomial& b) {
  if (a.nvars != b.nvars) throw std::invalid_argument("monomial dimension mismatch");
  if (!b.divides(a)) return std::nullopt;
  return a.divided_by(b);
}

/// The ambient graded ring GF(p)[x_1..x_n] together with its monomial order.
class Ring {
 public:
  Ring(std::uint32_t p, std::vector<std::string> names,
       MonomialOrder order = MonomialOrder::grevlex)
      : field_(p), names_(std::move(names)), order_(order) {
    if (names_.empty()) throw std::invalid_argument("ring needs at least one variable");
    if (names_.size() > kMaxVariables)
      throw std::invalid_argument("at most " + std::to_string(kMaxVariables) +
                                  " variables are supported");
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size())
      throw std::invalid_argument("variable names must be distinct");
  }

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  MonomialOrder order() const { return order_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return detail::compare_unchecked(a, b, order_);
  }

  Monomial one() const { return Monomial::unit(nvars()); }
  Monomial var(std::size_t i, std::uint16_t e = 1) const {
    return Monomial::variable(nvars(), i, e);
  }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (!m.exponents[i]) continue;
      if (!s.empty()) s += '*';
      s += names_[i];
      if (m.exponents[i] > 1) s += '^' + std::to_string(m.exponents[i]);
    }
    return s.empty() ? "1" : s;
  }

  std::string description() const {
    std::string s = "GF(" + std::to_string(characteristic()) + ")[";
    for (std::size_t i = 0; i < nvars(); ++i) s += (i ? "," : "") + names_[i];
    return s + "] order " + to_string(order_);
  }

  bool operator==(const Ring& other) const {
    return field_ == other.field_ && names_ == other.names_ && order_ == other.order_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::uint32_t p, std::vector<std::string> names,
                         MonomialOrder order = MonomialOrder::grevlex) {
  return std::make_shared<const Ring>(p, std::move(names), order);
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace seqcm
