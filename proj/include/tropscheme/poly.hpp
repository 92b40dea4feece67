#pragma once

/**
 * @file poly.hpp
 * @brief Monomials and sparse multivariate polynomials over a field or an
 *        idempotent semifield.
 *
 * Poly<C> stores a sparse map from exponent vectors to nonzero coefficients,
 * ordered graded-lexicographically with the largest monomial first.  The same
 * template serves classical polynomials (C an ExactField) and tropical
 * polynomials (C an IdempotentSemifield, where + is max and never cancels).
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tropscheme/field.hpp"
#include "tropscheme/tropical.hpp"

namespace tropscheme {

/// Exponent vector; multiplication adds exponents.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exps) : e_(std::move(exps)) {}
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<unsigned>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t i, unsigned power = 1) {
    std::vector<unsigned> e(nvars, 0);
    e.at(i) = power;
    return Monomial(std::move(e));
  }

  std::size_t nvars() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  const std::vector<unsigned>& exponents() const { return e_; }
  unsigned degree() const { return std::accumulate(e_.begin(), e_.end(), 0U); }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("monomials over different variable counts");
    std::vector<unsigned> r(a.e_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.e_[i];
    return Monomial(std::move(r));
  }
  /// True iff this divides m.
  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Graded lexicographic order with x0 > x1 > ... .
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    for (std::size_t i = 0; i < std::min(a.e_.size(), b.e_.size()); ++i)
      if (a.e_[i] != b.e_[i]) return a.e_[i] <=> b.e_[i];
    return a.e_.size() <=> b.e_.size();
  }

  std::string to_string(const std::vector<std::string>& names) const {
    std::string out;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += i < names.size() ? names[i] : "x" + std::to_string(i);
      if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
    }
    return out.empty() ? "1" : out;
  }

 private:
  std::vector<unsigned> e_;
};

/// All monomials of degree d in n variables, largest first (grlex).
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (unsigned a = left + 1; a-- > 0;) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// Number of monomials of degree d in n variables: C(d+n-1, n-1).
inline std::size_t count_monomials(std::size_t nvars, unsigned d) {
  if (nvars == 0) return d == 0 ? 1 : 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), d + nvars - 1, nvars - 1);
  return r.get_ui();
}

namespace detail {
template <class C>
bool coeff_is_zero(const C& c) {
  if constexpr (requires { c.is_zero(); }) {
    return c.is_zero();
  } else {
    return is_zero(c);
  }
}
template <class C>
C coeff_zero() {
  if constexpr (requires { C::zero(); }) {
    return C::zero();
  } else {
    return C(0L);
  }
}
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
};
}  // namespace detail

template <class C>
class Poly {
 public:
  using Terms = std::map<Monomial, C, detail::GrlexDescending>;

  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}
  Poly(std::size_t nvars, std::initializer_list<std::pair<Monomial, C>> terms) : nvars_(nvars) {
    for (const auto& [m, c] : terms) add_term(m, c);
  }

  static Poly monomial(const Monomial& m, const C& c) {
    Poly p(m.nvars());
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::vector<Monomial> support() const {
    std::vector<Monomial> s;
    for (const auto& [m, c] : terms_) s.push_back(m);
    return s;
  }
  C coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? detail::coeff_zero<C>() : it->second;
  }

  /// Adds c*m into the polynomial (with the coefficient ring's +).
  void add_term(const Monomial& m, const C& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("monomial has wrong number of variables");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!detail::coeff_is_zero(c)) terms_.emplace(m, c);
      return;
    }
    C s = it->second + c;
    if (detail::coeff_is_zero(s))
      terms_.erase(it);
    else
      it->second = s;
  }
  /// Deletes the m term (the f_a-hat operation).
  Poly without(const Monomial& m) const {
    Poly r = *this;
    r.terms_.erase(m);
    return r;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }
  /// Degree of the leading (largest) term; 0 for the zero polynomial.
  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    check_same(a, b);
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    check_same(a, b);
    Poly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, C(ca * cb));
    return r;
  }
  friend Poly operator*(const C& s, const Poly& p) {
    Poly r(p.nvars_);
    for (const auto& [m, c] : p.terms_) r.add_term(m, C(s * c));
    return r;
  }
  friend Poly operator*(const Monomial& x, const Poly& p) {
    Poly r(p.nvars_);
    for (const auto& [m, c] : p.terms_) r.add_term(x * m, c);
    return r;
  }
  friend Poly operator-(const Poly& p)
    requires requires(C c) { -c; }
  {
    Poly r(p.nvars_);
    for (const auto& [m, c] : p.terms_) r.add_term(m, C(-c));
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b)
    requires requires(C c) { -c; }
  {
    return a + (-b);
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  static void check_same(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomials over different variable counts");
  }
  std::size_t nvars_;
  Terms terms_;
};

template <class C>
std::string Poly<C>::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return IdempotentSemifield<C> ? "-inf" : "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    bool constant = m.degree() == 0;
    if constexpr (IdempotentSemifield<C>) {
      if (!out.empty()) out += " + ";
      std::string cs = c.to_string();
      if (constant) {
        out += cs;
      } else {
        if (c != C::one()) out += (cs.front() == '-' ? "(" + cs + ")" : cs) + "*";
        out += m.to_string(names);
      }
    } else {
      std::string cs = field_to_string(c);
      bool compound = cs.find(' ') != std::string::npos;
      bool neg = !compound && cs.front() == '-';
      if (neg) cs.erase(0, 1);
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (compound) cs = "(" + cs + ")";
      if (constant)
        out += cs;
      else
        out += (cs == "1" ? "" : cs + "*") + m.to_string(names);
    }
  }
  return out;
}

template <IdempotentSemifield S = TropicalValue>
using TropPoly = Poly<S>;

/// Coefficient-wise valuation; terms valued -inf disappear.
template <ExactField F>
TropPoly<TropicalValue> tropicalize_poly(const Valuation& v, const Poly<F>& f) {
  TropPoly<TropicalValue> r(f.nvars());
  for (const auto& [m, c] : f.terms()) r.add_term(m, valuate(v, c));
  return r;
}

/// Value of the single term c * m at a point.
template <IdempotentSemifield S>
S term_value(const Monomial& m, const S& c, const std::vector<S>& point) {
  S v = c;
  for (std::size_t i = 0; i < m.nvars(); ++i)
    for (unsigned k = 0; k < m[i]; ++k) v = v * point[i];
  return v;
}

/// Evaluates a tropical polynomial at a point: max over terms of c + <m, p>.
template <IdempotentSemifield S>
S evaluate(const Poly<S>& f, const std::vector<S>& point) {
  if (point.size() != f.nvars()) throw std::invalid_argument("point dimension does not match variable count");
  S acc = S::zero();
  for (const auto& [m, c] : f.terms()) acc = acc + term_value(m, c, point);
  return acc;
}

/// Applies a semiring map to every coefficient.
template <IdempotentSemifield T, IdempotentSemifield S, class Map>
Poly<T> map_coefficients(const Poly<S>& f, Map&& phi) {
  Poly<T> r(f.nvars());
  for (const auto& [m, c] : f.terms()) r.add_term(m, phi(c));
  return r;
}

/// Homogenizes with a new last variable (degree = total degree of f).
template <class C>
Poly<C> homogenize(const Poly<C>& f) {
  unsigned d = f.degree();
  Poly<C> r(f.nvars() + 1);
  for (const auto& [m, c] : f.terms()) {
    std::vector<unsigned> e = m.exponents();
    e.push_back(d - m.degree());
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

/// Sets the last variable to 1.
template <class C>
Poly<C> dehomogenize(const Poly<C>& f) {
  if (f.nvars() == 0) throw std::invalid_argument("cannot dehomogenize a polynomial in no variables");
  Poly<C> r(f.nvars() - 1);
  for (const auto& [m, c] : f.terms()) {
    std::vector<unsigned> e = m.exponents();
    e.pop_back();
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

}  // namespace tropscheme
