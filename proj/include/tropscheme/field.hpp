#pragma once

/**
 * @file field.hpp
 * @brief Exact valued ground fields.
 *
 * Two element types are provided: Rational (the field Q) and
 * RationalFunction (the field Q(t), stored as a reduced fraction with monic
 * denominator).  A Valuation maps either into the tropical numbers using the
 * max-plus sign convention: nu_p(x) = -ord_p(x), nu_t(x) = -ord_t(x), so
 * subadditivity reads nu(a + b) <= max(nu(a), nu(b)).
 */

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tropscheme/rational.hpp"
#include "tropscheme/tropical.hpp"

namespace tropscheme {

/// Dense univariate polynomial over Q in the variable t, lowest degree first.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim_zeros(); }
  UniPoly(const Rational& c) {  // NOLINT(implicit)
    if (c != 0) c_.push_back(c);
  }
  UniPoly(long n) : UniPoly(Rational(n)) {}  // NOLINT(implicit)

  /// The monomial c * t^k.
  static UniPoly monomial(const Rational& c, std::size_t k) {
    if (c == 0) return {};
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return UniPoly(std::move(v));
  }
  static UniPoly t() { return monomial(Rational(1), 1); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  /// Lowest exponent with a nonzero coefficient; precondition: nonzero.
  std::size_t order() const {
    if (c_.empty()) throw std::domain_error("order of the zero polynomial");
    std::size_t k = 0;
    while (c_[k] == 0) ++k;
    return k;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a) {
    std::vector<Rational> r = a.c_;
    for (auto& x : r) x = -x;
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; returns (quotient, remainder).
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1, Rational(0));
    const Rational lead = b.leading();
    for (long k = static_cast<long>(quo.size()) - 1; k >= 0; --k) {
      Rational q = rem[k + b.c_.size() - 1] / lead;
      quo[k] = q;
      if (q == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= q * b.c_[j];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
  }

  UniPoly monic() const {
    if (is_zero()) return {};
    std::vector<Rational> r = c_;
    Rational l = leading();
    for (auto& x : r) x /= l;
    return UniPoly(std::move(r));
  }

  /// Monic gcd (zero if both are zero).
  static UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      UniPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (long k = degree(); k >= 0; --k) {
      const Rational& c = c_[k];
      if (c == 0) continue;
      bool neg = c < 0;
      Rational a = neg ? Rational(-c) : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      bool unit = a == 1;
      if (k == 0 || !unit) out += rational_to_string(a);
      if (k > 0) {
        if (!unit) out += "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim_zeros() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Element of Q(t) kept as num/den with gcd 1 and monic den.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(implicit)
  RationalFunction(long n) : RationalFunction(Rational(n)) {}          // NOLINT(implicit)
  RationalFunction(const UniPoly& p) : num_(p), den_(Rational(1)) {}   // NOLINT(implicit)
  RationalFunction(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RationalFunction t() { return RationalFunction(UniPoly::t()); }

  const UniPoly& numerator() const { return num_; }
  const UniPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero in Q(t)");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const {
    if (den_.degree() == 0) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator in Q(t)");
    if (num_.is_zero()) {
      den_ = UniPoly(Rational(1));
      return;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = UniPoly::divmod(num_, g).first;
      den_ = UniPoly::divmod(den_, g).first;
    }
    Rational l = den_.leading();
    if (l != 1) {
      num_ = num_ * UniPoly(Rational(1 / l));
      den_ = den_.monic();
    }
  }

  UniPoly num_;
  UniPoly den_;
};

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

/// An exact field usable as coefficient ring for row reduction.
template <class F>
concept ExactField = std::regular<F> && requires(F a, F b) {
  { F(0L) } -> std::same_as<F>;
  { F(1L) } -> std::same_as<F>;
  { F(a + b) } -> std::same_as<F>;
  { F(a - b) } -> std::same_as<F>;
  { F(a * b) } -> std::same_as<F>;
  { F(a / b) } -> std::same_as<F>;
  { F(-a) } -> std::same_as<F>;
};

static_assert(ExactField<Rational>);
static_assert(ExactField<RationalFunction>);

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
inline std::string field_to_string(const Rational& q) { return rational_to_string(q); }
inline std::string field_to_string(const RationalFunction& f) { return f.to_string(); }

/// Which field a problem lives in.
enum class FieldKind { Q, Qp, Qt };

enum class ValuationKind { Trivial, Padic, Tadic };
enum class ValueTarget { Tropical, Boolean };

/**
 * A valuation on Q or Q(t).
 *
 * `target == Boolean` composes the valuation with to_boolean, so the image
 * lies in {-inf, 0}.
 */
class Valuation {
 public:
  static Valuation trivial(ValueTarget target = ValueTarget::Tropical) {
    return Valuation(ValuationKind::Trivial, 0, target);
  }
  static Valuation padic(unsigned long p, ValueTarget target = ValueTarget::Tropical) {
    if (!is_prime(p)) throw std::invalid_argument("p-adic valuation needs a prime, got " + std::to_string(p));
    return Valuation(ValuationKind::Padic, p, target);
  }
  static Valuation tadic(ValueTarget target = ValueTarget::Tropical) {
    return Valuation(ValuationKind::Tadic, 0, target);
  }

  ValuationKind kind() const { return kind_; }
  unsigned long prime() const { return prime_; }
  ValueTarget target() const { return target_; }

  /// The same valuation followed by to_boolean.
  Valuation to_boolean_target() const { return Valuation(kind_, prime_, ValueTarget::Boolean); }

  std::string name() const {
    std::string base;
    switch (kind_) {
      case ValuationKind::Trivial: base = "trivial"; break;
      case ValuationKind::Padic: base = std::to_string(prime_) + "-adic"; break;
      case ValuationKind::Tadic: base = "t-adic"; break;
    }
    return target_ == ValueTarget::Boolean ? base + "->B" : base;
  }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  Valuation(ValuationKind k, unsigned long p, ValueTarget t) : kind_(k), prime_(p), target_(t) {}
  ValuationKind kind_;
  unsigned long prime_;
  ValueTarget target_;
};

namespace detail {
inline TropicalValue apply_target(const Valuation& v, TropicalValue x) {
  return v.target() == ValueTarget::Boolean ? to_tropical(to_boolean(x)) : x;
}
}  // namespace detail

inline TropicalValue valuate(const Valuation& v, const Rational& x) {
  if (x == 0) return TropicalValue::zero();
  switch (v.kind()) {
    case ValuationKind::Trivial:
    case ValuationKind::Tadic:  // constants have t-adic order 0
      return TropicalValue::one();
    case ValuationKind::Padic:
      return detail::apply_target(v, TropicalValue(Rational(-padic_order(x, v.prime()))));
  }
  return TropicalValue::zero();
}

inline TropicalValue valuate(const Valuation& v, const RationalFunction& x) {
  if (x.is_zero()) return TropicalValue::zero();
  switch (v.kind()) {
    case ValuationKind::Trivial:
      return TropicalValue::one();
    case ValuationKind::Tadic: {
      long ord = static_cast<long>(x.numerator().order()) - static_cast<long>(x.denominator().order());
      return detail::apply_target(v, TropicalValue(Rational(-ord)));
    }
    case ValuationKind::Padic:
      if (!x.is_constant()) throw std::invalid_argument("p-adic valuation applied to a non-constant element of Q(t)");
      return valuate(v, x.numerator().coeff(0));
  }
  return TropicalValue::zero();
}

/// Checks unit, multiplicativity, subadditivity and the strict-inequality
/// rule nu(a) < nu(b) => nu(a+b) = nu(b) on every sample pair.
template <ExactField F>
bool check_valuation_axioms(const Valuation& v, const std::vector<std::pair<F, F>>& samples) {
  const F zero(0L), one(1L);
  if (!valuate(v, zero).is_zero()) return false;
  if (valuate(v, one) != TropicalValue::one() || valuate(v, F(-one)) != TropicalValue::one()) return false;
  for (const auto& [a, b] : samples) {
    TropicalValue va = valuate(v, a), vb = valuate(v, b);
    TropicalValue vab = valuate(v, F(a * b));
    TropicalValue vsum = valuate(v, F(a + b));
    if (vab != va * vb) return false;
    if (vsum + va + vb != va + vb) return false;
    if (va < vb && vsum != va + vb) return false;
    if (vb < va && vsum != va + vb) return false;
    // non-degeneracy on a field
    if (valuate(v, a).is_zero() != is_zero(a)) return false;
  }
  return true;
}

}  // namespace tropscheme
