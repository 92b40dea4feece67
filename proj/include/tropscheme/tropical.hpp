#pragma once

/**
 * @file tropical.hpp
 * @brief Exact idempotent semifields: the tropical numbers Q u {-inf} under
 *        (max, +) and the boolean subsemiring {-inf, 0}.
 *
 * Both types model the IdempotentSemifield concept below, which is what the
 * rest of the library is templated on.  Addition is written `+` and means
 * max; multiplication is written `*` and means ordinary addition of values.
 */

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "tropscheme/rational.hpp"

namespace tropscheme {

/// Element of Q u {-inf} with max as addition and + as multiplication.
class TropicalValue {
 public:
  /// The additive unit -inf.
  TropicalValue() = default;
  TropicalValue(const Rational& q) : value_(q) { value_->canonicalize(); }  // NOLINT(implicit)
  TropicalValue(long n) : value_(Rational(n)) {}   // NOLINT(implicit)
  TropicalValue(int n) : value_(Rational(n)) {}    // NOLINT(implicit)

  static TropicalValue zero() { return {}; }
  static TropicalValue one() { return TropicalValue(Rational(0)); }
  static TropicalValue neg_infinity() { return {}; }

  bool is_zero() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  /// Underlying rational; precondition: finite.
  const Rational& rational() const {
    if (!value_) throw std::domain_error("TropicalValue: -inf has no rational value");
    return *value_;
  }

  /// Multiplicative inverse (negation of the rational); -inf has none.
  TropicalValue inverse() const {
    if (!value_) throw std::domain_error("TropicalValue: -inf is not invertible");
    return TropicalValue(Rational(-*value_));
  }

  friend TropicalValue operator+(const TropicalValue& a, const TropicalValue& b) {
    if (!a.value_) return b;
    if (!b.value_) return a;
    return *a.value_ >= *b.value_ ? a : b;
  }
  friend TropicalValue operator*(const TropicalValue& a, const TropicalValue& b) {
    if (!a.value_ || !b.value_) return {};
    return TropicalValue(Rational(*a.value_ + *b.value_));
  }
  TropicalValue& operator+=(const TropicalValue& o) { return *this = *this + o; }
  TropicalValue& operator*=(const TropicalValue& o) { return *this = *this * o; }

  friend bool operator==(const TropicalValue& a, const TropicalValue& b) {
    if (a.value_.has_value() != b.value_.has_value()) return false;
    return !a.value_ || *a.value_ == *b.value_;
  }
  /// The canonical order a <= b iff a + b == b; total on Q u {-inf}.
  friend std::strong_ordering operator<=>(const TropicalValue& a, const TropicalValue& b) {
    if (!a.value_) return b.value_ ? std::strong_ordering::less : std::strong_ordering::equal;
    if (!b.value_) return std::strong_ordering::greater;
    int c = cmp(*a.value_, *b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const { return value_ ? rational_to_string(*value_) : "-inf"; }

  std::size_t hash() const {
    if (!value_) return 0x9e3779b97f4a7c15ULL;
    return std::hash<std::string>{}(value_->get_str());
  }

 private:
  std::optional<Rational> value_;
};

/// Element of the boolean semifield {-inf, 0}.
class BooleanValue {
 public:
  BooleanValue() = default;
  explicit BooleanValue(bool is_unit) : unit_(is_unit) {}

  static BooleanValue zero() { return BooleanValue(false); }
  static BooleanValue one() { return BooleanValue(true); }
  static BooleanValue neg_infinity() { return BooleanValue(false); }

  bool is_zero() const { return !unit_; }
  bool is_finite() const { return unit_; }

  BooleanValue inverse() const {
    if (!unit_) throw std::domain_error("BooleanValue: -inf is not invertible");
    return *this;
  }

  friend BooleanValue operator+(BooleanValue a, BooleanValue b) { return BooleanValue(a.unit_ || b.unit_); }
  friend BooleanValue operator*(BooleanValue a, BooleanValue b) { return BooleanValue(a.unit_ && b.unit_); }
  BooleanValue& operator+=(BooleanValue o) { return *this = *this + o; }
  BooleanValue& operator*=(BooleanValue o) { return *this = *this * o; }

  friend bool operator==(BooleanValue a, BooleanValue b) = default;
  friend std::strong_ordering operator<=>(BooleanValue a, BooleanValue b) {
    return static_cast<int>(a.unit_) <=> static_cast<int>(b.unit_);
  }

  std::string to_string() const { return unit_ ? "0" : "-inf"; }
  std::size_t hash() const { return unit_ ? 1 : 0; }

 private:
  bool unit_ = false;
};

/// Totally ordered idempotent semifield with exact equality.
template <class S>
concept IdempotentSemifield = std::regular<S> && std::totally_ordered<S> && requires(S a, S b) {
  { S::zero() } -> std::same_as<S>;
  { S::one() } -> std::same_as<S>;
  { a + b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { a.inverse() } -> std::same_as<S>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { a.hash() } -> std::convertible_to<std::size_t>;
};

static_assert(IdempotentSemifield<TropicalValue>);
static_assert(IdempotentSemifield<BooleanValue>);

inline TropicalValue trop_add(const TropicalValue& a, const TropicalValue& b) { return a + b; }
inline TropicalValue trop_mul(const TropicalValue& a, const TropicalValue& b) { return a * b; }

/// a <= b in the canonical order of an idempotent semiring, i.e. a + b == b.
template <IdempotentSemifield S>
bool trop_leq(const S& a, const S& b) {
  return a + b == b;
}

/// The unique semiring map T -> B: -inf stays -inf, everything else goes to 0.
inline BooleanValue to_boolean(const TropicalValue& a) { return BooleanValue(a.is_finite()); }
inline BooleanValue to_boolean(BooleanValue a) { return a; }

/// The inclusion B -> T.
inline TropicalValue to_tropical(BooleanValue a) {
  return a.is_zero() ? TropicalValue::zero() : TropicalValue::one();
}
inline TropicalValue to_tropical(const TropicalValue& a) { return a; }

/// Greatest lower bound in the total order.
template <IdempotentSemifield S>
S meet(const S& a, const S& b) {
  return a <= b ? a : b;
}

/// Conversion from tropical values into a target semifield.
template <IdempotentSemifield S>
S from_tropical(const TropicalValue& t) {
  if constexpr (std::same_as<S, BooleanValue>) {
    return to_boolean(t);
  } else {
    return t;
  }
}

/// Parses `-inf`, `p/q` or `p`.
inline TropicalValue parse_tropical(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "-inf" || s == "-oo") return TropicalValue::neg_infinity();
  return TropicalValue(parse_rational(s));
}

inline std::ostream& operator<<(std::ostream& os, const TropicalValue& a) { return os << a.to_string(); }
inline std::ostream& operator<<(std::ostream& os, BooleanValue a) { return os << a.to_string(); }

}  // namespace tropscheme

template <>
struct std::hash<tropscheme::TropicalValue> {
  std::size_t operator()(const tropscheme::TropicalValue& v) const { return v.hash(); }
};
template <>
struct std::hash<tropscheme::BooleanValue> {
  std::size_t operator()(tropscheme::BooleanValue v) const { return v.hash(); }
};
