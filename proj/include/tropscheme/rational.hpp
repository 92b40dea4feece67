#pragma once

// Exact rational helpers on top of GMP's mpq_class.

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tropscheme {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Parses an integer `p` or fraction `p/q` (optional sign, no spaces inside).
inline Rational parse_rational(std::string_view text) {
  std::string s(trim(text));
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto digits_ok = [](std::string_view d, bool allow_sign) {
    if (allow_sign && !d.empty() && d.front() == '-') d.remove_prefix(1);
    if (d.empty()) return false;
    for (char c : d)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  Integer n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

/// Trial-division primality test; primes here are small.
inline bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Exponent of p in a nonzero integer.
inline long integer_order(Integer n, unsigned long p) {
  if (n == 0) throw std::domain_error("p-adic order of zero");
  long k = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++k;
  }
  return k;
}

/// p-adic order of a nonzero rational: ord(num) - ord(den).
inline long padic_order(const Rational& q, unsigned long p) {
  return integer_order(q.get_num(), p) - integer_order(q.get_den(), p);
}

}  // namespace tropscheme
