#pragma once

#include <string>
#include <vector>

#include "tropscheme/tropscheme.hpp"

namespace testing_helpers {

using namespace tropscheme;

inline const std::vector<std::string> kXYZ{"x", "y", "z"};
inline const std::vector<std::string> kXY{"x", "y"};

inline TropicalValue q(long n, long d = 1) { return TropicalValue(Rational(n, d)); }
inline const TropicalValue kNegInf = TropicalValue::zero();

template <ExactField F = Rational>
Poly<F> P(const std::string& text, const std::vector<std::string>& vars = kXYZ) {
  return parse_field_poly<F>({text, 1, 1}, vars);
}

inline TropPoly<TropicalValue> TP(const std::string& text, const std::vector<std::string>& vars = kXYZ) {
  return parse_trop_poly({text, 1, 1}, vars);
}

inline RationalFunction RF(const std::string& text) { return parse_field_element<RationalFunction>({text, 1, 1}); }

}  // namespace testing_helpers
