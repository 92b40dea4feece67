#pragma once

// Bend relations, tropical vanishing, univariate factorization and recovery
// of a tropical polynomial from its bend relations.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tropscheme/errors.hpp"
#include "tropscheme/poly.hpp"
#include "tropscheme/tropical.hpp"

namespace tropscheme {

template <IdempotentSemifield S = TropicalValue>
using PolyPair = std::pair<Poly<S>, Poly<S>>;

template <IdempotentSemifield S = TropicalValue>
struct BendRelationSet {
  Poly<S> source;
  std::vector<PolyPair<S>> pairs;
};

/// One pair (f, f with the term at m deleted) per support monomial m; a
/// monomial yields (f, empty).
template <IdempotentSemifield S>
BendRelationSet<S> bend_relations(const Poly<S>& f) {
  if (f.is_zero()) throw std::invalid_argument("bend relations of the empty polynomial are undefined");
  BendRelationSet<S> out{f, {}};
  for (const auto& [m, c] : f.terms()) out.pairs.emplace_back(f, f.without(m));
  return out;
}

/// The maximum term value at p is attained at least twice, or f(p) = -inf.
template <IdempotentSemifield S>
bool tropically_vanishes(const Poly<S>& f, const std::vector<S>& p) {
  if (p.size() != f.nvars()) throw std::invalid_argument("point dimension does not match variable count");
  S best = S::zero();
  int hits = 0;
  for (const auto& [m, c] : f.terms()) {
    S v = term_value(m, c, p);
    if (v.is_zero()) continue;
    if (best < v) {
      best = v;
      hits = 1;
    } else if (v == best) {
      ++hits;
    }
  }
  return best.is_zero() || hits >= 2;
}

/// c * prod b_t over the roots, with b_t = 0 + (-t)x and b_{-inf} = x.
struct UnivariateCanonicalForm {
  TropicalValue scalar;
  std::vector<TropicalValue> roots;  // descending, -inf last

  TropPoly<TropicalValue> expand() const {
    TropPoly<TropicalValue> acc = TropPoly<TropicalValue>::monomial(Monomial::one(1), scalar);
    for (const auto& t : roots) {
      TropPoly<TropicalValue> factor(1);
      factor.add_term(Monomial::variable(1, 0), t.is_finite() ? t.inverse() : TropicalValue::one());
      if (t.is_finite()) factor.add_term(Monomial::one(1), TropicalValue::one());
      acc = acc * factor;
    }
    return acc;
  }

  friend bool operator==(const UnivariateCanonicalForm&, const UnivariateCanonicalForm&) = default;
};

/// Roots are minus the slopes of the upper hull of (k, c_k); terms below the
/// hull do not affect the function and are ignored.
inline UnivariateCanonicalForm univariate_canonical_form(const TropPoly<TropicalValue>& f) {
  if (f.nvars() != 1) throw std::invalid_argument("univariate canonical form needs one variable");
  if (f.is_zero()) throw std::invalid_argument("canonical form of the empty polynomial is undefined");
  std::vector<std::pair<unsigned, Rational>> pts;
  for (const auto& [m, c] : f.terms()) pts.emplace_back(m[0], c.rational());
  std::sort(pts.begin(), pts.end());

  std::vector<std::pair<unsigned, Rational>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& [k1, c1] = hull[hull.size() - 2];
      const auto& [k2, c2] = hull.back();
      Rational cross = Rational((c2 - c1) * (p.first - k1) - (p.second - c1) * (k2 - k1));
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }

  UnivariateCanonicalForm out;
  Rational scalar = hull.back().second;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const auto& [k1, c1] = hull[i];
    const auto& [k2, c2] = hull[i + 1];
    Rational root = Rational(-(c2 - c1) / (k2 - k1));
    for (unsigned r = k1; r < k2; ++r) {
      out.roots.emplace_back(root);
      scalar += root;
    }
  }
  for (unsigned r = 0; r < hull.front().first; ++r) out.roots.push_back(TropicalValue::zero());
  std::stable_sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) {
    if (a.is_zero() != b.is_zero()) return b.is_zero();
    return b < a;
  });
  out.scalar = TropicalValue(scalar);
  return out;
}

namespace detail {

// Value of the two-index point sending m_a to 0 and m_b to delta.
inline TropicalValue two_index_eval(const TropPoly<TropicalValue>& u, const Monomial& ma, const Monomial& mb,
                                    const Rational& delta) {
  return u.coeff(ma) + u.coeff(mb) * TropicalValue(delta);
}

inline bool respects_all(const std::vector<PolyPair<TropicalValue>>& rels, const Monomial& ma, const Monomial& mb,
                         const Rational& delta) {
  for (const auto& [u, v] : rels)
    if (two_index_eval(u, ma, mb, delta) != two_index_eval(v, ma, mb, delta)) return false;
  return true;
}

// The unique delta for which the two-index point respects every relation.
inline Rational pair_ratio(const std::vector<PolyPair<TropicalValue>>& rels, const Monomial& ma, const Monomial& mb) {
  std::set<Rational> breaks;
  for (const auto& [u, v] : rels)
    for (const auto* x : {&u, &v})
      for (const auto* y : {&u, &v}) {
        TropicalValue xa = x->coeff(ma), yb = y->coeff(mb);
        if (xa.is_finite() && yb.is_finite()) breaks.insert(Rational(xa.rational() - yb.rational()));
      }
  std::vector<Rational> probes;
  if (breaks.empty()) {
    probes.emplace_back(0);
  } else {
    probes.emplace_back(Rational(*breaks.begin() - 1));
    probes.emplace_back(Rational(*breaks.rbegin() + 1));
    for (auto it = breaks.begin(); std::next(it) != breaks.end(); ++it)
      probes.emplace_back(Rational((*it + *std::next(it)) / 2));
  }
  for (const auto& d : probes)
    if (respects_all(rels, ma, mb, d)) throw RecoveryError("relations leave a whole interval of ratios");
  std::optional<Rational> found;
  for (const auto& d : breaks) {
    if (!respects_all(rels, ma, mb, d)) continue;
    if (found) throw RecoveryError("relations admit several ratios");
    found = d;
  }
  if (!found) throw RecoveryError("relations admit no ratio");
  return *found;
}

}  // namespace detail

/// Recovers f up to a tropical scalar from relations presenting B(f), where
/// f has the given support and finite coefficients.
inline TropPoly<TropicalValue> recover_from_bend(const std::vector<PolyPair<TropicalValue>>& rels,
                                                 const std::vector<Monomial>& support) {
  if (support.empty()) throw std::invalid_argument("recovery needs a nonempty support");
  TropPoly<TropicalValue> g(support.front().nvars());
  g.add_term(support.front(), TropicalValue::one());
  std::vector<Rational> coeff(support.size(), Rational(0));
  for (std::size_t b = 1; b < support.size(); ++b) {
    coeff[b] = Rational(-detail::pair_ratio(rels, support.front(), support[b]));
    g.add_term(support[b], TropicalValue(coeff[b]));
  }
  for (std::size_t a = 1; a < support.size(); ++a)
    for (std::size_t b = a + 1; b < support.size(); ++b)
      if (detail::pair_ratio(rels, support[a], support[b]) != coeff[a] - coeff[b])
        throw RecoveryError("pairwise ratios are inconsistent");
  return g;
}

inline TropPoly<TropicalValue> recover_from_bend(const BendRelationSet<TropicalValue>& B,
                                                 const std::vector<Monomial>& support) {
  return recover_from_bend(B.pairs, support);
}

/// f and g differ by a tropical unit.
inline bool proportional(const TropPoly<TropicalValue>& f, const TropPoly<TropicalValue>& g) {
  if (f.support() != g.support()) return false;
  if (f.is_zero()) return true;
  TropicalValue shift = g.terms().begin()->second * f.terms().begin()->second.inverse();
  return shift * f == g;
}

}  // namespace tropscheme
