#pragma once

/**
 * @file semimodule.hpp
 * @brief Vectors in free modules S^N over an idempotent semifield, and
 *        residuation: the largest scalar l with l*g <= w, which decides
 *        membership in a finitely generated subsemimodule.
 */

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropscheme/tropical.hpp"

namespace tropscheme {

template <IdempotentSemifield S = TropicalValue>
using TropVector = std::vector<S>;

template <IdempotentSemifield S>
TropVector<S> zero_vector(std::size_t n) {
  return TropVector<S>(n, S::zero());
}

template <IdempotentSemifield S>
TropVector<S> unit_vector(std::size_t n, std::size_t i) {
  TropVector<S> v(n, S::zero());
  v.at(i) = S::one();
  return v;
}

template <IdempotentSemifield S>
TropVector<S> oplus(const TropVector<S>& a, const TropVector<S>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  TropVector<S> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <IdempotentSemifield S>
TropVector<S> scale(const S& l, const TropVector<S>& v) {
  TropVector<S> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = l * v[i];
  return r;
}

/// Coordinate-wise a <= b.
template <IdempotentSemifield S>
bool vector_leq(const TropVector<S>& a, const TropVector<S>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] < a[i]) return false;
  return true;
}

template <IdempotentSemifield S>
bool is_zero_vector(const TropVector<S>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// Largest l with l*g <= w coordinate-wise; nullopt when g is the zero
/// vector (every l works).
template <IdempotentSemifield S>
std::optional<S> residuate(const TropVector<S>& g, const TropVector<S>& w) {
  if (g.size() != w.size()) throw std::invalid_argument("vector length mismatch");
  std::optional<S> best;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g[j].is_zero()) continue;
    S cand = w[j].is_zero() ? S::zero() : w[j] * g[j].inverse();
    best = best ? meet(*best, cand) : cand;
    if (best->is_zero()) break;
  }
  return best;
}

/// The greatest element of span(gens) below w.
template <IdempotentSemifield S>
TropVector<S> span_projection(const TropVector<S>& w, const std::vector<TropVector<S>>& gens) {
  TropVector<S> acc = zero_vector<S>(w.size());
  for (const auto& g : gens) {
    auto l = residuate(g, w);
    if (l && !l->is_zero()) acc = oplus(acc, scale(*l, g));
  }
  return acc;
}

/// w lies in the subsemimodule generated by gens.
template <IdempotentSemifield S>
bool in_span(const TropVector<S>& w, const std::vector<TropVector<S>>& gens) {
  return span_projection(w, gens) == w;
}

/// Scales so the first finite coordinate is one(); the zero vector is unchanged.
template <IdempotentSemifield S>
TropVector<S> normalize_projective(const TropVector<S>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return scale(x.inverse(), v);
  return v;
}

template <IdempotentSemifield S>
TropVector<BooleanValue> to_boolean(const TropVector<S>& v) {
  TropVector<BooleanValue> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = to_boolean(v[i]);
  return r;
}

template <IdempotentSemifield S>
std::string vector_to_string(const TropVector<S>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + ")";
}

template <IdempotentSemifield S>
struct VectorHash {
  std::size_t operator()(const TropVector<S>& v) const {
    std::size_t h = v.size();
    for (const auto& x : v) h = h * 1000003u ^ x.hash();
    return h;
  }
};

}  // namespace tropscheme
