#pragma once

/**
 * @file congruence.hpp
 * @brief Finitely generated module congruences on free semimodules S^N.
 *
 * A congruence is stored as its generating pairs.  The pairs related in one
 * step form the subsemimodule of S^N x S^N spanned by both orientations of
 * every generator together with the diagonal; full membership is the
 * transitive closure of that relation, searched breadth-first.
 *
 * When every coordinate of the query and of the generators lies in {-inf, 0}
 * the search runs over subsets of the ambient basis and is exhaustive, so its
 * answers are definitive both ways.  Over the rationals the neighbours of a
 * vector are produced by residuation and a negative answer is reported as
 * unknown.
 */

#include <concepts>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tropscheme/bend.hpp"
#include "tropscheme/linear_space.hpp"
#include "tropscheme/poly.hpp"
#include "tropscheme/semimodule.hpp"

namespace tropscheme {

enum class Verdict { No, Unknown, Yes };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

/// No dominates, then unknown.
inline Verdict verdict_and(Verdict a, Verdict b) {
  if (a == Verdict::No || b == Verdict::No) return Verdict::No;
  if (a == Verdict::Unknown || b == Verdict::Unknown) return Verdict::Unknown;
  return Verdict::Yes;
}

template <IdempotentSemifield S = TropicalValue>
using VectorPair = std::pair<TropVector<S>, TropVector<S>>;

template <IdempotentSemifield S = TropicalValue>
struct ModuleCongruence {
  std::vector<Monomial> ambient_basis;  // may be empty for an abstract index set
  std::size_t ambient_size = 0;
  std::vector<VectorPair<S>> generating_pairs;

  std::size_t index_of(const Monomial& m) const {
    for (std::size_t i = 0; i < ambient_basis.size(); ++i)
      if (ambient_basis[i] == m) return i;
    throw std::invalid_argument("monomial outside the ambient basis");
  }

  TropVector<S> to_vector(const Poly<S>& f) const {
    TropVector<S> v(ambient_size, S::zero());
    for (const auto& [m, c] : f.terms()) v[index_of(m)] = c;
    return v;
  }

  Poly<S> to_poly(const TropVector<S>& v) const {
    if (ambient_basis.empty()) throw std::logic_error("congruence has no monomial basis");
    Poly<S> f(ambient_basis.front().nvars());
    for (std::size_t i = 0; i < v.size(); ++i) f.add_term(ambient_basis[i], v[i]);
    return f;
  }

  void add_pair(const Poly<S>& f, const Poly<S>& g) { generating_pairs.emplace_back(to_vector(f), to_vector(g)); }

  std::vector<PolyPair<S>> poly_pairs() const {
    std::vector<PolyPair<S>> out;
    for (const auto& [u, v] : generating_pairs) out.emplace_back(to_poly(u), to_poly(v));
    return out;
  }
};

template <IdempotentSemifield S>
ModuleCongruence<S> empty_congruence(std::vector<Monomial> basis) {
  ModuleCongruence<S> c;
  c.ambient_size = basis.size();
  c.ambient_basis = std::move(basis);
  return c;
}

/// The congruence generated by the bend relations of the given polynomials.
template <IdempotentSemifield S>
ModuleCongruence<S> bend_congruence(std::vector<Monomial> basis, const std::vector<Poly<S>>& polys) {
  auto c = empty_congruence<S>(std::move(basis));
  for (const auto& f : polys) {
    if (f.is_zero()) continue;
    for (const auto& [l, r] : bend_relations(f).pairs) c.add_pair(l, r);
  }
  return c;
}

namespace detail {

template <IdempotentSemifield S>
TropVector<S> concat(const TropVector<S>& a, const TropVector<S>& b) {
  TropVector<S> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

/// Generators of the one-step relation inside S^{2N}.
template <IdempotentSemifield S>
std::vector<TropVector<S>> one_step_generators(const ModuleCongruence<S>& C) {
  std::vector<TropVector<S>> gens;
  for (const auto& [u, v] : C.generating_pairs) {
    gens.push_back(concat(u, v));
    gens.push_back(concat(v, u));
  }
  for (std::size_t j = 0; j < C.ambient_size; ++j) {
    TropVector<S> e = unit_vector<S>(C.ambient_size, j);
    gens.push_back(concat(e, e));
  }
  return gens;
}

template <IdempotentSemifield S>
bool boolean_valued(const TropVector<S>& v) {
  for (const auto& x : v)
    if (!x.is_zero() && x != S::one()) return false;
  return true;
}

template <IdempotentSemifield S>
std::uint64_t to_mask(const TropVector<S>& v) {
  std::uint64_t m = 0;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) m |= std::uint64_t{1} << j;
  return m;
}

}  // namespace detail

template <IdempotentSemifield S>
bool one_step_member(const TropVector<S>& a, const TropVector<S>& b, const ModuleCongruence<S>& C) {
  if (a.size() != C.ambient_size || b.size() != C.ambient_size)
    throw std::invalid_argument("vector length does not match the ambient size");
  return in_span(detail::concat(a, b), detail::one_step_generators(C));
}

struct MembershipOptions {
  std::size_t max_chain = 0;  // 0 selects N + #pairs + 4
  std::size_t max_nodes = 20'000;
  std::size_t max_boolean_states = std::size_t{1} << 22;
  bool exact_boolean = true;
};

template <IdempotentSemifield S>
std::size_t default_max_chain(const ModuleCongruence<S>& C) {
  return C.ambient_size + C.generating_pairs.size() + 4;
}

namespace detail {

template <IdempotentSemifield S>
Verdict boolean_closure_member(const TropVector<S>& a, const TropVector<S>& b, const ModuleCongruence<S>& C,
                               const MembershipOptions& opts) {
  std::uint64_t start = to_mask(a), goal = to_mask(b);
  if (start == goal) return Verdict::Yes;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> moves;
  for (const auto& [u, v] : C.generating_pairs) {
    moves.emplace_back(to_mask(u), to_mask(v));
    moves.emplace_back(to_mask(v), to_mask(u));
  }
  std::unordered_set<std::uint64_t> seen{start};
  std::deque<std::uint64_t> queue{start};
  while (!queue.empty()) {
    std::uint64_t w = queue.front();
    queue.pop_front();
    for (const auto& [u, v] : moves) {
      if ((w & u) != u) continue;
      std::uint64_t base = (w & ~u) | v;
      for (std::uint64_t e = u;; e = (e - 1) & u) {
        std::uint64_t next = base | e;
        if (next == goal) return Verdict::Yes;
        if (seen.insert(next).second) {
          if (seen.size() > opts.max_boolean_states) return Verdict::Unknown;
          queue.push_back(next);
        }
        if (e == 0) break;
      }
    }
  }
  return Verdict::No;
}

template <IdempotentSemifield S>
std::vector<TropVector<S>> residuation_neighbours(const TropVector<S>& w, const TropVector<S>& goal,
                                                  const std::vector<VectorPair<S>>& oriented) {
  std::vector<TropVector<S>> out;
  for (const auto& [u, v] : oriented) {
    // A zero left side allows any multiple of v; aim it at the goal.
    auto l = is_zero_vector(u) ? residuate(v, goal) : residuate(u, w);
    if (l && !l->is_zero()) out.push_back(oplus(w, scale(*l, v)));
    if (l = residuate(v, w); l && !l->is_zero()) {
      TropVector<S> lv = scale(*l, v), lu = scale(*l, u), next(w.size());
      for (std::size_t j = 0; j < w.size(); ++j) next[j] = lv[j] == w[j] ? lu[j] : w[j] + lu[j];
      out.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace detail

/**
 * Searches for a chain a = w_0 ~ w_1 ~ ... ~ w_m = b of one-step relations.
 * Yes is always definitive; No is only returned by the exhaustive search
 * over boolean data.
 */
template <IdempotentSemifield S>
Verdict congruence_member(const TropVector<S>& a, const TropVector<S>& b, const ModuleCongruence<S>& C,
                          MembershipOptions opts = {}) {
  if (a.size() != C.ambient_size || b.size() != C.ambient_size)
    throw std::invalid_argument("vector length does not match the ambient size");
  if (a == b) return Verdict::Yes;

  bool boolean = C.ambient_size <= 64 && detail::boolean_valued(a) && detail::boolean_valued(b);
  for (const auto& [u, v] : C.generating_pairs)
    boolean = boolean && detail::boolean_valued(u) && detail::boolean_valued(v);
  if (boolean && opts.exact_boolean) return detail::boolean_closure_member(a, b, C, opts);

  if (opts.max_chain == 0) opts.max_chain = default_max_chain(C);
  const auto gens = detail::one_step_generators(C);
  const TropVector<S> b_half = b;
  auto reaches_goal = [&](const TropVector<S>& w) { return in_span(detail::concat(w, b_half), gens); };

  std::vector<VectorPair<S>> oriented;
  for (const auto& [u, v] : C.generating_pairs) {
    oriented.emplace_back(u, v);
    oriented.emplace_back(v, u);
  }
  std::unordered_set<TropVector<S>, VectorHash<S>> seen{a};
  std::vector<TropVector<S>> level{a};
  for (std::size_t depth = 0; depth < opts.max_chain && !level.empty(); ++depth) {
    std::vector<TropVector<S>> next;
    for (const auto& w : level) {
      if (reaches_goal(w)) return Verdict::Yes;
      if (depth + 1 == opts.max_chain) continue;
      for (auto& n : detail::residuation_neighbours(w, b, oriented)) {
        if (seen.size() >= opts.max_nodes) return Verdict::Unknown;
        if (seen.insert(n).second) next.push_back(std::move(n));
      }
    }
    level = std::move(next);
  }
  return Verdict::Unknown;
}

/// Evaluation of a point of the dual at a vector: max_j p_j + w_j.
template <IdempotentSemifield S>
S pair_eval(const TropVector<S>& p, const TropVector<S>& w) {
  S acc = S::zero();
  for (std::size_t j = 0; j < p.size(); ++j) acc = acc + p[j] * w[j];
  return acc;
}

template <IdempotentSemifield S>
bool point_respects(const TropVector<S>& p, const TropVector<S>& a, const TropVector<S>& b) {
  return pair_eval(p, a) == pair_eval(p, b);
}

/// Every generator of D takes the same value on both members of the pair.
template <IdempotentSemifield S>
bool dual_member(const TropVector<S>& a, const TropVector<S>& b, const TropicalLinearSpace<S>& D) {
  for (const auto& p : D.generators)
    if (!point_respects(p, a, b)) return false;
  return true;
}

/// Points of D that respect every generating pair of C.
template <IdempotentSemifield S>
std::vector<TropVector<S>> solutions_among(const TropicalLinearSpace<S>& D, const ModuleCongruence<S>& C) {
  std::vector<TropVector<S>> out;
  for (const auto& p : D.generators) {
    bool ok = true;
    for (const auto& [u, v] : C.generating_pairs) ok = ok && point_respects(p, u, v);
    if (ok) out.push_back(p);
  }
  return out;
}

template <IdempotentSemifield S>
struct ContainmentMethod {
  bool saturation = true;
  MembershipOptions membership{};
  const TropicalLinearSpace<S>* dual = nullptr;  // candidate separating points
  bool dual_complete = false;                     // dual spans all solutions of the larger congruence
};

template <IdempotentSemifield S>
struct ContainmentReport {
  Verdict verdict = Verdict::Yes;
  std::optional<VectorPair<S>> witness;  // first pair not shown to be contained
};

/// Checks C1 contains C2 pair by pair.  Saturation can only prove membership
/// and the dual test can only refute it (unless the dual is complete).
template <IdempotentSemifield S>
ContainmentReport<S> congruence_contains(const ModuleCongruence<S>& C1, const ModuleCongruence<S>& C2,
                                         const ContainmentMethod<S>& method = {}) {
  if (C1.ambient_size != C2.ambient_size) throw std::invalid_argument("congruences over different ambient sizes");
  std::vector<TropVector<S>> separators;
  if (method.dual) separators = solutions_among(*method.dual, C1);

  ContainmentReport<S> report;
  for (const auto& pair : C2.generating_pairs) {
    const auto& [a, b] = pair;
    Verdict v = Verdict::Unknown;
    if (method.dual) {
      bool respected = true;
      for (const auto& p : separators) respected = respected && point_respects(p, a, b);
      if (!respected)
        v = Verdict::No;
      else if (method.dual_complete)
        v = Verdict::Yes;
    }
    if (v == Verdict::Unknown && method.saturation) {
      Verdict s = congruence_member(a, b, C1, method.membership);
      if (s != Verdict::Unknown) v = s;
    }
    report.verdict = verdict_and(report.verdict, v);
    if (v == Verdict::No) {
      report.witness = pair;
      break;
    }
    if (v == Verdict::Unknown && !report.witness) report.witness = pair;
  }
  return report;
}

/// Both containments.
template <IdempotentSemifield S>
Verdict congruences_equal(const ModuleCongruence<S>& C1, const ModuleCongruence<S>& C2,
                          const ContainmentMethod<S>& m12 = {}, const ContainmentMethod<S>& m21 = {}) {
  return verdict_and(congruence_contains(C1, C2, m12).verdict, congruence_contains(C2, C1, m21).verdict);
}

/// Pushforward along a map of bases: phi[i] is the target index of basis
/// element i, or nullopt when it is sent to zero.  Merged coordinates are
/// added.
template <IdempotentSemifield S>
ModuleCongruence<S> pushforward(const ModuleCongruence<S>& C, std::vector<Monomial> target_basis,
                                const std::vector<std::optional<std::size_t>>& phi) {
  if (phi.size() != C.ambient_size) throw std::invalid_argument("map size does not match the ambient size");
  auto out = empty_congruence<S>(std::move(target_basis));
  auto push = [&](const TropVector<S>& v) {
    TropVector<S> r(out.ambient_size, S::zero());
    for (std::size_t i = 0; i < v.size(); ++i)
      if (phi[i]) r.at(*phi[i]) = r.at(*phi[i]) + v[i];
    return r;
  };
  for (const auto& [u, v] : C.generating_pairs) out.generating_pairs.emplace_back(push(u), push(v));
  return out;
}

/// Pushforward along a map of monomials (nullopt means zero).
template <IdempotentSemifield S, class MonomialMap>
  requires std::invocable<MonomialMap, const Monomial&>
ModuleCongruence<S> pushforward(const ModuleCongruence<S>& C, const std::vector<Monomial>& target_basis,
                                MonomialMap&& phi) {
  std::vector<std::optional<std::size_t>> idx;
  for (const auto& m : C.ambient_basis) {
    std::optional<Monomial> image = phi(m);
    if (!image) {
      idx.push_back(std::nullopt);
      continue;
    }
    auto it = std::find(target_basis.begin(), target_basis.end(), *image);
    if (it == target_basis.end()) throw std::invalid_argument("monomial map leaves the target basis");
    idx.push_back(static_cast<std::size_t>(it - target_basis.begin()));
  }
  return pushforward(C, target_basis, idx);
}

/// Applies to_boolean to every coefficient of every generating pair.
template <IdempotentSemifield S>
ModuleCongruence<BooleanValue> base_change(const ModuleCongruence<S>& C) {
  auto out = empty_congruence<BooleanValue>(C.ambient_basis);
  out.ambient_size = C.ambient_size;
  for (const auto& [u, v] : C.generating_pairs) out.generating_pairs.emplace_back(to_boolean(u), to_boolean(v));
  return out;
}

}  // namespace tropscheme
