#pragma once

/**
 * @file tropicalization.hpp
 * @brief Degree-by-degree tropicalization of homogeneous ideals over a
 *        valued field, with Hilbert functions, point tropicalization,
 *        hypersurface recovery and tropical-basis verdicts.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tropscheme/bend.hpp"
#include "tropscheme/congruence.hpp"
#include "tropscheme/field.hpp"
#include "tropscheme/linalg.hpp"
#include "tropscheme/linear_space.hpp"
#include "tropscheme/poly.hpp"

namespace tropscheme {

struct PipelineOptions {
  CircuitOptions circuits{};
  MzOptions mz{};
  MembershipOptions membership{};
  bool with_dual = true;
};

template <ExactField F>
struct DegreeData {
  GradedPiece<F> piece;
  TropicalLinearSpace<TropicalValue> trop_space;
  ModuleCongruence<TropicalValue> bend;
  TropicalLinearSpace<TropicalValue> dual;

  std::vector<TropPoly<TropicalValue>> trop_polys() const {
    std::vector<TropPoly<TropicalValue>> out;
    for (const auto& g : trop_space.generators) {
      TropPoly<TropicalValue> f(piece.nvars);
      for (std::size_t j = 0; j < g.size(); ++j) f.add_term(piece.ambient_basis[j], g[j]);
      out.push_back(std::move(f));
    }
    return out;
  }
};

template <ExactField F>
struct GradedTropicalIdeal {
  Valuation valuation = Valuation::trivial();
  std::size_t nvars = 0;
  std::vector<Poly<F>> generators;
  unsigned max_degree = 0;
  std::map<unsigned, DegreeData<F>> per_degree;

  const DegreeData<F>& at(unsigned d) const {
    auto it = per_degree.find(d);
    if (it == per_degree.end()) throw std::out_of_range("degree " + std::to_string(d) + " was not computed");
    return it->second;
  }
};

template <class C>
unsigned default_max_degree(const std::vector<Poly<C>>& gens) {
  unsigned s = 0;
  for (const auto& g : gens) s += g.degree();
  return s + 1;
}

template <ExactField F>
DegreeData<F> tropicalize_degree(const Valuation& v, const std::vector<Poly<F>>& gens, std::size_t nvars, unsigned d,
                                 const PipelineOptions& opts = {}) {
  DegreeData<F> data;
  data.piece = ideal_graded_piece(gens, nvars, d);
  data.trop_space = tropicalize_subspace(v, data.piece, opts.circuits);
  data.bend = bend_congruence(data.piece.ambient_basis, data.trop_polys());
  if (opts.with_dual) data.dual = orthogonal_dual(v, data.piece, opts.circuits);
  return data;
}

template <ExactField F>
GradedTropicalIdeal<F> tropicalize_ideal(const Valuation& v, const std::vector<Poly<F>>& gens, std::size_t nvars,
                                         unsigned max_degree, const PipelineOptions& opts = {}) {
  GradedTropicalIdeal<F> T;
  T.valuation = v;
  T.nvars = nvars;
  T.generators = gens;
  T.max_degree = max_degree;
  for (unsigned d = 0; d <= max_degree; ++d) T.per_degree.emplace(d, tropicalize_degree(v, gens, nvars, d, opts));
  return T;
}

template <ExactField F>
std::size_t tropical_hilbert(const GradedTropicalIdeal<F>& T, unsigned d, const MzOptions& opts = {}) {
  return mz_dimension(T.at(d).dual, opts);
}

/// The relation x_i ~ value contributed by one coordinate of a point.
struct PointRelation {
  std::size_t coordinate;
  TropicalValue value;
  friend bool operator==(const PointRelation&, const PointRelation&) = default;
};

template <ExactField F>
std::vector<PointRelation> tropicalize_point(const Valuation& v, const std::vector<F>& p) {
  std::vector<PointRelation> out;
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back({i, valuate(v, p[i])});
  return out;
}

/// nu(f) up to a scalar, read off the bend congruence in the degree of f.
template <ExactField F>
TropPoly<TropicalValue> recover_hypersurface(const GradedTropicalIdeal<F>& T) {
  if (T.generators.size() != 1) throw std::invalid_argument("hypersurface recovery needs a principal ideal");
  const auto& data = T.at(T.generators.front().degree());
  if (data.trop_space.generators.size() != 1) throw RecoveryError("degree piece is not one-dimensional");
  std::vector<Monomial> support = data.bend.to_poly(data.trop_space.generators.front()).support();
  return recover_from_bend(data.bend.poly_pairs(), support);
}

/// <B(m * nu(f_i)) : deg m = d - deg f_i> inside degree d.
template <ExactField F>
ModuleCongruence<TropicalValue> generator_bend_congruence(const Valuation& v, const std::vector<Poly<F>>& gens,
                                                          std::size_t nvars, unsigned d) {
  std::vector<TropPoly<TropicalValue>> polys;
  for (const auto& f : gens) {
    if (f.is_zero() || f.degree() > d) continue;
    TropPoly<TropicalValue> tf = tropicalize_poly(v, f);
    for (const auto& m : monomials_of_degree(nvars, d - f.degree())) polys.push_back(m * tf);
  }
  return bend_congruence(monomials_of_degree(nvars, d), polys);
}

namespace detail {

inline ModuleCongruence<TropicalValue> union_of(const std::vector<ModuleCongruence<TropicalValue>>& parts,
                                                std::vector<Monomial> basis) {
  auto out = empty_congruence<TropicalValue>(std::move(basis));
  for (const auto& c : parts)
    out.generating_pairs.insert(out.generating_pairs.end(), c.generating_pairs.begin(), c.generating_pairs.end());
  return out;
}

// Candidate separating points: dual generators, their pairwise sums and,
// for small ambient sizes, every {-inf, 0} vector.
inline TropicalLinearSpace<TropicalValue> candidate_points(const std::vector<const TropicalLinearSpace<>*>& duals,
                                                           std::size_t n) {
  std::set<TropVector<TropicalValue>> pts;
  for (const auto* D : duals) pts.insert(D->generators.begin(), D->generators.end());
  std::vector<TropVector<TropicalValue>> base(pts.begin(), pts.end());
  if (base.size() <= 200)
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = i + 1; j < base.size(); ++j) pts.insert(oplus(base[i], base[j]));
  if (n <= 12)
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      TropVector<TropicalValue> p(n, TropicalValue::zero());
      for (std::size_t j = 0; j < n; ++j)
        if (mask >> j & 1) p[j] = TropicalValue::one();
      pts.insert(p);
    }
  TropicalLinearSpace<TropicalValue> D;
  D.ambient_size = n;
  D.generators.assign(pts.begin(), pts.end());
  return D;
}

// A relation (t1 + t2, t_i) is equivalent to (t1, t2); report the latter.
inline VectorPair<TropicalValue> simplify_witness(const VectorPair<TropicalValue>& w) {
  const auto& [u, v] = w;
  std::vector<std::size_t> finite;
  for (std::size_t j = 0; j < u.size(); ++j)
    if (u[j].is_finite()) finite.push_back(j);
  if (finite.size() != 2) return w;
  TropVector<TropicalValue> t1(u.size(), TropicalValue::zero()), t2 = t1;
  t1[finite[0]] = u[finite[0]];
  t2[finite[1]] = u[finite[1]];
  if (v != t1 && v != t2) return w;
  return {t1, t2};
}

}  // namespace detail

struct DegreeBasisReport {
  unsigned degree = 0;
  Verdict scheme_basis = Verdict::Unknown;  // sum of B_trop((f_i))_d contains B_trop(I)_d
  std::optional<VectorPair<TropicalValue>> scheme_witness;
  Verdict bend_generation = Verdict::Unknown;  // <B(nu(f_i))>_d contains B_trop(I)_d
  std::optional<VectorPair<TropicalValue>> bend_witness;
  Verdict set_theoretic = Verdict::Unknown;  // same tropical vanishing on the grid
};

/// Every trop(I_e) generator for e <= max_degree vanishes at p.
template <ExactField F>
bool ideal_vanishes_at(const GradedTropicalIdeal<F>& T, const std::vector<TropicalValue>& p) {
  for (const auto& [d, data] : T.per_degree)
    for (const auto& g : data.trop_polys())
      if (!tropically_vanishes(g, p)) return false;
  return true;
}

/// Every m * nu(f_i) of degree <= max_degree vanishes at p.
template <ExactField F>
bool generators_vanish_at(const Valuation& v, const std::vector<Poly<F>>& gens, std::size_t nvars,
                          unsigned max_degree, const std::vector<TropicalValue>& p) {
  for (const auto& f : gens) {
    if (f.is_zero() || f.degree() > max_degree) continue;
    TropPoly<TropicalValue> tf = tropicalize_poly(v, f);
    for (unsigned k = 0; k + f.degree() <= max_degree; ++k)
      for (const auto& m : monomials_of_degree(nvars, k))
        if (!tropically_vanishes(m * tf, p)) return false;
  }
  return true;
}

/// Integer grid {lo..hi}^dims, each point padded with trailing zeros up to nvars.
inline std::vector<std::vector<TropicalValue>> integer_grid(long lo, long hi, std::size_t dims, std::size_t nvars) {
  std::vector<std::vector<TropicalValue>> out;
  if (hi < lo) return out;
  std::vector<long> cur(dims, lo);
  while (true) {
    std::vector<TropicalValue> p(nvars, TropicalValue::one());
    for (std::size_t i = 0; i < dims; ++i) p[i] = TropicalValue(cur[i]);
    out.push_back(std::move(p));
    std::size_t i = 0;
    while (i < dims && cur[i] == hi) cur[i++] = lo;
    if (i == dims) break;
    ++cur[i];
  }
  return out;
}

template <ExactField F>
std::vector<DegreeBasisReport> tropical_basis_check(const Valuation& v, const std::vector<Poly<F>>& gens,
                                                    std::size_t nvars, unsigned max_degree,
                                                    const std::vector<std::vector<TropicalValue>>& grid,
                                                    const PipelineOptions& opts = {}) {
  GradedTropicalIdeal<F> T = tropicalize_ideal(v, gens, nvars, max_degree, opts);

  Verdict set_verdict = Verdict::Yes;
  for (const auto& p : grid)
    if (ideal_vanishes_at(T, p) != generators_vanish_at(v, gens, nvars, max_degree, p)) set_verdict = Verdict::No;

  std::vector<DegreeBasisReport> out;
  for (unsigned d = 0; d <= max_degree; ++d) {
    const auto& data = T.at(d);
    std::vector<ModuleCongruence<TropicalValue>> principal;
    std::vector<DegreeData<F>> principal_data;
    for (const auto& f : gens) principal_data.push_back(tropicalize_degree(v, std::vector<Poly<F>>{f}, nvars, d, opts));
    std::vector<const TropicalLinearSpace<>*> duals;
    for (const auto& pd : principal_data) {
      principal.push_back(pd.bend);
      duals.push_back(&pd.dual);
    }
    auto sum = detail::union_of(principal, data.piece.ambient_basis);
    auto gen_bend = generator_bend_congruence(v, gens, nvars, d);

    DegreeBasisReport r;
    r.degree = d;
    TropicalLinearSpace<TropicalValue> cand = detail::candidate_points(duals, data.piece.ambient_size());
    ContainmentMethod<TropicalValue> method{true, opts.membership, &cand, false};
    auto rep1 = congruence_contains(sum, data.bend, method);
    r.scheme_basis = rep1.verdict;
    if (rep1.witness) r.scheme_witness = detail::simplify_witness(*rep1.witness);
    auto rep2 = congruence_contains(gen_bend, data.bend, method);
    r.bend_generation = rep2.verdict;
    if (rep2.witness) r.bend_witness = detail::simplify_witness(*rep2.witness);
    r.set_theoretic = set_verdict;
    out.push_back(std::move(r));
  }
  return out;
}

struct KpReport {
  bool agree = true;
  std::vector<std::vector<TropicalValue>> solutions;
  std::vector<std::vector<TropicalValue>> disagreements;
};

/// Compares the solution set of B_trop(I)_d for d <= max_degree with the
/// common tropical vanishing locus of the generators on the given points.
template <ExactField F>
KpReport kp_set_agreement(const Valuation& v, const std::vector<Poly<F>>& gens, std::size_t nvars,
                          const std::vector<std::vector<TropicalValue>>& grid, unsigned max_degree,
                          const PipelineOptions& opts = {}) {
  PipelineOptions inner = opts;
  inner.with_dual = false;
  GradedTropicalIdeal<F> T = tropicalize_ideal(v, gens, nvars, max_degree, inner);
  KpReport rep;
  for (const auto& p : grid) {
    bool scheme = ideal_vanishes_at(T, p);
    bool set = generators_vanish_at(v, gens, nvars, max_degree, p);
    if (scheme) rep.solutions.push_back(p);
    if (scheme != set) {
      rep.agree = false;
      rep.disagreements.push_back(p);
    }
  }
  return rep;
}

}  // namespace tropscheme
