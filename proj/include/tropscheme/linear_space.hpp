#pragma once

/**
 * @file linear_space.hpp
 * @brief Tropical linear spaces: valuated circuits of a subspace over a
 *        valued field, residuation span membership, Mikhalkin-Zharkov
 *        dimension and orthogonal duals.
 *
 * Circuits (nonzero vectors of minimal support) are enumerated one connected
 * component at a time.  Inside a component, a depth-first search intersects
 * the subspace with coordinate hyperplanes x_c = 0; every intersection of
 * dimension one is spanned by a circuit, and every circuit arises this way.
 * Intersections are identified by their closure (the set of coordinates on
 * which they vanish), which keeps the search polynomial in the number of
 * flats rather than in the number of column subsets.
 */

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "tropscheme/errors.hpp"
#include "tropscheme/field.hpp"
#include "tropscheme/linalg.hpp"
#include "tropscheme/poly.hpp"
#include "tropscheme/semimodule.hpp"

namespace tropscheme {

/// A finitely generated subsemimodule of S^N, with the matroid rank of the
/// subspace it came from.
template <IdempotentSemifield S = TropicalValue>
struct TropicalLinearSpace {
  std::vector<Monomial> ambient_basis;  // empty for an abstract index set
  std::size_t ambient_size = 0;
  std::vector<TropVector<S>> generators;
  std::size_t rank = 0;

  bool contains(const TropVector<S>& w) const {
    if (w.size() != ambient_size) throw std::invalid_argument("vector length does not match the ambient size");
    return in_span(w, generators);
  }
};

template <IdempotentSemifield S>
bool span_membership(const TropVector<S>& w, const TropicalLinearSpace<S>& L) {
  return L.contains(w);
}

/// Applies to_boolean to every generator.
template <IdempotentSemifield S>
TropicalLinearSpace<BooleanValue> base_change(const TropicalLinearSpace<S>& L) {
  TropicalLinearSpace<BooleanValue> out;
  out.ambient_basis = L.ambient_basis;
  out.ambient_size = L.ambient_size;
  out.rank = L.rank;
  std::set<TropVector<BooleanValue>> seen;
  for (const auto& g : L.generators)
    if (seen.insert(to_boolean(g)).second) out.generators.push_back(to_boolean(g));
  return out;
}

struct CircuitOptions {
  std::size_t max_columns = 64;  // per connected component
  std::size_t max_nodes = 2'000'000;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

template <ExactField F>
class CircuitSearch {
 public:
  CircuitSearch(std::size_t ncols, const CircuitOptions& opts) : ncols_(ncols), opts_(opts) {}

  void run(const Matrix<F>& basis) { visit(basis); }
  const std::map<std::uint64_t, std::vector<F>>& found() const { return found_; }

 private:
  std::uint64_t vanishing(const Matrix<F>& basis) const {
    std::uint64_t mask = 0;
    for (std::size_t c = 0; c < ncols_; ++c) {
      bool all_zero = std::all_of(basis.begin(), basis.end(), [&](const auto& row) { return is_zero(row[c]); });
      if (all_zero) mask |= std::uint64_t{1} << c;
    }
    return mask;
  }

  void visit(const Matrix<F>& basis) {
    if (++nodes_ > opts_.max_nodes) throw ResourceExhausted("circuit_nodes", opts_.max_nodes);
    if (basis.size() == 1) {
      std::uint64_t support = ~vanishing(basis) & full_mask();
      found_.emplace(support, basis.front());
      return;
    }
    std::uint64_t closure = vanishing(basis);
    if (!visited_.insert(closure).second) return;
    for (std::size_t c = 0; c < ncols_; ++c) {
      if (closure >> c & 1) continue;
      std::size_t p = 0;
      while (is_zero(basis[p][c])) ++p;
      const std::vector<F>& pivot = basis[p];
      const F inv = F(F(1L) / pivot[c]);
      Matrix<F> next;
      next.reserve(basis.size() - 1);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (i == p) continue;
        std::vector<F> row = basis[i];
        if (!is_zero(row[c])) {
          const F factor = F(row[c] * inv);
          for (std::size_t j = 0; j < ncols_; ++j)
            if (!is_zero(pivot[j])) row[j] = F(row[j] - factor * pivot[j]);
        }
        next.push_back(std::move(row));
      }
      visit(next);
    }
  }

  std::uint64_t full_mask() const { return ncols_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ncols_) - 1; }

  std::size_t ncols_;
  CircuitOptions opts_;
  std::size_t nodes_ = 0;
  std::set<std::uint64_t> visited_;
  std::map<std::uint64_t, std::vector<F>> found_;
};

// For spaces of small codimension k: a circuit is a support S with |S| <= k + 1
// on which the space restricts to a line with full support.
template <ExactField F>
class SupportSearch {
 public:
  SupportSearch(std::size_t ncols, const CircuitOptions& opts) : ncols_(ncols), opts_(opts) {}

  static std::size_t cost(std::size_t ncols, std::size_t codim, std::size_t cap) {
    std::size_t total = 0, binom = 1;
    for (std::size_t s = 1; s <= codim + 1 && s <= ncols; ++s) {
      binom = binom * (ncols - s + 1) / s;
      total += binom;
      if (total > cap) return cap + 1;
    }
    return total;
  }

  void run(const Matrix<F>& basis) {
    Matrix<F> dual = kernel_basis(basis, ncols_);
    std::size_t limit = std::min(dual.size() + 1, ncols_);
    for (std::size_t s = 1; s <= limit; ++s) {
      std::vector<bool> pick(ncols_, false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(s), true);
      do {
        if (++nodes_ > opts_.max_nodes) throw ResourceExhausted("circuit_nodes", opts_.max_nodes);
        std::vector<std::size_t> cols;
        std::uint64_t mask = 0;
        for (std::size_t c = 0; c < ncols_; ++c)
          if (pick[c]) {
            cols.push_back(c);
            mask |= std::uint64_t{1} << c;
          }
        if (contains_found(mask)) continue;
        Matrix<F> restricted;
        for (const auto& row : dual) {
          std::vector<F> r;
          for (std::size_t c : cols) r.push_back(row[c]);
          restricted.push_back(std::move(r));
        }
        Matrix<F> line = kernel_basis(restricted, cols.size());
        if (line.size() != 1) continue;
        if (std::any_of(line[0].begin(), line[0].end(), [](const F& x) { return is_zero(x); })) continue;
        std::vector<F> vec(ncols_, F(0L));
        for (std::size_t j = 0; j < cols.size(); ++j) vec[cols[j]] = line[0][j];
        found_.emplace(mask, std::move(vec));
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }

  const std::map<std::uint64_t, std::vector<F>>& found() const { return found_; }

 private:
  bool contains_found(std::uint64_t mask) const {
    for (const auto& [support, vec] : found_)
      if ((support & mask) == support) return true;
    return false;
  }

  std::size_t ncols_;
  CircuitOptions opts_;
  std::size_t nodes_ = 0;
  std::map<std::uint64_t, std::vector<F>> found_;
};

}  // namespace detail

/// All circuits of the row space of `rows`, one representative per support,
/// ordered by support.  Throws ResourceExhausted above the configured bounds.
template <ExactField F>
Matrix<F> circuits(Matrix<F> rows, std::size_t ncols, const CircuitOptions& opts = {}) {
  if (opts.max_columns > 64) throw std::invalid_argument("max_columns cannot exceed 64");
  rref(rows, ncols);
  if (rows.empty()) return {};

  detail::UnionFind uf(ncols);
  std::vector<bool> used(ncols, false);
  for (const auto& row : rows) {
    std::size_t first = ncols;
    for (std::size_t c = 0; c < ncols; ++c) {
      if (is_zero(row[c])) continue;
      used[c] = true;
      if (first == ncols)
        first = c;
      else
        uf.unite(c, first);
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> component_cols;
  for (std::size_t c = 0; c < ncols; ++c)
    if (used[c]) component_cols[uf.find(c)].push_back(c);

  Matrix<F> out;
  for (const auto& [root, cols] : component_cols) {
    if (cols.size() > opts.max_columns) throw ResourceExhausted("circuit_columns", opts.max_columns);
    Matrix<F> local;
    for (const auto& row : rows) {
      std::vector<F> r;
      r.reserve(cols.size());
      for (std::size_t c : cols) r.push_back(row[c]);
      if (std::any_of(r.begin(), r.end(), [](const F& x) { return !is_zero(x); })) local.push_back(std::move(r));
    }
    // Flat enumeration suits low rank, support enumeration low codimension.
    std::size_t codim = cols.size() - local.size();
    std::map<std::uint64_t, std::vector<F>> found;
    if (codim + 1 < local.size() && detail::SupportSearch<F>::cost(cols.size(), codim, opts.max_nodes) <= opts.max_nodes) {
      detail::SupportSearch<F> search(cols.size(), opts);
      search.run(local);
      found = search.found();
    } else {
      detail::CircuitSearch<F> search(cols.size(), opts);
      search.run(local);
      found = search.found();
    }
    for (const auto& [support, vec] : found) {
      std::vector<F> full(ncols, F(0L));
      for (std::size_t j = 0; j < cols.size(); ++j) full[cols[j]] = vec[j];
      out.push_back(std::move(full));
    }
  }
  return out;
}

/// Valuated circuits of the row space, projectively normalized and sorted.
template <ExactField F>
TropicalLinearSpace<TropicalValue> tropicalize_subspace(const Valuation& v, const Matrix<F>& rows, std::size_t ncols,
                                                        const CircuitOptions& opts = {}) {
  Matrix<F> reduced = rows;
  rref(reduced, ncols);
  TropicalLinearSpace<TropicalValue> L;
  L.ambient_size = ncols;
  L.rank = reduced.size();
  std::set<TropVector<TropicalValue>> gens;
  for (const auto& c : circuits(reduced, ncols, opts)) {
    TropVector<TropicalValue> w(ncols);
    for (std::size_t j = 0; j < ncols; ++j) w[j] = valuate(v, c[j]);
    gens.insert(normalize_projective(w));
  }
  L.generators.assign(gens.begin(), gens.end());
  return L;
}

template <ExactField F>
TropicalLinearSpace<TropicalValue> tropicalize_subspace(const Valuation& v, const GradedPiece<F>& piece,
                                                        const CircuitOptions& opts = {}) {
  auto L = tropicalize_subspace(v, piece.basis_matrix, piece.ambient_size(), opts);
  L.ambient_basis = piece.ambient_basis;
  return L;
}

/// Tropicalization of the orthogonal complement of a graded piece.
template <ExactField F>
TropicalLinearSpace<TropicalValue> orthogonal_dual(const Valuation& v, const GradedPiece<F>& piece,
                                                   const CircuitOptions& opts = {}) {
  std::size_t n = piece.ambient_size();
  Matrix<F> kernel = kernel_basis(piece.basis_matrix, n);
  auto L = tropicalize_subspace(v, kernel, n, opts);
  L.ambient_basis = piece.ambient_basis;
  return L;
}

struct MzOptions {
  std::size_t max_generators = 12;  // per connected component
  std::size_t random_combinations = 100;
  std::uint64_t seed = 0x5eed;
};

namespace detail {

inline constexpr long long kNegInf = LLONG_MIN;
using IntVec = std::vector<long long>;

inline IntVec int_projection(const IntVec& w, const std::vector<const IntVec*>& gens) {
  IntVec acc(w.size(), kNegInf);
  for (const IntVec* g : gens) {
    long long lambda = LLONG_MAX;
    bool any = false;
    for (std::size_t j = 0; j < w.size() && lambda != kNegInf; ++j) {
      if ((*g)[j] == kNegInf) continue;
      any = true;
      lambda = w[j] == kNegInf ? kNegInf : std::min(lambda, w[j] - (*g)[j]);
    }
    if (!any || lambda == kNegInf) continue;
    for (std::size_t j = 0; j < w.size(); ++j)
      if ((*g)[j] != kNegInf) acc[j] = std::max(acc[j], (*g)[j] + lambda);
  }
  return acc;
}

/// Some combination of the chosen vectors avoids the span of every proper subset.
inline bool int_independent(const std::vector<const IntVec*>& set, bool boolean, long long radius,
                            std::size_t samples, std::mt19937_64& rng) {
  std::size_t n = set.front()->size();
  auto witnesses = [&](const std::vector<long long>& lambda) {
    IntVec w(n, kNegInf);
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((*set[i])[j] != kNegInf) w[j] = std::max(w[j], (*set[i])[j] + lambda[i]);
    for (std::size_t skip = 0; skip < set.size(); ++skip) {
      std::vector<const IntVec*> rest;
      for (std::size_t i = 0; i < set.size(); ++i)
        if (i != skip) rest.push_back(set[i]);
      if (int_projection(w, rest) == w) return false;
    }
    return true;
  };
  if (witnesses(std::vector<long long>(set.size(), 0))) return true;
  if (boolean) return false;
  std::uniform_int_distribution<long long> dist(-radius, radius);
  std::vector<long long> lambda(set.size());
  for (std::size_t s = 0; s < samples; ++s) {
    for (auto& l : lambda) l = dist(rng);
    if (witnesses(lambda)) return true;
  }
  return false;
}

inline std::size_t int_component_dimension(const std::vector<IntVec>& gens, std::size_t coords, bool boolean,
                                           long long radius, const MzOptions& opts, std::mt19937_64& rng) {
  std::size_t g = gens.size();
  if (g > opts.max_generators) throw ResourceExhausted("mz_generators", opts.max_generators);
  for (std::size_t k = std::min(g, coords); k >= 1; --k) {
    std::vector<bool> pick(g, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<const IntVec*> set;
      for (std::size_t i = 0; i < g; ++i)
        if (pick[i]) set.push_back(&gens[i]);
      if (int_independent(set, boolean, radius, opts.random_combinations, rng)) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return 0;
}

}  // namespace detail

/**
 * Mikhalkin-Zharkov dimension: the size of a largest independent subset of
 * the generators.  Generators sharing no finite coordinate contribute
 * independently, so the search runs per connected component.
 */
template <IdempotentSemifield S>
std::size_t mz_dimension(const TropicalLinearSpace<S>& L, const MzOptions& opts = {}) {
  constexpr bool boolean = std::same_as<S, BooleanValue>;
  std::set<TropVector<S>> distinct;
  for (const auto& g : L.generators)
    if (!is_zero_vector(g)) distinct.insert(g);
  std::vector<TropVector<S>> gens(distinct.begin(), distinct.end());
  if (gens.empty()) return 0;
  std::size_t n = gens.front().size();

  Integer scale = 1;
  Rational lo = 0, hi = 0;
  if constexpr (!boolean) {
    for (const auto& g : gens)
      for (const auto& x : g)
        if (x.is_finite()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.rational().get_den_mpz_t());
  }
  std::vector<detail::IntVec> ints;
  for (const auto& g : gens) {
    detail::IntVec row(n, detail::kNegInf);
    for (std::size_t j = 0; j < n; ++j) {
      if (g[j].is_zero()) continue;
      if constexpr (boolean) {
        row[j] = 0;
      } else {
        Rational scaled = Rational(g[j].rational() * scale);
        lo = std::min(lo, scaled);
        hi = std::max(hi, scaled);
        if (abs(scaled) > Rational(1L << 40)) throw ResourceExhausted("mz_value_range", 1UL << 40);
        row[j] = scaled.get_num().get_si();
      }
    }
    ints.push_back(std::move(row));
  }
  long long radius = Integer(hi.get_num() - lo.get_num()).get_si() + 2;

  detail::UnionFind uf(ints.size());
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t first = ints.size();
    for (std::size_t i = 0; i < ints.size(); ++i) {
      if (ints[i][j] == detail::kNegInf) continue;
      if (first == ints.size())
        first = i;
      else
        uf.unite(i, first);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < ints.size(); ++i) members[uf.find(i)].push_back(i);

  std::mt19937_64 rng(opts.seed);
  std::size_t total = 0;
  for (const auto& [root, idx] : members) {
    std::vector<detail::IntVec> comp;
    std::set<std::size_t> coords;
    for (std::size_t i : idx) {
      comp.push_back(ints[i]);
      for (std::size_t j = 0; j < n; ++j)
        if (ints[i][j] != detail::kNegInf) coords.insert(j);
    }
    total += detail::int_component_dimension(comp, coords.size(), boolean, radius, opts, rng);
  }
  return total;
}

}  // namespace tropscheme
