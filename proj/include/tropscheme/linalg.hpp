#pragma once

// Exact dense row reduction and graded pieces of homogeneous ideals.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "tropscheme/field.hpp"
#include "tropscheme/poly.hpp"

namespace tropscheme {

template <ExactField F>
using Matrix = std::vector<std::vector<F>>;

/// Reduced row echelon form in place; zero rows are dropped.  Returns pivot columns.
template <ExactField F>
std::vector<std::size_t> rref(Matrix<F>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const F inv = F(F(1L) / rows[r][c]);
    for (std::size_t j = c; j < ncols; ++j)
      if (!is_zero(rows[r][j])) rows[r][j] = F(rows[r][j] * inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || is_zero(rows[i][c])) continue;
      const F factor = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        if (!is_zero(rows[r][j])) rows[i][j] = F(rows[i][j] - factor * rows[r][j]);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

/// Basis of the right kernel {x : M x = 0}, one vector per free column.
template <ExactField F>
Matrix<F> kernel_basis(Matrix<F> m, std::size_t ncols) {
  std::vector<std::size_t> pivots = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  Matrix<F> out;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(ncols, F(0L));
    v[free] = F(1L);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F(-m[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

/// The degree-d part I_d of a homogeneous ideal, as an RREF basis over the
/// grlex-ordered degree-d monomials.
template <ExactField F>
struct GradedPiece {
  unsigned degree = 0;
  std::size_t nvars = 0;
  std::vector<Monomial> ambient_basis;
  Matrix<F> basis_matrix;

  std::size_t rank() const { return basis_matrix.size(); }
  std::size_t ambient_size() const { return ambient_basis.size(); }

  Poly<F> row_poly(std::size_t i) const {
    Poly<F> p(nvars);
    for (std::size_t j = 0; j < ambient_basis.size(); ++j) p.add_term(ambient_basis[j], basis_matrix[i][j]);
    return p;
  }
};

/// Coefficient vector of a homogeneous polynomial on an ordered monomial basis.
template <class C>
std::vector<C> coefficient_vector(const Poly<C>& f, const std::vector<Monomial>& basis) {
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  std::vector<C> v(basis.size(), detail::coeff_zero<C>());
  for (const auto& [m, c] : f.terms()) {
    auto it = index.find(m);
    if (it == index.end()) throw std::invalid_argument("polynomial term outside the ambient basis");
    v[it->second] = c;
  }
  return v;
}

/// Span of {m * g : g a generator of degree e <= d, m a monomial of degree d - e}.
template <ExactField F>
GradedPiece<F> ideal_graded_piece(const std::vector<Poly<F>>& gens, std::size_t nvars, unsigned d) {
  GradedPiece<F> piece;
  piece.degree = d;
  piece.nvars = nvars;
  piece.ambient_basis = monomials_of_degree(nvars, d);
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw std::invalid_argument("generator has wrong number of variables");
    if (!g.is_homogeneous()) throw std::invalid_argument("generator is not homogeneous");
    if (g.is_zero()) continue;
    unsigned e = g.degree();
    if (e > d) continue;
    for (const auto& m : monomials_of_degree(nvars, d - e))
      piece.basis_matrix.push_back(coefficient_vector(m * g, piece.ambient_basis));
  }
  rref(piece.basis_matrix, piece.ambient_basis.size());
  return piece;
}

/// dim_k (A/I)_d = #monomials of degree d - rank I_d.
template <ExactField F>
std::size_t classical_hilbert(const std::vector<Poly<F>>& gens, std::size_t nvars, unsigned d) {
  GradedPiece<F> piece = ideal_graded_piece(gens, nvars, d);
  return piece.ambient_size() - piece.rank();
}

}  // namespace tropscheme
