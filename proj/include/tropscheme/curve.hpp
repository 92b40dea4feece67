#pragma once

// Tropical plane curves: the regular subdivision of the Newton polygon
// induced by the tropical coefficients, and the dual weighted facets.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "tropscheme/poly.hpp"

namespace tropscheme {

using LatticePoint = std::pair<long, long>;
using PlanePoint = std::pair<Rational, Rational>;

enum class FacetKind { Segment, Ray, Line };

struct TropicalCurveFacet {
  FacetKind kind = FacetKind::Ray;
  PlanePoint start;                // a vertex, or any point on a line
  std::optional<PlanePoint> end;   // second vertex of a segment
  LatticePoint direction;          // primitive, pointing away from start
  long multiplicity = 1;           // lattice length of the dual edge
  std::pair<LatticePoint, LatticePoint> dual_edge;
};

struct PlaneCurve {
  std::vector<PlanePoint> vertices;
  std::vector<TropicalCurveFacet> facets;
  bool balanced = true;
};

namespace detail {

struct LiftedPoint {
  long i, j;
  Rational c;
};

inline long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// Counter-clockwise hull without collinear points.
inline std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<LatticePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

inline LatticePoint primitive(long x, long y) {
  long g = std::gcd(std::labs(x), std::labs(y));
  return g == 0 ? LatticePoint{0, 0} : LatticePoint{x / g, y / g};
}

inline PlaneCurve line_arrangement(const std::vector<LiftedPoint>& pts) {
  // All exponents lie on a line through pts[0] with primitive direction (ux, uy).
  long ux = 0, uy = 0;
  for (const auto& p : pts)
    if (p.i != pts[0].i || p.j != pts[0].j) std::tie(ux, uy) = primitive(p.i - pts[0].i, p.j - pts[0].j);
  if (ux < 0 || (ux == 0 && uy < 0)) {
    ux = -ux;
    uy = -uy;
  }
  std::vector<std::pair<long, Rational>> param;
  for (const auto& p : pts) {
    long t = ux != 0 ? (p.i - pts[0].i) / ux : (p.j - pts[0].j) / uy;
    param.emplace_back(t, p.c);
  }
  std::sort(param.begin(), param.end());
  std::vector<std::pair<long, Rational>> hull;
  for (const auto& p : param) {
    while (hull.size() >= 2) {
      const auto& [t1, c1] = hull[hull.size() - 2];
      const auto& [t2, c2] = hull.back();
      if (Rational((c2 - c1) * (p.first - t1) - (p.second - c1) * (t2 - t1)) > 0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  PlaneCurve out;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const auto& [t1, c1] = hull[k];
    const auto& [t2, c2] = hull[k + 1];
    long len = t2 - t1;
    // Terms agree where len * <(ux, uy), X> = c1 - c2.
    Rational s = Rational((c1 - c2) / (len * (ux * ux + uy * uy)));
    TropicalCurveFacet f;
    f.kind = FacetKind::Line;
    f.start = {Rational(s * ux), Rational(s * uy)};
    f.direction = primitive(-uy, ux);
    f.multiplicity = len;
    f.dual_edge = {{pts[0].i + t1 * ux, pts[0].j + t1 * uy}, {pts[0].i + t2 * ux, pts[0].j + t2 * uy}};
    out.facets.push_back(f);
  }
  return out;
}

}  // namespace detail

/// Facets of the tropical curve of a tropical polynomial in two variables.
inline PlaneCurve plane_curve_facets(const TropPoly<TropicalValue>& f) {
  if (f.nvars() != 2) throw std::invalid_argument("plane curve needs exactly two variables");
  if (f.is_zero()) throw std::invalid_argument("plane curve of the empty polynomial");
  std::vector<detail::LiftedPoint> pts;
  for (const auto& [m, c] : f.terms()) pts.push_back({static_cast<long>(m[0]), static_cast<long>(m[1]), c.rational()});
  if (pts.size() == 1) return {};

  bool collinear = true;
  for (std::size_t k = 2; k < pts.size() && collinear; ++k)
    collinear = detail::cross({pts[0].i, pts[0].j}, {pts[1].i, pts[1].j}, {pts[k].i, pts[k].j}) == 0;
  if (collinear) return detail::line_arrangement(pts);

  // Upper faces of the lifted point set, keyed by their plane c = a*i + b*j + g.
  std::map<std::tuple<Rational, Rational, Rational>, std::vector<LatticePoint>> cells;
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const auto &p = pts[a], &q = pts[b], &r = pts[c];
        long det = (q.i - p.i) * (r.j - p.j) - (r.i - p.i) * (q.j - p.j);
        if (det == 0) continue;
        Rational dq = Rational(q.c - p.c), dr = Rational(r.c - p.c);
        Rational alpha = Rational((dq * (r.j - p.j) - dr * (q.j - p.j)) / det);
        Rational beta = Rational(((q.i - p.i) * dr - (r.i - p.i) * dq) / det);
        Rational gamma = Rational(p.c - alpha * p.i - beta * p.j);
        auto key = std::make_tuple(alpha, beta, gamma);
        if (cells.count(key)) continue;
        bool upper = true;
        std::vector<LatticePoint> on;
        for (const auto& s : pts) {
          Rational h = Rational(alpha * s.i + beta * s.j + gamma);
          if (s.c > h) {
            upper = false;
            break;
          }
          if (s.c == h) on.emplace_back(s.i, s.j);
        }
        if (upper) cells.emplace(key, std::move(on));
      }

  PlaneCurve out;
  struct EdgeUse {
    std::size_t cell;
    LatticePoint normal;
  };
  std::map<std::pair<LatticePoint, LatticePoint>, std::vector<EdgeUse>> edges;
  for (const auto& [plane, on] : cells) {
    std::size_t id = out.vertices.size();
    out.vertices.emplace_back(Rational(-std::get<0>(plane)), Rational(-std::get<1>(plane)));
    auto hull = detail::convex_hull(on);
    for (std::size_t k = 0; k < hull.size(); ++k) {
      LatticePoint p = hull[k], q = hull[(k + 1) % hull.size()];
      LatticePoint normal = detail::primitive(q.second - p.second, p.first - q.first);
      edges[std::minmax(p, q)].push_back({id, normal});
    }
  }

  std::vector<std::pair<long, long>> balance(out.vertices.size(), {0, 0});
  for (const auto& [edge, uses] : edges) {
    const auto& [p, q] = edge;
    long mult = std::gcd(std::labs(q.first - p.first), std::labs(q.second - p.second));
    TropicalCurveFacet facet;
    facet.multiplicity = mult;
    facet.dual_edge = edge;
    facet.start = out.vertices[uses[0].cell];
    facet.direction = uses[0].normal;
    facet.kind = uses.size() == 1 ? FacetKind::Ray : FacetKind::Segment;
    if (uses.size() > 1) facet.end = out.vertices[uses[1].cell];
    out.facets.push_back(facet);
    for (const auto& u : uses) {
      balance[u.cell].first += mult * u.normal.first;
      balance[u.cell].second += mult * u.normal.second;
    }
  }
  for (const auto& b : balance) out.balanced = out.balanced && b.first == 0 && b.second == 0;
  return out;
}

/// Tropicalizes first; a homogeneous input in three variables is dehomogenized.
template <ExactField F>
PlaneCurve plane_curve_facets(const Valuation& v, const Poly<F>& f) {
  Poly<F> g = f;
  if (g.nvars() == 3) {
    if (!g.is_homogeneous()) throw std::invalid_argument("three-variable input must be homogeneous");
    g = dehomogenize(g);
  }
  if (g.nvars() != 2) throw std::invalid_argument("plane curves need two affine variables");
  TropPoly<TropicalValue> t = tropicalize_poly(v, g);
  if (t.is_zero()) throw std::invalid_argument("tropicalization has no terms");
  return plane_curve_facets(t);
}

}  // namespace tropscheme
