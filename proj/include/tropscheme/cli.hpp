#pragma once

// Command runner behind the tropscheme executable.  Every command returns a
// JSON document (schema 1) plus a plain-text rendering and an exit code:
// 0 success, 1 invalid request, 2 parse error, 3 resource bound exceeded.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tropscheme/tropscheme.hpp"

namespace tropscheme::cli {

using Json = nlohmann::ordered_json;

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"tropicalize", "hilbert", "basis-check", "facets",  "bend",
                                              "roots",       "eval",    "point-trop",  "kp-check"};
  return names;
}

struct Flags {
  std::optional<unsigned> max_degree;
  std::optional<std::size_t> max_chain;
  std::optional<std::pair<long, long>> grid;
  std::optional<std::size_t> circuit_limit;
  std::optional<std::size_t> mz_limit;
};

struct Result {
  int exit_code = 0;
  Json doc;
  std::string text;
};

namespace detail {

inline Json poly_json(const TropPoly<TropicalValue>& f, const std::vector<std::string>& names) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back({{"coefficient", c.to_string()}, {"exponents", m.exponents()}});
  return {{"text", f.to_string(names)}, {"terms", terms}};
}

inline Json rational_pair(const PlanePoint& p) {
  return Json::array({rational_to_string(p.first), rational_to_string(p.second)});
}

inline std::string facet_kind(FacetKind k) {
  switch (k) {
    case FacetKind::Segment: return "segment";
    case FacetKind::Ray: return "ray";
    case FacetKind::Line: return "line";
  }
  return "ray";
}

class Session {
 public:
  Session(ProblemFile pf, Flags flags) : pf_(std::move(pf)), flags_(std::move(flags)) {
    if (pf_.options.count("max_chain")) opts_.membership.max_chain = option_number(*pf_.options.find("max_chain"));
    if (flags_.max_chain) opts_.membership.max_chain = *flags_.max_chain;
    if (pf_.options.count("circuit_limit"))
      opts_.circuits.max_columns = option_number(*pf_.options.find("circuit_limit"));
    if (flags_.circuit_limit) opts_.circuits.max_columns = *flags_.circuit_limit;
    if (pf_.options.count("mz_limit")) opts_.mz.max_generators = option_number(*pf_.options.find("mz_limit"));
    if (flags_.mz_limit) opts_.mz.max_generators = *flags_.mz_limit;
  }

  Json run(const std::string& command, std::ostream& text) {
    Json doc;
    doc["schema"] = 1;
    doc["command"] = command;
    if (pf_.domain == CoefficientDomain::Tropical) return run_tropical(command, doc, text);
    if (pf_.domain == CoefficientDomain::RationalFunctions) return run_field<RationalFunction>(command, doc, text);
    return run_field<Rational>(command, doc, text);
  }

 private:
  static std::size_t option_number(const std::pair<const std::string, SourceLine>& kv) {
    const auto& src = kv.second;
    if (src.text.empty() || src.text.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("option '" + kv.first + "' needs a nonnegative integer", src.line, src.column);
    return std::stoul(src.text);
  }

  Json input_json(const std::vector<std::string>& gens, bool homogenized) const {
    return {{"field", pf_.field_text}, {"valuation", pf_.valuation.name()}, {"vars", names_},
            {"gens", gens},           {"homogenized", homogenized}};
  }

  std::pair<long, long> grid_range() const {
    if (flags_.grid) return *flags_.grid;
    if (pf_.options.count("grid")) return parse_range(pf_.options.at("grid"));
    return {-5, 5};
  }

  template <class C>
  unsigned max_degree(const std::vector<Poly<C>>& gens) const {
    if (flags_.max_degree) return *flags_.max_degree;
    if (pf_.options.count("max_degree")) return static_cast<unsigned>(option_number(*pf_.options.find("max_degree")));
    return default_max_degree(gens);
  }

  // ---- tropical-coefficient inputs ----
  Json run_tropical(const std::string& command, Json& doc, std::ostream& text) {
    names_ = pf_.vars;
    std::vector<TropPoly<TropicalValue>> gens;
    std::vector<std::string> echo;
    for (const auto& g : pf_.gens) {
      gens.push_back(parse_trop_poly(g, pf_.vars));
      echo.push_back(gens.back().to_string(names_));
    }
    doc["input"] = input_json(echo, false);
    if (command == "bend") return bend(gens, doc, text);
    if (command == "roots") return roots(gens, doc, text);
    if (command == "eval") return eval(gens, doc, text);
    if (command == "facets") return facets_of(gens, doc, text);
    throw std::invalid_argument("command '" + command + "' needs a field (Q, Q_p(p) or Q(t)), not T");
  }

  // ---- field inputs ----
  template <ExactField F>
  Json run_field(const std::string& command, Json& doc, std::ostream& text) {
    names_ = pf_.vars;
    std::vector<Poly<F>> gens;
    for (const auto& g : pf_.gens) gens.push_back(parse_field_poly<F>(g, pf_.vars));

    std::vector<TropPoly<TropicalValue>> tgens;
    for (const auto& g : gens) tgens.push_back(tropicalize_poly(pf_.valuation, g));
    auto echo_of = [&](const std::vector<Poly<F>>& ps) {
      std::vector<std::string> out;
      for (const auto& p : ps) out.push_back(p.to_string(names_));
      return out;
    };

    if (command == "bend" || command == "roots" || command == "eval" || command == "facets" ||
        command == "point-trop") {
      doc["input"] = input_json(echo_of(gens), false);
      if (command == "bend") return bend(tgens, doc, text);
      if (command == "roots") return roots(tgens, doc, text);
      if (command == "eval") return eval(tgens, doc, text);
      if (command == "point-trop") return point_trop<F>(doc, text);
      return facets_of(tgens, doc, text);
    }

    bool affine = false;
    for (const auto& g : gens) affine = affine || !g.is_homogeneous();
    std::size_t affine_dims = names_.size();
    if (affine) {
      for (auto& g : gens) g = homogenize(g);
      std::string h = "h";
      for (int k = 0; std::find(names_.begin(), names_.end(), h) != names_.end(); ++k) h = "h" + std::to_string(k);
      names_.push_back(h);
    }
    doc["input"] = input_json(echo_of(gens), affine);
    std::size_t nvars = names_.size();
    unsigned D = max_degree(gens);
    doc["max_degree"] = D;

    if (command == "tropicalize") return tropicalize<F>(gens, nvars, D, doc, text);
    if (command == "hilbert") return hilbert<F>(gens, nvars, D, doc, text);
    if (command == "basis-check") return basis_check<F>(gens, nvars, D, affine_dims, doc, text);
    if (command == "kp-check") return kp_check<F>(gens, nvars, D, affine_dims, doc, text);
    throw std::invalid_argument("unknown command '" + command + "'");
  }

  template <ExactField F>
  Json tropicalize(const std::vector<Poly<F>>& gens, std::size_t nvars, unsigned D, Json& doc, std::ostream& text) {
    auto T = tropicalize_ideal(pf_.valuation, gens, nvars, D, opts_);
    Json degrees = Json::array();
    for (const auto& [d, data] : T.per_degree) {
      Json gj = Json::array(), dj = Json::array();
      text << "degree " << d << ": rank " << data.trop_space.rank << " of " << data.piece.ambient_size() << "\n";
      for (const auto& g : data.trop_polys()) {
        gj.push_back(poly_json(g, names_));
        text << "  " << g.to_string(names_) << "\n";
      }
      for (const auto& p : data.dual.generators) dj.push_back(poly_json(data.bend.to_poly(p), names_));
      degrees.push_back({{"degree", d},
                         {"ambient_size", data.piece.ambient_size()},
                         {"rank", data.trop_space.rank},
                         {"generators", gj},
                         {"bend_pairs", data.bend.generating_pairs.size()},
                         {"dual_rank", data.dual.rank},
                         {"dual_generators", dj}});
    }
    doc["degrees"] = degrees;
    return doc;
  }

  template <ExactField F>
  Json hilbert(const std::vector<Poly<F>>& gens, std::size_t nvars, unsigned D, Json& doc, std::ostream& text) {
    PipelineOptions o = opts_;
    auto T = tropicalize_ideal(pf_.valuation, gens, nvars, D, o);
    Json table = Json::array();
    bool agree = true;
    text << "d  tropical  classical\n";
    for (unsigned d = 0; d <= D; ++d) {
      std::size_t tr = tropical_hilbert(T, d, opts_.mz);
      std::size_t cl = T.at(d).piece.ambient_size() - T.at(d).piece.rank();
      agree = agree && tr == cl;
      table.push_back({{"degree", d}, {"tropical", tr}, {"classical", cl}});
      text << d << "  " << tr << "  " << cl << "\n";
    }
    doc["hilbert"] = table;
    doc["agree"] = agree;
    return doc;
  }

  Json witness_json(const std::optional<VectorPair<TropicalValue>>& w, const std::vector<Monomial>& basis) const {
    if (!w) return nullptr;
    auto c = empty_congruence<TropicalValue>(basis);
    return Json::array({poly_json(c.to_poly(w->first), names_), poly_json(c.to_poly(w->second), names_)});
  }

  template <ExactField F>
  Json basis_check(const std::vector<Poly<F>>& gens, std::size_t nvars, unsigned D, std::size_t dims, Json& doc,
                   std::ostream& text) {
    auto [lo, hi] = grid_range();
    auto grid = integer_grid(lo, hi, dims, nvars);
    auto reports = tropical_basis_check(pf_.valuation, gens, nvars, D, grid, opts_);
    auto T = tropicalize_ideal(pf_.valuation, gens, nvars, D, PipelineOptions{opts_.circuits, opts_.mz,
                                                                               opts_.membership, false});
    Json degrees = Json::array();
    for (const auto& r : reports) {
      const auto& data = T.at(r.degree);
      Json entry = {{"degree", r.degree},
                    {"scheme_basis", to_string(r.scheme_basis)},
                    {"scheme_witness", witness_json(r.scheme_witness, data.piece.ambient_basis)},
                    {"bend_generation", to_string(r.bend_generation)},
                    {"bend_witness", witness_json(r.bend_witness, data.piece.ambient_basis)},
                    {"set_theoretic", to_string(r.set_theoretic)}};
      if (r.scheme_basis == Verdict::No && r.scheme_witness)
        entry["witness_in_ideal_congruence"] =
            to_string(congruence_member(r.scheme_witness->first, r.scheme_witness->second, data.bend,
                                        opts_.membership));
      text << "degree " << r.degree << ": scheme " << to_string(r.scheme_basis) << ", bend "
           << to_string(r.bend_generation) << ", set " << to_string(r.set_theoretic);
      if (r.scheme_basis == Verdict::No && r.scheme_witness) {
        auto c = empty_congruence<TropicalValue>(data.piece.ambient_basis);
        text << ", witness (" << c.to_poly(r.scheme_witness->first).to_string(names_) << ", "
             << c.to_poly(r.scheme_witness->second).to_string(names_) << ")";
      }
      text << "\n";
      degrees.push_back(entry);
    }
    doc["grid"] = {lo, hi};
    doc["degrees"] = degrees;
    return doc;
  }

  template <ExactField F>
  Json kp_check(const std::vector<Poly<F>>& gens, std::size_t nvars, unsigned D, std::size_t dims, Json& doc,
                std::ostream& text) {
    auto [lo, hi] = grid_range();
    auto grid = integer_grid(lo, hi, dims, nvars);
    auto rep = kp_set_agreement(pf_.valuation, gens, nvars, grid, D, opts_);
    Json sols = Json::array();
    for (const auto& p : rep.solutions) {
      Json pt = Json::array();
      for (const auto& x : p) pt.push_back(x.to_string());
      sols.push_back(pt);
    }
    doc["grid"] = {lo, hi};
    doc["agree"] = rep.agree;
    doc["solutions"] = sols;
    doc["disagreements"] = rep.disagreements.size();
    text << "agree: " << (rep.agree ? "yes" : "no") << ", " << rep.solutions.size() << " grid solutions\n";
    for (const auto& p : sols) text << "  " << p.dump() << "\n";
    return doc;
  }

  template <ExactField F>
  Json point_trop(Json& doc, std::ostream& text) {
    if (!pf_.options.count("point")) throw std::invalid_argument("point-trop needs a 'point' option");
    auto items = split_list(pf_.options.at("point"));
    if (items.size() != names_.size())
      throw ParseError("point has " + std::to_string(items.size()) + " coordinates, expected " +
                           std::to_string(names_.size()),
                       pf_.options.at("point").line, pf_.options.at("point").column);
    std::vector<F> p;
    for (const auto& it : items) p.push_back(parse_field_element<F>(it));
    Json rels = Json::array();
    for (const auto& r : tropicalize_point(pf_.valuation, p)) {
      rels.push_back({{"var", names_[r.coordinate]}, {"value", r.value.to_string()}});
      text << names_[r.coordinate] << " ~ " << r.value.to_string() << "\n";
    }
    doc["relations"] = rels;
    return doc;
  }

  Json bend(const std::vector<TropPoly<TropicalValue>>& gens, Json& doc, std::ostream& text) {
    Json out = Json::array();
    for (const auto& g : gens) {
      Json pairs = Json::array();
      text << "B(" << g.to_string(names_) << "):\n";
      for (const auto& [l, r] : bend_relations(g).pairs) {
        pairs.push_back(Json::array({poly_json(l, names_), poly_json(r, names_)}));
        text << "  " << l.to_string(names_) << " ~ " << r.to_string(names_) << "\n";
      }
      out.push_back({{"source", poly_json(g, names_)}, {"pairs", pairs}});
    }
    doc["relations"] = out;
    return doc;
  }

  Json roots(const std::vector<TropPoly<TropicalValue>>& gens, Json& doc, std::ostream& text) {
    Json out = Json::array();
    for (const auto& g : gens) {
      auto cf = univariate_canonical_form(g);
      Json rs = Json::array();
      for (const auto& r : cf.roots) rs.push_back(r.to_string());
      out.push_back({{"source", poly_json(g, names_)}, {"scalar", cf.scalar.to_string()}, {"roots", rs}});
      text << g.to_string(names_) << ": scalar " << cf.scalar.to_string() << ", roots " << rs.dump() << "\n";
    }
    doc["factorizations"] = out;
    return doc;
  }

  Json eval(const std::vector<TropPoly<TropicalValue>>& gens, Json& doc, std::ostream& text) {
    if (!pf_.options.count("point")) throw std::invalid_argument("eval needs a 'point' option");
    auto items = split_list(pf_.options.at("point"));
    if (items.size() != names_.size())
      throw ParseError("point has " + std::to_string(items.size()) + " coordinates, expected " +
                           std::to_string(names_.size()),
                       pf_.options.at("point").line, pf_.options.at("point").column);
    std::vector<TropicalValue> p;
    for (const auto& it : items) {
      try {
        p.push_back(parse_tropical(it.text));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), it.line, it.column);
      }
    }
    Json out = Json::array();
    for (const auto& g : gens) {
      TropicalValue v = evaluate(g, p);
      bool vanishes = tropically_vanishes(g, p);
      out.push_back({{"source", poly_json(g, names_)}, {"value", v.to_string()}, {"vanishes", vanishes}});
      text << g.to_string(names_) << " = " << v.to_string() << (vanishes ? " (vanishes)" : "") << "\n";
    }
    Json pj = Json::array();
    for (const auto& x : p) pj.push_back(x.to_string());
    doc["point"] = pj;
    doc["values"] = out;
    return doc;
  }

  Json facets_of(const std::vector<TropPoly<TropicalValue>>& gens, Json& doc, std::ostream& text) {
    if (gens.size() != 1) throw std::invalid_argument("facets needs exactly one generator");
    TropPoly<TropicalValue> f = gens.front();
    if (f.nvars() == 3) {
      if (!f.is_homogeneous()) throw std::invalid_argument("three-variable input must be homogeneous");
      f = dehomogenize(f);
    }
    PlaneCurve curve = plane_curve_facets(f);
    Json verts = Json::array(), facets = Json::array();
    for (const auto& v : curve.vertices) verts.push_back(rational_pair(v));
    for (const auto& fc : curve.facets) {
      Json e = {{"kind", facet_kind(fc.kind)},
                {"start", rational_pair(fc.start)},
                {"end", fc.end ? rational_pair(*fc.end) : Json(nullptr)},
                {"direction", {fc.direction.first, fc.direction.second}},
                {"multiplicity", fc.multiplicity},
                {"dual_edge",
                 {{fc.dual_edge.first.first, fc.dual_edge.first.second},
                  {fc.dual_edge.second.first, fc.dual_edge.second.second}}}};
      facets.push_back(e);
      text << facet_kind(fc.kind) << " from " << rational_pair(fc.start).dump() << " direction ("
           << fc.direction.first << ", " << fc.direction.second << ") multiplicity " << fc.multiplicity << "\n";
    }
    doc["vertices"] = verts;
    doc["facets"] = facets;
    doc["balanced"] = curve.balanced;
    text << "balanced: " << (curve.balanced ? "yes" : "no") << "\n";
    return doc;
  }

  ProblemFile pf_;
  Flags flags_;
  PipelineOptions opts_;
  std::vector<std::string> names_;
};

}  // namespace detail

/// Runs one command on the text of a problem file.
inline Result run(const std::string& command, const std::string& problem_text, const Flags& flags = {}) {
  Result res;
  std::ostringstream text;
  try {
    if (std::find(commands().begin(), commands().end(), command) == commands().end())
      throw std::invalid_argument("unknown command '" + command + "'");
    detail::Session session(parse_problem(problem_text), flags);
    res.doc = session.run(command, text);
    res.text = text.str();
  } catch (const ParseError& e) {
    res.exit_code = 2;
    res.doc = {{"schema", 1},
               {"command", command},
               {"error", {{"kind", "parse"}, {"line", e.line()}, {"column", e.column()}, {"message", e.what()}}}};
    res.text = std::string("parse error: ") + e.what() + "\n";
  } catch (const ResourceExhausted& e) {
    res.exit_code = 3;
    res.doc = {{"schema", 1},
               {"command", command},
               {"error", {{"kind", "resource"}, {"bound", e.bound()}, {"limit", e.limit()}, {"message", e.what()}}}};
    res.text = std::string("resource bound exceeded: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    res.exit_code = 1;
    res.doc = {{"schema", 1}, {"command", command}, {"error", {{"kind", "invalid"}, {"message", e.what()}}}};
    res.text = std::string("error: ") + e.what() + "\n";
  }
  return res;
}

}  // namespace tropscheme::cli
