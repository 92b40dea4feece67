#pragma once

/**
 * @file problem.hpp
 * @brief Problem files and the polynomial text grammar.
 *
 * A problem file has `key: value` headers followed by indented blocks:
 *
 *     field: Q_p(2)
 *     valuation: p-adic
 *     vars: x, y, z
 *     gens:
 *       x - 4*z
 *       y - 1/2*z
 *     options:
 *       max_degree: 3
 *       grid: -5:5
 *
 * Fields are `Q`, `Q_p(p)`, `Q(t)` and `T` (tropical polynomials written
 * with + for max and * for addition).  Lines starting with `#` are comments.
 */

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tropscheme/errors.hpp"
#include "tropscheme/field.hpp"
#include "tropscheme/poly.hpp"
#include "tropscheme/tropical.hpp"

namespace tropscheme {

enum class CoefficientDomain { Rationals, RationalFunctions, Tropical };

struct SourceLine {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;  // 1-based column of text[0]
};

struct ProblemFile {
  CoefficientDomain domain = CoefficientDomain::Rationals;
  std::string field_text = "Q";
  unsigned long prime = 0;
  Valuation valuation = Valuation::trivial();
  std::vector<std::string> vars;
  std::vector<SourceLine> gens;
  std::map<std::string, SourceLine> options;

  std::optional<std::string> option(const std::string& key) const {
    auto it = options.find(key);
    if (it == options.end()) return std::nullopt;
    return it->second.text;
  }
};

namespace detail {

class PolyLexer {
 public:
  PolyLexer(std::string_view text, std::size_t line, std::size_t col0) : s_(text), line_(line), col0_(col0) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool peek_keyword(std::string_view kw) {
    skip_ws();
    return s_.substr(pos_, kw.size()) == kw;
  }
  void advance(std::size_t n) { pos_ += n; }

  std::string number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a variable name");
    return std::string(s_.substr(start, pos_ - start));
  }
  bool at_identifier() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col0_ + pos_); }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_, col0_;
};

inline std::size_t var_index(PolyLexer& lx, const std::string& name, const std::vector<std::string>& vars) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return i;
  lx.fail("unknown variable '" + name + "'");
}

inline unsigned exponent(PolyLexer& lx) {
  if (!lx.accept('^')) return 1;
  std::string n = lx.number();
  if (n.size() > 4) lx.fail("exponent too large");
  return static_cast<unsigned>(std::stoul(n));
}

// Recursive descent over a field: expr = term (('+'|'-') term)*,
// term = unary (('*'|'/') unary)*, unary = '-' unary | power,
// power = atom ('^' n)?, atom = number | var | 't' | '(' expr ')'.
template <ExactField F>
class FieldPolyParser {
 public:
  FieldPolyParser(PolyLexer& lx, const std::vector<std::string>& vars, bool has_t)
      : lx_(lx), vars_(vars), has_t_(has_t) {}

  Poly<F> expr() {
    Poly<F> acc = term();
    while (true) {
      if (lx_.accept('+'))
        acc = acc + term();
      else if (lx_.accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

 private:
  Poly<F> constant(const F& c) { return Poly<F>::monomial(Monomial::one(vars_.size()), c); }

  Poly<F> term() {
    Poly<F> acc = unary();
    while (true) {
      if (lx_.accept('*')) {
        acc = acc * unary();
      } else if (lx_.accept('/')) {
        Poly<F> d = unary();
        if (d.is_zero()) lx_.fail("division by zero");
        if (d.size() != 1 || d.degree() != 0) lx_.fail("can only divide by a field constant");
        acc = F(F(1L) / d.terms().begin()->second) * acc;
      } else {
        return acc;
      }
    }
  }
  Poly<F> unary() {
    if (lx_.accept('-')) return -unary();
    if (lx_.accept('+')) return unary();
    return power();
  }
  Poly<F> power() {
    Poly<F> base = atom();
    unsigned e = exponent(lx_);
    Poly<F> r = constant(F(1L));
    for (unsigned k = 0; k < e; ++k) r = r * base;
    return r;
  }
  Poly<F> atom() {
    if (lx_.accept('(')) {
      Poly<F> inner = expr();
      lx_.expect(')');
      return inner;
    }
    if (lx_.at_digit()) return constant(F(Rational(Integer(lx_.number(), 10))));
    if (lx_.at_identifier()) {
      std::string name = lx_.identifier();
      if (name == "t" && has_t_) {
        if constexpr (std::same_as<F, RationalFunction>) return constant(RationalFunction::t());
      }
      return Poly<F>::monomial(Monomial::variable(vars_.size(), var_index(lx_, name, vars_)), F(1L));
    }
    lx_.fail("unexpected character");
  }

  PolyLexer& lx_;
  const std::vector<std::string>& vars_;
  bool has_t_;
};

// Tropical grammar: sum = product ('+' product)*, product = factor ('*' factor)*,
// factor = ['-'] rational | '-inf' | '(' ['-'] rational ')' | var ['^' n].
class TropPolyParser {
 public:
  TropPolyParser(PolyLexer& lx, const std::vector<std::string>& vars) : lx_(lx), vars_(vars) {}

  TropPoly<TropicalValue> sum() {
    TropPoly<TropicalValue> acc(vars_.size());
    do {
      auto [m, c] = product();
      acc.add_term(m, c);
    } while (lx_.accept('+'));
    return acc;
  }

 private:
  std::pair<Monomial, TropicalValue> product() {
    Monomial m = Monomial::one(vars_.size());
    TropicalValue c = TropicalValue::one();
    do {
      if (lx_.at_identifier()) {
        std::size_t i = var_index(lx_, lx_.identifier(), vars_);
        m = m * Monomial::variable(vars_.size(), i, exponent(lx_));
      } else {
        c = c * scalar();
      }
    } while (lx_.accept('*'));
    return {m, c};
  }
  TropicalValue scalar() {
    bool paren = lx_.accept('(');
    TropicalValue v;
    if (lx_.peek_keyword("-inf")) {
      lx_.advance(4);
    } else {
      bool neg = lx_.accept('-');
      std::string text = lx_.number();
      if (lx_.accept('/')) text += "/" + lx_.number();
      Rational q = parse_rational(text);
      v = TropicalValue(neg ? Rational(-q) : q);
    }
    if (paren) lx_.expect(')');
    return v;
  }

  PolyLexer& lx_;
  const std::vector<std::string>& vars_;
};

}  // namespace detail

template <ExactField F>
Poly<F> parse_field_poly(const SourceLine& src, const std::vector<std::string>& vars) {
  detail::PolyLexer lx(src.text, src.line, src.column);
  detail::FieldPolyParser<F> p(lx, vars, std::same_as<F, RationalFunction>);
  Poly<F> f = p.expr();
  if (!lx.at_end()) lx.fail("unexpected trailing input");
  return f;
}

inline TropPoly<TropicalValue> parse_trop_poly(const SourceLine& src, const std::vector<std::string>& vars) {
  detail::PolyLexer lx(src.text, src.line, src.column);
  detail::TropPolyParser p(lx, vars);
  auto f = p.sum();
  if (!lx.at_end()) lx.fail("unexpected trailing input");
  return f;
}

/// A field element (polynomial expression without variables).
template <ExactField F>
F parse_field_element(const SourceLine& src) {
  Poly<F> p = parse_field_poly<F>(src, {});
  if (p.is_zero()) return F(0L);
  return p.terms().begin()->second;
}

namespace detail {

inline std::pair<std::string, std::string> split_header(const std::string& line, std::size_t lineno) {
  auto colon = line.find(':');
  if (colon == std::string::npos) throw ParseError("expected 'key: value'", lineno, 1);
  return {std::string(trim(line.substr(0, colon))), std::string(trim(line.substr(colon + 1)))};
}

inline std::size_t value_column(const std::string& line) {
  std::size_t c = line.find(':') + 1;
  while (c < line.size() && std::isspace(static_cast<unsigned char>(line[c]))) ++c;
  return c + 1;
}

}  // namespace detail

inline ProblemFile parse_problem(const std::string& text) {
  ProblemFile pf;
  bool have_field = false, have_vars = false;
  std::string valuation_text;
  std::size_t valuation_line = 0;
  enum class Block { None, Gens, Options } block = Block::None;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view body = trim(raw);
    if (body.empty() || body.front() == '#') continue;
    bool indented = std::isspace(static_cast<unsigned char>(raw.front()));
    std::size_t col = raw.find_first_not_of(" \t") + 1;

    if (indented && block == Block::Gens) {
      pf.gens.push_back({std::string(body), lineno, col});
      continue;
    }
    if (indented && block == Block::Options) {
      auto [k, v] = detail::split_header(raw, lineno);
      pf.options[k] = {v, lineno, detail::value_column(raw)};
      continue;
    }
    if (indented) throw ParseError("indented line outside a block", lineno, col);

    auto [key, value] = detail::split_header(raw, lineno);
    block = Block::None;
    if (key == "field") {
      have_field = true;
      pf.field_text = value;
      if (value == "Q") {
        pf.domain = CoefficientDomain::Rationals;
      } else if (value == "Q(t)") {
        pf.domain = CoefficientDomain::RationalFunctions;
      } else if (value == "T") {
        pf.domain = CoefficientDomain::Tropical;
      } else if (value.rfind("Q_p(", 0) == 0 && value.back() == ')') {
        pf.domain = CoefficientDomain::Rationals;
        std::string p = value.substr(4, value.size() - 5);
        if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos)
          throw ParseError("malformed prime in '" + value + "'", lineno, detail::value_column(raw));
        pf.prime = std::stoul(p);
        if (!is_prime(pf.prime)) throw ParseError(p + " is not prime", lineno, detail::value_column(raw));
      } else {
        throw ParseError("unknown field '" + value + "'", lineno, detail::value_column(raw));
      }
    } else if (key == "valuation") {
      valuation_text = value;
      valuation_line = lineno;
    } else if (key == "vars") {
      have_vars = true;
      std::string item;
      std::istringstream vs(value);
      while (std::getline(vs, item, ',')) {
        std::string name(trim(item));
        if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
          throw ParseError("malformed variable name '" + name + "'", lineno, detail::value_column(raw));
        pf.vars.push_back(name);
      }
    } else if (key == "gens") {
      block = Block::Gens;
      if (!value.empty()) pf.gens.push_back({value, lineno, detail::value_column(raw)});
    } else if (key == "options") {
      block = Block::Options;
    } else {
      throw ParseError("unknown header '" + key + "'", lineno, 1);
    }
  }
  if (!have_field) throw ParseError("missing 'field:' header", lineno + 1, 1);
  if (!have_vars) throw ParseError("missing 'vars:' header", lineno + 1, 1);
  if (pf.domain == CoefficientDomain::RationalFunctions)
    for (const auto& v : pf.vars)
      if (v == "t") throw ParseError("'t' is the field generator and cannot be a variable", lineno, 1);

  if (valuation_text.empty() || valuation_text == "trivial") {
    pf.valuation = Valuation::trivial();
  } else if (valuation_text == "p-adic" || valuation_text.rfind("p-adic(", 0) == 0) {
    if (pf.domain != CoefficientDomain::Rationals)
      throw ParseError("p-adic valuation needs field Q or Q_p(p)", valuation_line, 1);
    unsigned long p = pf.prime;
    if (valuation_text != "p-adic") {
      std::string digits = valuation_text.substr(7, valuation_text.size() - 8);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("malformed p-adic valuation", valuation_line, 1);
      p = std::stoul(digits);
    }
    if (p == 0) throw ParseError("p-adic valuation needs a prime (use field Q_p(p))", valuation_line, 1);
    if (!is_prime(p)) throw ParseError(std::to_string(p) + " is not prime", valuation_line, 1);
    pf.prime = p;
    pf.valuation = Valuation::padic(p);
  } else if (valuation_text == "t-adic") {
    if (pf.domain != CoefficientDomain::RationalFunctions)
      throw ParseError("t-adic valuation needs field Q(t)", valuation_line, 1);
    pf.valuation = Valuation::tadic();
  } else {
    throw ParseError("unknown valuation '" + valuation_text + "'", valuation_line, 1);
  }
  return pf;
}

/// Integer range "a:b".
inline std::pair<long, long> parse_range(const SourceLine& src) {
  auto colon = src.text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument("no colon");
    std::size_t used = 0;
    std::string a(trim(src.text.substr(0, colon))), b(trim(src.text.substr(colon + 1)));
    long lo = std::stol(a, &used);
    if (used != a.size()) throw std::invalid_argument("junk");
    long hi = std::stol(b, &used);
    if (used != b.size()) throw std::invalid_argument("junk");
    return {lo, hi};
  } catch (const std::exception&) {
    throw ParseError("expected a range 'a:b'", src.line, src.column);
  }
}

/// Comma-separated items of an option value, with their columns.
inline std::vector<SourceLine> split_list(const SourceLine& src) {
  std::vector<SourceLine> out;
  std::size_t start = 0;
  while (start <= src.text.size()) {
    std::size_t comma = src.text.find(',', start);
    if (comma == std::string::npos) comma = src.text.size();
    std::string item = src.text.substr(start, comma - start);
    std::size_t lead = item.find_first_not_of(" \t");
    if (lead == std::string::npos) throw ParseError("empty list item", src.line, src.column + start);
    out.push_back({std::string(trim(item)), src.line, src.column + start + lead});
    start = comma + 1;
  }
  return out;
}

}  // namespace tropscheme
