#pragma once

// Binding parsed expressions to concrete fields: tower construction from
// named minimal polynomials, element and series parsing.

#include <string>
#include <string_view>
#include <vector>

#include "typeseq/expr_parser.hpp"
#include "typeseq/extension_field.hpp"
#include "typeseq/series.hpp"

namespace typeseq {

struct TowerLevel {
  std::string name;
  std::string minimal_polynomial;
  friend bool operator==(const TowerLevel&, const TowerLevel&) = default;
};

/// Evaluates a symbol polynomial whose exponent vectors index the first
/// `K.levels()` generators of K.
template <class F>
FieldElement<F> evaluate(const ExtensionField<F>& K, const SymbolPoly& p) {
  FieldElement<F> acc = K.zero();
  for (const auto& [exps, c] : p) {
    FieldElement<F> term = K.from_scalar(K.scalars().from_rational(c));
    for (std::size_t l = 0; l < exps.size(); ++l)
      if (exps[l] > 0) term = K.mul(term, K.pow(K.generator(l), exps[l]));
    acc = K.add(acc, term);
  }
  return acc;
}

template <class F>
FieldPtr<F> build_tower(const F& base, const std::vector<TowerLevel>& tower) {
  FieldPtr<F> K = ExtensionField<F>::base_only(base);
  std::vector<std::string> names;
  for (const auto& level : tower) {
    check_generator_name(level.name, names);
    names.push_back(level.name);
    const SymbolPoly p = parse_symbol_poly(level.minimal_polynomial, names);
    // split by the exponent of the new symbol
    std::size_t deg = 0;
    for (const auto& [e, c] : p) deg = std::max<std::size_t>(deg, e.back());
    std::vector<SymbolPoly> parts(deg + 1);
    for (const auto& [e, c] : p) {
      std::vector<unsigned> rest(e.begin(), e.end() - 1);
      parts[e.back()][rest] += c;
    }
    if (p.empty() || deg == 0)
      throw Error(ErrorCode::field, "minimal-polynomial",
                  "polynomial for '" + level.name + "' has degree 0: " + level.minimal_polynomial);
    std::vector<FieldElement<F>> coeffs;
    for (const auto& part : parts) coeffs.push_back(evaluate(*K, part));
    K = ExtensionField<F>::adjoin(*K, level.name, coeffs);
  }
  return K;
}

template <class F>
FieldElement<F> parse_element(std::string_view text, const ExtensionField<F>& K) {
  return evaluate(K, parse_symbol_poly(text, K.generator_names()));
}

/// Parses a series expression truncated at `bound`; exponents >= bound are
/// rejected.
template <class F>
TruncSeries<F> parse_series(std::string_view text, const FieldPtr<F>& K, std::size_t bound) {
  const SeriesPoly sp = parse_series_poly(text, K->generator_names());
  TruncSeries<F> s(K, bound);
  for (const auto& [deg, coef] : sp) {
    if (deg >= bound)
      throw Error(ErrorCode::parse, "parse",
                  "exponent " + std::to_string(deg) + " in \"" + std::string(text) + "\" is not below the bound " +
                      std::to_string(bound));
    s.set_coeff(deg, K->add(s.coeff(deg), evaluate(*K, coef)));
  }
  return s;
}

}  // namespace typeseq
