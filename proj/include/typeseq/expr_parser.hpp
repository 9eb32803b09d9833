#pragma once

// Input language for field elements, minimal polynomials and series.
//
//   expr          := ['+'|'-'] term (('+'|'-') term)*
//   term          := rational ('*' symbol-product)? | symbol-product
//   rational      := nat ('/' nat)?
//   symbol-product:= name ('^' nat)? ('*' name ('^' nat)?)*
//   series        := ['+'|'-'] sterm (('+'|'-') sterm)*
//   sterm         := (coef '*')? 'X' ('^' nat)? | coef
//   coef          := term | '(' expr ')'
//
// Parsing produces exact rational polynomials in the named symbols; binding
// them to a concrete field happens in field_io.hpp.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace typeseq {

/// Sparse polynomial: exponent vector (one entry per symbol) -> coefficient.
using SymbolPoly = std::map<std::vector<unsigned>, mpq_class>;

/// X-degree -> coefficient polynomial.
using SeriesPoly = std::map<std::size_t, SymbolPoly>;

SymbolPoly parse_symbol_poly(std::string_view text, const std::vector<std::string>& names);
SeriesPoly parse_series_poly(std::string_view text, const std::vector<std::string>& names);

/// Rejects reserved or malformed generator names.
void check_generator_name(const std::string& name, const std::vector<std::string>& existing);

}  // namespace typeseq
