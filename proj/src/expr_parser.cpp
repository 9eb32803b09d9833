#include "typeseq/expr_parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "typeseq/error.hpp"

namespace typeseq {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& names, bool series)
      : text_(text), names_(names), series_(series) {}

  SymbolPoly parse_element() {
    SymbolPoly p = parse_expr();
    expect_end();
    return p;
  }

  SeriesPoly parse_series() {
    SeriesPoly out;
    skip_ws();
    int sign = 1;
    if (peek() == '+' || peek() == '-') sign = take() == '-' ? -1 : 1;
    while (true) {
      auto [deg, coef] = parse_sterm();
      add_into(out[deg], coef, sign);
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
        continue;
      }
      break;
    }
    expect_end();
    for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::parse, "parse", "at position " + std::to_string(pos_) + " in \"" + std::string(text_) +
                                               "\": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char take() {
    char c = peek();
    if (c != '\0') ++pos_;
    return c;
  }
  void expect(char c) {
    if (take() != c) fail(std::string("expected '") + c + "'");
  }
  void expect_end() {
    if (peek() != '\0') fail(std::string("unexpected '") + text_[pos_] + "'");
  }

  bool at_identifier() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  /// Identifier starting at the current position, without consuming it.
  std::string peek_identifier() {
    skip_ws();
    std::size_t e = pos_;
    while (e < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[e])) || text_[e] == '_')) ++e;
    return std::string(text_.substr(pos_, e - pos_));
  }
  /// True when the text after the next '*' is an identifier (other than X in
  /// series mode).
  bool star_then_symbol() {
    skip_ws();
    if (peek() != '*') return false;
    const std::size_t save = pos_;
    ++pos_;
    bool ok = at_identifier() && !(series_ && peek_identifier() == "X");
    pos_ = save;
    return ok;
  }
  bool star_then_x() {
    skip_ws();
    if (peek() != '*') return false;
    const std::size_t save = pos_;
    ++pos_;
    bool ok = at_identifier() && peek_identifier() == "X";
    pos_ = save;
    return ok;
  }

  mpz_class parse_nat() {
    skip_ws();
    std::size_t e = pos_;
    while (e < text_.size() && std::isdigit(static_cast<unsigned char>(text_[e]))) ++e;
    if (e == pos_) fail("expected a natural number");
    mpz_class v(std::string(text_.substr(pos_, e - pos_)), 10);
    pos_ = e;
    return v;
  }

  unsigned parse_exponent() {
    mpz_class v = parse_nat();
    if (v > 1000000) fail("exponent too large");
    return static_cast<unsigned>(v.get_ui());
  }

  mpq_class parse_rational() {
    mpz_class num = parse_nat();
    mpz_class den = 1;
    if (peek() == '/') {
      take();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed rational: expected denominator");
      den = parse_nat();
      if (den == 0) fail("malformed rational: zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  std::vector<unsigned> parse_symbol_product() {
    std::vector<unsigned> exps(names_.size(), 0);
    while (true) {
      if (!at_identifier()) fail("expected a symbol");
      const std::size_t at = pos_;
      const std::string name = peek_identifier();
      const auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) {
        pos_ = at;
        fail("unknown symbol '" + name + "'");
      }
      pos_ += name.size();
      unsigned e = 1;
      if (peek() == '^') {
        take();
        e = parse_exponent();
      }
      exps[static_cast<std::size_t>(it - names_.begin())] += e;
      if (!star_then_symbol()) break;
      take();
    }
    return exps;
  }

  SymbolPoly parse_term() {
    SymbolPoly t;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpq_class q = parse_rational();
      std::vector<unsigned> exps(names_.size(), 0);
      if (star_then_symbol()) {
        take();
        exps = parse_symbol_product();
      }
      t[exps] = q;
    } else if (at_identifier()) {
      if (series_ && peek_identifier() == "X") fail("unexpected 'X' inside a coefficient");
      t[parse_symbol_product()] = 1;
    } else {
      fail(peek() == '\0' ? "unexpected end of input" : std::string("unexpected '") + peek() + "'");
    }
    return t;
  }

  static void add_into(SymbolPoly& acc, const SymbolPoly& p, int sign) {
    for (const auto& [e, c] : p) {
      mpq_class& slot = acc[e];
      slot += sign * c;
      if (sgn(slot) == 0) acc.erase(e);
    }
  }

  SymbolPoly parse_expr() {
    SymbolPoly out;
    int sign = 1;
    if (peek() == '+' || peek() == '-') sign = take() == '-' ? -1 : 1;
    while (true) {
      add_into(out, parse_term(), sign);
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
        continue;
      }
      break;
    }
    return out;
  }

  std::pair<std::size_t, SymbolPoly> parse_x_power() {
    if (peek_identifier() != "X") fail("expected 'X'");
    pos_ += 1;
    std::size_t deg = 1;
    if (peek() == '^') {
      take();
      deg = parse_exponent();
    }
    return {deg, {}};
  }

  std::pair<std::size_t, SymbolPoly> parse_sterm() {
    SymbolPoly coef;
    if (peek() == '(') {
      take();
      coef = parse_expr();
      expect(')');
    } else if (at_identifier() && peek_identifier() == "X") {
      auto [deg, unused] = parse_x_power();
      coef[std::vector<unsigned>(names_.size(), 0)] = 1;
      return {deg, coef};
    } else {
      coef = parse_term();
    }
    if (star_then_x()) {
      take();
      auto [deg, unused] = parse_x_power();
      return {deg, coef};
    }
    return {0, coef};
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  bool series_;
  std::size_t pos_ = 0;
};

}  // namespace

SymbolPoly parse_symbol_poly(std::string_view text, const std::vector<std::string>& names) {
  return Parser(text, names, false).parse_element();
}

SeriesPoly parse_series_poly(std::string_view text, const std::vector<std::string>& names) {
  return Parser(text, names, true).parse_series();
}

void check_generator_name(const std::string& name, const std::vector<std::string>& existing) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') ||
      !std::all_of(name.begin(), name.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }))
    throw Error(ErrorCode::parse, "generator-name", "'" + name + "' is not a valid identifier");
  if (name == "X") throw Error(ErrorCode::parse, "generator-name", "'X' is reserved for the series variable");
  if (std::find(existing.begin(), existing.end(), name) != existing.end())
    throw Error(ErrorCode::parse, "generator-name", "duplicate generator '" + name + "'");
}

}  // namespace typeseq
