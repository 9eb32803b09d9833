#pragma once

// Truncated power series over K: the coefficients of X^0 .. X^{bound-1}.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "typeseq/extension_field.hpp"

namespace typeseq {

template <class F>
class TruncSeries {
 public:
  using Element = FieldElement<F>;

  TruncSeries(FieldPtr<F> field, std::size_t bound) : field_(std::move(field)), coeffs_(bound, field_->zero()) {}

  /// gamma * X^degree truncated at `bound`.
  static TruncSeries monomial(FieldPtr<F> field, std::size_t bound, const Element& gamma, std::size_t degree) {
    TruncSeries s(std::move(field), bound);
    if (degree >= bound)
      throw Error(ErrorCode::invalid_argument, "series", "exponent " + std::to_string(degree) +
                                                              " is not below the truncation bound " +
                                                              std::to_string(bound));
    s.coeffs_[degree] = gamma;
    return s;
  }

  /// Reads blocks of n coordinates, degree-major.
  static TruncSeries from_coords(FieldPtr<F> field, const Vec<F>& coords) {
    const std::size_t n = field->degree();
    TruncSeries s(field, coords.size() / n);
    for (std::size_t d = 0; d < s.bound(); ++d)
      for (std::size_t b = 0; b < n; ++b) s.coeffs_[d].coords[b] = coords[d * n + b];
    return s;
  }

  const FieldPtr<F>& field() const { return field_; }
  std::size_t bound() const { return coeffs_.size(); }
  const Element& coeff(std::size_t d) const { return coeffs_.at(d); }
  void set_coeff(std::size_t d, Element c) { coeffs_.at(d) = std::move(c); }
  const std::vector<Element>& coeffs() const { return coeffs_; }

  /// Least degree with a nonzero coefficient; nullopt when zero below the bound.
  std::optional<std::size_t> valuation() const {
    for (std::size_t d = 0; d < coeffs_.size(); ++d)
      if (!field_->is_zero(coeffs_[d])) return d;
    return std::nullopt;
  }

  bool is_zero() const { return !valuation().has_value(); }

  /// Coordinates of the first `degrees` coefficients (zero padded).
  Vec<F> coords(std::size_t degrees) const {
    const std::size_t n = field_->degree();
    Vec<F> out(n * degrees, field_->scalars().zero());
    for (std::size_t d = 0; d < degrees && d < coeffs_.size(); ++d)
      for (std::size_t b = 0; b < n; ++b) out[d * n + b] = coeffs_[d].coords[b];
    return out;
  }

  TruncSeries truncated(std::size_t bound) const {
    TruncSeries s(field_, bound);
    for (std::size_t d = 0; d < bound && d < coeffs_.size(); ++d) s.coeffs_[d] = coeffs_[d];
    return s;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return *a.field_ == *b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  FieldPtr<F> field_;
  std::vector<Element> coeffs_;
};

template <class F>
void check_same_field(const TruncSeries<F>& x, const TruncSeries<F>& y) {
  if (x.field() != y.field() && !(*x.field() == *y.field()))
    throw Error(ErrorCode::invalid_argument, "series", "series over different fields");
}

/// Truncated convolution; the result bound is the smaller of the two bounds.
template <class F>
TruncSeries<F> ts_mul(const TruncSeries<F>& x, const TruncSeries<F>& y) {
  check_same_field(x, y);
  const auto& K = *x.field();
  const std::size_t D = std::min(x.bound(), y.bound());
  TruncSeries<F> out(x.field(), D);
  std::vector<FieldElement<F>> acc(D, K.zero());
  for (std::size_t i = 0; i < D; ++i) {
    if (K.is_zero(x.coeff(i))) continue;
    for (std::size_t j = 0; i + j < D; ++j) {
      if (K.is_zero(y.coeff(j))) continue;
      K.mul_acc(x.coeff(i).coords.data(), y.coeff(j).coords.data(), acc[i + j].coords.data());
    }
  }
  for (std::size_t d = 0; d < D; ++d) out.set_coeff(d, std::move(acc[d]));
  return out;
}

template <class F>
TruncSeries<F> ts_add(const TruncSeries<F>& x, const TruncSeries<F>& y) {
  check_same_field(x, y);
  const std::size_t D = std::min(x.bound(), y.bound());
  TruncSeries<F> out(x.field(), D);
  for (std::size_t d = 0; d < D; ++d) out.set_coeff(d, x.field()->add(x.coeff(d), y.coeff(d)));
  return out;
}

template <class F>
TruncSeries<F> ts_sub(const TruncSeries<F>& x, const TruncSeries<F>& y) {
  check_same_field(x, y);
  const std::size_t D = std::min(x.bound(), y.bound());
  TruncSeries<F> out(x.field(), D);
  for (std::size_t d = 0; d < D; ++d) out.set_coeff(d, x.field()->sub(x.coeff(d), y.coeff(d)));
  return out;
}

template <class F>
std::optional<std::size_t> ts_valuation(const TruncSeries<F>& x) {
  return x.valuation();
}

/// Multiplies by X^shift (shift may be negative) and re-truncates at
/// `new_bound`. A negative shift may not drop a nonzero coefficient.
template <class F>
TruncSeries<F> ts_shift_extend(const TruncSeries<F>& x, long shift, std::size_t new_bound) {
  const auto v = x.valuation();
  if (shift < 0 && v && static_cast<long>(*v) + shift < 0)
    throw Error(ErrorCode::invalid_argument, "series-shift",
                "shift by " + std::to_string(shift) + " drops the nonzero coefficient of X^" + std::to_string(*v));
  TruncSeries<F> out(x.field(), new_bound);
  for (std::size_t d = 0; d < x.bound(); ++d) {
    const long target = static_cast<long>(d) + shift;
    if (target < 0 || target >= static_cast<long>(new_bound)) continue;
    out.set_coeff(static_cast<std::size_t>(target), x.coeff(d));
  }
  return out;
}

/// Series expression in the grammar accepted by parse_series; round-trips.
template <class F>
std::string format_series(const ExtensionField<F>& K, const Vec<F>& coords) {
  const std::size_t n = K.degree();
  std::string out;
  for (std::size_t d = 0; d * n < coords.size(); ++d) {
    FieldElement<F> c{Vec<F>(coords.begin() + static_cast<std::ptrdiff_t>(d * n),
                             coords.begin() + static_cast<std::ptrdiff_t>((d + 1) * n))};
    if (K.is_zero(c)) continue;
    std::string cs = K.format(c);
    bool neg = false;
    const bool compound = cs.find_first_of("+-", 1) != std::string::npos;
    if (!compound && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    const std::string x = d == 0 ? "" : (d == 1 ? "X" : "X^" + std::to_string(d));
    std::string term;
    if (x.empty())
      term = compound ? "(" + cs + ")" : cs;
    else if (cs == "1")
      term = x;
    else
      term = (compound ? "(" + cs + ")" : cs) + "*" + x;
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

template <class F>
std::string format_series(const TruncSeries<F>& s) {
  return format_series(*s.field(), s.coords(s.bound()));
}

}  // namespace typeseq
