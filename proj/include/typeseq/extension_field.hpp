#pragma once

// Finite extensions K/k presented as towers of simple extensions
//   k = K_0 ⊂ K_1 = K_0[a]/(f_1) ⊂ ... ⊂ K_m = K,
// with coordinates in the power-product basis. Basis index
//   e_1 + d_1*(e_2 + d_2*(...))
// so the first generator varies fastest: Q(a,b) has basis {1, a, b, a*b}.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "typeseq/error.hpp"
#include "typeseq/scalar.hpp"
#include "typeseq/subspace.hpp"

namespace typeseq {

template <class F>
struct FieldElement {
  Vec<F> coords;
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

template <class F>
class ExtensionField;

template <class F>
using FieldPtr = std::shared_ptr<const ExtensionField<F>>;

template <class F>
class ExtensionField {
 public:
  using Scalar = typename F::Scalar;
  using Element = FieldElement<F>;

  /// K = k.
  static FieldPtr<F> base_only(F scalars) {
    auto K = std::shared_ptr<ExtensionField>(new ExtensionField(std::move(scalars)));
    K->table_ = {K->f_.one()};
    K->finish();
    return K;
  }

  /// K[y]/(y^d + c_{d-1} y^{d-1} + ... + c_0) for `monic` = (c_0, ..., c_{d-1}, 1).
  static FieldPtr<F> adjoin(const ExtensionField& K, std::string name, const std::vector<Element>& monic);

  const F& scalars() const { return f_; }
  std::size_t degree() const { return n_; }
  std::size_t levels() const { return names_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<std::size_t>& level_degrees() const { return level_degrees_; }
  /// Minimal polynomial of each level, low coefficients first, over the
  /// preceding level (embedded in that level's coordinates).
  const std::vector<std::vector<Vec<F>>>& minimal_polynomials() const { return minpolys_; }

  Element zero() const { return Element{Vec<F>(n_, f_.zero())}; }
  Element one() const { return basis(0); }
  Element basis(std::size_t i) const {
    Element e = zero();
    e.coords.at(i) = f_.one();
    return e;
  }
  Element from_scalar(const Scalar& s) const {
    Element e = zero();
    e.coords[0] = s;
    return e;
  }
  /// Level generator j (0-based) as an element of K.
  Element generator(std::size_t level) const { return basis(level_stride(level)); }
  std::size_t level_stride(std::size_t level) const {
    std::size_t s = 1;
    for (std::size_t i = 0; i < level; ++i) s *= level_degrees_[i];
    return s;
  }
  /// Exponent of each generator in basis element i.
  std::vector<std::size_t> basis_exponents(std::size_t i) const {
    std::vector<std::size_t> e;
    for (std::size_t d : level_degrees_) {
      e.push_back(i % d);
      i /= d;
    }
    return e;
  }

  bool is_zero(const Element& x) const {
    for (const auto& c : x.coords)
      if (!F::is_zero(c)) return false;
    return true;
  }

  Element add(const Element& x, const Element& y) const {
    check(x);
    check(y);
    Element r = x;
    for (std::size_t i = 0; i < n_; ++i) r.coords[i] += y.coords[i];
    return r;
  }
  Element sub(const Element& x, const Element& y) const {
    check(x);
    check(y);
    Element r = x;
    for (std::size_t i = 0; i < n_; ++i) r.coords[i] -= y.coords[i];
    return r;
  }
  Element neg(const Element& x) const {
    Element r = x;
    for (auto& c : r.coords) c = -c;
    return r;
  }
  Element scale(const Scalar& s, const Element& x) const {
    Element r = x;
    for (auto& c : r.coords) c *= s;
    return r;
  }
  Element mul(const Element& x, const Element& y) const {
    check(x);
    check(y);
    Element r = zero();
    mul_acc(x.coords.data(), y.coords.data(), r.coords.data());
    return r;
  }
  Element pow(const Element& x, std::size_t e) const {
    Element r = one(), b = x;
    while (e > 0) {
      if (e & 1u) r = mul(r, b);
      b = mul(b, b);
      e >>= 1u;
    }
    return r;
  }

  /// Solves x*z = 1 through x's multiplication matrix.
  Element inv(const Element& x) const;

  /// out += x*y on raw coordinate blocks of length n.
  void mul_acc(const Scalar* x, const Scalar* y, Scalar* out) const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (F::is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (F::is_zero(y[j])) continue;
        const Scalar xy = x[i] * y[j];
        for (const auto& [k, c] : sparse_[i * n_ + j]) out[k] += xy * c;
      }
    }
  }

  /// Matrix of z -> x*z; column j is x*e_j.
  std::vector<Vec<F>> mul_matrix(const Element& x) const {
    std::vector<Vec<F>> m(n_, Vec<F>(n_, f_.zero()));
    for (std::size_t j = 0; j < n_; ++j) {
      Element p = mul(x, basis(j));
      for (std::size_t i = 0; i < n_; ++i) m[i][j] = p.coords[i];
    }
    return m;
  }

  /// Nonzero (k, c) with e_i*e_j = sum c*e_k.
  const std::vector<std::pair<std::size_t, Scalar>>& products(std::size_t i, std::size_t j) const {
    return sparse_[i * n_ + j];
  }

  /// Structure constant: coefficient of e_k in e_i*e_j.
  const Scalar& structure(std::size_t i, std::size_t j, std::size_t k) const { return table_[(i * n_ + j) * n_ + k]; }

  /// Basis element name, e.g. "1", "a", "a^2*b".
  std::string basis_name(std::size_t i) const;
  /// Element expression in the grammar accepted by parse_element.
  std::string format(const Element& x) const;
  /// Description of the tower, e.g. "Q(a: a^2 - 2)(b: b^2 - 3)".
  std::string describe() const;

  friend bool operator==(const ExtensionField& a, const ExtensionField& b) {
    return a.f_ == b.f_ && a.names_ == b.names_ && a.table_ == b.table_;
  }

 private:
  explicit ExtensionField(F scalars) : f_(std::move(scalars)) {}

  void check(const Element& x) const {
    if (x.coords.size() != n_)
      throw Error(ErrorCode::invalid_argument, "field-element", "coordinate vector length does not match field degree");
  }

  void finish();
  void validate_table() const;

  F f_;
  std::size_t n_ = 1;
  std::vector<std::string> names_;
  std::vector<std::size_t> level_degrees_;
  std::vector<std::vector<Vec<F>>> minpolys_;
  std::vector<Scalar> table_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse_;
};

template <class F>
void ExtensionField<F>::finish() {
  sparse_.assign(n_ * n_, {});
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (!F::is_zero(structure(i, j, k))) sparse_[i * n_ + j].emplace_back(k, structure(i, j, k));
}

template <class F>
FieldPtr<F> ExtensionField<F>::adjoin(const ExtensionField& K, std::string name, const std::vector<Element>& monic) {
  if (monic.size() < 2)
    throw Error(ErrorCode::field, "minimal-polynomial", "polynomial for '" + name + "' has degree 0");
  const std::size_t d = monic.size() - 1;
  if (!(monic.back() == K.one()))
    throw Error(ErrorCode::field, "minimal-polynomial", "polynomial for '" + name + "' is not monic");
  for (const auto& c : monic) K.check(c);

  auto L = std::shared_ptr<ExtensionField>(new ExtensionField(K.f_));
  const std::size_t m = K.n_;
  L->n_ = m * d;
  L->names_ = K.names_;
  L->names_.push_back(std::move(name));
  L->level_degrees_ = K.level_degrees_;
  L->level_degrees_.push_back(d);
  L->minpolys_ = K.minpolys_;
  std::vector<Vec<F>> poly;
  for (const auto& c : monic) poly.push_back(c.coords);
  L->minpolys_.push_back(std::move(poly));

  // Elements of L are polynomials of degree < d in y over K; basis b*y^e has
  // index b + m*e. Product = polynomial product reduced by y^d = -sum c_i y^i.
  auto multiply = [&](const std::vector<Element>& x, const std::vector<Element>& y) {
    std::vector<Element> prod(2 * d - 1, K.zero());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) prod[i + j] = K.add(prod[i + j], K.mul(x[i], y[j]));
    for (std::size_t top = prod.size(); top-- > d;) {
      const Element lead = prod[top];
      if (K.is_zero(lead)) continue;
      for (std::size_t i = 0; i < d; ++i) prod[top - d + i] = K.sub(prod[top - d + i], K.mul(lead, monic[i]));
      prod[top] = K.zero();
    }
    prod.resize(d);
    return prod;
  };
  auto unit = [&](std::size_t idx) {
    std::vector<Element> v(d, K.zero());
    v[idx / m] = K.basis(idx % m);
    return v;
  };

  L->table_.assign(L->n_ * L->n_ * L->n_, K.f_.zero());
  for (std::size_t i = 0; i < L->n_; ++i)
    for (std::size_t j = 0; j < L->n_; ++j) {
      const auto p = multiply(unit(i), unit(j));
      for (std::size_t e = 0; e < d; ++e)
        for (std::size_t b = 0; b < m; ++b) L->table_[(i * L->n_ + j) * L->n_ + b + m * e] = p[e].coords[b];
    }
  L->finish();
  L->validate_table();
  return L;
}

template <class F>
void ExtensionField<F>::validate_table() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k)
        if (!(structure(i, j, k) == structure(j, i, k)))
          throw Error(ErrorCode::field, "structure-constants",
                      "multiplication table is not commutative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) {
        const Element a = mul(mul(basis(i), basis(j)), basis(k));
        const Element b = mul(basis(i), mul(basis(j), basis(k)));
        if (!(a == b))
          throw Error(ErrorCode::field, "structure-constants",
                      "multiplication table is not associative at (" + std::to_string(i) + "," + std::to_string(j) +
                          "," + std::to_string(k) + ")");
      }
  if (!(mul(one(), one()) == one()))
    throw Error(ErrorCode::field, "structure-constants", "basis element 0 is not the unit");
}

template <class F>
typename ExtensionField<F>::Element ExtensionField<F>::inv(const Element& x) const {
  check(x);
  if (is_zero(x)) throw Error(ErrorCode::field, "inverse", "inversion of zero");
  // Solve M z = e_0 by eliminating the augmented system [M | e_0].
  auto m = mul_matrix(x);
  for (std::size_t r = 0; r < n_; ++r) m[r].push_back(r == 0 ? f_.one() : f_.zero());
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && F::is_zero(m[piv][c])) ++piv;
    if (piv == n_)
      throw Error(ErrorCode::field, "field-check",
                  "nonzero element " + format(x) + " has a singular multiplication matrix; the tower " + describe() +
                      " is not a field (reducible minimal polynomial?)");
    std::swap(m[piv], m[c]);
    const Scalar s = f_.one() / m[c][c];
    for (auto& v : m[c]) v *= s;
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == c || F::is_zero(m[r][c])) continue;
      const Scalar factor = m[r][c];
      for (std::size_t k = c; k <= n_; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  Element z = zero();
  for (std::size_t r = 0; r < n_; ++r) z.coords[r] = m[r][n_];
  return z;
}

template <class F>
std::string ExtensionField<F>::basis_name(std::size_t i) const {
  if (i == 0) return "1";
  std::string out;
  const auto e = basis_exponents(i);
  for (std::size_t l = 0; l < e.size(); ++l) {
    if (e[l] == 0) continue;
    if (!out.empty()) out += "*";
    out += names_[l];
    if (e[l] > 1) out += "^" + std::to_string(e[l]);
  }
  return out;
}

template <class F>
std::string ExtensionField<F>::format(const Element& x) const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i) {
    const Scalar& c = x.coords[i];
    if (F::is_zero(c)) continue;
    const bool neg = F::is_negative(c);
    const Scalar mag = neg ? Scalar(-c) : c;
    std::string term;
    if (i == 0)
      term = f_.format(mag);
    else if (F::is_one(mag))
      term = basis_name(i);
    else
      term = f_.format(mag) + "*" + basis_name(i);
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

template <class F>
std::string ExtensionField<F>::describe() const {
  std::string out = f_.describe();
  for (std::size_t l = 0; l < names_.size(); ++l) {
    // minimal polynomial printed with coefficients from level l
    std::string poly;
    const auto& mp = minpolys_[l];
    const std::size_t d = mp.size() - 1;
    const std::size_t stride = level_stride(l);
    auto coef_str = [&](const Vec<F>& c) {
      // coefficients live in the first `stride` coordinates
      Element e = zero();
      for (std::size_t k = 0; k < c.size() && k < stride; ++k) e.coords[k] = c[k];
      return format(e);
    };
    for (std::size_t e = d + 1; e-- > 0;) {
      Element c = zero();
      for (std::size_t k = 0; k < mp[e].size(); ++k) c.coords[k] = mp[e][k];
      if (is_zero(c)) continue;
      std::string mono = e == 0 ? "" : (e == 1 ? names_[l] : names_[l] + "^" + std::to_string(e));
      std::string cs = coef_str(mp[e]);
      bool neg = false;
      if (!cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos) {
        neg = true;
        cs = cs.substr(1);
      }
      const bool compound = cs.find_first_of("+-", 1) != std::string::npos;
      std::string term;
      if (mono.empty())
        term = compound ? "(" + cs + ")" : cs;
      else if (cs == "1")
        term = mono;
      else
        term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
      if (poly.empty())
        poly = neg ? "-" + term : term;
      else
        poly += (neg ? " - " : " + ") + term;
    }
    out += "(" + names_[l] + ": " + poly + ")";
  }
  return out;
}

}  // namespace typeseq
