#pragma once

// Canonical-form subspaces of k^d.  A Subspace always holds its basis in
// reduced row echelon form with unit pivots, so equality is representation
// equality.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "typeseq/error.hpp"
#include "typeseq/scalar.hpp"

namespace typeseq {

template <class F>
using Vec = std::vector<typename F::Scalar>;

/// Incrementally maintained RREF. Rows are kept mutually reduced at every
/// step, so reduction of a new vector can visit rows in any order.
template <class F>
class EchelonBuilder {
 public:
  using Scalar = typename F::Scalar;

  EchelonBuilder(F scalars, std::size_t ambient) : f_(std::move(scalars)), ambient_(ambient) {}

  const F& scalars() const { return f_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == ambient_; }

  /// Zeroes `v` at every pivot column. Returns the first nonzero index or
  /// ambient_dim() when v reduced to zero.
  std::size_t reduce(Vec<F>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (F::is_zero(v[p])) continue;
      const Scalar c = v[p];
      const auto& row = rows_[r];
      for (std::size_t k = p; k < ambient_; ++k)
        if (!F::is_zero(row[k])) v[k] -= c * row[k];
    }
    for (std::size_t k = 0; k < ambient_; ++k)
      if (!F::is_zero(v[k])) return k;
    return ambient_;
  }

  /// Adds v to the span. Returns false when v was already in it.
  bool insert(Vec<F> v) {
    if (v.size() != ambient_)
      throw Error(ErrorCode::invalid_argument, "subspace", "vector length does not match ambient dimension");
    const std::size_t p = reduce(v);
    if (p == ambient_) return false;
    const Scalar inv = f_.one() / v[p];
    for (std::size_t k = p; k < ambient_; ++k)
      if (!F::is_zero(v[k])) v[k] *= inv;
    for (auto& row : rows_) {
      if (F::is_zero(row[p])) continue;
      const Scalar c = row[p];
      for (std::size_t k = p; k < ambient_; ++k)
        if (!F::is_zero(v[k])) row[k] -= c * v[k];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  /// Rows sorted by pivot.
  void take(std::vector<Vec<F>>& rows, std::vector<std::size_t>& pivots) && {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    rows.clear();
    pivots.clear();
    for (std::size_t i : order) {
      rows.push_back(std::move(rows_[i]));
      pivots.push_back(pivots_[i]);
    }
  }

 private:
  F f_;
  std::size_t ambient_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

template <class F>
class Subspace {
 public:
  using Scalar = typename F::Scalar;
  using Vector = Vec<F>;

  Subspace(F scalars, std::size_t ambient) : f_(std::move(scalars)), ambient_(ambient) {}

  static Subspace zero(const F& f, std::size_t ambient) { return Subspace(f, ambient); }

  static Subspace full(const F& f, std::size_t ambient) {
    Subspace s(f, ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
      s.rows_.push_back(unit(f, ambient, i));
      s.pivots_.push_back(i);
    }
    return s;
  }

  static Subspace span(const F& f, std::size_t ambient, std::span<const Vector> vectors) {
    EchelonBuilder<F> b(f, ambient);
    for (const auto& v : vectors) {
      if (b.full()) break;
      b.insert(v);
    }
    return from_builder(std::move(b));
  }

  static Subspace from_builder(EchelonBuilder<F>&& b) {
    Subspace s(b.scalars(), b.ambient_dim());
    std::move(b).take(s.rows_, s.pivots_);
    return s;
  }

  static Vector unit(const F& f, std::size_t ambient, std::size_t i) {
    Vector v(ambient, f.zero());
    v[i] = f.one();
    return v;
  }

  const F& scalars() const { return f_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  std::size_t codim() const { return ambient_ - rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return rows_.size() == ambient_; }
  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residue of v modulo this subspace: v minus its projection along the
  /// pivot coordinates. Zero iff v lies in the subspace.
  Vector reduce(Vector v) const {
    check_length(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (F::is_zero(v[p])) continue;
      const Scalar c = v[p];
      for (std::size_t k = p; k < ambient_; ++k)
        if (!F::is_zero(rows_[r][k])) v[k] -= c * rows_[r][k];
    }
    return v;
  }

  /// Non-pivot coordinates of reduce(v); a coordinate system on k^d / U.
  Vector residue(const Vector& v) const {
    Vector red = reduce(v);
    Vector out;
    out.reserve(codim());
    std::size_t r = 0;
    for (std::size_t k = 0; k < ambient_; ++k) {
      if (r < pivots_.size() && pivots_[r] == k) {
        ++r;
        continue;
      }
      out.push_back(std::move(red[k]));
    }
    return out;
  }

  bool contains(const Vector& v) const {
    const Vector red = reduce(v);
    return std::all_of(red.begin(), red.end(), [](const Scalar& x) { return F::is_zero(x); });
  }

  bool contains(const Subspace& other) const {
    check_ambient(other);
    return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vector& v) { return contains(v); });
  }

  Subspace sum(const Subspace& other) const {
    check_ambient(other);
    EchelonBuilder<F> b(f_, ambient_);
    for (const auto& v : rows_) b.insert(v);
    for (const auto& v : other.rows_) b.insert(v);
    return from_builder(std::move(b));
  }

  /// Equations whose common kernel is this subspace: one per free column f,
  ///   x_f - sum_r rows[r][f] * x_{pivot r} = 0.
  std::vector<Vector> constraints() const {
    std::vector<Vector> eqs;
    std::size_t r = 0;
    for (std::size_t f = 0; f < ambient_; ++f) {
      if (r < pivots_.size() && pivots_[r] == f) {
        ++r;
        continue;
      }
      Vector eq(ambient_, f_.zero());
      eq[f] = f_.one();
      for (std::size_t i = 0; i < rows_.size(); ++i)
        if (!F::is_zero(rows_[i][f])) eq[pivots_[i]] = -rows_[i][f];
      eqs.push_back(std::move(eq));
    }
    return eqs;
  }

  /// Intersection as the kernel of the stacked constraint systems.
  Subspace intersect(const Subspace& other) const;

  /// Coordinates [offset, offset+len) of every basis vector, re-spanned.
  Subspace project(std::size_t offset, std::size_t len) const {
    EchelonBuilder<F> b(f_, len);
    for (const auto& v : rows_) {
      if (b.full()) break;
      b.insert(Vector(v.begin() + static_cast<std::ptrdiff_t>(offset),
                      v.begin() + static_cast<std::ptrdiff_t>(offset + len)));
    }
    return from_builder(std::move(b));
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

 private:
  void check_length(const Vector& v) const {
    if (v.size() != ambient_)
      throw Error(ErrorCode::invalid_argument, "subspace", "vector length does not match ambient dimension");
  }
  void check_ambient(const Subspace& o) const {
    if (o.ambient_ != ambient_)
      throw Error(ErrorCode::invalid_argument, "subspace",
                  "ambient dimension mismatch (" + std::to_string(ambient_) + " vs " +
                      std::to_string(o.ambient_) + ")");
  }

  F f_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Null space of an already row-reduced equation system.
template <class F>
Subspace<F> kernel_of(const F& f, EchelonBuilder<F>&& eb) {
  const std::size_t cols = eb.ambient_dim();
  std::vector<Vec<F>> rows;
  std::vector<std::size_t> pivots;
  std::move(eb).take(rows, pivots);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(cols, f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!F::is_zero(rows[r][free])) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return Subspace<F>::span(f, cols, basis);
}

/// Null space of the matrix whose rows are `equations` (each of length `cols`).
template <class F>
Subspace<F> kernel(const F& f, std::size_t cols, std::span<const Vec<F>> equations) {
  EchelonBuilder<F> eb(f, cols);
  for (const auto& e : equations) {
    if (eb.full()) break;
    eb.insert(e);
  }
  return kernel_of(f, std::move(eb));
}

template <class F>
Subspace<F> Subspace<F>::intersect(const Subspace& other) const {
  check_ambient(other);
  std::vector<Vector> eqs = constraints();
  std::vector<Vector> more = other.constraints();
  eqs.insert(eqs.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  return kernel<F>(f_, ambient_, eqs);
}

/// Rank of a list of vectors by plain Gaussian elimination on a copy; kept
/// separate from EchelonBuilder so tests can use it as an independent count.
template <class F>
std::size_t rank_of(const F& f, std::vector<Vec<F>> m) {
  std::size_t rank = 0;
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && F::is_zero(m[piv][c])) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const typename F::Scalar inv = f.one() / m[rank][c];
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (F::is_zero(m[r][c])) continue;
      const typename F::Scalar factor = m[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace typeseq
