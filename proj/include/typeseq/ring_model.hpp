#pragma once

// Rings k ⊆ R ⊆ K[[X]] with X^N K[[X]] ⊆ R, stored modulo the conductor:
// R is the subspace W of K[[X]]/X^N K[[X]] ≅ k^{nN}, coordinates degree-major
// (index d*n + b is the coefficient of e_b X^d).  Fractional ideals F with
// X^N K[[X]] ⊆ F ⊆ K[[X]] are stored the same way.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "typeseq/field_subspaces.hpp"
#include "typeseq/series.hpp"
#include "typeseq/subspace.hpp"

namespace typeseq {

/// Value semigroup data up to the conductor exponent:
///   v(R) = {s_0 = 0 < s_1 < ... < s_r = c, ->},  s_{r+j} = c + j,  s_{r+l} = N.
struct SemigroupData {
  std::vector<std::size_t> s;
  std::vector<std::size_t> gaps;
  std::size_t c = 0;
  std::size_t N = 0;
  std::size_t r = 0;
  std::size_t l = 0;

  std::size_t chain_length() const { return r + l; }
  bool contains(std::size_t x) const {
    if (x >= c) return true;
    for (std::size_t g : gaps)
      if (g == x) return false;
    return true;
  }
  friend bool operator==(const SemigroupData&, const SemigroupData&) = default;
};

template <class F>
struct GSRSpec {
  FieldPtr<F> field;
  std::size_t N = 0;
  /// V_0 .. V_{N-1}; V_i = K for i >= N.
  std::vector<Subspace<F>> spaces;
};

template <class F>
class RingModel;

template <class F>
using RingPtr = std::shared_ptr<const RingModel<F>>;

// ---------------------------------------------------------------------------
// Coordinate products modulo X^N.

/// out += (e_beta X^delta) * u, truncated at N degrees.
template <class F>
void add_basis_monomial_product(const ExtensionField<F>& K, std::size_t N, std::size_t beta, std::size_t delta,
                                const Vec<F>& u, Vec<F>& out) {
  const std::size_t n = K.degree();
  for (std::size_t t = 0; t + delta < N; ++t)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& uj = u[t * n + j];
      if (F::is_zero(uj)) continue;
      for (const auto& [k, c] : K.products(beta, j)) out[(t + delta) * n + k] += uj * c;
    }
}

/// trunc(a*b) modulo X^N for coordinate vectors of length n*N.
template <class F>
Vec<F> truncated_product(const ExtensionField<F>& K, std::size_t N, const Vec<F>& a, const Vec<F>& b) {
  const std::size_t n = K.degree();
  Vec<F> out(n * N, K.scalars().zero());
  for (std::size_t i = 0; i < N; ++i) {
    bool zero_block = true;
    for (std::size_t x = 0; x < n && zero_block; ++x) zero_block = F::is_zero(a[i * n + x]);
    if (zero_block) continue;
    for (std::size_t j = 0; i + j < N; ++j) K.mul_acc(&a[i * n], &b[j * n], &out[(i + j) * n]);
  }
  return out;
}

/// Coordinates of degrees >= start (the image of X^start K[[X]]).
template <class F>
Subspace<F> tail_space(const F& f, std::size_t n, std::size_t N, std::size_t start) {
  std::vector<Vec<F>> units;
  for (std::size_t i = start * n; i < n * N; ++i) units.push_back(Subspace<F>::unit(f, n * N, i));
  return Subspace<F>::span(f, n * N, units);
}

/// V_U(i): leading coefficients at degree i of elements of U with valuation
/// >= i, computed as (U ∩ X^i-tail) projected to block i.
template <class F>
Subspace<F> leading_space(const ExtensionField<F>& K, std::size_t N, const Subspace<F>& U, std::size_t i) {
  const std::size_t n = K.degree();
  if (i >= N) return Subspace<F>::full(K.scalars(), n);
  const Subspace<F> tail = U.intersect(tail_space(K.scalars(), n, N, i));
  return tail.project(i * n, n);
}

// ---------------------------------------------------------------------------

template <class F>
class RingModel {
 public:
  /// Builds the model from the image W of R modulo X^N K[[X]]. Re-minimizes
  /// N and enforces locality; multiplicative closure is the caller's
  /// responsibility (build_gsr / build_generated guarantee it).
  static RingPtr<F> from_image(FieldPtr<F> field, std::size_t N, Subspace<F> W);

  const FieldPtr<F>& field_ptr() const { return field_; }
  const ExtensionField<F>& field() const { return *field_; }
  std::size_t degree() const { return field_->degree(); }
  /// Conductor exponent N.
  std::size_t conductor() const { return N_; }
  std::size_t ambient_dim() const { return field_->degree() * N_; }
  const Subspace<F>& image() const { return W_; }
  /// V_R(i); K for i >= N.
  const Subspace<F>& graded_piece(std::size_t i) const { return i < N_ ? pieces_[i] : full_; }
  const SemigroupData& semigroup() const { return semigroup_; }
  /// n_i = dim V_R(s_i), 0 <= i < r+l.
  const std::vector<std::size_t>& n_list() const { return n_list_; }

  friend bool operator==(const RingModel& a, const RingModel& b) {
    return *a.field_ == *b.field_ && a.N_ == b.N_ && a.W_ == b.W_;
  }

 private:
  RingModel(FieldPtr<F> field, std::size_t N, Subspace<F> W)
      : field_(std::move(field)), N_(N), W_(std::move(W)), full_(Subspace<F>::full(field_->scalars(), field_->degree())) {}

  FieldPtr<F> field_;
  std::size_t N_;
  Subspace<F> W_;
  Subspace<F> full_;
  std::vector<Subspace<F>> pieces_;
  SemigroupData semigroup_;
  std::vector<std::size_t> n_list_;
};

template <class F>
RingPtr<F> RingModel<F>::from_image(FieldPtr<F> field, std::size_t N, Subspace<F> W) {
  const auto& K = *field;
  const std::size_t n = K.degree();
  if (W.ambient_dim() != n * N)
    throw Error(ErrorCode::invalid_argument, "ring-image", "image dimension does not match n*N");
  // A full top piece means the conductor is smaller.
  while (N > 0) {
    std::size_t top = 0;
    for (std::size_t p : W.pivots())
      if (p >= (N - 1) * n) ++top;
    if (top < n) break;
    W = W.project(0, (N - 1) * n);
    --N;
  }
  auto R = std::shared_ptr<RingModel>(new RingModel(std::move(field), N, std::move(W)));
  for (std::size_t i = 0; i < N; ++i) R->pieces_.push_back(leading_space(K, N, R->W_, i));
  if (N > 0 && !(R->pieces_[0] == base_line(K)))
    throw Error(ErrorCode::ring, "locality",
                "degree-0 part of the ring is not k*1 (dimension " + std::to_string(R->pieces_[0].dim()) +
                    "); the ring must be local with residue field k");

  SemigroupData& sg = R->semigroup_;
  sg.N = N;
  std::vector<bool> member(N + 1, true);
  for (std::size_t i = 0; i < N; ++i) member[i] = !R->pieces_[i].is_zero();
  sg.c = N;
  while (sg.c > 0 && member[sg.c - 1]) --sg.c;
  for (std::size_t i = 0; i <= N; ++i) {
    if (member[i])
      sg.s.push_back(i);
    else
      sg.gaps.push_back(i);
  }
  for (std::size_t i = 0; i < sg.s.size(); ++i)
    if (sg.s[i] == sg.c) sg.r = i;
  sg.l = N - sg.c;
  for (std::size_t i = 0; i < sg.chain_length(); ++i) R->n_list_.push_back(R->pieces_[sg.s[i]].dim());
  return R;
}

template <class F>
struct FractionalIdeal {
  RingPtr<F> ring;
  /// Image modulo X^N K[[X]].
  Subspace<F> U;

  std::size_t dim() const { return U.dim(); }
  friend bool operator==(const FractionalIdeal& a, const FractionalIdeal& b) { return a.U == b.U; }
};

template <class F>
FractionalIdeal<F> as_ideal(const RingPtr<F>& R) {
  return {R, R->image()};
}

/// The integral closure K[[X]].
template <class F>
FractionalIdeal<F> closure_ideal(const RingPtr<F>& R) {
  return {R, Subspace<F>::full(R->field().scalars(), R->ambient_dim())};
}

// ---------------------------------------------------------------------------
// Builders.

template <class F>
RingPtr<F> build_gsr(const GSRSpec<F>& spec) {
  const auto& K = *spec.field;
  const std::size_t n = K.degree(), N = spec.N;
  if (spec.spaces.size() != N)
    throw Error(ErrorCode::ring, "gsr-spec",
                "expected " + std::to_string(N) + " graded spaces, got " + std::to_string(spec.spaces.size()));
  for (const auto& V : spec.spaces)
    if (V.ambient_dim() != n) throw Error(ErrorCode::ring, "gsr-spec", "graded space is not a subspace of K");
  if (N > 0 && !(spec.spaces[0] == base_line(K)))
    throw Error(ErrorCode::ring, "locality", "V_0 must be k*1");
  for (std::size_t i = 1; i < N; ++i)
    for (std::size_t j = i; i + j < N; ++j) {
      if (spec.spaces[i].is_zero() || spec.spaces[j].is_zero()) continue;
      if (!spec.spaces[i + j].contains(product_span(spec.spaces[i], spec.spaces[j], K)))
        throw Error(ErrorCode::ring, "multiplicative-closure",
                    "V_" + std::to_string(i) + " * V_" + std::to_string(j) + " is not contained in V_" +
                        std::to_string(i + j) + " (offending pair (" + std::to_string(i) + "," + std::to_string(j) +
                        "))");
    }
  EchelonBuilder<F> b(K.scalars(), n * N);
  for (std::size_t i = 0; i < N; ++i)
    for (const auto& row : spec.spaces[i].basis()) {
      Vec<F> v(n * N, K.scalars().zero());
      std::copy(row.begin(), row.end(), v.begin() + static_cast<std::ptrdiff_t>(i * n));
      b.insert(std::move(v));
    }
  return RingModel<F>::from_image(spec.field, N, Subspace<F>::from_builder(std::move(b)));
}

/// k[[g_1, ..., g_m]] modulo its conductor. The working truncation D starts
/// at 2*(max valuation + e) and doubles up to `max_degree_cap`; the
/// conductor N is accepted once V(j) = K for all j in [N, D) with D - N >= e,
/// e the least generator valuation.
template <class F>
RingPtr<F> build_generated(const FieldPtr<F>& field, const std::vector<TruncSeries<F>>& gens,
                           std::size_t max_degree_cap = 512) {
  const auto& K = *field;
  const std::size_t n = K.degree();
  if (gens.empty()) throw Error(ErrorCode::ring, "generators", "at least one generator is required");
  std::size_t e = 0, vmax = 0;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (!(*gens[g].field() == K)) throw Error(ErrorCode::ring, "generators", "generator over a different field");
    const auto v = gens[g].valuation();
    if (!v) throw Error(ErrorCode::ring, "generators", "generator " + std::to_string(g + 1) + " is zero");
    if (*v == 0)
      throw Error(ErrorCode::ring, "generators",
                  "generator " + std::to_string(g + 1) + " is a unit (valuation 0); generators must lie in X*K[[X]]");
    e = e == 0 ? *v : std::min(e, *v);
    vmax = std::max(vmax, *v);
  }
  std::size_t D = std::min(2 * (vmax + e), max_degree_cap);
  while (true) {
    for (const auto& g : gens)
      if (g.bound() < D)
        throw Error(ErrorCode::ring, "generators",
                    "generator truncation bound " + std::to_string(g.bound()) + " is below the working bound " +
                        std::to_string(D));
    std::vector<Vec<F>> gc;
    for (const auto& g : gens) gc.push_back(g.coords(D));

    EchelonBuilder<F> W(K.scalars(), n * D);
    std::vector<Vec<F>> queue{TruncSeries<F>::monomial(field, D, K.one(), 0).coords(D)};
    W.insert(queue.front());
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto& g : gc) {
        Vec<F> p = truncated_product(K, D, queue[q], g);
        if (W.insert(p)) queue.push_back(std::move(p));
      }
    Subspace<F> image = Subspace<F>::from_builder(std::move(W));

    std::vector<std::size_t> dims(D, 0);
    for (std::size_t p : image.pivots()) ++dims[p / n];
    std::size_t N = D;
    while (N > 0 && dims[N - 1] == n) --N;
    if (N < D && D - N >= e) return RingModel<F>::from_image(field, N, image.project(0, n * N));

    if (D >= max_degree_cap) {
      std::string partial;
      for (std::size_t i = 0; i < D; ++i) partial += (i ? "," : "") + std::to_string(dims[i]);
      throw Error(ErrorCode::conductor_not_found, "conductor",
                  "conductor not found below max-degree-cap " + std::to_string(max_degree_cap) +
                      "; dim V(i) for i < " + std::to_string(D) + ": [" + partial + "], field degree " +
                      std::to_string(n));
    }
    D = std::min(2 * D, max_degree_cap);
  }
}

// ---------------------------------------------------------------------------
// Ideal operations.

template <class F>
Subspace<F> filtration_space(const FractionalIdeal<F>& I, std::size_t i) {
  const auto& R = *I.ring;
  return leading_space(R.field(), R.conductor(), I.U, i);
}

template <class F>
Subspace<F> filtration_space(const RingPtr<F>& R, std::size_t i) {
  return filtration_space(as_ideal(R), i);
}

/// a_i = { x in R | v(x) >= s_i }, 0 <= i <= r+l.
template <class F>
FractionalIdeal<F> ideal_a(const RingPtr<F>& R, std::size_t i) {
  const auto& sg = R->semigroup();
  if (i > sg.chain_length())
    throw Error(ErrorCode::invalid_argument, "ideal-index",
                "index " + std::to_string(i) + " exceeds r+l = " + std::to_string(sg.chain_length()));
  const auto& f = R->field().scalars();
  return {R, R->image().intersect(tail_space(f, R->degree(), R->conductor(), sg.s[i]))};
}

/// R : I for any I with X^N K[[X]] ⊆ I ⊆ K[[X]]. The result contains the
/// conductor and lies in K[[X]], and z*I ⊆ R depends only on z mod X^N, so
/// it is the kernel of z -> (trunc(z*u) mod W)_u over a basis u of I.
template <class F>
FractionalIdeal<F> colon(const FractionalIdeal<F>& I) {
  const auto& R = *I.ring;
  const auto& K = R.field();
  const std::size_t n = K.degree(), N = R.conductor(), d = n * N;
  const auto& W = R.image();
  EchelonBuilder<F> eqs(K.scalars(), d);
  std::vector<Vec<F>> residues(d);
  for (const auto& u : I.U.basis()) {
    if (eqs.full()) break;
    for (std::size_t delta = 0; delta < N; ++delta)
      for (std::size_t beta = 0; beta < n; ++beta) {
        Vec<F> prod(d, K.scalars().zero());
        add_basis_monomial_product(K, N, beta, delta, u, prod);
        residues[delta * n + beta] = W.residue(prod);
      }
    for (std::size_t row = 0; row < W.codim(); ++row) {
      Vec<F> eq(d, K.scalars().zero());
      bool nonzero = false;
      for (std::size_t b = 0; b < d; ++b) {
        eq[b] = residues[b][row];
        nonzero = nonzero || !F::is_zero(eq[b]);
      }
      if (nonzero) eqs.insert(std::move(eq));
    }
  }
  return {I.ring, kernel_of(K.scalars(), std::move(eqs))};
}

/// R : I for I ⊆ R (the dual chain's entries).
template <class F>
FractionalIdeal<F> colon_in_closure(const FractionalIdeal<F>& I) {
  if (!I.ring->image().contains(I.U))
    throw Error(ErrorCode::invalid_argument, "colon-precondition", "ideal is not contained in R");
  return colon(I);
}

/// ℓ_R(I/J) for J ⊆ I; every composition factor is k, so this is a k-dimension.
template <class F>
std::size_t length(const FractionalIdeal<F>& J, const FractionalIdeal<F>& I) {
  if (!I.U.contains(J.U)) throw Error(ErrorCode::invalid_argument, "length", "first ideal is not contained in the second");
  return I.U.dim() - J.U.dim();
}

template <class F>
bool membership(const FractionalIdeal<F>& I, const TruncSeries<F>& x) {
  const std::size_t N = I.ring->conductor();
  if (x.bound() < N)
    throw Error(ErrorCode::invalid_argument, "membership",
                "series bound " + std::to_string(x.bound()) + " is below the conductor exponent " + std::to_string(N));
  return I.U.contains(x.coords(N));
}

/// trunc(w*u) ∈ U for all basis w of W, u of U.
template <class F>
bool is_module(const FractionalIdeal<F>& I) {
  const auto& R = *I.ring;
  for (const auto& w : R.image().basis())
    for (const auto& u : I.U.basis())
      if (!I.U.contains(truncated_product(R.field(), R.conductor(), w, u))) return false;
  return true;
}

/// 1 ∈ W and trunc(u*v) ∈ W for basis u, v.
template <class F>
bool is_multiplicatively_closed(const RingModel<F>& R) {
  if (R.conductor() == 0) return true;
  const auto one = TruncSeries<F>::monomial(R.field_ptr(), R.conductor(), R.field().one(), 0).coords(R.conductor());
  if (!R.image().contains(one)) return false;
  const auto& B = R.image().basis();
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = i; j < B.size(); ++j)
      if (!R.image().contains(truncated_product(R.field(), R.conductor(), B[i], B[j]))) return false;
  return true;
}

}  // namespace typeseq
