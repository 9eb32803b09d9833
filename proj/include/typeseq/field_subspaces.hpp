#pragma once

// k-subspaces of K and the two bilinear constructions on them.

#include "typeseq/extension_field.hpp"
#include "typeseq/subspace.hpp"

namespace typeseq {

/// k·1 inside K.
template <class F>
Subspace<F> base_line(const ExtensionField<F>& K) {
  const auto one = K.one().coords;
  return Subspace<F>::span(K.scalars(), K.degree(), std::span(&one, 1));
}

template <class F>
Subspace<F> span_elements(const ExtensionField<F>& K, const std::vector<FieldElement<F>>& elems) {
  std::vector<Vec<F>> vs;
  for (const auto& e : elems) vs.push_back(e.coords);
  return Subspace<F>::span(K.scalars(), K.degree(), vs);
}

/// (V : W) = { x in K | x W ⊆ V }: kernel of x -> (x*w_j mod V)_j.
template <class F>
Subspace<F> subspace_colon(const Subspace<F>& V, const Subspace<F>& W, const ExtensionField<F>& K) {
  const std::size_t n = K.degree();
  if (V.ambient_dim() != n || W.ambient_dim() != n)
    throw Error(ErrorCode::invalid_argument, "subspace-colon", "subspaces must live in the coordinate space of K");
  EchelonBuilder<F> eqs(K.scalars(), n);
  for (const auto& w : W.basis()) {
    // images[b] = residue of e_b * w modulo V
    std::vector<Vec<F>> images;
    for (std::size_t b = 0; b < n; ++b) images.push_back(V.residue(K.mul(K.basis(b), FieldElement<F>{w}).coords));
    for (std::size_t row = 0; row < V.codim(); ++row) {
      Vec<F> eq(n, K.scalars().zero());
      for (std::size_t b = 0; b < n; ++b) eq[b] = images[b][row];
      eqs.insert(std::move(eq));
    }
  }
  return kernel_of(K.scalars(), std::move(eqs));
}

/// Span of all products v*w.
template <class F>
Subspace<F> product_span(const Subspace<F>& V, const Subspace<F>& W, const ExtensionField<F>& K) {
  const std::size_t n = K.degree();
  if (V.ambient_dim() != n || W.ambient_dim() != n)
    throw Error(ErrorCode::invalid_argument, "product-span", "subspaces must live in the coordinate space of K");
  EchelonBuilder<F> b(K.scalars(), n);
  for (const auto& v : V.basis())
    for (const auto& w : W.basis()) {
      if (b.full()) break;
      b.insert(K.mul(FieldElement<F>{v}, FieldElement<F>{w}).coords);
    }
  return Subspace<F>::from_builder(std::move(b));
}

}  // namespace typeseq
