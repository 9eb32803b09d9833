#pragma once

#include <random>
#include <string>
#include <vector>

#include "typeseq/field_io.hpp"
#include "typeseq/ring_model.hpp"

namespace typeseq::test {

inline FieldPtr<RationalField> q_tower(const std::vector<TowerLevel>& levels) {
  return build_tower(RationalField{}, levels);
}

inline FieldPtr<RationalField> q_sqrt2_sqrt3() { return q_tower({{"a", "a^2 - 2"}, {"b", "b^2 - 3"}}); }
inline FieldPtr<RationalField> q_i() { return q_tower({{"i", "i^2 + 1"}}); }

template <class F>
FieldElement<F> el(const FieldPtr<F>& K, const std::string& text) {
  return parse_element(text, *K);
}

template <class F>
Subspace<F> span_of(const FieldPtr<F>& K, const std::vector<std::string>& elems) {
  std::vector<FieldElement<F>> es;
  for (const auto& e : elems) es.push_back(parse_element(e, *K));
  return span_elements(*K, es);
}

/// Ideal image spanned by series expressions (mod X^N) plus X^from * K[[X]].
template <class F>
Subspace<F> ideal_image(const RingModel<F>& R, const std::vector<std::string>& series, std::size_t full_from) {
  const auto& K = R.field();
  const std::size_t n = K.degree(), N = R.conductor();
  std::vector<Vec<F>> vs;
  for (const auto& s : series) vs.push_back(parse_series(s, R.field_ptr(), std::max<std::size_t>(N, 64)).coords(N));
  for (std::size_t i = full_from * n; i < n * N; ++i) vs.push_back(Subspace<F>::unit(K.scalars(), n * N, i));
  return Subspace<F>::span(K.scalars(), n * N, vs);
}

template <class F>
Vec<F> random_vector(const F& f, std::size_t len, std::mt19937_64& rng, int spread = 3) {
  Vec<F> v;
  for (std::size_t i = 0; i < len; ++i)
    v.push_back(f.from_int(static_cast<long>(rng() % (2 * spread + 1)) - spread));
  return v;
}

}  // namespace typeseq::test
