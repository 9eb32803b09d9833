#pragma once

// Numerical semigroups and the combinatorial type sequence of k[[S]]:
// with S_i = {x in S | x >= s_i} and A_i = {x in Z | x + S_i ⊆ S},
// t_i = #(A_i \ A_{i-1}) for 1 <= i <= r.

#include <cstddef>
#include <vector>

#include "typeseq/ring_model.hpp"

namespace typeseq {

class NumericalSemigroup {
 public:
  /// Semigroup generated by `gens`; requires gcd 1 and positive generators.
  static NumericalSemigroup from_generators(const std::vector<std::size_t>& gens);
  /// Validates that the data describes a numerical semigroup (0 ∈ S,
  /// closed under addition, cofinite by construction).
  static NumericalSemigroup from_data(const SemigroupData& data);

  bool contains(long x) const;
  std::size_t conductor() const { return c_; }
  std::size_t multiplicity() const;
  /// s_0 = 0 < s_1 < ... < s_r = c.
  const std::vector<std::size_t>& small_elements() const { return small_; }
  std::vector<std::size_t> gaps() const;
  /// Minimal generators.
  std::vector<std::size_t> minimal_generators() const;

 private:
  NumericalSemigroup() = default;
  std::vector<std::size_t> small_;
  std::size_t c_ = 0;
};

std::vector<std::size_t> semigroup_ts_oracle(const NumericalSemigroup& S);

}  // namespace typeseq
