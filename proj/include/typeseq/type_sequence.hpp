#pragma once

// Dual chain R = a_0^{-1} ⊆ a_1^{-1} ⊆ ... ⊆ a_{r+l}^{-1} = K[[X]], the type
// sequence t_i = ℓ(a_i^{-1} / a_{i-1}^{-1}), and the classification that
// follows from comparing it with the n_i = dim V_R(s_i).

#include <cstddef>
#include <string>
#include <vector>

#include "typeseq/ring_model.hpp"

namespace typeseq {

struct Classification {
  std::string label;
  bool regular = false;
  bool gorenstein = false;
  bool kunz = false;
  bool almost_gorenstein = false;
  bool maximal_length = false;
  // The two independent routes behind the almost-Gorenstein and maximal
  // length verdicts; classify() insists that they agree.
  bool ag_by_pattern = false;
  bool ag_by_length = false;
  bool ml_by_pattern = false;
  bool ml_by_length = false;
};

struct BoundsRow {
  std::size_t index = 0;  // i, 1-based
  std::size_t lower = 0;  // n_{i-1}
  std::size_t t = 0;      // t_i
  std::size_t upper = 0;  // t * n_{i-1}
  bool ok = false;
};

struct BoundsTable {
  std::vector<BoundsRow> rows;
  bool all_ok = true;
};

struct TypeSequenceReport {
  std::size_t field_degree = 1;
  SemigroupData semigroup;
  std::vector<std::size_t> t;  // t_1 .. t_{r+l}
  std::vector<std::size_t> n;  // n_0 .. n_{r+l-1}
  std::size_t cm_type = 1;
  std::size_t ell_over = 0;  // ℓ_R(K[[X]] / R)
  std::size_t ell_rc = 0;    // ℓ_R(R / a_{r+l})
};

template <class F>
struct DualChain {
  std::vector<FractionalIdeal<F>> ideals;  // a_0 .. a_{r+l}
  std::vector<FractionalIdeal<F>> duals;   // a_0^{-1} .. a_{r+l}^{-1}
};

template <class F>
DualChain<F> dual_chain(const RingPtr<F>& R) {
  DualChain<F> chain;
  for (std::size_t i = 0; i <= R->semigroup().chain_length(); ++i) {
    chain.ideals.push_back(ideal_a(R, i));
    chain.duals.push_back(colon_in_closure(chain.ideals.back()));
  }
  return chain;
}

template <class F>
TypeSequenceReport type_sequence(const RingPtr<F>& R, const DualChain<F>& chain) {
  TypeSequenceReport rep;
  rep.field_degree = R->degree();
  rep.semigroup = R->semigroup();
  rep.n = R->n_list();
  for (std::size_t i = 1; i < chain.duals.size(); ++i) rep.t.push_back(length(chain.duals[i - 1], chain.duals[i]));
  rep.cm_type = rep.t.empty() ? 1 : rep.t.front();
  rep.ell_rc = R->image().dim();
  rep.ell_over = R->ambient_dim() - R->image().dim();
  return rep;
}

template <class F>
TypeSequenceReport type_sequence(const RingPtr<F>& R) {
  return type_sequence(R, dual_chain(R));
}

/// Pattern flags from the t/n lists, cross-checked against the length
/// equalities ℓ(R̄/R) = ℓ(R/a_{r+l}) + t - 1 and ℓ(R̄/R) = t ℓ(R/a_{r+l}).
/// Throws ErrorCode::inconsistency when the two routes disagree.
Classification classify(const TypeSequenceReport& report);

BoundsTable bounds_check(const TypeSequenceReport& report);

template <class F>
GSRSpec<F> associated_gsr_spec(const RingModel<F>& R) {
  GSRSpec<F> spec{R.field_ptr(), R.conductor(), {}};
  for (std::size_t i = 0; i < R.conductor(); ++i) spec.spaces.push_back(R.graded_piece(i));
  return spec;
}

/// R~ = sum_i V_R(i) X^i.
template <class F>
RingPtr<F> associated_gsr(const RingModel<F>& R) {
  return build_gsr(associated_gsr_spec(R));
}

struct GsrComparison {
  TypeSequenceReport ring;
  TypeSequenceReport gsr;
  Classification ring_class;
  Classification gsr_class;
  bool same_type_sequence = false;
  bool same_type = false;
  /// R almost Gorenstein <=> (R~ almost Gorenstein and type(R) = type(R~)).
  bool biconditional_holds = false;
};

GsrComparison compare_reports(const TypeSequenceReport& ring, const TypeSequenceReport& gsr);

template <class F>
GsrComparison compare_with_gsr(const RingPtr<F>& R) {
  return compare_reports(type_sequence(R), type_sequence(associated_gsr(*R)));
}

}  // namespace typeseq
