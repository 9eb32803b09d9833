#pragma once

// Invariant suite over a single ring and the seeded random corpus it runs on.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "typeseq/document.hpp"
#include "typeseq/semigroup.hpp"
#include "typeseq/type_sequence.hpp"

namespace typeseq {

enum class FuzzMode { gsr, generated, both };

FuzzMode parse_fuzz_mode(const std::string& text);
std::string to_string(FuzzMode mode);

struct FuzzParams {
  std::uint64_t seed = 42;
  std::size_t max_n = 4;
  std::size_t max_N = 12;
  std::size_t count = 200;
  FuzzMode mode = FuzzMode::both;

  void validate() const;
};

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// Every named check, in evaluation order. run_suite emits exactly these.
const std::vector<std::string>& suite_registry();

// ---------------------------------------------------------------------------

namespace detail {

class SuiteBuilder {
 public:
  void run(const std::string& name, const std::function<std::string()>& body);
  void skip(const std::string& name, const std::string& why);
  SuiteReport finish() &&;

 private:
  SuiteReport report_;
};

std::string join(const std::vector<std::size_t>& v);

/// x * inv(x) = 1 over a deterministic sample of nonzero elements.
template <class F>
std::string field_check(const ExtensionField<F>& K, const std::vector<FieldElement<F>>& sample) {
  for (const auto& x : sample) {
    if (K.is_zero(x)) continue;
    if (!(K.mul(x, K.inv(x)) == K.one())) return "x*inv(x) != 1 for x = " + K.format(x);
  }
  return {};
}

}  // namespace detail

/// Runs every registered check on R. Generator-order determinism needs the
/// generators the ring came from and is skipped without them.
template <class F>
SuiteReport run_suite(const RingPtr<F>& R, const std::vector<TruncSeries<F>>* generators = nullptr,
                      std::size_t max_degree_cap = 512) {
  using detail::join;
  detail::SuiteBuilder suite;
  const auto& K = R->field();
  const auto& f = K.scalars();
  const std::size_t n = K.degree(), N = R->conductor(), d = n * N;
  const auto& sg = R->semigroup();
  const auto& W = R->image();

  // The shared computations; a throw here fails every check that needs them.
  std::optional<DualChain<F>> chain;
  std::optional<TypeSequenceReport> rep;
  std::string setup_error;
  try {
    chain = dual_chain(R);
    rep = type_sequence(R, *chain);
  } catch (const std::exception& e) {
    setup_error = e.what();
  }
  auto need_chain = [&]() -> std::string { return chain ? std::string{} : "dual chain failed: " + setup_error; };

  // Hyperplanes of K (coordinate kernels) and the graded pieces of R.
  std::vector<Subspace<F>> hyperplanes;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Vec<F>> vs;
    for (std::size_t b = 0; b < n; ++b)
      if (b != j) vs.push_back(Subspace<F>::unit(f, n, b));
    hyperplanes.push_back(Subspace<F>::span(f, n, vs));
  }
  std::vector<Subspace<F>> pieces;
  for (std::size_t i = 0; i < N; ++i) pieces.push_back(R->graded_piece(i));

  suite.run("canonical-form", [&]() -> std::string {
    // Re-span W from sums of consecutive basis vectors plus the last one.
    const auto& B = W.basis();
    std::vector<Vec<F>> mixed;
    for (std::size_t i = 0; i + 1 < B.size(); ++i) {
      Vec<F> v = B[i];
      for (std::size_t k = 0; k < d; ++k) v[k] += B[i + 1][k];
      mixed.push_back(std::move(v));
    }
    if (!B.empty()) mixed.push_back(B.back());
    if (!(Subspace<F>::span(f, d, mixed) == W)) return "re-spanned image differs from the stored form";
    return {};
  });

  suite.run("codim1-colon-dimension", [&]() -> std::string {
    for (const auto& V : hyperplanes)
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto C = subspace_colon(V, pieces[i], K);
        if (C.dim() + pieces[i].dim() != n)
          return "dim(V:W) + dim W = " + std::to_string(C.dim() + pieces[i].dim()) + " at degree " +
                 std::to_string(i);
      }
    return {};
  });

  suite.run("colon-monotonicity", [&]() -> std::string {
    for (const auto& V : hyperplanes)
      for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
        const auto W2 = pieces[i].sum(pieces[i + 1]);
        if (!subspace_colon(V, pieces[i], K).contains(subspace_colon(V, W2, K)))
          return "colon not antitone at degrees " + std::to_string(i) + "," + std::to_string(i + 1);
      }
    return {};
  });

  suite.run("field-inverse", [&]() -> std::string {
    std::vector<FieldElement<F>> sample;
    auto acc = K.zero();
    for (std::size_t b = 0; b < n; ++b) {
      sample.push_back(K.basis(b));
      acc = K.add(acc, K.basis(b));
      sample.push_back(acc);
    }
    for (const auto& V : pieces)
      for (const auto& row : V.basis()) sample.push_back({row});
    return detail::field_check(K, sample);
  });

  suite.run("series-ring-axioms", [&]() -> std::string {
    const auto& B = W.basis();
    const std::size_t m = std::min<std::size_t>(B.size(), 5);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        const auto ab = truncated_product(K, N, B[a], B[b]);
        if (!(ab == truncated_product(K, N, B[b], B[a]))) return "product not commutative";
        for (std::size_t c = 0; c < m; ++c) {
          const auto lhs = truncated_product(K, N, ab, B[c]);
          const auto rhs = truncated_product(K, N, B[a], truncated_product(K, N, B[b], B[c]));
          if (!(lhs == rhs)) return "product not associative";
          Vec<F> bc = B[b];
          for (std::size_t k = 0; k < d; ++k) bc[k] += B[c][k];
          auto dist = truncated_product(K, N, B[a], bc);
          const auto ac = truncated_product(K, N, B[a], B[c]);
          for (std::size_t k = 0; k < d; ++k) dist[k] -= ab[k] + ac[k];
          for (const auto& x : dist)
            if (!F::is_zero(x)) return "product not distributive";
        }
      }
    return {};
  });

  suite.run("valuation-additivity", [&]() -> std::string {
    const auto& B = W.basis();
    const auto& P = W.pivots();
    for (std::size_t a = 0; a < B.size(); ++a)
      for (std::size_t b = a; b < B.size(); ++b) {
        const std::size_t va = P[a] / n, vb = P[b] / n;
        if (va + vb >= N) continue;
        const auto p = truncated_product(K, N, B[a], B[b]);
        std::size_t first = d;
        for (std::size_t k = 0; k < d && first == d; ++k)
          if (!F::is_zero(p[k])) first = k;
        if (first == d || first / n != va + vb)
          return "v(xy) != v(x) + v(y) for valuations " + std::to_string(va) + ", " + std::to_string(vb);
      }
    return {};
  });

  suite.run("ring-closure", [&]() -> std::string {
    return is_multiplicatively_closed(*R) ? std::string{} : "image is not closed under truncated products";
  });

  suite.run("locality", [&]() -> std::string {
    if (N > 0 && !(pieces[0] == base_line(K))) return "V_R(0) != k*1";
    return {};
  });

  suite.run("conductor-minimality", [&]() -> std::string {
    if (N > 0 && pieces[N - 1].is_full()) return "V_R(N-1) = K";
    return {};
  });

  suite.run("filtration-dimensions", [&]() -> std::string {
    // dim V_R(i) by the intersect-project route must match the pivot count.
    std::vector<std::size_t> counts(N, 0);
    for (std::size_t p : W.pivots()) ++counts[p / n];
    for (std::size_t i = 0; i < N; ++i)
      if (counts[i] != pieces[i].dim())
        return "degree " + std::to_string(i) + ": " + std::to_string(counts[i]) + " pivots, dim V_R(i) = " +
               std::to_string(pieces[i].dim());
    return {};
  });

  suite.run("semigroup-consistency", [&]() -> std::string {
    if (sg.N != N || sg.c + sg.l != N) return "N != c + l";
    if (sg.s.size() != sg.r + sg.l + 1 || sg.s.front() != 0 || sg.s.back() != N) return "malformed s-list";
    if (sg.s[sg.r] != sg.c) return "s_r != c";
    for (std::size_t j = 1; j <= sg.l; ++j)
      if (sg.s[sg.r + j] != sg.c + j) return "s_{r+j} != c + j";
    for (std::size_t i = 0; i < N; ++i)
      if (sg.contains(i) == pieces[i].is_zero()) return "membership disagrees with V_R at " + std::to_string(i);
    if (sg.c > 0 && sg.contains(sg.c - 1)) return "c is not minimal";
    return {};
  });

  suite.run("chain-strict", [&]() -> std::string {
    if (auto e = need_chain(); !e.empty()) return e;
    for (std::size_t i = 1; i < chain->ideals.size(); ++i)
      if (!(chain->ideals[i - 1].U.contains(chain->ideals[i].U) && chain->ideals[i].dim() < chain->ideals[i - 1].dim()))
        return "a_" + std::to_string(i) + " is not strictly inside a_" + std::to_string(i - 1);
    if (!chain->ideals.back().U.is_zero()) return "a_{r+l} is not the conductor";
    return {};
  });

  suite.run("ideal-modules", [&]() -> std::string {
    if (auto e = need_chain(); !e.empty()) return e;
    for (std::size_t i = 0; i < chain->ideals.size(); ++i) {
      if (!is_module(chain->ideals[i])) return "a_" + std::to_string(i) + " is not an R-module";
      if (!is_module(chain->duals[i])) return "dual " + std::to_string(i) + " is not an R-module";
    }
    return {};
  });

  suite.run("divisoriality", [&]() -> std::string {
    if (auto e = need_chain(); !e.empty()) return e;
    for (std::size_t i = 0; i < chain->ideals.size(); ++i)
      if (!(colon(chain->duals[i]) == chain->ideals[i]))
        return "R:(R:a_" + std::to_string(i) + ") != a_" + std::to_string(i);
    return {};
  });

  suite.run("dual-chain-strict", [&]() -> std::string {
    if (auto e = need_chain(); !e.empty()) return e;
    const auto& D = chain->duals;
    if (!(D.front() == as_ideal(R))) return "R:R != R";
    if (!(D.back() == closure_ideal(R))) return "R:C != K[[X]]";
    for (std::size_t i = 1; i < D.size(); ++i)
      if (!(D[i].U.contains(D[i - 1].U) && D[i].dim() > D[i - 1].dim()))
        return "dual " + std::to_string(i) + " does not strictly contain dual " + std::to_string(i - 1);
    return {};
  });

  suite.run("dual-top-degree-full", [&]() -> std::string {
    if (auto e = need_chain(); !e.empty()) return e;
    for (std::size_t i = 1; i < chain->duals.size(); ++i) {
      const std::size_t deg = N - 1 - sg.s[i - 1];
      const std::size_t dim = filtration_space(chain->duals[i], deg).dim();
      if (dim != n)
        return "i = " + std::to_string(i) + ": dim V(" + std::to_string(deg) + ") = " + std::to_string(dim);
    }
    return {};
  });

  suite.run("dual-top-degree-bound", [&]() -> std::string {
    if (auto e = need_chain(); !e.empty()) return e;
    for (std::size_t i = 1; i < chain->duals.size(); ++i) {
      const std::size_t deg = N - 1 - sg.s[i - 1];
      const std::size_t dim = filtration_space(chain->duals[i - 1], deg).dim();
      if (dim + R->n_list()[i - 1] > n)
        return "i = " + std::to_string(i) + ": dim V(" + std::to_string(deg) + ") = " + std::to_string(dim) +
               " exceeds n - n_{i-1}";
    }
    return {};
  });

  suite.run("type-positive", [&]() -> std::string {
    if (auto e = need_chain(); !e.empty()) return e;
    for (std::size_t x : rep->t)
      if (x < 1) return "some t_i = 0";
    for (std::size_t x : rep->n)
      if (x < 1) return "some n_i = 0";
    return {};
  });

  suite.run("sum-t-equals-length", [&]() -> std::string {
    if (auto e = need_chain(); !e.empty()) return e;
    std::size_t s = 0;
    for (std::size_t x : rep->t) s += x;
    if (s != rep->ell_over || s != d - W.dim())
      return "sum t = " + std::to_string(s) + ", length = " + std::to_string(rep->ell_over);
    return {};
  });

  suite.run("sum-n-equals-length", [&]() -> std::string {
    if (auto e = need_chain(); !e.empty()) return e;
    std::size_t s = 0;
    for (std::size_t x : rep->n) s += x;
    if (s != rep->ell_rc) return "sum n = " + std::to_string(s) + ", dim W = " + std::to_string(rep->ell_rc);
    return {};
  });

  suite.run("n0-is-one", [&]() -> std::string {
    if (auto e = need_chain(); !e.empty()) return e;
    if (!rep->n.empty() && rep->n.front() != 1) return "n_0 = " + std::to_string(rep->n.front());
    return {};
  });

  suite.run("type-bounds", [&]() -> std::string {
    if (auto e = need_chain(); !e.empty()) return e;
    for (const auto& row : bounds_check(*rep).rows)
      if (!row.ok)
        return "index " + std::to_string(row.index) + ": " + std::to_string(row.lower) + " <= " +
               std::to_string(row.t) + " <= " + std::to_string(row.upper) + " fails";
    return {};
  });

  suite.run("length-inequality", [&]() -> std::string {
    if (auto e = need_chain(); !e.empty()) return e;
    const std::size_t t = rep->cm_type, lo = rep->ell_rc + t - 1, hi = rep->ell_rc * t;
    if (N == 0) return rep->ell_over == 0 ? std::string{} : "nonzero length for N = 0";
    if (!(lo <= rep->ell_over && rep->ell_over <= hi))
      return std::to_string(lo) + " <= " + std::to_string(rep->ell_over) + " <= " + std::to_string(hi) + " fails";
    return {};
  });

  std::optional<Classification> cls;
  suite.run("pattern-vs-length", [&]() -> std::string {
    if (auto e = need_chain(); !e.empty()) return e;
    try {
      cls = classify(*rep);
    } catch (const Error& e) {
      return e.what();
    }
    return {};
  });

  suite.run("gorenstein-self-duality", [&]() -> std::string {
    if (auto e = need_chain(); !e.empty()) return e;
    if (rep->cm_type != 1) return {};
    for (std::size_t i = 0; i < rep->t.size(); ++i)
      if (rep->t[i] != rep->n[i]) return "type 1 but t_" + std::to_string(i + 1) + " != n_" + std::to_string(i);
    return {};
  });

  std::optional<RingPtr<F>> gsr;
  suite.run("gsr-round-trip", [&]() -> std::string {
    gsr = associated_gsr(*R);
    if ((*gsr)->conductor() != N) return "associated GSR has a different conductor";
    for (std::size_t i = 0; i < N; ++i)
      if (!((*gsr)->graded_piece(i) == pieces[i])) return "filtrations differ at degree " + std::to_string(i);
    return {};
  });

  suite.run("gsr-criterion", [&]() -> std::string {
    if (auto e = need_chain(); !e.empty()) return e;
    if (!gsr) return "associated GSR unavailable";
    const auto cmp = compare_reports(*rep, type_sequence(*gsr));
    if (!cmp.biconditional_holds)
      return std::string("R almost Gorenstein: ") + (cmp.ring_class.almost_gorenstein ? "yes" : "no") +
             "; GSR almost Gorenstein: " + (cmp.gsr_class.almost_gorenstein ? "yes" : "no") + "; types " +
             std::to_string(cmp.ring.cm_type) + " and " + std::to_string(cmp.gsr.cm_type);
    return {};
  });

  // A residually rational ring equal to its associated GSR is k[[S]].
  if (n == 1 && gsr && **gsr == *R && chain) {
    suite.run("semigroup-oracle", [&]() -> std::string {
      const auto S = NumericalSemigroup::from_data(sg);
      const auto expect = semigroup_ts_oracle(S);
      if (expect != rep->t) return "ring gives (" + join(rep->t) + "), semigroup count gives (" + join(expect) + ")";
      return {};
    });
  } else {
    suite.skip("semigroup-oracle", "ring is not a numerical semigroup ring");
  }

  if (generators && generators->size() > 1) {
    suite.run("generator-order", [&]() -> std::string {
      auto rev = *generators;
      std::reverse(rev.begin(), rev.end());
      auto rot = *generators;
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      for (const auto& gs : {rev, rot})
        if (!(build_generated(R->field_ptr(), gs, max_degree_cap)->image() == W))
          return "reordered generators give a different image";
      return {};
    });
  } else {
    suite.skip("generator-order", "not a generated ring with several generators");
  }

  return std::move(suite).finish();
}

// ---------------------------------------------------------------------------
// Random corpus.

/// Deterministic integer in [lo, hi]; avoids distribution objects whose
/// output differs between standard libraries.
std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

/// Per-case seed derived from the corpus seed.
std::uint64_t case_seed(std::uint64_t seed, std::size_t index);

/// Random base and tower of degree in [1, max_n]; F_p mostly, Q sometimes.
RingDocument random_field_document(std::size_t max_n, std::mt19937_64& rng);

/// A GSR document: random seed spaces per degree closed upward, N re-minimised.
RingDocument random_gsr(const FuzzParams& params, std::mt19937_64& rng);

/// 2-4 generators with valuations in [2, max-N], coprime valuations, at least
/// one non-monomial when n > 1; redrawn until the conductor is at most max-N.
RingDocument random_generated(const FuzzParams& params, std::mt19937_64& rng);

struct FuzzCase {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  FuzzMode kind = FuzzMode::gsr;
  RingDocument document;
  std::size_t field_degree = 0;
  std::size_t conductor = 0;
  std::vector<std::size_t> type_sequence;
  std::string label;
  SuiteReport suite;
  std::string error;  // set when the ring could not be analysed at all

  bool passed() const { return error.empty() && suite.passed(); }
};

struct FuzzReport {
  FuzzParams params;
  std::vector<FuzzCase> cases;
  std::size_t failures() const;
};

FuzzCase run_fuzz_case(const FuzzParams& params, std::size_t index);
FuzzReport run_fuzz(const FuzzParams& params);

/// Runs the suite on a document's ring.
SuiteReport check_document(const RingDocument& doc);

}  // namespace typeseq
