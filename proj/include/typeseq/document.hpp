#pragma once

// Ring documents (JSON input) and analysis reports (JSON output).
//
// Input:
//   {
//     "base": "Q" | {"prime": 7},
//     "tower": [{"name": "a", "poly": "a^2 - 2"}, ...],
//     "ring": {"gsr": {"N": 6, "spaces": {"3": "full", "5": ["1", "a"]}}}
//           | {"generators": ["i*X^3 + X^4", "X^5"]},
//     "options": {"max-degree-cap": 512, "emit-gsr": false, "emit-duals": false}
//   }
// Degree 0 defaults to k*1 and absent degrees are the zero space.
//
// Report keys, in order: input, field, conductor, ring_basis, semigroup, n,
// type_sequence, cm_type, lengths, bounds, classification, then when
// requested duals, associated_gsr, comparison, suite.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "typeseq/field_io.hpp"
#include "typeseq/ring_model.hpp"

namespace typeseq {

struct SpaceInput {
  bool full = false;
  std::vector<std::string> elements;
  friend bool operator==(const SpaceInput&, const SpaceInput&) = default;
};

struct GsrInput {
  std::size_t N = 0;
  std::map<std::size_t, SpaceInput> spaces;
  friend bool operator==(const GsrInput&, const GsrInput&) = default;
};

struct GeneratorInput {
  std::vector<std::string> generators;
  friend bool operator==(const GeneratorInput&, const GeneratorInput&) = default;
};

struct DocumentOptions {
  std::size_t max_degree_cap = 512;
  bool emit_gsr = false;
  bool emit_duals = false;
  friend bool operator==(const DocumentOptions&, const DocumentOptions&) = default;
};

struct RingDocument {
  std::optional<std::uint64_t> prime;  // empty for Q
  std::vector<TowerLevel> tower;
  std::variant<GsrInput, GeneratorInput> ring;
  DocumentOptions options;
  friend bool operator==(const RingDocument&, const RingDocument&) = default;
};

RingDocument parse_document(const std::string& text);
/// Canonical JSON text of a document (stable key order, 2-space indent).
std::string document_text(const RingDocument& doc);

enum AnalyzeFlags : unsigned {
  analyze_emit_duals = 1,
  analyze_emit_gsr = 2,
  analyze_compare_gsr = 4,
  analyze_run_suite = 8,
};

struct AnalysisResult {
  std::string json;  // pretty-printed report, trailing newline
  std::vector<std::size_t> type_sequence;
  std::vector<std::size_t> n_list;
  std::size_t conductor = 0;
  std::string label;
  std::size_t suite_failures = 0;
};

/// Full pipeline: field, ring, dual chain, type sequence, classification,
/// and whatever the flags (or the document's options) ask for.
AnalysisResult analyze(const RingDocument& doc, unsigned flags = 0);

struct FuzzReport;
struct SuiteReport;

/// JSON text of a fuzz run; failing cases carry their full document.
std::string fuzz_report_text(const FuzzReport& report);
std::string suite_report_text(const SuiteReport& report);

/// Combinatorial type sequence of the numerical semigroup generated by gens.
AnalysisResult semigroup_oracle_report(const std::vector<std::size_t>& gens);

template <class F>
FieldPtr<F> document_field(const RingDocument& doc, const F& base) {
  return build_tower(base, doc.tower);
}

/// Calls fn(FieldPtr<F>) with the document's tower over Q or F_p.
template <class Fn>
auto with_document_field(const RingDocument& doc, Fn&& fn) {
  if (doc.prime) {
    if (*doc.prime > 0xffffffffu)
      throw Error(ErrorCode::field, "base-field", "prime " + std::to_string(*doc.prime) + " is too large");
    return fn(document_field(doc, PrimeField(static_cast<std::uint32_t>(*doc.prime))));
  }
  return fn(document_field(doc, RationalField{}));
}

template <class F>
GSRSpec<F> document_gsr_spec(const GsrInput& in, const FieldPtr<F>& K) {
  const auto& f = K->scalars();
  const std::size_t n = K->degree();
  GSRSpec<F> spec{K, in.N, std::vector<Subspace<F>>(in.N, Subspace<F>::zero(f, n))};
  if (in.N > 0) spec.spaces[0] = base_line(*K);
  for (const auto& [deg, space] : in.spaces) {
    if (deg >= in.N)
      throw Error(ErrorCode::invalid_argument, "document",
                  "space degree " + std::to_string(deg) + " is not below N = " + std::to_string(in.N));
    if (space.full) {
      spec.spaces[deg] = Subspace<F>::full(f, n);
      continue;
    }
    std::vector<FieldElement<F>> es;
    for (const auto& e : space.elements) es.push_back(parse_element(e, *K));
    spec.spaces[deg] = span_elements(*K, es);
  }
  return spec;
}

template <class F>
std::vector<TruncSeries<F>> document_generators(const GeneratorInput& in, const FieldPtr<F>& K, std::size_t cap) {
  std::vector<TruncSeries<F>> gens;
  for (const auto& g : in.generators) gens.push_back(parse_series(g, K, cap));
  return gens;
}

template <class F>
RingPtr<F> document_ring(const RingDocument& doc, const FieldPtr<F>& K) {
  if (const auto* g = std::get_if<GsrInput>(&doc.ring)) return build_gsr(document_gsr_spec(*g, K));
  const auto& gens = std::get<GeneratorInput>(doc.ring);
  return build_generated(K, document_generators(gens, K, doc.options.max_degree_cap), doc.options.max_degree_cap);
}

}  // namespace typeseq
