#include <doctest.h>

#include <numeric>
#include <set>

#include "helpers.hpp"
#include "typeseq/verification.hpp"

using namespace typeseq;
using namespace typeseq::test;

using QF = RationalField;

namespace {

template <class F>
RingPtr<F> generated(const FieldPtr<F>& K, const std::vector<std::string>& gens, std::vector<TruncSeries<F>>* out = nullptr) {
  std::vector<TruncSeries<F>> gs;
  for (const auto& g : gens) gs.push_back(parse_series(g, K, 512));
  if (out) *out = gs;
  return build_generated(K, gs, 512);
}

std::vector<std::string> failed_names(const SuiteReport& r) {
  std::vector<std::string> out;
  for (const auto& c : r.checks)
    if (c.status == CheckStatus::fail) out.push_back(c.name + ": " + c.detail);
  return out;
}

}  // namespace

TEST_CASE("suite registry names are unique") {
  const auto& reg = suite_registry();
  CHECK(reg.size() == 29);
  CHECK(std::set<std::string>(reg.begin(), reg.end()).size() == reg.size());
}

TEST_CASE("suite passes on the sample rings") {
  auto K = q_sqrt2_sqrt3();
  const QF f;
  auto zero = Subspace<QF>::zero(f, 4), full = Subspace<QF>::full(f, 4);
  auto R1 = build_gsr(GSRSpec<QF>{K, 6, {base_line(*K), zero, zero, full, full, span_of(K, {"1", "a"})}});
  auto s1 = run_suite(R1);
  INFO(failed_names(s1).size());
  CHECK(s1.passed());
  CHECK(s1.checks.size() == suite_registry().size());
  for (std::size_t i = 0; i < s1.checks.size(); ++i) CHECK(s1.checks[i].name == suite_registry()[i]);

  std::vector<TruncSeries<QF>> gens;
  auto R3 = generated(q_i(), {"i*X^3 + X^4", "X^5", "i*X^10 + X^11", "X^16"}, &gens);
  auto s3 = run_suite(R3, &gens);
  for (const auto& name : failed_names(s3)) FAIL_CHECK(name);
  // n = 2 here, so the semigroup oracle does not apply.
  CHECK(s3.checks[27].status == CheckStatus::skip);
  CHECK(s3.checks[28].status == CheckStatus::pass);
}

TEST_CASE("semigroup oracle check runs on monomial rings") {
  std::vector<TruncSeries<PrimeField>> gens;
  auto R = generated(build_tower(PrimeField(7), {}), {"X^4", "X^6", "X^9"}, &gens);
  auto s = run_suite(R, &gens);
  for (const auto& name : failed_names(s)) FAIL_CHECK(name);
  CHECK(s.checks[27].name == "semigroup-oracle");
  CHECK(s.checks[27].status == CheckStatus::pass);
}

TEST_CASE("regular ring passes vacuously") {
  auto K = build_tower(PrimeField(5), {{"a", "a^2 - 2"}});
  auto R = build_gsr(GSRSpec<PrimeField>{K, 0, {}});
  CHECK(R->conductor() == 0);
  auto s = run_suite(R);
  for (const auto& name : failed_names(s)) FAIL_CHECK(name);
}

TEST_CASE("fuzz parameters and modes") {
  CHECK(parse_fuzz_mode("gsr") == FuzzMode::gsr);
  CHECK(parse_fuzz_mode("generated") == FuzzMode::generated);
  CHECK(to_string(parse_fuzz_mode("both")) == "both");
  CHECK_THROWS_AS(parse_fuzz_mode("all"), Error);
  FuzzParams p;
  p.max_n = 0;
  CHECK_THROWS_AS(p.validate(), Error);
  p.max_n = 5;
  CHECK_THROWS_AS(p.validate(), Error);
}

TEST_CASE("case seeds are distinct and stable") {
  std::set<std::uint64_t> seen;
  for (std::size_t i = 0; i < 1000; ++i) seen.insert(case_seed(42, i));
  CHECK(seen.size() == 1000);
  CHECK(case_seed(42, 7) == case_seed(42, 7));
  CHECK(case_seed(42, 7) != case_seed(43, 7));
}

TEST_CASE("random GSR documents are valid and bounded") {
  FuzzParams p;
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto doc = random_gsr(p, rng);
    REQUIRE(std::holds_alternative<GsrInput>(doc.ring));
    CHECK(doc.tower.size() <= 2);
    with_document_field(doc, [&](const auto& K) {
      CHECK(K->degree() <= p.max_n);
      auto R = document_ring(doc, K);
      CHECK(R->conductor() <= p.max_N);
      CHECK(R->conductor() == std::get<GsrInput>(doc.ring).N);
      CHECK(is_multiplicatively_closed(*R));
      return 0;
    });
  }
}

TEST_CASE("random generator documents meet their postconditions") {
  FuzzParams p;
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto doc = random_generated(p, rng);
    const auto& gens = std::get<GeneratorInput>(doc.ring).generators;
    CHECK(gens.size() >= 1);
    with_document_field(doc, [&](const auto& K) {
      auto gs = document_generators(std::get<GeneratorInput>(doc.ring), K, doc.options.max_degree_cap);
      std::size_t g = 0;
      for (const auto& s : gs) g = std::gcd(g, *s.valuation());
      CHECK(g == 1);
      if (K->degree() > 1) {
        const auto& first = gs.front();
        std::size_t nonzero = 0;
        for (std::size_t d = 0; d < first.bound(); ++d) nonzero += !K->is_zero(first.coeff(d));
        CHECK(nonzero > 1);
      }
      auto R = document_ring(doc, K);
      CHECK(R->conductor() <= p.max_N);
      return 0;
    });
  }
}

TEST_CASE("fuzz corpus is deterministic and green on a small run") {
  FuzzParams p;
  p.count = 16;
  auto a = run_fuzz(p), b = run_fuzz(p);
  REQUIRE(a.cases.size() == 16);
  CHECK(a.failures() == 0);
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    CHECK(a.cases[i].document == b.cases[i].document);
    CHECK(a.cases[i].type_sequence == b.cases[i].type_sequence);
    CHECK(a.cases[i].kind == (i % 2 == 0 ? FuzzMode::gsr : FuzzMode::generated));
  }
  CHECK(fuzz_report_text(a) == fuzz_report_text(b));

  p.mode = FuzzMode::generated;
  p.count = 4;
  for (const auto& c : run_fuzz(p).cases) CHECK(c.kind == FuzzMode::generated);
}
