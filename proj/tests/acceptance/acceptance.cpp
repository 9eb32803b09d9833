// Acceptance runner: one PASS/FAIL line per criterion.
// All comparisons are exact; the only tolerances are the wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "typeseq/document.hpp"
#include "typeseq/field_subspaces.hpp"
#include "typeseq/semigroup.hpp"
#include "typeseq/verification.hpp"

using namespace typeseq;
using json = nlohmann::json;
using Sizes = std::vector<std::size_t>;
namespace fs = std::filesystem;

namespace {

constexpr double default_limit_s = 5.0;
constexpr double generated_limit_s = 10.0;
constexpr double corpus_limit_s = 60.0;

std::string data_dir, cli_path, work_dir;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

std::string seq(const Sizes& v) { return "(" + detail::join(v) + ")"; }

template <class T>
void expect_eq(Outcome& o, const T& got, const T& want, const std::string& what) {
  o.expect(got == want, what);
}
void expect_seq(Outcome& o, const Sizes& got, const Sizes& want, const std::string& what) {
  o.expect(got == want, what + " = " + seq(got) + ", expected " + seq(want));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RingDocument load(const std::string& name) { return parse_document(slurp(fs::path(data_dir) / name)); }

Sizes to_sizes(const json& j) { return j.get<Sizes>(); }

// Printed basis of c*X^d for every c in `coeffs` and d in [from, to).
std::vector<std::string> monomials(const std::vector<std::string>& coeffs, std::size_t from, std::size_t to) {
  std::vector<std::string> out;
  for (std::size_t d = from; d < to; ++d)
    for (const auto& c : coeffs) {
      const std::string x = d == 1 ? "X" : "X^" + std::to_string(d);
      out.push_back(c == "1" ? x : c + "*" + x);
    }
  return out;
}

// ---------------------------------------------------------------------------

Outcome sqrt2_sqrt3_gsr() {
  Outcome o;
  auto r = analyze(load("ex1.json"), analyze_emit_duals);
  auto j = json::parse(r.json);
  expect_seq(o, to_sizes(j["n"]), {1, 4, 4, 2}, "n-list");
  expect_seq(o, to_sizes(j["type_sequence"]), {3, 4, 4, 2}, "type sequence");
  expect_eq(o, j["classification"]["label"].get<std::string>(), std::string("almost-gorenstein"), "label");

  // a_i^{-1} = Q(a) + X^{4-i} K[[X]] for i = 1..3 and a_4^{-1} = K[[X]], with N = 6.
  const std::vector<std::string> K{"1", "a", "b", "a*b"}, Qa{"1", "a"};
  std::vector<std::vector<std::string>> want;
  for (std::size_t i = 1; i <= 3; ++i) {
    auto b = Qa;
    for (const auto& m : monomials(K, 4 - i, 6)) b.push_back(m);
    want.push_back(b);
  }
  auto full = K;
  for (const auto& m : monomials(K, 1, 6)) full.push_back(m);
  want.push_back(full);
  for (std::size_t i = 1; i <= 4; ++i) {
    const auto got = j["duals"][i]["basis"].get<std::vector<std::string>>();
    o.expect(got == want[i - 1], "printed inverse " + std::to_string(i) + " differs from the listing");
  }
  return o;
}

Outcome gaussian_gsr() {
  Outcome o;
  auto r = analyze(load("ex2.json"));
  expect_seq(o, r.type_sequence, {5, 5, 5}, "type sequence");
  expect_eq(o, r.label, std::string("maximal-length"), "label");
  return o;
}

Outcome gaussian_generated() {
  Outcome o;
  auto r = analyze(load("ex3.json"), analyze_emit_gsr | analyze_compare_gsr);
  auto j = json::parse(r.json);
  expect_eq(o, r.conductor, std::size_t{15}, "conductor");
  expect_seq(o, r.n_list, {1, 1, 1, 1, 1, 1, 2, 1, 1, 2, 1}, "n-list");
  expect_seq(o, r.type_sequence, {3, 1, 2, 1, 1, 1, 3, 1, 1, 2, 1}, "type sequence");
  const auto gsr_ts = to_sizes(j["associated_gsr"]["type_sequence"]);
  o.expect(gsr_ts == r.type_sequence,
           "associated GSR type sequence " + seq(gsr_ts) + " differs from the ring's " + seq(r.type_sequence));
  return o;
}

Outcome f7_comparison() {
  Outcome o;
  const auto doc = load("f7_comparison.json");
  with_document_field(doc, [&](const auto& K) {
    auto R = document_ring(doc, K);
    auto chain = dual_chain(R);
    expect_seq(o, type_sequence(R, chain).t, {2, 2, 1, 1}, "t.s.(R)");
    expect_seq(o, type_sequence(associated_gsr(*R)).t, {3, 1, 1, 1}, "t.s. of the associated GSR");
    auto x = parse_series("X^2 - X^3", K, R->conductor());
    o.expect(membership(chain.duals[2], x), "X^2 - X^3 not in the second inverse");
    o.expect(filtration_space(chain.duals[1], 2).is_zero(), "first inverse has an element of value 2");
    return 0;
  });
  return o;
}

Outcome identity_suite() {
  Outcome o;
  auto note_failures = [&](const std::string& where, const SuiteReport& s) {
    for (const auto& c : s.checks)
      if (c.status == CheckStatus::fail) o.expect(false, where + ": " + c.name + " (" + c.detail + ")");
  };
  for (const char* name : {"ex1.json", "ex2.json", "ex3.json"}) note_failures(name, check_document(load(name)));

  FuzzParams p;  // seed 42, max-n 4, max-N 12, both modes
  p.count = 200;
  const auto t0 = std::chrono::steady_clock::now();
  auto report = run_fuzz(p);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.expect(report.cases.size() == 200, "corpus size");
  for (const auto& c : report.cases) {
    if (!c.error.empty()) o.expect(false, "case " + std::to_string(c.index) + ": " + c.error);
    note_failures("case " + std::to_string(c.index), c.suite);
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "corpus %.2f s, limit %.0f s", secs, corpus_limit_s);
  o.expect(secs < corpus_limit_s, buf);
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  std::set<Sizes> seen;
  auto K = build_tower(PrimeField(7), {});
  while (seen.size() < 50) {
    const std::size_t m = uniform(rng, 2, 8);
    Sizes gens{m};
    const std::size_t extra = uniform(rng, 1, 3);
    for (std::size_t k = 0; k < extra; ++k) gens.push_back(uniform(rng, m + 1, 31));
    std::size_t g = 0;
    for (auto x : gens) g = std::gcd(g, x);
    if (g != 1) continue;
    const auto S = NumericalSemigroup::from_generators(gens);
    if (S.conductor() > 30 || S.multiplicity() != m) continue;
    if (!seen.insert(S.minimal_generators()).second) continue;

    std::vector<TruncSeries<PrimeField>> series;
    for (auto x : gens) series.push_back(TruncSeries<PrimeField>::monomial(K, 512, K->one(), x));
    auto R = build_generated(K, series, 512);
    const auto ring_ts = type_sequence(R).t, comb_ts = semigroup_ts_oracle(S);
    o.expect(ring_ts == comb_ts, "<" + detail::join(S.minimal_generators()) + ">: ring " + seq(ring_ts) +
                                     " vs oracle " + seq(comb_ts));
  }
  return o;
}

// dim(V : W) from the linear functional cutting out V: x is in the colon
// iff phi(x * w) = 0 for every basis vector w of W.
template <class F>
std::size_t colon_dim_by_functional(const ExtensionField<F>& K, const Vec<F>& phi, const Subspace<F>& W) {
  std::vector<Vec<F>> rows;
  for (const auto& w : W.basis()) {
    Vec<F> row;
    for (std::size_t k = 0; k < K.degree(); ++k) {
      const auto prod = K.mul(K.basis(k), FieldElement<F>{w});
      auto acc = K.scalars().zero();
      for (std::size_t c = 0; c < K.degree(); ++c) acc += prod.coords[c] * phi[c];
      row.push_back(acc);
    }
    rows.push_back(row);
  }
  return K.degree() - rank_of(K.scalars(), rows);
}

template <class F>
void codim_one_trials(Outcome& o, const FieldPtr<F>& K, std::size_t trials, std::mt19937_64& rng) {
  const auto& f = K->scalars();
  const std::size_t n = K->degree();
  auto rand_vec = [&] {
    Vec<F> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(f.from_int(static_cast<long>(uniform(rng, 0, 6)) - 3));
    return v;
  };
  for (std::size_t t = 0; t < trials; ++t) {
    Vec<F> phi;
    do phi = rand_vec();
    while (std::all_of(phi.begin(), phi.end(), [&](const auto& c) { return F::is_zero(c); }));
    std::size_t p = 0;
    while (F::is_zero(phi[p])) ++p;
    std::vector<Vec<F>> vb;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == p) continue;
      Vec<F> v(n, f.zero());
      v[k] = f.one();
      const typename F::Scalar ratio = phi[k] / phi[p];
      v[p] = -ratio;
      vb.push_back(v);
    }
    const auto V = Subspace<F>::span(f, n, vb);
    std::vector<Vec<F>> wb;
    const std::size_t wdim = uniform(rng, 0, n);
    for (std::size_t k = 0; k < wdim; ++k) wb.push_back(rand_vec());
    const auto W = Subspace<F>::span(f, n, wb);

    const std::size_t colon = subspace_colon(V, W, *K).dim();
    if (colon + W.dim() != n || colon != colon_dim_by_functional(*K, phi, W))
      o.expect(false, K->describe() + ": dim(V:W) = " + std::to_string(colon) + ", dim W = " +
                          std::to_string(W.dim()));
  }
}

Outcome codim_one_colon() {
  Outcome o;
  std::mt19937_64 rng(7);
  const RationalField q;
  // 5 * 60 + 70 + 70 + 60 = 500 pairs.
  const std::vector<std::vector<TowerLevel>> rational{
      {{"a", "a^2 - 2"}}, {{"i", "i^2 + 1"}}, {{"a", "a^3 - 2"}}, {{"a", "a^2 - 2"}, {"b", "b^2 - 3"}},
      {{"a", "a^4 - 2"}}};
  for (const auto& levels : rational) codim_one_trials(o, build_tower(q, levels), 60, rng);
  codim_one_trials(o, build_tower(PrimeField(7), {{"a", "a^2 - 3"}}), 70, rng);
  codim_one_trials(o, build_tower(PrimeField(5), {{"a", "a^3 + a + 1"}}), 70, rng);
  // a has order 8 in F_25^*, so it is not a square and b^2 - a stays irreducible.
  codim_one_trials(o, build_tower(PrimeField(5), {{"a", "a^2 - 2"}, {"b", "b^2 - a"}}), 60, rng);
  return o;
}

Outcome determinism() {
  Outcome o;
  for (const char* name : {"ex1.json", "ex2.json", "ex3.json", "f7_comparison.json"}) {
    const auto doc = load(name);
    const unsigned all = analyze_emit_duals | analyze_emit_gsr | analyze_compare_gsr | analyze_run_suite;
    o.expect(analyze(doc, all).json == analyze(doc, all).json, std::string("in-process report for ") + name);
  }
  if (cli_path.empty()) {
    o.expect(false, "no --cli given");
    return o;
  }
  fs::create_directories(work_dir);
  const std::string d = data_dir + "/";
  const std::vector<std::string> commands{
      "analyze " + d + "ex1.json --emit-duals",
      "analyze " + d + "ex3.json --emit-duals --emit-gsr --suite",
      "compare-gsr " + d + "f7_comparison.json",
      "check " + d + "ex2.json",
      "oracle 4 6 9",
      "fuzz --seed 42 --count 20 --max-n 4 --max-N 12"};
  for (std::size_t k = 0; k < commands.size(); ++k) {
    std::string out[2];
    for (int run = 0; run < 2; ++run) {
      const auto file = fs::path(work_dir) / ("det_" + std::to_string(k) + "_" + std::to_string(run) + ".json");
      const std::string cmd = "\"" + cli_path + "\" " + commands[k] + " > \"" + file.string() + "\"";
      if (std::system(cmd.c_str()) != 0) o.expect(false, "command failed: " + commands[k]);
      out[run] = slurp(file);
    }
    o.expect(!out[0].empty() && out[0] == out[1], "output differs between runs: " + commands[k]);
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  data_dir = TYPESEQ_TEST_DATA;
  work_dir = (fs::temp_directory_path() / "typeseq_acceptance").string();
  app.add_option("-c,--criterion", only, "Criteria to run (default: all)")->check(CLI::Range(1, 8));
  app.add_option("--data", data_dir, "Directory with the example documents");
  app.add_option("--cli", cli_path, "Path to the typeseq executable");
  app.add_option("--work-dir", work_dir, "Scratch directory");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "GSR over Q(sqrt2, sqrt3): n, t.s., label, printed inverses", default_limit_s, sqrt2_sqrt3_gsr},
      {2, "GSR over Q(i): t.s. and maximal length", default_limit_s, gaussian_gsr},
      {3, "generated ring over Q(i): N, n, t.s. and its GSR", generated_limit_s, gaussian_generated},
      {4, "F_7 ring against its associated GSR", default_limit_s, f7_comparison},
      {5, "identity suite on the sample rings and a 200-ring corpus", corpus_limit_s + 3 * default_limit_s, identity_suite},
      {6, "ring vs combinatorial type sequence, 50 semigroups", default_limit_s, oracle_equivalence},
      {7, "codimension-one colon, 500 pairs", default_limit_s, codim_one_colon},
      {8, "byte-identical reruns", corpus_limit_s, determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, c.limit_s);
    o.expect(secs < c.limit_s, std::string("too slow: ") + timing);
    std::printf("criterion %d: %s  %s  [%s]\n", c.id, o.ok ? "PASS" : "FAIL", c.name, timing);
    for (const auto& note : o.notes) std::printf("    %s\n", note.c_str());
    failed += !o.ok;
  }
  std::fflush(stdout);
  return failed ? 1 : 0;
}
