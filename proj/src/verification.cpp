#include "typeseq/verification.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace typeseq {

FuzzMode parse_fuzz_mode(const std::string& text) {
  if (text == "gsr") return FuzzMode::gsr;
  if (text == "generated") return FuzzMode::generated;
  if (text == "both") return FuzzMode::both;
  throw Error(ErrorCode::invalid_argument, "fuzz-mode", "unknown mode '" + text + "' (expected gsr, generated or both)");
}

std::string to_string(FuzzMode mode) {
  switch (mode) {
    case FuzzMode::gsr: return "gsr";
    case FuzzMode::generated: return "generated";
    case FuzzMode::both: return "both";
  }
  return "?";
}

void FuzzParams::validate() const {
  if (max_n < 1) throw Error(ErrorCode::invalid_argument, "fuzz-params", "max-n must be at least 1");
  if (max_n > 4) throw Error(ErrorCode::invalid_argument, "fuzz-params", "max-n above 4 is not supported");
  if (count < 1) throw Error(ErrorCode::invalid_argument, "fuzz-params", "count must be at least 1");
}

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; }));
}

const std::vector<std::string>& suite_registry() {
  static const std::vector<std::string> names{
      "canonical-form",        "codim1-colon-dimension", "colon-monotonicity",   "field-inverse",
      "series-ring-axioms",    "valuation-additivity",   "ring-closure",         "locality",
      "conductor-minimality",  "filtration-dimensions",  "semigroup-consistency", "chain-strict",
      "ideal-modules",         "divisoriality",          "dual-chain-strict",    "dual-top-degree-full",
      "dual-top-degree-bound", "type-positive",          "sum-t-equals-length",  "sum-n-equals-length",
      "n0-is-one",             "type-bounds",            "length-inequality",    "pattern-vs-length",
      "gorenstein-self-duality", "gsr-round-trip",       "gsr-criterion",        "semigroup-oracle",
      "generator-order"};
  return names;
}

namespace detail {

void SuiteBuilder::run(const std::string& name, const std::function<std::string()>& body) {
  CheckResult r{name, CheckStatus::pass, {}};
  try {
    r.detail = body();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  if (!r.detail.empty()) r.status = CheckStatus::fail;
  report_.checks.push_back(std::move(r));
}

void SuiteBuilder::skip(const std::string& name, const std::string& why) {
  report_.checks.push_back({name, CheckStatus::skip, why});
}

SuiteReport SuiteBuilder::finish() && {
  const auto& reg = suite_registry();
  bool same = report_.checks.size() == reg.size();
  for (std::size_t i = 0; same && i < reg.size(); ++i) same = report_.checks[i].name == reg[i];
  if (!same) throw Error(ErrorCode::inconsistency, "suite-registry", "evaluated checks do not match the registry");
  return std::move(report_);
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

std::uint64_t case_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

using Poly = std::vector<std::uint64_t>;  // coefficients low -> high, mod p

// Remainder of a modulo monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] = (a[shift + k] + (p - c) * b[k]) % p;
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Trial division by every monic polynomial of degree <= deg/2.
bool irreducible_mod_p(const Poly& f, std::uint64_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < d; ++k) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t c = code;
      for (std::size_t k = 0; k < d; ++k, c /= p) g[k] = c % p;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::string poly_text(const Poly& f, const std::string& x) {
  std::string s;
  for (std::size_t k = f.size(); k-- > 0;) {
    if (f[k] == 0) continue;
    if (!s.empty()) s += " + ";
    std::string mono = k == 0 ? "" : (k == 1 ? x : x + "^" + std::to_string(k));
    if (mono.empty())
      s += std::to_string(f[k]);
    else
      s += (f[k] == 1 ? "" : std::to_string(f[k]) + "*") + mono;
  }
  return s;
}

const std::vector<std::vector<std::vector<TowerLevel>>>& rational_catalog() {
  // Indexed by degree.
  static const std::vector<std::vector<std::vector<TowerLevel>>> cat{
      {},
      {{}},
      {{{"a", "a^2 - 2"}}, {{"i", "i^2 + 1"}}, {{"w", "w^2 + w + 1"}}, {{"a", "a^2 - 3"}}},
      {{{"a", "a^3 - 2"}}, {{"a", "a^3 - a - 1"}}},
      {{{"a", "a^2 - 2"}, {"b", "b^2 - 3"}}, {{"a", "a^4 - 2"}}, {{"i", "i^2 + 1"}, {"b", "b^2 - 2"}}},
  };
  return cat;
}

template <class F>
Vec<F> random_coords(const F& f, std::size_t len, std::mt19937_64& rng) {
  Vec<F> v;
  for (std::size_t i = 0; i < len; ++i) v.push_back(f.from_int(static_cast<long>(uniform(rng, 0, 4)) - 2));
  return v;
}

template <class F>
FieldElement<F> random_nonzero(const ExtensionField<F>& K, std::mt19937_64& rng) {
  while (true) {
    FieldElement<F> x{random_coords(K.scalars(), K.degree(), rng)};
    if (!K.is_zero(x)) return x;
  }
}

template <class F>
GsrInput random_gsr_input(const FieldPtr<F>& K, std::size_t max_N, std::mt19937_64& rng) {
  const auto& f = K->scalars();
  const std::size_t n = K->degree();
  std::size_t N = uniform(rng, 0, max_N);
  std::vector<Subspace<F>> V(N, Subspace<F>::zero(f, n));
  if (N > 0) V[0] = base_line(*K);
  for (std::size_t i = 1; i < N; ++i) {
    const auto roll = uniform(rng, 0, 99);
    if (roll < 40) continue;
    if (roll < 55) {
      V[i] = Subspace<F>::full(f, n);
      continue;
    }
    std::vector<Vec<F>> vs;
    for (std::size_t k = uniform(rng, 1, n); k > 0; --k) vs.push_back(random_coords(f, n, rng));
    V[i] = Subspace<F>::span(f, n, vs);
  }
  // One ascending pass: V_a, V_b with a, b < i are final when degree i is reached.
  for (std::size_t i = 2; i < N; ++i)
    for (std::size_t a = 1; 2 * a <= i; ++a) V[i] = V[i].sum(product_span(V[a], V[i - a], *K));
  while (N > 0 && V[N - 1].is_full()) --N;

  GsrInput in{N, {}};
  for (std::size_t i = 1; i < N; ++i) {
    if (V[i].is_zero()) continue;
    SpaceInput s;
    s.full = V[i].is_full();
    if (!s.full)
      for (const auto& row : V[i].basis()) s.elements.push_back(K->format({row}));
    in.spaces.emplace(i, std::move(s));
  }
  return in;
}

// nullopt when no acceptable ring turned up within the attempt budget.
template <class F>
std::optional<GeneratorInput> random_generator_input(const FieldPtr<F>& K, std::size_t max_N, std::size_t cap,
                                                     std::mt19937_64& rng) {
  const std::size_t n = K->degree();
  const std::size_t vtop = std::max<std::size_t>(3, max_N);
  for (int attempt = 0; attempt < 40; ++attempt) {
    const std::size_t m = uniform(rng, 2, 4);
    std::vector<std::size_t> vals;
    std::size_t g = 0;
    for (std::size_t j = 0; j < m; ++j) {
      vals.push_back(uniform(rng, 2, vtop));
      g = std::gcd(g, vals.back());
    }
    if (g != 1) continue;
    std::vector<TruncSeries<F>> gens;
    for (std::size_t j = 0; j < m; ++j) {
      TruncSeries<F> s(K, cap);
      s.set_coeff(vals[j], n == 1 ? K->one() : random_nonzero(*K, rng));
      const std::size_t tail = (j == 0 && n > 1) ? uniform(rng, 1, 2) : uniform(rng, 0, 2);
      for (std::size_t t = 0; t < tail; ++t) {
        const std::size_t deg = vals[j] + uniform(rng, 1, 3);
        s.set_coeff(deg, K->add(s.coeff(deg), random_nonzero(*K, rng)));
      }
      gens.push_back(std::move(s));
    }
    try {
      const auto R = build_generated(K, gens, cap);
      if (R->conductor() > max_N) continue;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::conductor_not_found) continue;
      throw;
    }
    GeneratorInput in;
    for (const auto& s : gens) in.generators.push_back(format_series(s));
    return in;
  }
  return std::nullopt;
}

}  // namespace

RingDocument random_field_document(std::size_t max_n, std::mt19937_64& rng) {
  RingDocument doc;
  const std::size_t n = uniform(rng, 1, std::min<std::size_t>(max_n, 4));
  const auto& cat = rational_catalog();
  if (uniform(rng, 0, 4) == 0) {
    const auto& options = cat[n];
    doc.tower = options[uniform(rng, 0, options.size() - 1)];
    return doc;
  }
  static const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
  const std::uint64_t p = primes[uniform(rng, 0, 5)];
  doc.prime = p;
  if (n == 1) return doc;
  while (true) {
    Poly f(n + 1, 0);
    f[n] = 1;
    for (std::size_t k = 0; k < n; ++k) f[k] = uniform(rng, 0, p - 1);
    if (f[0] != 0 && irreducible_mod_p(f, p)) {
      doc.tower.push_back({"a", poly_text(f, "a")});
      return doc;
    }
  }
}

RingDocument random_gsr(const FuzzParams& params, std::mt19937_64& rng) {
  RingDocument doc = random_field_document(params.max_n, rng);
  doc.ring = with_document_field(doc, [&](const auto& K) { return random_gsr_input(K, params.max_N, rng); });
  return doc;
}

RingDocument random_generated(const FuzzParams& params, std::mt19937_64& rng) {
  // N <= max-N and e <= max-N, so 2*max-N degrees suffice to see the conductor.
  const std::size_t cap = std::max<std::size_t>(8, 2 * params.max_N + 4);
  for (int field_attempt = 0; field_attempt < 8; ++field_attempt) {
    RingDocument doc = random_field_document(params.max_n, rng);
    doc.options.max_degree_cap = cap;
    auto gens = with_document_field(doc, [&](const auto& K) {
      return random_generator_input(K, params.max_N, cap, rng);
    });
    if (gens) {
      doc.ring = std::move(*gens);
      return doc;
    }
  }
  // Residually rational fallback that always has a small conductor.
  RingDocument doc;
  doc.prime = 7;
  doc.options.max_degree_cap = cap;
  doc.ring = GeneratorInput{params.max_N >= 2 ? std::vector<std::string>{"X^2", "X^3"} : std::vector<std::string>{"X"}};
  return doc;
}

SuiteReport check_document(const RingDocument& doc) {
  return with_document_field(doc, [&](const auto& K) {
    const auto R = document_ring(doc, K);
    if (const auto* g = std::get_if<GeneratorInput>(&doc.ring)) {
      const auto gens = document_generators(*g, K, doc.options.max_degree_cap);
      return run_suite(R, &gens, doc.options.max_degree_cap);
    }
    return run_suite(R);
  });
}

FuzzCase run_fuzz_case(const FuzzParams& params, std::size_t index) {
  FuzzCase c;
  c.index = index;
  c.seed = case_seed(params.seed, index);
  c.kind = params.mode == FuzzMode::both ? (index % 2 == 0 ? FuzzMode::gsr : FuzzMode::generated) : params.mode;
  std::mt19937_64 rng(c.seed);
  try {
    c.document = c.kind == FuzzMode::gsr ? random_gsr(params, rng) : random_generated(params, rng);
    with_document_field(c.document, [&](const auto& K) {
      const auto R = document_ring(c.document, K);
      c.field_degree = R->degree();
      c.conductor = R->conductor();
      if (const auto* g = std::get_if<GeneratorInput>(&c.document.ring)) {
        const auto gens = document_generators(*g, K, c.document.options.max_degree_cap);
        c.suite = run_suite(R, &gens, c.document.options.max_degree_cap);
      } else {
        c.suite = run_suite(R);
      }
      const auto rep = type_sequence(R);
      c.type_sequence = rep.t;
      c.label = classify(rep).label;
      return 0;
    });
  } catch (const std::exception& e) {
    c.error = e.what();
  }
  return c;
}

FuzzReport run_fuzz(const FuzzParams& params) {
  params.validate();
  FuzzReport report{params, {}};
  for (std::size_t i = 0; i < params.count; ++i) report.cases.push_back(run_fuzz_case(params, i));
  return report;
}

std::size_t FuzzReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const FuzzCase& c) { return !c.passed(); }));
}

}  // namespace typeseq
