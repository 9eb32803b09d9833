// typeseq command-line front end. Talks to the library only through the C API.

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "typeseq/typeseq.h"

namespace fs = std::filesystem;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed_checks = 1;
constexpr int exit_error = 2;

struct Handles {
  tsq_document* doc = nullptr;
  tsq_report* report = nullptr;
  ~Handles() {
    tsq_report_free(report);
    tsq_document_free(doc);
  }
};

struct Outcome {
  std::string text;
  std::string error;
  size_t failures = 0;
};

std::string status_message(tsq_status s) { return std::string(tsq_status_name(s)) + ": " + tsq_last_error(); }

enum class Command { analyze, compare_gsr, check };

struct DocOptions {
  size_t max_degree_cap = 0;  // 0 keeps the document's own value
  bool emit_duals = false;
  bool emit_gsr = false;
  bool suite = false;
};

Outcome run_document(Command cmd, const std::string& path, const DocOptions& opt) {
  Outcome out;
  Handles h;
  tsq_status s = tsq_document_load(path.c_str(), &h.doc);
  if (s == TSQ_OK && opt.max_degree_cap) s = tsq_document_set_max_degree_cap(h.doc, opt.max_degree_cap);
  if (s == TSQ_OK) {
    if (cmd == Command::check) {
      s = tsq_check(h.doc, &h.report);
    } else {
      unsigned flags = 0;
      if (opt.emit_duals) flags |= TSQ_EMIT_DUALS;
      if (opt.emit_gsr) flags |= TSQ_EMIT_GSR;
      if (opt.suite) flags |= TSQ_RUN_SUITE;
      if (cmd == Command::compare_gsr) flags |= TSQ_EMIT_GSR | TSQ_COMPARE_GSR;
      s = tsq_analyze(h.doc, flags, &h.report);
    }
  }
  if (s != TSQ_OK) {
    out.error = path + ": " + status_message(s);
    return out;
  }
  const char* json = nullptr;
  tsq_report_json(h.report, &json);
  tsq_report_failures(h.report, &out.failures);
  out.text = json;
  return out;
}

bool write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  f << text;
  return static_cast<bool>(f);
}

std::string suffix_for(Command cmd) {
  switch (cmd) {
    case Command::analyze: return ".report.json";
    case Command::compare_gsr: return ".compare.json";
    case Command::check: return ".check.json";
  }
  return ".json";
}

// One input goes to stdout (or -o). Several inputs go to <out-dir>/<stem><suffix>,
// processed by up to `jobs` worker threads.
int run_batch(Command cmd, const std::vector<std::string>& inputs, const DocOptions& opt, const std::string& output,
              const std::string& out_dir, unsigned jobs) {
  const bool batch = inputs.size() > 1 || !out_dir.empty();
  if (batch && !output.empty()) {
    std::cerr << "error: -o takes a single input; use --out-dir for several\n";
    return exit_error;
  }
  std::vector<Outcome> results(inputs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < inputs.size();) results[i] = run_document(cmd, inputs[i], opt);
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(inputs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = exit_ok;
  const fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
  if (batch) fs::create_directories(dir);
  for (size_t i = 0; i < inputs.size(); ++i) {
    const auto& r = results[i];
    if (!r.error.empty()) {
      std::cerr << "error: " << r.error << "\n";
      code = exit_error;
      continue;
    }
    if (r.failures && code == exit_ok) code = exit_failed_checks;
    if (batch) {
      const fs::path target = dir / (fs::path(inputs[i]).stem().string() + suffix_for(cmd));
      if (!write_file(target, r.text)) {
        std::cerr << "error: cannot write " << target.string() << "\n";
        code = exit_error;
      }
    } else if (!output.empty()) {
      if (!write_file(output, r.text)) {
        std::cerr << "error: cannot write " << output << "\n";
        code = exit_error;
      }
    } else {
      std::cout << r.text;
    }
    if (r.failures) std::cerr << inputs[i] << ": " << r.failures << " failed check(s)\n";
  }
  return code;
}

int emit(tsq_report* report, const std::string& output) {
  const char* json = nullptr;
  tsq_report_json(report, &json);
  if (output.empty()) {
    std::cout << json;
  } else if (!write_file(output, json)) {
    std::cerr << "error: cannot write " << output << "\n";
    return exit_error;
  }
  return exit_ok;
}

std::vector<size_t> split_generators(const std::vector<std::string>& args) {
  std::vector<size_t> gens;
  for (const auto& a : args) {
    std::stringstream ss(a);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      size_t used = 0;
      const unsigned long long v = std::stoull(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("bad generator '" + tok + "'");
      gens.push_back(static_cast<size_t>(v));
    }
  }
  return gens;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Type sequences of one-dimensional analytically irreducible local rings"};
  app.set_version_flag("--version", std::string(tsq_version()));
  app.require_subcommand(1);

  DocOptions opt;
  std::vector<std::string> inputs;
  std::string output, out_dir;
  unsigned jobs = 1;

  auto add_doc_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("files", inputs, "Ring documents (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("-o,--output", output, "Write the report here instead of standard output");
    sub->add_option("--out-dir", out_dir, "Directory for per-input reports in batch mode");
    sub->add_option("-j,--jobs", jobs, "Documents processed concurrently")->check(CLI::Range(1u, 256u));
    sub->add_option("--max-degree-cap", opt.max_degree_cap, "Largest truncation degree (default 512)")
        ->check(CLI::Range(size_t{1}, size_t{1} << 20));
    return sub;
  };

  auto* analyze = add_doc_command("analyze", "Full report");
  analyze->add_flag("--emit-duals", opt.emit_duals, "Include every dual ideal as a printed subspace");
  analyze->add_flag("--emit-gsr", opt.emit_gsr, "Include the associated generalized semigroup ring");
  analyze->add_flag("--suite", opt.suite, "Run the invariant suite and include its results");
  auto* compare = add_doc_command("compare-gsr", "Compare a ring with its associated generalized semigroup ring");
  compare->add_flag("--emit-duals", opt.emit_duals, "Include every dual ideal as a printed subspace");
  auto* check = add_doc_command("check", "Invariant suite only; nonzero exit on failure");

  tsq_fuzz_params fp{42, 200, 4, 12, "both"};
  std::string mode = "both", fuzz_out;
  auto* fuzz = app.add_subcommand("fuzz", "Invariant suite over a seeded random corpus; nonzero exit on failure");
  fuzz->add_option("--seed", fp.seed, "Corpus seed");
  fuzz->add_option("--count", fp.count, "Number of rings")->check(CLI::Range(size_t{1}, size_t{100000}));
  fuzz->add_option("--max-n", fp.max_n, "Largest field degree")->check(CLI::Range(size_t{1}, size_t{4}));
  fuzz->add_option("--max-N", fp.max_N, "Largest conductor")->check(CLI::Range(size_t{0}, size_t{64}));
  fuzz->add_option("--mode", mode, "gsr, generated or both")->check(CLI::IsMember({"gsr", "generated", "both"}));
  fuzz->add_option("-o,--output", fuzz_out, "Write the report here instead of standard output");

  std::vector<std::string> gen_args;
  std::string oracle_out;
  auto* oracle = app.add_subcommand("oracle", "Combinatorial type sequence of a numerical semigroup");
  oracle->add_option("generators", gen_args, "Generators, e.g. 4 6 9 or 4,6,9")->required();
  oracle->add_option("-o,--output", oracle_out, "Write the report here instead of standard output");

  CLI11_PARSE(app, argc, argv);

  if (*analyze) return run_batch(Command::analyze, inputs, opt, output, out_dir, jobs);
  if (*compare) return run_batch(Command::compare_gsr, inputs, opt, output, out_dir, jobs);
  if (*check) return run_batch(Command::check, inputs, opt, output, out_dir, jobs);

  Handles h;
  if (*fuzz) {
    fp.mode = mode.c_str();
    if (tsq_status s = tsq_fuzz(&fp, &h.report); s != TSQ_OK) {
      std::cerr << "error: " << status_message(s) << "\n";
      return exit_error;
    }
    if (int rc = emit(h.report, fuzz_out); rc != exit_ok) return rc;
    size_t failures = 0;
    tsq_report_failures(h.report, &failures);
    if (failures) std::cerr << failures << " failing case(s)\n";
    return failures ? exit_failed_checks : exit_ok;
  }

  std::vector<size_t> gens;
  try {
    gens = split_generators(gen_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_error;
  }
  if (tsq_status s = tsq_semigroup_oracle(gens.data(), gens.size(), &h.report); s != TSQ_OK) {
    std::cerr << "error: " << status_message(s) << "\n";
    return exit_error;
  }
  return emit(h.report, oracle_out);
}
