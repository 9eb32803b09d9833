#include "typeseq/typeseq.h"

#include <fstream>
#include <sstream>
#include <string>

#include "typeseq/document.hpp"
#include "typeseq/verification.hpp"

struct tsq_document {
  typeseq::RingDocument doc;
};

struct tsq_report {
  typeseq::AnalysisResult result;
};

namespace {

thread_local std::string last_error;

tsq_status fail(tsq_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

tsq_status status_of(typeseq::ErrorCode code) {
  using typeseq::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return TSQ_INVALID_ARGUMENT;
    case ErrorCode::parse: return TSQ_PARSE;
    case ErrorCode::field: return TSQ_FIELD;
    case ErrorCode::ring: return TSQ_RING;
    case ErrorCode::conductor_not_found: return TSQ_CONDUCTOR_NOT_FOUND;
    case ErrorCode::inconsistency: return TSQ_INCONSISTENT;
  }
  return TSQ_INTERNAL;
}

template <class Fn>
tsq_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return TSQ_OK;
  } catch (const typeseq::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TSQ_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TSQ_INTERNAL, e.what());
  }
}

tsq_status copy_list(const std::vector<std::size_t>& v, size_t* values, size_t capacity, size_t* length) {
  if (!length) return fail(TSQ_INVALID_ARGUMENT, "length pointer is null");
  if (capacity > 0 && !values) return fail(TSQ_INVALID_ARGUMENT, "values pointer is null");
  *length = v.size();
  for (std::size_t i = 0; i < v.size() && i < capacity; ++i) values[i] = v[i];
  return TSQ_OK;
}

}  // namespace

extern "C" {

const char* tsq_version(void) { return "0.1.0"; }

const char* tsq_last_error(void) { return last_error.c_str(); }

const char* tsq_status_name(tsq_status status) {
  switch (status) {
    case TSQ_OK: return "ok";
    case TSQ_INVALID_ARGUMENT: return "invalid-argument";
    case TSQ_PARSE: return "parse";
    case TSQ_FIELD: return "field";
    case TSQ_RING: return "ring";
    case TSQ_CONDUCTOR_NOT_FOUND: return "conductor-not-found";
    case TSQ_INCONSISTENT: return "inconsistent";
    case TSQ_IO: return "io";
    case TSQ_INTERNAL: return "internal";
  }
  return "unknown";
}

tsq_status tsq_document_parse(const char* json, tsq_document** out) {
  if (!json || !out) return fail(TSQ_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new tsq_document{typeseq::parse_document(json)}; });
}

tsq_status tsq_document_load(const char* path, tsq_document** out) {
  if (!path || !out) return fail(TSQ_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(TSQ_IO, std::string("cannot open ") + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return guarded([&] { *out = new tsq_document{typeseq::parse_document(ss.str())}; });
}

tsq_status tsq_document_set_max_degree_cap(tsq_document* doc, size_t cap) {
  if (!doc) return fail(TSQ_INVALID_ARGUMENT, "null document");
  if (cap == 0) return fail(TSQ_INVALID_ARGUMENT, "max-degree-cap must be positive");
  doc->doc.options.max_degree_cap = cap;
  return TSQ_OK;
}

void tsq_document_free(tsq_document* doc) { delete doc; }

tsq_status tsq_analyze(const tsq_document* doc, unsigned flags, tsq_report** out) {
  if (!doc || !out) return fail(TSQ_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new tsq_report{typeseq::analyze(doc->doc, flags)}; });
}

tsq_status tsq_check(const tsq_document* doc, tsq_report** out) {
  if (!doc || !out) return fail(TSQ_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto suite = typeseq::check_document(doc->doc);
    typeseq::AnalysisResult r;
    r.json = typeseq::suite_report_text(suite);
    r.suite_failures = suite.failures();
    *out = new tsq_report{std::move(r)};
  });
}

tsq_status tsq_fuzz(const tsq_fuzz_params* params, tsq_report** out) {
  if (!params || !out) return fail(TSQ_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    typeseq::FuzzParams p;
    p.seed = params->seed;
    p.count = params->count;
    p.max_n = params->max_n;
    p.max_N = params->max_N;
    p.mode = typeseq::parse_fuzz_mode(params->mode ? params->mode : "both");
    const auto report = typeseq::run_fuzz(p);
    typeseq::AnalysisResult r;
    r.json = typeseq::fuzz_report_text(report);
    r.suite_failures = report.failures();
    *out = new tsq_report{std::move(r)};
  });
}

tsq_status tsq_semigroup_oracle(const size_t* generators, size_t count, tsq_report** out) {
  if (!out || (count > 0 && !generators)) return fail(TSQ_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::vector<std::size_t> gens(generators, generators + count);
    *out = new tsq_report{typeseq::semigroup_oracle_report(gens)};
  });
}

tsq_status tsq_report_json(const tsq_report* report, const char** json) {
  if (!report || !json) return fail(TSQ_INVALID_ARGUMENT, "null argument");
  *json = report->result.json.c_str();
  return TSQ_OK;
}

tsq_status tsq_report_failures(const tsq_report* report, size_t* failures) {
  if (!report || !failures) return fail(TSQ_INVALID_ARGUMENT, "null argument");
  *failures = report->result.suite_failures;
  return TSQ_OK;
}

tsq_status tsq_report_type_sequence(const tsq_report* report, size_t* values, size_t capacity, size_t* length) {
  if (!report) return fail(TSQ_INVALID_ARGUMENT, "null report");
  return copy_list(report->result.type_sequence, values, capacity, length);
}

tsq_status tsq_report_n_list(const tsq_report* report, size_t* values, size_t capacity, size_t* length) {
  if (!report) return fail(TSQ_INVALID_ARGUMENT, "null report");
  return copy_list(report->result.n_list, values, capacity, length);
}

tsq_status tsq_report_conductor(const tsq_report* report, size_t* conductor) {
  if (!report || !conductor) return fail(TSQ_INVALID_ARGUMENT, "null argument");
  *conductor = report->result.conductor;
  return TSQ_OK;
}

tsq_status tsq_report_label(const tsq_report* report, const char** label) {
  if (!report || !label) return fail(TSQ_INVALID_ARGUMENT, "null argument");
  *label = report->result.label.c_str();
  return TSQ_OK;
}

void tsq_report_free(tsq_report* report) { delete report; }

}  // extern "C"
