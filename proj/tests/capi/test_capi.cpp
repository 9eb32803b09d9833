#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "typeseq/typeseq.h"

namespace {

const std::string data_dir = TYPESEQ_TEST_DATA;

struct Doc {
  tsq_document* p = nullptr;
  ~Doc() { tsq_document_free(p); }
};
struct Report {
  tsq_report* p = nullptr;
  ~Report() { tsq_report_free(p); }
};

std::vector<size_t> type_sequence(const tsq_report* r) {
  size_t len = 0;
  REQUIRE(tsq_report_type_sequence(r, nullptr, 0, &len) == TSQ_OK);
  std::vector<size_t> v(len);
  REQUIRE(tsq_report_type_sequence(r, v.data(), v.size(), &len) == TSQ_OK);
  return v;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(tsq_version()) > 0);
  CHECK(std::string(tsq_status_name(TSQ_PARSE)) == "parse");
  CHECK(std::string(tsq_status_name(TSQ_CONDUCTOR_NOT_FOUND)) == "conductor-not-found");
}

TEST_CASE("load and analyze a document") {
  Doc d;
  REQUIRE(tsq_document_load((data_dir + "/ex1.json").c_str(), &d.p) == TSQ_OK);
  Report r;
  REQUIRE(tsq_analyze(d.p, TSQ_EMIT_DUALS | TSQ_RUN_SUITE, &r.p) == TSQ_OK);
  CHECK(type_sequence(r.p) == std::vector<size_t>{3, 4, 4, 2});

  size_t len = 0, n[8] = {};
  REQUIRE(tsq_report_n_list(r.p, n, 8, &len) == TSQ_OK);
  CHECK(len == 4);
  CHECK(n[1] == 4);

  size_t N = 0, failures = 99;
  CHECK(tsq_report_conductor(r.p, &N) == TSQ_OK);
  CHECK(N == 6);
  CHECK(tsq_report_failures(r.p, &failures) == TSQ_OK);
  CHECK(failures == 0);

  const char* label = nullptr;
  CHECK(tsq_report_label(r.p, &label) == TSQ_OK);
  CHECK(std::string(label) == "almost-gorenstein");

  const char* json = nullptr;
  CHECK(tsq_report_json(r.p, &json) == TSQ_OK);
  CHECK(std::string(json).find("\"duals\"") != std::string::npos);
}

TEST_CASE("truncated copies report the full length") {
  Doc d;
  REQUIRE(tsq_document_load((data_dir + "/ex3.json").c_str(), &d.p) == TSQ_OK);
  Report r;
  REQUIRE(tsq_analyze(d.p, 0, &r.p) == TSQ_OK);
  size_t two[2] = {}, len = 0;
  CHECK(tsq_report_type_sequence(r.p, two, 2, &len) == TSQ_OK);
  CHECK(len == 11);
  CHECK(tsq_report_type_sequence(r.p, nullptr, 2, &len) == TSQ_INVALID_ARGUMENT);
}

TEST_CASE("errors map to status codes and messages") {
  Doc d;
  CHECK(tsq_document_parse("{\"ring\": ", &d.p) == TSQ_PARSE);
  CHECK(d.p == nullptr);
  CHECK(std::strlen(tsq_last_error()) > 0);

  CHECK(tsq_document_parse(R"({"base": {"prime": 6}, "ring": {"gsr": {"N": 1}}})", &d.p) == TSQ_FIELD);
  CHECK(tsq_document_load("/nonexistent/doc.json", &d.p) == TSQ_IO);
  CHECK(tsq_document_parse(nullptr, &d.p) == TSQ_INVALID_ARGUMENT);
  CHECK(tsq_analyze(nullptr, 0, nullptr) == TSQ_INVALID_ARGUMENT);

  REQUIRE(tsq_document_parse(R"({"ring": {"generators": ["X^40", "X^41"]}})", &d.p) == TSQ_OK);
  CHECK(tsq_document_set_max_degree_cap(d.p, 0) == TSQ_INVALID_ARGUMENT);
  REQUIRE(tsq_document_set_max_degree_cap(d.p, 64) == TSQ_OK);
  Report r;
  CHECK(tsq_analyze(d.p, 0, &r.p) == TSQ_CONDUCTOR_NOT_FOUND);
  CHECK(r.p == nullptr);

  Doc ok;
  REQUIRE(tsq_document_parse(R"({"ring": {"gsr": {"N": 0}}})", &ok.p) == TSQ_OK);
  Report fine;
  CHECK(tsq_analyze(ok.p, 0, &fine.p) == TSQ_OK);
  CHECK(std::string(tsq_last_error()).empty());
}

TEST_CASE("last error is per thread") {
  Doc d;
  CHECK(tsq_document_parse("nope", &d.p) == TSQ_PARSE);
  std::string other = "unset";
  std::thread([&] { other = tsq_last_error(); }).join();
  CHECK(other.empty());
  CHECK(std::strlen(tsq_last_error()) > 0);
}

TEST_CASE("check, fuzz and oracle") {
  Doc d;
  REQUIRE(tsq_document_load((data_dir + "/f7_comparison.json").c_str(), &d.p) == TSQ_OK);
  Report c;
  REQUIRE(tsq_check(d.p, &c.p) == TSQ_OK);
  size_t failures = 1;
  tsq_report_failures(c.p, &failures);
  CHECK(failures == 0);

  tsq_fuzz_params params{7, 6, 2, 8, "gsr"};
  Report f;
  REQUIRE(tsq_fuzz(&params, &f.p) == TSQ_OK);
  tsq_report_failures(f.p, &failures);
  CHECK(failures == 0);
  params.mode = "everything";
  Report bad;
  CHECK(tsq_fuzz(&params, &bad.p) == TSQ_INVALID_ARGUMENT);

  const size_t gens[] = {3, 5, 7};
  Report o;
  REQUIRE(tsq_semigroup_oracle(gens, 3, &o.p) == TSQ_OK);
  size_t N = 0;
  tsq_report_conductor(o.p, &N);
  CHECK(N == 5);
  const size_t even[] = {4, 6};
  Report e;
  CHECK(tsq_semigroup_oracle(even, 2, &e.p) == TSQ_INVALID_ARGUMENT);
}
