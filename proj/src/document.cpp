#include "typeseq/document.hpp"

#include <json.hpp>

#include "typeseq/semigroup.hpp"
#include "typeseq/type_sequence.hpp"
#include "typeseq/verification.hpp"

namespace typeseq {

using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::parse, "document", what); }

void only_keys(const ojson& obj, std::initializer_list<const char*> keys, const std::string& where) {
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) bad("unknown key '" + k + "' in " + where);
  }
}

const ojson& member(const ojson& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) bad("missing key '" + std::string(key) + "' in " + where);
  return obj.at(key);
}

std::size_t natural(const ojson& v, const std::string& what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    bad(what + " must be a non-negative integer");
  return v.get<std::size_t>();
}

std::string text(const ojson& v, const std::string& what) {
  if (!v.is_string()) bad(what + " must be a string");
  return v.get<std::string>();
}

bool flag(const ojson& v, const std::string& what) {
  if (!v.is_boolean()) bad(what + " must be true or false");
  return v.get<bool>();
}

ojson document_json(const RingDocument& doc) {
  ojson j;
  if (doc.prime)
    j["base"] = {{"prime", *doc.prime}};
  else
    j["base"] = "Q";
  j["tower"] = ojson::array();
  for (const auto& level : doc.tower) j["tower"].push_back({{"name", level.name}, {"poly", level.minimal_polynomial}});
  if (const auto* g = std::get_if<GsrInput>(&doc.ring)) {
    ojson spaces = ojson::object();
    for (const auto& [deg, sp] : g->spaces) {
      if (sp.full)
        spaces[std::to_string(deg)] = "full";
      else
        spaces[std::to_string(deg)] = sp.elements;
    }
    j["ring"] = {{"gsr", {{"N", g->N}, {"spaces", spaces}}}};
  } else {
    j["ring"] = {{"generators", std::get<GeneratorInput>(doc.ring).generators}};
  }
  j["options"] = {{"max-degree-cap", doc.options.max_degree_cap},
                  {"emit-gsr", doc.options.emit_gsr},
                  {"emit-duals", doc.options.emit_duals}};
  return j;
}

ojson sizes(const std::vector<std::size_t>& v) { return ojson(v); }

template <class F>
ojson subspace_rows(const ExtensionField<F>& K, const Subspace<F>& U) {
  ojson rows = ojson::array();
  for (const auto& row : U.basis()) rows.push_back(format_series(K, row));
  return rows;
}

template <class F>
ojson gsr_spaces_json(const RingModel<F>& R) {
  const auto& K = R.field();
  ojson spaces = ojson::object();
  for (std::size_t i = 1; i < R.conductor(); ++i) {
    const auto& V = R.graded_piece(i);
    if (V.is_zero()) continue;
    if (V.is_full()) {
      spaces[std::to_string(i)] = "full";
      continue;
    }
    ojson els = ojson::array();
    for (const auto& row : V.basis()) els.push_back(K.format({row}));
    spaces[std::to_string(i)] = els;
  }
  return {{"N", R.conductor()}, {"spaces", spaces}};
}

ojson classification_json(const Classification& c) {
  return {{"label", c.label},
          {"regular", c.regular},
          {"gorenstein", c.gorenstein},
          {"kunz", c.kunz},
          {"almost_gorenstein", c.almost_gorenstein},
          {"maximal_length", c.maximal_length}};
}

ojson suite_json(const SuiteReport& s) {
  ojson checks = ojson::array();
  for (const auto& c : s.checks) {
    ojson e{{"name", c.name},
            {"status", c.status == CheckStatus::pass ? "pass" : c.status == CheckStatus::fail ? "fail" : "skip"}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  return {{"passed", s.passed()}, {"failures", s.failures()}, {"checks", checks}};
}

template <class F>
AnalysisResult analyze_ring(const RingDocument& doc, const FieldPtr<F>& K, unsigned flags) {
  if (doc.options.emit_duals) flags |= analyze_emit_duals;
  if (doc.options.emit_gsr) flags |= analyze_emit_gsr;
  const auto R = document_ring(doc, K);
  const auto chain = dual_chain(R);
  const auto rep = type_sequence(R, chain);
  const auto cls = classify(rep);
  const auto& sg = R->semigroup();

  ojson j;
  j["input"] = document_json(doc);
  ojson basis = ojson::array();
  for (std::size_t b = 0; b < K->degree(); ++b) basis.push_back(K->basis_name(b));
  j["field"] = {{"description", K->describe()}, {"degree", K->degree()}, {"basis", basis}};
  j["conductor"] = R->conductor();
  j["ring_basis"] = subspace_rows(*K, R->image());
  j["semigroup"] = {{"small_elements", sizes(sg.s)}, {"gaps", sizes(sg.gaps)}, {"c", sg.c}, {"r", sg.r}, {"l", sg.l}};
  j["n"] = sizes(rep.n);
  j["type_sequence"] = sizes(rep.t);
  j["cm_type"] = rep.cm_type;
  j["lengths"] = {{"closure_over_ring", rep.ell_over}, {"ring_over_conductor", rep.ell_rc}};
  ojson bounds = ojson::array();
  for (const auto& row : bounds_check(rep).rows)
    bounds.push_back({{"i", row.index}, {"lower", row.lower}, {"t", row.t}, {"upper", row.upper}, {"ok", row.ok}});
  j["bounds"] = bounds;
  j["classification"] = classification_json(cls);

  if (flags & analyze_emit_duals) {
    ojson duals = ojson::array();
    for (std::size_t i = 0; i < chain.duals.size(); ++i)
      duals.push_back({{"index", i}, {"dim", chain.duals[i].dim()}, {"basis", subspace_rows(*K, chain.duals[i].U)}});
    j["duals"] = duals;
  }
  if (flags & (analyze_emit_gsr | analyze_compare_gsr)) {
    const auto gsr = associated_gsr(*R);
    const auto grep = type_sequence(gsr);
    const auto cmp = compare_reports(rep, grep);
    if (flags & analyze_emit_gsr)
      j["associated_gsr"] = {{"ring", gsr_spaces_json(*gsr)},
                             {"type_sequence", sizes(grep.t)},
                             {"cm_type", grep.cm_type},
                             {"classification", classification_json(cmp.gsr_class)}};
    if (flags & analyze_compare_gsr)
      j["comparison"] = {{"same_type_sequence", cmp.same_type_sequence},
                         {"same_type", cmp.same_type},
                         {"ring_almost_gorenstein", cmp.ring_class.almost_gorenstein},
                         {"gsr_almost_gorenstein", cmp.gsr_class.almost_gorenstein},
                         {"criterion_holds", cmp.biconditional_holds}};
  }
  AnalysisResult out;
  if (flags & analyze_run_suite) {
    SuiteReport suite;
    if (const auto* g = std::get_if<GeneratorInput>(&doc.ring)) {
      const auto gens = document_generators(*g, K, doc.options.max_degree_cap);
      suite = run_suite(R, &gens, doc.options.max_degree_cap);
    } else {
      suite = run_suite(R);
    }
    out.suite_failures = suite.failures();
    j["suite"] = suite_json(suite);
  }
  out.json = j.dump(2) + "\n";
  out.type_sequence = rep.t;
  out.n_list = rep.n;
  out.conductor = R->conductor();
  out.label = cls.label;
  return out;
}

}  // namespace

RingDocument parse_document(const std::string& input) {
  ojson j;
  try {
    j = ojson::parse(input);
  } catch (const ojson::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) bad("top level must be an object");
  only_keys(j, {"base", "tower", "ring", "options"}, "document");

  RingDocument doc;
  if (j.contains("base")) {
    const auto& b = j.at("base");
    if (b.is_string()) {
      if (b.get<std::string>() != "Q") bad("base must be \"Q\" or {\"prime\": p}");
    } else if (b.is_object()) {
      only_keys(b, {"prime"}, "base");
      const std::size_t p = natural(member(b, "prime", "base"), "prime");
      if (!is_prime(p)) throw Error(ErrorCode::field, "base-field", std::to_string(p) + " is not prime");
      doc.prime = p;
    } else {
      bad("base must be \"Q\" or {\"prime\": p}");
    }
  }
  if (j.contains("tower")) {
    const auto& t = j.at("tower");
    if (!t.is_array()) bad("tower must be an array");
    for (const auto& level : t) {
      if (!level.is_object()) bad("tower entries must be objects");
      only_keys(level, {"name", "poly"}, "tower entry");
      doc.tower.push_back({text(member(level, "name", "tower entry"), "name"),
                           text(member(level, "poly", "tower entry"), "poly")});
    }
  }
  const auto& ring = member(j, "ring", "document");
  if (!ring.is_object()) bad("ring must be an object");
  only_keys(ring, {"gsr", "generators"}, "ring");
  if (ring.contains("gsr") == ring.contains("generators")) bad("ring needs exactly one of 'gsr' and 'generators'");
  if (ring.contains("gsr")) {
    const auto& g = ring.at("gsr");
    if (!g.is_object()) bad("gsr must be an object");
    only_keys(g, {"N", "spaces"}, "gsr");
    GsrInput in;
    in.N = natural(member(g, "N", "gsr"), "N");
    if (g.contains("spaces")) {
      const auto& sp = g.at("spaces");
      if (!sp.is_object()) bad("spaces must be an object keyed by degree");
      for (const auto& [key, value] : sp.items()) {
        std::size_t deg = 0;
        if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
          bad("space key '" + key + "' is not a degree");
        deg = std::stoul(key);
        if (deg >= in.N) bad("space degree " + key + " is not below N = " + std::to_string(in.N));
        SpaceInput s;
        if (value.is_string()) {
          if (value.get<std::string>() != "full") bad("space " + key + " must be \"full\" or a list of elements");
          s.full = true;
        } else if (value.is_array()) {
          for (const auto& e : value) s.elements.push_back(text(e, "space element"));
        } else {
          bad("space " + key + " must be \"full\" or a list of elements");
        }
        if (!in.spaces.emplace(deg, std::move(s)).second) bad("degree " + key + " given twice");
      }
    }
    doc.ring = std::move(in);
  } else {
    const auto& g = ring.at("generators");
    if (!g.is_array()) bad("generators must be an array");
    GeneratorInput in;
    for (const auto& e : g) in.generators.push_back(text(e, "generator"));
    doc.ring = std::move(in);
  }
  if (j.contains("options")) {
    const auto& o = j.at("options");
    if (!o.is_object()) bad("options must be an object");
    only_keys(o, {"max-degree-cap", "emit-gsr", "emit-duals"}, "options");
    if (o.contains("max-degree-cap")) doc.options.max_degree_cap = natural(o.at("max-degree-cap"), "max-degree-cap");
    if (o.contains("emit-gsr")) doc.options.emit_gsr = flag(o.at("emit-gsr"), "emit-gsr");
    if (o.contains("emit-duals")) doc.options.emit_duals = flag(o.at("emit-duals"), "emit-duals");
  }
  return doc;
}

std::string document_text(const RingDocument& doc) { return document_json(doc).dump(2) + "\n"; }

AnalysisResult analyze(const RingDocument& doc, unsigned flags) {
  return with_document_field(doc, [&](const auto& K) { return analyze_ring(doc, K, flags); });
}

AnalysisResult semigroup_oracle_report(const std::vector<std::size_t>& gens) {
  const auto S = NumericalSemigroup::from_generators(gens);
  const auto ts = semigroup_ts_oracle(S);
  ojson j;
  j["generators"] = sizes(gens);
  j["minimal_generators"] = sizes(S.minimal_generators());
  j["conductor"] = S.conductor();
  j["small_elements"] = sizes(S.small_elements());
  j["gaps"] = sizes(S.gaps());
  j["type_sequence"] = sizes(ts);
  j["cm_type"] = ts.empty() ? 1 : ts.front();
  AnalysisResult out;
  out.json = j.dump(2) + "\n";
  out.type_sequence = ts;
  out.conductor = S.conductor();
  return out;
}

std::string suite_report_text(const SuiteReport& report) { return suite_json(report).dump(2) + "\n"; }

std::string fuzz_report_text(const FuzzReport& report) {
  const auto& p = report.params;
  ojson j;
  j["params"] = {{"seed", p.seed}, {"count", p.count}, {"max_n", p.max_n}, {"max_N", p.max_N}, {"mode", to_string(p.mode)}};
  ojson cases = ojson::array();
  for (const auto& c : report.cases) {
    ojson e{{"index", c.index},
            {"seed", c.seed},
            {"kind", to_string(c.kind)},
            {"field_degree", c.field_degree},
            {"conductor", c.conductor},
            {"type_sequence", sizes(c.type_sequence)},
            {"label", c.label},
            {"passed", c.passed()}};
    if (!c.passed()) {
      if (!c.error.empty()) e["error"] = c.error;
      ojson failed = ojson::array();
      for (const auto& chk : c.suite.checks)
        if (chk.status == CheckStatus::fail) failed.push_back({{"name", chk.name}, {"detail", chk.detail}});
      e["failed_checks"] = failed;
      e["document"] = document_json(c.document);
    }
    cases.push_back(e);
  }
  j["cases"] = cases;
  j["failures"] = report.failures();
  return j.dump(2) + "\n";
}

}  // namespace typeseq
