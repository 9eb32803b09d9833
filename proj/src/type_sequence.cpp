#include "typeseq/type_sequence.hpp"

#include <numeric>

namespace typeseq {

Classification classify(const TypeSequenceReport& rep) {
  Classification c;
  const std::size_t t = rep.cm_type;
  const auto& ts = rep.t;
  const auto& n = rep.n;
  if (ts.size() != n.size())
    throw Error(ErrorCode::inconsistency, "classification", "type sequence and n-list lengths differ");

  c.ag_by_pattern = true;
  c.ml_by_pattern = true;
  for (std::size_t i = 1; i <= ts.size(); ++i) {
    if (i >= 2 && ts[i - 1] != n[i - 1]) c.ag_by_pattern = false;
    if (ts[i - 1] != t * n[i - 1]) c.ml_by_pattern = false;
  }
  c.ag_by_length = rep.ell_over + 1 == rep.ell_rc + t;
  c.ml_by_length = rep.ell_over == t * rep.ell_rc;
  if (c.ag_by_pattern != c.ag_by_length)
    throw Error(ErrorCode::inconsistency, "pattern-vs-length",
                std::string("almost-Gorenstein pattern says ") + (c.ag_by_pattern ? "yes" : "no") +
                    " but the length equality says " + (c.ag_by_length ? "yes" : "no"));
  if (c.ml_by_pattern != c.ml_by_length)
    throw Error(ErrorCode::inconsistency, "pattern-vs-length",
                std::string("maximal-length pattern says ") + (c.ml_by_pattern ? "yes" : "no") +
                    " but the length equality says " + (c.ml_by_length ? "yes" : "no"));

  c.almost_gorenstein = c.ag_by_pattern;
  c.maximal_length = c.ml_by_pattern;
  c.regular = rep.semigroup.N == 0;
  c.gorenstein = t == 1;
  if (c.gorenstein && !c.almost_gorenstein)
    throw Error(ErrorCode::inconsistency, "gorenstein-pattern", "type 1 ring without the almost-Gorenstein pattern");
  c.kunz = c.almost_gorenstein && t == 2;

  if (c.regular)
    c.label = "regular";
  else if (c.gorenstein)
    c.label = "gorenstein";
  else if (c.kunz)
    c.label = "kunz";
  else if (c.almost_gorenstein)
    c.label = "almost-gorenstein";
  else if (c.maximal_length)
    c.label = "maximal-length";
  else
    c.label = "intermediate";
  return c;
}

BoundsTable bounds_check(const TypeSequenceReport& rep) {
  BoundsTable table;
  for (std::size_t i = 1; i <= rep.t.size(); ++i) {
    BoundsRow row{i, rep.n[i - 1], rep.t[i - 1], rep.cm_type * rep.n[i - 1], false};
    row.ok = row.lower <= row.t && row.t <= row.upper;
    table.all_ok = table.all_ok && row.ok;
    table.rows.push_back(row);
  }
  return table;
}

GsrComparison compare_reports(const TypeSequenceReport& ring, const TypeSequenceReport& gsr) {
  GsrComparison cmp{ring, gsr, classify(ring), classify(gsr)};
  cmp.same_type_sequence = ring.t == gsr.t;
  cmp.same_type = ring.cm_type == gsr.cm_type;
  cmp.biconditional_holds =
      cmp.ring_class.almost_gorenstein == (cmp.gsr_class.almost_gorenstein && cmp.same_type);
  return cmp;
}

}  // namespace typeseq
