#pragma once

// Adequacy verdicts: the weak (semisimple-span) condition plus the two H^1
// vanishing conditions, assembled into one report.

#include "repcheck/cohomology.hpp"

namespace repcheck {

// Rank of the span of {rho(g) : rho(g) semisimple} inside End(V), flattened
// to d^2-vectors. Early exit at full rank.
int weak_span(const Rep& v);

struct AdequacyReport {
  std::string group_label;
  std::string module_label;
  int dim = 0;
  int span_dim = 0;
  bool weak_ok = false;  // span_dim == dim^2
  int h1_trivial_dim = 0;
  int h1_adq_dim = 0;
  int ext1_self_dim = 0;  // informational
  bool cond_h1_trivial = false;
  bool cond_h1_adq = false;
  bool adequate = false;  // weak_ok && both H^1 conditions
};

AdequacyReport adequacy_report(const Rep& v, const CohomOptions& opt = {});

}  // namespace repcheck
