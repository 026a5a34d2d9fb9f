#include "repcheck/adequacy.hpp"

namespace repcheck {

int weak_span(const Rep& v) {
  const auto& F = v.field();
  int d = v.dim;
  RowSpace span(F, d * d);
  auto imgs = all_images(v);
  for (const Mat& m : imgs) {
    if (!mat_semisimple(m)) continue;
    std::vector<felt> row(m.a.begin(), m.a.end());
    span.insert(std::move(row));
    if (span.rank() == d * d) break;
  }
  return span.rank();
}

AdequacyReport adequacy_report(const Rep& v, const CohomOptions& opt) {
  AdequacyReport r;
  r.module_label = v.label;
  r.dim = v.dim;
  r.span_dim = weak_span(v);
  r.weak_ok = (r.span_dim == v.dim * v.dim);
  r.h1_trivial_dim = h1(rep_trivial(v.G, 1), opt).h1_dim;
  r.h1_adq_dim = h1(rep_adq(v), opt).h1_dim;
  r.ext1_self_dim = ext1(v, v, opt).h1_dim;
  r.cond_h1_trivial = (r.h1_trivial_dim == 0);
  r.cond_h1_adq = (r.h1_adq_dim == 0);
  r.adequate = r.weak_ok && r.cond_h1_trivial && r.cond_h1_adq;
  return r;
}

}  // namespace repcheck
