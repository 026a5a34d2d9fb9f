#include "repcheck/structure.hpp"

#include <algorithm>

namespace repcheck {

Rep build_extension(const Rep& v, const Rep& w, const std::vector<felt>& cocycle) {
  if (!v.same_group(w)) throw RepError("build_extension: group mismatch");
  const auto& F = v.field();
  int dv = v.dim, dw = w.dim, n = dv + dw;
  int g = int(v.images.size());
  if (int(cocycle.size()) != dv * dw * g)
    throw RepError("build_extension: cocycle length mismatch");
  std::vector<Mat> images;
  images.reserve(g);
  for (int s = 0; s < g; ++s) {
    // block [[rho_v, d(s) rho_w], [0, rho_w]]
    Mat d(F, dv, dw);
    std::copy_n(cocycle.begin() + size_t(s) * dv * dw, size_t(dv) * dw, d.a.begin());
    Mat top = mat_mul(d, w.images[s]);
    Mat m(F, n, n);
    for (int i = 0; i < dv; ++i)
      for (int j = 0; j < dv; ++j) m.at(i, j) = v.images[s].at(i, j);
    for (int i = 0; i < dv; ++i)
      for (int j = 0; j < dw; ++j) m.at(i, dv + j) = top.at(i, j);
    for (int i = 0; i < dw; ++i)
      for (int j = 0; j < dw; ++j) m.at(dv + i, dv + j) = w.images[s].at(i, j);
    images.push_back(std::move(m));
  }
  return rep_from_gens(v.G, std::move(images),
                       "ext(" + v.label + "," + w.label + ")");
}

FormSpace invariant_forms(const Rep& v) {
  const auto& F = v.field();
  if (F->p() == 2)
    throw RepError("invariant_forms: characteristic 2 not supported "
                   "(symmetric/alternating split degenerates)");
  int d = v.dim;
  // Solve rho^T B rho = B per generator; unknown vec(B) row-major.
  RowSpace eqs(F, d * d);
  for (const Mat& r : v.images) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        std::vector<felt> row(size_t(d) * d, 0);
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l) {
            felt c = F->mul(r.at(k, i), r.at(l, j));
            row[size_t(k) * d + l] = F->add(row[size_t(k) * d + l], c);
          }
        row[size_t(i) * d + j] = F->sub(row[size_t(i) * d + j], 1);
        eqs.insert(std::move(row));
      }
  }
  FormSpace fs;
  auto sols = eqs.nullspace();
  std::sort(sols.begin(), sols.end());
  for (const auto& s : sols) {
    Mat b(F, d, d);
    b.a = s;
    fs.basis.push_back(std::move(b));
  }
  int h = int(fs.basis.size());
  if (h == 0) return fs;
  if (h > 4) throw RepError("invariant_forms: form space dimension > 4");

  // Split into symmetric and alternating parts (p odd: direct sum).
  RowSpace sym_eq(F, h), alt_eq(F, h);
  auto add_split_rows = [&](RowSpace& space, bool symmetric) {
    // kernel of B -> B -+ B^T restricted to the form space
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        std::vector<felt> row(h, 0);
        for (int t = 0; t < h; ++t) {
          felt val = symmetric
                         ? F->sub(fs.basis[t].at(i, j), fs.basis[t].at(j, i))
                         : F->add(fs.basis[t].at(i, j), fs.basis[t].at(j, i));
          row[t] = val;
        }
        space.insert(std::move(row));
      }
  };
  add_split_rows(sym_eq, true);
  add_split_rows(alt_eq, false);
  auto sym_coords = sym_eq.nullspace();
  auto alt_coords = alt_eq.nullspace();
  fs.sym_dim = int(sym_coords.size());
  fs.alt_dim = int(alt_coords.size());

  auto combine = [&](const std::vector<felt>& coords) {
    Mat b(F, d, d);
    for (int t = 0; t < h; ++t)
      if (coords[t]) {
        for (size_t i = 0; i < b.a.size(); ++i)
          b.a[i] = F->add(b.a[i], F->mul(coords[t], fs.basis[t].a[i]));
      }
    return b;
  };

  // Enumerate each part projectively: existence of nondegenerate forms and
  // the span of the degenerate ones.
  RowSpace degen(F, d * d);
  auto scan_part = [&](const std::vector<std::vector<felt>>& coords_basis,
                       bool& nondeg_flag) {
    int hp = int(coords_basis.size());
    if (hp == 0) return;
    std::vector<felt> tup(hp, 0);
    while (true) {
      int pos = 0;
      while (pos < hp) {
        tup[pos] = felt(tup[pos] + 1 == F->q() ? 0 : tup[pos] + 1);
        if (tup[pos] != 0) break;
        ++pos;
      }
      if (pos == hp) break;
      int lead = hp - 1;
      while (lead >= 0 && tup[lead] == 0) --lead;
      if (tup[lead] != 1) continue;  // one representative per projective class
      std::vector<felt> coords(h, 0);
      for (int t = 0; t < hp; ++t)
        for (int u = 0; u < h; ++u)
          coords[u] = F->add(coords[u], F->mul(tup[t], coords_basis[t][u]));
      Mat b = combine(coords);
      if (mat_rank(b) == d)
        nondeg_flag = true;
      else
        degen.insert(b.a);
    }
  };
  scan_part(sym_coords, fs.nondeg_sym);
  scan_part(alt_coords, fs.nondeg_alt);
  // Mixed forms (neither pure symmetric nor pure alternating) can be
  // degenerate too; scan the full space for the degenerate span.
  if (fs.sym_dim + fs.alt_dim < h || (fs.sym_dim > 0 && fs.alt_dim > 0)) {
    std::vector<std::vector<felt>> full;
    for (int t = 0; t < h; ++t) {
      std::vector<felt> e(h, 0);
      e[t] = 1;
      full.push_back(std::move(e));
    }
    bool dummy = false;
    scan_part(full, dummy);
  }
  fs.degenerate_dim = degen.rank();

  if (fs.nondeg_sym && fs.nondeg_alt)
    fs.type = FormType::both;
  else if (fs.nondeg_sym)
    fs.type = FormType::symmetric;
  else if (fs.nondeg_alt)
    fs.type = FormType::alternating;
  else
    fs.type = FormType::none;
  return fs;
}

bool is_projective(const Rep& v, const std::vector<Rep>& simples,
                   const CohomOptions& opt) {
  for (size_t i = 0; i < simples.size(); ++i) {
    if (!is_irreducible(simples[i]).irreducible)
      throw RepError("is_projective: simple #" + std::to_string(i) +
                     " is reducible");
    for (size_t j = 0; j < i; ++j)
      if (isomorphic(simples[i], simples[j]))
        throw RepError("is_projective: simples #" + std::to_string(j) + " and #" +
                       std::to_string(i) + " are isomorphic");
  }
  for (const Rep& s : simples)
    if (ext1(v, s, opt).h1_dim != 0) return false;
  return true;
}

namespace {

std::string factor_label(const Rep& f,
                         const std::vector<std::pair<std::string, Rep>>& env,
                         std::uint64_t seed) {
  for (const auto& [name, m] : env)
    if (m.dim == f.dim && isomorphic(f, m, seed)) return name;
  return "dim" + std::to_string(f.dim);
}

std::vector<std::string> layer_labels(
    const FactorList& layer, const std::vector<std::pair<std::string, Rep>>& env,
    std::uint64_t seed) {
  std::vector<std::string> out;
  for (const auto& f : layer) {
    std::string l = factor_label(f.rep, env, seed);
    for (int i = 0; i < f.mult; ++i) out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

LoewyReport loewy_selfdual(const Rep& v,
                           const std::vector<std::pair<std::string, Rep>>& env,
                           std::uint64_t seed) {
  LoewyReport rep;
  auto soc = socle_series(v, seed);
  for (const auto& layer : soc)
    rep.socle_layers.push_back(layer_labels(layer, env, seed));
  // Radical layers: heads descending = socle series of the dual, dualized.
  auto dual_soc = socle_series(rep_dual(v), seed);
  for (const auto& layer : dual_soc) {
    FactorList dualized;
    for (const auto& f : layer) dualized.push_back({rep_dual(f.rep), f.mult});
    rep.radical_layers.push_back(layer_labels(dualized, env, seed));
  }
  rep.uniserial = true;
  for (const auto& layer : soc) {
    int count = 0;
    for (const auto& f : layer) count += f.mult;
    if (count != 1) rep.uniserial = false;
  }
  rep.self_dual = isomorphic(v, rep_dual(v), seed);
  return rep;
}

}  // namespace repcheck
