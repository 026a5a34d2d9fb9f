#include "repcheck/catalog.hpp"

#include <algorithm>

namespace repcheck {

namespace {

long long param_ll(const std::map<std::string, std::string>& params,
                   const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw GroupError("catalog: missing parameter '" + key + "'");
  try {
    return std::stoll(it->second);
  } catch (const std::exception&) {
    throw GroupError("catalog: parameter '" + key + "' is not an integer");
  }
}

std::string param_str(const std::map<std::string, std::string>& params,
                      const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw GroupError("catalog: missing parameter '" + key + "'");
  return it->second;
}

Mat blkdiag(const Mat& a, const Mat& b) {
  Mat m(a.F, a.rows + b.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) m.at(a.rows + i, a.cols + j) = b.at(i, j);
  return m;
}

Mat block_swap(const FieldPtr& F, int half) {
  Mat m(F, 2 * half, 2 * half);
  for (int i = 0; i < half; ++i) {
    m.at(i, half + i) = 1;
    m.at(half + i, i) = 1;
  }
  return m;
}

Mat mat_frob(const Mat& x, int i) {
  Mat m = x;
  for (auto& e : m.a) e = x.F->frobenius(e, i);
  return m;
}

Mat perm_mat(const FieldPtr& F, const std::vector<int>& image) {
  int n = int(image.size());
  Mat m(F, n, n);
  for (int j = 0; j < n; ++j) m.at(image[j], j) = 1;  // e_j -> e_{image[j]}
  return m;
}

// Transvections [[1, t^i], [0, 1]], i = 0..r-1, plus the Weyl element
// [[0, 1], [-1, 0]]: the upper root group and its opposite generate SL2(q).
std::vector<Mat> sl2_gens(const FieldPtr& F) {
  std::vector<Mat> gens;
  felt t = F->k() >= 2 ? felt(F->p()) : felt(1);
  felt ti = 1;
  for (int i = 0; i < F->k(); ++i) {
    Mat u = Mat::identity(F, 2);
    u.at(0, 1) = ti;
    gens.push_back(u);
    ti = F->mul(ti, t);
  }
  Mat w(F, 2, 2);
  w.at(0, 1) = 1;
  w.at(1, 0) = F->neg(1);
  gens.push_back(w);
  return gens;
}

// Steinberg product L(a) = tensor of twisted restricted symmetric powers.
Rep steinberg(const Rep& natural, long long a, int p, int r) {
  std::vector<Rep> factors;
  long long rest = a;
  for (int i = 0; i < r; ++i) {
    int digit = int(rest % p);
    rest /= p;
    if (digit > 0) factors.push_back(rep_twist(rep_sym(digit, natural), i));
  }
  Rep out = factors.empty() ? rep_trivial(natural.G, 1) : factors[0];
  for (size_t i = 1; i < factors.size(); ++i) out = rep_tensor(out, factors[i]);
  out.label = "L" + std::to_string(a);
  return out;
}

CatalogInstance build_sl2(long long q, long long cap) {
  static const std::map<long long, std::pair<int, int>> table = {
      {2, {2, 1}}, {3, {3, 1}}, {4, {2, 2}}, {5, {5, 1}},
      {7, {7, 1}}, {8, {2, 3}}, {9, {3, 2}}};
  auto it = table.find(q);
  if (it == table.end())
    throw GroupError("catalog: sl2 q must be one of 2,3,4,5,7,8,9");
  auto [p, r] = it->second;
  auto F = FieldCtx::make(p, r);
  auto G = enumerate_group(sl2_gens(F), cap);
  CatalogInstance inst;
  inst.name = "sl2(" + std::to_string(q) + ")";
  inst.G = G;
  Rep nat = rep_natural(G);
  inst.env.emplace_back("natural", nat);
  for (long long a = 0; a < q; ++a) {
    Rep l = steinberg(nat, a, p, r);
    inst.simples.push_back(l);
    inst.env.emplace_back("L" + std::to_string(a), l);
  }
  Rep st = inst.simples.back();
  st.label = "St";
  inst.env.emplace_back("St", st);
  return inst;
}

CatalogInstance build_psl2(long long p, long long cap) {
  if (!is_prime(int(p)) || p == 2 || p > 11)
    throw GroupError("catalog: psl2 p must be an odd prime <= 11");
  auto F = FieldCtx::make(int(p), 1);
  auto sgens = sl2_gens(F);
  auto S = enumerate_group(sgens, cap);
  Rep snat = rep_natural(S);
  // Faithful image on Sym^2: scalars act trivially, the image is PSL2(p).
  Rep sym2 = rep_sym(2, snat);
  auto G = enumerate_group(sym2.images, cap);
  CatalogInstance inst;
  inst.name = "psl2(" + std::to_string(p) + ")";
  inst.G = G;
  Rep nat = rep_natural(G);
  inst.env.emplace_back("natural", nat);
  for (long long a = 0; a < p; a += 2) {
    // even-weight sl2 modules descend: re-check closure over the image group
    Rep l = rep_from_gens(G, steinberg(snat, a, int(p), 1).images,
                          "L" + std::to_string(a));
    inst.simples.push_back(l);
    inst.env.emplace_back("L" + std::to_string(a), l);
  }
  return inst;
}

CatalogInstance build_omega4plus5(long long cap) {
  auto F = FieldCtx::make(5, 1);
  auto sgens = sl2_gens(F);
  Mat id2 = Mat::identity(F, 2);
  std::vector<Mat> gens;
  for (const Mat& g : sgens) gens.push_back(mat_kron(g, id2));
  for (const Mat& g : sgens) gens.push_back(mat_kron(id2, g));
  auto G = enumerate_group(gens, cap);
  CatalogInstance inst;
  inst.name = "omega4plus5";
  inst.G = G;
  Rep nat = rep_natural(G);
  inst.env.emplace_back("natural", nat);
  Rep v4 = nat;
  v4.label = "V4";
  inst.env.emplace_back("V4", v4);
  return inst;
}

CatalogInstance build_sl2_9_semidirect(long long cap) {
  auto F = FieldCtx::make(3, 2);
  auto sgens = sl2_gens(F);
  std::vector<Mat> gens;
  for (const Mat& g : sgens) gens.push_back(blkdiag(g, mat_frob(g, 1)));
  gens.push_back(block_swap(F, 2));
  auto G = enumerate_group(gens, cap);
  CatalogInstance inst;
  inst.name = "sl2_9_semidirect";
  inst.G = G;
  Rep nat = rep_natural(G);
  inst.env.emplace_back("natural", nat);
  Rep v4 = nat;
  v4.label = "V4";
  inst.env.emplace_back("V4", v4);
  return inst;
}

CatalogInstance build_q8_c3_wr_c2(long long cap) {
  auto F = FieldCtx::make(3, 1);
  auto sgens = sl2_gens(F);  // SL2(3) = Q8 : C3
  Mat id2 = Mat::identity(F, 2);
  std::vector<Mat> gens;
  for (const Mat& g : sgens) gens.push_back(blkdiag(g, id2));
  gens.push_back(block_swap(F, 2));
  auto G = enumerate_group(gens, cap);
  CatalogInstance inst;
  inst.name = "q8_c3_wr_c2";
  inst.G = G;
  Rep nat = rep_natural(G);
  inst.env.emplace_back("natural", nat);
  Rep v4 = nat;
  v4.label = "V4";
  inst.env.emplace_back("V4", v4);

  // G+ (= the base product H x H here): exposed for the induction route.
  SubgroupEntry sub;
  sub.ref = gplus(*G);
  std::vector<Mat> hmats;
  for (int idx : sub.ref.gens) hmats.push_back(G->elems[idx]);
  sub.grp = enumerate_group(hmats, cap);
  // W1: the first wreath slot as a module of the base product
  std::vector<Mat> w1imgs;
  for (const Mat& m : sub.grp->gens) {
    Mat b(F, 2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) b.at(i, j) = m.at(i, j);
    w1imgs.push_back(std::move(b));
  }
  sub.reps.emplace_back("W1", rep_from_gens(sub.grp, std::move(w1imgs), "W1"));
  inst.subgroups.emplace("gplus", std::move(sub));
  return inst;
}

CatalogInstance build_monomial(const std::map<std::string, std::string>& params,
                               long long cap) {
  long long p = param_ll(params, "p");
  long long m = param_ll(params, "m");
  std::string top = param_str(params, "top");
  if (!is_prime(int(p)) || p > 7)
    throw GroupError("catalog: monomial p must be a prime <= 7");
  if (m < 1 || (p - 1) % m != 0)
    throw GroupError("catalog: monomial m must divide p-1");
  auto F = FieldCtx::make(int(p), 1);
  // element of multiplicative order m: g^((p-1)/m) for a primitive root g
  felt root = 0;
  for (felt g = 2; g < p && !root; ++g) {
    bool prim = true;
    for (long long d = 1; d < p - 1 && prim; ++d)
      if (F->pow(g, d) == 1) prim = false;
    if (prim) root = g;
  }
  felt zeta = F->pow(root, (p - 1) / m);
  int n = int(p);
  std::vector<Mat> gens;
  Mat d0 = Mat::identity(F, n);
  d0.at(0, 0) = zeta;
  gens.push_back(d0);
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  gens.push_back(perm_mat(F, cyc));
  if (top == "F20" || top == "frobenius") {
    // multiplier i -> root * i fixing 0: together with the cycle, the
    // Frobenius group of order p(p-1)
    std::vector<int> mult(n);
    for (int i = 0; i < n; ++i) mult[i] = int((root * i) % p);
    gens.push_back(perm_mat(F, mult));
  } else if (!(top == "C5" || top == "cyclic")) {
    throw GroupError("catalog: monomial top must be C5 or F20");
  }
  auto G = enumerate_group(gens, cap);
  CatalogInstance inst;
  inst.name = "monomial(p=" + std::to_string(p) + ",m=" + std::to_string(m) +
              ",top=" + top + ")";
  inst.G = G;
  inst.env.emplace_back("natural", rep_natural(G));
  return inst;
}

CatalogInstance build_sln(long long n, long long q, long long cap) {
  if (n != 3)
    throw GroupError("catalog: sln_natural supports n = 3 (odd cycle has det 1)");
  if (!is_prime(int(q))) throw GroupError("catalog: sln_natural q must be prime");
  auto F = FieldCtx::make(int(q), 1);
  std::vector<Mat> gens;
  Mat e = Mat::identity(F, int(n));
  e.at(0, 1) = 1;
  gens.push_back(e);
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = int((i + 1) % n);
  gens.push_back(perm_mat(F, cyc));
  auto G = enumerate_group(gens, cap);
  CatalogInstance inst;
  inst.name = "sl" + std::to_string(n) + "(" + std::to_string(q) + ")";
  inst.G = G;
  inst.env.emplace_back("natural", rep_natural(G));
  return inst;
}

}  // namespace

const Rep& CatalogInstance::get(const std::string& n) const {
  for (const auto& [nm, r] : env)
    if (nm == n) return r;
  throw GroupError("catalog: no module named '" + n + "' in " + name);
}

CatalogInstance make_group(const std::string& name,
                           const std::map<std::string, std::string>& params,
                           long long cap) {
  if (name == "sl2") return build_sl2(param_ll(params, "q"), cap);
  if (name == "psl2") return build_psl2(param_ll(params, "p"), cap);
  if (name == "omega4plus5") return build_omega4plus5(cap);
  if (name == "sl2_9_semidirect") return build_sl2_9_semidirect(cap);
  if (name == "q8_c3_wr_c2") return build_q8_c3_wr_c2(cap);
  if (name == "monomial") return build_monomial(params, cap);
  if (name == "sln_natural")
    return build_sln(param_ll(params, "n"), param_ll(params, "q"), cap);
  throw GroupError("catalog: unknown group '" + name + "'");
}

namespace {

// First nonzero projective combination of the cocycle basis whose extension
// passes `good`; deterministic scan order.
template <class Pred>
std::vector<felt> pick_cocycle(const Rep& v, const Rep& w, const CocycleSpace& cs,
                               Pred good) {
  const auto& F = v.field();
  int h = cs.h1_dim;
  if (h == 0) throw RepError("thm19: expected a nonsplit extension, Ext^1 = 0");
  std::vector<felt> tup(h, 0);
  while (true) {
    int pos = 0;
    while (pos < h) {
      tup[pos] = felt(tup[pos] + 1 == F->q() ? 0 : tup[pos] + 1);
      if (tup[pos] != 0) break;
      ++pos;
    }
    if (pos == h) break;
    int lead = h - 1;
    while (lead >= 0 && tup[lead] == 0) --lead;
    if (tup[lead] != 1) continue;
    std::vector<felt> c(cs.basis[0].size(), 0);
    for (int t = 0; t < h; ++t)
      if (tup[t])
        for (size_t i = 0; i < c.size(); ++i)
          c[i] = F->add(c[i], F->mul(tup[t], cs.basis[t][i]));
    if (good(build_extension(v, w, c))) return c;
  }
  throw RepError("thm19: no cocycle yields the required module shape");
}

Thm19Module make_uu(const CatalogInstance& inst, const std::string& gname, int p,
                    const Rep& u, const CohomOptions& opt) {
  Thm19Module out;
  out.group_name = gname;
  out.p = p;
  std::vector<std::pair<std::string, Rep>> env = {
      {"k", rep_trivial(u.G, 1)}, {"U", u}};
  auto cs = ext1(u, u, opt);
  auto good = [&](const Rep& e) {
    if (is_indecomposable(e).verdict != IndecVerdict::indecomposable) return false;
    return loewy_selfdual(e, env).uniserial;
  };
  auto c = pick_cocycle(u, u, cs, good);
  out.module = build_extension(u, u, c);
  out.zero_control =
      build_extension(u, u, std::vector<felt>(c.size(), 0));
  out.loewy = loewy_selfdual(out.module, env);
  out.forms = invariant_forms(out.module);
  return out;
}

Thm19Module make_pim1(const CatalogInstance& psl, int p, const Rep& u,
                      const CohomOptions& opt) {
  Thm19Module out;
  out.group_name = "psl2";
  out.p = p;
  out.is_pim = true;
  Rep k = rep_trivial(u.G, 1);
  std::vector<std::pair<std::string, Rep>> env = {{"k", k}, {"U", u}};
  // socle first: 0 -> k -> E1 -> U -> 0, then a trivial head on top
  auto cs1 = ext1(k, u, opt);
  auto c1 = pick_cocycle(k, u, cs1, [](const Rep&) { return true; });
  Rep e1 = build_extension(k, u, c1);
  auto cs2 = ext1(e1, k, opt);
  auto good = [&](const Rep& e) {
    if (is_indecomposable(e).verdict != IndecVerdict::indecomposable) return false;
    auto lw = loewy_selfdual(e, env);
    return lw.uniserial && lw.socle_layers.size() == 3;
  };
  auto c2 = pick_cocycle(e1, k, cs2, good);
  out.module = build_extension(e1, k, c2);
  out.module.label = "PIM1";
  out.zero_control = build_extension(e1, k, std::vector<felt>(c2.size(), 0));
  out.loewy = loewy_selfdual(out.module, env);
  out.loewy.projective = is_projective(out.module, psl.simples, opt);
  out.forms = invariant_forms(out.module);
  return out;
}

}  // namespace

std::vector<Thm19Module> thm19_instances(int p, const CohomOptions& opt) {
  if (p != 5 && p != 7) throw GroupError("thm19_instances: p must be 5 or 7");
  int eps = (p % 4 == 1) ? 1 : -1;
  auto sl = make_group("sl2", {{"q", std::to_string(p)}});
  auto psl = make_group("psl2", {{"p", std::to_string(p)}});
  std::vector<Thm19Module> out;
  // U dims: (p - eps)/2 over SL2(p), (p + eps)/2 over PSL2(p)
  out.push_back(make_uu(sl, "sl2", p, sl.get("L" + std::to_string((p - eps) / 2 - 1)), opt));
  out.push_back(make_uu(psl, "psl2", p, psl.get("L" + std::to_string((p + eps) / 2 - 1)), opt));
  if (p == 5) out.push_back(make_pim1(psl, p, psl.get("L" + std::to_string(p - 3)), opt));
  return out;
}

}  // namespace repcheck
