// Acceptance suite: one line per criterion, exact integer comparisons only.

#include <iostream>
#include <sstream>
#include <vector>

#include "repcheck/adequacy.hpp"
#include "repcheck/report.hpp"

using namespace repcheck;

namespace {

int failures = 0;

void verdict(int idx, const std::string& what, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << idx << ". " << what;
  if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

struct Tally {
  bool ok = true;
  std::ostringstream detail;
  void expect(bool cond, const std::string& msg) {
    if (!cond) {
      ok = false;
      detail << (detail.str().empty() ? "" : "; ") << msg;
    }
  }
  void expect_eq(long long got, long long want, const std::string& msg) {
    expect(got == want, msg + ": got " + std::to_string(got) + ", want " +
                            std::to_string(want));
  }
};

void c1_sl2_5() {
  Tally t;
  auto inst = make_group("sl2", {{"q", "5"}});
  for (int a = 1; a <= 4; ++a) {
    const Rep& l = inst.simples[a];
    t.expect_eq(weak_span(l), l.dim * l.dim, "weak_span L" + std::to_string(a));
  }
  t.expect_eq(ext1(inst.get("L1"), inst.get("L1")).h1_dim, 1, "ext1(L1,L1)");
  t.expect_eq(ext1(inst.get("L2"), inst.get("L2")).h1_dim, 1, "ext1(L2,L2)");
  t.expect_eq(ext1(inst.get("L3"), inst.get("L3")).h1_dim, 0, "ext1(L3,L3)");
  t.expect(adequacy_report(inst.get("L3")).adequate, "L3 adequate");
  const Rep& st = inst.get("St");
  t.expect_eq(ext1(st, st).h1_dim, 0, "ext1(St,St)");
  t.expect(is_projective(st, inst.simples), "St projective");
  verdict(1, "SL2(5): weak spans, ext1 values, L3 adequate, St projective",
          t.ok, t.detail.str());
}

void c2_sl2_4() {
  Tally t;
  auto inst = make_group("sl2", {{"q", "4"}});
  auto r4 = adequacy_report(inst.get("L3"));  // L(1) (x) L(1)^(1), dim 4
  t.expect_eq(r4.dim, 4, "dim L3");
  t.expect_eq(r4.h1_adq_dim, 1, "h1_adq dim-4");
  t.expect(!r4.adequate, "dim-4 not adequate");
  auto r2 = adequacy_report(inst.get("L1"));
  t.expect(r2.adequate, "dim-2 adequate");
  verdict(2, "SL2(4): dim-4 module fails (h1_adq=1), dim-2 adequate", t.ok,
          t.detail.str());
}

void c3_sl2_9() {
  Tally t;
  auto inst = make_group("sl2", {{"q", "9"}});
  for (int a = 1; a < 9; ++a) {
    auto r = adequacy_report(inst.simples[a]);
    std::string name = "L" + std::to_string(a);
    t.expect(r.weak_ok, name + " weak_ok");
    bool exceptional = (r.dim == 3 || r.dim == 6 || r.dim == 9);
    if (exceptional) {
      t.expect_eq(r.h1_adq_dim, 1, name + " h1_adq");
      t.expect(!r.adequate, name + " not adequate");
    } else {
      t.expect(r.adequate, name + " adequate");
    }
  }
  verdict(3, "SL2(9): dims 3,6,9 fail with h1_adq=1, dims 2,4 adequate", t.ok,
          t.detail.str());
}

void c4_omega() {
  Tally t;
  auto inst = make_group("omega4plus5");
  const Rep& v = inst.get("V4");
  t.expect_eq(ext1(v, v).h1_dim, 2, "ext1(V,V)");
  t.expect(isomorphic(v, rep_dual(v)), "V self-dual");
  verdict(4, "Omega4+(5): ext1(V,V)=2, V self-dual", t.ok, t.detail.str());
}

void c5_semidirect() {
  Tally t;
  auto inst = make_group("sl2_9_semidirect");
  const Rep& v = inst.get("V4");
  t.expect_eq(ext1(v, v).h1_dim, 2, "ext1(V,V)");
  verdict(5, "SL2(9):2 on W1+W2: ext1(V,V)=2", t.ok, t.detail.str());
}

void c6_wreath() {
  Tally t;
  auto inst = make_group("q8_c3_wr_c2");
  const Rep& v = inst.get("V4");
  t.expect_eq(ext1(v, v).h1_dim, 2, "ext1(V,V)");
  verdict(6, "SL2(3) wr C2 induced module: ext1(V,V)=2", t.ok, t.detail.str());
}

void c7_thm19() {
  Tally t;
  auto check = [&](const Thm19Module& m, int dim, FormType type,
                   const std::string& name) {
    t.expect_eq(m.module.dim, dim, name + " dim");
    t.expect(is_indecomposable(m.module).verdict == IndecVerdict::indecomposable,
             name + " indecomposable");
    t.expect(m.loewy.self_dual, name + " self-dual");
    t.expect(m.loewy.uniserial, name + " uniserial");
    t.expect(m.forms.type == type, name + " form type");
    t.expect(is_indecomposable(m.zero_control).verdict ==
                 IndecVerdict::decomposable,
             name + " zero-cocycle control decomposable");
  };
  auto five = thm19_instances(5);
  check(five[0], 4, FormType::alternating, "SL2(5) (U|U)");
  check(five[1], 6, FormType::symmetric, "PSL2(5) (U|U)");
  check(five[2], 5, FormType::symmetric, "PSL2(5) (k|U|k)");
  t.expect(five[2].loewy.projective.value_or(false), "(k|U|k) projective");
  std::vector<std::vector<std::string>> pim_layers = {{"k"}, {"U"}, {"k"}};
  t.expect(five[2].loewy.socle_layers == pim_layers, "(k|U|k) layers");
  std::vector<std::vector<std::string>> uu_layers = {{"U"}, {"U"}};
  t.expect(five[0].loewy.socle_layers == uu_layers, "SL2(5) layers");
  auto seven = thm19_instances(7);
  check(seven[0], 8, FormType::symmetric, "SL2(7) (U|U)");
  check(seven[1], 6, FormType::alternating, "PSL2(7) (U|U)");
  verdict(7, "Thm 1.9 modules at p=5,7: shapes and form types", t.ok,
          t.detail.str());
}

void c8_monomial() {
  Tally t;
  auto c5 = make_group("monomial", {{"p", "5"}, {"m", "4"}, {"top", "C5"}});
  int span = weak_span(c5.get("natural"));
  t.expect(span < 25, "C5 top span deficit");
  t.expect_eq(span, 5, "C5 top span (frozen regression value)");
  auto rep5 = adequacy_report(c5.get("natural"));
  t.expect(!rep5.adequate, "C5 top not adequate");
  auto f20 = make_group("monomial", {{"p", "5"}, {"m", "4"}, {"top", "F20"}});
  auto rep20 = adequacy_report(f20.get("natural"));
  t.expect_eq(rep20.span_dim, 25, "F20 top span");
  t.expect(rep20.adequate, "F20 top adequate");
  verdict(8, "monomial degree 5: C5 top fails weak span, F20 top adequate",
          t.ok, t.detail.str());
}

void c9_sl3() {
  Tally t;
  auto inst = make_group("sln_natural", {{"n", "3"}, {"q", "2"}});
  const Rep& v = inst.get("natural");
  t.expect(adequacy_report(v).adequate, "adequate");
  auto f = chop(rep_ad(v));
  t.expect_eq((long long)f.size(), 2, "chop(ad) class count");
  if (f.size() == 2) {
    t.expect_eq(f[0].rep.dim, 1, "trivial factor");
    t.expect_eq(f[0].mult, 1, "trivial mult");
    t.expect_eq(f[1].rep.dim, 8, "W8 factor");
    t.expect_eq(f[1].mult, 1, "W8 mult");
    t.expect(is_irreducible(f[1].rep).irreducible, "W8 irreducible");
  }
  verdict(9, "SL3(2) natural: adequate, chop(ad) = {k, W8}", t.ok,
          t.detail.str());
}

void c10_properties() {
  Tally t;
  // (a) duality symmetry across 20 ordered pairs of SL2(5) simples
  {
    auto inst = make_group("sl2", {{"q", "5"}});
    int pairs = 0;
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) {
        if (a == b) continue;
        const Rep& v = inst.simples[a];
        const Rep& w = inst.simples[b];
        int lhs = ext1(v, w).h1_dim;
        int rhs = ext1(rep_dual(w), rep_dual(v)).h1_dim;
        t.expect(lhs == rhs, "duality pair (" + std::to_string(a) + "," +
                                 std::to_string(b) + ")");
        ++pairs;
      }
    t.expect_eq(pairs, 20, "pair count");
  }
  // (b) field-extension invariance for 10 instances
  {
    struct Case {
      const char* group;
      std::map<std::string, std::string> params;
      const char* module;
    };
    std::vector<Case> cases = {
        {"sl2", {{"q", "2"}}, "L1"},      {"sl2", {{"q", "3"}}, "L1"},
        {"sl2", {{"q", "3"}}, "L2"},      {"sl2", {{"q", "4"}}, "L1"},
        {"sl2", {{"q", "5"}}, "L1"},      {"sl2", {{"q", "5"}}, "L2"},
        {"sl2", {{"q", "5"}}, "L3"},      {"sl2", {{"q", "7"}}, "L2"},
        {"psl2", {{"p", "5"}}, "L2"},
        {"sln_natural", {{"n", "3"}, {"q", "2"}}, "natural"}};
    int count = 0;
    for (const auto& c : cases) {
      auto inst = make_group(c.group, c.params);
      Rep v = rep_build(c.module, inst);
      Rep w = extend_scalars(v, 2);
      std::string name = std::string(c.group) + "/" + c.module;
      t.expect_eq(weak_span(w), weak_span(v), name + " span");
      t.expect_eq(h1(rep_adq(w)).h1_dim, h1(rep_adq(v)).h1_dim, name + " h1");
      t.expect_eq(ext1(w, w).h1_dim, ext1(v, v).h1_dim, name + " ext1");
      ++count;
    }
    t.expect_eq(count, 10, "instance count");
  }
  // (c) socle/radical duality on all Thm 1.9 modules
  for (int p : {5, 7})
    for (const auto& m : thm19_instances(p)) {
      size_t n = m.loewy.socle_layers.size();
      t.expect(m.loewy.radical_layers.size() == n, "layer count");
      for (size_t i = 0; i < n; ++i)
        t.expect(m.loewy.radical_layers[i] == m.loewy.socle_layers[n - 1 - i],
                 "socle/radical mirror");
    }
  // (d) 100% non-tree-edge re-verification of reported cocycles
  {
    auto omega = make_group("omega4plus5");
    Rep hm = hom_module(omega.get("V4"), omega.get("V4"));
    auto cs = h1(hm);
    t.expect_eq(cs.h1_dim, 2, "omega ext1");
    for (const auto& c : cs.basis)
      t.expect(verify_cocycle(hm, c), "cocycle re-verification");
  }
  // (e) determinism: byte-identical reports for identical configs
  {
    RunConfig cfg;
    cfg.group = "sl2";
    cfg.params = {{"q", "5"}};
    cfg.module_expr = "sym(1,natural)";
    cfg.checks = {"adequacy", "ext1", "structure", "forms"};
    auto r1 = cmd_run(cfg);
    auto r2 = cmd_run(cfg);
    t.expect(r1.exit_code == 0, "run ok");
    t.expect(r1.report_json == r2.report_json, "byte determinism");
  }
  verdict(10, "property suites: duality, base change, loewy mirror, "
              "re-verification, determinism", t.ok, t.detail.str());
}

}  // namespace

int main() {
  c1_sl2_5();
  c2_sl2_4();
  c3_sl2_9();
  c4_omega();
  c5_semidirect();
  c6_wreath();
  c7_thm19();
  c8_monomial();
  c9_sl3();
  c10_properties();
  if (failures) {
    std::cout << failures << " criterion(s) FAILED\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
