#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "repcheck/catalog.hpp"

using namespace repcheck;

TEST_CASE("irreducibility verdicts") {
  auto inst = make_group("sl2", {{"q", "5"}});
  const Rep& nat = inst.get("natural");
  CHECK(is_irreducible(nat).irreducible);
  CHECK(is_irreducible(rep_sym(4, nat)).irreducible);

  Rep red = rep_dsum(nat, nat);
  auto r = is_irreducible(red);
  CHECK_FALSE(r.irreducible);
  REQUIRE_FALSE(r.witness.empty());
  CHECK(r.witness.size() < 4);
  // witness spans an invariant subspace
  Rep sub = rep_sub(red, r.witness);
  CHECK(sub.dim == int(r.witness.size()));

  // uniserial module: reducible but indecomposable
  auto t19 = thm19_instances(5);
  auto rr = is_irreducible(t19[0].module);
  CHECK_FALSE(rr.irreducible);
  CHECK(rep_sub(t19[0].module, rr.witness).dim == 2);
}

TEST_CASE("chop: adjoint of SL2(5) natural is k + L2") {
  auto inst = make_group("sl2", {{"q", "5"}});
  auto f = chop(rep_ad(inst.get("natural")));
  REQUIRE(f.size() == 2);
  CHECK(f[0].rep.dim == 1);
  CHECK(f[0].mult == 1);
  CHECK(f[1].rep.dim == 3);
  CHECK(f[1].mult == 1);
  CHECK(isomorphic(f[1].rep, inst.get("L2")));
}

TEST_CASE("chop groups isomorphic factors and sums to the dimension") {
  auto inst = make_group("sl2", {{"q", "9"}});
  const Rep& nat = inst.get("natural");
  Rep big = rep_dsum(rep_dsum(nat, inst.get("L2")), rep_dsum(nat, rep_trivial(inst.G, 1)));
  auto f = chop(big);
  int total = 0;
  for (const auto& x : f) total += x.rep.dim * x.mult;
  CHECK(total == big.dim);
  // natural occurs twice, grouped
  bool found = false;
  for (const auto& x : f)
    if (x.rep.dim == 2 && x.mult == 2) found = true;
  CHECK(found);
  // chop commutes with duality on factor multisets
  auto fd = chop(rep_dual(big));
  REQUIRE(fd.size() == f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    CHECK(fd[i].rep.dim == f[i].rep.dim);
    CHECK(fd[i].mult == f[i].mult);
  }
}

TEST_CASE("hom spaces") {
  auto inst = make_group("sl2", {{"q", "5"}});
  const Rep& nat = inst.get("natural");
  // Schur: End of an absolutely irreducible module is 1-dimensional
  CHECK(hom_space(nat, nat).size() == 1);
  CHECK(hom_space(nat, inst.get("L2")).empty());
  Rep two = rep_dsum(nat, nat);
  CHECK(hom_space(nat, two).size() == 2);
  CHECK(hom_space(two, two).size() == 4);
  // hom elements are equivariant
  for (const Mat& x : hom_space(nat, two))
    for (size_t s = 0; s < nat.images.size(); ++s)
      CHECK(mat_mul(x, nat.images[s]) == mat_mul(two.images[s], x));
}

TEST_CASE("iso finds an equivalence after base change") {
  auto inst = make_group("sl2", {{"q", "7"}});
  const Rep& l2 = inst.get("L2");
  auto F = l2.field();
  Mat pbase = Mat::from_ints(F, {{1, 2, 0}, {0, 1, 5}, {3, 0, 1}});
  REQUIRE(mat_inverse(pbase));
  std::vector<Mat> conj;
  for (const Mat& m : l2.images)
    conj.push_back(mat_mul(mat_mul(pbase, m), *mat_inverse(pbase)));
  Rep other = rep_from_gens(inst.G, conj, "conj");
  auto phi = iso(l2, other);
  REQUIRE(phi.has_value());
  for (size_t s = 0; s < l2.images.size(); ++s)
    CHECK(mat_mul(*phi, l2.images[s]) == mat_mul(other.images[s], *phi));
  CHECK_FALSE(isomorphic(l2, inst.get("L4")));
}

TEST_CASE("socle series") {
  auto t19 = thm19_instances(5);
  // (U|U) over SL2(5): two socle layers, each one copy of U
  auto soc = socle_series(t19[0].module);
  REQUIRE(soc.size() == 2);
  for (const auto& layer : soc) {
    REQUIRE(layer.size() == 1);
    CHECK(layer[0].mult == 1);
    CHECK(layer[0].rep.dim == 2);
  }
  // PIM(1): k | U | k
  auto socp = socle_series(t19[2].module);
  REQUIRE(socp.size() == 3);
  CHECK(socp[0][0].rep.dim == 1);
  CHECK(socp[1][0].rep.dim == 3);
  CHECK(socp[2][0].rep.dim == 1);
  // semisimple module: single layer
  auto inst = make_group("sl2", {{"q", "5"}});
  auto socd = socle_series(rep_dsum(inst.get("L1"), inst.get("L3")));
  REQUIRE(socd.size() == 1);
  CHECK(socd[0].size() == 2);
}

TEST_CASE("indecomposability") {
  auto inst = make_group("sl2", {{"q", "5"}});
  const Rep& nat = inst.get("natural");
  CHECK(is_indecomposable(nat).verdict == IndecVerdict::indecomposable);
  auto dec = is_indecomposable(rep_dsum(nat, inst.get("L2")));
  CHECK(dec.verdict == IndecVerdict::decomposable);
  // the two parts are invariant complements
  REQUIRE(dec.part_a.size() + dec.part_b.size() == 5);
  Rep a = rep_sub(rep_dsum(nat, inst.get("L2")), dec.part_a);
  Rep b = rep_sub(rep_dsum(nat, inst.get("L2")), dec.part_b);
  CHECK(a.dim + b.dim == 5);
  // dsum of two copies of the same module
  auto dec2 = is_indecomposable(rep_dsum(nat, nat));
  CHECK(dec2.verdict == IndecVerdict::decomposable);
  // uniserial extension is indecomposable
  auto t19 = thm19_instances(5);
  CHECK(is_indecomposable(t19[0].module).verdict == IndecVerdict::indecomposable);
}

TEST_CASE("spin") {
  auto inst = make_group("sl2", {{"q", "5"}});
  Rep two = rep_dsum(inst.get("natural"), inst.get("natural"));
  auto basis = spin(two.images, {{1, 0, 1, 0}});
  CHECK(basis.size() == 2);
  auto full = spin(two.images, {{1, 0, 0, 0}});
  CHECK(full.size() == 2);  // first summand is invariant
  auto mixed = spin(two.images, {{1, 0, 1, 0}, {1, 0, 0, 0}});
  CHECK(mixed.size() == 4);
}
