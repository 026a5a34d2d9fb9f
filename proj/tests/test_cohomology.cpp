#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "repcheck/catalog.hpp"

using namespace repcheck;

// Independent oracle: for a cyclic p-group acting by a single matrix g,
// H^0 = ker(g - 1), H^1 = ker(norm) / im(g - 1) with norm = 1 + g + ... + g^(n-1).
static int cyclic_h1_oracle(const Mat& g, long long n) {
  auto F = g.F;
  int m = g.rows;
  Mat norm(F, m, m), pw = Mat::identity(F, m);
  for (long long i = 0; i < n; ++i) {
    norm = mat_add(norm, pw);
    pw = mat_mul(pw, g);
  }
  Mat gm1 = mat_sub(g, Mat::identity(F, m));
  int ker_norm = m - mat_rank(norm);
  int im_gm1 = mat_rank(gm1);
  return ker_norm - im_gm1;
}

TEST_CASE("H^1 of cyclic p-groups matches the norm-kernel oracle") {
  for (int p : {2, 3, 5, 7}) {
    auto F = FieldCtx::make(p, 1);
    // regular-ish modules: Jordan blocks of sizes 1..p
    for (int size = 1; size <= p; ++size) {
      Mat j = Mat::identity(F, size);
      for (int i = 0; i + 1 < size; ++i) j.at(i, i + 1) = 1;
      auto G = enumerate_group({j});
      REQUIRE(G->size() == (size == 1 ? 1 : p));
      Rep v{G, size, {j}, "jordan"};
      auto cs = h1(v);
      CHECK(cs.h1_dim == cyclic_h1_oracle(j, G->size()));
      CHECK(cs.h0_dim == size - mat_rank(mat_sub(j, Mat::identity(F, size))));
      CHECK(cs.b1_dim == cs.m - cs.h0_dim);
    }
  }
}

TEST_CASE("H^0 and H^1 of the trivial module") {
  auto inst = make_group("sl2", {{"q", "5"}});
  Rep triv = rep_trivial(inst.G, 3);
  CHECK(h0(triv) == 3);
  auto cs = h1(triv);
  CHECK(cs.h1_dim == 0);  // perfect group: no homs to the additive group
  CHECK(cs.b1_dim == 0);
  // C5 top monomial group has a nontrivial abelianization of order 5
  auto mono = make_group("monomial", {{"p", "5"}, {"m", "4"}, {"top", "C5"}});
  CHECK(h1(rep_trivial(mono.G, 1)).h1_dim == 1);
}

TEST_CASE("cocycle basis verifies on all non-tree edges") {
  auto inst = make_group("sl2", {{"q", "5"}});
  Rep adq = rep_adq(inst.get("L1"));
  auto cs = h1(adq);
  REQUIRE(cs.h1_dim == 1);
  REQUIRE(cs.basis.size() == 1);
  CHECK(verify_cocycle(adq, cs.basis[0]));
  CHECK(cs.z1_dim == cs.b1_dim + 1);
  // a corrupted cocycle fails verification
  auto badc = cs.basis[0];
  badc[0] = adq.field()->add(badc[0], 1);
  CHECK_FALSE(verify_cocycle(adq, badc));
  // value_on slices line up
  CHECK(cs.value_on(cs.basis[0], 0).size() == size_t(adq.dim));
}

TEST_CASE("ext1 equals h1 of the hom module and known values") {
  auto inst = make_group("sl2", {{"q", "5"}});
  const Rep& l1 = inst.get("L1");
  const Rep& l3 = inst.get("L3");
  CHECK(ext1(l1, l1).h1_dim == 1);
  CHECK(ext1(l3, l3).h1_dim == 0);
  CHECK(ext1(inst.get("L2"), inst.get("L2")).h1_dim == 1);
  Rep hm = hom_module(l1, l3);
  CHECK(hm.dim == 8);
  CHECK(ext1(l1, l3).h1_dim == h1(hm).h1_dim);
  // trivial module: ext1(k, k) = Hom(G, k) = 0 for perfect G
  Rep k = rep_trivial(inst.G, 1);
  CHECK(ext1(k, k).h1_dim == 0);
}

TEST_CASE("memory cap raises ResourceError") {
  auto inst = make_group("sl2", {{"q", "9"}});
  CohomOptions opt;
  opt.mem_cap_bytes = 1024;
  CHECK_THROWS_AS(h1(rep_adq(inst.get("natural")), opt), ResourceError);
}

TEST_CASE("h0_basis vectors are fixed points") {
  auto inst = make_group("sl2", {{"q", "4"}});
  Rep ad = rep_ad(inst.get("natural"));
  auto fixed = h0_basis(ad);
  CHECK_FALSE(fixed.empty());
  for (const auto& v : fixed)
    for (const Mat& img : ad.images) CHECK(mat_apply(img, v) == v);
}
