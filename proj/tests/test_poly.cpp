#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "repcheck/poly.hpp"

using namespace repcheck;

static Poly random_poly(const FieldPtr& F, int deg, std::mt19937_64& rng) {
  std::vector<felt> c(deg + 1);
  for (auto& x : c) x = felt(rng() % F->q());
  return Poly(F, std::move(c));
}

TEST_CASE("divmod identity") {
  auto F = FieldCtx::make(7, 1);
  std::mt19937_64 rng(7);
  for (int it = 0; it < 100; ++it) {
    Poly a = random_poly(F, int(rng() % 12), rng);
    Poly b = random_poly(F, int(rng() % 6), rng);
    if (b.is_zero()) continue;
    auto [q, r] = poly_divmod(a, b);
    CHECK(poly_add(poly_mul(q, b), r) == a);
    CHECK(r.deg() < b.deg());
  }
}

TEST_CASE("gcd divides both and is monic") {
  auto F = FieldCtx::make(3, 2);
  std::mt19937_64 rng(11);
  for (int it = 0; it < 50; ++it) {
    Poly a = random_poly(F, 6, rng), b = random_poly(F, 4, rng);
    if (a.is_zero() || b.is_zero()) continue;
    Poly g = poly_gcd(a, b);
    CHECK(g.lead() == 1);
    CHECK(poly_mod(a, g).is_zero());
    CHECK(poly_mod(b, g).is_zero());
  }
}

TEST_CASE("factorization re-multiplies, 200 random cases") {
  std::mt19937_64 rng(42);
  std::vector<FieldPtr> fields = {FieldCtx::make(2, 1), FieldCtx::make(3, 1),
                                  FieldCtx::make(3, 2), FieldCtx::make(5, 2),
                                  FieldCtx::make(7, 1)};
  int done = 0;
  while (done < 200) {
    auto F = fields[rng() % fields.size()];
    Poly f = random_poly(F, 2 + int(rng() % 10), rng);
    if (f.deg() < 1) continue;
    ++done;
    auto fac = poly_factor(f);
    Poly prod = Poly(F, {f.lead()});
    for (const auto& [g, e] : fac) {
      CHECK(g.lead() == 1);
      CHECK(poly_is_irreducible(g));
      for (int i = 0; i < e; ++i) prod = poly_mul(prod, g);
    }
    CHECK(prod == f);
    // deterministic ordering by (degree, coefficients high to low)
    for (size_t i = 1; i < fac.size(); ++i) {
      const auto& a = fac[i - 1].first;
      const auto& b = fac[i].first;
      std::vector<felt> ar(a.c.rbegin(), a.c.rend());
      std::vector<felt> br(b.c.rbegin(), b.c.rend());
      CHECK((a.deg() < b.deg() || (a.deg() == b.deg() && ar <= br)));
    }
  }
}

TEST_CASE("x^q - x splits into all monic linear factors") {
  auto F = FieldCtx::make(3, 2);
  int q = F->q();
  std::vector<felt> c(q + 1, 0);
  c[1] = F->neg(1);
  c[q] = 1;
  auto fac = poly_factor(Poly(F, c));
  CHECK(fac.size() == size_t(q));
  for (const auto& [g, e] : fac) {
    CHECK(g.deg() == 1);
    CHECK(e == 1);
  }
}

TEST_CASE("squarefree detection") {
  auto F = FieldCtx::make(3, 1);
  Poly x = Poly::x(F);
  Poly f = poly_mul(x, x);  // x^2
  CHECK_FALSE(poly_squarefree(f));
  Poly g(F, {1, 1});  // x + 1
  CHECK(poly_squarefree(poly_mul(x, g)));
  // f' = 0 case: x^3 + 1 = (x+1)^3 over GF(3)
  Poly h(F, {1, 0, 0, 1});
  CHECK_FALSE(poly_squarefree(h));
  auto fac = poly_factor(h);
  REQUIRE(fac.size() == 1);
  CHECK(fac[0].first == g);
  CHECK(fac[0].second == 3);
}

TEST_CASE("known irreducibles") {
  auto F2 = FieldCtx::make(2, 1);
  CHECK(poly_is_irreducible(Poly(F2, {1, 1, 1})));        // x^2+x+1
  CHECK_FALSE(poly_is_irreducible(Poly(F2, {1, 0, 1})));  // (x+1)^2
  auto F5 = FieldCtx::make(5, 1);
  CHECK(poly_is_irreducible(Poly(F5, {2, 0, 1})));  // x^2+2, -2 not a square
  CHECK_FALSE(poly_is_irreducible(Poly(F5, {4, 0, 1})));  // x^2-1
}

TEST_CASE("derivative rules") {
  auto F = FieldCtx::make(5, 1);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 30; ++it) {
    Poly a = random_poly(F, 5, rng), b = random_poly(F, 5, rng);
    Poly lhs = poly_derivative(poly_mul(a, b));
    Poly rhs = poly_add(poly_mul(poly_derivative(a), b),
                        poly_mul(a, poly_derivative(b)));
    CHECK(lhs == rhs);
  }
  // degree-p powers vanish
  Poly xp(F, {0, 0, 0, 0, 0, 1});
  CHECK(poly_derivative(xp).is_zero());
}

TEST_CASE("powmod") {
  auto F = FieldCtx::make(3, 1);
  Poly mod(F, {1, 0, 1, 1});  // x^3 + x^2 + 1
  Poly x = Poly::x(F);
  Poly acc = Poly::one(F);
  for (int e = 0; e <= 30; ++e) {
    CHECK(poly_powmod(x, e, mod) == acc);
    acc = poly_mod(poly_mul(acc, x), mod);
  }
}
