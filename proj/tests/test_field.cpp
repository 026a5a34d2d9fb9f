#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "repcheck/field.hpp"

using namespace repcheck;

TEST_CASE("shipped modulus for GF(9) is t^2 + 2t + 2") {
  CHECK(shipped_modulus(3, 2) == std::vector<int>{2, 2, 1});
  auto F = FieldCtx::make(3, 2);
  // t * t = -2t - 2 = t + 1 -> index 1 + 1*3 = 4
  CHECK(F->mul(3, 3) == 4);
}

TEST_CASE("prime field arithmetic") {
  auto F = FieldCtx::make(7, 1);
  CHECK(F->add(5, 4) == 2);
  CHECK(F->mul(3, 5) == 1);
  CHECK(F->inv(3) == 5);
  CHECK(F->neg(2) == 5);
  CHECK(F->pow(3, 6) == 1);
  CHECK(F->from_int(-1) == 6);
  CHECK(F->from_int(700) == 0);
}

static void check_field_axioms(const FieldPtr& F) {
  int q = F->q();
  for (int a = 0; a < q; ++a) {
    CHECK(F->add(felt(a), 0) == a);
    CHECK(F->mul(felt(a), 1) == a);
    CHECK(F->add(felt(a), F->neg(felt(a))) == 0);
    if (a) CHECK(F->mul(felt(a), F->inv(felt(a))) == 1);
    for (int b = 0; b < q; ++b) {
      CHECK(F->add(felt(a), felt(b)) == F->add(felt(b), felt(a)));
      CHECK(F->mul(felt(a), felt(b)) == F->mul(felt(b), felt(a)));
      for (int c = 0; c < q && q <= 16; ++c) {
        felt l = F->mul(felt(a), F->add(felt(b), felt(c)));
        felt r = F->add(F->mul(felt(a), felt(b)), F->mul(felt(a), felt(c)));
        CHECK(l == r);
      }
    }
  }
}

TEST_CASE("axioms over small fields") {
  for (auto [p, k] : {std::pair{2, 1}, {2, 2}, {2, 3}, {2, 4},
                      {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}}) {
    check_field_axioms(FieldCtx::make(p, k));
  }
}

TEST_CASE("frobenius is a field automorphism of order k") {
  auto F = FieldCtx::make(3, 4);
  for (int a = 0; a < F->q(); ++a) {
    CHECK(F->frobenius(felt(a), 4) == a);
    for (int b = 0; b < 16; ++b) {
      CHECK(F->frobenius(F->add(felt(a), felt(b))) ==
            F->add(F->frobenius(felt(a)), F->frobenius(felt(b))));
      CHECK(F->frobenius(F->mul(felt(a), felt(b))) ==
            F->mul(F->frobenius(felt(a)), F->frobenius(felt(b))));
    }
  }
  // fixed field of frobenius = prime field
  int fixed = 0;
  for (int a = 0; a < F->q(); ++a)
    if (F->frobenius(felt(a)) == a) ++fixed;
  CHECK(fixed == 3);
}

TEST_CASE("coeff / from_coeffs roundtrip") {
  auto F = FieldCtx::make(5, 2);
  for (int a = 0; a < F->q(); ++a) {
    std::vector<long long> c = {F->coeff(felt(a), 0), F->coeff(felt(a), 1)};
    CHECK(F->from_coeffs(c) == a);
  }
}

TEST_CASE("t generates the multiplicative group of shipped fields") {
  for (auto [p, k] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}}) {
    auto F = FieldCtx::make(p, k);
    felt t = felt(p);
    int ord = 1;
    felt x = t;
    while (x != 1) {
      x = F->mul(x, t);
      ++ord;
    }
    CHECK(ord == F->q() - 1);
  }
}

TEST_CASE("large field GF(2^16) basic arithmetic") {
  auto F = FieldCtx::make(2, 16);
  CHECK(F->q() == 65536);
  felt a = 12345, b = 54321;
  CHECK(F->mul(a, F->inv(a)) == 1);
  CHECK(F->mul(F->mul(a, b), F->inv(b)) == a);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(FieldCtx::make(4, 1), FieldError);
  CHECK_THROWS_AS(FieldCtx::make(6, 2), FieldError);
  // t^2 + 1 is reducible over GF(2)
  CHECK_THROWS_AS(FieldCtx::make(2, 2, std::vector<int>{1, 0, 1}), FieldError);
  auto F = FieldCtx::make(5, 1);
  CHECK_THROWS_AS(F->inv(0), FieldError);
}
