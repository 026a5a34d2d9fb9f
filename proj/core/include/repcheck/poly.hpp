#pragma once

// Dense univariate polynomials over a FieldCtx, lowest degree first.
// Factorization is Berlekamp's algorithm after squarefree decomposition;
// degrees in this engine stay below ~200.

#include <utility>
#include <vector>

#include "repcheck/field.hpp"

namespace repcheck {

struct Poly {
  FieldPtr F;
  std::vector<felt> c;  // c[i] = coefficient of t^i; empty = zero polynomial

  Poly() = default;
  Poly(FieldPtr f, std::vector<felt> coeffs) : F(std::move(f)), c(std::move(coeffs)) {
    trim();
  }

  static Poly zero(FieldPtr f) { return Poly(std::move(f), {}); }
  static Poly one(FieldPtr f) { return Poly(std::move(f), {1}); }
  static Poly x(FieldPtr f) { return Poly(std::move(f), {0, 1}); }

  bool is_zero() const { return c.empty(); }
  int deg() const { return int(c.size()) - 1; }  // -1 for zero
  felt lead() const { return c.back(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool operator==(const Poly& o) const { return c == o.c; }

  Poly monic() const;
  felt eval(felt x) const;
  std::string str() const;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, felt s);
// quotient/remainder, b nonzero
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);  // monic (or zero)
Poly poly_lcm(const Poly& a, const Poly& b);
Poly poly_derivative(const Poly& a);
Poly poly_powmod(const Poly& a, long long e, const Poly& mod);

// Irreducible factors with multiplicities; factors monic, sorted by
// (degree, coefficient sequence) for determinism. Product of factors times
// the leading unit equals the input. Throws on the zero polynomial.
std::vector<std::pair<Poly, int>> poly_factor(const Poly& f);

bool poly_is_irreducible(const Poly& f);
// Squarefree test: gcd(f, f') constant and f' != 0 pattern handled exactly
// (f'(t) = 0 in characteristic p means f = g(t^p), never squarefree for deg>0).
bool poly_squarefree(const Poly& f);

}  // namespace repcheck
