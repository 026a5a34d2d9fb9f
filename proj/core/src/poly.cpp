#include "repcheck/poly.hpp"

#include <algorithm>
#include <sstream>

namespace repcheck {

Poly Poly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  return poly_scale(*this, F->inv(lead()));
}

felt Poly::eval(felt x) const {
  felt r = 0;
  for (int i = deg(); i >= 0; --i) r = F->add(F->mul(r, x), c[i]);
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c[i] != 1) os << int(c[i]);
    if (i >= 1) os << (c[i] != 1 ? "*t" : "t");
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Poly poly_add(const Poly& a, const Poly& b) {
  const auto& F = *a.F;
  std::vector<felt> r(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    felt x = i < a.c.size() ? a.c[i] : felt(0);
    felt y = i < b.c.size() ? b.c[i] : felt(0);
    r[i] = F.add(x, y);
  }
  return Poly(a.F ? a.F : b.F, std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  const auto& F = *(a.F ? a.F : b.F);
  std::vector<felt> r(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    felt x = i < a.c.size() ? a.c[i] : felt(0);
    felt y = i < b.c.size() ? b.c[i] : felt(0);
    r[i] = F.sub(x, y);
  }
  return Poly(a.F ? a.F : b.F, std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.F ? a.F : b.F);
  const auto& F = *a.F;
  std::vector<felt> r(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a.c[i], b.c[j]));
  }
  return Poly(a.F, std::move(r));
}

Poly poly_scale(const Poly& a, felt s) {
  std::vector<felt> r(a.c);
  for (auto& x : r) x = a.F->mul(x, s);
  return Poly(a.F, std::move(r));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw FieldError("polynomial division by zero");
  const auto& F = *b.F;
  if (a.deg() < b.deg()) return {Poly::zero(b.F), a};
  std::vector<felt> rem(a.c);
  std::vector<felt> quo(a.deg() - b.deg() + 1, 0);
  felt linv = F.inv(b.lead());
  for (int d = a.deg(); d >= b.deg(); --d) {
    felt c = rem[d];
    if (c == 0) continue;
    felt qc = F.mul(c, linv);
    quo[d - b.deg()] = qc;
    for (int i = 0; i <= b.deg(); ++i)
      rem[d - b.deg() + i] = F.sub(rem[d - b.deg() + i], F.mul(qc, b.c[i]));
  }
  return {Poly(b.F, std::move(quo)), Poly(b.F, std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = poly_mod(x, y);
    x = y;
    y = r;
  }
  return x.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.F ? a.F : b.F);
  Poly g = poly_gcd(a, b);
  return poly_divmod(poly_mul(a, b), g).first.monic();
}

Poly poly_derivative(const Poly& a) {
  if (a.deg() < 1) return Poly::zero(a.F);
  std::vector<felt> r(a.deg(), 0);
  for (int i = 1; i <= a.deg(); ++i)
    r[i - 1] = a.F->mul(a.c[i], a.F->from_int(i));
  return Poly(a.F, std::move(r));
}

Poly poly_powmod(const Poly& a, long long e, const Poly& mod) {
  Poly acc = Poly::one(mod.F);
  Poly base = poly_mod(a, mod);
  while (e) {
    if (e & 1) acc = poly_mod(poly_mul(acc, base), mod);
    base = poly_mod(poly_mul(base, base), mod);
    e >>= 1;
  }
  return acc;
}

namespace {

bool sort_key_less(const Poly& a, const Poly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = a.deg(); i >= 0; --i)
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  return false;
}

// Berlekamp split of a monic squarefree polynomial into its irreducible
// monic factors.
std::vector<Poly> berlekamp_squarefree(const Poly& f) {
  const auto& F = *f.F;
  int n = f.deg();
  if (n <= 1) return {f};
  // rows of Q - I: row i = t^(q*i) mod f minus e_i
  std::vector<std::vector<felt>> rows;
  Poly tq = poly_powmod(Poly::x(f.F), F.q(), f);
  Poly pw = Poly::one(f.F);
  for (int i = 0; i < n; ++i) {
    std::vector<felt> row(n, 0);
    for (int j = 0; j <= pw.deg(); ++j) row[j] = pw.c[j];
    row[i] = F.sub(row[i], 1);
    rows.push_back(std::move(row));
    pw = poly_mod(poly_mul(pw, tq), f);
  }
  // nullspace of the n x n matrix whose ROWS are images of basis vectors,
  // i.e. we need b with b * (Q - I) = 0: transpose first
  std::vector<std::vector<felt>> m(n, std::vector<felt>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[j][i] = rows[i][j];
  // Gaussian elimination to rref, then extract nullspace
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < n && r < n; ++col) {
    int sel = -1;
    for (int i = r; i < n; ++i)
      if (m[i][col] != 0) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    felt inv = F.inv(m[r][col]);
    for (int j = 0; j < n; ++j) m[r][j] = F.mul(m[r][j], inv);
    for (int i = 0; i < n; ++i) {
      if (i == r || m[i][col] == 0) continue;
      felt c = m[i][col];
      for (int j = 0; j < n; ++j) m[i][j] = F.sub(m[i][j], F.mul(c, m[r][j]));
    }
    pivot_col.push_back(col);
    ++r;
  }
  int nullity = n - r;
  if (nullity == 1) return {f};
  std::vector<std::vector<felt>> basis;
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    std::vector<felt> v(n, 0);
    v[col] = 1;
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = F.neg(m[i][col]);
    basis.push_back(std::move(v));
  }
  // split using non-constant nullspace vectors
  std::vector<Poly> work = {f}, done;
  for (const auto& bv : basis) {
    Poly b(f.F, std::vector<felt>(bv));
    if (b.deg() < 1) continue;
    std::vector<Poly> next;
    for (const auto& g : work) {
      if (g.deg() <= 1) { next.push_back(g); continue; }
      std::vector<Poly> pieces;
      Poly rest = g;
      for (int c = 0; c < F.q() && rest.deg() >= 1; ++c) {
        Poly shifted = poly_sub(b, Poly(f.F, {felt(c)}));
        Poly h = poly_gcd(rest, shifted);
        if (h.deg() >= 1) {
          pieces.push_back(h);
          rest = poly_divmod(rest, h).first.monic();
        }
      }
      if (rest.deg() >= 1) pieces.push_back(rest);
      if (pieces.empty()) pieces.push_back(g);
      for (auto& p : pieces) next.push_back(p);
    }
    work = std::move(next);
    if (int(work.size()) == nullity) break;  // fully split
  }
  // pieces of degree > 1 may still be composite only if they resisted every
  // basis vector, which cannot happen for squarefree input; recurse to be safe
  std::vector<Poly> out;
  for (const auto& g : work) {
    if (int(work.size()) > 1 && g.deg() > 1) {
      auto subs = berlekamp_squarefree(g);
      for (auto& s : subs) out.push_back(s);
    } else {
      out.push_back(g);
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<Poly, int>> poly_factor(const Poly& f0) {
  if (f0.is_zero()) throw FieldError("cannot factor the zero polynomial");
  const auto& F = *f0.F;
  std::vector<std::pair<Poly, int>> result;
  Poly f = f0.monic();
  int outer_mult = 1;  // multiplicity scale from p-th root descent
  while (f.deg() > 0) {
    Poly d = poly_derivative(f);
    if (d.is_zero()) {
      // f = g(t^p); p-th root of each coefficient is frobenius^(k-1)
      int p = F.p();
      std::vector<felt> g(f.deg() / p + 1, 0);
      for (int i = 0; i <= f.deg(); i += p)
        g[i / p] = F.frobenius(f.c[i], F.k() - 1);
      f = Poly(f0.F, std::move(g));
      outer_mult *= p;
      continue;
    }
    Poly u = poly_divmod(f, poly_gcd(f, d)).first.monic();
    for (const auto& h : berlekamp_squarefree(u)) {
      int m = 0;
      while (true) {
        auto [q, r] = poly_divmod(f, h);
        if (!r.is_zero()) break;
        f = q;
        ++m;
      }
      if (m > 0) result.emplace_back(h, m * outer_mult);
    }
  }
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) { return sort_key_less(a.first, b.first); });
  return result;
}

bool poly_is_irreducible(const Poly& f) {
  if (f.deg() < 1) return false;
  auto fac = poly_factor(f);
  return fac.size() == 1 && fac[0].second == 1;
}

bool poly_squarefree(const Poly& f) {
  if (f.deg() < 1) return true;
  Poly d = poly_derivative(f);
  if (d.is_zero()) return false;
  return poly_gcd(f, d).deg() == 0;
}

}  // namespace repcheck
