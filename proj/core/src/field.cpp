#include "repcheck/field.hpp"

#include <algorithm>
#include <map>

namespace repcheck {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; (long long)d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Polynomial arithmetic over GF(p) on int coefficient vectors, used only for
// modulus selection and table construction.
using IPoly = std::vector<int>;

IPoly imul_mod(const IPoly& a, const IPoly& b, const IPoly& mod, int p) {
  int k = int(mod.size()) - 1;
  std::vector<int> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  // reduce: mod is monic
  for (int d = int(r.size()) - 1; d >= k; --d) {
    int c = r[d];
    if (c == 0) continue;
    r[d] = 0;
    for (int i = 0; i < k; ++i)
      r[d - k + i] = ((r[d - k + i] - c * mod[i]) % p + p) % p;
  }
  r.resize(k);
  return r;
}

bool ipoly_is_zero(const IPoly& a) {
  return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

// Trial division by every monic polynomial of degree <= deg(f)/2.
bool ipoly_irreducible(const IPoly& f, int p) {
  int k = int(f.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      IPoly g(d + 1, 0);
      g[d] = 1;
      long long c = code;
      for (int i = 0; i < d; ++i) { g[i] = int(c % p); c /= p; }
      // remainder of f mod g
      IPoly r = f;
      for (int e = int(r.size()) - 1; e >= d; --e) {
        int lc = r[e];
        if (lc == 0) continue;
        r[e] = 0;
        for (int i = 0; i < d; ++i)
          r[e - d + i] = ((r[e - d + i] - lc * g[i]) % p + p) % p;
      }
      r.resize(d);
      if (ipoly_is_zero(r)) return false;
    }
  }
  return true;
}

bool ipoly_primitive(const IPoly& f, int p) {
  int k = int(f.size()) - 1;
  long long q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  long long n = q - 1;
  std::vector<long long> primes;
  long long m = n;
  for (long long d = 2; d * d <= m; ++d)
    while (m % d == 0) { if (primes.empty() || primes.back() != d) primes.push_back(d); m /= d; }
  if (m > 1) primes.push_back(m);
  IPoly t = {0, 1};
  for (long long ell : primes) {
    long long e = n / ell;
    // t^e mod f
    IPoly acc = {1};
    IPoly base = t;
    while (e) {
      if (e & 1) acc = imul_mod(acc, base, f, p);
      base = imul_mod(base, base, f, p);
      e >>= 1;
    }
    acc.resize(k);
    if (acc.size() >= 1 && acc[0] == 1 &&
        std::all_of(acc.begin() + 1, acc.end(), [](int c) { return c == 0; }))
      return false;
  }
  return true;
}

}  // namespace

std::vector<int> shipped_modulus(int p, int k) {
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 2}, {1, 1, 1}},        // t^2+t+1
      {{2, 3}, {1, 1, 0, 1}},     // t^3+t+1
      {{2, 4}, {1, 1, 0, 0, 1}},  // t^4+t+1
      {{3, 2}, {2, 2, 1}},        // t^2+2t+2
      {{3, 3}, {1, 2, 0, 1}},     // t^3+2t+1
      {{3, 4}, {2, 0, 0, 2, 1}},  // t^4+2t^3+2
      {{5, 2}, {2, 4, 1}},        // t^2+4t+2
      {{7, 2}, {3, 6, 1}},        // t^2+6t+3
  };
  auto it = table.find({p, k});
  if (it != table.end()) return it->second;
  // search ascending by integer encoding of the non-leading coefficients
  long long count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    IPoly f(k + 1, 0);
    f[k] = 1;
    long long c = code;
    for (int i = 0; i < k; ++i) { f[i] = int(c % p); c /= p; }
    if (ipoly_irreducible(f, p) && ipoly_primitive(f, p)) return f;
  }
  throw FieldError("no primitive modulus found for GF(" + std::to_string(p) +
                   "^" + std::to_string(k) + ")");
}

std::shared_ptr<const FieldCtx> FieldCtx::make(int p, int k) {
  if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
  if (k < 1) throw FieldError("extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > 65536) throw FieldError("field size exceeds 2^16");
  }
  std::vector<int> mod;
  if (k == 1) {
    mod = {0, 1};  // unused
  } else {
    mod = shipped_modulus(p, k);
  }
  return make(p, k, mod);
}

std::shared_ptr<const FieldCtx> FieldCtx::make(int p, int k,
                                               const std::vector<int>& modulus) {
  if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
  if (k < 1) throw FieldError("extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > 65536) throw FieldError("field size exceeds 2^16");
  }
  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->k_ = k;
  ctx->q_ = int(q);
  ctx->modulus_ = modulus;
  if (k >= 2) {
    if (int(modulus.size()) != k + 1 || modulus[k] != 1)
      throw FieldError("modulus must be monic of degree k");
    IPoly m = modulus;
    for (auto& c : m) c = ((c % p) + p) % p;
    if (!ipoly_irreducible(m, p)) throw FieldError("modulus is reducible");
    ctx->modulus_ = m;
    ctx->build_tables();
  }
  return ctx;
}

felt FieldCtx::mul_slow(felt a, felt b) const {
  // decode, multiply, reduce
  IPoly pa(k_), pb(k_);
  for (int i = 0; i < k_; ++i) { pa[i] = a % p_; a = felt(a / p_); }
  for (int i = 0; i < k_; ++i) { pb[i] = b % p_; b = felt(b / p_); }
  IPoly r = imul_mod(pa, pb, modulus_, p_);
  long long idx = 0;
  for (int i = k_ - 1; i >= 0; --i) idx = idx * p_ + r[i];
  return felt(idx);
}

felt FieldCtx::add_slow(felt a, felt b) const {
  long long idx = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    int s = (a % p_ + b % p_) % p_;
    idx += s * mult;
    mult *= p_;
    a = felt(a / p_);
    b = felt(b / p_);
  }
  return felt(idx);
}

void FieldCtx::build_tables() {
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  felt t = felt(p_);  // the element "t"
  felt x = 1;
  for (int i = 0; i < q_ - 1; ++i) {
    exp_[i] = x;
    log_[x] = felt(i);
    x = mul_slow(x, t);
  }
  if (x != 1) throw FieldError("shipped modulus is not primitive");
  neg_table_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    long long idx = 0, mult = 1;
    int v = a;
    for (int i = 0; i < k_; ++i) {
      int c = v % p_;
      idx += (c ? p_ - c : 0) * mult;
      mult *= p_;
      v /= p_;
    }
    neg_table_[a] = felt(idx);
  }
  if (q_ <= 256) {
    add_table_.assign(1 << 16, 0);
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b)
        add_table_[(a << 8) | b] = add_slow(felt(a), felt(b));
  }
}

felt FieldCtx::inv(felt a) const {
  if (a == 0) throw FieldError("division by zero");
  if (k_ == 1) return pow(a, p_ - 2);
  unsigned l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

felt FieldCtx::pow(felt a, long long e) const {
  if (a == 0) {
    if (e < 0) throw FieldError("division by zero");
    return e == 0 ? felt(1) : felt(0);
  }
  long long n = q_ - 1;
  long long r = e % n;
  if (r < 0) r += n;
  if (k_ >= 2) return exp_[(unsigned long long)(log_[a]) * r % n];
  felt acc = 1, base = a;
  while (r) {
    if (r & 1) acc = mul(acc, base);
    base = mul(base, base);
    r >>= 1;
  }
  return acc;
}

felt FieldCtx::frobenius(felt a, int i) const {
  felt r = a;
  int m = ((i % k_) + k_) % k_;
  for (int j = 0; j < m; ++j) r = pow(r, p_);
  return r;
}

felt FieldCtx::from_int(long long n) const {
  long long r = n % p_;
  if (r < 0) r += p_;
  return felt(r);
}

felt FieldCtx::from_coeffs(const std::vector<long long>& c) const {
  if (int(c.size()) > k_) throw FieldError("coefficient list longer than degree");
  long long idx = 0;
  for (int i = std::min<int>(int(c.size()), k_) - 1; i >= 0; --i) {
    long long d = c[i] % p_;
    if (d < 0) d += p_;
    idx = idx * p_ + d;
  }
  return felt(idx);
}

int FieldCtx::coeff(felt a, int i) const {
  int v = a;
  for (int j = 0; j < i; ++j) v /= p_;
  return v % p_;
}

std::string FieldCtx::to_string(felt a) const { return std::to_string(a); }

}  // namespace repcheck
