#pragma once

// Arithmetic context for GF(p^k), q = p^k <= 2^16.
//
// Elements are stored as integer indices 0..q-1 encoding polynomial
// coefficients in base p: index = sum c_i * p^i. For k >= 2 multiplication
// goes through exp/log tables of the multiplicative group generated by t
// (the shipped moduli are primitive, so t generates); for k = 1 we use
// direct modular arithmetic.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace repcheck {

using felt = std::uint16_t;

class FieldError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class FieldCtx {
public:
  // Builds GF(p^k) with the shipped modulus (see shipped_modulus).
  static std::shared_ptr<const FieldCtx> make(int p, int k);
  // Same, but with a caller-supplied monic irreducible modulus
  // (coefficient list c_0..c_k over GF(p), c_k = 1).
  static std::shared_ptr<const FieldCtx> make(int p, int k,
                                              const std::vector<int>& modulus);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  felt add(felt a, felt b) const {
    if (k_ == 1) { int s = a + b; return felt(s >= p_ ? s - p_ : s); }
    if (q_ <= 256) return add_table_[(unsigned(a) << 8) | b];
    return add_slow(a, b);
  }
  felt sub(felt a, felt b) const { return add(a, neg(b)); }
  felt neg(felt a) const {
    if (k_ == 1) return felt(a ? p_ - a : 0);
    return neg_table_[a];
  }
  felt mul(felt a, felt b) const {
    if (k_ == 1) return felt((unsigned(a) * b) % p_);
    if (a == 0 || b == 0) return 0;
    unsigned s = unsigned(log_[a]) + log_[b];
    if (s >= unsigned(q_ - 1)) s -= q_ - 1;
    return exp_[s];
  }
  felt inv(felt a) const;
  felt div(felt a, felt b) const { return mul(a, inv(b)); }
  felt pow(felt a, long long e) const;
  // x -> x^(p^i), the i-th power of the Frobenius automorphism.
  felt frobenius(felt a, int i = 1) const;

  felt one() const { return 1; }
  // Image of the integer n (reduces mod p; k >= 1 embeds GF(p) as constants).
  felt from_int(long long n) const;
  // Element with coefficient list c_0..c_{k-1} (entries reduced mod p).
  felt from_coeffs(const std::vector<long long>& c) const;
  // Base-p digit i of the element index.
  int coeff(felt a, int i) const;

  // True if this context and `o` describe the same field (p, k, modulus).
  bool same(const FieldCtx& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }

  std::string to_string(felt a) const;

private:
  FieldCtx() = default;
  void build_tables();
  felt add_slow(felt a, felt b) const;
  felt mul_slow(felt a, felt b) const;  // polynomial mult mod modulus

  int p_ = 0, k_ = 0, q_ = 0;
  std::vector<int> modulus_;  // length k+1, monic
  std::vector<felt> exp_, log_;  // k >= 2
  std::vector<felt> add_table_;  // k >= 2, q <= 256
  std::vector<felt> neg_table_;  // k >= 2
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

bool is_prime(int n);

// The fixed modulus shipped for GF(p^k): a table entry for every field the
// catalog uses, otherwise the lexicographically least monic primitive
// polynomial (ascending by integer encoding of the non-leading coefficients).
std::vector<int> shipped_modulus(int p, int k);

}  // namespace repcheck
