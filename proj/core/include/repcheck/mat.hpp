#pragma once

// Dense matrices over a FieldCtx: the universal currency of the engine.
// Row-major storage, column-vector action convention (m * v).

#include <optional>
#include <string>
#include <vector>

#include "repcheck/poly.hpp"

namespace repcheck {

struct Mat {
  int rows = 0, cols = 0;
  FieldPtr F;
  std::vector<felt> a;  // rows*cols, row-major

  Mat() = default;
  Mat(FieldPtr f, int r, int c) : rows(r), cols(c), F(std::move(f)), a(size_t(r) * c, 0) {}

  static Mat identity(FieldPtr f, int n);
  static Mat from_ints(FieldPtr f, const std::vector<std::vector<long long>>& rows);

  felt& at(int i, int j) { return a[size_t(i) * cols + j]; }
  felt at(int i, int j) const { return a[size_t(i) * cols + j]; }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
  bool is_identity() const;
  bool is_zero() const;
  bool same_context(const Mat& o) const { return F->same(*o.F); }

  // row-major field indices, fixed width: the canonical element key
  std::string key() const;
  std::string str() const;
};

Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_add(const Mat& x, const Mat& y);
Mat mat_sub(const Mat& x, const Mat& y);
Mat mat_scale(const Mat& x, felt s);
Mat mat_transpose(const Mat& x);
Mat mat_kron(const Mat& x, const Mat& y);  // basis e_i(x)f_j, (i,j) lex
Mat mat_pow(const Mat& x, long long e);
std::vector<felt> mat_apply(const Mat& x, const std::vector<felt>& v);

struct RrefResult {
  int rank = 0;
  std::vector<int> pivots;
  Mat reduced;
  Mat nullspace;  // rows = basis of the right nullspace (vectors v, m*v = 0)
};

// Reduced row echelon form. Pivot rule: first nonzero entry in scan order,
// full elimination. Deterministic.
RrefResult mat_rref(const Mat& m);

int mat_rank(const Mat& m);
// Inverse; nullopt if singular.
std::optional<Mat> mat_inverse(const Mat& m);

// Minimal polynomial (monic) of a square matrix.
Poly mat_minpoly(const Mat& m);
// Least n >= 1 with m^n = I; throws on singular m or if the cap is hit.
long long mat_order(const Mat& m, long long cap = 1'000'000);
// Semisimple in characteristic p <=> minimal polynomial squarefree
// <=> multiplicative order coprime to p.
bool mat_semisimple(const Mat& m);

// Incremental row accumulator: maintains a reduced echelonized basis of the
// row space. insert() returns true when the row enlarged the space.
class RowSpace {
public:
  explicit RowSpace(FieldPtr f, int ncols) : F(std::move(f)), ncols_(ncols) {}

  int rank() const { return int(rows_.size()); }
  int ncols() const { return ncols_; }
  bool insert(std::vector<felt> row);
  // reduce a row against the current basis (in place); returns true if zero
  bool reduce(std::vector<felt>& row) const;
  bool contains(std::vector<felt> row) const { return reduce(row); }
  const std::vector<std::vector<felt>>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  // basis of the complementary nullspace (vectors v with B v^T unconstrained):
  // solutions of "row space annihilates v" when rows are equations
  std::vector<std::vector<felt>> nullspace() const;

private:
  FieldPtr F;
  int ncols_;
  std::vector<std::vector<felt>> rows_;
  std::vector<int> pivots_;  // pivot column of rows_[i], strictly handled
};

}  // namespace repcheck
