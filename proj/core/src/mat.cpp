#include "repcheck/mat.hpp"

#include <algorithm>
#include <sstream>

namespace repcheck {

Mat Mat::identity(FieldPtr f, int n) {
  Mat m(std::move(f), n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_ints(FieldPtr f, const std::vector<std::vector<long long>>& rows) {
  int r = int(rows.size());
  int c = r ? int(rows[0].size()) : 0;
  Mat m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != c) throw FieldError("ragged matrix literal");
    for (int j = 0; j < c; ++j) m.at(i, j) = f->from_int(rows[i][j]);
  }
  return m;
}

bool Mat::is_identity() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool Mat::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](felt x) { return x == 0; });
}

std::string Mat::key() const {
  std::string s(a.size() * 2, '\0');
  for (size_t i = 0; i < a.size(); ++i) {
    s[2 * i] = char(a[i] & 0xff);
    s[2 * i + 1] = char(a[i] >> 8);
  }
  return s;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols; ++j) os << (j ? "," : "") << int(at(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

Mat mat_mul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw FieldError("matrix dimension mismatch in mul");
  if (!x.same_context(y)) throw FieldError("field context mismatch");
  const auto& F = *x.F;
  Mat r(x.F, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int kk = 0; kk < x.cols; ++kk) {
      felt v = x.at(i, kk);
      if (v == 0) continue;
      const felt* yr = &y.a[size_t(kk) * y.cols];
      felt* rr = &r.a[size_t(i) * r.cols];
      for (int j = 0; j < y.cols; ++j)
        if (yr[j] != 0) rr[j] = F.add(rr[j], F.mul(v, yr[j]));
    }
  return r;
}

Mat mat_add(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw FieldError("shape mismatch");
  Mat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.F->add(x.a[i], y.a[i]);
  return r;
}

Mat mat_sub(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw FieldError("shape mismatch");
  Mat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.F->sub(x.a[i], y.a[i]);
  return r;
}

Mat mat_scale(const Mat& x, felt s) {
  Mat r = x;
  for (auto& v : r.a) v = x.F->mul(v, s);
  return r;
}

Mat mat_transpose(const Mat& x) {
  Mat r(x.F, x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

Mat mat_kron(const Mat& x, const Mat& y) {
  if (!x.same_context(y)) throw FieldError("field context mismatch in kron");
  const auto& F = *x.F;
  Mat r(x.F, x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      felt v = x.at(i, j);
      if (v == 0) continue;
      for (int k = 0; k < y.rows; ++k)
        for (int l = 0; l < y.cols; ++l)
          r.at(i * y.rows + k, j * y.cols + l) = F.mul(v, y.at(k, l));
    }
  return r;
}

Mat mat_pow(const Mat& x, long long e) {
  if (x.rows != x.cols) throw FieldError("pow of non-square matrix");
  if (e < 0) {
    auto inv = mat_inverse(x);
    if (!inv) throw FieldError("negative power of singular matrix");
    return mat_pow(*inv, -e);
  }
  Mat acc = Mat::identity(x.F, x.rows);
  Mat base = x;
  while (e) {
    if (e & 1) acc = mat_mul(acc, base);
    if (e >>= 1) base = mat_mul(base, base);
  }
  return acc;
}

std::vector<felt> mat_apply(const Mat& x, const std::vector<felt>& v) {
  if (int(v.size()) != x.cols) throw FieldError("vector length mismatch");
  const auto& F = *x.F;
  std::vector<felt> r(x.rows, 0);
  for (int i = 0; i < x.rows; ++i) {
    felt s = 0;
    const felt* row = &x.a[size_t(i) * x.cols];
    for (int j = 0; j < x.cols; ++j)
      if (row[j] != 0 && v[j] != 0) s = F.add(s, F.mul(row[j], v[j]));
    r[i] = s;
  }
  return r;
}

RrefResult mat_rref(const Mat& m) {
  const auto& F = *m.F;
  RrefResult res;
  res.reduced = m;
  Mat& A = res.reduced;
  int r = 0;
  for (int col = 0; col < m.cols && r < m.rows; ++col) {
    int sel = -1;
    for (int i = r; i < m.rows; ++i)
      if (A.at(i, col) != 0) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols; ++j) std::swap(A.at(r, j), A.at(sel, j));
    felt inv = F.inv(A.at(r, col));
    for (int j = col; j < m.cols; ++j) A.at(r, j) = F.mul(A.at(r, j), inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      felt c = A.at(i, col);
      if (c == 0) continue;
      for (int j = col; j < m.cols; ++j)
        A.at(i, j) = F.sub(A.at(i, j), F.mul(c, A.at(r, j)));
    }
    res.pivots.push_back(col);
    ++r;
  }
  res.rank = r;
  // nullspace from free columns
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : res.pivots) is_pivot[c] = true;
  Mat null(m.F, m.cols - r, m.cols);
  int row = 0;
  for (int col = 0; col < m.cols; ++col) {
    if (is_pivot[col]) continue;
    null.at(row, col) = 1;
    for (int i = 0; i < r; ++i)
      null.at(row, res.pivots[i]) = F.neg(A.at(i, col));
    ++row;
  }
  res.nullspace = std::move(null);
  return res;
}

int mat_rank(const Mat& m) { return mat_rref(m).rank; }

std::optional<Mat> mat_inverse(const Mat& m) {
  if (m.rows != m.cols) return std::nullopt;
  const auto& F = *m.F;
  Mat aug(m.F, m.rows, 2 * m.cols);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = 1;
  }
  auto r = mat_rref(aug);
  if (r.rank != m.rows) return std::nullopt;
  for (int i = 0; i < m.rows; ++i)
    if (r.pivots[i] != i) return std::nullopt;
  Mat inv(m.F, m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) inv.at(i, j) = r.reduced.at(i, m.cols + j);
  (void)F;
  return inv;
}

Poly mat_minpoly(const Mat& m) {
  if (m.rows != m.cols) throw FieldError("minpoly of non-square matrix");
  const int n = m.rows;
  const int w = 2 * n + 1;  // first n coords: vector; tail: power indicators
  Poly mp = Poly::one(m.F);
  RowSpace seen(m.F, n);
  for (int start = 0; start < n && seen.rank() < n; ++start) {
    std::vector<felt> v(n, 0);
    v[start] = 1;
    if (seen.contains(v)) continue;  // annihilated by mp already
    RowSpace chain(m.F, w);  // Krylov chain rows [M^i e | e_i]
    RowSpace lead(m.F, n);
    std::vector<felt> cur = v;
    int step = 0;
    while (true) {
      if (lead.contains(cur)) {
        std::vector<felt> probe(w, 0);
        std::copy(cur.begin(), cur.end(), probe.begin());
        probe[n + step] = 1;
        chain.reduce(probe);
        // first n coords are now zero; the tail is the relation polynomial
        std::vector<felt> rel(probe.begin() + n, probe.end());
        mp = poly_lcm(mp, Poly(m.F, std::move(rel)));
        break;
      }
      std::vector<felt> row(w, 0);
      std::copy(cur.begin(), cur.end(), row.begin());
      row[n + step] = 1;
      chain.insert(row);
      lead.insert(cur);
      seen.insert(cur);
      cur = mat_apply(m, cur);
      ++step;
      if (step > n) throw FieldError("minpoly chain overflow");
    }
  }
  return mp.monic();
}

long long mat_order(const Mat& m, long long cap) {
  if (m.rows != m.cols) throw FieldError("order of non-square matrix");
  if (!mat_inverse(m)) throw FieldError("order of singular matrix");
  Mat p = m;
  for (long long n = 1; n <= cap; ++n) {
    if (p.is_identity()) return n;
    p = mat_mul(p, m);
  }
  throw FieldError("matrix order exceeds cap");
}

bool mat_semisimple(const Mat& m) { return poly_squarefree(mat_minpoly(m)); }

bool RowSpace::reduce(std::vector<felt>& row) const {
  const auto& f = *F;
  for (size_t i = 0; i < rows_.size(); ++i) {
    felt c = row[pivots_[i]];
    if (c == 0) continue;
    const auto& b = rows_[i];
    for (int j = pivots_[i]; j < ncols_; ++j)
      if (b[j] != 0) row[j] = f.sub(row[j], f.mul(c, b[j]));
  }
  return std::all_of(row.begin(), row.end(), [](felt x) { return x == 0; });
}

bool RowSpace::insert(std::vector<felt> row) {
  if (reduce(row)) return false;
  const auto& f = *F;
  int piv = 0;
  while (row[piv] == 0) ++piv;
  felt inv = f.inv(row[piv]);
  for (int j = piv; j < ncols_; ++j) row[j] = f.mul(row[j], inv);
  // back-substitute into existing rows to stay fully reduced
  for (size_t i = 0; i < rows_.size(); ++i) {
    felt c = rows_[i][piv];
    if (c == 0) continue;
    for (int j = piv; j < ncols_; ++j)
      rows_[i][j] = f.sub(rows_[i][j], f.mul(c, row[j]));
  }
  // keep rows sorted by pivot column for deterministic bases
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(row));
  pivots_.insert(pivots_.begin() + pos, piv);
  return true;
}

std::vector<std::vector<felt>> RowSpace::nullspace() const {
  const auto& f = *F;
  std::vector<bool> is_pivot(ncols_, false);
  for (int c : pivots_) is_pivot[c] = true;
  std::vector<std::vector<felt>> out;
  for (int col = 0; col < ncols_; ++col) {
    if (is_pivot[col]) continue;
    std::vector<felt> v(ncols_, 0);
    v[col] = 1;
    for (size_t i = 0; i < rows_.size(); ++i) v[pivots_[i]] = f.neg(rows_[i][col]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace repcheck
