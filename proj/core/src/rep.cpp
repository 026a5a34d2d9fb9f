#include "repcheck/rep.hpp"

#include <algorithm>
#include <map>

namespace repcheck {

Rep rep_from_gens(GroupPtr G, std::vector<Mat> images, std::string label) {
  if (int(images.size()) != G->ngens())
    throw RepError("need one image per generator");
  int d = images[0].rows;
  for (const auto& m : images) {
    if (m.rows != d || m.cols != d) throw RepError("image dimension mismatch");
    if (!m.F->same(*images[0].F)) throw RepError("image field context mismatch");
    if (!mat_inverse(m)) throw RepError("singular generator image");
  }
  Rep v{G, d, std::move(images), std::move(label)};
  // closure: propagate along the tree, verify every non-tree edge
  auto imgs = all_images(v);
  for (const auto& e : v.G->nontree) {
    if (!(mat_mul(imgs[e.from], v.images[e.gen]) == imgs[e.to]))
      throw RepError("generator images do not satisfy the group relations");
  }
  return v;
}

std::vector<Mat> all_images(const Rep& v) {
  std::vector<Mat> imgs(v.G->size());
  imgs[0] = Mat::identity(v.field(), v.dim);
  for (int e = 1; e < v.G->size(); ++e) {
    const auto& t = v.G->tree[e];
    imgs[e] = mat_mul(imgs[t.parent], v.images[t.gen]);
  }
  return imgs;
}

Mat image_of(const Rep& v, int elem) {
  Mat m = Mat::identity(v.field(), v.dim);
  for (int g : v.G->word_of(elem)) m = mat_mul(m, v.images[g]);
  return m;
}

Rep rep_natural(GroupPtr G) {
  auto gens = G->gens;
  return Rep{G, G->dim(), std::move(gens), "natural"};
}

Rep rep_trivial(GroupPtr G, int n) {
  std::vector<Mat> imgs(G->ngens(), Mat::identity(G->field(), n));
  return Rep{G, n, std::move(imgs), "trivial(" + std::to_string(n) + ")"};
}

Rep rep_dual(const Rep& v) {
  std::vector<Mat> imgs;
  for (const auto& m : v.images)
    imgs.push_back(mat_transpose(*mat_inverse(m)));
  return Rep{v.G, v.dim, std::move(imgs), "dual(" + v.label + ")"};
}

Rep rep_tensor(const Rep& v, const Rep& w) {
  if (!v.same_group(w)) throw RepError("tensor of reps over different groups");
  std::vector<Mat> imgs;
  for (size_t i = 0; i < v.images.size(); ++i)
    imgs.push_back(mat_kron(v.images[i], w.images[i]));
  return Rep{v.G, v.dim * w.dim, std::move(imgs),
             "tensor(" + v.label + "," + w.label + ")"};
}

namespace {

// Exponent vectors of total degree b in n variables, descending lex.
std::vector<std::vector<int>> monomials(int n, int b) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == n - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (int e = rem; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, rem - e);
    }
  };
  rec(rec, 0, b);
  return out;
}

using MonoMap = std::map<std::vector<int>, felt>;

MonoMap mono_mul(const FieldCtx& F, const MonoMap& a, const MonoMap& b) {
  MonoMap r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      felt prod = F.mul(ca, cb);
      auto it = r.find(e);
      if (it == r.end())
        r.emplace(std::move(e), prod);
      else
        it->second = F.add(it->second, prod);
    }
  return r;
}

}  // namespace

Rep rep_sym(int b, const Rep& v) {
  if (b < 0) throw RepError("negative symmetric power");
  const auto& F = *v.field();
  int n = v.dim;
  auto basis = monomials(n, b);
  std::map<std::vector<int>, int> basis_index;
  for (size_t i = 0; i < basis.size(); ++i) basis_index[basis[i]] = int(i);
  int D = int(basis.size());
  std::vector<Mat> imgs;
  for (const auto& g : v.images) {
    Mat img(v.field(), D, D);
    for (int j = 0; j < D; ++j) {
      // image of basis monomial j: product over variables of (g . x_i)^(e_i)
      MonoMap acc;
      acc[std::vector<int>(n, 0)] = 1;
      for (int var = 0; var < n; ++var) {
        MonoMap lin;
        for (int r = 0; r < n; ++r) {
          if (g.at(r, var) == 0) continue;
          std::vector<int> e(n, 0);
          e[r] = 1;
          lin[e] = g.at(r, var);
        }
        for (int rep = 0; rep < basis[j][var]; ++rep) acc = mono_mul(F, acc, lin);
      }
      for (const auto& [e, c] : acc) img.at(basis_index.at(e), j) = c;
    }
    imgs.push_back(std::move(img));
  }
  return Rep{v.G, D, std::move(imgs),
             "sym(" + std::to_string(b) + "," + v.label + ")"};
}

Rep rep_wedge2(const Rep& v) {
  const auto& F = *v.field();
  int n = v.dim;
  std::vector<std::pair<int, int>> basis;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) basis.emplace_back(i, j);
  int D = int(basis.size());
  std::vector<Mat> imgs;
  for (const auto& g : v.images) {
    Mat img(v.field(), D, D);
    for (int col = 0; col < D; ++col) {
      auto [i, j] = basis[col];
      for (int row = 0; row < D; ++row) {
        auto [k, l] = basis[row];
        felt x = F.sub(F.mul(g.at(k, i), g.at(l, j)), F.mul(g.at(l, i), g.at(k, j)));
        img.at(row, col) = x;
      }
    }
    imgs.push_back(std::move(img));
  }
  return Rep{v.G, D, std::move(imgs), "wedge2(" + v.label + ")"};
}

Rep rep_twist(const Rep& v, int i) {
  const auto& F = *v.field();
  std::vector<Mat> imgs = v.images;
  for (auto& m : imgs)
    for (auto& x : m.a) x = F.frobenius(x, i);
  return Rep{v.G, v.dim, std::move(imgs),
             "twist(" + v.label + "," + std::to_string(i) + ")"};
}

Rep rep_dsum(const Rep& v, const Rep& w) {
  if (!v.same_group(w)) throw RepError("dsum of reps over different groups");
  std::vector<Mat> imgs;
  for (size_t i = 0; i < v.images.size(); ++i) {
    Mat m(v.field(), v.dim + w.dim, v.dim + w.dim);
    for (int r = 0; r < v.dim; ++r)
      for (int c = 0; c < v.dim; ++c) m.at(r, c) = v.images[i].at(r, c);
    for (int r = 0; r < w.dim; ++r)
      for (int c = 0; c < w.dim; ++c)
        m.at(v.dim + r, v.dim + c) = w.images[i].at(r, c);
    imgs.push_back(std::move(m));
  }
  return Rep{v.G, v.dim + w.dim, std::move(imgs),
             "dsum(" + v.label + "," + w.label + ")"};
}

namespace {

// Columns of P: first the given basis vectors, then standard vectors filling
// up to an invertible matrix.
Mat basis_completion(const FieldPtr& F, int dim,
                     const std::vector<std::vector<felt>>& basis) {
  RowSpace space(F, dim);
  std::vector<std::vector<felt>> cols;
  for (const auto& b : basis) {
    if (int(b.size()) != dim) throw RepError("basis vector length mismatch");
    if (!space.insert(b)) throw RepError("basis vectors are dependent");
    cols.push_back(b);
  }
  for (int i = 0; i < dim && int(cols.size()) < dim; ++i) {
    std::vector<felt> e(dim, 0);
    e[i] = 1;
    if (space.insert(e)) cols.push_back(e);
  }
  Mat P(F, dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) P.at(i, j) = cols[j][i];
  return P;
}

}  // namespace

Rep rep_sub(const Rep& v, const std::vector<std::vector<felt>>& basis) {
  int r = int(basis.size());
  Mat P = basis_completion(v.field(), v.dim, basis);
  Mat Pinv = *mat_inverse(P);
  std::vector<Mat> imgs;
  for (const auto& g : v.images) {
    Mat conj = mat_mul(Pinv, mat_mul(g, P));
    // invariance: lower-left block must vanish
    for (int i = r; i < v.dim; ++i)
      for (int j = 0; j < r; ++j)
        if (conj.at(i, j) != 0) throw RepError("subspace is not invariant");
    Mat s(v.field(), r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) s.at(i, j) = conj.at(i, j);
    imgs.push_back(std::move(s));
  }
  return Rep{v.G, r, std::move(imgs), "sub(" + v.label + ")"};
}

Rep rep_quot(const Rep& v, const std::vector<std::vector<felt>>& basis) {
  int r = int(basis.size());
  int q = v.dim - r;
  Mat P = basis_completion(v.field(), v.dim, basis);
  Mat Pinv = *mat_inverse(P);
  std::vector<Mat> imgs;
  for (const auto& g : v.images) {
    Mat conj = mat_mul(Pinv, mat_mul(g, P));
    for (int i = r; i < v.dim; ++i)
      for (int j = 0; j < r; ++j)
        if (conj.at(i, j) != 0) throw RepError("subspace is not invariant");
    Mat s(v.field(), q, q);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) s.at(i, j) = conj.at(r + i, r + j);
    imgs.push_back(std::move(s));
  }
  return Rep{v.G, q, std::move(imgs), "quot(" + v.label + ")"};
}

Rep rep_ad(const Rep& v) {
  // f -> rho f rho^-1 on vec(f) row-major: rho (x) (rho^-1)^T
  std::vector<Mat> imgs;
  for (const auto& g : v.images)
    imgs.push_back(mat_kron(g, mat_transpose(*mat_inverse(g))));
  Rep r{v.G, v.dim * v.dim, std::move(imgs), "ad(" + v.label + ")"};
  return r;
}

std::vector<felt> identity_vec(const Rep& v) {
  std::vector<felt> id(size_t(v.dim) * v.dim, 0);
  for (int i = 0; i < v.dim; ++i) id[size_t(i) * v.dim + i] = 1;
  return id;
}

Rep rep_adq(const Rep& v) {
  Rep ad = rep_ad(v);
  Rep q = rep_quot(ad, {identity_vec(v)});
  q.label = "adq(" + v.label + ")";
  return q;
}

Rep rep_induce(GroupPtr G, const SubgroupRef& H, GroupPtr Hgrp, const Rep& rho) {
  if (H.parent != G.get()) throw RepError("subgroup belongs to a different group");
  auto reps = transversal(*G, H);
  int nc = int(reps.size());
  // coset slot of each parent element
  std::vector<int> slot(G->size(), -1);
  {
    std::vector<int> members;
    for (int i = 0; i < G->size(); ++i)
      if (H.contains(i)) members.push_back(i);
    for (int a = 0; a < nc; ++a)
      for (int h : members) slot[G->product(reps[a], h)] = a;
  }
  auto rho_imgs = all_images(rho);
  int d = rho.dim;
  std::vector<Mat> imgs;
  for (int g = 0; g < G->ngens(); ++g) {
    int sg = G->cay(0, g);
    Mat img(rho.field(), nc * d, nc * d);
    for (int a = 0; a < nc; ++a) {
      int x = G->product(sg, reps[a]);
      int ap = slot[x];
      if (ap < 0) throw RepError("transversal bookkeeping failure");
      int h = G->product(G->inverse(reps[ap]), x);
      if (!H.contains(h)) throw RepError("induce: not a subgroup");
      int hi = Hgrp->lookup(G->elems[h]);
      if (hi < 0) throw RepError("induce: subgroup enumeration mismatch");
      const Mat& block = rho_imgs[hi];
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          img.at(ap * d + i, a * d + j) = block.at(i, j);
    }
    imgs.push_back(std::move(img));
  }
  return rep_from_gens(G, std::move(imgs), "induce(" + rho.label + ")");
}

felt embedding_root(const FieldCtx& small, const FieldCtx& big) {
  if (small.k() == 1) return 0;  // unused
  // least element of the big field that is a root of the small modulus
  for (int x = 0; x < big.q(); ++x) {
    felt acc = 0;
    for (int i = small.k(); i >= 0; --i)
      acc = big.add(big.mul(acc, felt(x)), big.from_int(small.modulus()[i]));
    if (acc == 0) return felt(x);
  }
  throw FieldError("no embedding root found (degree does not divide)");
}

felt embed_elt(const FieldCtx& small, const FieldCtx& big, felt root, felt a) {
  felt acc = 0;
  for (int i = small.k() - 1; i >= 0; --i)
    acc = big.add(big.mul(acc, root), big.from_int(small.coeff(a, i)));
  return acc;
}

Rep extend_scalars(const Rep& v, int m) {
  if (m < 1) throw RepError("extension multiplier must be >= 1");
  const auto& F = *v.field();
  auto big = FieldCtx::make(F.p(), F.k() * m);
  felt root = embedding_root(F, *big);
  auto map_mat = [&](const Mat& x) {
    Mat r(big, x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = embed_elt(F, *big, root, x.a[i]);
    return r;
  };
  std::vector<Mat> ggens;
  for (const auto& g : v.G->gens) ggens.push_back(map_mat(g));
  auto G2 = enumerate_group(ggens);
  std::vector<Mat> imgs;
  for (const auto& g : v.images) imgs.push_back(map_mat(g));
  return rep_from_gens(G2, std::move(imgs), v.label + "@ext" + std::to_string(m));
}

}  // namespace repcheck
