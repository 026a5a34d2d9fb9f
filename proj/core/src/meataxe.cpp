#include "repcheck/meataxe.hpp"

#include <algorithm>
#include <random>

namespace repcheck {

namespace {

// extended gcd: returns (g, a, b) with a*x + b*y = g, g monic
std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& x, const Poly& y) {
  Poly r0 = x, r1 = y;
  Poly a0 = Poly::one(x.F), a1 = Poly::zero(x.F);
  Poly b0 = Poly::zero(x.F), b1 = Poly::one(x.F);
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly a2 = poly_sub(a0, poly_mul(q, a1));
    Poly b2 = poly_sub(b0, poly_mul(q, b1));
    r0 = r1; r1 = r;
    a0 = a1; a1 = a2;
    b0 = b1; b1 = b2;
  }
  if (r0.is_zero()) return {r0, a0, b0};
  felt linv = x.F->inv(r0.lead());
  return {poly_scale(r0, linv), poly_scale(a0, linv), poly_scale(b0, linv)};
}

std::vector<felt> column(const Mat& m, int j) {
  std::vector<felt> v(m.rows);
  for (int i = 0; i < m.rows; ++i) v[i] = m.at(i, j);
  return v;
}

// deterministic + seeded stream of "random" algebra elements: bounded random
// words plus random linear combinations of the generator images, then plain
// word enumeration by length
class AlgebraSampler {
public:
  AlgebraSampler(const Rep& v, std::uint64_t seed)
      : v_(v), rng_(seed ^ 0x9e3779b97f4a7c15ull) {}

  Mat next() {
    ++count_;
    const auto& F = v_.field();
    int g = int(v_.images.size());
    if (count_ <= 64) {
      std::uniform_int_distribution<int> coef(0, F->q() - 1);
      std::uniform_int_distribution<int> pick(0, g - 1);
      std::uniform_int_distribution<int> len(1, 4);
      Mat acc(F, v_.dim, v_.dim);
      int terms = 2 + int(rng_() % 3);
      for (int t = 0; t < terms; ++t) {
        Mat w = Mat::identity(F, v_.dim);
        int L = len(rng_);
        for (int i = 0; i < L; ++i) w = mat_mul(w, v_.images[pick(rng_)]);
        acc = mat_add(acc, mat_scale(w, felt(coef(rng_))));
      }
      return acc;
    }
    // deterministic fallback: sums of two words enumerated by code
    std::uint64_t code = count_ - 65;
    Mat w1 = word_of(code % 97), w2 = word_of(code / 97);
    return mat_add(w1, w2);
  }

private:
  Mat word_of(std::uint64_t code) {
    const auto& F = v_.field();
    int g = int(v_.images.size());
    Mat w = Mat::identity(F, v_.dim);
    std::uint64_t c = code + 1;
    while (c > 1) {
      w = mat_mul(w, v_.images[c % g]);
      c /= g;
    }
    return w;
  }

  const Rep& v_;
  std::mt19937_64 rng_;
  std::uint64_t count_ = 0;
};

}  // namespace

Mat mat_poly_eval(const Poly& f, const Mat& x) {
  Mat acc(x.F, x.rows, x.cols);
  for (int i = f.deg(); i >= 0; --i) {
    acc = mat_mul(acc, x);
    if (f.c[i] != 0)
      acc = mat_add(acc, mat_scale(Mat::identity(x.F, x.rows), f.c[i]));
  }
  return acc;
}

std::vector<std::vector<felt>> spin(const std::vector<Mat>& gens,
                                    const std::vector<std::vector<felt>>& seeds) {
  if (gens.empty()) return seeds;
  int dim = gens[0].rows;
  RowSpace space(gens[0].F, dim);
  std::vector<std::vector<felt>> queue;
  for (const auto& s : seeds)
    if (space.insert(s)) queue.push_back(s);
  size_t head = 0;
  while (head < queue.size()) {
    auto vec = queue[head++];
    for (const auto& g : gens) {
      auto w = mat_apply(g, vec);
      if (space.insert(w)) queue.push_back(w);
    }
  }
  return space.basis();
}

IrredResult is_irreducible(const Rep& v, std::uint64_t seed) {
  if (v.dim == 0) throw RepError("irreducibility of a zero module");
  if (v.dim == 1) return {true, {}};
  std::vector<Mat> tgens;
  for (const auto& g : v.images) tgens.push_back(mat_transpose(g));
  AlgebraSampler sampler(v, seed);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    Mat theta = sampler.next();
    Poly mp = mat_minpoly(theta);
    if (mp.deg() < 1) continue;
    auto factors = poly_factor(mp);
    for (const auto& [f, mult] : factors) {
      Mat ft = mat_poly_eval(f, theta);
      auto ker = mat_rref(ft).nullspace;
      if (ker.rows == 0) continue;
      // spin every kernel basis vector: any proper result certifies reducible
      for (int i = 0; i < ker.rows; ++i) {
        auto sub = spin(v.images, {column(mat_transpose(ker), i)});
        if (int(sub.size()) < v.dim) return {false, sub};
      }
      if (ker.rows == f.deg()) {
        // theta is f-good: dual check completes Norton's criterion
        Mat ftt = mat_poly_eval(f, mat_transpose(theta));
        auto kert = mat_rref(ftt).nullspace;
        auto dsub = spin(tgens, {column(mat_transpose(kert), 0)});
        if (int(dsub.size()) < v.dim) {
          // orthogonal complement of a dual submodule is invariant
          RowSpace rows(v.field(), v.dim);
          for (const auto& r : dsub) rows.insert(r);
          return {false, rows.nullspace()};
        }
        return {true, {}};
      }
    }
  }
  throw RepError("irreducibility test failed to certify (attempt cap)");
}

std::vector<Mat> hom_space(const Rep& v, const Rep& w) {
  if (!v.same_group(w)) throw RepError("hom_space over different groups");
  const auto& F = v.field();
  int dv = v.dim, dw = w.dim;
  RowSpace eqs(F, dw * dv);
  // X rho_v(s) = rho_w(s) X; unknown X is dw x dv, flattened row-major
  for (size_t s = 0; s < v.images.size(); ++s) {
    const Mat& rv = v.images[s];
    const Mat& rw = w.images[s];
    for (int i = 0; i < dw; ++i)
      for (int j = 0; j < dv; ++j) {
        std::vector<felt> row(size_t(dw) * dv, 0);
        for (int k = 0; k < dv; ++k)
          row[size_t(i) * dv + k] = F->add(row[size_t(i) * dv + k], rv.at(k, j));
        for (int k = 0; k < dw; ++k)
          row[size_t(k) * dv + j] = F->sub(row[size_t(k) * dv + j], rw.at(i, k));
        eqs.insert(std::move(row));
      }
  }
  std::vector<Mat> basis;
  for (const auto& n : eqs.nullspace()) {
    Mat m(F, dw, dv);
    std::copy(n.begin(), n.end(), m.a.begin());
    basis.push_back(std::move(m));
  }
  return basis;
}

std::optional<Mat> iso(const Rep& v, const Rep& w, std::uint64_t seed) {
  if (v.dim != w.dim) return std::nullopt;
  auto H = hom_space(v, w);
  if (H.empty()) return std::nullopt;
  const auto& F = v.field();
  int h = int(H.size());
  std::mt19937_64 rng(seed ^ 0x2545f4914f6cdd1dull);
  std::uniform_int_distribution<int> coef(0, F->q() - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Mat m(F, v.dim, v.dim);
    for (int i = 0; i < h; ++i) {
      felt c = felt(coef(rng));
      if (c) m = mat_add(m, mat_scale(H[i], c));
    }
    if (mat_inverse(m)) return m;
  }
  // exhaustive projective search
  double total = 1;
  for (int i = 0; i < h; ++i) total *= F->q();
  if (total > 1e6)
    throw RepError("isomorphism search space too large to certify");
  std::vector<int> tuple(h, 0);
  while (true) {
    // advance
    int pos = 0;
    while (pos < h && tuple[pos] == F->q() - 1) tuple[pos++] = 0;
    if (pos == h) break;
    ++tuple[pos];
    // projective representative: leading nonzero = 1
    int lead = h - 1;
    while (lead >= 0 && tuple[lead] == 0) --lead;
    if (lead < 0 || tuple[lead] != 1) continue;
    Mat m(F, v.dim, v.dim);
    for (int i = 0; i < h; ++i)
      if (tuple[i]) m = mat_add(m, mat_scale(H[i], felt(tuple[i])));
    if (mat_inverse(m)) return m;
  }
  return std::nullopt;
}

bool isomorphic(const Rep& v, const Rep& w, std::uint64_t seed) {
  return iso(v, w, seed).has_value();
}

FactorList chop(const Rep& v, std::uint64_t seed) {
  FactorList out;
  auto add_factor = [&](const Rep& s) {
    for (auto& f : out) {
      if (f.rep.dim == s.dim && isomorphic(f.rep, s, seed)) {
        ++f.mult;
        return;
      }
    }
    out.push_back({s, 1});
  };
  std::vector<Rep> stack = {v};
  while (!stack.empty()) {
    Rep cur = std::move(stack.back());
    stack.pop_back();
    if (cur.dim == 0) continue;
    auto r = is_irreducible(cur, seed);
    if (r.irreducible) {
      add_factor(cur);
    } else {
      stack.push_back(rep_sub(cur, r.witness));
      stack.push_back(rep_quot(cur, r.witness));
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.rep.dim != b.rep.dim) return a.rep.dim < b.rep.dim;
    return a.rep.label < b.rep.label;
  });
  return out;
}

std::vector<FactorList> socle_series(const Rep& v, std::uint64_t seed) {
  std::vector<FactorList> layers;
  Rep cur = v;
  while (cur.dim > 0) {
    auto factors = chop(cur, seed);
    // soc = sum of images of all equivariant maps from the simple factors
    RowSpace soc(cur.field(), cur.dim);
    for (const auto& f : factors) {
      for (const auto& X : hom_space(f.rep, cur))
        for (int j = 0; j < X.cols; ++j) soc.insert(column(X, j));
    }
    auto basis = soc.basis();
    Rep layer = rep_sub(cur, basis);
    layers.push_back(chop(layer, seed));
    if (int(basis.size()) == cur.dim) break;
    cur = rep_quot(cur, basis);
  }
  return layers;
}

IndecResult is_indecomposable(const Rep& v, std::uint64_t seed) {
  IndecResult res;
  auto E = hom_space(v, v);
  int h = int(E.size());
  res.end_dim = h;
  const auto& F = v.field();
  auto try_split = [&](const Mat& theta) -> bool {
    Poly mp = mat_minpoly(theta);
    auto factors = poly_factor(mp);
    if (factors.size() < 2) return false;
    // primary decomposition idempotent from the first factor
    Poly f1 = Poly::one(v.field());
    for (int i = 0; i < factors[0].second; ++i) f1 = poly_mul(f1, factors[0].first);
    Poly rest = poly_divmod(mp, f1).first;
    auto [g, a, b] = poly_xgcd(f1, rest);
    if (g.deg() != 0) return false;
    // e = (b * rest)(theta) projects onto ker f1(theta)
    Mat e = mat_poly_eval(poly_mul(b, rest), theta);
    if (e.is_zero() || e.is_identity()) return false;
    auto im = mat_rref(mat_transpose(e));  // row space of e^T = column space of e
    std::vector<std::vector<felt>> pa;
    for (int i = 0; i < im.rank; ++i) {
      std::vector<felt> r(v.dim);
      for (int j = 0; j < v.dim; ++j) r[j] = im.reduced.at(i, j);
      pa.push_back(std::move(r));
    }
    auto kerr = mat_rref(e).nullspace;
    std::vector<std::vector<felt>> pb;
    for (int i = 0; i < kerr.rows; ++i) pb.push_back(column(mat_transpose(kerr), i));
    res.part_a = std::move(pa);
    res.part_b = std::move(pb);
    res.verdict = IndecVerdict::decomposable;
    return true;
  };
  if (h == 1) {
    res.verdict = IndecVerdict::indecomposable;
    return res;
  }
  std::mt19937_64 rng(seed ^ 0x853c49e6748fea9bull);
  std::uniform_int_distribution<int> coef(0, F->q() - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Mat theta(F, v.dim, v.dim);
    for (int i = 0; i < h; ++i) {
      felt c = felt(coef(rng));
      if (c) theta = mat_add(theta, mat_scale(E[i], c));
    }
    if (try_split(theta)) return res;
  }
  double total = 1;
  for (int i = 0; i < h; ++i) total *= F->q();
  if (h > 6 || total > 1e6) {
    res.verdict = IndecVerdict::uncertified;
    return res;
  }
  // exhaustive: a nontrivial idempotent (if any) has minpoly t(t-1), so an
  // element with two coprime minpoly factors exists iff v is decomposable
  std::vector<int> tuple(h, 0);
  while (true) {
    int pos = 0;
    while (pos < h && tuple[pos] == F->q() - 1) tuple[pos++] = 0;
    if (pos == h) break;
    ++tuple[pos];
    Mat theta(F, v.dim, v.dim);
    for (int i = 0; i < h; ++i)
      if (tuple[i]) theta = mat_add(theta, mat_scale(E[i], felt(tuple[i])));
    if (try_split(theta)) return res;
  }
  res.verdict = IndecVerdict::indecomposable;
  return res;
}

}  // namespace repcheck
