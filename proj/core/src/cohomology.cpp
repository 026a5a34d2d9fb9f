#include "repcheck/cohomology.hpp"

#include <algorithm>
#include <array>

namespace repcheck {

std::vector<std::vector<felt>> h0_basis(const Rep& v) {
  RowSpace eqs(v.field(), v.dim);
  for (const auto& g : v.images) {
    Mat d = mat_sub(g, Mat::identity(v.field(), v.dim));
    for (int i = 0; i < v.dim; ++i)
      eqs.insert(std::vector<felt>(d.a.begin() + size_t(i) * v.dim,
                                   d.a.begin() + size_t(i + 1) * v.dim));
  }
  return eqs.nullspace();
}

int h0(const Rep& v) { return int(h0_basis(v).size()); }

namespace {

// d-value columns for a set of candidate cocycles: D(e) is m x nb.
struct Candidates {
  std::vector<std::vector<felt>> u;  // nb stacks of length m*g
};

}  // namespace

CocycleSpace h1(const Rep& v, const CohomOptions& opt) {
  const auto& G = *v.G;
  const FieldPtr F = v.field();
  const int m = v.dim;
  const int g = G.ngens();
  const int W = m * g;
  const long long N = G.size();

  CocycleSpace out;
  out.m = m;
  out.gcount = g;
  out.h0_dim = h0(v);
  out.b1_dim = m - out.h0_dim;

  // memory estimate: element images + A maps (streamed) + candidate columns
  auto imgs = all_images(v);
  long long live_bytes = N * (long long)m * m * 2;

  // coboundary rows: for each module basis vector, the stack (s*e_i - e_i)
  RowSpace bspace(F, W);
  for (int i = 0; i < m; ++i) {
    std::vector<felt> row(W, 0);
    for (int s = 0; s < g; ++s) {
      for (int j = 0; j < m; ++j) {
        felt x = v.images[s].at(j, i);
        if (j == i) x = F->sub(x, 1);
        row[size_t(s) * m + j] = x;
      }
    }
    bspace.insert(std::move(row));
  }
  // sanity: rank of the coboundary map equals b1
  if (bspace.rank() != out.b1_dim)
    throw ResourceError("coboundary rank mismatch");

  const int target_rank = W - out.b1_dim;  // rank when H^1 = 0

  // Non-tree edges are processed once both endpoints' A maps exist, i.e. at
  // sweep index max(from, to); (from, gen, to) triples grouped accordingly.
  std::vector<std::vector<std::array<int, 3>>> edges_at(N);
  // last element index whose processing still references A_e
  std::vector<int> last_ref(N, 0);
  for (int e = 0; e < N; ++e) last_ref[e] = e;
  for (const auto& ed : G.nontree) {
    int mx = std::max(ed.from, ed.to);
    edges_at[mx].push_back({ed.from, ed.gen, ed.to});
    last_ref[ed.to] = std::max(last_ref[ed.to], mx);
    last_ref[ed.from] = std::max(last_ref[ed.from], mx);
  }
  for (int e = 1; e < N; ++e) {
    // tree child e reads A_parent when e is reached in the sweep
    last_ref[G.tree[e].parent] = std::max(last_ref[G.tree[e].parent], e);
  }
  std::vector<std::vector<int>> free_at(N);
  for (int e = 0; e < N; ++e) free_at[last_ref[e]].push_back(e);

  RowSpace constraints(F, W);
  std::vector<std::vector<felt>> A(N);  // A_e, m x W row-major, lazily freed
  A[0].assign(size_t(m) * W, 0);
  live_bytes += (long long)m * W * 2;

  auto build_A = [&](int e) {
    const auto& t = G.tree[e];
    A[e] = A[t.parent];  // copy
    const Mat& rh = imgs[t.parent];
    // add rho(parent) into the gen-block of the stack
    for (int i = 0; i < m; ++i) {
      felt* row = &A[e][size_t(i) * W + size_t(t.gen) * m];
      for (int j = 0; j < m; ++j) {
        felt x = rh.at(i, j);
        if (x) row[j] = F->add(row[j], x);
      }
    }
    live_bytes += (long long)m * W * 2;
    if (live_bytes > opt.mem_cap_bytes)
      throw ResourceError("cohomology memory cap exceeded");
  };

  // edge constraint rows: A_h + rho(h) P_s - A_to
  auto edge_rows = [&](int h, int s, int to) {
    std::vector<std::vector<felt>> rows(m, std::vector<felt>(W, 0));
    const Mat& rh = imgs[h];
    for (int i = 0; i < m; ++i) {
      auto& row = rows[i];
      for (int c = 0; c < W; ++c) row[c] = F->sub(A[h][size_t(i) * W + c], A[to][size_t(i) * W + c]);
      felt* blk = &row[size_t(s) * m];
      for (int j = 0; j < m; ++j) blk[j] = F->add(blk[j], rh.at(i, j));
    }
    return rows;
  };

  bool verify_mode = false;
  int since_growth = 0;
  std::vector<std::vector<felt>> cand;       // candidate Z^1 basis
  std::vector<std::vector<felt>> D;          // D[e]: m x nb column-major per cand
  auto rebuild_candidates = [&](int upto_elem) {
    cand = constraints.nullspace();
    int nb = int(cand.size());
    D.assign(N, {});
    D[0].assign(size_t(m) * nb, 0);
    for (int e = 1; e <= upto_elem; ++e) {
      const auto& t = G.tree[e];
      D[e] = D[t.parent];
      const Mat& rh = imgs[t.parent];
      for (int c = 0; c < nb; ++c) {
        const felt* us = &cand[c][size_t(t.gen) * m];
        for (int i = 0; i < m; ++i) {
          felt acc = 0;
          for (int j = 0; j < m; ++j) {
            felt x = rh.at(i, j);
            if (x && us[j]) acc = F->add(acc, F->mul(x, us[j]));
          }
          if (acc) D[e][size_t(i) * nb + c] = F->add(D[e][size_t(i) * nb + c], acc);
        }
      }
    }
    live_bytes += (long long)N * m * nb * 2;
    if (live_bytes > opt.mem_cap_bytes)
      throw ResourceError("cohomology memory cap exceeded");
  };

  int e_sweep = 0;
  for (e_sweep = 0; e_sweep < N; ++e_sweep) {
    if (e_sweep > 0 && !verify_mode) build_A(e_sweep);
    if (verify_mode && e_sweep > 0) {
      // propagate candidate values along the tree edge into e_sweep
      const auto& t = G.tree[e_sweep];
      int nb = int(cand.size());
      D[e_sweep] = D[t.parent];
      const Mat& rh = imgs[t.parent];
      for (int c = 0; c < nb; ++c) {
        const felt* us = &cand[c][size_t(t.gen) * m];
        for (int i = 0; i < m; ++i) {
          felt acc = 0;
          for (int j = 0; j < m; ++j) {
            felt x = rh.at(i, j);
            if (x && us[j]) acc = F->add(acc, F->mul(x, us[j]));
          }
          if (acc) D[e_sweep][size_t(i) * nb + c] = F->add(D[e_sweep][size_t(i) * nb + c], acc);
        }
      }
    }
    for (auto [from, s, to] : edges_at[e_sweep]) {
      if (!verify_mode) {
        bool grew = false;
        for (auto& row : edge_rows(from, s, to))
          if (constraints.insert(std::move(row))) grew = true;
        since_growth = grew ? 0 : since_growth + 1;
        if (constraints.rank() == target_rank) {
          // Z^1 = B^1: every coboundary satisfies all remaining edges
          out.z1_dim = out.b1_dim;
          out.h1_dim = 0;
          return out;
        }
        if (since_growth >= opt.plateau_edges) {
          verify_mode = true;
          rebuild_candidates(e_sweep);
          for (auto& a : A) {  // A maps are not needed past this point
            if (!a.empty()) live_bytes -= (long long)m * W * 2;
            a = {};
          }
        }
      } else {
        // check D(to) == D(from) + rho(from) * u_s for every candidate
        int nb = int(cand.size());
        const Mat& rh = imgs[from];
        std::vector<int> bad;
        for (int c = 0; c < nb && bad.empty(); ++c) {
          const felt* us = &cand[c][size_t(s) * m];
          for (int i = 0; i < m; ++i) {
            felt acc = D[from][size_t(i) * nb + c];
            for (int j = 0; j < m; ++j) {
              felt x = rh.at(i, j);
              if (x && us[j]) acc = F->add(acc, F->mul(x, us[j]));
            }
            if (acc != D[to][size_t(i) * nb + c]) { bad.push_back(c); break; }
          }
        }
        if (!bad.empty()) {
          // fold this edge into the constraint system and restart candidates.
          // A maps are gone; fall back to direct cocycle filtering: keep the
          // candidates that satisfy the edge, which is exactly the kernel of
          // the violated linear map on the candidate space.
          int nb2 = int(cand.size());
          RowSpace viol(F, nb2);
          for (int i = 0; i < m; ++i) {
            std::vector<felt> row(nb2, 0);
            bool nonzero = false;
            for (int c = 0; c < nb2; ++c) {
              const felt* us = &cand[c][size_t(s) * m];
              felt acc = F->sub(D[from][size_t(i) * nb2 + c], D[to][size_t(i) * nb2 + c]);
              for (int j = 0; j < m; ++j) {
                felt x = rh.at(i, j);
                if (x && us[j]) acc = F->add(acc, F->mul(x, us[j]));
              }
              row[c] = acc;
              if (acc) nonzero = true;
            }
            if (nonzero) viol.insert(std::move(row));
          }
          auto keep = viol.nullspace();  // combinations that satisfy the edge
          // new candidates = keep-combinations of old; recompute D the same way
          std::vector<std::vector<felt>> newcand;
          for (const auto& comb : keep) {
            std::vector<felt> u(W, 0);
            for (int c = 0; c < nb2; ++c) {
              if (comb[c] == 0) continue;
              for (int t2 = 0; t2 < W; ++t2)
                u[t2] = F->add(u[t2], F->mul(comb[c], cand[c][t2]));
            }
            newcand.push_back(std::move(u));
          }
          int nb3 = int(newcand.size());
          std::vector<std::vector<felt>> newD(N);
          for (int e2 = 0; e2 <= e_sweep; ++e2) {
            if (D[e2].empty() && e2 != 0) continue;
            newD[e2].assign(size_t(m) * nb3, 0);
            for (int c3 = 0; c3 < nb3; ++c3) {
              // column c3 = comb over old columns
              const auto& comb = keep[c3];
              for (int i = 0; i < m; ++i) {
                felt acc = 0;
                for (int c = 0; c < nb2; ++c)
                  if (comb[c] && D[e2][size_t(i) * nb2 + c])
                    acc = F->add(acc, F->mul(comb[c], D[e2][size_t(i) * nb2 + c]));
                newD[e2][size_t(i) * nb3 + c3] = acc;
              }
            }
          }
          cand = std::move(newcand);
          D = std::move(newD);
        }
      }
    }
    if (!verify_mode) {
      for (int dead : free_at[e_sweep]) {
        if (!A[dead].empty()) {
          live_bytes -= (long long)m * W * 2;
          A[dead] = {};
        }
      }
    }
  }

  if (!verify_mode) {
    cand = constraints.nullspace();
  }
  out.z1_dim = int(cand.size());
  out.h1_dim = out.z1_dim - out.b1_dim;
  // complement of B^1 inside Z^1
  RowSpace span(F, W);
  for (const auto& b : bspace.basis()) span.insert(b);
  for (const auto& u : cand) {
    if (span.insert(u)) out.basis.push_back(u);
  }
  if (int(out.basis.size()) != out.h1_dim)
    throw ResourceError("cocycle space bookkeeping mismatch");
  return out;
}

Rep hom_module(const Rep& v, const Rep& w) {
  if (!v.same_group(w)) throw RepError("ext1 over different groups");
  std::vector<Mat> imgs;
  for (size_t i = 0; i < v.images.size(); ++i)
    imgs.push_back(mat_kron(v.images[i], mat_transpose(*mat_inverse(w.images[i]))));
  return Rep{v.G, v.dim * w.dim, std::move(imgs),
             "hom(" + w.label + "," + v.label + ")"};
}

CocycleSpace ext1(const Rep& v, const Rep& w, const CohomOptions& opt) {
  return h1(hom_module(v, w), opt);
}

bool verify_cocycle(const Rep& v, const std::vector<felt>& cocycle) {
  const auto& G = *v.G;
  const FieldPtr F = v.field();
  const int m = v.dim;
  if (int(cocycle.size()) != m * G.ngens()) return false;
  auto imgs = all_images(v);
  const long long N = G.size();
  // d(e) per element along the tree
  std::vector<std::vector<felt>> d(N);
  d[0].assign(m, 0);
  for (int e = 1; e < N; ++e) {
    const auto& t = G.tree[e];
    std::vector<felt> us(cocycle.begin() + size_t(t.gen) * m,
                         cocycle.begin() + size_t(t.gen + 1) * m);
    auto add = mat_apply(imgs[t.parent], us);
    d[e] = d[t.parent];
    for (int i = 0; i < m; ++i) d[e][i] = F->add(d[e][i], add[i]);
  }
  for (const auto& ed : G.nontree) {
    std::vector<felt> us(cocycle.begin() + size_t(ed.gen) * m,
                         cocycle.begin() + size_t(ed.gen + 1) * m);
    auto add = mat_apply(imgs[ed.from], us);
    for (int i = 0; i < m; ++i)
      if (F->add(d[ed.from][i], add[i]) != d[ed.to][i]) return false;
  }
  return true;
}

}  // namespace repcheck
