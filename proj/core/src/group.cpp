#include "repcheck/group.hpp"

#include <algorithm>
#include <deque>

namespace repcheck {

int GroupData::lookup(const Mat& m) const {
  auto it = index.find(m.key());
  return it == index.end() ? -1 : it->second;
}

std::vector<int> GroupData::word_of(int e) const {
  std::vector<int> w;
  while (e != 0) {
    w.push_back(tree[e].gen);
    e = tree[e].parent;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

int GroupData::product(int i, int j) const {
  int e = i;
  for (int g : word_of(j)) e = cay(e, g);
  return e;
}

int GroupData::inverse(int i) const {
  // e^(order-1); orders are small at this scale
  int acc = 0;
  long long ord = orders[i];
  for (long long s = 0; s + 1 < ord; ++s) acc = product(acc, i);
  return acc;
}

GroupPtr enumerate_group(const std::vector<Mat>& gens, long long cap) {
  if (gens.empty()) throw GroupError("no generators");
  if (cap < 1) throw GroupError("cap must be >= 1");
  const int n = gens[0].rows;
  const FieldPtr F = gens[0].F;
  for (const auto& g : gens) {
    if (g.rows != n || g.cols != n) throw GroupError("generator shape mismatch");
    if (!g.F->same(*F)) throw GroupError("generator field context mismatch");
    if (!mat_inverse(g)) throw GroupError("singular generator");
  }
  auto G = std::make_shared<GroupData>();
  G->gens = gens;
  Mat id = Mat::identity(F, n);
  G->elems.push_back(id);
  G->index[id.key()] = 0;
  G->tree.push_back({-1, -1});
  std::deque<int> queue = {0};
  const int ng = int(gens.size());
  // cayley filled as elements are processed
  std::vector<int> cayley;
  cayley.resize(ng, -1);
  while (!queue.empty()) {
    int e = queue.front();
    queue.pop_front();
    for (int g = 0; g < ng; ++g) {
      Mat prod = mat_mul(G->elems[e], gens[g]);
      std::string key = prod.key();
      auto it = G->index.find(key);
      int to;
      if (it == G->index.end()) {
        to = int(G->elems.size());
        if (to >= cap) throw GroupError("enumeration cap exceeded");
        G->index.emplace(std::move(key), to);
        G->elems.push_back(std::move(prod));
        G->tree.push_back({e, g});
        cayley.resize(size_t(to + 1) * ng, -1);
        queue.push_back(to);
      } else {
        to = it->second;
        G->nontree.push_back({e, g, to});
      }
      cayley[size_t(e) * ng + g] = to;
    }
  }
  G->cayley = std::move(cayley);
  // eager order cache via the Cayley table: order of e = steps of the cyclic
  // walk 0 -> e -> e*e -> ...
  const long long N = G->size();
  G->orders.assign(N, 0);
  for (int e = 0; e < N; ++e) {
    int x = e;
    long long ord = 1;
    std::vector<int> word = G->word_of(e);
    while (x != 0) {
      for (int g : word) x = G->cay(x, g);
      ++ord;
      if (ord > N + 1) throw GroupError("order walk failed closure");
    }
    G->orders[e] = e == 0 ? 1 : ord;
  }
  G->orders[0] = 1;
  return G;
}

long long element_order(const GroupData& G, int idx) {
  if (idx < 0 || idx >= G.size()) throw GroupError("invalid element index");
  return G.orders[idx];
}

SubgroupRef subgroup_generated(const GroupData& G, const std::vector<int>& gens) {
  SubgroupRef H;
  H.parent = &G;
  long long N = G.size();
  H.member.assign((N + 7) / 8, 0);
  H.gens = gens;
  auto mark = [&](int i) {
    bool was = H.contains(i);
    H.member[i >> 3] |= std::uint8_t(1 << (i & 7));
    return !was;
  };
  std::deque<int> queue;
  mark(0);
  queue.push_back(0);
  H.size = 1;
  // generator words, so products go through the Cayley table
  std::vector<std::vector<int>> words;
  for (int g : gens) words.push_back(G.word_of(g));
  while (!queue.empty()) {
    int e = queue.front();
    queue.pop_front();
    for (const auto& w : words) {
      int x = e;
      for (int g : w) x = G.cay(x, g);
      if (mark(x)) {
        ++H.size;
        queue.push_back(x);
      }
    }
  }
  return H;
}

SubgroupRef whole_group(const GroupData& G) {
  SubgroupRef H;
  H.parent = &G;
  long long N = G.size();
  H.member.assign((N + 7) / 8, 0xff);
  H.size = N;
  for (int g = 0; g < G.ngens(); ++g) H.gens.push_back(G.cay(0, g));
  return H;
}

SubgroupRef gplus(const GroupData& G) {
  int p = G.field()->p();
  std::vector<int> pgens;
  for (int e = 1; e < G.size(); ++e) {
    long long o = G.orders[e];
    bool ppower = true;
    while (o > 1) {
      if (o % p) { ppower = false; break; }
      o /= p;
    }
    if (ppower) pgens.push_back(e);
  }
  return subgroup_generated(G, pgens);
}

std::vector<int> transversal(const GroupData& G, const SubgroupRef& H) {
  if (H.parent != &G) throw GroupError("subgroup belongs to a different group");
  long long N = G.size();
  std::vector<bool> marked(N, false);
  // collect member list once
  std::vector<int> members;
  for (int i = 0; i < N; ++i)
    if (H.contains(i)) members.push_back(i);
  std::vector<std::vector<int>> words;
  for (int h : members) words.push_back(G.word_of(h));
  std::vector<int> reps;
  for (int e = 0; e < N; ++e) {
    if (marked[e]) continue;
    reps.push_back(e);
    for (const auto& w : words) {
      int x = e;
      for (int g : w) x = G.cay(x, g);
      marked[x] = true;
    }
  }
  return reps;
}

}  // namespace repcheck
