#pragma once

// Explicit enumeration of a finite matrix group from generators: BFS over
// right multiplication, Cayley table, spanning tree and non-tree edge list.
// The non-tree edges are the backbone of the cohomology solver.

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "repcheck/mat.hpp"

namespace repcheck {

class GroupError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct GroupData;
using GroupPtr = std::shared_ptr<const GroupData>;

struct SubgroupRef {
  const GroupData* parent = nullptr;
  std::vector<std::uint8_t> member;  // bitmask over parent element indices
  std::vector<int> gens;             // generating element indices
  long long size = 0;

  bool contains(int idx) const { return member[idx >> 3] & (1 << (idx & 7)); }
};

struct GroupData {
  std::vector<Mat> gens;
  std::vector<Mat> elems;  // index 0 = identity
  std::unordered_map<std::string, int> index;  // canonical bytes -> index
  // cayley[e * ngens + g] = index of elems[e] * gens[g]
  std::vector<int> cayley;
  struct TreeEdge { int parent; int gen; };
  std::vector<TreeEdge> tree;  // tree[e] for e >= 1; BFS parent edge
  struct Edge { int from; int gen; int to; };
  std::vector<Edge> nontree;
  std::vector<long long> orders;  // element orders, filled eagerly

  int ngens() const { return int(gens.size()); }
  long long size() const { return (long long)elems.size(); }
  int dim() const { return gens.empty() ? 0 : gens[0].rows; }
  const FieldPtr& field() const { return gens[0].F; }

  int cay(int e, int g) const { return cayley[size_t(e) * gens.size() + g]; }
  int lookup(const Mat& m) const;  // -1 if not a member
  // product of two elements by walking j's generator word from i
  int product(int i, int j) const;
  int inverse(int i) const;

  // word of tree-edge generators from identity to element e
  std::vector<int> word_of(int e) const;
};

// Deterministic BFS enumeration (FIFO queue, generators in the given order).
// Throws GroupError on a singular generator or when `cap` is exceeded.
GroupPtr enumerate_group(const std::vector<Mat>& gens, long long cap = 200'000);

long long element_order(const GroupData& G, int idx);

// Smallest subgroup containing every element of p-power order (p = field
// characteristic); always normal.
SubgroupRef gplus(const GroupData& G);

SubgroupRef subgroup_generated(const GroupData& G, const std::vector<int>& gens);
SubgroupRef whole_group(const GroupData& G);

// Left coset representatives of H in G, identity first, least index per coset.
std::vector<int> transversal(const GroupData& G, const SubgroupRef& H);

}  // namespace repcheck
