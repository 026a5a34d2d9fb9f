#pragma once

// H^0, H^1 and Ext^1 via a presentation-free cocycle solver on the Cayley
// graph. A cocycle is determined by its values on the generators (m*g
// unknowns); consistency on the non-tree Cayley edges implies consistency on
// all products. Each element e carries a linear map A_e with d(e) = A_e(u),
// propagated along the BFS tree; every non-tree edge contributes m linear
// constraints.

#include "repcheck/rep.hpp"

namespace repcheck {

class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct CocycleSpace {
  int m = 0;       // module dimension
  int gcount = 0;  // generator count
  int h0_dim = 0;
  int b1_dim = 0;  // = m - h0_dim
  int z1_dim = 0;
  int h1_dim = 0;  // = z1_dim - b1_dim
  // Basis of a complement of B^1 in Z^1. Each cocycle is a flat stack of
  // length m*gcount; value on generator s = slice [s*m, s*m + m).
  std::vector<std::vector<felt>> basis;

  std::vector<felt> value_on(const std::vector<felt>& cocycle, int s) const {
    return {cocycle.begin() + size_t(s) * m, cocycle.begin() + size_t(s + 1) * m};
  }
};

struct CohomOptions {
  long long mem_cap_bytes = 512ll << 20;
  // edges without rank growth before switching to candidate verification
  int plateau_edges = 16;
};

// Fixed points: joint kernel of (image - identity) over all generators.
std::vector<std::vector<felt>> h0_basis(const Rep& v);
int h0(const Rep& v);

CocycleSpace h1(const Rep& v, const CohomOptions& opt = {});

// Ext^1(v, w) = H^1 of the module Hom(w, v) with action f -> rho_v f rho_w^-1.
// Cocycle values reshape to (dim v) x (dim w) matrices for the extension
// builder: entry (i, j) of d(s) is value[i * dim w + j].
CocycleSpace ext1(const Rep& v, const Rep& w, const CohomOptions& opt = {});

// The Hom(w, v) module underlying ext1, exposed for reuse.
Rep hom_module(const Rep& v, const Rep& w);

// Re-checks a cocycle (flat stack) against 100% of non-tree edges.
bool verify_cocycle(const Rep& v, const std::vector<felt>& cocycle);

}  // namespace repcheck
