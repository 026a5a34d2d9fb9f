#pragma once

// Representations of an enumerated group and the module constructions used
// by the verification suite: dual, tensor, symmetric/exterior powers,
// Frobenius twist, induction, sub/quotient, adjoint and adjoint-mod-scalars,
// direct sum. All basis conventions are fixed and documented per function.

#include <string>
#include <vector>

#include "repcheck/group.hpp"

namespace repcheck {

class RepError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Rep {
  GroupPtr G;
  int dim = 0;
  std::vector<Mat> images;  // one per abstract generator of G
  std::string label;

  const FieldPtr& field() const { return images[0].F; }
  bool same_group(const Rep& o) const { return G.get() == o.G.get(); }
};

// Verifies the generator assignment extends to a homomorphism: images are
// propagated along the BFS tree and every non-tree Cayley edge is checked.
// Throws RepError on a closure violation.
Rep rep_from_gens(GroupPtr G, std::vector<Mat> images, std::string label = {});

// Image of every group element, indexed like G->elems (tree propagation).
std::vector<Mat> all_images(const Rep& v);
Mat image_of(const Rep& v, int elem);

Rep rep_natural(GroupPtr G);
Rep rep_trivial(GroupPtr G, int n);
Rep rep_dual(const Rep& v);                     // inverse-transpose images
Rep rep_tensor(const Rep& v, const Rep& w);     // basis e_i(x)f_j, (i,j) lex
// Degree-b symmetric power. Basis: monomials in graded order, exponent
// vectors descending lexicographic (for dim 2: X^b, X^{b-1}Y, ..., Y^b).
Rep rep_sym(int b, const Rep& v);
Rep rep_wedge2(const Rep& v);                   // basis e_i ^ e_j, i < j, lex
Rep rep_twist(const Rep& v, int i);             // entrywise Frobenius^i
Rep rep_dsum(const Rep& v, const Rep& w);
// Submodule spanned by the given column vectors; throws if not invariant.
Rep rep_sub(const Rep& v, const std::vector<std::vector<felt>>& basis);
Rep rep_quot(const Rep& v, const std::vector<std::vector<felt>>& basis);
// End(V) with action f -> rho(g) f rho(g)^-1; basis vec(f) row-major.
Rep rep_ad(const Rep& v);
// ad(v) / span(identity endomorphism); defined for every v.
Rep rep_adq(const Rep& v);

// Induction from a subgroup. H is the membership view inside G; Hgrp is the
// same subgroup enumerated standalone (element matrices coincide), and rho
// is a representation of Hgrp. Basis: (coset slot, inner index) lex over the
// deterministic transversal.
Rep rep_induce(GroupPtr G, const SubgroupRef& H, GroupPtr Hgrp, const Rep& rho);

// Fixed vector of the identity endomorphism inside ad(v): vec(I).
std::vector<felt> identity_vec(const Rep& v);

// Base change GF(q) -> GF(q^m): re-enumerates the group over the larger
// field and maps the images entrywise through the least-root embedding.
Rep extend_scalars(const Rep& v, int m);

// Entry embedding helper (least root of the small modulus in the big field).
felt embed_elt(const FieldCtx& small, const FieldCtx& big, felt root, felt a);
felt embedding_root(const FieldCtx& small, const FieldCtx& big);

}  // namespace repcheck
