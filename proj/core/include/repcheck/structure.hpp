#pragma once

// Constructive side of the indecomposable-module verification: materialize
// extensions from cocycles, classify invariant bilinear forms, test
// projectivity against a complete simple list, assemble Loewy reports.

#include "repcheck/cohomology.hpp"
#include "repcheck/meataxe.hpp"

namespace repcheck {

// Extension 0 -> v -> E -> w -> 0 from a cocycle of ext1(v, w). Generator
// images are block matrices [[rho_v(s), d(s) rho_w(s)], [0, rho_w(s)]];
// the result re-passes the Rep closure check. The zero cocycle yields the
// split extension.
Rep build_extension(const Rep& v, const Rep& w, const std::vector<felt>& cocycle);

enum class FormType { symmetric, alternating, none, both };

struct FormSpace {
  std::vector<Mat> basis;  // B with rho(g)^T B rho(g) = B for all generators
  int sym_dim = 0;
  int alt_dim = 0;
  int degenerate_dim = 0;  // dim of the span of the degenerate forms
  bool nondeg_sym = false;
  bool nondeg_alt = false;
  FormType type = FormType::none;
};

// Requires characteristic p > 2 (explicit error at p = 2) and form-space
// dimension <= 4 (projective enumeration of the degenerate locus).
FormSpace invariant_forms(const Rep& v);

// True iff ext1(v, S) = 0 for every simple S. `simples` must be a complete
// irredundant list for the group; irreducibility and pairwise
// non-isomorphism are re-checked and violations throw.
bool is_projective(const Rep& v, const std::vector<Rep>& simples,
                   const CohomOptions& opt = {});

struct LoewyReport {
  std::vector<std::vector<std::string>> socle_layers;    // ascending
  std::vector<std::vector<std::string>> radical_layers;  // descending heads
  bool uniserial = false;
  bool self_dual = false;
  std::optional<bool> projective;
};

// Labels factors by isomorphism against the named modules in `env`
// (falling back to "dim<d>").
LoewyReport loewy_selfdual(const Rep& v,
                           const std::vector<std::pair<std::string, Rep>>& env = {},
                           std::uint64_t seed = 0);

}  // namespace repcheck
