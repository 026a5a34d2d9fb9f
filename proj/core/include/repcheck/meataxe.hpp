#pragma once

// Structural analysis of a Rep: irreducibility (Norton's criterion),
// composition factors, hom spaces, socle series, indecomposability.
// Randomized steps take an explicit seed (default 0) and fall back to
// deterministic word enumeration, so results are reproducible.

#include <optional>

#include "repcheck/rep.hpp"

namespace repcheck {

struct IrredResult {
  bool irreducible = false;
  // basis of a proper nonzero invariant subspace when reducible
  std::vector<std::vector<felt>> witness;
};

IrredResult is_irreducible(const Rep& v, std::uint64_t seed = 0);

struct Factor {
  Rep rep;
  int mult = 0;
};
using FactorList = std::vector<Factor>;

// Composition factors grouped by isomorphism class.
FactorList chop(const Rep& v, std::uint64_t seed = 0);

// Basis of G-equivariant maps X: v -> w (matrices with X rho_v = rho_w X).
std::vector<Mat> hom_space(const Rep& v, const Rep& w);

// An invertible equivariant map v -> w, if one exists. Random combinations
// first, exhaustive projective search when q^dim(hom) <= 10^6.
std::optional<Mat> iso(const Rep& v, const Rep& w, std::uint64_t seed = 0);
bool isomorphic(const Rep& v, const Rep& w, std::uint64_t seed = 0);

// Ascending socle layers; layers concatenate to the full dimension.
std::vector<FactorList> socle_series(const Rep& v, std::uint64_t seed = 0);

enum class IndecVerdict { indecomposable, decomposable, uncertified };

struct IndecResult {
  IndecVerdict verdict = IndecVerdict::uncertified;
  int end_dim = 0;
  // invariant complements when decomposable
  std::vector<std::vector<felt>> part_a, part_b;
};

// Certified when dim End <= 6 (exhaustive search of the endomorphism algebra
// for an element with two coprime minimal-polynomial factors); explicit
// uncertified state beyond that.
IndecResult is_indecomposable(const Rep& v, std::uint64_t seed = 0);

// Spin: smallest invariant subspace containing the given vectors (echelon
// column basis).
std::vector<std::vector<felt>> spin(const std::vector<Mat>& gens,
                                    const std::vector<std::vector<felt>>& seeds);

// Matrix polynomial evaluation, Horner.
Mat mat_poly_eval(const Poly& f, const Mat& x);

}  // namespace repcheck
