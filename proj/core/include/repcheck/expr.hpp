#pragma once

// Module-expression DSL over a catalog instance:
//   expr := name | natural | trivial(n) | dual(e) | tensor(e,f) | sym(b,e)
//         | wedge2(e) | twist(e,i) | induce(H,e) | sub(e,basis) | quot(e,basis)
//         | ad(e) | adq(e) | dsum(e,f) | ext(e,f,i)
// basis := [[int,...],...]   (column vectors, entries reduced mod p)
// ext(e,f,i) materializes the i-th basis cocycle of Ext^1(e,f), i.e. the
// extension with submodule f and quotient e.

#include "repcheck/catalog.hpp"

namespace repcheck {

class ExprError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Rep rep_build(const std::string& expr, const CatalogInstance& inst,
              const CohomOptions& opt = {});

}  // namespace repcheck
