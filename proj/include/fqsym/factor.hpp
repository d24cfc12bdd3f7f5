#ifndef FQSYM_FACTOR_HPP
#define FQSYM_FACTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "fqsym/poly.hpp"
#include "fqsym/version.hpp"

namespace fqsym {

// Unit (the sign) times monic irreducibles with multiplicities, factors
// sorted by (degree, coefficient tuple) so the decomposition is canonical.
struct Factorization {
  FFElem unit{1};
  std::vector<std::pair<Poly, int>> factors;

  Poly reassemble(const FieldCtx& f) const;
};

// Squarefree decomposition, then distinct-degree splitting, then
// equal-degree splitting driven by a seeded generator; identical seeds give
// identical runs.
Factorization factor(const Poly& f, std::uint64_t seed = kDefaultSeed);

}  // namespace fqsym

#endif
