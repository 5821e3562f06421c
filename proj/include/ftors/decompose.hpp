#pragma once

#include <vector>

#include "ftors/representation.hpp"

namespace ftors {

/// Retry budget for randomized Fitting splitting and isomorphism search.
inline constexpr int kRandomBudget = 40;

struct Summand {
  Representation module;
  int multiplicity = 1;
};

/// Krull-Schmidt decomposition by Fitting splitting of random endomorphisms
/// (phi - lambda) for every scalar lambda. A module is declared
/// indecomposable once the budget produced only invertible or nilpotent
/// endomorphisms; when p^{dim End} is small the whole endomorphism ring is
/// enumerated instead. Summands are grouped up to isomorphism and sorted by
/// dimension vector.
std::vector<Summand> decompose(const Representation& m, Rng& rng);

bool is_indecomposable(const Representation& m, Rng& rng);

/// Random-invertible-homomorphism search with invariant prefilters, falling
/// back to matching the indecomposable summands.
bool is_isomorphic(const Representation& x, const Representation& y, Rng& rng);

struct ModulePredicates {
  bool is_brick = false;
  bool is_exceptional = false;
  bool orthogonal = false;
};

ModulePredicates module_predicates(const Representation& x, const Representation& y, Rng& rng);

bool is_brick(const Representation& m);
bool is_exceptional(const Representation& m, Rng& rng);

struct NormalForm {
  Representation module;
  std::vector<Representation> summands;  // pairwise non-isomorphic, none generated by the others
};

/// nu(M): drop indecomposable summands generated by the remaining ones
/// until no summand is; the result is normal and still generates M.
NormalForm normalize(const Representation& m, Rng& rng);

}  // namespace ftors
