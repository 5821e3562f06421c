#pragma once

#include <cstdint>
#include <vector>

#include "ftors/quiver.hpp"

namespace ftors {

using DimVector = std::vector<int>;
using IntMatrix = std::vector<std::vector<long long>>;

/// E with E[i][i] = 1 and E[i][j] = -(sum of first valuation components of
/// arrows i -> j). <x, y> = x^T E y.
IntMatrix euler_matrix(const Quiver& q);

/// Generalized Cartan matrix: C[i][i] = 2, C[i][j] = -(a-sum over i->j)
/// - (b-sum over j->i). Equals E + E^T for path algebras.
IntMatrix cartan_matrix(const Quiver& q);

/// Fraction-free (Bareiss) determinant.
long long determinant(IntMatrix m);

long long euler_form(const Quiver& q, const DimVector& x, const DimVector& y);
/// Tits form <x, x>.
long long tits_form(const Quiver& q, const DimVector& x);

/// Phi = -E^{-1} E^T on column vectors, so that dim(tau M) = Phi(dim M) for
/// indecomposable non-projective M. Entries may be negative.
std::vector<long long> coxeter_transform(const Quiver& q, const std::vector<long long>& x);
std::vector<long long> inverse_coxeter_transform(const Quiver& q, const std::vector<long long>& x);
IntMatrix coxeter_matrix(const Quiver& q);

/// All positive roots of a Dynkin path-algebra quiver (Tits form value 1).
/// Sorted by total dimension, then lexicographically.
std::vector<DimVector> positive_roots(const Quiver& q);

/// Primitive positive generator of the radical of the Cartan form; requires
/// Euclidean type.
DimVector null_root(const Quiver& q);

/// <delta, x>. Negative on preprojectives, zero on regular modules,
/// positive on preinjectives.
long long defect(const Quiver& q, const DimVector& x);

/// Simple reflection s_v on dimension vectors (path-algebra case).
std::vector<long long> simple_reflection(const Quiver& q, int v, const std::vector<long long>& x);

int total_dimension(const DimVector& x);

}  // namespace ftors
