#pragma once

#include <vector>

#include "ftors/representation.hpp"

namespace ftors {

/// A 1-cocycle representing a class in Ext(B, A): one A_t x B_s matrix per
/// arrow s -> t. For path algebras every tuple is a cocycle; classes are
/// taken modulo coboundaries A_a g_s - g_t B_a.
using Cocycle = std::vector<FpMatrix>;

/// Cocycles whose classes form a basis of Ext(B, A). Each is a standard
/// coordinate vector outside the coboundary space, so the list is canonical.
std::vector<Cocycle> ext_basis(const Representation& b, const Representation& a);

/// Middle term E of 0 -> A -> E -> B -> 0 for the class of c:
/// E_v = A_v + B_v, E_a = [[A_a, c_a], [0, B_a]].
Representation extension_module(const Representation& b, const Representation& a, const Cocycle& c);

Cocycle combine(const std::vector<Cocycle>& basis, const std::vector<int>& coeffs, const Representation& b,
                const Representation& a);

enum class ExtensionSide { Above, Below };

/// Above: 0 -> M -> E -> S(i)^e -> 0 with e = dim Ext(S(i), M), realizing a
/// basis of that space, so Ext(S(i), E) = 0. Below: 0 -> S(i)^e -> E -> M -> 0
/// with Ext(E, S(i)) = 0. Returns M unchanged when the Ext space is zero.
Representation universal_extension(const Representation& m, int vertex, ExtensionSide side);

inline constexpr long long kDefaultMiddleTermCap = 3125;

/// Middle terms of all extensions of B by A, one per class up to scalars,
/// deduplicated up to isomorphism; the split term A + B comes first.
/// Throws CapExceeded when p^e > cap.
std::vector<Representation> middle_terms(const Representation& b, const Representation& a, Rng& rng,
                                         long long cap = kDefaultMiddleTermCap);

}  // namespace ftors
