#pragma once

#include "ftors/representation.hpp"

namespace ftors {

/// BGP reflection functor at a sink (kernel construction) or source
/// (cokernel construction). The result lives over reflect_at(q, v); pass
/// `target` to reuse an existing pointer to that quiver. Summands S(v) are
/// annihilated.
Representation reflection_functor(const Representation& m, int v, QuiverPtr target = nullptr);

/// C+ : reflections at the vertices of a sink-admissible order. For
/// indecomposable non-projective M this is tau M; it kills projectives.
Representation coxeter_functor_plus(const Representation& m);
/// C- : dual; tau^{-1} on indecomposable non-injectives, kills injectives.
Representation coxeter_functor_minus(const Representation& m);

/// Auslander-Reiten translate. Throws PreconditionError for projective or
/// decomposable input.
Representation ar_translate(const Representation& m);
Representation ar_translate_inverse(const Representation& m);

}  // namespace ftors
