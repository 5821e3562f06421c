#pragma once

#include <vector>

#include "ftors/representation.hpp"

namespace ftors {

/// Mouth of a non-homogeneous tube: simples[i + 1] = tau(simples[i]),
/// cyclically, so Ext(simples[i], simples[i + 1]) != 0. simples[0] has the
/// lexicographically smallest dimension vector.
struct Tube {
  int rank = 0;
  std::vector<Representation> simples;
};

/// Regular simples of every tube of rank >= 2 of a Euclidean quiver with at
/// least three vertices. Candidates are real roots below the null root with
/// defect 0; each is realized by a sampled exceptional representation (thin
/// identity representation as fallback) and grouped into tau-orbits whose
/// dimension vectors add up to the null root. Throws Inconclusive if a
/// candidate can be realized neither way.
std::vector<Tube> find_regular_simples(const QuiverPtr& q, int p, Rng& rng);

struct SerialModule {
  Representation module;   // Y, filtered by simples[0], ..., simples[r-2] from the top
  Representation partner;  // simples[r-1]
};

/// Iterated nonsplit extension with top simples[0] and socle simples[r-2];
/// with the last simple it forms an Ext-pair. Throws std::logic_error if an
/// extension space is unexpectedly zero.
SerialModule tube_serial_module(const Tube& t);

}  // namespace ftors
