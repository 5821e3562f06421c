#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ftors/representation.hpp"

namespace ftors {

struct ARNode {
  DimVector root;
  Representation module;
  int tau_orbit = 0;  // vertex i: the node is tau^{-step} P(i)
  int step = 0;
};

struct ARArrow {
  int from = 0;
  int to = 0;
  int multiplicity = 1;
};

/// Auslander-Reiten quiver of a representation-finite path algebra.
/// Nodes are ordered by step, then by the topological position of the
/// orbit vertex; node identity is the dimension vector.
struct ARQuiver {
  QuiverPtr quiver;
  int prime = 5;
  std::vector<ARNode> nodes;
  std::vector<ARArrow> arrows;
  std::vector<std::pair<int, int>> tau_pairs;  // (node, tau of node)

  std::optional<int> find(const DimVector& root) const;
};

/// Knits the preprojective component starting from the projectives by
/// repeated inverse Coxeter functors; in Dynkin type it is the whole AR
/// quiver. Throws PreconditionError on non-Dynkin input and
/// std::logic_error if the result disagrees with the root system.
ARQuiver knit_ar_quiver(const QuiverPtr& q, int p);

/// The unique indecomposable of dimension vector r.
const Representation& indecomposable_for_root(const ARQuiver& ar, const DimVector& r);

/// DOT with solid irreducible maps and dashed tau edges; labels are
/// dimension vectors.
std::string emit_dot(const ARQuiver& ar);

/// Mesh check: dim X + dim tau^{-1}X equals the sum over the middle of the mesh.
bool meshes_consistent(const ARQuiver& ar);

}  // namespace ftors
