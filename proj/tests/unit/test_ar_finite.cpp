#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "ftors/ar_finite.hpp"
#include "ftors/decompose.hpp"
#include "ftors/errors.hpp"
#include "ftors/reflection.hpp"

using namespace ftors;

TEST_CASE("knitting produces one indecomposable per positive root") {
  Rng rng(1);
  for (const char* text : {"vertices 1", "vertices 2; arrow 1 2", "vertices 3; arrow 1 2; arrow 3 2",
                           "vertices 4; arrow 4 1; arrow 4 2; arrow 4 3",
                           "vertices 5; arrow 1 2; arrow 3 2; arrow 3 4; arrow 5 4"}) {
    CAPTURE(text);
    const QuiverPtr q = share(parse_quiver(text));
    const ARQuiver ar = knit_ar_quiver(q, 5);
    auto roots = positive_roots(*q);
    std::vector<DimVector> dims;
    for (const auto& n : ar.nodes) {
      dims.push_back(n.root);
      CHECK(n.module.dims() == n.root);
      CHECK(is_indecomposable(n.module, rng));
    }
    std::sort(roots.begin(), roots.end());
    std::sort(dims.begin(), dims.end());
    CHECK(dims == roots);
    CHECK(meshes_consistent(ar));
  }
}

TEST_CASE("A2 AR quiver shape and DOT output") {
  const QuiverPtr q = share(parse_quiver("vertices 2; arrow 1 2"));
  const ARQuiver ar = knit_ar_quiver(q, 5);
  CHECK(ar.nodes.size() == 3);
  CHECK(ar.arrows.size() == 2);
  CHECK(ar.tau_pairs.size() == 1);
  const std::string dot = emit_dot(ar);
  CHECK(dot.rfind("digraph ar_quiver", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), '\n') > 3);
  std::size_t dashed = 0;
  for (std::size_t pos = dot.find("dashed"); pos != std::string::npos; pos = dot.find("dashed", pos + 1)) ++dashed;
  CHECK(dashed == 1);
  CHECK(emit_dot(ar) == dot);
}

TEST_CASE("tau pairs agree with the AR translate") {
  Rng rng(2);
  const QuiverPtr q = share(parse_quiver("vertices 4; arrow 1 4; arrow 2 4; arrow 3 4"));
  const ARQuiver ar = knit_ar_quiver(q, 5);
  CHECK(ar.tau_pairs.size() == ar.nodes.size() - 4);
  for (const auto& [node, translate] : ar.tau_pairs)
    CHECK(is_isomorphic(ar_translate(ar.nodes[node].module), ar.nodes[translate].module, rng));
  CHECK(indecomposable_for_root(ar, {1, 1, 1, 2}).dims() == DimVector{1, 1, 1, 2});
}

TEST_CASE("non-Dynkin input is rejected") {
  const QuiverPtr q = share(parse_quiver("vertices 2; arrow 1 2; arrow 1 2"));
  CHECK_THROWS_AS(knit_ar_quiver(q, 5), PreconditionError);
}
