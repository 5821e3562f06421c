#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ftors/ar_finite.hpp"
#include "ftors/decompose.hpp"

using namespace ftors;

TEST_CASE("decomposition recovers known summands") {
  Rng rng(21);
  const QuiverPtr q = share(parse_quiver("vertices 4; arrow 1 4; arrow 2 4; arrow 3 4"));
  const ARQuiver ar = knit_ar_quiver(q, 5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> picks;
    std::vector<Representation> parts;
    for (int k = 0; k < 3; ++k) {
      const int i = static_cast<int>(rng.below(ar.nodes.size()));
      picks.push_back(i);
      parts.push_back(ar.nodes[i].module);
    }
    const Representation m = random_base_change(direct_sum(parts, q, 5), rng);
    const auto summands = decompose(m, rng);
    int total = 0;
    for (const auto& s : summands) {
      total += s.multiplicity;
      CHECK(is_indecomposable(s.module, rng));
      const auto node = ar.find(s.module.dims());
      REQUIRE(node.has_value());
      CHECK(is_isomorphic(s.module, ar.nodes[*node].module, rng));
    }
    CHECK(total == 3);
  }
}

TEST_CASE("indecomposability and isomorphism on the Kronecker quiver") {
  Rng rng(8);
  const QuiverPtr q = share(parse_quiver("vertices 2; arrow 1 2; arrow 1 2"));
  const auto one = FpMatrix::from_rows({{1}}, 5);
  const auto zero = FpMatrix::from_rows({{0}}, 5);
  const Representation at0(q, 5, {1, 1}, {one, zero});
  const Representation at1(q, 5, {1, 1}, {one, one});
  CHECK(is_indecomposable(at0, rng));
  CHECK_FALSE(is_isomorphic(at0, at1, rng));
  CHECK(is_isomorphic(at1, random_base_change(at1, rng), rng));
  const Representation both = direct_sum(at0, at1);
  CHECK_FALSE(is_indecomposable(both, rng));
  CHECK(decompose(both, rng).size() == 2);
  const Representation twice = direct_sum(at0, at0);
  const auto d = decompose(twice, rng);
  REQUIRE(d.size() == 1);
  CHECK(d[0].multiplicity == 2);
  CHECK(is_brick(at0));
  CHECK_FALSE(is_exceptional(at0, rng));
  // regular (1,1) modules have self-extensions but are bricks
  const auto preds = module_predicates(at0, at1, rng);
  CHECK(preds.is_brick);
  CHECK(preds.orthogonal);
}

TEST_CASE("normal form drops generated summands") {
  Rng rng(5);
  const QuiverPtr q = share(parse_quiver("vertices 2; arrow 1 2"));
  const Representation p1 = standard_module(q, StandardKind::Projective, 0, 5);
  const Representation s1 = standard_module(q, StandardKind::Simple, 0, 5);
  const Representation s2 = standard_module(q, StandardKind::Simple, 1, 5);
  const NormalForm a = normalize(direct_sum(p1, s1), rng);
  REQUIRE(a.summands.size() == 1);
  CHECK(a.summands[0].dims() == DimVector{1, 1});
  const NormalForm b = normalize(direct_sum(s1, s2), rng);
  CHECK(b.summands.size() == 2);
  const NormalForm c = normalize(power(s2, 3), rng);
  REQUIRE(c.summands.size() == 1);
  CHECK(c.module.dims() == DimVector{0, 1});
}
