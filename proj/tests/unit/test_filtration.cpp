#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ftors/errors.hpp"
#include "ftors/ext_pairs.hpp"
#include "ftors/filtration.hpp"

using namespace ftors;

namespace {

std::vector<Representation> triangle_cycle() {
  const QuiverPtr q = share(parse_quiver("vertices 3; arrow 1 2; arrow 2 3; arrow 1 3"));
  const auto c = construct_cycle_pair(q, 5);
  return {c.x, c.y};
}

}  // namespace

TEST_CASE("Ext-cycle conditions") {
  const auto cycle = triangle_cycle();
  CHECK(ext_cycle_violation(cycle).empty());
  CHECK_FALSE(ext_cycle_violation({cycle[0]}).empty());
  CHECK_FALSE(ext_cycle_violation({cycle[0], cycle[0]}).empty());
  Rng rng(0);
  CHECK_THROWS_AS(filtration_strata({cycle[0]}, 3, rng), PreconditionError);
}

TEST_CASE("relative Loewy length of cycle modules and serial objects") {
  Rng rng(0);
  const auto cycle = triangle_cycle();
  CHECK(relative_loewy_length(cycle[0], cycle) == 1);
  const FiltrationUniverse u = filtration_strata(cycle, 3, rng);
  REQUIRE(u.serial.size() == 3);
  for (int t = 1; t <= 3; ++t) CHECK(relative_loewy_length(u.serial[t - 1], cycle) == t);
  for (const auto& o : u.objects) {
    CHECK(o.loewy_length >= 1);
    CHECK(o.loewy_length <= 3);
  }
  const SubQuotient rad = relative_radical(u.serial[1], cycle);
  CHECK(rad.sub.total_dim() == cycle[0].total_dim());
}

TEST_CASE("no-cover evidence on the triangle pair") {
  Rng rng(0);
  const NoCoverEvidence e = no_cover_evidence(triangle_cycle(), 3, rng);
  CHECK(e.ok());
  REQUIRE(e.witnesses.size() == 2);
  for (const auto& w : e.witnesses) {
    CHECK_FALSE(w.generated);
    CHECK(w.trace_total_dim < w.witness_total_dim);
  }
  CHECK(e.loewy_counterexamples == 0);
  CHECK(e.loewy_checks > 0);
  CHECK(evidence_to_json(e).at("ok") == true);
}
