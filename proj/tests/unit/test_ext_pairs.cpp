#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ftors/ar_finite.hpp"
#include "ftors/decompose.hpp"
#include "ftors/errors.hpp"
#include "ftors/ext_pairs.hpp"

using namespace ftors;

namespace {

void check_certificate(const ExtPairCertificate& c) {
  const PairCheck check = verify_ext_pair(c.x, c.y);
  CHECK(check.ok());
  CHECK(check.dims.end_x == 1);
  CHECK(check.dims.end_y == 1);
  CHECK(check.dims.ext_xx == 0);
  CHECK(check.dims.ext_yy == 0);
  CHECK(check.dims.hom_xy == 0);
  CHECK(check.dims.hom_yx == 0);
  CHECK(check.dims.ext_xy > 0);
  CHECK(check.dims.ext_yx > 0);
}

}  // namespace

TEST_CASE("cycle construction on an acyclic triangle") {
  const QuiverPtr q = share(parse_quiver("vertices 3; arrow 1 2; arrow 2 3; arrow 1 3"));
  const auto c = construct_cycle_pair(q, 5);
  CHECK(c.construction == "cycle");
  check_certificate(c);
}

TEST_CASE("cycle construction on a longer cycle with a tail") {
  const QuiverPtr q = share(parse_quiver("vertices 5; arrow 1 2; arrow 2 3; arrow 4 3; arrow 1 4; arrow 3 5"));
  Rng rng(0);
  const auto c = find_ext_pair(q, 5, rng);
  check_certificate(c);
  CHECK(c.x.quiver() == *q);
}

TEST_CASE("double arrows in a row") {
  const QuiverPtr q = share(parse_quiver("vertices 3; arrow 1 2; arrow 1 2; arrow 2 3; arrow 2 3"));
  const auto c = construct_double_double_pair(q, 5);
  CHECK(c.construction == "double-double");
  check_certificate(c);
}

TEST_CASE("double then single arrow, with the Kronecker quotient facts") {
  const QuiverPtr q = share(parse_quiver("vertices 3; arrow 1 2; arrow 1 2; arrow 2 3"));
  const auto c = construct_double_single_pair(q, 5);
  CHECK(c.construction == "double-single");
  check_certificate(c);
  REQUIRE(c.kronecker_facts.has_value());
  CHECK(c.kronecker_facts->quotient_matches);
  CHECK(c.kronecker_facts->quotient_dims == c.kronecker_facts->translate_dims);
}

TEST_CASE("tube construction on an inward D4 extended") {
  Rng rng(0);
  const QuiverPtr q = share(parse_quiver("vertices 5; arrow 1 5; arrow 2 5; arrow 3 5; arrow 4 5"));
  const auto c = find_ext_pair(q, 5, rng);
  CHECK(c.construction == "tube");
  check_certificate(c);
}

TEST_CASE("wild and tree-shaped inputs") {
  Rng rng(0);
  for (const char* text : {"vertices 6; arrow 1 6; arrow 2 6; arrow 3 6; arrow 4 6; arrow 5 6",
                           "vertices 5; arrow 1 2; arrow 2 3; arrow 3 4; arrow 3 5; arrow 1 2"}) {
    CAPTURE(text);
    const QuiverPtr q = share(parse_quiver(text));
    check_certificate(find_ext_pair(q, 5, rng));
  }
}

TEST_CASE("two-vertex quivers are outside the search") {
  Rng rng(0);
  const QuiverPtr q = share(parse_quiver("vertices 2; arrow 1 2; arrow 1 2; arrow 1 2"));
  CHECK_THROWS_AS(find_ext_pair(q, 5, rng), PreconditionError);
}

TEST_CASE("verification reports the first failing condition") {
  const QuiverPtr q = share(parse_quiver("vertices 2; arrow 1 2; arrow 1 2"));
  const auto s1 = standard_module(q, StandardKind::Simple, 0, 5);
  const auto s2 = standard_module(q, StandardKind::Simple, 1, 5);
  const PairCheck check = verify_ext_pair(s1, s2);
  CHECK_FALSE(check.ok());
  CHECK(check.dims.ext_xy == 2);
  CHECK(check.dims.ext_yx == 0);
  CHECK(check.failure.find("Ext") != std::string::npos);
}

TEST_CASE("Dynkin quivers have no Ext-pairs") {
  Rng rng(0);
  const QuiverPtr q = share(parse_quiver("vertices 3; arrow 1 2; arrow 3 2"));
  CHECK_THROWS_AS(find_ext_pair(q, 5, rng), PreconditionError);
  const ARQuiver ar = knit_ar_quiver(q, 5);
  for (const auto& x : ar.nodes)
    for (const auto& y : ar.nodes) CHECK_FALSE(verify_ext_pair(x.module, y.module).ok());
}

TEST_CASE("certificate JSON carries the recomputed dimensions") {
  const QuiverPtr q = share(parse_quiver("vertices 3; arrow 1 2; arrow 2 3; arrow 1 3"));
  const auto c = construct_cycle_pair(q, 5);
  const auto j = certificate_to_json(c);
  CHECK(j.at("construction") == "cycle");
  CHECK(j.at("dimensions") == pair_dimensions_to_json(c.dims));
}
