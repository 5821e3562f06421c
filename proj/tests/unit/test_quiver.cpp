#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ftors/errors.hpp"
#include "ftors/quiver.hpp"

using namespace ftors;

TEST_CASE("parsing and canonical arrow order") {
  const Quiver q = parse_quiver("vertices 3; arrow 2 3; arrow 1 2");
  CHECK(q.size() == 3);
  REQUIRE(q.arrows().size() == 2);
  CHECK(q.arrows()[0].source == 0);
  CHECK(q.arrows()[0].target == 1);
  CHECK(q.is_source(0));
  CHECK(q.is_sink(2));
  CHECK(q.topological_order() == std::vector<int>{0, 1, 2});
  CHECK(parse_quiver_any("vertices 2\narrow 1 2\n") == parse_quiver("vertices 2; arrow 1 2"));
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(parse_quiver("vertices 2; arrow 1 2; arrow 2 1"), InvalidQuiver);
  CHECK_THROWS_AS(parse_quiver("vertices 2; arrow 1 1"), InvalidQuiver);
  CHECK_THROWS_AS(parse_quiver("vertices 3; arrow 1 2"), InvalidQuiver);
  CHECK_THROWS_AS(parse_quiver("vertices 2; arrow 1 5"), ParseError);
  CHECK_THROWS_AS(parse_quiver("vertex 2"), ParseError);
  CHECK_THROWS_AS(parse_quiver(""), ParseError);
}

TEST_CASE("classification of small quivers") {
  struct Case {
    const char* text;
    TypeFamily family;
    const char* name;
  };
  const Case cases[] = {
      {"vertices 1", TypeFamily::Dynkin, "A1"},
      {"vertices 2; arrow 1 2", TypeFamily::Dynkin, "A2"},
      {"vertices 3; arrow 2 1; arrow 2 3", TypeFamily::Dynkin, "A3"},
      {"vertices 4; arrow 1 4; arrow 2 4; arrow 3 4", TypeFamily::Dynkin, "D4"},
      {"vertices 6; arrow 1 2; arrow 2 3; arrow 3 4; arrow 4 5; arrow 3 6", TypeFamily::Dynkin, "E6"},
      {"vertices 2; arrow 1 2; arrow 1 2", TypeFamily::Euclidean, "~A1"},
      {"vertices 3; arrow 1 2; arrow 2 3; arrow 1 3", TypeFamily::Euclidean, "~A2"},
      {"vertices 5; arrow 1 5; arrow 2 5; arrow 3 5; arrow 4 5", TypeFamily::Euclidean, "~D4"},
      {"vertices 2; arrow 1 2; arrow 1 2; arrow 1 2", TypeFamily::Wild, "wild"},
      {"vertices 3; arrow 1 2; arrow 1 2; arrow 2 3", TypeFamily::Wild, "wild"},
      {"vertices 6; arrow 1 6; arrow 2 6; arrow 3 6; arrow 4 6; arrow 5 6", TypeFamily::Wild, "wild"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    const QuiverType t = classify_type(parse_quiver(c.text));
    CHECK(t.family == c.family);
    CHECK(t.name == c.name);
  }
}

TEST_CASE("valuations, reflection and subquivers") {
  const Quiver q = parse_quiver("vertices 3; arrow 1 2; arrow 1 2; arrow 2 3");
  CHECK(valuation(q, 0, 1) == 4);
  CHECK(valuation(q, 1, 2) == 1);
  CHECK(q.arrow_count(0, 1) == 2);
  const Quiver r = reflect_at(q, 0);
  CHECK(r.arrow_count(1, 0) == 2);
  CHECK(r.is_sink(0));
  const Subquiver s = subquiver_restrict(q, {0, 1});
  CHECK(s.quiver.size() == 2);
  CHECK(classify_type(s.quiver).name == "~A1");
  CHECK(underlying_graph_has_cycle(parse_quiver("vertices 3; arrow 1 2; arrow 2 3; arrow 1 3")));
  CHECK_FALSE(underlying_graph_has_cycle(q));
  CHECK(parse_quiver(to_text(q)) == q);
}
