#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ftors/decompose.hpp"
#include "ftors/errors.hpp"
#include "ftors/numerics.hpp"
#include "ftors/reflection.hpp"

using namespace ftors;

namespace {

DimVector as_dims(const std::vector<long long>& x) { return {x.begin(), x.end()}; }

}  // namespace

TEST_CASE("reflection at a sink follows the simple reflection on dimensions") {
  Rng rng(12);
  const QuiverPtr q = share(parse_quiver("vertices 4; arrow 1 4; arrow 2 4; arrow 3 4"));
  Representation m = random_representation(q, {1, 1, 1, 2}, 5, rng);
  while (!is_indecomposable(m, rng)) m = random_representation(q, {1, 1, 1, 2}, 5, rng);
  const Representation r = reflection_functor(m, 3);
  CHECK(r.dims() == as_dims(simple_reflection(*q, 3, {1, 1, 1, 2})));
  CHECK(r.quiver() == reflect_at(*q, 3));
  // reflecting back returns an isomorphic module
  const Representation back = reflection_functor(r, 3, q);
  CHECK(is_isomorphic(back, m, rng));
  // the simple at the sink is killed
  CHECK(reflection_functor(standard_module(q, StandardKind::Simple, 3, 5), 3).is_zero());
}

TEST_CASE("AR translate matches the Coxeter transformation off projectives") {
  Rng rng(3);
  const QuiverPtr q = share(parse_quiver("vertices 3; arrow 1 2; arrow 1 2; arrow 2 3"));
  const Representation i3 = standard_module(q, StandardKind::Injective, 2, 5);
  const Representation t = ar_translate(i3);
  CHECK(t.dims() == as_dims(coxeter_transform(*q, {i3.dims().begin(), i3.dims().end()})));
  CHECK(is_isomorphic(ar_translate_inverse(t), i3, rng));
  CHECK_THROWS_AS(ar_translate(standard_module(q, StandardKind::Projective, 0, 5)), PreconditionError);
  CHECK_THROWS_AS(ar_translate_inverse(standard_module(q, StandardKind::Injective, 1, 5)), PreconditionError);
  CHECK(coxeter_functor_plus(standard_module(q, StandardKind::Projective, 0, 5)).is_zero());
  CHECK(coxeter_functor_minus(standard_module(q, StandardKind::Injective, 1, 5)).is_zero());
}

TEST_CASE("AR formula: Ext(X, Y) equals Hom(Y, tau X) for hereditary algebras") {
  Rng rng(6);
  const QuiverPtr q = share(parse_quiver("vertices 3; arrow 1 2; arrow 2 3; arrow 1 3"));
  std::vector<Representation> mods;
  for (const DimVector& d : {DimVector{1, 1, 0}, DimVector{0, 1, 1}, DimVector{1, 0, 1}, DimVector{2, 1, 1},
                             DimVector{1, 1, 1}})
    mods.push_back(random_representation(q, d, 5, rng));
  for (const auto& x : mods)
    for (const auto& y : mods) CHECK(ext_dim(x, y) == hom_dim(y, coxeter_functor_plus(x)));
}

TEST_CASE("Coxeter functors are mutually inverse on indecomposable non-projectives") {
  Rng rng(7);
  const QuiverPtr q = share(parse_quiver("vertices 2; arrow 1 2; arrow 1 2"));
  Representation m = standard_module(q, StandardKind::Projective, 0, 5);
  for (int k = 0; k < 3; ++k) {
    const Representation next = coxeter_functor_minus(m);
    CHECK(is_isomorphic(coxeter_functor_plus(next), m, rng));
    m = next;
  }
  CHECK(m.dims() == DimVector{7, 8});
}
