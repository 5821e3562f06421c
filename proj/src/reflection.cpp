#include "ftors/reflection.hpp"

#include <algorithm>

#include "ftors/decompose.hpp"
#include "ftors/errors.hpp"

namespace ftors {

Representation reflection_functor(const Representation& m, int v, QuiverPtr target) {
  const Quiver& q = m.quiver();
  const int p = m.prime();
  if (!target) target = share(reflect_at(q, v));
  const auto& arrows = q.arrows();
  DimVector dims = m.dims();
  std::vector<FpMatrix> maps = m.maps();

  if (q.is_sink(v)) {
    const auto incoming = q.arrows_into(v);
    int total = 0;
    std::vector<FpMatrix> parts;
    for (int k : incoming) {
      parts.push_back(m.map(k));
      total += m.dim(arrows[k].source);
    }
    const FpMatrix h = FpMatrix::hstack(parts, m.dim(v), p);
    const FpMatrix ker = kernel(h);  // total x d'
    dims[v] = ker.cols();
    int offset = 0;
    for (int k : incoming) {
      const int ds = m.dim(arrows[k].source);
      maps[k] = ker.block(offset, 0, ds, ker.cols());
      offset += ds;
    }
    (void)total;
  } else if (q.is_source(v)) {
    const auto outgoing = q.arrows_out_of(v);
    std::vector<FpMatrix> parts;
    for (int k : outgoing) parts.push_back(m.map(k));
    const FpMatrix h = FpMatrix::vstack(parts, m.dim(v), p);
    const FpMatrix coker = cokernel_projection(h);  // d' x total
    dims[v] = coker.rows();
    int offset = 0;
    for (int k : outgoing) {
      const int dt = m.dim(arrows[k].target);
      maps[k] = coker.block(0, offset, coker.rows(), dt);
      offset += dt;
    }
  } else {
    throw PreconditionError("reflection functor needs a sink or a source");
  }
  return Representation(std::move(target), p, std::move(dims), std::move(maps));
}

Representation coxeter_functor_plus(const Representation& m) {
  auto order = m.quiver().topological_order();
  std::reverse(order.begin(), order.end());
  Representation cur = m;
  for (int v : order) cur = reflection_functor(cur, v);
  // the final quiver equals the original; keep the caller's pointer
  return Representation(m.quiver_ptr(), m.prime(), cur.dims(), cur.maps());
}

Representation coxeter_functor_minus(const Representation& m) {
  const auto order = m.quiver().topological_order();
  Representation cur = m;
  for (int v : order) cur = reflection_functor(cur, v);
  return Representation(m.quiver_ptr(), m.prime(), cur.dims(), cur.maps());
}

namespace {

void require_indecomposable(const Representation& m) {
  if (m.is_zero()) throw PreconditionError("AR translate of the zero module");
  if (is_brick(m)) return;
  Rng rng(0x5eed);
  if (!is_indecomposable(m, rng)) throw PreconditionError("AR translate needs an indecomposable module");
}

}  // namespace

Representation ar_translate(const Representation& m) {
  require_indecomposable(m);
  if (is_projective(m)) throw PreconditionError("AR translate of a projective module");
  return coxeter_functor_plus(m);
}

Representation ar_translate_inverse(const Representation& m) {
  require_indecomposable(m);
  if (is_injective(m)) throw PreconditionError("inverse AR translate of an injective module");
  return coxeter_functor_minus(m);
}

}  // namespace ftors
