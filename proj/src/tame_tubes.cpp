#include "ftors/tame_tubes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ftors/decompose.hpp"
#include "ftors/errors.hpp"
#include "ftors/extensions.hpp"
#include "ftors/reflection.hpp"

namespace ftors {

namespace {

constexpr int kSamplingAttempts = 20;

std::vector<DimVector> regular_candidates(const Quiver& q, const DimVector& delta) {
  std::vector<DimVector> out;
  DimVector x(delta.size(), 0);
  while (true) {
    std::size_t k = 0;
    while (k < x.size() && x[k] == delta[k]) x[k++] = 0;
    if (k == x.size()) break;
    ++x[k];
    if (x == delta) continue;
    if (tits_form(q, x) == 1 && defect(q, x) == 0) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), [](const DimVector& a, const DimVector& b) {
    const int ta = total_dimension(a), tb = total_dimension(b);
    return ta != tb ? ta < tb : a < b;
  });
  return out;
}

bool exceptional_brick(const Representation& m) { return is_brick(m) && ext_dim(m, m) == 0; }

std::optional<Representation> thin_module(const QuiverPtr& q, const DimVector& x, int p) {
  for (int d : x)
    if (d > 1) return std::nullopt;
  std::vector<FpMatrix> maps;
  for (const auto& a : q->arrows()) {
    FpMatrix m(x[a.target], x[a.source], p);
    if (x[a.target] == 1 && x[a.source] == 1) m.set(0, 0, 1);
    maps.push_back(m);
  }
  return Representation(q, p, x, std::move(maps));
}

Representation realize(const QuiverPtr& q, const DimVector& x, int p, Rng& rng) {
  for (int attempt = 0; attempt < kSamplingAttempts; ++attempt) {
    auto m = random_representation(q, x, p, rng);
    if (exceptional_brick(m)) return m;
  }
  if (auto thin = thin_module(q, x, p); thin && exceptional_brick(*thin)) return *thin;
  throw Inconclusive("no exceptional representation found for root " + dims_string(x));
}

}  // namespace

std::vector<Tube> find_regular_simples(const QuiverPtr& q, int p, Rng& rng) {
  const auto type = classify_type(*q);
  if (type.family != TypeFamily::Euclidean) throw PreconditionError("tube search needs a Euclidean quiver");
  if (!q->is_path_algebra()) throw PreconditionError("tube search needs a path-algebra quiver");
  if (q->size() < 3) throw PreconditionError("tube search needs at least three vertices");

  const DimVector delta = null_root(*q);
  const auto candidates = regular_candidates(*q, delta);
  const std::set<DimVector> candidate_set(candidates.begin(), candidates.end());
  std::set<DimVector> seen;
  std::vector<Tube> tubes;

  for (const auto& x : candidates) {
    if (seen.count(x)) continue;
    const Representation start = realize(q, x, p, rng);
    std::vector<Representation> orbit{start};
    seen.insert(x);
    bool closed = false;
    for (std::size_t step = 0; step <= candidates.size(); ++step) {
      Representation next = coxeter_functor_plus(orbit.back());
      if (next.dims() == start.dims()) {
        if (!is_isomorphic(next, start, rng)) throw std::logic_error("tau-orbit returned a different module");
        closed = true;
        break;
      }
      if (!candidate_set.count(next.dims())) break;
      seen.insert(next.dims());
      orbit.push_back(std::move(next));
    }
    if (!closed || orbit.size() < 2) continue;

    DimVector sum(delta.size(), 0);
    for (const auto& m : orbit)
      for (std::size_t v = 0; v < sum.size(); ++v) sum[v] += m.dim(static_cast<int>(v));
    if (sum != delta) continue;  // orbit of non-simple regulars

    auto first = std::min_element(orbit.begin(), orbit.end(),
                                  [](const auto& a, const auto& b) { return a.dims() < b.dims(); });
    std::rotate(orbit.begin(), first, orbit.end());
    tubes.push_back(Tube{static_cast<int>(orbit.size()), std::move(orbit)});
  }
  std::sort(tubes.begin(), tubes.end(), [](const Tube& a, const Tube& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.simples[0].dims() < b.simples[0].dims();
  });
  return tubes;
}

SerialModule tube_serial_module(const Tube& t) {
  if (t.rank < 2) throw PreconditionError("serial module needs a tube of rank at least 2");
  Representation y = t.simples[t.rank - 2];
  for (int i = t.rank - 3; i >= 0; --i) {
    const auto basis = ext_basis(t.simples[i], y);
    if (basis.empty()) throw std::logic_error("missing extension between consecutive tube simples");
    y = extension_module(t.simples[i], y, basis.front());
  }
  return SerialModule{y, t.simples[t.rank - 1]};
}

}  // namespace ftors
