#include "ftors/extensions.hpp"

#include <stdexcept>

#include "ftors/decompose.hpp"
#include "ftors/errors.hpp"

namespace ftors {

std::vector<Cocycle> ext_basis(const Representation& b, const Representation& a) {
  if (!b.same_quiver(a) || b.prime() != a.prime()) throw PreconditionError("ext_basis: quiver mismatch");
  const Quiver& q = b.quiver();
  const int n = q.size();
  const int p = b.prime();
  const auto& arrows = q.arrows();

  // coordinates: arrow blocks of size A_t * B_s (row-major)
  std::vector<int> arrow_offset(arrows.size() + 1, 0);
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    arrow_offset[k + 1] = arrow_offset[k] + a.dim(arrows[k].target) * b.dim(arrows[k].source);
  }
  const int total = arrow_offset.back();
  std::vector<int> vertex_offset(n + 1, 0);
  for (int v = 0; v < n; ++v) vertex_offset[v + 1] = vertex_offset[v] + a.dim(v) * b.dim(v);
  const int gdim = vertex_offset[n];

  // coboundary map delta(g)_k = A_k g_s - g_t B_k, as a total x gdim matrix
  FpMatrix delta(total, gdim, p);
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const int s = arrows[k].source, t = arrows[k].target;
    const FpMatrix& ak = a.map(static_cast<int>(k));
    const FpMatrix& bk = b.map(static_cast<int>(k));
    for (int r = 0; r < a.dim(t); ++r) {
      for (int c = 0; c < b.dim(s); ++c) {
        const int row = arrow_offset[k] + r * b.dim(s) + c;
        for (int l = 0; l < a.dim(s); ++l) {
          const int coeff = ak(r, l);
          if (coeff) {
            const int col = vertex_offset[s] + l * b.dim(s) + c;
            delta.set(row, col, delta(row, col) + coeff);
          }
        }
        for (int l = 0; l < b.dim(t); ++l) {
          const int coeff = bk(l, c);
          if (coeff) {
            const int col = vertex_offset[t] + r * b.dim(t) + l;
            delta.set(row, col, delta(row, col) - coeff);
          }
        }
      }
    }
  }

  std::vector<Cocycle> out;
  for (int coord : complement_coordinates(delta)) {
    Cocycle c;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      const int s = arrows[k].source, t = arrows[k].target;
      FpMatrix m(a.dim(t), b.dim(s), p);
      if (coord >= arrow_offset[k] && coord < arrow_offset[k + 1]) {
        const int local = coord - arrow_offset[k];
        m.set(local / b.dim(s), local % b.dim(s), 1);
      }
      c.push_back(std::move(m));
    }
    out.push_back(std::move(c));
  }
  return out;
}

Representation extension_module(const Representation& b, const Representation& a, const Cocycle& c) {
  const Quiver& q = b.quiver();
  const auto& arrows = q.arrows();
  DimVector d(q.size());
  for (int v = 0; v < q.size(); ++v) d[v] = a.dim(v) + b.dim(v);
  std::vector<FpMatrix> maps;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const int s = arrows[k].source, t = arrows[k].target;
    FpMatrix m(d[t], d[s], b.prime());
    m.set_block(0, 0, a.map(static_cast<int>(k)));
    m.set_block(0, a.dim(s), c[k]);
    m.set_block(a.dim(t), a.dim(s), b.map(static_cast<int>(k)));
    maps.push_back(std::move(m));
  }
  return Representation(b.quiver_ptr(), b.prime(), d, std::move(maps));
}

Cocycle combine(const std::vector<Cocycle>& basis, const std::vector<int>& coeffs, const Representation& b,
                const Representation& a) {
  const auto& arrows = b.quiver().arrows();
  Cocycle out;
  for (const auto& arr : arrows) out.emplace_back(a.dim(arr.target), b.dim(arr.source), b.prime());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (coeffs[j] == 0) continue;
    for (std::size_t k = 0; k < arrows.size(); ++k) out[k] = out[k] + basis[j][k].scaled(coeffs[j]);
  }
  return out;
}

Representation universal_extension(const Representation& m, int vertex, ExtensionSide side) {
  const QuiverPtr& q = m.quiver_ptr();
  const int p = m.prime();
  const auto& arrows = q->arrows();
  const Representation simple = standard_module(q, StandardKind::Simple, vertex, p);
  if (side == ExtensionSide::Above) {
    const auto basis = ext_basis(simple, m);
    const int e = static_cast<int>(basis.size());
    if (e == 0) return m;
    const Representation top = power(simple, e);
    // class of S(i)^e: the j-th copy carries the j-th basis cocycle
    Cocycle c;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      const int s = arrows[k].source, t = arrows[k].target;
      FpMatrix block(m.dim(t), top.dim(s), p);
      if (s == vertex)
        for (int j = 0; j < e; ++j) block.set_block(0, j, basis[j][k]);
      c.push_back(std::move(block));
    }
    return extension_module(top, m, c);
  }
  const auto basis = ext_basis(m, simple);
  const int e = static_cast<int>(basis.size());
  if (e == 0) return m;
  const Representation bottom = power(simple, e);
  Cocycle c;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const int s = arrows[k].source, t = arrows[k].target;
    FpMatrix block(bottom.dim(t), m.dim(s), p);
    if (t == vertex)
      for (int j = 0; j < e; ++j) block.set_block(j, 0, basis[j][k]);
    c.push_back(std::move(block));
  }
  return extension_module(m, bottom, c);
}

std::vector<Representation> middle_terms(const Representation& b, const Representation& a, Rng& rng,
                                         long long cap) {
  const auto basis = ext_basis(b, a);
  const int e = static_cast<int>(basis.size());
  const int p = b.prime();
  long long classes = 1;
  for (int i = 0; i < e; ++i) {
    classes *= p;
    if (classes > cap) {
      throw CapExceeded("middle_terms: p^e exceeds cap (e = " + std::to_string(e) + ")");
    }
  }
  std::vector<Representation> out{direct_sum(a, b)};
  // projective points: first nonzero coordinate equal to 1
  std::vector<int> coeffs(e, 0);
  for (long long code = 1; code < classes; ++code) {
    long long rest = code;
    for (int i = 0; i < e; ++i) {
      coeffs[i] = static_cast<int>(rest % p);
      rest /= p;
    }
    int lead = -1;
    for (int i = 0; i < e; ++i)
      if (coeffs[i] != 0) {
        lead = i;
        break;
      }
    if (lead < 0 || coeffs[lead] != 1) continue;
    Representation mid = extension_module(b, a, combine(basis, coeffs, b, a));
    bool seen = false;
    for (const auto& prev : out) {
      if (is_isomorphic(prev, mid, rng)) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(std::move(mid));
  }
  return out;
}

}  // namespace ftors
