#include "ftors/representation.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ftors/errors.hpp"

namespace ftors {

Representation::Representation(QuiverPtr quiver, int p, DimVector dims, std::vector<FpMatrix> maps)
    : quiver_(std::move(quiver)), p_(p), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!quiver_) throw std::invalid_argument("Representation: null quiver");
  if (!quiver_->is_path_algebra()) {
    throw PreconditionError("explicit representations need (1,1) valuations; valued arrows are handled by numerics only");
  }
  if (static_cast<int>(dims_.size()) != quiver_->size()) throw std::invalid_argument("Representation: dims length");
  if (maps_.size() != quiver_->arrows().size()) throw std::invalid_argument("Representation: map count");
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    const auto& a = quiver_->arrows()[k];
    if (maps_[k].rows() != dims_[a.target] || maps_[k].cols() != dims_[a.source] || maps_[k].prime() != p_) {
      throw std::invalid_argument("Representation: matrix shape mismatch on arrow " + std::to_string(k));
    }
  }
}

Representation Representation::zero(QuiverPtr quiver, int p) {
  const int n = quiver->size();
  std::vector<FpMatrix> maps(quiver->arrows().size(), FpMatrix(0, 0, p));
  return Representation(std::move(quiver), p, DimVector(n, 0), std::move(maps));
}

bool Representation::same_quiver(const Representation& other) const {
  return quiver_ == other.quiver_ || *quiver_ == *other.quiver_;
}

bool Representation::operator==(const Representation& other) const {
  return same_quiver(other) && p_ == other.p_ && dims_ == other.dims_ && maps_ == other.maps_;
}

namespace {

void require_same(const Representation& x, const Representation& y) {
  if (!x.same_quiver(y) || x.prime() != y.prime()) {
    throw PreconditionError("representations live over different quivers or fields");
  }
}

// Paths as arrow-index sequences, bucketed by end vertex (from_start) or
// start vertex (!from_start).
std::vector<std::vector<std::vector<int>>> paths_from(const Quiver& q, int vertex) {
  std::vector<std::vector<std::vector<int>>> by_end(q.size());
  std::function<void(int, std::vector<int>&)> walk = [&](int v, std::vector<int>& path) {
    by_end[v].push_back(path);
    for (int k : q.arrows_out_of(v)) {
      path.push_back(k);
      walk(q.arrows()[k].target, path);
      path.pop_back();
    }
  };
  std::vector<int> path;
  walk(vertex, path);
  return by_end;
}

std::vector<std::vector<std::vector<int>>> paths_into(const Quiver& q, int vertex) {
  std::vector<std::vector<std::vector<int>>> by_start(q.size());
  std::function<void(int, std::vector<int>&)> walk = [&](int v, std::vector<int>& rev) {
    by_start[v].emplace_back(rev.rbegin(), rev.rend());
    for (int k : q.arrows_into(v)) {
      rev.push_back(k);
      walk(q.arrows()[k].source, rev);
      rev.pop_back();
    }
  };
  std::vector<int> rev;
  walk(vertex, rev);
  return by_start;
}

}  // namespace

DimVector projective_dims(const Quiver& q, int vertex) {
  auto paths = paths_from(q, vertex);
  DimVector d(q.size());
  for (int v = 0; v < q.size(); ++v) d[v] = static_cast<int>(paths[v].size());
  return d;
}

DimVector injective_dims(const Quiver& q, int vertex) {
  auto paths = paths_into(q, vertex);
  DimVector d(q.size());
  for (int v = 0; v < q.size(); ++v) d[v] = static_cast<int>(paths[v].size());
  return d;
}

Representation standard_module(const QuiverPtr& qp, StandardKind kind, int vertex, int p) {
  const Quiver& q = *qp;
  if (vertex < 0 || vertex >= q.size()) throw InvalidQuiver("vertex out of range");
  const int n = q.size();
  const auto& arrows = q.arrows();
  if (kind == StandardKind::Simple) {
    DimVector d(n, 0);
    d[vertex] = 1;
    std::vector<FpMatrix> maps;
    for (const auto& a : arrows) maps.emplace_back(d[a.target], d[a.source], p);
    return Representation(qp, p, d, std::move(maps));
  }
  if (kind == StandardKind::Projective) {
    auto paths = paths_from(q, vertex);
    DimVector d(n);
    for (int v = 0; v < n; ++v) d[v] = static_cast<int>(paths[v].size());
    std::vector<FpMatrix> maps;
    for (int k = 0; k < static_cast<int>(arrows.size()); ++k) {
      const auto& a = arrows[k];
      FpMatrix m(d[a.target], d[a.source], p);
      for (int c = 0; c < d[a.source]; ++c) {
        auto extended = paths[a.source][c];
        extended.push_back(k);
        const auto& targets = paths[a.target];
        for (int r = 0; r < d[a.target]; ++r)
          if (targets[r] == extended) m.set(r, c, 1);
      }
      maps.push_back(std::move(m));
    }
    return Representation(qp, p, d, std::move(maps));
  }
  auto paths = paths_into(q, vertex);
  DimVector d(n);
  for (int v = 0; v < n; ++v) d[v] = static_cast<int>(paths[v].size());
  std::vector<FpMatrix> maps;
  for (int k = 0; k < static_cast<int>(arrows.size()); ++k) {
    const auto& a = arrows[k];
    FpMatrix m(d[a.target], d[a.source], p);
    // dual basis vector w* goes to u* when w = a followed by u
    for (int c = 0; c < d[a.source]; ++c) {
      const auto& w = paths[a.source][c];
      if (w.empty() || w.front() != k) continue;
      std::vector<int> rest(w.begin() + 1, w.end());
      const auto& targets = paths[a.target];
      for (int r = 0; r < d[a.target]; ++r)
        if (targets[r] == rest) m.set(r, c, 1);
    }
    maps.push_back(std::move(m));
  }
  return Representation(qp, p, d, std::move(maps));
}

Representation direct_sum(const Representation& x, const Representation& y) {
  require_same(x, y);
  const auto& arrows = x.quiver().arrows();
  DimVector d(x.dims().size());
  for (std::size_t v = 0; v < d.size(); ++v) d[v] = x.dim(v) + y.dim(v);
  std::vector<FpMatrix> maps;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const auto& a = arrows[k];
    FpMatrix m(d[a.target], d[a.source], x.prime());
    m.set_block(0, 0, x.map(k));
    m.set_block(x.dim(a.target), x.dim(a.source), y.map(k));
    maps.push_back(std::move(m));
  }
  return Representation(x.quiver_ptr(), x.prime(), d, std::move(maps));
}

Representation direct_sum(const std::vector<Representation>& parts, const QuiverPtr& q, int p) {
  Representation acc = Representation::zero(q, p);
  for (const auto& part : parts) acc = direct_sum(acc, part);
  return acc;
}

Representation power(const Representation& x, int copies) {
  Representation acc = Representation::zero(x.quiver_ptr(), x.prime());
  for (int i = 0; i < copies; ++i) acc = direct_sum(acc, x);
  return acc;
}

HomSpace hom_basis(const Representation& x, const Representation& y) {
  require_same(x, y);
  const Quiver& q = x.quiver();
  const int n = q.size();
  const int p = x.prime();
  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + y.dim(v) * x.dim(v);
  const int unknowns = offset[n];
  int equations = 0;
  for (const auto& a : q.arrows()) equations += y.dim(a.target) * x.dim(a.source);
  HomSpace out;
  if (unknowns == 0) return out;

  auto var = [&](int v, int r, int c) { return offset[v] + r * x.dim(v) + c; };
  FpMatrix sys(equations, unknowns, p);
  int row = 0;
  for (int k = 0; k < static_cast<int>(q.arrows().size()); ++k) {
    const auto& a = q.arrows()[k];
    const int s = a.source, t = a.target;
    const FpMatrix& xa = x.map(k);
    const FpMatrix& ya = y.map(k);
    // (f_t X_a - Y_a f_s)[r][c] = 0
    for (int r = 0; r < y.dim(t); ++r) {
      for (int c = 0; c < x.dim(s); ++c) {
        for (int l = 0; l < x.dim(t); ++l) {
          const int coeff = xa(l, c);
          if (coeff) sys.set(row, var(t, r, l), sys(row, var(t, r, l)) + coeff);
        }
        for (int l = 0; l < y.dim(s); ++l) {
          const int coeff = ya(r, l);
          if (coeff) sys.set(row, var(s, l, c), sys(row, var(s, l, c)) - coeff);
        }
        ++row;
      }
    }
  }
  const FpMatrix k = kernel(sys);
  for (int j = 0; j < k.cols(); ++j) {
    Morphism f;
    for (int v = 0; v < n; ++v) {
      FpMatrix fv(y.dim(v), x.dim(v), p);
      for (int r = 0; r < y.dim(v); ++r)
        for (int c = 0; c < x.dim(v); ++c) fv.set(r, c, k(var(v, r, c), j));
      f.push_back(std::move(fv));
    }
    out.basis.push_back(std::move(f));
  }
  return out;
}

int hom_dim(const Representation& x, const Representation& y) { return hom_basis(x, y).dim(); }

int ext_dim(const Representation& x, const Representation& y) {
  const long long e = hom_dim(x, y) - euler_form(x.quiver(), x.dims(), y.dims());
  if (e < 0) throw std::logic_error("ext_dim: negative value, Euler identity violated");
  return static_cast<int>(e);
}

bool is_morphism(const Representation& x, const Representation& y, const Morphism& f) {
  const auto& arrows = x.quiver().arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const auto& a = arrows[k];
    if (!(f[a.target] * x.map(k) == y.map(k) * f[a.source])) return false;
  }
  return true;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism out;
  for (std::size_t v = 0; v < f.size(); ++v) out.push_back(g[v] * f[v]);
  return out;
}

Morphism linear_combination(const HomSpace& h, const std::vector<int>& coeffs, const Representation& x,
                            const Representation& y) {
  Morphism out;
  for (int v = 0; v < x.quiver().size(); ++v) out.emplace_back(y.dim(v), x.dim(v), x.prime());
  for (int j = 0; j < h.dim(); ++j) {
    if (coeffs[j] == 0) continue;
    for (std::size_t v = 0; v < out.size(); ++v) out[v] = out[v] + h.basis[j][v].scaled(coeffs[j]);
  }
  return out;
}

Morphism random_morphism(const HomSpace& h, const Representation& x, const Representation& y, Rng& rng) {
  std::vector<int> coeffs(h.dim());
  for (auto& c : coeffs) c = rng.residue(x.prime());
  return linear_combination(h, coeffs, x, y);
}

bool is_isomorphism(const Morphism& f) {
  for (const auto& fv : f) {
    if (fv.rows() != fv.cols() || rank(fv) != fv.rows()) return false;
  }
  return true;
}

SubQuotient sub_quotient(const Representation& m, const std::vector<FpMatrix>& bases) {
  const Quiver& q = m.quiver();
  const int n = q.size();
  const int p = m.prime();
  DimVector sub_dims(n), quo_dims(n);
  std::vector<FpMatrix> projection, right_inverse;
  for (int v = 0; v < n; ++v) {
    sub_dims[v] = bases[v].cols();
    FpMatrix proj = cokernel_projection(bases[v]);
    quo_dims[v] = proj.rows();
    auto ri = solve_right(proj, FpMatrix::identity(proj.rows(), p));
    right_inverse.push_back(*ri);
    projection.push_back(std::move(proj));
  }
  std::vector<FpMatrix> sub_maps, quo_maps;
  for (int k = 0; k < static_cast<int>(q.arrows().size()); ++k) {
    const auto& a = q.arrows()[k];
    auto restricted = solve_right(bases[a.target], m.map(k) * bases[a.source]);
    if (!restricted) throw std::logic_error("sub_quotient: subspace is not a subrepresentation");
    sub_maps.push_back(*restricted);
    quo_maps.push_back(projection[a.target] * m.map(k) * right_inverse[a.source]);
  }
  return SubQuotient{Representation(m.quiver_ptr(), p, sub_dims, std::move(sub_maps)), bases,
                     Representation(m.quiver_ptr(), p, quo_dims, std::move(quo_maps)), std::move(projection)};
}

SubQuotient trace_submodule(const std::vector<Representation>& generators, const Representation& m) {
  const int n = m.quiver().size();
  std::vector<std::vector<FpMatrix>> images(n);
  for (const auto& g : generators) {
    require_same(g, m);
    const HomSpace h = hom_basis(g, m);
    for (const auto& f : h.basis)
      for (int v = 0; v < n; ++v) images[v].push_back(f[v]);
  }
  std::vector<FpMatrix> bases;
  for (int v = 0; v < n; ++v) {
    if (images[v].empty()) {
      bases.emplace_back(m.dim(v), 0, m.prime());
    } else {
      bases.push_back(column_space(FpMatrix::hstack(images[v], m.dim(v), m.prime())));
    }
  }
  return sub_quotient(m, bases);
}

bool generates(const std::vector<Representation>& generators, const Representation& m) {
  return trace_submodule(generators, m).quotient.is_zero();
}

SubQuotient isotypic_socle(const Representation& m, int vertex) {
  const Quiver& q = m.quiver();
  const int p = m.prime();
  std::vector<FpMatrix> bases;
  for (int v = 0; v < q.size(); ++v) bases.emplace_back(m.dim(v), 0, p);
  std::vector<FpMatrix> outgoing;
  for (int k : q.arrows_out_of(vertex)) outgoing.push_back(m.map(k));
  if (outgoing.empty()) {
    bases[vertex] = FpMatrix::identity(m.dim(vertex), p);
  } else {
    bases[vertex] = kernel(FpMatrix::vstack(outgoing, m.dim(vertex), p));
  }
  return sub_quotient(m, bases);
}

DimVector top_dims(const Representation& m) {
  const Quiver& q = m.quiver();
  DimVector d(q.size());
  for (int v = 0; v < q.size(); ++v) {
    std::vector<FpMatrix> incoming;
    for (int k : q.arrows_into(v)) incoming.push_back(m.map(k));
    d[v] = m.dim(v) - (incoming.empty() ? 0 : rank(FpMatrix::hstack(incoming, m.dim(v), m.prime())));
  }
  return d;
}

DimVector socle_dims(const Representation& m) {
  const Quiver& q = m.quiver();
  DimVector d(q.size());
  for (int v = 0; v < q.size(); ++v) {
    std::vector<FpMatrix> outgoing;
    for (int k : q.arrows_out_of(v)) outgoing.push_back(m.map(k));
    d[v] = m.dim(v) - (outgoing.empty() ? 0 : rank(FpMatrix::vstack(outgoing, m.dim(v), m.prime())));
  }
  return d;
}

bool is_projective(const Representation& m) {
  // M is projective iff its projective cover has the same dimension.
  const DimVector top = top_dims(m);
  DimVector cover(m.dims().size(), 0);
  for (int i = 0; i < m.quiver().size(); ++i) {
    if (top[i] == 0) continue;
    const DimVector pd = projective_dims(m.quiver(), i);
    for (std::size_t v = 0; v < cover.size(); ++v) cover[v] += top[i] * pd[v];
  }
  return cover == m.dims();
}

bool is_injective(const Representation& m) {
  const DimVector soc = socle_dims(m);
  DimVector hull(m.dims().size(), 0);
  for (int i = 0; i < m.quiver().size(); ++i) {
    if (soc[i] == 0) continue;
    const DimVector id = injective_dims(m.quiver(), i);
    for (std::size_t v = 0; v < hull.size(); ++v) hull[v] += soc[i] * id[v];
  }
  return hull == m.dims();
}

Representation restrict_to(const Representation& m, const Subquiver& sub, const QuiverPtr& sub_quiver) {
  DimVector d;
  for (int v : sub.vertex_map) d.push_back(m.dim(v));
  std::vector<FpMatrix> maps;
  for (int k : sub.arrow_map) maps.push_back(m.map(k));
  return Representation(sub_quiver, m.prime(), d, std::move(maps));
}

Representation extend_by_zero(const Representation& m, const Subquiver& sub, const QuiverPtr& ambient) {
  const Quiver& q = *ambient;
  DimVector d(q.size(), 0);
  for (std::size_t i = 0; i < sub.vertex_map.size(); ++i) d[sub.vertex_map[i]] = m.dim(static_cast<int>(i));
  std::vector<FpMatrix> maps;
  for (const auto& a : q.arrows()) maps.emplace_back(d[a.target], d[a.source], m.prime());
  for (std::size_t k = 0; k < sub.arrow_map.size(); ++k) maps[sub.arrow_map[k]] = m.map(static_cast<int>(k));
  return Representation(ambient, m.prime(), d, std::move(maps));
}

Representation change_basis(const Representation& m, const std::vector<FpMatrix>& g) {
  std::vector<FpMatrix> inv;
  for (const auto& gv : g) {
    auto i = inverse(gv);
    if (!i) throw std::invalid_argument("change_basis: matrix not invertible");
    inv.push_back(*i);
  }
  std::vector<FpMatrix> maps;
  const auto& arrows = m.quiver().arrows();
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    maps.push_back(g[arrows[k].target] * m.map(static_cast<int>(k)) * inv[arrows[k].source]);
  }
  return Representation(m.quiver_ptr(), m.prime(), m.dims(), std::move(maps));
}

Representation random_base_change(const Representation& m, Rng& rng) {
  std::vector<FpMatrix> g;
  for (int v = 0; v < m.quiver().size(); ++v) g.push_back(random_invertible(m.dim(v), m.prime(), rng));
  return change_basis(m, g);
}

Representation random_representation(const QuiverPtr& q, const DimVector& dims, int p, Rng& rng) {
  std::vector<FpMatrix> maps;
  for (const auto& a : q->arrows()) maps.push_back(random_matrix(dims[a.target], dims[a.source], p, rng));
  return Representation(q, p, dims, std::move(maps));
}

nlohmann::json to_json(const Representation& m) {
  nlohmann::json arrows = nlohmann::json::array();
  const auto& qa = m.quiver().arrows();
  for (std::size_t k = 0; k < qa.size(); ++k) {
    arrows.push_back({{"from", qa[k].source + 1}, {"to", qa[k].target + 1}, {"matrix", m.map(static_cast<int>(k)).to_rows()}});
  }
  return {{"dim", m.dims()}, {"prime", m.prime()}, {"arrows", arrows}};
}

Representation representation_from_json(const nlohmann::json& j, const QuiverPtr& q) {
  const int p = j.value("prime", 5);
  DimVector d = j.at("dim").get<DimVector>();
  const auto& arrows = j.at("arrows");
  if (arrows.size() != q->arrows().size()) throw ParseError("representation JSON: arrow count mismatch");
  std::vector<FpMatrix> maps;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const auto& a = q->arrows()[k];
    if (arrows[k].at("from").get<int>() != a.source + 1 || arrows[k].at("to").get<int>() != a.target + 1) {
      throw ParseError("representation JSON: arrow endpoints do not match the quiver");
    }
    auto rows = arrows[k].at("matrix").get<std::vector<std::vector<long long>>>();
    maps.push_back(FpMatrix::from_rows(rows, d.at(a.source), p));
  }
  return Representation(q, p, d, std::move(maps));
}

std::string dims_string(const DimVector& d) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ")";
  return os.str();
}

}  // namespace ftors
