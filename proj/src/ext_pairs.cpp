#include "ftors/ext_pairs.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ftors/decompose.hpp"
#include "ftors/errors.hpp"
#include "ftors/extensions.hpp"
#include "ftors/reflection.hpp"
#include "ftors/tame_tubes.hpp"

namespace ftors {

PairCheck verify_ext_pair(const Representation& x, const Representation& y) {
  if (!x.same_quiver(y)) throw PreconditionError("Ext-pair candidates live over different quivers");
  PairCheck c;
  auto& d = c.dims;
  d.end_x = hom_dim(x, x);
  d.end_y = hom_dim(y, y);
  d.ext_xx = ext_dim(x, x);
  d.ext_yy = ext_dim(y, y);
  d.hom_xy = hom_dim(x, y);
  d.hom_yx = hom_dim(y, x);
  d.ext_xy = ext_dim(x, y);
  d.ext_yx = ext_dim(y, x);
  const std::pair<bool, const char*> conditions[] = {
      {d.end_x == 1, "End(X) is not one-dimensional"},
      {d.end_y == 1, "End(Y) is not one-dimensional"},
      {d.ext_xx == 0, "Ext(X,X) is nonzero"},
      {d.ext_yy == 0, "Ext(Y,Y) is nonzero"},
      {d.hom_xy == 0, "Hom(X,Y) is nonzero"},
      {d.hom_yx == 0, "Hom(Y,X) is nonzero"},
      {d.ext_xy > 0, "Ext(X,Y) is zero"},
      {d.ext_yx > 0, "Ext(Y,X) is zero"},
  };
  for (const auto& [holds, message] : conditions) {
    if (!holds) {
      c.failure = message;
      break;
    }
  }
  return c;
}

namespace {

std::set<std::pair<int, int>> simple_edges(const Quiver& q) {
  std::set<std::pair<int, int>> edges;
  for (const auto& a : q.arrows()) edges.insert({std::min(a.source, a.target), std::max(a.source, a.target)});
  return edges;
}

std::vector<std::vector<int>> neighbours(const Quiver& q) {
  std::vector<std::vector<int>> adj(q.size());
  for (const auto& [u, v] : simple_edges(q)) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// Shortest cycle of the underlying simple graph, as a vertex sequence.
std::vector<int> shortest_cycle(const Quiver& q) {
  const auto adj = neighbours(q);
  std::vector<int> best;
  for (const auto& [u, v] : simple_edges(q)) {
    std::vector<int> parent(q.size(), -1);
    std::deque<int> queue{u};
    parent[u] = u;
    while (!queue.empty() && parent[v] < 0) {
      const int w = queue.front();
      queue.pop_front();
      for (int z : adj[w]) {
        if (parent[z] >= 0 || (w == u && z == v)) continue;
        parent[z] = w;
        queue.push_back(z);
      }
    }
    if (parent[v] < 0) continue;
    std::vector<int> cycle;
    for (int w = v; w != u; w = parent[w]) cycle.push_back(w);
    cycle.push_back(u);
    std::reverse(cycle.begin(), cycle.end());
    if (best.empty() || cycle.size() < best.size()) best = cycle;
  }
  return best;
}

std::string vertex_list(const Quiver& q, const std::vector<int>& vs) {
  std::string s;
  for (int v : vs) s += (s.empty() ? "" : " ") + q.label(v);
  return s;
}

// Sincere exceptional module on a path of vertices, grown one neighbour at a
// time: a new source goes on top, a new sink underneath.
Representation sincere_on_path(const QuiverPtr& q, const std::vector<int>& path, int p) {
  Representation m = standard_module(q, StandardKind::Simple, path.front(), p);
  for (std::size_t k = 1; k < path.size(); ++k) {
    const bool new_is_source = q->arrow_count(path[k], path[k - 1]) > 0;
    m = universal_extension(m, path[k], new_is_source ? ExtensionSide::Above : ExtensionSide::Below);
  }
  return m;
}

ExtPairCertificate certify(const QuiverPtr& q, Representation x, Representation y, std::string construction,
                           std::vector<std::string> trail) {
  const auto check = verify_ext_pair(x, y);
  if (!check.ok()) throw std::logic_error(construction + " construction failed verification: " + check.failure);
  return ExtPairCertificate{q, std::move(x), std::move(y), check.dims, std::move(construction), std::move(trail),
                            true, std::nullopt};
}

struct PathShape {
  int first, middle, last;  // first -> middle -> last
  int first_edge, last_edge;
};

std::optional<PathShape> directed_path_shape(const Quiver& q) {
  if (q.size() != 3 || !q.is_path_algebra()) return std::nullopt;
  for (int b = 0; b < 3; ++b) {
    for (int a = 0; a < 3; ++a) {
      const int c = 3 - a - b;
      if (a == b || c == a || c == b) continue;
      const int ab = q.arrow_count(a, b), bc = q.arrow_count(b, c);
      const int total = static_cast<int>(q.arrows().size());
      if (ab > 0 && bc > 0 && ab + bc == total) return PathShape{a, b, c, ab, bc};
    }
  }
  return std::nullopt;
}

}  // namespace

ExtPairCertificate construct_cycle_pair(const QuiverPtr& q, int p) {
  if (!q->is_path_algebra()) throw PreconditionError("explicit constructions need a path-algebra quiver");
  const auto cycle = shortest_cycle(*q);
  if (cycle.empty()) throw PreconditionError("underlying graph has no cycle");
  const int k = static_cast<int>(cycle.size());
  auto forward = [&](int i) { return q->arrow_count(cycle[i], cycle[(i + 1) % k]) > 0; };

  // maximal directed segments start at cycle sources; pick the shortest
  int best_start = -1, best_len = k + 1;
  bool best_forward = true;
  for (int i = 0; i < k; ++i) {
    const int prev = (i + k - 1) % k;
    const bool out_next = forward(i), out_prev = !forward(prev);
    if (!(out_next && out_prev)) continue;  // not a source on the cycle
    for (bool dir : {true, false}) {
      int len = 0, j = i;
      while (true) {
        const int step = dir ? j : (j + k - 1) % k;
        if (forward(step) != dir) break;
        ++len;
        j = dir ? (j + 1) % k : (j + k - 1) % k;
      }
      if (len < best_len) {
        best_len = len;
        best_start = i;
        best_forward = dir;
      }
    }
  }
  if (best_start < 0) throw std::logic_error("cycle without a source");

  std::vector<int> segment, rest;
  for (int s = 0; s <= best_len; ++s) {
    const int idx = best_forward ? (best_start + s) % k : (best_start - s + k) % k;
    segment.push_back(cycle[idx]);
  }
  for (int s = best_len + 1; s < k; ++s) {
    const int idx = best_forward ? (best_start + s) % k : (best_start - s + 2 * k) % k;
    rest.push_back(cycle[idx]);
  }

  std::vector<std::string> trail{"shortest cycle: " + vertex_list(*q, cycle),
                                 "shortest source-to-sink segment: " + vertex_list(*q, segment),
                                 "complementary path: " + vertex_list(*q, rest)};
  return certify(q, sincere_on_path(q, segment, p), sincere_on_path(q, rest, p), "cycle", std::move(trail));
}

ExtPairCertificate construct_double_double_pair(const QuiverPtr& q, int p) {
  const auto shape = directed_path_shape(*q);
  if (!shape || shape->first_edge < 2 || shape->last_edge < 2) {
    throw PreconditionError("needs a quiver 1 -> 2 -> 3 with at least two arrows on each edge");
  }
  Representation x = standard_module(q, StandardKind::Simple, shape->middle, p);
  Representation y = universal_extension(x, shape->first, ExtensionSide::Above);
  y = universal_extension(y, shape->last, ExtensionSide::Below);
  std::vector<std::string> trail{
      "X = S(" + q->label(shape->middle) + ")",
      "Y = universal extension of X by S(" + q->label(shape->first) + ") on top and S(" + q->label(shape->last) +
          ") below, dim " + dims_string(y.dims())};
  return certify(q, std::move(x), std::move(y), "double-double", std::move(trail));
}

ExtPairCertificate construct_double_single_pair(const QuiverPtr& q, int p) {
  const auto shape = directed_path_shape(*q);
  if (!shape || shape->first_edge < 2 || shape->last_edge != 1) {
    throw PreconditionError("needs a quiver 1 -> 2 -> 3 with at least two arrows 1 -> 2 and one arrow 2 -> 3");
  }
  const int a = shape->first, c = shape->last;
  const Representation pa = standard_module(q, StandardKind::Projective, a, p);
  Representation x = isotypic_socle(pa, c).quotient;
  Representation y = ar_translate(x);

  KroneckerQuotientFacts facts;
  const Subquiver sub = subquiver_restrict(*q, {a, shape->middle});
  const QuiverPtr kronecker = share(sub.quiver);
  const int a_sub = a < shape->middle ? 0 : 1;
  const Representation top_part = restrict_to(isotypic_socle(y, c).quotient, sub, kronecker);
  const Representation translate = ar_translate(standard_module(kronecker, StandardKind::Simple, a_sub, p));
  const Representation proj_sub = standard_module(kronecker, StandardKind::Projective, a_sub, p);
  Rng rng(0);
  facts.quotient_dims = top_part.dims();
  facts.translate_dims = translate.dims();
  facts.quotient_matches = is_isomorphic(top_part, translate, rng);
  facts.ext_translate_projective = ext_dim(translate, proj_sub);
  facts.socle_part_dim = pa.dim(c);
  facts.radical_dim = proj_sub.total_dim() - 1;
  if (!facts.quotient_matches || facts.ext_translate_projective == 0 || facts.socle_part_dim != facts.radical_dim) {
    throw std::logic_error("double-single construction: Kronecker quotient facts do not hold");
  }

  std::vector<std::string> trail{"X = P(" + q->label(a) + ") / P(" + q->label(a) + ")_" + q->label(c) + ", dim " +
                                     dims_string(x.dims()),
                                 "Y = tau X, dim " + dims_string(y.dims()),
                                 "Y / Y_" + q->label(c) + " matches tau' S(" + q->label(a) + ") of dim " +
                                     dims_string(translate.dims()) + " on the Kronecker subquiver"};
  auto cert = certify(q, std::move(x), std::move(y), "double-single", std::move(trail));
  cert.kronecker_facts = facts;
  return cert;
}

namespace {

// Reflection sequence turning `start` into a quiver accepted by `done`;
// returns the visited quivers (front = start) and the reflected vertices.
struct ReflectionPath {
  std::vector<QuiverPtr> quivers;
  std::vector<int> vertices;
};

std::vector<int> orientation_key(const Quiver& q) {
  std::vector<int> key;
  for (const auto& a : q.arrows()) {
    key.push_back(a.source);
    key.push_back(a.target);
  }
  return key;
}

template <class Pred>
std::optional<ReflectionPath> reflect_until(const QuiverPtr& start, Pred done) {
  using Key = std::vector<int>;
  std::map<Key, std::pair<Key, int>> parent;
  std::map<Key, QuiverPtr> node;
  std::deque<QuiverPtr> queue{start};
  parent[orientation_key(*start)] = {{}, -1};
  node[orientation_key(*start)] = start;
  while (!queue.empty()) {
    QuiverPtr cur = queue.front();
    queue.pop_front();
    if (done(*cur)) {
      ReflectionPath path;
      for (Key key = orientation_key(*cur);;) {
        path.quivers.push_back(node[key]);
        const auto [prev, v] = parent[key];
        if (v < 0) break;
        path.vertices.push_back(v);
        key = prev;
      }
      std::reverse(path.quivers.begin(), path.quivers.end());
      std::reverse(path.vertices.begin(), path.vertices.end());
      return path;
    }
    for (int v = 0; v < cur->size(); ++v) {
      if (!cur->is_sink(v) && !cur->is_source(v)) continue;
      QuiverPtr next = share(reflect_at(*cur, v));
      const Key k = orientation_key(*next);
      if (parent.count(k)) continue;
      parent[k] = {orientation_key(*cur), v};
      node[k] = next;
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

std::optional<Representation> transport_back(Representation m, const ReflectionPath& path) {
  for (int j = static_cast<int>(path.vertices.size()) - 1; j >= 0; --j) {
    m = reflection_functor(m, path.vertices[j], path.quivers[j]);
    if (m.is_zero()) return std::nullopt;
  }
  return m;
}

std::optional<ExtPairCertificate> try_three_vertex_paths(const QuiverPtr& q, int p, std::vector<std::string>& trail) {
  const auto adj = neighbours(*q);
  const auto edges = simple_edges(*q);
  auto multiplicity = [&](int u, int v) { return q->arrow_count(u, v) + q->arrow_count(v, u); };
  std::optional<ExtPairCertificate> fallback;

  for (int b = 0; b < q->size(); ++b) {
    for (std::size_t i = 0; i < adj[b].size(); ++i) {
      for (std::size_t j = i + 1; j < adj[b].size(); ++j) {
        const int a = adj[b][i], c = adj[b][j];
        if (edges.count({std::min(a, c), std::max(a, c)})) continue;
        const int mab = multiplicity(a, b), mbc = multiplicity(b, c);
        if (std::max(mab, mbc) < 2) continue;

        const Subquiver sub = subquiver_restrict(*q, {a, b, c});
        const QuiverPtr sq = share(sub.quiver);
        auto local = [&](int v) {
          return static_cast<int>(std::find(sub.vertex_map.begin(), sub.vertex_map.end(), v) - sub.vertex_map.begin());
        };
        const bool both = mab >= 2 && mbc >= 2;
        // orientations in which to construct: doubled end first
        std::vector<std::array<int, 3>> targets;
        if (both) {
          targets = {{local(a), local(b), local(c)}, {local(c), local(b), local(a)}};
        } else if (mab >= 2) {
          targets = {{local(a), local(b), local(c)}};
        } else {
          targets = {{local(c), local(b), local(a)}};
        }
        for (const auto& t : targets) {
          auto path = reflect_until(sq, [&](const Quiver& r) {
            return r.arrow_count(t[0], t[1]) > 0 && r.arrow_count(t[1], t[2]) > 0;
          });
          if (!path) continue;
          const QuiverPtr target = path->quivers.back();
          ExtPairCertificate local_cert = both ? construct_double_double_pair(target, p)
                                               : construct_double_single_pair(target, p);
          std::vector<std::string> steps = trail;
          steps.push_back("three-vertex subquiver: " + vertex_list(*q, sub.vertex_map));
          std::string reflections;
          for (int v : path->vertices) reflections += (reflections.empty() ? "" : " ") + sq->label(v);
          steps.push_back("reflections: " + (reflections.empty() ? std::string("none") : reflections));
          for (const auto& s : local_cert.trail) steps.push_back(s);

          auto x = transport_back(local_cert.x, *path);
          auto y = transport_back(local_cert.y, *path);
          if (x && y && verify_ext_pair(*x, *y).ok()) {
            Representation gx = extend_by_zero(*x, sub, q), gy = extend_by_zero(*y, sub, q);
            steps.push_back("transported back and extended by zero");
            auto cert = certify(q, std::move(gx), std::move(gy), local_cert.construction, std::move(steps));
            cert.kronecker_facts = local_cert.kronecker_facts;
            return cert;
          }
          if (!fallback) {
            steps.push_back("transport annihilated a module; certificate kept over the reflected subquiver");
            local_cert.trail = std::move(steps);
            local_cert.over_input_quiver = false;
            fallback = std::move(local_cert);
          }
        }
      }
    }
  }
  return fallback;
}

bool connected_selection(const Quiver& q, const std::vector<int>& vs) {
  try {
    subquiver_restrict(q, vs);
    return true;
  } catch (const InvalidQuiver&) {
    return false;
  }
}

}  // namespace

ExtPairCertificate find_ext_pair(const QuiverPtr& q, int p, Rng& rng) {
  if (!q->is_path_algebra()) throw PreconditionError("explicit constructions need a path-algebra quiver");
  if (q->size() < 3) throw PreconditionError("Ext-pair search needs at least three vertices");
  if (classify_type(*q).family == TypeFamily::Dynkin) throw PreconditionError("no Ext-pairs in finite type");

  std::vector<std::string> trail;
  if (underlying_graph_has_cycle(*q)) {
    try {
      return construct_cycle_pair(q, p);
    } catch (const std::logic_error& e) {
      trail.push_back(std::string("cycle construction rejected: ") + e.what());
    }
  }
  if (auto cert = try_three_vertex_paths(q, p, trail)) return *cert;

  // shrink to a minimal non-Dynkin connected subquiver with >= 3 vertices
  std::vector<int> keep(q->size());
  for (int v = 0; v < q->size(); ++v) keep[v] = v;
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (std::size_t i = 0; i < keep.size() && keep.size() > 3; ++i) {
      std::vector<int> smaller = keep;
      smaller.erase(smaller.begin() + static_cast<long>(i));
      if (!connected_selection(*q, smaller)) continue;
      if (classify_type(subquiver_restrict(*q, smaller).quiver).family == TypeFamily::Dynkin) continue;
      keep = std::move(smaller);
      shrunk = true;
      break;
    }
  }
  const Subquiver sub = subquiver_restrict(*q, keep);
  const auto type = classify_type(sub.quiver);
  if (type.family != TypeFamily::Euclidean) {
    throw Inconclusive("no construction applies: minimal non-Dynkin subquiver is " + type.name);
  }
  const QuiverPtr sq = share(sub.quiver);
  const auto tubes = find_regular_simples(sq, p, rng);
  if (tubes.empty()) throw Inconclusive("no tube of rank at least 2 found on " + type.name);
  const Tube& tube = tubes.front();
  SerialModule serial = tube_serial_module(tube);

  trail.push_back("Euclidean subquiver " + type.name + " on vertices " + vertex_list(*q, sub.vertex_map));
  std::string mouth;
  for (const auto& s : tube.simples) mouth += (mouth.empty() ? "" : " ") + dims_string(s.dims());
  trail.push_back("tube of rank " + std::to_string(tube.rank) + " with regular simples " + mouth);
  trail.push_back("X = serial module of dim " + dims_string(serial.module.dims()) +
                  ", Y = last regular simple of dim " + dims_string(serial.partner.dims()));
  return certify(q, extend_by_zero(serial.module, sub, q), extend_by_zero(serial.partner, sub, q), "tube",
                 std::move(trail));
}

nlohmann::json pair_dimensions_to_json(const PairDimensions& d) {
  return {{"hom_xy", d.hom_xy}, {"hom_yx", d.hom_yx}, {"ext_xy", d.ext_xy}, {"ext_yx", d.ext_yx},
          {"end_x", d.end_x},   {"end_y", d.end_y},   {"ext_xx", d.ext_xx}, {"ext_yy", d.ext_yy}};
}

nlohmann::json certificate_to_json(const ExtPairCertificate& c) {
  nlohmann::json j;
  j["construction"] = c.construction;
  j["quiver"] = to_text(*c.quiver);
  j["over_input_quiver"] = c.over_input_quiver;
  j["trail"] = c.trail;
  j["dim_x"] = c.x.dims();
  j["dim_y"] = c.y.dims();
  j["dimensions"] = pair_dimensions_to_json(c.dims);
  j["x"] = to_json(c.x);
  j["y"] = to_json(c.y);
  if (c.kronecker_facts) {
    const auto& f = *c.kronecker_facts;
    j["kronecker_quotient"] = {{"quotient_dims", f.quotient_dims},
                               {"translate_dims", f.translate_dims},
                               {"isomorphic", f.quotient_matches},
                               {"ext_translate_projective", f.ext_translate_projective},
                               {"socle_part_dim", f.socle_part_dim},
                               {"radical_dim", f.radical_dim}};
  }
  return j;
}

}  // namespace ftors
