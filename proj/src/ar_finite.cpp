#include "ftors/ar_finite.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ftors/errors.hpp"
#include "ftors/reflection.hpp"

namespace ftors {

std::optional<int> ARQuiver::find(const DimVector& root) const {
  for (int k = 0; k < static_cast<int>(nodes.size()); ++k)
    if (nodes[k].root == root) return k;
  return std::nullopt;
}

ARQuiver knit_ar_quiver(const QuiverPtr& q, int p) {
  if (!q->is_path_algebra()) throw PreconditionError("knitting needs a path-algebra quiver");
  if (classify_type(*q).family != TypeFamily::Dynkin) throw PreconditionError("knitting needs a Dynkin quiver");
  const int n = q->size();
  const auto topo = q->topological_order();

  ARQuiver ar;
  ar.quiver = q;
  ar.prime = p;
  std::map<std::pair<int, int>, int> index;  // (step, vertex) -> node
  std::vector<std::optional<Representation>> current(n);
  for (int i = 0; i < n; ++i) current[i] = standard_module(q, StandardKind::Projective, i, p);

  const auto roots = positive_roots(*q);
  for (int step = 0;; ++step) {
    bool any = false;
    for (int i : topo) {
      if (!current[i] || current[i]->is_zero()) continue;
      any = true;
      index[{step, i}] = static_cast<int>(ar.nodes.size());
      ar.nodes.push_back(ARNode{current[i]->dims(), *current[i], i, step});
    }
    if (!any) break;
    if (static_cast<int>(ar.nodes.size()) > static_cast<int>(roots.size())) {
      throw std::logic_error("knitting produced more modules than positive roots");
    }
    for (int i = 0; i < n; ++i) {
      if (!current[i] || current[i]->is_zero()) continue;
      if (is_injective(*current[i])) {
        current[i].reset();
      } else {
        current[i] = coxeter_functor_minus(*current[i]);
      }
    }
  }

  std::map<std::pair<int, int>, int> mult;
  for (const auto& a : q->arrows()) {
    // P(j) -> P(i) for an arrow i -> j, and the mesh partner tau^{-1}P(j)
    for (const auto& [key, node] : index) {
      const auto [step, v] = key;
      if (v == a.target) {
        if (auto it = index.find({step, a.source}); it != index.end()) ++mult[{node, it->second}];
      }
      if (v == a.source) {
        if (auto it = index.find({step + 1, a.target}); it != index.end()) ++mult[{node, it->second}];
      }
    }
  }
  for (const auto& [edge, m] : mult) ar.arrows.push_back(ARArrow{edge.first, edge.second, m});
  for (const auto& [key, node] : index) {
    if (key.first == 0) continue;
    ar.tau_pairs.push_back({node, index.at({key.first - 1, key.second})});
  }

  std::set<DimVector> knitted, expected(roots.begin(), roots.end());
  for (const auto& node : ar.nodes) knitted.insert(node.root);
  if (knitted != expected || knitted.size() != ar.nodes.size()) {
    throw std::logic_error("knitting mismatch: node dimension vectors differ from the positive roots");
  }
  return ar;
}

const Representation& indecomposable_for_root(const ARQuiver& ar, const DimVector& r) {
  auto k = ar.find(r);
  if (!k) throw PreconditionError("not a positive root: " + dims_string(r));
  return ar.nodes[*k].module;
}

bool meshes_consistent(const ARQuiver& ar) {
  std::map<int, int> inverse_tau;
  for (const auto& [x, tx] : ar.tau_pairs) inverse_tau[tx] = x;
  const std::size_t n = ar.quiver->size();
  for (const auto& [start, end] : inverse_tau) {
    DimVector lhs(n, 0), rhs(n, 0);
    for (std::size_t v = 0; v < n; ++v) lhs[v] = ar.nodes[start].root[v] + ar.nodes[end].root[v];
    for (const auto& a : ar.arrows) {
      if (a.from != start) continue;
      for (std::size_t v = 0; v < n; ++v) rhs[v] += a.multiplicity * ar.nodes[a.to].root[v];
    }
    if (lhs != rhs) return false;
  }
  return true;
}

std::string emit_dot(const ARQuiver& ar) {
  std::ostringstream os;
  os << "digraph ar_quiver {\n  rankdir=LR;\n";
  for (std::size_t k = 0; k < ar.nodes.size(); ++k) {
    os << "  n" << k << " [label=\"" << dims_string(ar.nodes[k].root) << "\"];\n";
  }
  for (const auto& a : ar.arrows) {
    os << "  n" << a.from << " -> n" << a.to;
    if (a.multiplicity > 1) os << " [label=\"" << a.multiplicity << "\"]";
    os << ";\n";
  }
  for (const auto& [x, tx] : ar.tau_pairs) {
    os << "  n" << x << " -> n" << tx << " [style=dashed, constraint=false];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ftors
