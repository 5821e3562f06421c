#include "ftors/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"

#include "ftors/errors.hpp"
#include "ftors/numerics.hpp"

namespace ftors {

namespace {

bool connected(int n, const std::vector<Arrow>& arrows, const std::vector<int>& subset) {
  if (subset.empty()) return false;
  std::set<int> members(subset.begin(), subset.end());
  std::set<int> seen{subset.front()};
  std::vector<int> stack{subset.front()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& a : arrows) {
      for (auto [x, y] : {std::pair{a.source, a.target}, std::pair{a.target, a.source}}) {
        if (x == v && members.count(y) && !seen.count(y)) {
          seen.insert(y);
          stack.push_back(y);
        }
      }
    }
  }
  (void)n;
  return seen.size() == members.size();
}

void sort_arrows(std::vector<Arrow>& arrows) {
  std::stable_sort(arrows.begin(), arrows.end(), [](const Arrow& x, const Arrow& y) {
    return std::tie(x.source, x.target) < std::tie(y.source, y.target);
  });
}

}  // namespace

Quiver::Quiver(int n_vertices, std::vector<Arrow> arrows, std::vector<std::string> labels)
    : n_(n_vertices), arrows_(std::move(arrows)), labels_(std::move(labels)) {
  if (n_ < 1) throw InvalidQuiver("quiver needs at least one vertex");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n_) {
    throw InvalidQuiver("label count does not match vertex count");
  }
  for (const auto& a : arrows_) {
    if (a.source < 0 || a.source >= n_ || a.target < 0 || a.target >= n_) {
      throw InvalidQuiver("arrow endpoint out of range");
    }
    if (a.source == a.target) {
      throw InvalidQuiver("loop at vertex " + std::to_string(a.source + 1));
    }
    if (a.a < 1 || a.b < 1) throw InvalidQuiver("valuation entries must be positive");
  }
  if (static_cast<int>(topological_order().size()) != n_) {
    throw InvalidQuiver("directed cycle detected");
  }
  std::vector<int> all(n_);
  std::iota(all.begin(), all.end(), 0);
  if (!connected(n_, arrows_, all)) throw InvalidQuiver("underlying graph is disconnected");
}

std::string Quiver::label(int v) const {
  if (!labels_.empty()) return labels_.at(v);
  return std::to_string(v + 1);
}

bool Quiver::is_path_algebra() const {
  return std::all_of(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.plain(); });
}

std::vector<int> Quiver::arrows_into(int v) const {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(arrows_.size()); ++k)
    if (arrows_[k].target == v) out.push_back(k);
  return out;
}

std::vector<int> Quiver::arrows_out_of(int v) const {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(arrows_.size()); ++k)
    if (arrows_[k].source == v) out.push_back(k);
  return out;
}

int Quiver::arrow_count(int i, int j) const {
  return static_cast<int>(std::count_if(arrows_.begin(), arrows_.end(),
                                        [&](const Arrow& a) { return a.source == i && a.target == j; }));
}

std::vector<int> Quiver::topological_order() const {
  std::vector<int> indegree(n_, 0);
  for (const auto& a : arrows_) ++indegree[a.target];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n_; ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<int> order;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (const auto& a : arrows_) {
      if (a.source == v && --indegree[a.target] == 0) ready.push(a.target);
    }
  }
  return order;
}

Quiver parse_quiver(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  int line_no = 0;
  std::vector<Arrow> arrows;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    // ';' separates statements on one line
    std::replace(line.begin(), line.end(), ';', '\n');
    std::istringstream stmts(line);
    std::string stmt;
    while (std::getline(stmts, stmt)) {
      std::istringstream ls(stmt);
      std::string keyword;
      if (!(ls >> keyword)) continue;
      std::vector<long long> nums;
      std::string tok;
      while (ls >> tok) {
        try {
          std::size_t pos = 0;
          long long v = std::stoll(tok, &pos);
          if (pos != tok.size()) throw std::invalid_argument(tok);
          nums.push_back(v);
        } catch (const std::exception&) {
          throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" + tok + "'");
        }
      }
      if (keyword == "vertices") {
        if (n != -1) throw ParseError("line " + std::to_string(line_no) + ": duplicate 'vertices'");
        if (nums.size() != 1 || nums[0] < 1) {
          throw ParseError("line " + std::to_string(line_no) + ": 'vertices' takes one positive integer");
        }
        n = static_cast<int>(nums[0]);
      } else if (keyword == "arrow") {
        if (n == -1) throw ParseError("line " + std::to_string(line_no) + ": 'arrow' before 'vertices'");
        if (nums.size() != 2 && nums.size() != 4) {
          throw ParseError("line " + std::to_string(line_no) + ": 'arrow' takes 2 or 4 integers");
        }
        for (std::size_t k = 0; k < 2; ++k) {
          if (nums[k] < 1 || nums[k] > n) {
            throw ParseError("line " + std::to_string(line_no) + ": vertex out of range");
          }
        }
        Arrow a{static_cast<int>(nums[0]) - 1, static_cast<int>(nums[1]) - 1, 1, 1};
        if (nums.size() == 4) {
          a.a = static_cast<int>(nums[2]);
          a.b = static_cast<int>(nums[3]);
        }
        arrows.push_back(a);
      } else {
        throw ParseError("line " + std::to_string(line_no) + ": unknown keyword '" + keyword + "'");
      }
    }
  }
  if (n == -1) throw ParseError("missing 'vertices' declaration");
  sort_arrows(arrows);
  return Quiver(n, std::move(arrows));
}

Quiver parse_quiver_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_number_integer()) {
    throw ParseError("JSON quiver needs an integer field 'vertices'");
  }
  const long long n = j["vertices"].get<long long>();
  if (n < 1) throw ParseError("'vertices' must be positive");
  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) throw ParseError("'arrows' must be an array");
    for (const auto& entry : j["arrows"]) {
      if (!entry.is_array() || (entry.size() != 2 && entry.size() != 4)) {
        throw ParseError("each arrow must be [i, j] or [i, j, a, b]");
      }
      std::vector<long long> nums;
      for (const auto& x : entry) {
        if (!x.is_number_integer()) throw ParseError("arrow entries must be integers");
        nums.push_back(x.get<long long>());
      }
      for (std::size_t k = 0; k < 2; ++k) {
        if (nums[k] < 1 || nums[k] > n) throw ParseError("vertex out of range");
      }
      Arrow a{static_cast<int>(nums[0]) - 1, static_cast<int>(nums[1]) - 1, 1, 1};
      if (nums.size() == 4) {
        a.a = static_cast<int>(nums[2]);
        a.b = static_cast<int>(nums[3]);
      }
      arrows.push_back(a);
    }
  }
  sort_arrows(arrows);
  return Quiver(static_cast<int>(n), std::move(arrows));
}

Quiver parse_quiver_any(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_quiver_json(text);
    break;
  }
  return parse_quiver(text);
}

std::string to_text(const Quiver& q) {
  std::ostringstream os;
  os << "vertices " << q.size() << "\n";
  for (const auto& a : q.arrows()) {
    os << "arrow " << a.source + 1 << " " << a.target + 1;
    if (!a.plain()) os << " " << a.a << " " << a.b;
    os << "\n";
  }
  return os.str();
}

Quiver reflect_at(const Quiver& q, int v) {
  if (v < 0 || v >= q.size()) throw InvalidQuiver("vertex out of range");
  if (!q.is_sink(v) && !q.is_source(v)) {
    throw PreconditionError("vertex " + std::to_string(v + 1) + " is neither a sink nor a source");
  }
  std::vector<Arrow> arrows = q.arrows();
  for (auto& a : arrows) {
    if (a.source == v || a.target == v) {
      std::swap(a.source, a.target);
      std::swap(a.a, a.b);
    }
  }
  return Quiver(q.size(), std::move(arrows), q.labels());
}

int valuation(const Quiver& q, int i, int j) {
  int sa = 0, sb = 0;
  for (const auto& a : q.arrows()) {
    if (a.source == i && a.target == j) {
      sa += a.a;
      sb += a.b;
    }
  }
  return sa * sb;
}

Subquiver subquiver_restrict(const Quiver& q, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.empty()) throw InvalidQuiver("empty vertex selection");
  for (int v : vertices)
    if (v < 0 || v >= q.size()) throw InvalidQuiver("vertex out of range");
  if (!connected(q.size(), q.arrows(), vertices)) throw InvalidQuiver("selected vertices are disconnected");
  std::map<int, int> index;
  for (int k = 0; k < static_cast<int>(vertices.size()); ++k) index[vertices[k]] = k;
  std::vector<Arrow> arrows;
  std::vector<int> arrow_map;
  for (int k = 0; k < static_cast<int>(q.arrows().size()); ++k) {
    const auto& a = q.arrows()[k];
    if (index.count(a.source) && index.count(a.target)) {
      arrows.push_back({index[a.source], index[a.target], a.a, a.b});
      arrow_map.push_back(k);
    }
  }
  std::vector<std::string> labels;
  if (!q.labels().empty())
    for (int v : vertices) labels.push_back(q.labels()[v]);
  return Subquiver{Quiver(static_cast<int>(vertices.size()), std::move(arrows), std::move(labels)), vertices,
                   arrow_map};
}

bool underlying_graph_has_cycle(const Quiver& q) {
  // a simple graph on n vertices that is connected is a tree iff it has n-1 edges
  std::set<std::pair<int, int>> edges;
  for (const auto& a : q.arrows()) edges.insert({std::min(a.source, a.target), std::max(a.source, a.target)});
  return static_cast<int>(edges.size()) != q.size() - 1;
}

namespace {

// Sizes of the arms hanging off a branch vertex of a simple tree.
std::vector<int> arm_lengths(const std::vector<std::vector<int>>& adj, int branch) {
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int prev = branch, cur = start, len = 1;
    while (adj[cur].size() == 2) {
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  return arms;
}

std::string type_name(const Quiver& q, TypeFamily family) {
  const int n = q.size();
  std::map<std::pair<int, int>, int> mult;
  bool plain = q.is_path_algebra();
  for (const auto& a : q.arrows()) ++mult[{std::min(a.source, a.target), std::max(a.source, a.target)}];
  bool simply_laced = plain;
  for (const auto& [e, m] : mult)
    if (m > 1) simply_laced = false;
  if (family == TypeFamily::Wild) return "wild";
  if (!simply_laced) {
    if (family == TypeFamily::Euclidean && n == 2 && plain) return "~A1";
    return (family == TypeFamily::Dynkin ? "valued-Dynkin" : "valued-Euclidean") + std::to_string(n);
  }
  std::vector<std::vector<int>> adj(n);
  for (const auto& [e, m] : mult) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  const bool cycle = static_cast<int>(mult.size()) != n - 1;
  std::vector<int> branches;
  for (int v = 0; v < n; ++v)
    if (adj[v].size() >= 3) branches.push_back(v);
  if (family == TypeFamily::Dynkin) {
    if (branches.empty()) return "A" + std::to_string(n);
    auto arms = arm_lengths(adj, branches[0]);
    if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
    return "E" + std::to_string(n);
  }
  if (cycle) return "~A" + std::to_string(n - 1);
  if (branches.size() >= 2 || adj[branches[0]].size() == 4) return "~D" + std::to_string(n - 1);
  return "~E" + std::to_string(n - 1);
}

}  // namespace

QuiverType classify_type(const Quiver& q) {
  const IntMatrix c = cartan_matrix(q);
  const int n = q.size();
  bool proper_positive = true;
  long long full_det = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    IntMatrix sub(idx.size(), std::vector<long long>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t s = 0; s < idx.size(); ++s) sub[r][s] = c[idx[r]][idx[s]];
    const long long d = determinant(sub);
    if (static_cast<int>(idx.size()) == n) {
      full_det = d;
    } else if (d <= 0) {
      proper_positive = false;
    }
  }
  QuiverType t;
  if (proper_positive && full_det > 0) {
    t.family = TypeFamily::Dynkin;
  } else if (proper_positive && full_det == 0) {
    t.family = TypeFamily::Euclidean;
  } else {
    t.family = TypeFamily::Wild;
  }
  t.name = type_name(q, t.family);
  return t;
}

}  // namespace ftors
