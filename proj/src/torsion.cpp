#include "ftors/torsion.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ftors/errors.hpp"
#include "ftors/reflection.hpp"

namespace ftors {

Universe universe_from_ar(const ARQuiver& ar) {
  Universe u{ar.quiver, ar.prime, {}, false, 0};
  for (const auto& node : ar.nodes) u.modules.push_back(node.module);
  return u;
}

namespace {

void add_unique(std::vector<Representation>& list, Representation m, Rng& rng) {
  for (const auto& x : list)
    if (x.dims() == m.dims() && is_isomorphic(x, m, rng)) return;
  list.push_back(std::move(m));
}

FpMatrix jordan_block(int n, int lambda, int p) {
  FpMatrix j = FpMatrix::identity(n, p).scaled(lambda);
  for (int i = 0; i + 1 < n; ++i) j.set(i, i + 1, 1);
  return j;
}

}  // namespace

Universe bounded_universe(const QuiverPtr& q, int p, int dim_bound) {
  if (dim_bound < 1) throw PreconditionError("dimension bound must be positive");
  Universe u{q, p, {}, true, dim_bound};
  Rng rng(0);
  for (int i = 0; i < q->size(); ++i) {
    for (Representation m = standard_module(q, StandardKind::Projective, i, p);
         !m.is_zero() && m.total_dim() <= dim_bound;) {
      add_unique(u.modules, m, rng);
      if (is_injective(m)) break;
      m = coxeter_functor_minus(m);
    }
    for (Representation m = standard_module(q, StandardKind::Injective, i, p);
         !m.is_zero() && m.total_dim() <= dim_bound;) {
      add_unique(u.modules, m, rng);
      if (is_projective(m)) break;
      m = coxeter_functor_plus(m);
    }
  }
  const bool kronecker = q->size() == 2 && q->arrows().size() == 2 && q->arrow_count(0, 1) == 2;
  if (kronecker) {
    for (int n = 1; 2 * n <= dim_bound; ++n) {
      for (int lambda = 0; lambda <= p; ++lambda) {  // lambda == p is the point at infinity
        std::vector<FpMatrix> maps = lambda < p
                                         ? std::vector<FpMatrix>{FpMatrix::identity(n, p), jordan_block(n, lambda, p)}
                                         : std::vector<FpMatrix>{jordan_block(n, 0, p), FpMatrix::identity(n, p)};
        add_unique(u.modules, Representation(q, p, {n, n}, std::move(maps)), rng);
      }
    }
  }
  std::stable_sort(u.modules.begin(), u.modules.end(), [](const Representation& a, const Representation& b) {
    return a.total_dim() != b.total_dim() ? a.total_dim() < b.total_dim() : a.dims() < b.dims();
  });
  return u;
}

int member_count(const MemberSet& s) { return static_cast<int>(std::count(s.begin(), s.end(), true)); }

std::vector<int> member_indices(const MemberSet& s) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    if (s[i]) out.push_back(i);
  return out;
}

bool is_subset(const MemberSet& a, const MemberSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

TorsionContext::TorsionContext(Universe universe, std::uint64_t seed, long long cap)
    : universe_(std::move(universe)), cap_(cap), rng_(seed) {}

const std::vector<FpMatrix>& TorsionContext::trace(int from, int into) const {
  auto key = std::make_pair(from, into);
  auto it = traces_.find(key);
  if (it == traces_.end()) {
    it = traces_.emplace(key, trace_submodule({universe_.modules[from]}, universe_.modules[into]).inclusion).first;
  }
  return it->second;
}

MemberSet TorsionContext::gen_closure(const std::vector<Representation>& gens) const {
  MemberSet out = empty_set();
  if (gens.empty()) return out;
  for (int n = 0; n < size(); ++n) out[n] = generates(gens, universe_.modules[n]);
  return out;
}

MemberSet TorsionContext::gen_closure(const MemberSet& gens) const {
  MemberSet out = gens;
  const auto idx = member_indices(gens);
  if (idx.empty()) return out;
  const int p = universe_.prime;
  for (int n = 0; n < size(); ++n) {
    if (out[n]) continue;
    const Representation& target = universe_.modules[n];
    bool all = true;
    for (int v = 0; v < target.quiver().size() && all; ++v) {
      if (target.dim(v) == 0) continue;
      std::vector<FpMatrix> parts;
      for (int s : idx) parts.push_back(trace(s, n)[v]);
      all = rank(FpMatrix::hstack(parts, target.dim(v), p)) == target.dim(v);
    }
    out[n] = all;
  }
  return out;
}

std::optional<int> TorsionContext::index_of(const Representation& m) const {
  for (int i = 0; i < size(); ++i) {
    const auto& u = universe_.modules[i];
    if (u.dims() == m.dims() && is_isomorphic(u, m, rng_)) return i;
  }
  return std::nullopt;
}

const MemberSet& TorsionContext::pair_summands(int top, int sub) const {
  auto key = std::make_pair(top, sub);
  auto it = summands_.find(key);
  if (it != summands_.end()) return it->second;
  MemberSet found = empty_set();
  const auto& b = universe_.modules[top];
  const auto& a = universe_.modules[sub];
  if (ext_dim(b, a) > 0) {
    for (const auto& mid : middle_terms(b, a, rng_, cap_)) {
      for (const auto& s : decompose(mid, rng_)) {
        if (auto i = index_of(s.module)) {
          found[*i] = true;
        } else {
          ++escaped_;
        }
      }
    }
  }
  return summands_.emplace(key, std::move(found)).first->second;
}

MemberSet TorsionContext::extension_summands(const MemberSet& s) const {
  MemberSet out = empty_set();
  const auto idx = member_indices(s);
  for (int b : idx)
    for (int a : idx) {
      const auto& found = pair_summands(b, a);
      for (int i = 0; i < size(); ++i)
        if (found[i]) out[i] = true;
    }
  return out;
}

TorsionClass TorsionContext::torsion_closure(const MemberSet& gens) const {
  MemberSet cur = gen_closure(gens);
  while (true) {
    MemberSet next = cur;
    const MemberSet ext = extension_summands(cur);
    for (int i = 0; i < size(); ++i)
      if (ext[i]) next[i] = true;
    next = gen_closure(next);
    if (next == cur) break;
    cur = std::move(next);
  }
  return TorsionClass{cur, universe_.bounded};
}

bool TorsionContext::is_quotient_closed(const MemberSet& s) const { return gen_closure(s) == s; }

// With quotient closure in place, nonsplit extensions of pairs of
// indecomposable members suffice: an extension with decomposable end terms
// is a quotient of, or an iterated extension by, such pairwise extensions.
bool TorsionContext::is_extension_closed(const MemberSet& s) const { return is_subset(extension_summands(s), s); }

namespace {

void canonical_sort(std::vector<TorsionClass>& classes) {
  std::sort(classes.begin(), classes.end(), [](const TorsionClass& a, const TorsionClass& b) {
    const int ca = member_count(a.members), cb = member_count(b.members);
    if (ca != cb) return ca < cb;
    return member_indices(a.members) < member_indices(b.members);
  });
}

}  // namespace

std::vector<TorsionClass> enumerate_torsion_classes(const TorsionContext& ctx) {
  std::set<MemberSet> seen{ctx.empty_set()};
  std::deque<MemberSet> queue{ctx.empty_set()};
  while (!queue.empty()) {
    const MemberSet cur = queue.front();
    queue.pop_front();
    for (int x = 0; x < ctx.size(); ++x) {
      if (cur[x]) continue;
      MemberSet gens = cur;
      gens[x] = true;
      MemberSet next = ctx.torsion_closure(gens).members;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<TorsionClass> out;
  for (const auto& s : seen) out.push_back(TorsionClass{s, ctx.universe().bounded});
  canonical_sort(out);
  return out;
}

std::vector<TorsionClass> brute_force_torsion_classes(const TorsionContext& ctx) {
  const int n = ctx.size();
  if (n > 20) throw PreconditionError("powerset oracle limited to 20 modules");
  std::vector<TorsionClass> out;
  for (std::uint32_t code = 0; code < (1u << n); ++code) {
    MemberSet s(n, false);
    for (int i = 0; i < n; ++i) s[i] = (code >> i) & 1u;
    if (ctx.is_torsion_class(s)) out.push_back(TorsionClass{s, ctx.universe().bounded});
  }
  canonical_sort(out);
  return out;
}

std::optional<NormalForm> find_cover(const TorsionContext& ctx, const TorsionClass& t, Rng& rng) {
  const auto& u = ctx.universe();
  std::vector<Representation> parts;
  for (int i : member_indices(t.members)) parts.push_back(u.modules[i]);
  NormalForm nf = normalize(direct_sum(parts, u.quiver, u.prime), rng);
  if (ctx.gen_closure(nf.summands) != t.members) return std::nullopt;
  return nf;
}

LatticeReport lattice_check(const TorsionContext& ctx, const std::vector<TorsionClass>& classes) {
  LatticeReport r;
  const int n = static_cast<int>(classes.size());
  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    if (r.failures.size() < 20) r.failures.push_back(msg);
  };
  std::map<MemberSet, int> index;
  for (int i = 0; i < n; ++i) index[classes[i].members] = i;

  std::vector<std::vector<int>> meet(n, std::vector<int>(n, -1)), join(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& a = classes[i].members;
      const auto& b = classes[j].members;
      MemberSet inter(a.size()), uni(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) {
        inter[k] = a[k] && b[k];
        uni[k] = a[k] || b[k];
      }
      const std::string pair = std::to_string(i) + "," + std::to_string(j);
      if (auto it = index.find(inter); it != index.end() && ctx.is_torsion_class(inter)) {
        meet[i][j] = it->second;
      } else {
        fail(r.meets_ok, "meet of " + pair + " is not a listed torsion class");
      }
      const MemberSet joined = ctx.torsion_closure(uni).members;
      auto it = index.find(joined);
      if (it == index.end()) {
        fail(r.joins_ok, "join of " + pair + " is not a listed torsion class");
        continue;
      }
      join[i][j] = it->second;
      for (int k = 0; k < n; ++k) {
        const auto& c = classes[k].members;
        if (is_subset(a, c) && is_subset(b, c) && !is_subset(joined, c)) {
          fail(r.joins_ok, "join of " + pair + " is not least below class " + std::to_string(k));
        }
      }
    }
  }

  if (r.meets_ok && r.joins_ok) {
    for (int a = 0; a < n; ++a) {
      if (meet[a][a] != a || join[a][a] != a) fail(r.axioms_ok, "idempotence fails at " + std::to_string(a));
      for (int b = 0; b < n; ++b) {
        const std::string pair = std::to_string(a) + "," + std::to_string(b);
        if (meet[a][b] != meet[b][a] || join[a][b] != join[b][a]) fail(r.axioms_ok, "commutativity fails at " + pair);
        if (meet[a][join[a][b]] != a || join[a][meet[a][b]] != a) fail(r.axioms_ok, "absorption fails at " + pair);
        for (int c = 0; c < n; ++c) {
          if (meet[meet[a][b]][c] != meet[a][meet[b][c]] || join[join[a][b]][c] != join[a][join[b][c]]) {
            fail(r.axioms_ok, "associativity fails at " + pair + "," + std::to_string(c));
          }
        }
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !is_subset(classes[i].members, classes[j].members)) continue;
      bool covering = true;
      for (int k = 0; k < n && covering; ++k) {
        if (k == i || k == j) continue;
        if (is_subset(classes[i].members, classes[k].members) && is_subset(classes[k].members, classes[j].members)) {
          covering = false;
        }
      }
      if (covering) r.hasse.push_back({i, j});
    }
  }
  return r;
}

namespace {

std::string class_label(const TorsionContext& ctx, const MemberSet& s) {
  std::string label = "{";
  bool first = true;
  for (int i : member_indices(s)) {
    label += (first ? "" : " ") + dims_string(ctx.universe().modules[i].dims());
    first = false;
  }
  return label + "}";
}

}  // namespace

std::string emit_hasse_dot(const TorsionContext& ctx, const std::vector<TorsionClass>& classes,
                           const std::vector<std::pair<int, int>>& hasse) {
  std::ostringstream os;
  os << "digraph torsion_classes {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    os << "  t" << i << " [label=\"" << class_label(ctx, classes[i].members) << "\"];\n";
  }
  for (const auto& [lo, hi] : hasse) os << "  t" << lo << " -> t" << hi << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::json torsion_report_json(const TorsionContext& ctx, const std::vector<TorsionClass>& classes,
                                   const std::vector<std::optional<NormalForm>>& covers, const LatticeReport& lattice) {
  nlohmann::json j;
  const auto& u = ctx.universe();
  j["universe"] = nlohmann::json::array();
  for (const auto& m : u.modules) j["universe"].push_back(m.dims());
  j["bounded"] = u.bounded;
  if (u.bounded) j["dim_bound"] = u.dim_bound;
  j["classes"] = nlohmann::json::array();
  for (const auto& c : classes) j["classes"].push_back(member_indices(c.members));
  j["covers"] = nlohmann::json::array();
  for (const auto& c : covers) {
    if (!c) {
      j["covers"].push_back(nullptr);
      continue;
    }
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& s : c->summands) parts.push_back(s.dims());
    j["covers"].push_back(parts);
  }
  j["lattice"] = {{"meets_ok", lattice.meets_ok},
                  {"joins_ok", lattice.joins_ok},
                  {"axioms_ok", lattice.axioms_ok},
                  {"lattice_ok", lattice.ok()},
                  {"failures", lattice.failures},
                  {"hasse", lattice.hasse}};
  return j;
}

TwoSimpleReport two_simple_bounded_check(const QuiverPtr& q, int p, int dim_bound) {
  if (q->size() != 2) throw PreconditionError("two-simple check needs a quiver with two vertices");
  const Universe u = bounded_universe(q, p, dim_bound);
  const int n = static_cast<int>(u.modules.size());
  TwoSimpleReport r;
  r.universe_size = n;

  std::vector<std::vector<int>> hom(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) hom[i][j] = hom_dim(u.modules[i], u.modules[j]);
  std::vector<int> rigid;
  for (int i = 0; i < n; ++i)
    if (ext_dim(u.modules[i], u.modules[i]) == 0) rigid.push_back(i);

  auto generated = [&](const std::vector<int>& cover) {
    MemberSet s(n, false);
    if (cover.empty()) return s;
    std::vector<Representation> gens;
    for (int c : cover) gens.push_back(u.modules[c]);
    for (int k = 0; k < n; ++k) s[k] = generates(gens, u.modules[k]);
    return s;
  };

  std::vector<std::vector<int>> covers{{}};
  for (std::size_t a = 0; a < rigid.size(); ++a) {
    covers.push_back({rigid[a]});
    for (std::size_t b = a + 1; b < rigid.size(); ++b) {
      if (ext_dim(u.modules[rigid[a]], u.modules[rigid[b]]) == 0 &&
          ext_dim(u.modules[rigid[b]], u.modules[rigid[a]]) == 0) {
        covers.push_back({rigid[a], rigid[b]});
      }
    }
  }
  std::vector<MemberSet> family;
  std::vector<std::vector<int>> family_covers;
  for (const auto& c : covers) {
    MemberSet s = generated(c);
    if (std::find(family.begin(), family.end(), s) == family.end()) {
      family.push_back(std::move(s));
      family_covers.push_back(c);
    }
  }
  r.family_size = static_cast<int>(family.size());
  auto in_family = [&](const MemberSet& s) { return std::find(family.begin(), family.end(), s) != family.end(); };
  auto fail = [&](const std::string& msg) {
    if (r.failures.size() < 20) r.failures.push_back(msg);
  };

  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a; b < family.size(); ++b) {
      MemberSet inter(n), uni(n);
      for (int k = 0; k < n; ++k) {
        inter[k] = family[a][k] && family[b][k];
        uni[k] = family[a][k] || family[b][k];
      }
      ++r.meets_checked;
      if (!in_family(inter)) fail("meet of classes " + std::to_string(a) + "," + std::to_string(b) + " has no cover");

      MemberSet torsion_free(n, false), joined(n, false);
      for (int k = 0; k < n; ++k) {
        bool orthogonal = true;
        for (int s : member_indices(uni)) orthogonal = orthogonal && hom[s][k] == 0;
        torsion_free[k] = orthogonal;
      }
      for (int k = 0; k < n; ++k) {
        bool orthogonal = true;
        for (int f : member_indices(torsion_free)) orthogonal = orthogonal && hom[k][f] == 0;
        joined[k] = orthogonal;
      }
      ++r.joins_checked;
      std::vector<int> both = family_covers[a];
      both.insert(both.end(), family_covers[b].begin(), family_covers[b].end());
      const std::string pair = std::to_string(a) + "," + std::to_string(b);
      if (!is_subset(uni, joined) || !is_subset(generated(both), joined)) {
        fail("join of classes " + pair + " is not an upper bound");
      } else if (!in_family(joined)) {
        fail("join of classes " + pair + " has no cover");
      }
    }
  }
  return r;
}

}  // namespace ftors
