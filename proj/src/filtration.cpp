#include "ftors/filtration.hpp"

#include <stdexcept>

#include "ftors/decompose.hpp"
#include "ftors/errors.hpp"

namespace ftors {

namespace {

constexpr std::size_t kMaxObjects = 64;
constexpr long long kFullEnumeration = 125;

// Nonsplit middle terms: every class up to scalars when the Ext space is
// small, otherwise the basis classes and their sum.
std::vector<Representation> nonsplit_terms(const Representation& top, const Representation& sub, Rng& rng,
                                           long long cap, bool& truncated) {
  const auto basis = ext_basis(top, sub);
  if (basis.empty()) return {};
  long long classes = 1;
  for (std::size_t i = 0; i < basis.size() && classes <= kFullEnumeration; ++i) classes *= top.prime();
  if (classes <= kFullEnumeration) {
    auto terms = middle_terms(top, sub, rng, cap);
    terms.erase(terms.begin());
    return terms;
  }
  truncated = true;
  std::vector<Representation> out;
  for (const auto& c : basis) out.push_back(extension_module(top, sub, c));
  out.push_back(extension_module(top, sub, combine(basis, std::vector<int>(basis.size(), 1), top, sub)));
  return out;
}

}  // namespace

std::string ext_cycle_violation(const std::vector<Representation>& cycle) {
  const int m = static_cast<int>(cycle.size());
  if (m == 0) return "empty cycle";
  for (int i = 0; i < m; ++i) {
    if (cycle[i].is_zero()) return "module " + std::to_string(i + 1) + " is zero";
    if (!cycle[i].same_quiver(cycle[0])) return "modules live over different quivers";
    if (hom_dim(cycle[i], cycle[i]) != 1) return "module " + std::to_string(i + 1) + " is not a brick";
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && hom_dim(cycle[i], cycle[j]) != 0) {
        return "Hom(X" + std::to_string(i + 1) + ",X" + std::to_string(j + 1) + ") is nonzero";
      }
  for (int i = 0; i < m; ++i) {
    const int prev = (i + m - 1) % m;
    if (ext_dim(cycle[prev], cycle[i]) == 0) {
      return "Ext(X" + std::to_string(prev + 1) + ",X" + std::to_string(i + 1) + ") is zero";
    }
  }
  return {};
}

SubQuotient relative_radical(const Representation& m, const std::vector<Representation>& cycle) {
  const int n = m.quiver().size();
  const int p = m.prime();
  std::vector<std::vector<FpMatrix>> rows(n);
  for (const auto& x : cycle)
    for (const auto& f : hom_basis(m, x).basis)
      for (int v = 0; v < n; ++v) rows[v].push_back(f[v]);
  std::vector<FpMatrix> bases;
  for (int v = 0; v < n; ++v) {
    const FpMatrix stacked = rows[v].empty() ? FpMatrix(0, m.dim(v), p) : FpMatrix::vstack(rows[v], m.dim(v), p);
    bases.push_back(kernel(stacked));
  }
  return sub_quotient(m, bases);
}

int relative_loewy_length(const Representation& m, const std::vector<Representation>& cycle) {
  Representation cur = m;
  int length = 0;
  while (!cur.is_zero()) {
    Representation rad = relative_radical(cur, cycle).sub;
    if (rad.total_dim() == cur.total_dim()) throw PreconditionError("module is not filtered by the cycle");
    cur = std::move(rad);
    ++length;
  }
  return length;
}

FiltrationUniverse filtration_strata(const std::vector<Representation>& cycle, int max_length, Rng& rng,
                                     long long cap) {
  if (max_length < 1) throw PreconditionError("Loewy bound must be positive");
  if (auto why = ext_cycle_violation(cycle); !why.empty()) throw PreconditionError("not an Ext-cycle: " + why);
  FiltrationUniverse u;
  u.cycle = cycle;
  u.max_length = max_length;

  std::vector<Representation> frontier;
  for (const auto& x : cycle) {
    u.objects.push_back(FilteredObject{x, 1});
    frontier.push_back(x);
  }
  auto known = [&](const Representation& m) {
    for (const auto& o : u.objects)
      if (o.module.dims() == m.dims() && is_isomorphic(o.module, m, rng)) return true;
    return false;
  };
  for (int level = 2; level <= max_length && u.objects.size() < kMaxObjects; ++level) {
    std::vector<Representation> next;
    for (const auto& sub : frontier) {
      for (const auto& top : cycle) {
        for (const auto& term : nonsplit_terms(top, sub, rng, cap, u.truncated)) {
          for (auto& s : decompose(term, rng)) {
            if (u.objects.size() >= kMaxObjects) {
              u.truncated = true;
              break;
            }
            if (known(s.module)) continue;
            u.objects.push_back(FilteredObject{s.module, relative_loewy_length(s.module, cycle)});
            next.push_back(std::move(s.module));
          }
        }
      }
    }
    frontier = std::move(next);
  }

  // greedy uniserial objects, trying tops in cycle order
  u.serial.push_back(cycle.front());
  for (int t = 2; t <= max_length; ++t) {
    const Representation& below = u.serial.back();
    std::optional<Representation> found;
    for (const auto& top : cycle) {
      for (const auto& c : ext_basis(top, below)) {
        Representation e = extension_module(top, below, c);
        if (relative_loewy_length(e, cycle) == t && is_indecomposable(e, rng)) {
          found = std::move(e);
          break;
        }
      }
      if (found) break;
    }
    if (!found) throw std::logic_error("no uniserial extension of length " + std::to_string(t));
    u.serial.push_back(std::move(*found));
  }
  return u;
}

bool NoCoverEvidence::ok() const {
  if (static_cast<int>(witnesses.size()) != max_length - 1 || loewy_counterexamples != 0) return false;
  for (const auto& w : witnesses)
    if (w.generated) return false;
  return true;
}

NoCoverEvidence no_cover_evidence(const std::vector<Representation>& cycle, int max_length, Rng& rng,
                                  long long cap) {
  const FiltrationUniverse u = filtration_strata(cycle, max_length, rng, cap);
  NoCoverEvidence e;
  e.max_length = max_length;
  e.universe_size = static_cast<int>(u.objects.size());
  e.truncated = u.truncated;
  for (int r = 1; r < max_length; ++r) {
    std::vector<Representation> candidates;
    for (const auto& o : u.objects)
      if (o.loewy_length <= r) candidates.push_back(o.module);
    const Representation& w = u.serial[r];
    NoCoverWitness wit;
    wit.loewy_bound = r;
    wit.candidates = static_cast<int>(candidates.size());
    wit.witness_dims = w.dims();
    wit.witness_total_dim = w.total_dim();
    wit.trace_total_dim = trace_submodule(candidates, w).sub.total_dim();
    wit.generated = wit.trace_total_dim == wit.witness_total_dim;
    e.witnesses.push_back(wit);

    for (const auto& o : u.objects) {
      ++e.loewy_checks;
      if (o.loewy_length > r && generates(candidates, o.module)) ++e.loewy_counterexamples;
    }
  }
  return e;
}

nlohmann::json evidence_to_json(const NoCoverEvidence& e) {
  nlohmann::json j;
  j["loewy_bound"] = e.max_length;
  j["universe_size"] = e.universe_size;
  j["truncated"] = e.truncated;
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : e.witnesses) {
    j["witnesses"].push_back({{"r", w.loewy_bound},
                              {"candidates", w.candidates},
                              {"witness_dims", w.witness_dims},
                              {"witness_total_dim", w.witness_total_dim},
                              {"trace_total_dim", w.trace_total_dim},
                              {"generated", w.generated}});
  }
  j["loewy_checks"] = e.loewy_checks;
  j["loewy_counterexamples"] = e.loewy_counterexamples;
  j["ok"] = e.ok();
  j["note"] = "bounded evidence inside a truncated filtration universe, not a proof";
  return j;
}

}  // namespace ftors
