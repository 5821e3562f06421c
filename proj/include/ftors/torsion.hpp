#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ftors/ar_finite.hpp"
#include "ftors/decompose.hpp"
#include "ftors/extensions.hpp"

namespace ftors {

/// Ambient list of pairwise non-isomorphic indecomposables. In finite type
/// it is the whole AR quiver; otherwise a truncation by total dimension.
struct Universe {
  QuiverPtr quiver;
  int prime = 5;
  std::vector<Representation> modules;
  bool bounded = false;
  int dim_bound = 0;
};

Universe universe_from_ar(const ARQuiver& ar);

/// Preprojectives and preinjectives of total dimension <= bound (by Coxeter
/// functors from the projectives and injectives) and, for the Kronecker
/// quiver, the regular modules of the rational points of P^1(F_p).
Universe bounded_universe(const QuiverPtr& q, int p, int dim_bound);

using MemberSet = std::vector<bool>;

int member_count(const MemberSet& s);
std::vector<int> member_indices(const MemberSet& s);
bool is_subset(const MemberSet& a, const MemberSet& b);

struct TorsionClass {
  MemberSet members;
  bool bounded = false;  // computed inside a truncated universe
};

/// Closure operations over a fixed universe. Traces between universe
/// modules and extension summands are cached on first use.
class TorsionContext {
 public:
  explicit TorsionContext(Universe universe, std::uint64_t seed = 0, long long cap = kDefaultMiddleTermCap);

  const Universe& universe() const { return universe_; }
  int size() const { return static_cast<int>(universe_.modules.size()); }
  MemberSet empty_set() const { return MemberSet(size(), false); }
  MemberSet full_set() const { return MemberSet(size(), true); }

  /// Universe modules generated by the given modules.
  MemberSet gen_closure(const std::vector<Representation>& gens) const;
  MemberSet gen_closure(const MemberSet& gens) const;

  /// Indecomposable summands of middle terms of nonsplit extensions
  /// between members. Summands outside the universe are dropped and counted.
  MemberSet extension_summands(const MemberSet& s) const;

  /// Least fixpoint of generation and extension steps containing `gens`.
  TorsionClass torsion_closure(const MemberSet& gens) const;

  bool is_quotient_closed(const MemberSet& s) const;
  bool is_extension_closed(const MemberSet& s) const;
  bool is_torsion_class(const MemberSet& s) const { return is_quotient_closed(s) && is_extension_closed(s); }

  /// Universe index of a module isomorphic to m.
  std::optional<int> index_of(const Representation& m) const;

  int escaped_summands() const { return escaped_; }

 private:
  const std::vector<FpMatrix>& trace(int from, int into) const;
  const MemberSet& pair_summands(int top, int sub) const;

  Universe universe_;
  long long cap_;
  mutable Rng rng_;
  mutable std::map<std::pair<int, int>, std::vector<FpMatrix>> traces_;
  mutable std::map<std::pair<int, int>, MemberSet> summands_;
  mutable int escaped_ = 0;
};

/// All torsion classes of a finite universe: breadth-first closure of
/// T + {x} from the zero class. Sorted by size, then by member indices.
std::vector<TorsionClass> enumerate_torsion_classes(const TorsionContext& ctx);

/// Powerset oracle: every subset that is quotient- and extension-closed.
/// Limited to universes of at most 20 modules.
std::vector<TorsionClass> brute_force_torsion_classes(const TorsionContext& ctx);

/// nu of the sum of all members, if it generates exactly the class.
std::optional<NormalForm> find_cover(const TorsionContext& ctx, const TorsionClass& t, Rng& rng);

struct LatticeReport {
  bool meets_ok = true;
  bool joins_ok = true;
  bool axioms_ok = true;
  std::vector<std::string> failures;
  std::vector<std::pair<int, int>> hasse;  // covering relations (lower, upper)
  bool ok() const { return meets_ok && joins_ok && axioms_ok; }
};

/// Meets are intersections, joins are torsion closures of unions; both must
/// land in the list, joins must be least upper bounds, and the lattice
/// identities must hold on the resulting tables.
LatticeReport lattice_check(const TorsionContext& ctx, const std::vector<TorsionClass>& classes);

/// Hasse diagram in DOT; node labels list member dimension vectors.
std::string emit_hasse_dot(const TorsionContext& ctx, const std::vector<TorsionClass>& classes,
                           const std::vector<std::pair<int, int>>& hasse);

nlohmann::json torsion_report_json(const TorsionContext& ctx, const std::vector<TorsionClass>& classes,
                                   const std::vector<std::optional<NormalForm>>& covers, const LatticeReport& lattice);

/// Bounded check for quivers with two vertices: classes generated by rigid
/// modules with at most two summands, restricted to the universe, are closed
/// under meets (intersection) and joins (left perpendicular of the right
/// perpendicular of the union, inside the universe).
struct TwoSimpleReport {
  int universe_size = 0;
  int family_size = 0;
  int meets_checked = 0;
  int joins_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

TwoSimpleReport two_simple_bounded_check(const QuiverPtr& q, int p, int dim_bound);

}  // namespace ftors
