#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ftors {

/// One arrow source -> target. Vertices are 0-based internally. The
/// valuation pair (a, b) is (1, 1) for ordinary path-algebra arrows; parallel
/// arrows are separate entries.
struct Arrow {
  int source = 0;
  int target = 0;
  int a = 1;
  int b = 1;

  bool operator==(const Arrow&) const = default;
  bool plain() const { return a == 1 && b == 1; }
};

/// Finite, connected, acyclic valued quiver. Immutable once constructed;
/// the constructor validates and throws InvalidQuiver on loops, oriented
/// cycles or disconnected input.
class Quiver {
 public:
  Quiver(int n_vertices, std::vector<Arrow> arrows, std::vector<std::string> labels = {});

  int size() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int v) const;

  /// True when every valuation is (1, 1), i.e. explicit representations exist.
  bool is_path_algebra() const;

  std::vector<int> arrows_into(int v) const;
  std::vector<int> arrows_out_of(int v) const;
  bool is_sink(int v) const { return arrows_out_of(v).empty(); }
  bool is_source(int v) const { return arrows_into(v).empty(); }

  /// Number of parallel (1,1) arrows i -> j.
  int arrow_count(int i, int j) const;

  /// Sources-first order, ties broken by smallest index.
  std::vector<int> topological_order() const;

  bool operator==(const Quiver& other) const { return n_ == other.n_ && arrows_ == other.arrows_; }

 private:
  int n_;
  std::vector<Arrow> arrows_;
  std::vector<std::string> labels_;
};

/// Parses the line format (`vertices N`, `arrow I J [A B]`, `#` comments;
/// vertices 1-based). Arrows come back sorted by (source, target).
Quiver parse_quiver(std::string_view text);
/// Same content in JSON form: {"vertices": N, "arrows": [[i,j] | [i,j,a,b], ...]}.
Quiver parse_quiver_json(std::string_view text);
/// Dispatches on the first non-blank character.
Quiver parse_quiver_any(std::string_view text);

std::string to_text(const Quiver& q);

/// Reverses every arrow at a sink or source v, swapping valuation pairs.
/// Arrow positions are kept so representations stay aligned.
Quiver reflect_at(const Quiver& q, int v);

/// v(i, j) = (sum of first valuation components) * (sum of second) over
/// arrows i -> j; m*m for m parallel plain arrows; 0 without an arrow.
int valuation(const Quiver& q, int i, int j);

struct Subquiver {
  Quiver quiver;
  std::vector<int> vertex_map;  // sub vertex -> original vertex
  std::vector<int> arrow_map;   // sub arrow -> original arrow
};

/// Full subquiver on the given (original, 0-based) vertices, relabeled in
/// increasing order. Throws InvalidQuiver if the selection is empty or
/// disconnected.
Subquiver subquiver_restrict(const Quiver& q, std::vector<int> vertices);

enum class TypeFamily { Dynkin, Euclidean, Wild };

struct QuiverType {
  TypeFamily family = TypeFamily::Wild;
  std::string name;  // "A3", "D4", "~A2", "~D4", "wild", ...

  bool representation_finite() const { return family == TypeFamily::Dynkin; }
  bool tame() const { return family == TypeFamily::Euclidean; }
};

/// Decided from the signs of the principal minors of the (valued) Cartan
/// matrix, exactly; independent of orientation.
QuiverType classify_type(const Quiver& q);

/// Underlying simple graph (parallel arrows collapsed) contains a cycle.
bool underlying_graph_has_cycle(const Quiver& q);

}  // namespace ftors
