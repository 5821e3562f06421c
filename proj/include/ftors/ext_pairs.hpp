#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ftors/representation.hpp"

namespace ftors {

struct PairDimensions {
  int hom_xy = 0;
  int hom_yx = 0;
  int ext_xy = 0;
  int ext_yx = 0;
  int end_x = 0;
  int end_y = 0;
  int ext_xx = 0;
  int ext_yy = 0;
};

/// Outcome of checking the Ext-pair conditions. `failure` names the first
/// violated condition and is empty when the pair is certified.
struct PairCheck {
  PairDimensions dims;
  std::string failure;
  bool ok() const { return failure.empty(); }
};

/// Recomputes all eight dimensions and tests, in order: End X = 1,
/// End Y = 1, Ext(X,X) = 0, Ext(Y,Y) = 0, Hom(X,Y) = 0, Hom(Y,X) = 0,
/// Ext(X,Y) != 0, Ext(Y,X) != 0.
PairCheck verify_ext_pair(const Representation& x, const Representation& y);

/// Extra facts established by the 1=>2->3 construction.
struct KroneckerQuotientFacts {
  DimVector quotient_dims;        // Y / Y_3 restricted to {1, 2}
  DimVector translate_dims;       // tau' S(1) over the {1, 2} subquiver
  bool quotient_matches = false;  // the two are isomorphic
  int ext_translate_projective = 0;  // dim Ext(tau' S(1), P'(1))
  int socle_part_dim = 0;         // dim P(1)_3
  int radical_dim = 0;            // dim rad P'(1)
};

struct ExtPairCertificate {
  QuiverPtr quiver;  // quiver the modules live over
  Representation x;
  Representation y;
  PairDimensions dims;
  std::string construction;        // "tube", "cycle", "double-double", "double-single"
  std::vector<std::string> trail;  // subquiver, reflections and case details
  bool over_input_quiver = true;
  std::optional<KroneckerQuotientFacts> kronecker_facts;
};

/// Underlying graph contains a cycle: restricts to a shortest cycle, splits
/// it into a shortest source-to-sink segment and the rest, and builds a
/// sincere exceptional module on each part by iterated universal extensions.
/// Throws PreconditionError without a cycle, std::logic_error if the result
/// fails verification.
ExtPairCertificate construct_cycle_pair(const QuiverPtr& q, int p);

/// Quiver 1 -> 2 -> 3 with at least two parallel arrows on both edges:
/// X = S(2), Y = S(2) extended universally by S(1) above and S(3) below.
ExtPairCertificate construct_double_double_pair(const QuiverPtr& q, int p);

/// Quiver 1 -> 2 -> 3 with at least two parallel arrows 1 -> 2 and a single
/// arrow 2 -> 3: X = P(1) / P(1)_3, Y = tau X, plus the Kronecker quotient
/// facts.
ExtPairCertificate construct_double_single_pair(const QuiverPtr& q, int p);

/// Driver for quivers that are not Dynkin with at least three vertices:
/// cycle construction, else the path constructions on a three-vertex
/// subquiver after reflections, else a tube of a minimal Euclidean
/// subquiver. Modules are extended by zero to the input quiver.
ExtPairCertificate find_ext_pair(const QuiverPtr& q, int p, Rng& rng);

nlohmann::json certificate_to_json(const ExtPairCertificate& c);
nlohmann::json pair_dimensions_to_json(const PairDimensions& d);

}  // namespace ftors
