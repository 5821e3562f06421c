#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ftors/extensions.hpp"
#include "ftors/representation.hpp"

namespace ftors {

/// Checks pairwise orthogonal bricks with Ext(X_{i-1}, X_i) != 0 cyclically.
/// Returns an empty string on success, else the first violated condition.
std::string ext_cycle_violation(const std::vector<Representation>& cycle);

struct FilteredObject {
  Representation module;
  int loewy_length = 0;  // relative to the cycle modules
};

/// Indecomposable objects of the extension closure of an Ext-cycle, built
/// by extending from above by cycle modules up to `max_length` factors,
/// capped at 64 objects.
struct FiltrationUniverse {
  std::vector<Representation> cycle;
  int max_length = 0;
  std::vector<FilteredObject> objects;
  std::vector<Representation> serial;  // serial[t - 1] is uniserial of length t
  bool truncated = false;              // object cap reached
};

/// Relative radical: intersection of the kernels of all maps M -> X_i.
SubQuotient relative_radical(const Representation& m, const std::vector<Representation>& cycle);
/// Number of relative radical steps down to zero.
int relative_loewy_length(const Representation& m, const std::vector<Representation>& cycle);

/// Throws PreconditionError if the cycle conditions fail, CapExceeded when
/// an extension space is too large to enumerate.
FiltrationUniverse filtration_strata(const std::vector<Representation>& cycle, int max_length, Rng& rng,
                                     long long cap = kDefaultMiddleTermCap);

struct NoCoverWitness {
  int loewy_bound = 0;       // r
  int candidates = 0;        // universe objects of Loewy length <= r
  DimVector witness_dims;    // serial object of length r + 1
  int witness_total_dim = 0;
  int trace_total_dim = 0;   // trace of all candidates in the witness
  bool generated = false;    // true would refute the evidence
};

struct NoCoverEvidence {
  int max_length = 0;
  int universe_size = 0;
  bool truncated = false;
  std::vector<NoCoverWitness> witnesses;
  int loewy_checks = 0;
  int loewy_counterexamples = 0;
  bool ok() const;
};

/// For each r < max_length: the serial object of length r + 1 is not
/// generated by the sum of all objects of Loewy length <= r, and every
/// universe object generated by those has Loewy length <= r. Bounded
/// evidence for the absence of a cover, not a proof.
NoCoverEvidence no_cover_evidence(const std::vector<Representation>& cycle, int max_length, Rng& rng,
                                  long long cap = kDefaultMiddleTermCap);

nlohmann::json evidence_to_json(const NoCoverEvidence& e);

}  // namespace ftors
