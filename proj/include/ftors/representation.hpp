#pragma once

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "ftors/fp_matrix.hpp"
#include "ftors/numerics.hpp"
#include "ftors/quiver.hpp"

namespace ftors {

using QuiverPtr = std::shared_ptr<const Quiver>;

inline QuiverPtr share(Quiver q) { return std::make_shared<const Quiver>(std::move(q)); }

/// Finite-dimensional representation of a path-algebra quiver over F_p:
/// a vector space F_p^{dims[v]} per vertex and a dims[target] x dims[source]
/// matrix per arrow (same indexing as quiver().arrows()).
class Representation {
 public:
  Representation(QuiverPtr quiver, int p, DimVector dims, std::vector<FpMatrix> maps);

  static Representation zero(QuiverPtr quiver, int p);

  const Quiver& quiver() const { return *quiver_; }
  const QuiverPtr& quiver_ptr() const { return quiver_; }
  int prime() const { return p_; }
  const DimVector& dims() const { return dims_; }
  int dim(int v) const { return dims_[v]; }
  int total_dim() const { return total_dimension(dims_); }
  bool is_zero() const { return total_dim() == 0; }
  const std::vector<FpMatrix>& maps() const { return maps_; }
  const FpMatrix& map(int arrow) const { return maps_[arrow]; }

  bool same_quiver(const Representation& other) const;
  /// Literal equality of dimension data and matrices (not isomorphism).
  bool operator==(const Representation& other) const;

 private:
  QuiverPtr quiver_;
  int p_;
  DimVector dims_;
  std::vector<FpMatrix> maps_;
};

enum class StandardKind { Simple, Projective, Injective };

/// S(i), P(i) (paths starting at i) or I(i) (dual of paths ending at i).
Representation standard_module(const QuiverPtr& q, StandardKind kind, int vertex, int p);
/// Dimension vector of P(i): number of paths from i to each vertex.
DimVector projective_dims(const Quiver& q, int vertex);
DimVector injective_dims(const Quiver& q, int vertex);

Representation direct_sum(const Representation& x, const Representation& y);
Representation direct_sum(const std::vector<Representation>& parts, const QuiverPtr& q, int p);
Representation power(const Representation& x, int copies);

/// One matrix per vertex, f[v] : X_v -> Y_v (dims Y_v x X_v).
using Morphism = std::vector<FpMatrix>;

struct HomSpace {
  std::vector<Morphism> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

/// Canonical basis of Hom(X, Y) from the kernel of the intertwining system
/// f_t X_a = Y_a f_s.
HomSpace hom_basis(const Representation& x, const Representation& y);
int hom_dim(const Representation& x, const Representation& y);
/// dim Hom(X,Y) - <dim X, dim Y>; throws std::logic_error if negative.
int ext_dim(const Representation& x, const Representation& y);

bool is_morphism(const Representation& x, const Representation& y, const Morphism& f);
Morphism compose(const Morphism& g, const Morphism& f);
Morphism linear_combination(const HomSpace& h, const std::vector<int>& coeffs, const Representation& x,
                            const Representation& y);
Morphism random_morphism(const HomSpace& h, const Representation& x, const Representation& y, Rng& rng);
bool is_isomorphism(const Morphism& f);

/// A subrepresentation given by per-vertex column bases, with the induced
/// structure on the sub and on the quotient.
struct SubQuotient {
  Representation sub;
  std::vector<FpMatrix> inclusion;   // M_v x sub_v, full column rank
  Representation quotient;
  std::vector<FpMatrix> projection;  // quotient_v x M_v, full row rank
};

/// bases[v] must span a subspace stable under every arrow map.
SubQuotient sub_quotient(const Representation& m, const std::vector<FpMatrix>& bases);

/// Sum of the images of all maps from the generators into M.
SubQuotient trace_submodule(const std::vector<Representation>& generators, const Representation& m);
/// M is a factor of a sum of copies of the generators.
bool generates(const std::vector<Representation>& generators, const Representation& m);

/// Largest subrepresentation isomorphic to a sum of copies of S(i).
SubQuotient isotypic_socle(const Representation& m, int vertex);

DimVector top_dims(const Representation& m);
DimVector socle_dims(const Representation& m);
bool is_projective(const Representation& m);
bool is_injective(const Representation& m);

/// Restriction to a full subquiver (zero outside is not required).
Representation restrict_to(const Representation& m, const Subquiver& sub, const QuiverPtr& sub_quiver);
/// Extension by zero from a full subquiver back to the ambient quiver.
Representation extend_by_zero(const Representation& m, const Subquiver& sub, const QuiverPtr& ambient);

/// Transport of structure along per-vertex invertible matrices g_v:
/// new map g_t M_a g_s^{-1}.
Representation change_basis(const Representation& m, const std::vector<FpMatrix>& g);
Representation random_base_change(const Representation& m, Rng& rng);
Representation random_representation(const QuiverPtr& q, const DimVector& dims, int p, Rng& rng);

nlohmann::json to_json(const Representation& m);
Representation representation_from_json(const nlohmann::json& j, const QuiverPtr& q);

std::string dims_string(const DimVector& d);

}  // namespace ftors
