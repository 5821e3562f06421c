#include "ftors/decompose.hpp"

#include <algorithm>

#include "ftors/errors.hpp"

namespace ftors {

namespace {

enum class Fitting { Invertible, Nilpotent, Split };

struct FittingResult {
  Fitting kind;
  std::vector<FpMatrix> kernel_bases;
  std::vector<FpMatrix> image_bases;
};

FittingResult fitting(const Representation& m, const Morphism& phi) {
  const int n = m.quiver().size();
  const int exponent = std::max(1, m.total_dim());
  FittingResult r{Fitting::Split, {}, {}};
  bool kernel_zero = true, image_zero = true;
  for (int v = 0; v < n; ++v) {
    const FpMatrix pw = matrix_power(phi[v], exponent);
    r.kernel_bases.push_back(kernel(pw));
    r.image_bases.push_back(column_space(pw));
    if (r.kernel_bases.back().cols() > 0) kernel_zero = false;
    if (r.image_bases.back().cols() > 0) image_zero = false;
  }
  if (kernel_zero) r.kind = Fitting::Invertible;
  else if (image_zero) r.kind = Fitting::Nilpotent;
  return r;
}

Morphism shifted(const Morphism& phi, int lambda, int p) {
  Morphism out;
  for (const auto& fv : phi) out.push_back(fv - FpMatrix::identity(fv.rows(), p).scaled(lambda));
  return out;
}

// Returns a Fitting split if any tested endomorphism gives one.
std::optional<FittingResult> find_split(const Representation& m, const HomSpace& end, Rng& rng) {
  const int p = m.prime();
  auto try_phi = [&](const Morphism& phi) -> std::optional<FittingResult> {
    // (phi - lambda) for all lambda catches split semisimple parts at once
    const int lambdas = p <= 31 ? p : 8;
    for (int l = 0; l < lambdas; ++l) {
      const int lambda = p <= 31 ? l : rng.residue(p);
      auto fr = fitting(m, shifted(phi, lambda, p));
      if (fr.kind == Fitting::Split) return fr;
    }
    return std::nullopt;
  };

  long long space = 1;
  bool exhaustive = true;
  for (int i = 0; i < end.dim(); ++i) {
    space *= p;
    if (space > 256) {
      exhaustive = false;
      break;
    }
  }
  if (exhaustive) {
    std::vector<int> coeffs(end.dim(), 0);
    for (long long code = 1; code < space; ++code) {
      long long rest = code;
      for (auto& c : coeffs) {
        c = static_cast<int>(rest % p);
        rest /= p;
      }
      if (auto r = try_phi(linear_combination(end, coeffs, m, m))) return r;
    }
    return std::nullopt;
  }
  for (const auto& b : end.basis)
    if (auto r = try_phi(b)) return r;
  for (int attempt = 0; attempt < kRandomBudget; ++attempt) {
    if (auto r = try_phi(random_morphism(end, m, m, rng))) return r;
  }
  return std::nullopt;
}

void split_into(const Representation& m, Rng& rng, std::vector<Representation>& out) {
  if (m.is_zero()) return;
  const HomSpace end = hom_basis(m, m);
  if (end.dim() == 1) {
    out.push_back(m);
    return;
  }
  auto split = find_split(m, end, rng);
  if (!split) {
    out.push_back(m);
    return;
  }
  split_into(sub_quotient(m, split->kernel_bases).sub, rng, out);
  split_into(sub_quotient(m, split->image_bases).sub, rng, out);
}

bool indecomposables_isomorphic(const Representation& x, const Representation& y, Rng& rng) {
  if (x.dims() != y.dims()) return false;
  const HomSpace h = hom_basis(x, y);
  if (h.dim() == 0) return false;
  for (int attempt = 0; attempt < kRandomBudget; ++attempt) {
    if (is_isomorphism(random_morphism(h, x, y, rng))) return true;
  }
  return false;
}

bool dims_less(const Representation& a, const Representation& b) {
  if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
  return a.dims() < b.dims();
}

}  // namespace

std::vector<Summand> decompose(const Representation& m, Rng& rng) {
  std::vector<Representation> pieces;
  split_into(m, rng, pieces);
  std::stable_sort(pieces.begin(), pieces.end(), dims_less);
  std::vector<Summand> out;
  for (auto& piece : pieces) {
    bool merged = false;
    for (auto& s : out) {
      if (indecomposables_isomorphic(s.module, piece, rng)) {
        ++s.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(Summand{std::move(piece), 1});
  }
  int total = 0;
  for (const auto& s : out) total += s.multiplicity * s.module.total_dim();
  if (total != m.total_dim()) throw std::logic_error("decompose: summand dimensions do not add up");
  return out;
}

bool is_indecomposable(const Representation& m, Rng& rng) {
  if (m.is_zero()) return false;
  const HomSpace end = hom_basis(m, m);
  if (end.dim() == 1) return true;
  return !find_split(m, end, rng).has_value();
}

bool is_isomorphic(const Representation& x, const Representation& y, Rng& rng) {
  if (!x.same_quiver(y) || x.dims() != y.dims()) return false;
  if (top_dims(x) != top_dims(y) || socle_dims(x) != socle_dims(y)) return false;
  const HomSpace h = hom_basis(x, y);
  const int ex = hom_dim(x, x);
  if (h.dim() != ex || hom_dim(y, y) != ex || hom_dim(y, x) != ex) return false;
  if (x.is_zero()) return true;
  for (int attempt = 0; attempt < kRandomBudget; ++attempt) {
    if (is_isomorphism(random_morphism(h, x, y, rng))) return true;
  }
  auto dx = decompose(x, rng);
  auto dy = decompose(y, rng);
  if (dx.size() != dy.size()) return false;
  std::vector<bool> used(dy.size(), false);
  for (const auto& s : dx) {
    bool matched = false;
    for (std::size_t j = 0; j < dy.size(); ++j) {
      if (used[j] || dy[j].multiplicity != s.multiplicity) continue;
      if (indecomposables_isomorphic(s.module, dy[j].module, rng)) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

bool is_brick(const Representation& m) { return hom_dim(m, m) == 1; }

bool is_exceptional(const Representation& m, Rng& rng) {
  return ext_dim(m, m) == 0 && is_indecomposable(m, rng);
}

ModulePredicates module_predicates(const Representation& x, const Representation& y, Rng& rng) {
  ModulePredicates out;
  out.is_brick = is_brick(x);
  out.is_exceptional = is_exceptional(x, rng);
  out.orthogonal = hom_dim(x, y) == 0 && hom_dim(y, x) == 0;
  return out;
}

NormalForm normalize(const Representation& m, Rng& rng) {
  std::vector<Representation> kept;
  for (auto& s : decompose(m, rng)) kept.push_back(std::move(s.module));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<Representation> others;
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j]);
      if (!others.empty() && generates(others, kept[i])) {
        kept.erase(kept.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  Representation sum = direct_sum(kept, m.quiver_ptr(), m.prime());
  return NormalForm{std::move(sum), std::move(kept)};
}

}  // namespace ftors
