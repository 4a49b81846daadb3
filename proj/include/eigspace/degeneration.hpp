#pragma once

// Conjugation of matrix subspaces by one-parameter diagonal subgroups
// t -> diag(t^{w_1}, ..., t^{w_n}) and their limits as t -> 0.

#include <eigspace/matrix.hpp>
#include <eigspace/subspace.hpp>

#include <cstddef>
#include <map>
#include <vector>

namespace eigspace {

struct WeightVector {
  std::vector<long> weights;

  std::size_t size() const noexcept { return weights.size(); }
  WeightVector negated() const;
  /// Weight of the matrix unit E_ij under conjugation: w_i - w_j.
  long entry_weight(std::size_t i, std::size_t j) const { return weights[i] - weights[j]; }
};

/// (n-1, -1, ..., -1): the subgroup t -> diag(t^{n-1}, t^{-1} I_{n-1}).
WeightVector standard_weights(std::size_t n);

/// Matrix whose entries are Laurent polynomials in t, stored as
/// exponent -> coefficient matrix with no zero terms.
struct LaurentMatrix {
  std::map<long, QMatrix> terms;

  bool is_zero() const { return terms.empty(); }
  long valuation() const { return terms.begin()->first; }
  const QMatrix& leading() const { return terms.begin()->second; }
};

struct TFamily {
  std::size_t n = 0;
  std::vector<LaurentMatrix> basis;
};

struct WeightComponent {
  long j = 0;
  MatrixSubspace component;
};

/// phi(t) V phi(t)^{-1}: entry (i, j) of each basis element scaled by
/// t^{w_i - w_j}. Throws SizeMismatch.
TFamily one_param_family(const MatrixSubspace& v, const WeightVector& w);

/// Limit at t = 0 of the family of subspaces. Leading coefficient vectors are
/// taken after valuation normalization; whenever they are dependent the
/// dependency is eliminated, which strictly raises the total valuation.
/// Throws DegenerateFamily when the basis is dependent over the Laurent field.
MatrixSubspace grassmannian_limit(const TFamily& fam);

/// grassmannian_limit(one_param_family(v, w)); with negate the weights are
/// flipped, giving lim phi(t)^{-1} V phi(t).
MatrixSubspace degenerate(const MatrixSubspace& v, const WeightVector& w, bool negate = false);

bool is_phi_stable(const MatrixSubspace& v, const WeightVector& w);

/// Nonzero weight spaces V(j), sorted by j. Throws NotPhiStable.
std::vector<WeightComponent> weight_decomposition(const MatrixSubspace& v, const WeightVector& w);

/// dim V(j), zero when j is absent from the decomposition.
std::size_t dimension_at(const std::vector<WeightComponent>& comps, long j);

/// Weight-space dimensions that enter the border-block inequalities for a
/// phi-stable space under the standard weights. Primed spaces keep only the
/// members whose border vector has its first k-2 entries equal to zero.
struct BorderDimensions {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t dim_pos = 0;         // dim V(n)
  std::size_t dim_neg = 0;         // dim V(-n)
  std::size_t dim_pos_primed = 0;  // dim V'(n)
  std::size_t dim_neg_primed = 0;  // dim V'(-n)

  bool primed_bound_holds() const { return dim_pos_primed + dim_neg_primed <= n - k + 1; }
  bool total_bound_holds() const { return dim_pos + dim_neg + 3 <= n + k; }
};

/// Throws NotPhiStable, or BadBudget unless 2 <= k < n.
BorderDimensions border_dimensions(const MatrixSubspace& v, std::size_t k);

}  // namespace eigspace
