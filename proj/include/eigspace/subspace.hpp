#pragma once

#include <eigspace/matrix.hpp>
#include <eigspace/rational.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace eigspace {

/// Linear subspace of n x n matrices over Q. The basis is kept as the reduced
/// row echelon form of the row-major vectorizations, so equal subspaces have
/// identical stored bases and operator== is plain comparison.
class MatrixSubspace {
 public:
  MatrixSubspace() = default;
  /// Zero subspace of M_n.
  explicit MatrixSubspace(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return rows_.size(); }

  std::vector<QMatrix> basis() const;
  QMatrix basis_element(std::size_t i) const;
  /// Pivot position (row-major index) of each basis row.
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Throws SizeMismatch.
  bool contains(const QMatrix& a) const;
  /// Coordinates of a member with respect to basis(); throws PreconditionFailed
  /// when `a` is not a member.
  std::vector<Rational> coordinates(const QMatrix& a) const;

  /// Linear combination sum_i coeffs[i] * basis_element(i).
  QMatrix combine(std::span<const Rational> coeffs) const;

  friend bool operator==(const MatrixSubspace& a, const MatrixSubspace& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const MatrixSubspace& a, const MatrixSubspace& b) { return !(a == b); }

  friend MatrixSubspace canonicalize(std::size_t n, std::span<const QMatrix> raw);

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Throws EmptyAmbient when n == 0 and MixedSizes when a matrix is not n x n.
MatrixSubspace canonicalize(std::size_t n, std::span<const QMatrix> raw);
inline MatrixSubspace canonicalize(std::size_t n, const std::vector<QMatrix>& raw) {
  return canonicalize(n, std::span<const QMatrix>(raw));
}

/// Same with n read from the first matrix; an empty list throws EmptyAmbient.
MatrixSubspace canonicalize(std::span<const QMatrix> raw);

bool contains(const MatrixSubspace& v, const QMatrix& a);

/// (V + W, V ∩ W). Throws SizeMismatch.
std::pair<MatrixSubspace, MatrixSubspace> sum_and_intersection(const MatrixSubspace& v,
                                                               const MatrixSubspace& w);

/// span{P B P^{-1}}. Throws Singular or SizeMismatch.
MatrixSubspace conjugate(const MatrixSubspace& v, const QMatrix& p);

/// Invariance under conjugation by all invertible upper triangular matrices,
/// decided on the generators: unipotent I + sE_ij (i < j), whose action on a
/// basis element is a polynomial of degree <= 2 in s, and the diagonal torus,
/// whose invariance is equivalent to V being spanned by its root-graded parts.
bool is_borel_invariant(const MatrixSubspace& v);

/// Which implication of the E_ij rules failed.
enum class EijRule {
  LowerEntry,     // a_ji != 0 (i < j) but E_ij not in V
  OffDiagonal,    // a_ij != 0 (i != j) but E_ij not in V
  DiagonalSplit,  // a_ii != a_jj (i < j) but E_ij not in V
};

std::string to_string(EijRule rule);

struct EijViolation {
  EijRule rule;
  std::size_t i = 0;  // 0-based indices of the missing unit E_ij
  std::size_t j = 0;
  std::size_t basis_index = 0;  // basis element that triggered the rule
};

/// Checks the three entry implications over all basis elements. Requires a
/// Borel-invariant space (NotBorelInvariant otherwise).
std::vector<EijViolation> check_eij_implications(const MatrixSubspace& v);

}  // namespace eigspace
