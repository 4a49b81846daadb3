#pragma once

// Explicit matrices, spaces and configurations for matrix spaces whose members
// have at most k distinct eigenvalues, plus the dimension-bound combinatorics.

#include <eigspace/matrix.hpp>
#include <eigspace/rational.hpp>
#include <eigspace/subspace.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace eigspace {

/// Block sizes p, k-1 and n-k-p+1 of the extremal block form.
struct ExtremalParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t p = 0;
};

struct RegularWitnessParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<Rational> lambdas;  // k pairwise distinct values
};

/// Border data use 1-based indices: b(q) for q in [k, n] and c(q)
/// for q in [2, n].
struct BorderedParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<Rational> lambdas;
  std::vector<Rational> b;  // b[0] is b_k
  std::vector<Rational> c;  // c[0] is c_2
  Rational mu = 0;

  const Rational& b_at(std::size_t q) const { return b.at(q - k); }
  const Rational& c_at(std::size_t q) const { return c.at(q - 2); }
};

/// Diagonal dimension l plus the ordered sizes n_t of the coordinate blocks.
struct Config {
  std::size_t n = 0;
  std::size_t l = 0;
  std::vector<std::size_t> parts;

  std::size_t budget() const;  // l + sum n_t
  friend bool operator==(const Config& a, const Config& b) {
    return a.n == b.n && a.l == b.l && a.parts == b.parts;
  }
  std::string str() const;
};

/// C(n,2) + C(k,2) + 1. Throws BadBudget unless 1 <= k < n.
std::size_t max_dimension(std::size_t n, std::size_t k);

/// Throws BadBudget unless 1 <= k < n and p <= n-k+1.
void validate(const ExtremalParams& params);

/// Every matrix [[A, B, C], [0, D, E], [0, 0, F]] with blocks p, k-1, n-k-p+1,
/// B, D, E free and [[A, C], [0, F]] upper triangular with equal diagonal.
MatrixSubspace extremal_basis(const ExtremalParams& params);

/// Permutation matrix P with P M P^{-1} exchanging the first two block rows and
/// columns (sizes p and k-1) of the extremal form.
QMatrix block_swap_permutation(const ExtremalParams& params);

/// The extremal space after the block swap: blocks k-1, p, n-k-p+1 with
/// [[D, 0, E], [B, A, C], [0, 0, F]]. Contains every regular_witness.
MatrixSubspace swapped_extremal_basis(const ExtremalParams& params);

/// diag(l_1..l_{k-1}) ⊕ J_{n-k+1}(l_k). Throws BadBudget or DuplicateLambda.
QMatrix regular_witness(const RegularWitnessParams& params);

/// regular_witness with first row mu*b_k..mu*b_n at columns k..n and first
/// column c_2..c_n. Throws BadBudget, DuplicateLambda or SizeMismatch.
QMatrix bordered_witness(const BorderedParams& params);

/// Throws InfeasibleConfig.
void validate(const Config& cfg, std::size_t k);
bool is_feasible(const Config& cfg, std::size_t k);

/// l + C(n,2) + sum_t C(n_t + 1, 2). Throws InfeasibleConfig when the config
/// is not realizable for its own budget l + sum n_t.
std::size_t config_dimension(const Config& cfg);

struct ConfigEnumeration {
  std::size_t max_value = 0;
  std::vector<Config> argmax;
  std::size_t visited = 0;
};

/// Exhaustive enumeration of realizable configs with budget k. When
/// include_l_zero is set, configs with l = 0 are added too; coordinates outside
/// every block still contribute the eigenvalue 0, so such a config is only
/// admissible with sum n_t = k - 1 (or when the blocks cover all coordinates).
ConfigEnumeration enumerate_configs(std::size_t n, std::size_t k, bool include_l_zero = false);

/// Upper triangular T with A T = T J for the nilpotent Jordan block J, built
/// from the Krylov columns A^{n-1}x, ..., Ax, x with x = e_n.
/// Throws NotStrictlyUpper or RankDeficient.
QMatrix nilpotent_jordan_conjugator(const QMatrix& a);

/// Nilpotent Jordan block of size n (ones on the superdiagonal).
QMatrix nilpotent_jordan_block(std::size_t n);

/// The weight-zero corner form with blocks 1, k-2, p, n-p-k+1:
/// [[alpha, 0, 0, 0], [0, D, 0, E], [0, B, lam I + A', C], [0, 0, 0, lam I + F']]
/// with A', F' strictly upper triangular. Needs k >= 3.
MatrixSubspace corner_form_basis(std::size_t n, std::size_t k, std::size_t p);

}  // namespace eigspace
