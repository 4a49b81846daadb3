#pragma once

// End-to-end verification workflows and their reports.

#include <eigspace/constructors.hpp>
#include <eigspace/json_io.hpp>
#include <eigspace/random.hpp>
#include <eigspace/subspace.hpp>

#include <chrono>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace eigspace {

enum class CheckStatus { Pass, Fail, Inconclusive, Vacuous };

std::string_view to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  /// Reproduction data for failures; a short summary otherwise.
  Json witness;
};

struct VerificationReport {
  std::string target;
  std::vector<Check> checks;
  std::uint64_t seed = 0;
  std::chrono::milliseconds elapsed{0};

  /// True when no check failed. Inconclusive and vacuous checks do not count
  /// as failures.
  bool passed() const;
  /// Elapsed time is left out unless requested so that reports for the same
  /// inputs and seed are byte-identical.
  Json to_json(bool include_elapsed = false) const;
};

/// Mixes a base seed with cell coordinates so every cell has its own stream
/// regardless of evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> tags);

/// sum_i r_i b_i with r_i drawn by rng.rational().
QMatrix random_member(const MatrixSubspace& v, Rng& rng);

/// Dimension, eigenvalue budget of sampled members, Borel invariance, the E_ij
/// implications, weight support and the border-block inequalities for the
/// extremal space and its block-swapped form. Throws BadBudget for invalid
/// parameters.
VerificationReport verify_extremal(const ExtremalParams& params, std::size_t samples, std::uint64_t seed);

/// For every matrix unit E_ij outside the extremal space (0-based indices in
/// check names), searches V + span{E_ij} for a member with at least k + 1
/// distinct eigenvalues. Exhausted searches are inconclusive, units already
/// in V are vacuous.
VerificationReport maximality_probe(const ExtremalParams& params, std::size_t trials, std::uint64_t seed);

/// Conjugates v by t, takes the limit under the standard weights and checks
/// dimension, stability, weight support, the border inequalities (k >= 2) and
/// the eigenvalue budget of `samples` limit members.
Check check_degeneration(const MatrixSubspace& v, std::size_t k, const QMatrix& t, std::size_t samples, Rng& rng);

// Suite sections. Each one covers its own parameter range intersected with
// n <= max_n and reports the first counterexample as its witness.
Check check_dimension_formula(std::size_t max_n);
Check check_eigenvalue_budget(std::size_t max_n, std::size_t samples, std::uint64_t seed);
Check check_config_bound(std::size_t max_n);
Check check_char_poly_identity(std::size_t max_n, std::size_t trials, std::uint64_t seed);
Check check_resultant_identity(std::size_t max_n, std::size_t trials, std::uint64_t seed);
Check check_discriminant_identity(std::size_t trials, std::uint64_t seed);
Check check_degeneration_suite(std::size_t max_n, std::size_t conjugates, std::size_t samples, std::uint64_t seed);
Check check_spectral_oracles(std::size_t max_n, std::size_t count, std::uint64_t seed);
Check check_maximality(std::size_t max_n, std::size_t trials, std::uint64_t seed);
Check check_borel_structure(std::size_t max_n);

/// Every section above with its default sample counts. Throws BadBudget when
/// max_n < 4.
VerificationReport run_full_suite(std::size_t max_n, std::uint64_t seed);

}  // namespace eigspace
