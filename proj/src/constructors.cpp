#include <eigspace/constructors.hpp>

#include <eigspace/error.hpp>
#include <eigspace/exact.hpp>

#include <numeric>
#include <sstream>

namespace eigspace {

namespace {

std::size_t choose2(std::size_t m) { return m * (m - (m ? 1 : 0)) / 2; }

void require_budget(std::size_t n, std::size_t k) {
  if (k < 1 || k >= n) {
    throw Error(ErrorCode::BadBudget, "need 1 <= k < n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

void require_distinct(const std::vector<Rational>& lambdas, std::size_t k) {
  if (lambdas.size() != k) throw Error(ErrorCode::SizeMismatch, "expected exactly k eigenvalues");
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    for (std::size_t j = i + 1; j < lambdas.size(); ++j)
      if (lambdas[i] == lambdas[j]) throw Error(ErrorCode::DuplicateLambda, "eigenvalue " + to_string(lambdas[i]) + " repeated");
}

std::size_t parts_sum(const Config& cfg) { return std::accumulate(cfg.parts.begin(), cfg.parts.end(), std::size_t{0}); }

void compositions(std::size_t total, std::vector<std::size_t>& prefix, std::vector<std::vector<std::size_t>>& out) {
  if (total == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t first = 1; first <= total; ++first) {
    prefix.push_back(first);
    compositions(total - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::size_t Config::budget() const {
  const std::size_t covered = parts_sum(*this);
  // Coordinates outside every block share at least one eigenvalue.
  const std::size_t outside_extra = (l == 0 && covered < n) ? 1 : 0;
  return l + covered + outside_extra;
}

std::string Config::str() const {
  std::ostringstream os;
  os << "(l=" << l << ", parts=[";
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << "])";
  return os.str();
}

std::size_t max_dimension(std::size_t n, std::size_t k) {
  require_budget(n, k);
  return choose2(n) + choose2(k) + 1;
}

void validate(const ExtremalParams& params) {
  require_budget(params.n, params.k);
  if (params.p > params.n - params.k + 1) {
    throw Error(ErrorCode::BadBudget, "p must lie in [0, n-k+1], got p=" + std::to_string(params.p));
  }
}

MatrixSubspace extremal_basis(const ExtremalParams& params) {
  validate(params);
  const std::size_t n = params.n, k = params.k, p = params.p;
  const std::size_t d0 = p, d1 = p + k - 1;  // D occupies [d0, d1)
  auto in_frame = [&](std::size_t i) { return i < d0 || i >= d1; };

  std::vector<QMatrix> gens;
  QMatrix scalar(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (in_frame(i)) scalar(i, i) = 1;
  }
  gens.push_back(scalar);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool row_d = !in_frame(i), col_d = !in_frame(j);
      const bool free_block = (i < d0 && col_d)        // B
                              || (row_d && col_d)      // D
                              || (row_d && j >= d1);   // E
      const bool frame_upper = in_frame(i) && in_frame(j) && i < j;
      if (free_block || frame_upper) gens.push_back(QMatrix::unit(n, i, j));
    }
  }
  return canonicalize(n, gens);
}

QMatrix block_swap_permutation(const ExtremalParams& params) {
  validate(params);
  const std::size_t n = params.n, k = params.k, p = params.p;
  QMatrix perm(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t old;
    if (a < k - 1) {
      old = p + a;
    } else if (a < k - 1 + p) {
      old = a - (k - 1);
    } else {
      old = a;
    }
    perm(a, old) = 1;
  }
  return perm;
}

MatrixSubspace swapped_extremal_basis(const ExtremalParams& params) {
  return conjugate(extremal_basis(params), block_swap_permutation(params));
}

QMatrix regular_witness(const RegularWitnessParams& params) {
  require_budget(params.n, params.k);
  require_distinct(params.lambdas, params.k);
  const std::size_t n = params.n, k = params.k;
  QMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < k; ++i) m(i, i) = params.lambdas[i];
  for (std::size_t i = k - 1; i < n; ++i) {
    m(i, i) = params.lambdas[k - 1];
    if (i + 1 < n) m(i, i + 1) = 1;
  }
  return m;
}

QMatrix bordered_witness(const BorderedParams& params) {
  const std::size_t n = params.n, k = params.k;
  QMatrix m = regular_witness({n, k, params.lambdas});
  if (params.b.size() != n - k + 1) throw Error(ErrorCode::SizeMismatch, "b must hold entries b_k..b_n");
  if (params.c.size() != n - 1) throw Error(ErrorCode::SizeMismatch, "c must hold entries c_2..c_n");
  for (std::size_t q = k; q <= n; ++q) m(0, q - 1) += params.mu * params.b_at(q);
  for (std::size_t q = 2; q <= n; ++q) m(q - 1, 0) += params.c_at(q);
  return m;
}

bool is_feasible(const Config& cfg, std::size_t k) {
  if (cfg.n == 0) return false;
  for (std::size_t part : cfg.parts) {
    if (part == 0) return false;
  }
  const std::size_t covered = parts_sum(cfg);
  const std::size_t r = cfg.parts.size();
  // Blocks are separated by at least one coordinate.
  if (r >= 1 && covered + (r - 1) > cfg.n - 1) return false;
  // Diagonal directions outside the blocks need their own coordinates.
  if (covered > cfg.n || cfg.l > cfg.n - covered) return false;
  return cfg.budget() == k;
}

void validate(const Config& cfg, std::size_t k) {
  if (!is_feasible(cfg, k)) throw Error(ErrorCode::InfeasibleConfig, cfg.str() + " is not realizable for n=" + std::to_string(cfg.n) + ", k=" + std::to_string(k));
}

std::size_t config_dimension(const Config& cfg) {
  validate(cfg, cfg.budget());
  std::size_t dim = cfg.l + choose2(cfg.n);
  for (std::size_t part : cfg.parts) dim += choose2(part + 1);
  return dim;
}

ConfigEnumeration enumerate_configs(std::size_t n, std::size_t k, bool include_l_zero) {
  require_budget(n, k);
  ConfigEnumeration result;
  for (std::size_t l = include_l_zero ? 0 : 1; l <= k; ++l) {
    const std::size_t remaining = (l == 0) ? k - 1 : k - l;
    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::size_t> prefix;
    compositions(remaining, prefix, comps);
    for (auto& parts : comps) {
      Config cfg{n, l, std::move(parts)};
      if (!is_feasible(cfg, k)) continue;
      ++result.visited;
      const std::size_t d = config_dimension(cfg);
      if (d > result.max_value) {
        result.max_value = d;
        result.argmax.clear();
      }
      if (d == result.max_value) result.argmax.push_back(std::move(cfg));
    }
  }
  return result;
}

QMatrix nilpotent_jordan_block(std::size_t n) {
  QMatrix j(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = 1;
  return j;
}

QMatrix nilpotent_jordan_conjugator(const QMatrix& a) {
  if (!a.is_square() || a.rows() == 0) throw Error(ErrorCode::NonSquare, "conjugator needs a square matrix");
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (a(i, j) != 0) throw Error(ErrorCode::NotStrictlyUpper, "matrix has a nonzero entry on or below the diagonal");
  if (rank(a) != n - 1) throw Error(ErrorCode::RankDeficient, "strictly upper matrix must have rank n-1");

  std::vector<Rational> x(n);
  x[n - 1] = 1;
  QMatrix t(n, n);
  // Column n-1 is x, column n-2 is Ax, ..., column 0 is A^{n-1}x.
  for (std::size_t col = n; col-- > 0;) {
    for (std::size_t i = 0; i < n; ++i) t(i, col) = x[i];
    std::vector<Rational> y(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) y[i] += a(i, j) * x[j];
    x = std::move(y);
  }
  if (t(0, 0) == 0) throw Error(ErrorCode::RankDeficient, "A^{n-1} e_n vanishes");
  return t;
}

MatrixSubspace corner_form_basis(std::size_t n, std::size_t k, std::size_t p) {
  if (k < 3 || k >= n) throw Error(ErrorCode::BadBudget, "corner form needs 3 <= k < n");
  if (p > n - k + 1) throw Error(ErrorCode::BadBudget, "p must lie in [0, n-k+1]");
  const std::size_t d0 = 1, d1 = k - 1;  // D in [1, k-1)
  const std::size_t a1 = d1 + p;         // A in [k-1, a1), F in [a1, n)
  auto in_d = [&](std::size_t i) { return i >= d0 && i < d1; };
  auto in_a = [&](std::size_t i) { return i >= d1 && i < a1; };
  auto in_f = [&](std::size_t i) { return i >= a1; };
  auto in_frame = [&](std::size_t i) { return i >= d1; };

  std::vector<QMatrix> gens{QMatrix::unit(n, 0, 0)};
  QMatrix lam(n, n);
  for (std::size_t i = d1; i < n; ++i) lam(i, i) = 1;
  gens.push_back(lam);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool free_block = (in_d(i) && in_d(j)) || (in_d(i) && in_f(j)) || (in_a(i) && in_d(j));
      const bool frame_upper = in_frame(i) && in_frame(j) && i < j;
      if (free_block || frame_upper) gens.push_back(QMatrix::unit(n, i, j));
    }
  }
  return canonicalize(n, gens);
}

}  // namespace eigspace
