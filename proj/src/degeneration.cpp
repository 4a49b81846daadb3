#include <eigspace/degeneration.hpp>

#include <eigspace/error.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace eigspace {

namespace {

using Row = std::vector<Rational>;
using LaurentRow = std::map<long, Row>;

bool row_is_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

// v += c * t^shift * u
void add_scaled_shifted(LaurentRow& v, const LaurentRow& u, const Rational& c, long shift) {
  for (const auto& [e, coeffs] : u) {
    Row& target = v.try_emplace(e + shift, Row(coeffs.size())).first->second;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] != 0) target[j] += c * coeffs[j];
    }
  }
  for (auto it = v.begin(); it != v.end();) {
    it = row_is_zero(it->second) ? v.erase(it) : std::next(it);
  }
}

// Returns coefficients c with sum c_i rows[i] = 0 and c != 0, or an empty
// vector when the rows are independent.
std::vector<Rational> find_dependency(const std::vector<Row>& rows) {
  const std::size_t m = rows.size();
  const std::size_t len = rows.empty() ? 0 : rows.front().size();
  std::vector<Row> aug(m, Row(len + m));
  for (std::size_t i = 0; i < m; ++i) {
    std::copy(rows[i].begin(), rows[i].end(), aug[i].begin());
    aug[i][len + i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < len && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && aug[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(aug[piv], aug[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      if (aug[i][c] == 0) continue;
      const Rational f = aug[i][c] / aug[r][c];
      for (std::size_t j = c; j < len + m; ++j) {
        if (aug[r][j] != 0) aug[i][j] -= f * aug[r][j];
      }
    }
    ++r;
  }
  if (r == m) return {};
  // Row r has a zero left half; its right half records the combination.
  return Row(aug[r].begin() + static_cast<std::ptrdiff_t>(len), aug[r].end());
}

LaurentRow to_laurent_row(const LaurentMatrix& m) {
  LaurentRow out;
  for (const auto& [e, coeff] : m.terms) {
    if (!coeff.is_zero()) out.emplace(e, coeff.entries());
  }
  return out;
}

void require_weights(std::size_t n, const WeightVector& w) {
  if (w.size() != n) throw Error(ErrorCode::SizeMismatch, "weight vector length must equal the matrix size");
}

}  // namespace

WeightVector WeightVector::negated() const {
  WeightVector out = *this;
  for (auto& x : out.weights) x = -x;
  return out;
}

WeightVector standard_weights(std::size_t n) {
  WeightVector w;
  w.weights.assign(n, -1);
  if (n > 0) w.weights[0] = static_cast<long>(n) - 1;
  return w;
}

TFamily one_param_family(const MatrixSubspace& v, const WeightVector& w) {
  const std::size_t n = v.n();
  require_weights(n, w);
  TFamily fam{n, {}};
  for (const auto& b : v.basis()) {
    LaurentMatrix lm;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (b(i, j) == 0) continue;
        auto& term = lm.terms.try_emplace(w.entry_weight(i, j), QMatrix(n, n)).first->second;
        term(i, j) = b(i, j);
      }
    }
    fam.basis.push_back(std::move(lm));
  }
  return fam;
}

MatrixSubspace grassmannian_limit(const TFamily& fam) {
  std::vector<LaurentRow> vecs;
  vecs.reserve(fam.basis.size());
  long bound = 0;
  for (const auto& lm : fam.basis) {
    LaurentRow r = to_laurent_row(lm);
    if (r.empty()) throw Error(ErrorCode::DegenerateFamily, "family contains a zero vector");
    bound += r.rbegin()->first;
    vecs.push_back(std::move(r));
  }

  // The wedge of the family changes only by nonzero constants, so the sum of
  // valuations can never exceed the top degree of its Plücker coordinates,
  // which `bound` dominates.
  while (true) {
    std::vector<Row> leads;
    long total = 0;
    for (const auto& v : vecs) {
      leads.push_back(v.begin()->second);
      total += v.begin()->first;
    }
    if (total > bound) throw std::logic_error("grassmannian_limit: valuation bound exceeded");

    const auto dep = find_dependency(leads);
    if (dep.empty()) {
      std::vector<QMatrix> gens;
      gens.reserve(leads.size());
      for (auto& l : leads) gens.emplace_back(fam.n, fam.n, std::move(l));
      return canonicalize(fam.n, gens);
    }

    std::size_t target = vecs.size();
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      if (dep[i] == 0) continue;
      if (target == vecs.size() || vecs[i].begin()->first >= vecs[target].begin()->first) target = i;
    }
    const long top = vecs[target].begin()->first;
    LaurentRow replacement;
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      if (dep[i] != 0) add_scaled_shifted(replacement, vecs[i], dep[i], top - vecs[i].begin()->first);
    }
    if (replacement.empty()) throw Error(ErrorCode::DegenerateFamily, "basis is dependent over the Laurent field");
    vecs[target] = std::move(replacement);
  }
}

MatrixSubspace degenerate(const MatrixSubspace& v, const WeightVector& w, bool negate) {
  return grassmannian_limit(one_param_family(v, negate ? w.negated() : w));
}

bool is_phi_stable(const MatrixSubspace& v, const WeightVector& w) { return degenerate(v, w) == v; }

std::vector<WeightComponent> weight_decomposition(const MatrixSubspace& v, const WeightVector& w) {
  const std::size_t n = v.n();
  require_weights(n, w);
  if (!is_phi_stable(v, w)) throw Error(ErrorCode::NotPhiStable, "space is not stable under the one-parameter subgroup");
  std::map<long, std::vector<QMatrix>> parts;
  for (const auto& b : v.basis()) {
    std::map<long, QMatrix> split;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (b(i, j) != 0) split.try_emplace(w.entry_weight(i, j), QMatrix(n, n)).first->second(i, j) = b(i, j);
    for (auto& [j, m] : split) {
      if (!v.contains(m)) throw Error(ErrorCode::NotPhiStable, "weight part of a basis element left the space");
      parts[j].push_back(std::move(m));
    }
  }
  std::vector<WeightComponent> out;
  std::size_t total = 0;
  for (auto& [j, gens] : parts) {
    MatrixSubspace comp = canonicalize(n, gens);
    total += comp.dim();
    if (comp.dim() > 0) out.push_back({j, std::move(comp)});
  }
  if (total != v.dim()) throw Error(ErrorCode::NotPhiStable, "weight spaces do not add up to the space");
  return out;
}

std::size_t dimension_at(const std::vector<WeightComponent>& comps, long j) {
  for (const auto& c : comps) {
    if (c.j == j) return c.component.dim();
  }
  return 0;
}

BorderDimensions border_dimensions(const MatrixSubspace& v, std::size_t k) {
  const std::size_t n = v.n();
  if (k < 2 || k >= n) throw Error(ErrorCode::BadBudget, "border dimensions need 2 <= k < n");
  const auto comps = weight_decomposition(v, standard_weights(n));
  const long wn = static_cast<long>(n);

  BorderDimensions out;
  out.n = n;
  out.k = k;
  out.dim_pos = dimension_at(comps, wn);
  out.dim_neg = dimension_at(comps, -wn);

  // Coordinates of the border vectors b_2..b_n / c_2..c_n with index >= k.
  std::vector<QMatrix> row_tail, col_tail;
  for (std::size_t q = k; q <= n; ++q) {
    row_tail.push_back(QMatrix::unit(n, 0, q - 1));
    col_tail.push_back(QMatrix::unit(n, q - 1, 0));
  }
  for (const auto& c : comps) {
    if (c.j == wn) out.dim_pos_primed = sum_and_intersection(c.component, canonicalize(n, row_tail)).second.dim();
    if (c.j == -wn) out.dim_neg_primed = sum_and_intersection(c.component, canonicalize(n, col_tail)).second.dim();
  }
  return out;
}

}  // namespace eigspace
