#include <eigspace/subspace.hpp>

#include <eigspace/error.hpp>
#include <eigspace/exact.hpp>

namespace eigspace {

namespace {

using Row = std::vector<Rational>;

// Reduced row echelon form in place; zero rows are dropped. Returns pivots.
std::vector<std::size_t> rref(std::vector<Row>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const Rational p = rows[r][c];
    if (p != 1) {
      for (std::size_t j = c; j < ncols; ++j) rows[r][j] /= p;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) {
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

Row vectorize(const QMatrix& a) { return a.entries(); }

QMatrix unvectorize(std::size_t n, const Row& v) { return QMatrix(n, n, v); }

void require_size(const MatrixSubspace& v, const QMatrix& a) {
  if (a.rows() != v.n() || a.cols() != v.n()) throw Error(ErrorCode::SizeMismatch, "matrix size does not match subspace ambient");
}

}  // namespace

MatrixSubspace::MatrixSubspace(std::size_t n) : n_(n) {
  if (n == 0) throw Error(ErrorCode::EmptyAmbient, "ambient size must be positive");
}

std::vector<QMatrix> MatrixSubspace::basis() const {
  std::vector<QMatrix> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(unvectorize(n_, r));
  return out;
}

QMatrix MatrixSubspace::basis_element(std::size_t i) const { return unvectorize(n_, rows_.at(i)); }

bool MatrixSubspace::contains(const QMatrix& a) const {
  require_size(*this, a);
  Row v = vectorize(a);
  for (std::size_t b = 0; b < rows_.size(); ++b) {
    const Rational f = v[pivots_[b]];
    if (f == 0) continue;
    for (std::size_t j = pivots_[b]; j < v.size(); ++j) {
      if (rows_[b][j] != 0) v[j] -= f * rows_[b][j];
    }
  }
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

std::vector<Rational> MatrixSubspace::coordinates(const QMatrix& a) const {
  if (!contains(a)) throw Error(ErrorCode::PreconditionFailed, "matrix is not a member of the subspace");
  // In RREF the coordinate of basis row b is the entry at its pivot.
  std::vector<Rational> out;
  out.reserve(rows_.size());
  for (std::size_t b = 0; b < rows_.size(); ++b) out.push_back(a.entries()[pivots_[b]]);
  return out;
}

QMatrix MatrixSubspace::combine(std::span<const Rational> coeffs) const {
  if (coeffs.size() != rows_.size()) throw Error(ErrorCode::SizeMismatch, "coefficient count does not match dimension");
  Row acc(n_ * n_);
  for (std::size_t b = 0; b < rows_.size(); ++b) {
    if (coeffs[b] == 0) continue;
    for (std::size_t j = 0; j < acc.size(); ++j) {
      if (rows_[b][j] != 0) acc[j] += coeffs[b] * rows_[b][j];
    }
  }
  return unvectorize(n_, acc);
}

MatrixSubspace canonicalize(std::size_t n, std::span<const QMatrix> raw) {
  MatrixSubspace out(n);
  std::vector<Row> rows;
  rows.reserve(raw.size());
  for (const auto& m : raw) {
    if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::MixedSizes, "all matrices must be n x n");
    if (!m.is_zero()) rows.push_back(vectorize(m));
  }
  out.pivots_ = rref(rows, n * n);
  out.rows_ = std::move(rows);
  return out;
}

MatrixSubspace canonicalize(std::span<const QMatrix> raw) {
  if (raw.empty()) throw Error(ErrorCode::EmptyAmbient, "cannot infer ambient size from an empty list");
  return canonicalize(raw.front().rows(), raw);
}

bool contains(const MatrixSubspace& v, const QMatrix& a) { return v.contains(a); }

std::pair<MatrixSubspace, MatrixSubspace> sum_and_intersection(const MatrixSubspace& v,
                                                               const MatrixSubspace& w) {
  if (v.n() != w.n()) throw Error(ErrorCode::SizeMismatch, "subspaces live in different ambients");
  const std::size_t n = v.n();
  const std::size_t len = n * n;
  // Zassenhaus: rows (v | v) and (w | 0). After reduction, rows with a nonzero
  // left half span V + W and the right halves of the remaining rows span V ∩ W.
  std::vector<Row> rows;
  for (const auto& b : v.basis()) {
    Row r(2 * len);
    for (std::size_t j = 0; j < len; ++j) r[j] = r[len + j] = b.entries()[j];
    rows.push_back(std::move(r));
  }
  for (const auto& b : w.basis()) {
    Row r(2 * len);
    for (std::size_t j = 0; j < len; ++j) r[j] = b.entries()[j];
    rows.push_back(std::move(r));
  }
  const auto piv = rref(rows, 2 * len);
  std::vector<QMatrix> sum_gens, cap_gens;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (piv[i] < len) {
      sum_gens.emplace_back(n, n, Row(rows[i].begin(), rows[i].begin() + static_cast<std::ptrdiff_t>(len)));
    } else {
      cap_gens.emplace_back(n, n, Row(rows[i].begin() + static_cast<std::ptrdiff_t>(len), rows[i].end()));
    }
  }
  return {canonicalize(n, sum_gens), canonicalize(n, cap_gens)};
}

MatrixSubspace conjugate(const MatrixSubspace& v, const QMatrix& p) {
  if (p.rows() != v.n() || p.cols() != v.n()) throw Error(ErrorCode::SizeMismatch, "conjugator size does not match ambient");
  const QMatrix pinv = inverse(p);
  std::vector<QMatrix> gens;
  gens.reserve(v.dim());
  for (const auto& b : v.basis()) gens.push_back(p * b * pinv);
  return canonicalize(v.n(), gens);
}

bool is_borel_invariant(const MatrixSubspace& v) {
  const std::size_t n = v.n();
  const auto basis = v.basis();
  // Torus: the diagonal part and every off-diagonal entry of a basis element
  // must lie in V on its own.
  for (const auto& b : basis) {
    QMatrix diag(n, n);
    for (std::size_t i = 0; i < n; ++i) diag(i, i) = b(i, i);
    if (!v.contains(diag)) return false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && b(i, j) != 0 && !v.contains(QMatrix::unit(n, i, j))) return false;
  }
  // Unipotent generators: (I + sE)B(I - sE) = B + s[E, B] - s^2 EBE.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const QMatrix e = QMatrix::unit(n, i, j);
      for (const auto& b : basis) {
        const QMatrix eb = e * b;
        if (!v.contains(eb - b * e)) return false;
        if (!v.contains(eb * e)) return false;
      }
    }
  }
  return true;
}

std::string to_string(EijRule rule) {
  switch (rule) {
    case EijRule::LowerEntry: return "lower_entry";
    case EijRule::OffDiagonal: return "off_diagonal";
    case EijRule::DiagonalSplit: return "diagonal_split";
  }
  return "unknown";
}

std::vector<EijViolation> check_eij_implications(const MatrixSubspace& v) {
  if (!is_borel_invariant(v)) throw Error(ErrorCode::NotBorelInvariant, "E_ij implications need a Borel-invariant space");
  const std::size_t n = v.n();
  std::vector<std::vector<int>> member(n, std::vector<int>(n, -1));
  auto has_unit = [&](std::size_t i, std::size_t j) {
    if (member[i][j] < 0) member[i][j] = v.contains(QMatrix::unit(n, i, j)) ? 1 : 0;
    return member[i][j] == 1;
  };
  std::vector<EijViolation> out;
  const auto basis = v.basis();
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    const QMatrix& a = basis[idx];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (i < j && a(j, i) != 0 && !has_unit(i, j)) out.push_back({EijRule::LowerEntry, i, j, idx});
        if (a(i, j) != 0 && !has_unit(i, j)) out.push_back({EijRule::OffDiagonal, i, j, idx});
        if (i < j && a(i, i) != a(j, j) && !has_unit(i, j)) out.push_back({EijRule::DiagonalSplit, i, j, idx});
      }
    }
  }
  return out;
}

}  // namespace eigspace
