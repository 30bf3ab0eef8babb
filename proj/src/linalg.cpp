#include "conductor/linalg.hpp"

#include <string>

#include "conductor/error.hpp"

namespace conductor {

SymMatrix SymMatrix::from_rows(const std::vector<RationalVector>& rows) {
  const std::size_t n = rows.size();
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(n));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw Error(ErrorCode::kPrecondition,
                    "matrix is not symmetric at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
      }
      m.data_[i * n + j] = rows[i][j];
    }
  }
  return m;
}

RationalVector SymMatrix::operator*(std::span<const Rational> x) const {
  if (x.size() != n_) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix-vector size mismatch");
  }
  RationalVector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Rational acc;
    for (std::size_t j = 0; j < n_; ++j) {
      if (!at(i, j).is_zero() && !x[j].is_zero()) acc += at(i, j) * x[j];
    }
    out[i] = acc;
  }
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "dot product size mismatch");
  }
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

namespace {

using Dense = std::vector<RationalVector>;

Dense to_dense(const SymMatrix& m) {
  Dense a(m.dim(), RationalVector(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) a[i][j] = m.at(i, j);
  }
  return a;
}

// Forward elimination without exchanges. Returns the index of the first
// non-negative pivot, or dim() when every pivot is negative.
std::size_t eliminate_negative(Dense& a, RationalVector* rhs) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].sign() >= 0) return k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) {
        if (!a[k][j].is_zero()) a[i][j] -= f * a[k][j];
      }
      if (rhs != nullptr) (*rhs)[i] -= f * (*rhs)[k];
    }
  }
  return n;
}

}  // namespace

bool is_negative_definite(const SymMatrix& m) {
  Dense a = to_dense(m);
  return eliminate_negative(a, nullptr) == m.dim();
}

RationalVector solve_definite(const SymMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "right-hand side has " + std::to_string(b.size()) +
                    " entries, matrix has dimension " +
                    std::to_string(m.dim()));
  }
  Dense a = to_dense(m);
  RationalVector rhs(b.begin(), b.end());
  const std::size_t bad = eliminate_negative(a, &rhs);
  if (bad != m.dim()) {
    throw Error(ErrorCode::kSingularMatrix,
                "matrix is not negative definite (pivot " +
                    std::to_string(bad + 1) + " is " + a[bad][bad].str() + ")");
  }
  const std::size_t n = m.dim();
  RationalVector x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc = rhs[k];
    for (std::size_t j = k + 1; j < n; ++j) acc -= a[k][j] * x[j];
    x[k] = acc / a[k][k];
  }
  return x;
}

namespace {

// Symmetric pivoting on non-zero diagonal entries. A negative semidefinite
// form has no positive diagonal entry in any Schur complement, and once
// the remaining diagonal is zero the remaining block must vanish.
bool negative_semidefinite(const SymMatrix& m) {
  Dense s = to_dense(m);
  std::vector<bool> done(m.dim(), false);
  for (;;) {
    std::size_t pivot = m.dim();
    for (std::size_t i = 0; i < m.dim(); ++i) {
      if (done[i]) continue;
      if (s[i][i].sign() > 0) return false;
      if (s[i][i].sign() < 0 && pivot == m.dim()) pivot = i;
    }
    if (pivot == m.dim()) break;
    done[pivot] = true;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      if (done[i] || s[i][pivot].is_zero()) continue;
      const Rational f = s[i][pivot] / s[pivot][pivot];
      for (std::size_t j = 0; j < m.dim(); ++j) {
        if (!done[j] && !s[pivot][j].is_zero()) s[i][j] -= f * s[pivot][j];
      }
    }
  }
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (!done[i] && !done[j] && !s[i][j].is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

SemidefiniteReport check_neg_semidefinite(const SymMatrix& m) {
  const std::size_t n = m.dim();
  Dense a = to_dense(m);

  // Reduced row echelon form for rank and kernel.
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t sel = row;
    while (sel < n && a[sel][col].is_zero()) ++sel;
    if (sel == n) continue;
    std::swap(a[row], a[sel]);
    const Rational inv = a[row][col].reciprocal();
    for (std::size_t j = col; j < n; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_cols.push_back(col);
    ++row;
  }

  SemidefiniteReport out;
  out.rank = pivot_cols.size();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(n);
    v[free] = Rational(1);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
      v[pivot_cols[r]] = -a[r][free];
    }
    out.kernel_basis.push_back(std::move(v));
  }
  out.negative_semidefinite = negative_semidefinite(m);
  out.zariski_ok = out.negative_semidefinite && out.kernel_basis.size() == 1;
  return out;
}

}  // namespace conductor
