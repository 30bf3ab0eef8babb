#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "conductor/rational.hpp"

namespace conductor {

using RationalVector = std::vector<Rational>;

// Dense symmetric matrix over the rationals.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : n_(n), data_(n * n) {}

  // Throws kDimensionMismatch on ragged input and kPrecondition when the
  // rows are not symmetric.
  static SymMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t dim() const { return n_; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }
  // Writes both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, const Rational& v) {
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
  }

  RationalVector operator*(std::span<const Rational> x) const;

  bool operator==(const SymMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

// Exact solution of M x = b for a negative definite M. Definiteness is
// verified on the way: elimination without row exchanges must meet only
// negative pivots (leading principal minors alternate in sign). Throws
// kSingularMatrix on a singular or indefinite M, kDimensionMismatch when
// b has the wrong length.
RationalVector solve_definite(const SymMatrix& m, std::span<const Rational> b);

// True iff every leading pivot is negative.
bool is_negative_definite(const SymMatrix& m);

struct SemidefiniteReport {
  std::size_t rank = 0;
  std::vector<RationalVector> kernel_basis;
  bool negative_semidefinite = false;
  // Negative semidefinite with a one-dimensional kernel, which is what an
  // intersection form on a connected special fiber must look like.
  bool zariski_ok = false;
};

SemidefiniteReport check_neg_semidefinite(const SymMatrix& m);

}  // namespace conductor
