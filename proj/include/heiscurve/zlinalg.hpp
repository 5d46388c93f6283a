// Exact integer linear algebra: Smith/Hermite normal forms, kernels,
// lattice quotients. Everything is arbitrary precision (GMP).
#ifndef HEISCURVE_ZLINALG_HPP
#define HEISCURVE_ZLINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace heis {

using Int = mpz_class;

// mpz_class lacks a long long constructor; long is 64-bit here
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix transposed() const;
  bool is_zero() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row i += k * row j  /  col i += k * col j
  void add_row(std::size_t i, std::size_t j, const Int& k);
  void add_col(std::size_t i, std::size_t j, const Int& k);
  void negate_row(std::size_t i);
  void negate_col(std::size_t i);

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

// d1 | d2 | ... | dk, each >= 2; free_rank >= 0.
struct AbelianInvariants {
  std::vector<Int> torsion;
  std::size_t free_rank = 0;

  bool operator==(const AbelianInvariants& o) const {
    return torsion == o.torsion && free_rank == o.free_rank;
  }
  bool is_free() const { return torsion.empty(); }
  std::string str() const;
};

// U*A*V = D with D diagonal, divisibility chain, U and V unimodular.
// vinv is V^{-1} (tracked, used to express vectors in kernel coordinates).
struct SnfResult {
  IntMatrix d, u, v, vinv;
  std::size_t rank = 0;  // nonzero diagonal entries
};

// When enabled, every snf() call re-verifies U*A*V == D by multiplication.
void set_snf_verify(bool on);
bool snf_verify_enabled();

SnfResult snf(const IntMatrix& a, bool want_transforms = true);

// Columns form a Z-basis of ker(A); primitive and saturated (they are
// columns of a unimodular matrix).
IntMatrix kernel_basis(const IntMatrix& a);

// Invariant factors of Z^ambient_rank / column-span(sub).
AbelianInvariants quotient_invariants(const IntMatrix& sub,
                                      std::size_t ambient_rank);

// Canonical column-style Hermite normal form of the column lattice
// (pivot entries positive, entries to the right of a pivot reduced,
// zero columns dropped). Two matrices span the same lattice iff their
// HNFs coincide.
IntMatrix hnf(const IntMatrix& a);

// Solve basis * X = rhs over Z; throws std::domain_error if no integer
// solution exists.
IntMatrix solve_columns(const IntMatrix& basis, const IntMatrix& rhs);

Int bareiss_det(IntMatrix a);
std::size_t rank_q(IntMatrix a);  // rank over Q, fraction-free elimination

}  // namespace heis

#endif
