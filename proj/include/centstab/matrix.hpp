#pragma once

#include <string>
#include <vector>

#include "centstab/field.hpp"

namespace centstab {

// Dense matrix over a single exact field.  All operations are pure;
// mixing fields throws FieldMismatchError.
class Matrix {
 public:
  Matrix() : Matrix(0, 0, Field::rationals()) {}
  Matrix(int rows, int cols, const Field& f);

  static Matrix identity(int n, const Field& f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Scalar& s) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  Matrix column(int c) const;
  Matrix columns(const std::vector<int>& idx) const;
  // [A | B] side by side.
  Matrix hstack(const Matrix& o) const;

  std::string str() const;

 private:
  int rows_, cols_;
  Field field_;
  std::vector<Scalar> e_;
};

// ---- elimination kernels ----
//
// The parallel kernels distribute independent row updates across OpenMP
// threads; the serial ones are the reference implementations the tests
// compare against.  Dispatch is controlled by set_parallel_kernels().

bool parallel_kernels_enabled();
void set_parallel_kernels(bool on);

Matrix mul_serial(const Matrix& a, const Matrix& b);
Matrix mul_parallel(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix rref;              // reduced row echelon form
  std::vector<int> pivots;  // pivot column per nonzero row
  int rank = 0;
};

Echelon echelon_serial(Matrix a);
Echelon echelon_parallel(Matrix a);
Echelon echelon(const Matrix& a);  // dispatching wrapper

// ---- derived operations ----

int rank(const Matrix& a);

// Columns form a basis of the null space; rank(A) + cols(kernel) = cols(A).
Matrix kernel_basis(const Matrix& a);

// The pivot columns of A, a basis of the column space.
Matrix image_basis(const Matrix& a);

// Solve A X = B where A has full column rank.  Throws LinalgError when
// the system is inconsistent or A is rank-deficient.
Matrix solve(const Matrix& a, const Matrix& b);

// Quotient of the ambient coordinate space by the span of the given
// columns.  The representatives are the non-pivot coordinates of the
// reduced subspace; projection * (coordinate section) = identity and
// projection * subspace = 0.
struct QuotientSpace {
  std::vector<int> rep_indices;
  Matrix projection;  // (ambient - rank) x ambient
};

QuotientSpace quotient_basis(int ambient_dim, const Matrix& subspace_cols);

// Smallest subspace containing the seed columns and invariant under every
// map; computed by closing the seed under the maps until the rank stops
// growing.  Returns basis columns in echelon order.
Matrix close_under_maps(const Matrix& seed_cols, const std::vector<Matrix>& maps);

}  // namespace centstab
