#include "centstab/matrix.hpp"

#include <cstdlib>
#include <sstream>

#include "centstab/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace centstab {

Matrix::Matrix(int rows, int cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f) {
  if (rows < 0 || cols < 0) throw LinalgError("negative matrix dimensions");
  e_.assign(static_cast<size_t>(rows) * cols, Scalar::zero(f));
}

Matrix Matrix::identity(int n, const Field& f) {
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

namespace {

void check_fields(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()))
    throw FieldMismatchError("mixed-field matrix arithmetic: " + a.field().spec() +
                             " vs " + b.field().spec());
}

bool parallel_default() {
#ifdef _OPENMP
  const char* env = std::getenv("CENTSTAB_SERIAL");
  return env == nullptr || env[0] == '0';
#else
  return false;
#endif
}

bool g_parallel = parallel_default();

// Work below this many scalar multiplications is not worth forking for.
constexpr long long kParallelGrain = 1 << 14;

}  // namespace

bool parallel_kernels_enabled() { return g_parallel; }
void set_parallel_kernels(bool on) { g_parallel = on; }

Matrix mul_serial(const Matrix& a, const Matrix& b) {
  check_fields(a, b);
  if (a.cols() != b.rows()) throw LinalgError("matrix product shape mismatch");
  Matrix c(a.rows(), b.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b.at(k, j);
        if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

Matrix mul_parallel(const Matrix& a, const Matrix& b) {
  check_fields(a, b);
  if (a.cols() != b.rows()) throw LinalgError("matrix product shape mismatch");
  Matrix c(a.rows(), b.cols(), a.field());
#pragma omp parallel for schedule(dynamic, 4)
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b.at(k, j);
        if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

Matrix Matrix::operator*(const Matrix& o) const {
  long long work = static_cast<long long>(rows_) * cols_ * o.cols();
  if (g_parallel && work >= kParallelGrain) return mul_parallel(*this, o);
  return mul_serial(*this, o);
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_fields(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw LinalgError("matrix sum shape mismatch");
  Matrix c = *this;
  for (size_t i = 0; i < e_.size(); ++i) c.e_[i] += o.e_[i];
  return c;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_fields(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw LinalgError("matrix difference shape mismatch");
  Matrix c = *this;
  for (size_t i = 0; i < e_.size(); ++i) c.e_[i] -= o.e_[i];
  return c;
}

Matrix Matrix::operator-() const {
  Matrix c = *this;
  for (auto& s : c.e_) s = -s;
  return c;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix c = *this;
  for (auto& v : c.e_) v *= s;
  return c;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) return false;
  return e_ == o.e_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

Matrix Matrix::column(int c) const { return columns({c}); }

Matrix Matrix::columns(const std::vector<int>& idx) const {
  Matrix m(rows_, static_cast<int>(idx.size()), field_);
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < rows_; ++i) m.at(i, j) = at(i, idx[j]);
  return m;
}

Matrix Matrix::hstack(const Matrix& o) const {
  check_fields(*this, o);
  if (rows_ != o.rows_) throw LinalgError("hstack row mismatch");
  Matrix m(rows_, cols_ + o.cols_, field_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
  }
  return m;
}

std::string Matrix::str() const {
  std::ostringstream out;
  for (int i = 0; i < rows_; ++i) {
    out << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) {
      if (j) out << ' ';
      out << at(i, j).str();
    }
    out << (i + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) out << "[]";
  return out.str();
}

namespace {

// Shared elimination skeleton.  The row updates below (and above) a pivot
// are independent of one another, which is what the parallel variant
// exploits.
template <bool Parallel>
Echelon echelon_impl(Matrix a) {
  Echelon result{Matrix(0, 0, a.field()), {}, 0};
  int lead = 0;
  const int rows = a.rows(), cols = a.cols();
  for (int col = 0; col < cols && lead < rows; ++col) {
    int piv = -1;
    for (int r = lead; r < rows; ++r) {
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = col; j < cols; ++j) std::swap(a.at(piv, j), a.at(lead, j));
    const Scalar inv = a.at(lead, col).inverse();
    for (int j = col; j < cols; ++j) a.at(lead, j) *= inv;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (Parallel)
#endif
    for (int r = 0; r < rows; ++r) {
      if (r == lead) continue;
      const Scalar factor = a.at(r, col);
      if (factor.is_zero()) continue;
      for (int j = col; j < cols; ++j) {
        if (!a.at(lead, j).is_zero()) a.at(r, j) -= factor * a.at(lead, j);
      }
    }
    result.pivots.push_back(col);
    ++lead;
  }
  result.rank = lead;
  result.rref = std::move(a);
  return result;
}

}  // namespace

Echelon echelon_serial(Matrix a) { return echelon_impl<false>(std::move(a)); }
Echelon echelon_parallel(Matrix a) { return echelon_impl<true>(std::move(a)); }

Echelon echelon(const Matrix& a) {
  long long work = static_cast<long long>(a.rows()) * a.cols();
  if (g_parallel && work >= kParallelGrain) return echelon_parallel(a);
  return echelon_serial(a);
}

int rank(const Matrix& a) { return echelon(a).rank; }

Matrix kernel_basis(const Matrix& a) {
  Echelon e = echelon(a);
  std::vector<char> is_pivot(a.cols(), 0);
  for (int p : e.pivots) is_pivot[p] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix k(a.cols(), static_cast<int>(free_cols.size()), a.field());
  for (size_t j = 0; j < free_cols.size(); ++j) {
    int f = free_cols[j];
    k.at(f, static_cast<int>(j)) = Scalar::one(a.field());
    for (int r = 0; r < e.rank; ++r)
      k.at(e.pivots[r], static_cast<int>(j)) = -e.rref.at(r, f);
  }
  return k;
}

Matrix image_basis(const Matrix& a) { return a.columns(echelon(a).pivots); }

Matrix solve(const Matrix& a, const Matrix& b) {
  check_fields(a, b);
  if (a.rows() != b.rows()) throw LinalgError("solve: row mismatch");
  Echelon e = echelon(a.hstack(b));
  for (int p : e.pivots)
    if (p >= a.cols()) throw LinalgError("solve: inconsistent system");
  if (e.rank != a.cols()) throw LinalgError("solve: matrix is rank-deficient");
  Matrix x(a.cols(), b.cols(), a.field());
  for (int r = 0; r < e.rank; ++r)
    for (int j = 0; j < b.cols(); ++j) x.at(e.pivots[r], j) = e.rref.at(r, a.cols() + j);
  return x;
}

QuotientSpace quotient_basis(int ambient_dim, const Matrix& subspace_cols) {
  if (subspace_cols.cols() > 0 && subspace_cols.rows() != ambient_dim)
    throw LinalgError("quotient_basis: subspace does not live in the ambient space");
  const Field& f = subspace_cols.field();
  Echelon e = echelon(subspace_cols.transpose());
  std::vector<char> is_pivot(ambient_dim, 0);
  for (int p : e.pivots) is_pivot[p] = 1;

  QuotientSpace q;
  for (int c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) q.rep_indices.push_back(c);

  q.projection = Matrix(static_cast<int>(q.rep_indices.size()), ambient_dim, f);
  for (size_t j = 0; j < q.rep_indices.size(); ++j) {
    int col = q.rep_indices[j];
    q.projection.at(static_cast<int>(j), col) = Scalar::one(f);
    for (int r = 0; r < e.rank; ++r)
      q.projection.at(static_cast<int>(j), e.pivots[r]) = -e.rref.at(r, col);
  }
  return q;
}

namespace {

// Incrementally maintained echelon row space: insert() reduces a vector
// against the current rows and adjoins the normalized remainder when it
// is nonzero.
class RowSpace {
 public:
  explicit RowSpace(const Field& f) : field_(f) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  // Returns the reduced, normalized row if the rank grew, else empty.
  std::vector<Scalar> insert(std::vector<Scalar> v) {
    const size_t n = v.size();
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Scalar factor = v[pivots_[r]];
      if (factor.is_zero()) continue;
      for (size_t j = pivots_[r]; j < n; ++j)
        if (!rows_[r][j].is_zero()) v[j] -= factor * rows_[r][j];
    }
    size_t pivot = n;
    for (size_t j = 0; j < n; ++j) {
      if (!v[j].is_zero()) {
        pivot = j;
        break;
      }
    }
    if (pivot == n) return {};
    const Scalar inv = v[pivot].inverse();
    for (size_t j = pivot; j < n; ++j) v[j] *= inv;
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
    rows_.insert(rows_.begin() + pos, v);
    pivots_.insert(pivots_.begin() + pos, pivot);
    return v;
  }

  Matrix basis_columns(int dim) const {
    Matrix b(dim, rank(), field_);
    for (int j = 0; j < rank(); ++j)
      for (int i = 0; i < dim; ++i) b.at(i, j) = rows_[j][i];
    return b;
  }

 private:
  Field field_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<size_t> pivots_;
};

std::vector<Scalar> matvec(const Matrix& m, const std::vector<Scalar>& x) {
  std::vector<int> nz;
  for (size_t j = 0; j < x.size(); ++j)
    if (!x[j].is_zero()) nz.push_back(static_cast<int>(j));
  std::vector<Scalar> y(m.rows(), Scalar::zero(m.field()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j : nz)
      if (!m.at(i, j).is_zero()) y[i] += m.at(i, j) * x[j];
  return y;
}

}  // namespace

Matrix close_under_maps(const Matrix& seed_cols, const std::vector<Matrix>& maps) {
  const Field& f = seed_cols.field();
  const int dim = seed_cols.rows();
  for (const Matrix& m : maps) {
    check_fields(seed_cols, m);
    if (m.rows() != dim || m.cols() != dim)
      throw LinalgError("close_under_maps: maps must be square of the ambient dimension");
  }

  RowSpace space(f);
  std::vector<std::vector<Scalar>> frontier;
  for (int c = 0; c < seed_cols.cols(); ++c) {
    std::vector<Scalar> v(dim, Scalar::zero(f));
    for (int i = 0; i < dim; ++i) v[i] = seed_cols.at(i, c);
    auto reduced = space.insert(std::move(v));
    if (!reduced.empty()) frontier.push_back(std::move(reduced));
  }

  while (!frontier.empty()) {
    std::vector<std::vector<Scalar>> next;
    for (const auto& v : frontier) {
      for (const Matrix& m : maps) {
        auto reduced = space.insert(matvec(m, v));
        if (!reduced.empty()) next.push_back(std::move(reduced));
      }
    }
    frontier = std::move(next);
  }
  return space.basis_columns(dim);
}

}  // namespace centstab
