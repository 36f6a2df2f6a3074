#pragma once

// Exact linear algebra over the rationals. Every rank, kernel, cokernel and
// subquotient in the library goes through this header.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace leibcoh {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

// Accepts "n", "-n" and "n/d" (d != 0). The result is canonical.
Scalar parse_scalar(std::string_view text);
std::string format_scalar(const Scalar& value);

// Dense row-major matrix. 0×n and n×0 shapes are legal.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Mat identity(std::size_t n);
  static Mat from_columns(std::size_t rows, const std::vector<Vec>& columns);
  static Mat diagonal(const Vec& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  Mat transpose() const;
  bool is_zero() const;

  Mat& operator+=(const Mat& other);
  Mat& operator-=(const Mat& other);
  Mat& operator*=(const Scalar& s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator-(Mat a) { return a *= Scalar(-1); }
  friend Mat operator*(const Scalar& s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, const Vec& v);
  friend bool operator==(const Mat& a, const Mat& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct SparseEntry {
  std::size_t col;
  Scalar value;
};
// Sorted by column, no explicit zeros.
using SparseRow = std::vector<SparseEntry>;

// Row-sparse matrix used for the large cochain differentials and as the
// storage format of the elimination engine.
class SparseMat {
 public:
  SparseMat() = default;
  SparseMat(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static SparseMat from_dense(const Mat& m);
  Mat to_dense() const;

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const SparseRow& row(std::size_t i) const { return rows_[i]; }
  void set_row(std::size_t i, SparseRow row) { rows_[i] = std::move(row); }
  std::size_t nonzeros() const;
  bool is_zero() const;

  friend SparseMat operator*(const SparseMat& a, const SparseMat& b);

 private:
  std::size_t cols_ = 0;
  std::vector<SparseRow> rows_;
};

// Reduced row echelon form of a row space: rows[i] has a leading 1 in column
// pivots[i] and zeros in every other pivot column; pivots increase.
struct Echelon {
  std::size_t cols = 0;
  std::vector<SparseRow> rows;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(const SparseMat& m, bool reduced = true);
Echelon row_reduce(const Mat& m, bool reduced = true);

// A list of linearly independent vectors of a common ambient dimension.
struct SubspaceBasis {
  std::size_t ambient_dim = 0;
  std::vector<Vec> vectors;

  std::size_t dim() const { return vectors.size(); }
  Mat matrix() const;  // ambient_dim × dim, basis vectors as columns

  static SubspaceBasis zero(std::size_t ambient);
  static SubspaceBasis full(std::size_t ambient);
};

std::size_t rank(const Mat& m);
std::size_t rank(const SparseMat& m);
SubspaceBasis kernel_basis(const Mat& m);
SubspaceBasis kernel_basis(const SparseMat& m);
std::size_t cokernel_dim(const Mat& m);

// Column space, spanned by the pivot columns of m (first independent columns
// in left-to-right order).
SubspaceBasis image_basis(const Mat& m);
SubspaceBasis image_basis(const SparseMat& m);
// Greedy independent subset of the given vectors, in order.
SubspaceBasis span_of(std::size_t ambient, const std::vector<Vec>& vectors);
// Common kernel of several maps with the same source.
SubspaceBasis common_kernel(const std::vector<Mat>& maps, std::size_t source_dim);

// Coordinates X with basis.matrix() * X == vectors, or nullopt when some
// column of `vectors` is outside the span.
std::optional<Mat> coordinates(const SubspaceBasis& basis, const Mat& vectors);
bool contains(const SubspaceBasis& outer, const SubspaceBasis& inner);

// Matrix of the map induced by f on span(sub)/span(quot_of), written in the
// complement basis obtained by extending quot_of with pivot columns inside
// sub. Throws StabilityError when f does not preserve either subspace.
Mat restrict_and_project(const Mat& f, const SubspaceBasis& sub, const SubspaceBasis& quot_of);

// Kronecker product; entry (i*rows_b + k, j*cols_b + l) = a(i,j) * b(k,l).
Mat kron(const Mat& a, const Mat& b);
Mat vstack(const std::vector<Mat>& blocks, std::size_t cols);
Mat hstack(const std::vector<Mat>& blocks, std::size_t rows);

}  // namespace leibcoh
