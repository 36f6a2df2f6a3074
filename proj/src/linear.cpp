#include "leibcoh/linear.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

#include "leibcoh/errors.hpp"

namespace leibcoh {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// out = a + factor * b
SparseRow axpy(const SparseRow& a, const Scalar& factor, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].col < a[i].col) {
      out.push_back({b[j].col, factor * b[j].value});
      ++j;
    } else {
      Scalar v = a[i].value + factor * b[j].value;
      if (sgn(v) != 0) out.push_back({a[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseRow dense_row(const Mat& m, std::size_t i) {
  SparseRow row;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (sgn(m(i, j)) != 0) row.push_back({j, m(i, j)});
  }
  return row;
}

// Eliminates every entry of `row` sitting in a pivot column (other than `skip`).
void reduce_against(SparseRow& row, const std::vector<SparseRow>& pivot_rows,
                    const std::vector<long>& pivot_of_col, std::size_t skip) {
  std::size_t idx = 0;
  while (idx < row.size()) {
    const std::size_t c = row[idx].col;
    const long p = pivot_of_col[c];
    if (p < 0 || c == skip) {
      ++idx;
      continue;
    }
    Scalar factor = -row[idx].value;
    row = axpy(row, factor, pivot_rows[static_cast<std::size_t>(p)]);
  }
}

Echelon eliminate(std::vector<SparseRow> input, std::size_t cols, bool reduced) {
  Echelon e;
  e.cols = cols;
  std::vector<long> pivot_of_col(cols, -1);
  std::vector<SparseRow> pivot_rows;
  for (auto& row : input) {
    reduce_against(row, pivot_rows, pivot_of_col, cols);
    if (row.empty()) continue;
    Scalar inv = 1 / row.front().value;
    for (auto& entry : row) entry.value *= inv;
    pivot_of_col[row.front().col] = static_cast<long>(pivot_rows.size());
    pivot_rows.push_back(std::move(row));
  }

  std::vector<std::size_t> order(pivot_rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivot_rows[a].front().col < pivot_rows[b].front().col; });

  if (reduced) {
    // Back-substitution from the rightmost pivot; rows to the right are already clean.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      SparseRow& row = pivot_rows[*it];
      reduce_against(row, pivot_rows, pivot_of_col, row.front().col);
    }
  }

  e.rows.reserve(order.size());
  for (std::size_t k : order) {
    e.pivots.push_back(pivot_rows[k].front().col);
    e.rows.push_back(std::move(pivot_rows[k]));
  }
  return e;
}

std::vector<SparseRow> rows_of(const Mat& m) {
  std::vector<SparseRow> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = dense_row(m, i);
  return rows;
}

std::vector<SparseRow> rows_of(const SparseMat& m) {
  std::vector<SparseRow> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = m.row(i);
  return rows;
}

SubspaceBasis kernel_from_echelon(const Echelon& e) {
  SubspaceBasis k;
  k.ambient_dim = e.cols;
  std::vector<long> free_index(e.cols, -1);
  std::vector<bool> is_pivot(e.cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < e.cols; ++c) {
    if (is_pivot[c]) continue;
    free_index[c] = static_cast<long>(k.vectors.size());
    Vec v(e.cols);
    v[c] = 1;
    k.vectors.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    for (const auto& entry : e.rows[i]) {
      if (is_pivot[entry.col]) continue;
      k.vectors[static_cast<std::size_t>(free_index[entry.col])][e.pivots[i]] = -entry.value;
    }
  }
  return k;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw InputError("malformed rational literal '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string format_scalar(const Scalar& value) { return value.get_str(); }

// ---------------------------------------------------------------- Mat

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_columns(std::size_t rows, const std::vector<Vec>& columns) {
  Mat m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Mat Mat::diagonal(const Vec& entries) {
  Mat m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Vec Mat::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

Mat& Mat::operator+=(const Mat& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Mat& Mat::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  Mat c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
  Vec out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0) out[i] += a(i, j) * v[j];
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------- SparseMat

SparseMat SparseMat::from_dense(const Mat& m) {
  SparseMat s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) s.rows_[i] = dense_row(m, i);
  return s;
}

Mat SparseMat::to_dense() const {
  Mat m(rows(), cols_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& e : rows_[i]) m(i, e.col) = e.value;
  return m;
}

std::size_t SparseMat::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

bool SparseMat::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const SparseRow& r) { return r.empty(); });
}

SparseMat operator*(const SparseMat& a, const SparseMat& b) {
  if (a.cols() != b.rows()) throw DimensionError("sparse product shape mismatch");
  SparseMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    SparseRow acc;
    for (const auto& e : a.row(i)) acc = axpy(acc, e.value, b.row(e.col));
    c.rows_[i] = std::move(acc);
  }
  return c;
}

// ---------------------------------------------------------------- elimination

Echelon row_reduce(const SparseMat& m, bool reduced) { return eliminate(rows_of(m), m.cols(), reduced); }
Echelon row_reduce(const Mat& m, bool reduced) { return eliminate(rows_of(m), m.cols(), reduced); }

Mat SubspaceBasis::matrix() const { return Mat::from_columns(ambient_dim, vectors); }

SubspaceBasis SubspaceBasis::zero(std::size_t ambient) { return SubspaceBasis{ambient, {}}; }

SubspaceBasis SubspaceBasis::full(std::size_t ambient) {
  SubspaceBasis b{ambient, {}};
  for (std::size_t i = 0; i < ambient; ++i) {
    Vec v(ambient);
    v[i] = 1;
    b.vectors.push_back(std::move(v));
  }
  return b;
}

std::size_t rank(const Mat& m) { return row_reduce(m, false).pivots.size(); }
std::size_t rank(const SparseMat& m) { return row_reduce(m, false).pivots.size(); }

SubspaceBasis kernel_basis(const Mat& m) { return kernel_from_echelon(row_reduce(m, true)); }
SubspaceBasis kernel_basis(const SparseMat& m) { return kernel_from_echelon(row_reduce(m, true)); }

std::size_t cokernel_dim(const Mat& m) { return m.rows() - rank(m); }

SubspaceBasis image_basis(const Mat& m) {
  const Echelon e = row_reduce(m, false);
  SubspaceBasis b{m.rows(), {}};
  for (std::size_t p : e.pivots) b.vectors.push_back(m.column(p));
  return b;
}

SubspaceBasis image_basis(const SparseMat& m) {
  const Echelon e = row_reduce(m, false);
  SubspaceBasis b{m.rows(), {}};
  std::vector<long> slot(m.cols(), -1);
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    slot[e.pivots[k]] = static_cast<long>(k);
    b.vectors.emplace_back(m.rows());
  }
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& entry : m.row(i))
      if (slot[entry.col] >= 0) b.vectors[static_cast<std::size_t>(slot[entry.col])][i] = entry.value;
  return b;
}

SubspaceBasis span_of(std::size_t ambient, const std::vector<Vec>& vectors) {
  return image_basis(Mat::from_columns(ambient, vectors));
}

SubspaceBasis common_kernel(const std::vector<Mat>& maps, std::size_t source_dim) {
  std::vector<SparseRow> rows;
  for (const auto& m : maps) {
    if (m.cols() != source_dim) throw DimensionError("common_kernel: source dimension mismatch");
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(dense_row(m, i));
  }
  return kernel_from_echelon(eliminate(std::move(rows), source_dim, true));
}

std::optional<Mat> coordinates(const SubspaceBasis& basis, const Mat& vectors) {
  const std::size_t r = basis.dim();
  const std::size_t s = vectors.cols();
  if (vectors.rows() != basis.ambient_dim) throw DimensionError("coordinates: ambient mismatch");
  Mat aug(basis.ambient_dim, r + s);
  for (std::size_t i = 0; i < basis.ambient_dim; ++i) {
    for (std::size_t j = 0; j < r; ++j) aug(i, j) = basis.vectors[j][i];
    for (std::size_t j = 0; j < s; ++j) aug(i, r + j) = vectors(i, j);
  }
  const Echelon e = row_reduce(aug, true);
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] >= r) return std::nullopt;
    if (e.pivots[k] != k) throw DimensionError("coordinates: basis vectors are dependent");
  }
  if (e.pivots.size() != r) throw DimensionError("coordinates: basis vectors are dependent");
  Mat x(r, s);
  for (std::size_t k = 0; k < r; ++k)
    for (const auto& entry : e.rows[k])
      if (entry.col >= r) x(k, entry.col - r) = entry.value;
  return x;
}

bool contains(const SubspaceBasis& outer, const SubspaceBasis& inner) {
  if (inner.dim() == 0) return true;
  return coordinates(outer, inner.matrix()).has_value();
}

Mat restrict_and_project(const Mat& f, const SubspaceBasis& sub, const SubspaceBasis& quot_of) {
  const std::size_t n = sub.ambient_dim;
  if (f.rows() != n || f.cols() != n || quot_of.ambient_dim != n) {
    throw DimensionError("restrict_and_project: shape mismatch");
  }
  const std::size_t s = sub.dim();
  const std::size_t k = quot_of.dim();

  auto quot_coords = coordinates(sub, quot_of.matrix());
  if (!quot_coords) throw StabilityError("restrict_and_project: quotient subspace is not inside sub");

  // Extend the quotient coordinates by unit vectors (pivot columns of [C | I]).
  Mat ext(s, k + s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < k; ++j) ext(i, j) = (*quot_coords)(i, j);
    ext(i, k + i) = 1;
  }
  const Echelon e = row_reduce(ext, false);
  std::vector<std::size_t> complement;
  for (std::size_t p : e.pivots) {
    if (p >= k) complement.push_back(p - k);
  }
  if (e.pivots.size() != s || complement.size() != s - k) {
    throw DimensionError("restrict_and_project: quotient basis is dependent");
  }

  SubspaceBasis adapted{s, {}};
  for (std::size_t j = 0; j < k; ++j) adapted.vectors.push_back(quot_coords->column(j));
  for (std::size_t c : complement) {
    Vec v(s);
    v[c] = 1;
    adapted.vectors.push_back(std::move(v));
  }

  auto image = coordinates(sub, f * sub.matrix());
  if (!image) throw StabilityError("restrict_and_project: map does not preserve the subspace");
  auto in_adapted = coordinates(adapted, *image * adapted.matrix());
  const Mat& z = *in_adapted;  // adapted is a basis of the full coordinate space

  for (std::size_t i = k; i < s; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (sgn(z(i, j)) != 0) throw StabilityError("restrict_and_project: map does not preserve the quotient subspace");

  Mat out(s - k, s - k);
  for (std::size_t i = 0; i < s - k; ++i)
    for (std::size_t j = 0; j < s - k; ++j) out(i, j) = z(k + i, k + j);
  return out;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (sgn(b(k, l)) != 0) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

Mat vstack(const std::vector<Mat>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw DimensionError("vstack: column mismatch");
    rows += b.rows();
  }
  Mat out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) out(r0 + i, j) = b(i, j);
    r0 += b.rows();
  }
  return out;
}

Mat hstack(const std::vector<Mat>& blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw DimensionError("hstack: row mismatch");
    cols += b.cols();
  }
  Mat out(rows, cols);
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, c0 + j) = b(i, j);
    c0 += b.cols();
  }
  return out;
}

}  // namespace leibcoh
