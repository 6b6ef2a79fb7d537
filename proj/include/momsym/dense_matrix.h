#ifndef MOMSYM_DENSE_MATRIX_H_
#define MOMSYM_DENSE_MATRIX_H_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace momsym {

using Complex = std::complex<double>;

// Complex dense matrix, row-major. The common currency of every builder and
// eigensolver in the library.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, Complex fill);
  // Row-wise literal, e.g. {{2, -1}, {-1, 2}}. All rows must have equal length.
  DenseMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static DenseMatrix Identity(std::size_t n);
  static DenseMatrix Zeros(std::size_t rows, std::size_t cols) { return DenseMatrix(rows, cols); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Complex> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  DenseMatrix& operator+=(const DenseMatrix& other);
  DenseMatrix& operator-=(const DenseMatrix& other);
  DenseMatrix& operator*=(Complex scalar);

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator*(Complex scalar, DenseMatrix a);
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix adjoint(const DenseMatrix& a);
DenseMatrix transpose(const DenseMatrix& a);
DenseMatrix diagonal_matrix(std::span<const Complex> diag);
DenseMatrix diagonal_matrix(std::span<const double> diag);

Complex trace(const DenseMatrix& a);
double max_abs(const DenseMatrix& a);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
double frobenius_norm(const DenseMatrix& a);
// Largest modulus among entries (i, j) with i != j.
double max_abs_offdiag(const DenseMatrix& a);

bool is_hermitian(const DenseMatrix& a, double tol);
bool is_real(const DenseMatrix& a);
bool all_finite(const DenseMatrix& a);

}  // namespace momsym

#endif  // MOMSYM_DENSE_MATRIX_H_
