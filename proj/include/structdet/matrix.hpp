#ifndef STRUCTDET_MATRIX_HPP
#define STRUCTDET_MATRIX_HPP

#include <structdet/bigint.hpp>

#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace structdet {

// Dense row-major matrix over an exact scalar type.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  // Row-major nested initializer; rows must all have the same length.
  DenseMatrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DomainError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  bool operator==(const DenseMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = DenseMatrix<BigInt>;
using RationalMatrix = DenseMatrix<Rational>;

// Debug rendering: one line per row, decimal entries separated by one space.
template <typename T>
void render(std::ostream& out, const DenseMatrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      if constexpr (std::is_arithmetic_v<T>) out << m(i, j);
      else out << to_string(m(i, j));
    }
    out << '\n';
  }
}

template <typename T>
std::string render(const DenseMatrix<T>& m) {
  std::ostringstream out;
  render(out, m);
  return out.str();
}

}  // namespace structdet

#endif  // STRUCTDET_MATRIX_HPP
