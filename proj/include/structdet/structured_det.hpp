#ifndef STRUCTDET_STRUCTURED_DET_HPP
#define STRUCTDET_STRUCTURED_DET_HPP

#include <structdet/bareiss.hpp>
#include <structdet/bigint.hpp>
#include <structdet/matrix.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace structdet {

// The shifts (a_1, ..., a_n) of the matrix J + diag(a). Never empty.
class DiagonalShifts {
 public:
  explicit DiagonalShifts(std::vector<BigInt> values) : values_(std::move(values)) {
    if (values_.empty()) throw DomainError("diagonal shifts must have at least one entry");
  }
  DiagonalShifts(std::initializer_list<BigInt> values) : DiagonalShifts(std::vector<BigInt>(values)) {}

  std::size_t size() const { return values_.size(); }
  const BigInt& operator[](std::size_t k) const { return values_[k]; }
  std::span<const BigInt> values() const { return values_; }

  bool has_zero() const {
    return std::any_of(values_.begin(), values_.end(), [](const BigInt& v) { return v == 0; });
  }

 private:
  std::vector<BigInt> values_;
};

// All-ones matrix with 1 + a_k on the diagonal.
class StructuredMatrix {
 public:
  explicit StructuredMatrix(const DiagonalShifts& shifts) : entries_(shifts.size(), shifts.size(), BigInt(1)) {
    for (std::size_t k = 0; k < shifts.size(); ++k) entries_(k, k) = shifts[k] + 1;
  }

  std::size_t size() const { return entries_.rows(); }
  const IntMatrix& entries() const { return entries_; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

 private:
  IntMatrix entries_;
};

inline StructuredMatrix materialize_matrix(const DiagonalShifts& shifts) { return StructuredMatrix(shifts); }

inline void render(std::ostream& out, const StructuredMatrix& m) { render(out, m.entries()); }

/// (1 + sum 1/a_k) * prod a_k in exact rationals. Requires every a_k != 0.
inline BigInt det_closed_form(const DiagonalShifts& shifts) {
  if (shifts.has_zero()) throw DomainError("closed form requires nonzero shifts; use det_expanded");
  Rational reciprocal_sum(1);
  BigInt product(1);
  for (const BigInt& a : shifts.values()) {
    Rational inv(BigInt(1), a);
    inv.canonicalize();
    reciprocal_sum += inv;
    product *= a;
  }
  Rational det = reciprocal_sum * product;
  if (det.get_den() != 1) throw std::logic_error("closed form produced a non-integer determinant");
  return det.get_num();
}

namespace detail {

// (prod a_k, sum_k prod_{j != k} a_j) over shifts[lo, hi).
struct LeaveOneOut {
  BigInt product;
  BigInt sum;
};

inline LeaveOneOut leave_one_out_tree(std::span<const BigInt> a) {
  if (a.size() == 1) return {a[0], BigInt(1)};
  const std::size_t mid = a.size() / 2;
  LeaveOneOut left = leave_one_out_tree(a.first(mid));
  LeaveOneOut right = leave_one_out_tree(a.subspan(mid));
  LeaveOneOut out;
  out.sum = left.sum * right.product;
  mpz_addmul(out.sum.get_mpz_t(), left.product.get_mpz_t(), right.sum.get_mpz_t());
  out.product = left.product * right.product;
  return out;
}

}  // namespace detail

/*
 * prod a_k + sum_k prod_{j != k} a_j, the division-free form of the closed
 * formula. It is a polynomial identity in the shifts, so it holds for zero
 * entries too.
 *
 * Evaluated on a balanced binary tree: halves (P1, S1) and (P2, S2) combine
 * to (P1 P2, S1 P2 + P1 S2). That is 3(n-1) multiplications, and operands at
 * each level have similar sizes, so subquadratic big-integer multiplication
 * applies.
 */
inline BigInt det_expanded(const DiagonalShifts& shifts) {
  auto [product, sum] = detail::leave_one_out_tree(shifts.values());
  return product + sum;
}

/*
 * Same value as det_expanded via explicit leave-one-out products: a suffix
 * array R[k] = prod_{j>k} a_j and a running prefix L, summing L * R[k].
 * 3n multiplications, but n of them are full-size by full-size.
 */
inline BigInt det_expanded_prefix_suffix(const DiagonalShifts& shifts) {
  const std::size_t n = shifts.size();
  std::vector<BigInt> suffix(n + 1);
  suffix[n] = 1;
  for (std::size_t k = n; k-- > 0;) suffix[k] = suffix[k + 1] * shifts[k];

  BigInt prefix(1);
  BigInt leave_one_out_sum(0);
  for (std::size_t k = 0; k < n; ++k) {
    mpz_addmul(leave_one_out_sum.get_mpz_t(), prefix.get_mpz_t(), suffix[k + 1].get_mpz_t());
    prefix *= shifts[k];
  }
  return prefix + leave_one_out_sum;
}

// State recorded while replaying the two-step elimination.
struct EliminationTrace {
  // First column after r_i -= r_1 (i >= 2): 1 + a_1 followed by -a_1.
  std::vector<Rational> first_column_after_rows;
  // Diagonal after r_i -= r_1: 1 + a_1, a_2, ..., a_n.
  std::vector<Rational> diagonal_after_rows;
  // First column after c_1 += (a_1 / a_i) c_i: b followed by zeros.
  std::vector<Rational> first_column_after_columns;
  // (1,1) entry of the final upper triangular matrix.
  Rational pivot_b;
  // pivot_b * a_2 * ... * a_n.
  Rational final_value;
};

struct EliminationResult {
  BigInt value;
  EliminationTrace trace;
};

/*
 * Replays the textbook reduction on a dense rational copy of the matrix:
 *
 *   1. r_i <- r_i - r_1 for i = 2..n, leaving -a_1 in the first column and
 *      a_i on the diagonal;
 *   2. c_1 <- c_1 + (a_1 / a_i) c_i for i = 2..n, which clears the first
 *      column below the diagonal.
 *
 * The result is upper triangular with diagonal (b, a_2, ..., a_n). Every
 * intermediate is a reduced fraction. Requires every a_k != 0.
 */
inline EliminationResult det_elimination(const DiagonalShifts& shifts) {
  if (shifts.has_zero()) throw DomainError("elimination step divides by a_i");
  const std::size_t n = shifts.size();

  RationalMatrix m(n, n, Rational(1));
  for (std::size_t k = 0; k < n; ++k) m(k, k) = Rational(shifts[k] + 1);

  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) -= m(0, j);

  EliminationTrace trace;
  trace.first_column_after_rows.reserve(n);
  trace.diagonal_after_rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    trace.first_column_after_rows.push_back(m(i, 0));
    trace.diagonal_after_rows.push_back(m(i, i));
  }

  for (std::size_t i = 1; i < n; ++i) {
    Rational factor(shifts[0], shifts[i]);
    factor.canonicalize();
    for (std::size_t r = 0; r < n; ++r) {
      if (m(r, i) != 0) m(r, 0) += factor * m(r, i);
    }
  }

  trace.first_column_after_columns.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && m(i, 0) != 0) throw std::logic_error("column step left a nonzero below the pivot");
    trace.first_column_after_columns.push_back(m(i, 0));
  }

  trace.pivot_b = m(0, 0);
  Rational value = trace.pivot_b;
  for (std::size_t i = 1; i < n; ++i) value *= m(i, i);
  trace.final_value = value;
  if (value.get_den() != 1) throw std::logic_error("elimination produced a non-integer determinant");
  return {value.get_num(), std::move(trace)};
}

// Generic oracle on the materialized matrix.
inline BigInt det_bareiss(const StructuredMatrix& m) { return det_bareiss(m.entries()); }

}  // namespace structdet

#endif  // STRUCTDET_STRUCTURED_DET_HPP
