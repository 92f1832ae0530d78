#ifndef STRUCTDET_BAREISS_HPP
#define STRUCTDET_BAREISS_HPP

#include <structdet/bigint.hpp>
#include <structdet/matrix.hpp>

#include <cstddef>
#include <type_traits>

namespace structdet {

/*
 * Determinant by single-step fraction-free (Bareiss) elimination.
 *
 * After step k every entry of the trailing block is a (k+1)x(k+1) minor of
 * the input, so the division by the previous pivot is always exact and no
 * rational numbers appear. A zero pivot is replaced by swapping in a lower
 * row with a nonzero entry in the pivot column (flipping the sign); if the
 * whole column below the diagonal is zero the matrix is singular.
 *
 * Works for any integer matrix. O(n^3) ring operations; entry size grows
 * linearly with k.
 */
template <typename T>
T det_bareiss(DenseMatrix<T> m) {
  if (!m.is_square()) throw DomainError("determinant requires a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) throw DomainError("determinant requires n >= 1");

  bool negate = false;
  T prev(1);
  [[maybe_unused]] T tmp;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return T(0);
      m.swap_rows(k, r);
      negate = !negate;
    }
    const T& pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const T& lead = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        if constexpr (std::is_same_v<T, BigInt>) {
          mpz_mul(tmp.get_mpz_t(), m(i, j).get_mpz_t(), pivot.get_mpz_t());
          mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), m(k, j).get_mpz_t());
          mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
        } else {
          m(i, j) = (m(i, j) * pivot - lead * m(k, j)) / prev;
        }
      }
      m(i, k) = T(0);
    }
    prev = pivot;
  }
  T det = m(n - 1, n - 1);
  return negate ? T(-det) : det;
}

}  // namespace structdet

#endif  // STRUCTDET_BAREISS_HPP
