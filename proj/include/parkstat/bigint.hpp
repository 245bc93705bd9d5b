#ifndef PARKSTAT_BIGINT_HPP
#define PARKSTAT_BIGINT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace parkstat {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

/// Binomial coefficient with the subset-counting convention used throughout:
/// binom(m, 0) = 1 for every integer m, binom(m, j) = 0 for j < 0, and
/// binom(m, j) = 0 for j > 0 whenever m < j (negative m included).
inline BigInt binom(std::int64_t m, std::int64_t j) {
  if (j < 0) return 0;
  if (j == 0) return 1;
  if (m < j) return 0;
  if (j > m - j) j = m - j;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= j; ++i) {
    result *= m - j + i;
    result /= i;
  }
  return result;
}

inline BigInt ipow(std::int64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

inline BigInt factorial(std::int64_t n) {
  BigInt result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

using BigMatrix = std::vector<std::vector<BigInt>>;

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// The empty matrix has determinant 1.
inline BigInt determinant(BigMatrix m) {
  const std::size_t size = m.size();
  if (size == 0) return 1;
  int sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == size) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      }
      m[i][k] = 0;
    }
    previous = m[k][k];
  }
  return sign * m[size - 1][size - 1];
}

}  // namespace parkstat

#endif  // PARKSTAT_BIGINT_HPP
