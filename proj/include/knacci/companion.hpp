#pragma once

// Companion matrices for constant-coefficient recurrences
//
//   a(n) = c1*a(n-1) + c2*a(n-2) + ... + ck*a(n-k)
//
// advance the state vector one step:
//
//   [a(n)    ]   [c1 c2 ... ck-1 ck] [a(n-1)]
//   [a(n-1)  ] = [1  0  ... 0    0 ] [a(n-2)]
//   [  ...   ]   [      ...        ] [ ...  ]
//   [a(n-k+1)]   [0  0  ... 1    0 ] [a(n-k)]

#include <Eigen/Core>

#include <cstdint>
#include <span>

namespace knacci {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
MatrixX<Scalar> companion_matrix(std::span<const Scalar> coeffs) {
  const auto k = static_cast<Eigen::Index>(coeffs.size());
  MatrixX<Scalar> m = MatrixX<Scalar>::Zero(k, k);
  for (Eigen::Index j = 0; j < k; ++j) m(0, j) = coeffs[static_cast<std::size_t>(j)];
  for (Eigen::Index i = 1; i < k; ++i) m(i, i - 1) = Scalar(1);
  return m;
}

// Exponentiation by squaring; O(k^3 log e) scalar multiplications.
template <typename Derived>
typename Derived::PlainObject matrix_power(const Eigen::MatrixBase<Derived>& base, std::uint64_t e) {
  using Plain = typename Derived::PlainObject;
  Plain result = Plain::Identity(base.rows(), base.cols());
  Plain square = base;
  while (e > 0) {
    if (e & 1u) result = (result * square).eval();
    e >>= 1u;
    if (e > 0) square = (square * square).eval();
  }
  return result;
}

}  // namespace knacci
