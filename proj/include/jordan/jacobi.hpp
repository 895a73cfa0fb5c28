#pragma once

#include <cmath>
#include <stdexcept>

#include "jordan/types.hpp"

namespace jordan {

struct JacobiOptions {
  double threshold = 1e-13;  // relative off-diagonal target
  int max_sweeps = 50;
};

// Cyclic Jacobi eigensolver for a symmetric matrix. Eigenvalues come back
// sorted decreasing, columns of `vectors` match that order. Throws when the
// off-diagonal mass has not dropped below threshold * ||A||_F after
// max_sweeps (ill-conditioned input).
template <typename Scalar>
void jacobi_eigen(MatX<Scalar> a, VecX<Scalar>& values, MatX<Scalar>* vectors,
                  const JacobiOptions& opts = {}) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("jacobi_eigen: matrix not square");
  if (vectors) *vectors = MatX<Scalar>::Identity(n, n);
  values.resize(n);
  if (n == 1) {
    values[0] = a(0, 0);
    return;
  }

  const Scalar scale = a.norm();
  const Scalar stop = opts.threshold * (scale > Scalar(0) ? scale : Scalar(1));

  auto off_norm = [&a, n]() {
    Scalar s = 0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
    return std::sqrt(Scalar(2) * s);
  };

  int sweep = 0;
  for (; sweep < opts.max_sweeps; ++sweep) {
    if (off_norm() <= stop) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (std::abs(apq) <= stop / Scalar(n)) continue;
        const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
        // tan of the smaller rotation angle
        Scalar t = Scalar(1) / (std::abs(theta) + std::sqrt(theta * theta + Scalar(1)));
        if (theta < Scalar(0)) t = -t;
        const Scalar c = Scalar(1) / std::sqrt(t * t + Scalar(1));
        const Scalar s = t * c;

        for (Eigen::Index i = 0; i < n; ++i) {
          const Scalar aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * aiq;
          a(i, q) = s * aip + c * aiq;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
          const Scalar api = a(p, i), aqi = a(q, i);
          a(p, i) = c * api - s * aqi;
          a(q, i) = s * api + c * aqi;
        }
        if (vectors) {
          for (Eigen::Index i = 0; i < n; ++i) {
            const Scalar vip = (*vectors)(i, p), viq = (*vectors)(i, q);
            (*vectors)(i, p) = c * vip - s * viq;
            (*vectors)(i, q) = s * vip + c * viq;
          }
        }
      }
    }
  }
  if (sweep == opts.max_sweeps && off_norm() > stop)
    throw std::runtime_error("jacobi_eigen: no convergence after max sweeps");

  values = a.diagonal();
  // selection sort, decreasing
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index best = i;
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (values[j] > values[best]) best = j;
    if (best != i) {
      std::swap(values[i], values[best]);
      if (vectors) vectors->col(i).swap(vectors->col(best));
    }
  }
}

}  // namespace jordan
