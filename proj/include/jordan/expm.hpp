#pragma once

#include <cmath>

#include "jordan/types.hpp"

namespace jordan {

// Operator exponential by scaling and squaring with a truncated series.
// Relative accuracy around 1e-12 for ||H|| up to 10.
template <typename Scalar>
MatX<Scalar> op_exp(const MatX<Scalar>& h) {
  const Eigen::Index n = h.rows();
  Scalar norm = h.template lpNorm<1>();
  int squarings = 0;
  if (norm > Scalar(0.5)) {
    squarings = static_cast<int>(std::ceil(std::log2(double(norm) / 0.5)));
    if (squarings < 0) squarings = 0;
  }
  MatX<Scalar> t = h / std::ldexp(Scalar(1), squarings);
  MatX<Scalar> term = MatX<Scalar>::Identity(n, n);
  MatX<Scalar> sum = term;
  for (int k = 1; k <= 24; ++k) {
    term = (term * t / Scalar(k)).eval();
    sum += term;
    if (term.norm() <= Scalar(1e-18) * sum.norm()) break;
  }
  for (int s = 0; s < squarings; ++s) sum = (sum * sum).eval();
  return sum;
}

}  // namespace jordan
