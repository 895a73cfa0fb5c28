#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "jordan/rng.hpp"

namespace jordan {

// Estimator for the supremum norm of an operator over the order-norm unit
// ball. Every reported value is the norm of an explicit feasible point, so
// lower_bound is certified; estimate is the best value seen by projected
// steepest ascent with restarts.
template <typename Scalar>
struct OpNormOptions {
  int restarts = 64;
  int max_iter = 200;
  Scalar step_tol = Scalar(1e-10);
  std::uint64_t seed = 0xC0FFEE5EEDULL;
  bool basis_starts = true;
  std::vector<VecX<Scalar>> warm_starts;
};

template <typename Scalar>
struct OpNormResult {
  Scalar estimate = 0;
  Scalar lower_bound = 0;
  VecX<Scalar> argmax;
};

using OpNormOpts = OpNormOptions<double>;

template <typename Scalar>
OpNormResult<Scalar> op_norm(const AlgebraPtr<Scalar>& alg, const MatX<Scalar>& h,
                             const OpNormOptions<Scalar>& opts = {}) {
  OpNormResult<Scalar> best;
  best.argmax = alg->unit_coords;
  if (h.norm() == Scalar(0)) return best;

  auto normalize = [&](VecX<Scalar> v) -> VecX<Scalar> {
    Scalar n = jb_norm(ElementT<Scalar>{alg, v});
    if (n < Scalar(1e-14)) return alg->unit_coords;
    return v / n;
  };
  // homogeneous ratio: the certified value at v / ||v||
  auto value = [&](const VecX<Scalar>& v) -> Scalar {
    Scalar n = jb_norm(ElementT<Scalar>{alg, v});
    if (n < Scalar(1e-14)) return Scalar(0);
    return jb_norm(ElementT<Scalar>{alg, (h * v).eval()}) / n;
  };
  auto record = [&](const VecX<Scalar>& v, Scalar f) {
    if (f > best.lower_bound) {
      best.lower_bound = f;
      best.argmax = normalize(v);
    }
  };

  // subgradient of v -> ||Hv|| at the dominant eigenvalue of Hv
  auto ascent_direction = [&](const VecX<Scalar>& v) -> VecX<Scalar> {
    SpectrumT<Scalar> s = spectral_decompose(ElementT<Scalar>{alg, (h * v).eval()});
    const int last = static_cast<int>(s.idempotents.size()) - 1;
    int j = std::abs(s.eigenvalues[0]) >= std::abs(s.eigenvalues[last]) ? 0 : last;
    const VecX<Scalar>& c = s.idempotents[static_cast<size_t>(j)].coords;
    Scalar sign = s.eigenvalues[j] >= Scalar(0) ? Scalar(1) : Scalar(-1);
    return h.transpose() * (sign / c.squaredNorm() * c);
  };

  auto ascend = [&](VecX<Scalar> v) {
    v = normalize(std::move(v));
    Scalar f = value(v);
    record(v, f);
    Scalar step = Scalar(1);
    for (int it = 0; it < opts.max_iter; ++it) {
      VecX<Scalar> g = ascent_direction(v);
      Scalar gn = g.norm();
      if (gn < Scalar(1e-15)) return;
      g /= gn;
      bool improved = false;
      while (step >= opts.step_tol) {
        VecX<Scalar> cand = normalize(v + step * g);
        Scalar fc = value(cand);
        if (fc > f * (Scalar(1) + Scalar(1e-15))) {
          v = std::move(cand);
          f = fc;
          record(v, f);
          improved = true;
          step *= Scalar(2);
          break;
        }
        step /= Scalar(2);
      }
      if (!improved) return;
    }
  };

  ascend(alg->unit_coords);
  if (opts.basis_starts) {
    for (int i = 0; i < alg->dim; ++i) {
      VecX<Scalar> e = VecX<Scalar>::Zero(alg->dim);
      e[i] = Scalar(1);
      ascend(std::move(e));
    }
  }
  for (const auto& w : opts.warm_starts) ascend(w);
  Rng rng(opts.seed);
  for (int r = 0; r < opts.restarts; ++r)
    ascend(random_element(alg, rng, Scalar(1)).coords);

  best.estimate = best.lower_bound;
  return best;
}

template <typename Scalar>
Scalar op_norm_estimate(const AlgebraPtr<Scalar>& alg, const MatX<Scalar>& h,
                        const OpNormOptions<Scalar>& opts = {}) {
  return op_norm(alg, h, opts).estimate;
}

}  // namespace jordan
