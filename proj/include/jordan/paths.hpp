#pragma once

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jordan/cone.hpp"
#include "jordan/norms.hpp"

namespace jordan {

// Discretized curve in the cone: a stored grid plus the closure that
// generated it. Derivatives come from an analytic closure when one exists,
// otherwise from central differences with step fd_step.
template <typename Scalar>
struct SampledPathT {
  VecX<Scalar> times;
  std::vector<ElementT<Scalar>> points;
  std::function<ElementT<Scalar>(Scalar)> point_at;
  std::function<ElementT<Scalar>(Scalar)> velocity_at;  // may be empty
  Scalar fd_step = Scalar(1e-5);
  bool cone_path = true;
};

using SampledPath = SampledPathT<double>;

template <typename Scalar>
SampledPathT<Scalar> make_sampled_path(std::function<ElementT<Scalar>(Scalar)> point_at,
                                       int grid_intervals = 64,
                                       std::function<ElementT<Scalar>(Scalar)> velocity_at = {},
                                       bool cone_path = true) {
  SampledPathT<Scalar> path;
  path.point_at = std::move(point_at);
  path.velocity_at = std::move(velocity_at);
  path.cone_path = cone_path;
  path.times.resize(grid_intervals + 1);
  for (int i = 0; i <= grid_intervals; ++i) {
    const Scalar t = Scalar(i) / Scalar(grid_intervals);
    path.times[i] = t;
    ElementT<Scalar> pt = path.point_at(t);
    if (cone_path && !in_cone(pt))
      throw std::domain_error("sampled path leaves the cone at t = " +
                              std::to_string(double(t)));
    path.points.push_back(std::move(pt));
  }
  return path;
}

template <typename Scalar>
ElementT<Scalar> path_velocity(const SampledPathT<Scalar>& path, Scalar t) {
  if (path.velocity_at) return path.velocity_at(t);
  const Scalar h = path.fd_step;
  return (Scalar(1) / (Scalar(2) * h)) * (path.point_at(t + h) - path.point_at(t - h));
}

// which norm the length functional integrates
struct PathNorm {
  bool order = true;
  GaugeFunction phi;
  static PathNorm order_norm() { return {true, {}}; }
  static PathNorm gauge(const GaugeFunction& phi) { return {false, phi}; }
  std::string name() const { return order ? "order" : phi.name(); }
};

// Lengths of one cone path under several norms at once; the Finsler speed
// ||U_{gamma^{-1/2}} gamma'|| shares one spectral decomposition per node.
template <typename Scalar>
std::vector<Scalar> path_lengths(const SampledPathT<Scalar>& path,
                                 const std::vector<PathNorm>& norms,
                                 int simpson_intervals = 2048) {
  std::vector<Scalar> acc(norms.size(), Scalar(0));
  auto speeds_at = [&](Scalar t) -> std::vector<Scalar> {
    ElementT<Scalar> gamma = path.point_at(t);
    SpectrumT<Scalar> s = spectral_decompose(gamma);
    Scalar eps = positivity_eps(s.eigenvalues);
    if (s.eigenvalues.minCoeff() <= eps)
      throw std::domain_error("path_lengths: sample point left the cone");
    ElementT<Scalar> inv_sqrt = zero(gamma.algebra);
    for (size_t i = 0; i < s.idempotents.size(); ++i)
      inv_sqrt.coords +=
          s.idempotents[i].coords / std::sqrt(s.eigenvalues[static_cast<int>(i)]);
    ElementT<Scalar> u = apply_U(inv_sqrt, path_velocity(path, t));
    VecX<Scalar> lam = eigenvalues_of(u);
    VecX<Scalar> sv = lam;
    std::sort(sv.data(), sv.data() + sv.size(), [](Scalar a, Scalar b) {
      Scalar ma = std::abs(a), mb = std::abs(b);
      if (ma != mb) return ma > mb;
      return a > b;
    });
    sv = sv.cwiseAbs().eval();
    std::vector<Scalar> out(norms.size());
    for (size_t k = 0; k < norms.size(); ++k)
      out[k] = norms[k].order ? lam.cwiseAbs().maxCoeff() : gauge_apply(norms[k].phi, sv);
    return out;
  };

  const int n = simpson_intervals;
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("path_lengths: interval count must be even");
  const Scalar h = Scalar(1) / Scalar(n);
  for (int i = 0; i <= n; ++i) {
    const Scalar w = (i == 0 || i == n) ? Scalar(1) : (i % 2 ? Scalar(4) : Scalar(2));
    std::vector<Scalar> sp = speeds_at(Scalar(i) * h);
    for (size_t k = 0; k < norms.size(); ++k) acc[k] += w * sp[k];
  }
  for (auto& v : acc) v *= h / Scalar(3);
  return acc;
}

template <typename Scalar>
Scalar path_length(const SampledPathT<Scalar>& path, const PathNorm& norm,
                   int simpson_intervals = 2048) {
  return path_lengths(path, {norm}, simpson_intervals)[0];
}

// geodesic between two cone points as a path with its analytic velocity
template <typename Scalar>
SampledPathT<Scalar> geodesic_path(const ConePointT<Scalar>& x,
                                   const ConePointT<Scalar>& y,
                                   int grid_intervals = 64) {
  ElementT<Scalar> z = relative_log(x, y);
  ElementT<Scalar> sq = x.sqrt_p;
  auto point = [sq, z](Scalar t) {
    return apply_U(sq, exp_element(t * z));
  };
  auto velocity = [sq, z](Scalar t) {
    return apply_U(sq, jordan_product(z, exp_element(t * z)));
  };
  return make_sampled_path<Scalar>(point, grid_intervals, velocity);
}

// endpoint-preserving competitor: exponential-coordinate straight line plus
// sine modes, mapped into the cone through U_{x^{1/2}} exp(.)
template <typename Scalar>
SampledPathT<Scalar> perturbed_log_path(const ConePointT<Scalar>& x,
                                        const ElementT<Scalar>& v_log,
                                        const std::vector<ElementT<Scalar>>& modes,
                                        const VecX<Scalar>& amplitudes,
                                        int grid_intervals = 64) {
  if (static_cast<int>(modes.size()) != amplitudes.size())
    throw std::invalid_argument("perturbed_log_path: modes/amplitudes mismatch");
  ElementT<Scalar> sq = x.sqrt_p;
  auto log_point = [v_log, modes, amplitudes](Scalar t) {
    ElementT<Scalar> g = t * v_log;
    for (size_t j = 0; j < modes.size(); ++j)
      g = g + (amplitudes[static_cast<int>(j)] *
               std::sin(Scalar(M_PI) * Scalar(j + 1) * t)) *
                  modes[j];
    return g;
  };
  auto point = [sq, log_point](Scalar t) { return apply_U(sq, exp_element(log_point(t))); };
  return make_sampled_path<Scalar>(point, grid_intervals);
}

}  // namespace jordan
