#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jordan/spectral.hpp"

namespace jordan {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [0, 1]
  std::vector<double> weights;  // sum to 1
};

// Gauss-Legendre rule on [0,1], generated by Newton iteration on P_n and
// cached per order.
inline const GaussLegendreRule& gauss_legendre(int n) {
  static std::map<int, GaussLegendreRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // map from [-1,1] to [0,1]
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
    double w = 1.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

// Composite Simpson on [0,1]; n must be even.
template <typename F>
double simpson(F&& f, int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("simpson: n must be even");
  const double h = 1.0 / n;
  double acc = f(0.0) + f(1.0);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return acc * h / 3.0;
}

// {G(ad L_x) L_y}(1) with G(t) = sinh(t)/t, evaluated as the quadrature
//   int_0^1 U_{e^{(s-1/2)x}} ( y o e^{(1-2s)x} ) ds,
// with Gauss-Legendre order doubling until the change falls below tol.
template <typename Scalar>
ElementT<Scalar> sinh_ad_apply(const ElementT<Scalar>& x, const ElementT<Scalar>& y,
                               Scalar tol = Scalar(1e-11)) {
  require_same_algebra(x, y);
  SpectrumT<Scalar> s = spectral_decompose(x);
  const int rank = static_cast<int>(s.idempotents.size());

  auto integrand = [&](double t) -> VecX<Scalar> {
    ElementT<Scalar> u = zero(x.algebra);
    ElementT<Scalar> e2 = zero(x.algebra);
    for (int i = 0; i < rank; ++i) {
      const Scalar lam = s.eigenvalues[i];
      u.coords += std::exp((Scalar(t) - Scalar(0.5)) * lam) * s.idempotents[i].coords;
      e2.coords += std::exp((Scalar(1) - Scalar(2) * Scalar(t)) * lam) *
                   s.idempotents[i].coords;
    }
    return apply_U(u, jordan_product(y, e2)).coords;
  };

  auto integrate = [&](int order) -> VecX<Scalar> {
    const GaussLegendreRule& rule = gauss_legendre(order);
    VecX<Scalar> acc = VecX<Scalar>::Zero(x.algebra->dim);
    for (int k = 0; k < order; ++k)
      acc += Scalar(rule.weights[k]) * integrand(rule.nodes[k]);
    return acc;
  };

  VecX<Scalar> prev = integrate(32);
  for (int order = 64; order <= 512; order *= 2) {
    VecX<Scalar> cur = integrate(order);
    if ((cur - prev).norm() <= tol * (Scalar(1) + cur.norm()))
      return {x.algebra, std::move(cur)};
    prev = std::move(cur);
  }
  return {x.algebra, std::move(prev)};
}

}  // namespace jordan
