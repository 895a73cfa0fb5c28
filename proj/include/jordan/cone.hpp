#pragma once

#include <cmath>
#include <stdexcept>

#include "jordan/expm.hpp"
#include "jordan/quadrature.hpp"

namespace jordan {

// Point of the positive cone with its spectral data and the derived elements
// every cone operation keeps reaching for.
template <typename Scalar>
struct ConePointT {
  ElementT<Scalar> p;
  SpectrumT<Scalar> spec;
  ElementT<Scalar> sqrt_p, inv_sqrt_p, inv_p, log_p;
};

using ConePoint = ConePointT<double>;

template <typename Scalar>
struct TangentT {
  ConePointT<Scalar> base;
  ElementT<Scalar> vec;
};

using Tangent = TangentT<double>;

template <typename Scalar>
ConePointT<Scalar> make_cone_point(const ElementT<Scalar>& x) {
  ConePointT<Scalar> cp;
  cp.p = x;
  cp.spec = spectral_decompose(x);
  Scalar eps = positivity_eps(cp.spec.eigenvalues);
  if (cp.spec.eigenvalues.minCoeff() <= eps)
    throw std::domain_error("make_cone_point: element is not in the open cone");
  cp.sqrt_p = zero(x.algebra);
  cp.inv_sqrt_p = zero(x.algebra);
  cp.inv_p = zero(x.algebra);
  cp.log_p = zero(x.algebra);
  for (size_t i = 0; i < cp.spec.idempotents.size(); ++i) {
    const Scalar lam = cp.spec.eigenvalues[static_cast<int>(i)];
    const VecX<Scalar>& c = cp.spec.idempotents[i].coords;
    cp.sqrt_p.coords += std::sqrt(lam) * c;
    cp.inv_sqrt_p.coords += c / std::sqrt(lam);
    cp.inv_p.coords += c / lam;
    cp.log_p.coords += std::log(lam) * c;
  }
  return cp;
}

// symmetric-space product mu(x,y) = U_x(y^{-1})
template <typename Scalar>
ElementT<Scalar> mu(const ConePointT<Scalar>& x, const ConePointT<Scalar>& y) {
  return apply_U(x.p, y.inv_p);
}

// tangent product mu_*(V,W) = 2 U_{x,v}(y^{-1}) - U_x U_{y^{-1}} w
template <typename Scalar>
ElementT<Scalar> mu_star(const TangentT<Scalar>& V, const TangentT<Scalar>& W) {
  const ConePointT<Scalar>& x = V.base;
  const ConePointT<Scalar>& y = W.base;
  return Scalar(2) * apply_U_bilinear(x.p, V.vec, y.inv_p) -
         apply_U(x.p, apply_U(y.inv_p, W.vec));
}

// spray F_x(v) = U_v(x^{-1})
template <typename Scalar>
ElementT<Scalar> spray(const ConePointT<Scalar>& x, const ElementT<Scalar>& v) {
  return apply_U(v, x.inv_p);
}

// Christoffel operator of the spray, Gamma_x(v,w) = U_{v,w}(x^{-1})
template <typename Scalar>
ElementT<Scalar> christoffel(const ConePointT<Scalar>& x, const ElementT<Scalar>& v,
                             const ElementT<Scalar>& w) {
  return apply_U_bilinear(v, w, x.inv_p);
}

// geodesic through p with initial speed v: U_{p^{1/2}} exp(t U_{p^{1/2}}^{-1} v)
template <typename Scalar>
ConePointT<Scalar> geodesic(const ConePointT<Scalar>& p, const ElementT<Scalar>& v,
                            Scalar t) {
  ElementT<Scalar> u = apply_U(p.inv_sqrt_p, v);
  return make_cone_point(apply_U(p.sqrt_p, exp_element(t * u)));
}

template <typename Scalar>
ElementT<Scalar> geodesic_velocity(const ConePointT<Scalar>& p, const ElementT<Scalar>& v,
                                   Scalar t) {
  ElementT<Scalar> u = apply_U(p.inv_sqrt_p, v);
  return apply_U(p.sqrt_p, jordan_product(u, exp_element(t * u)));
}

// log of the quotient U_{x^{-1/2}} y; the geodesic between x and y moves
// through exp of its multiples
template <typename Scalar>
ElementT<Scalar> relative_log(const ConePointT<Scalar>& x, const ConePointT<Scalar>& y) {
  return log_element(apply_U(x.inv_sqrt_p, y.p));
}

template <typename Scalar>
ConePointT<Scalar> geodesic_between(const ConePointT<Scalar>& x,
                                    const ConePointT<Scalar>& y, Scalar t) {
  ElementT<Scalar> z = relative_log(x, y);
  return make_cone_point(apply_U(x.sqrt_p, exp_element(t * z)));
}

// exp_x^{-1}(y) = U_{x^{1/2}} log(U_{x^{-1/2}} y)
template <typename Scalar>
ElementT<Scalar> log_map(const ConePointT<Scalar>& x, const ConePointT<Scalar>& y) {
  return apply_U(x.sqrt_p, relative_log(x, y));
}

// parallel transport operator along the geodesic from x to y at time t:
// U_{x^{1/2}} U_{exp(t/2 log(U_{x^{-1/2}} y))} U_{x^{-1/2}}
template <typename Scalar>
MatX<Scalar> transport_operator(const ConePointT<Scalar>& x, const ConePointT<Scalar>& y,
                                Scalar t) {
  ElementT<Scalar> z = relative_log(x, y);
  ElementT<Scalar> mid = exp_element((Scalar(0.5) * t) * z);
  return U_operator(x.sqrt_p) * U_operator(mid) * U_operator(x.inv_sqrt_p);
}

template <typename Scalar>
ElementT<Scalar> parallel_transport(const ConePointT<Scalar>& x,
                                    const ConePointT<Scalar>& y, Scalar t,
                                    const ElementT<Scalar>& w) {
  ElementT<Scalar> z = relative_log(x, y);
  ElementT<Scalar> mid = exp_element((Scalar(0.5) * t) * z);
  return apply_U(x.sqrt_p, apply_U(mid, apply_U(x.inv_sqrt_p, w)));
}

// independent route: integrate eta' = U_{gamma',eta}(gamma^{-1}) by RK4 with
// fixed steps along the geodesic from x to y
template <typename Scalar>
ElementT<Scalar> parallel_transport_ode(const ConePointT<Scalar>& x,
                                        const ConePointT<Scalar>& y, Scalar t,
                                        const ElementT<Scalar>& w, int steps = 1000) {
  ElementT<Scalar> z = relative_log(x, y);
  auto rhs = [&](Scalar s, const VecX<Scalar>& eta) -> VecX<Scalar> {
    ElementT<Scalar> ez = exp_element(s * z);
    ElementT<Scalar> gamma = apply_U(x.sqrt_p, ez);
    ElementT<Scalar> dgamma = apply_U(x.sqrt_p, jordan_product(z, ez));
    ElementT<Scalar> ginv = inverse(gamma);
    return apply_U_bilinear(dgamma, ElementT<Scalar>{w.algebra, eta}, ginv).coords;
  };
  VecX<Scalar> eta = w.coords;
  const Scalar h = t / Scalar(steps);
  for (int i = 0; i < steps; ++i) {
    const Scalar s = h * Scalar(i);
    VecX<Scalar> k1 = rhs(s, eta);
    VecX<Scalar> k2 = rhs(s + h / Scalar(2), eta + h / Scalar(2) * k1);
    VecX<Scalar> k3 = rhs(s + h / Scalar(2), eta + h / Scalar(2) * k2);
    VecX<Scalar> k4 = rhs(s + h, eta + h * k3);
    eta += h / Scalar(6) * (k1 + Scalar(2) * k2 + Scalar(2) * k3 + k4);
  }
  return {w.algebra, std::move(eta)};
}

// R_p(V,W)Z = -U_{p^{1/2}} [L_v, L_w] z with v = U_{p^{-1/2}} V etc.
template <typename Scalar>
ElementT<Scalar> curvature(const ConePointT<Scalar>& p, const ElementT<Scalar>& V,
                           const ElementT<Scalar>& W, const ElementT<Scalar>& Z) {
  ElementT<Scalar> v = apply_U(p.inv_sqrt_p, V);
  ElementT<Scalar> w = apply_U(p.inv_sqrt_p, W);
  ElementT<Scalar> z = apply_U(p.inv_sqrt_p, Z);
  ElementT<Scalar> br = jordan_product(v, jordan_product(w, z)) -
                        jordan_product(w, jordan_product(v, z));
  return apply_U(p.sqrt_p, Scalar(-1) * br);
}

// Same tensor from nested Christoffel operators. The antisymmetrization runs
// W-first: the V-first order flips the global sign and contradicts both the
// bracket form above and R = -[[.,.],.] of the Cartan quotient.
template <typename Scalar>
ElementT<Scalar> curvature_nested(const ConePointT<Scalar>& p, const ElementT<Scalar>& V,
                                  const ElementT<Scalar>& W, const ElementT<Scalar>& Z) {
  return christoffel(p, W, christoffel(p, V, Z)) -
         christoffel(p, V, christoffel(p, W, Z));
}

// flow of the Killing field X(p) = p o x
template <typename Scalar>
ConePointT<Scalar> killing_flow(const ElementT<Scalar>& x, const ConePointT<Scalar>& p,
                                Scalar t) {
  MatX<Scalar> flow = op_exp((t * L_operator(x)).eval());
  return make_cone_point(apply_op(flow, p.p));
}

// Thompson part metric: || log(U_{p^{-1/2}} q) ||
template <typename Scalar>
Scalar thompson_distance(const ConePointT<Scalar>& p, const ConePointT<Scalar>& q) {
  return jb_norm(log_element(apply_U(p.inv_sqrt_p, q.p)));
}

// U_{gamma^{-1/2}} gamma' for gamma = exp(Gamma), via the quadrature form of
// {G(ad L_Gamma) L_Gamma'}(1), G = sinh/id
template <typename Scalar>
ElementT<Scalar> lie_velocity(const ElementT<Scalar>& gamma_log,
                              const ElementT<Scalar>& gamma_log_dot) {
  return sinh_ad_apply(gamma_log, gamma_log_dot);
}

// finite-difference route through the functional calculus
template <typename Scalar>
ElementT<Scalar> lie_velocity_fd(const ElementT<Scalar>& gamma_log,
                                 const ElementT<Scalar>& gamma_log_dot,
                                 Scalar h = Scalar(1e-5)) {
  ElementT<Scalar> plus = exp_element(gamma_log + h * gamma_log_dot);
  ElementT<Scalar> minus = exp_element(gamma_log - h * gamma_log_dot);
  ElementT<Scalar> dgamma = (Scalar(1) / (Scalar(2) * h)) * (plus - minus);
  ElementT<Scalar> inv_sqrt = exp_element(Scalar(-0.5) * gamma_log);
  return apply_U(inv_sqrt, dgamma);
}

}  // namespace jordan
