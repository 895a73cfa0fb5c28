#pragma once

#include <Eigen/LU>
#include <functional>
#include <stdexcept>
#include <vector>

#include "jordan/opnorm.hpp"
#include "jordan/paths.hpp"
#include "jordan/structure.hpp"

namespace jordan {

// Member of the cone-preserving group, with its cached inverse and a sampled
// cone-preservation residual.
template <typename Scalar>
struct GroupElementT {
  AlgebraPtr<Scalar> alg;
  MatX<Scalar> op;
  MatX<Scalar> inv;
  Scalar cone_residual = 0;
};

using GroupElement = GroupElementT<double>;

template <typename Scalar>
Scalar cone_preservation_residual(const AlgebraPtr<Scalar>& alg, const MatX<Scalar>& g,
                                  int samples = 8,
                                  std::uint64_t seed = detail::kResidualSeed) {
  Rng rng(seed);
  Scalar worst = 0;
  for (int t = 0; t < samples; ++t) {
    ElementT<Scalar> p = random_positive(alg, rng, Scalar(0.8));
    VecX<Scalar> lam = eigenvalues_of(apply_op(g, p));
    Scalar floor = -lam.minCoeff() / (Scalar(1) + lam.cwiseAbs().maxCoeff());
    worst = std::max(worst, std::max(Scalar(0), floor));
  }
  return worst;
}

template <typename Scalar>
GroupElementT<Scalar> make_group_element(const AlgebraPtr<Scalar>& alg,
                                         const MatX<Scalar>& g) {
  GroupElementT<Scalar> out;
  out.alg = alg;
  out.op = g;
  Eigen::PartialPivLU<MatX<Scalar>> lu(g);
  out.inv = lu.solve(MatX<Scalar>::Identity(g.rows(), g.cols()));
  Scalar residual = (g * out.inv - MatX<Scalar>::Identity(g.rows(), g.cols())).norm();
  if (!(residual <= Scalar(1e-8) * (Scalar(1) + g.norm())))
    throw std::domain_error("make_group_element: operator is not invertible");
  out.cone_residual = cone_preservation_residual(alg, g);
  return out;
}

template <typename Scalar>
GroupElementT<Scalar> group_identity(const AlgebraPtr<Scalar>& alg) {
  GroupElementT<Scalar> out;
  out.alg = alg;
  out.op = MatX<Scalar>::Identity(alg->dim, alg->dim);
  out.inv = out.op;
  out.cone_residual = 0;
  return out;
}

// Tangent at g in body coordinates: the tangent vector is g * body.
template <typename Scalar>
struct GroupTangentT {
  GroupElementT<Scalar> base;
  MatX<Scalar> body;
  StrDecompositionT<Scalar> split;
};

using GroupTangent = GroupTangentT<double>;

template <typename Scalar>
GroupTangentT<Scalar> make_group_tangent(const GroupElementT<Scalar>& g,
                                         const MatX<Scalar>& body,
                                         Scalar membership_tol = Scalar(1e-8)) {
  Scalar res = in_structure_algebra(g.alg, body);
  if (res > membership_tol)
    throw std::invalid_argument("make_group_tangent: body is not in str, residual " +
                                std::to_string(res));
  return {g, body, split_str(g.alg, body)};
}

// left-invariant spray in body coordinates: V^2 + V^dag V - V V^dag
template <typename Scalar>
MatX<Scalar> group_spray_body(const AlgebraPtr<Scalar>& alg, const MatX<Scalar>& v,
                              Scalar residual_tol = Scalar(1e-6)) {
  MatX<Scalar> vd = dagger(alg, v, residual_tol);
  return v * v + vd * v - v * vd;
}

// equivalent route through the splitting: (L_x + D)^2 - 2 L_{Dx}
template <typename Scalar>
MatX<Scalar> group_spray_body_split(const AlgebraPtr<Scalar>& alg, const MatX<Scalar>& v) {
  StrDecompositionT<Scalar> s = split_str(alg, v);
  ElementT<Scalar> dx = apply_op(s.der_part, s.l_part);
  return v * v - Scalar(2) * L_operator(dx);
}

template <typename Scalar>
MatX<Scalar> group_spray(const GroupElementT<Scalar>& g, const MatX<Scalar>& v,
                         Scalar residual_tol = Scalar(1e-6)) {
  return g.op * group_spray_body(g.alg, v, residual_tol);
}

// Christoffel of the spray by polarization, in body coordinates
template <typename Scalar>
MatX<Scalar> group_christoffel_body(const AlgebraPtr<Scalar>& alg, const MatX<Scalar>& v,
                                    const MatX<Scalar>& w,
                                    Scalar residual_tol = Scalar(1e-6)) {
  MatX<Scalar> svw = group_spray_body(alg, (v + w).eval(), residual_tol);
  return (svw - group_spray_body(alg, v, residual_tol) -
          group_spray_body(alg, w, residual_tol)) /
         Scalar(2);
}

// term-by-term formula: 1/2 (L_y L_x + L_x L_y + 3 L_x d + 3 L_y D
//                            - D L_y - d L_x + d D + D d)
// for v = L_x + D, w = L_y + d
template <typename Scalar>
MatX<Scalar> group_christoffel_formula(const AlgebraPtr<Scalar>& alg,
                                       const MatX<Scalar>& v, const MatX<Scalar>& w) {
  StrDecompositionT<Scalar> sv = split_str(alg, v), sw = split_str(alg, w);
  MatX<Scalar> lx = L_operator(sv.l_part), ly = L_operator(sw.l_part);
  const MatX<Scalar>&D = sv.der_part, &d = sw.der_part;
  return (ly * lx + lx * ly + Scalar(3) * lx * d + Scalar(3) * ly * D - D * ly -
          d * lx + d * D + D * d) /
         Scalar(2);
}

template <typename Scalar>
MatX<Scalar> group_christoffel(const GroupElementT<Scalar>& g, const MatX<Scalar>& v,
                               const MatX<Scalar>& w,
                               Scalar residual_tol = Scalar(1e-6)) {
  return g.op * group_christoffel_body(g.alg, v, w, residual_tol);
}

template <typename Scalar>
void require_derivation(const AlgebraPtr<Scalar>& alg, const MatX<Scalar>& d,
                        Scalar tol = Scalar(1e-8)) {
  Scalar res = derivation_residual(alg, d);
  if (res > tol * (Scalar(1) + d.norm()))
    throw std::invalid_argument("operator is not a derivation, residual " +
                                std::to_string(res));
}

// geodesic gamma(t) = g e^{t(L_x - D)} e^{2tD}
template <typename Scalar>
GroupElementT<Scalar> group_geodesic(const GroupElementT<Scalar>& g,
                                     const ElementT<Scalar>& x, const MatX<Scalar>& d,
                                     Scalar t) {
  require_derivation(g.alg, d);
  MatX<Scalar> lx = L_operator(x);
  MatX<Scalar> gamma = g.op * op_exp((t * (lx - d)).eval()) * op_exp((Scalar(2) * t * d).eval());
  return make_group_element(g.alg, gamma);
}

// body velocity of the geodesic: e^{-2t ad d}(L_x) + d
template <typename Scalar>
MatX<Scalar> group_geodesic_body_velocity(const AlgebraPtr<Scalar>& alg,
                                          const ElementT<Scalar>& x, const MatX<Scalar>& d,
                                          Scalar t) {
  MatX<Scalar> e = op_exp((-Scalar(2) * t * d).eval());
  MatX<Scalar> einv = op_exp((Scalar(2) * t * d).eval());
  return e * L_operator(x) * einv + d;
}

namespace detail {

// ad_A on column-major vec coordinates: kron(I, A) - kron(A^T, I)
template <typename Scalar>
MatX<Scalar> ad_matrix(const MatX<Scalar>& a) {
  const int d = static_cast<int>(a.rows());
  MatX<Scalar> m = MatX<Scalar>::Zero(d * d, d * d);
  for (int c = 0; c < d; ++c) m.block(c * d, c * d, d, d) += a;
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < d; ++r)
      m.block(r * d, c * d, d, d) -= a(c, r) * MatX<Scalar>::Identity(d, d);
  return m;
}

}  // namespace detail

// Parallel transport along the geodesic from g with initial body L_{x0} + d0,
// through the block operator
//   M = 1/2 [ ad d0,      ad L_{x0} ]
//           [ -ad L_{x0}, 3 ad d0   ]
// acting on the (L-part, der-part) pair; mu_t = gamma_t e^{-2t ad d0} e^{tM}
// applied to gamma_0^{-1} mu_0.
template <typename Scalar>
MatX<Scalar> group_parallel_transport(const GroupElementT<Scalar>& g,
                                      const ElementT<Scalar>& x0, const MatX<Scalar>& d0,
                                      Scalar t, const MatX<Scalar>& mu0) {
  require_derivation(g.alg, d0);
  const int d = g.alg->dim;
  StrDecompositionT<Scalar> s = split_str(g.alg, (g.inv * mu0).eval());
  MatX<Scalar> p0 = L_operator(s.l_part);
  const MatX<Scalar>& q0 = s.der_part;

  MatX<Scalar> ad_d0 = detail::ad_matrix(d0);
  MatX<Scalar> ad_lx = detail::ad_matrix(L_operator(x0));
  MatX<Scalar> m = MatX<Scalar>::Zero(2 * d * d, 2 * d * d);
  m.topLeftCorner(d * d, d * d) = ad_d0 / Scalar(2);
  m.topRightCorner(d * d, d * d) = ad_lx / Scalar(2);
  m.bottomLeftCorner(d * d, d * d) = -ad_lx / Scalar(2);
  m.bottomRightCorner(d * d, d * d) = Scalar(3) / Scalar(2) * ad_d0;

  VecX<Scalar> stacked(2 * d * d);
  stacked.head(d * d) = Eigen::Map<const VecX<Scalar>>(p0.data(), d * d);
  stacked.tail(d * d) = Eigen::Map<const VecX<Scalar>>(q0.data(), d * d);
  VecX<Scalar> moved = op_exp((t * m).eval()) * stacked;
  MatX<Scalar> pt = Eigen::Map<const MatX<Scalar>>(moved.data(), d, d);
  MatX<Scalar> qt = Eigen::Map<const MatX<Scalar>>(moved.data() + d * d, d, d);

  MatX<Scalar> e = op_exp((-Scalar(2) * t * d0).eval());
  MatX<Scalar> einv = op_exp((Scalar(2) * t * d0).eval());
  GroupElementT<Scalar> gamma = group_geodesic(g, x0, d0, t);
  return gamma.op * (e * (pt + qt) * einv);
}

// Independent oracle: RK4 on the coupled body system
//   L' = -3/2 [d, L] + 1/2 [L_y, D],  D' = -1/2 [L_y, L] - 1/2 [d, D]
// along the geodesic, where L_y(t) = e^{-2t ad d0} L_{x0} and d = d0.
template <typename Scalar>
MatX<Scalar> group_parallel_transport_ode(const GroupElementT<Scalar>& g,
                                          const ElementT<Scalar>& x0,
                                          const MatX<Scalar>& d0, Scalar t,
                                          const MatX<Scalar>& mu0, int steps = 1000) {
  require_derivation(g.alg, d0);
  StrDecompositionT<Scalar> s = split_str(g.alg, (g.inv * mu0).eval());
  MatX<Scalar> p = L_operator(s.l_part);
  MatX<Scalar> q = s.der_part;
  MatX<Scalar> lx0 = L_operator(x0);

  const Scalar h = t / Scalar(steps);
  MatX<Scalar> f_half = op_exp((-h * d0).eval());         // e^{-2 (h/2) d0}
  MatX<Scalar> f_half_inv = op_exp((h * d0).eval());
  MatX<Scalar> e = MatX<Scalar>::Identity(g.alg->dim, g.alg->dim);
  MatX<Scalar> einv = e;

  auto rhs = [&](const MatX<Scalar>& ly, const MatX<Scalar>& pp, const MatX<Scalar>& qq,
                 MatX<Scalar>& dp, MatX<Scalar>& dq) {
    dp = -Scalar(1.5) * commutator(d0, pp) + Scalar(0.5) * commutator(ly, qq);
    dq = -Scalar(0.5) * commutator(ly, pp) - Scalar(0.5) * commutator(d0, qq);
  };

  for (int i = 0; i < steps; ++i) {
    MatX<Scalar> ly0 = e * lx0 * einv;
    MatX<Scalar> e_mid = e * f_half, einv_mid = f_half_inv * einv;
    MatX<Scalar> ly1 = e_mid * lx0 * einv_mid;
    MatX<Scalar> e_end = e_mid * f_half, einv_end = f_half_inv * einv_mid;
    MatX<Scalar> ly2 = e_end * lx0 * einv_end;

    MatX<Scalar> k1p, k1q, k2p, k2q, k3p, k3q, k4p, k4q;
    rhs(ly0, p, q, k1p, k1q);
    rhs(ly1, (p + h / 2 * k1p).eval(), (q + h / 2 * k1q).eval(), k2p, k2q);
    rhs(ly1, (p + h / 2 * k2p).eval(), (q + h / 2 * k2q).eval(), k3p, k3q);
    rhs(ly2, (p + h * k3p).eval(), (q + h * k3q).eval(), k4p, k4q);
    p += h / 6 * (k1p + 2 * k2p + 2 * k3p + k4p);
    q += h / 6 * (k1q + 2 * k2q + 2 * k3q + k4q);
    e = e_end;
    einv = einv_end;
  }

  // the system evolves the raw body of gamma^{-1} mu, no conjugation left
  GroupElementT<Scalar> gamma = group_geodesic(g, x0, d0, t);
  return gamma.op * (p + q);
}

// <g(L_x+D), g(L_y+E)>_g = Tr(L_x L_y) - Tr(D E)
template <typename Scalar>
Scalar euclidean_metric(const GroupElementT<Scalar>& g, const MatX<Scalar>& v,
                        const MatX<Scalar>& w) {
  StrDecompositionT<Scalar> sv = split_str(g.alg, (g.inv * v).eval());
  StrDecompositionT<Scalar> sw = split_str(g.alg, (g.inv * w).eval());
  return (L_operator(sv.l_part) * L_operator(sw.l_part)).trace() -
         (sv.der_part * sw.der_part).trace();
}

template <typename Scalar>
Scalar euclidean_metric_body(const AlgebraPtr<Scalar>& alg, const MatX<Scalar>& v,
                             const MatX<Scalar>& w) {
  StrDecompositionT<Scalar> sv = split_str(alg, v), sw = split_str(alg, w);
  return (L_operator(sv.l_part) * L_operator(sw.l_part)).trace() -
         (sv.der_part * sw.der_part).trace();
}

// ||H||_g = ||g^{-1} H||_infty over the order-norm unit ball
template <typename Scalar>
OpNormResult<Scalar> finsler_norm_at(const GroupElementT<Scalar>& g, const MatX<Scalar>& h,
                                     const OpNormOptions<Scalar>& opts = {}) {
  return op_norm(g.alg, (g.inv * h).eval(), opts);
}

// path in the group given by closures; derivative falls back to central
// differences
template <typename Scalar>
struct GroupPathT {
  std::function<MatX<Scalar>(Scalar)> op_at;
  std::function<MatX<Scalar>(Scalar)> dop_at;  // may be empty
  Scalar fd_step = Scalar(1e-5);
};

using GroupPath = GroupPathT<double>;

template <typename Scalar>
MatX<Scalar> group_path_velocity(const GroupPathT<Scalar>& path, Scalar t) {
  if (path.dop_at) return path.dop_at(t);
  const Scalar h = path.fd_step;
  return ((path.op_at(t + h) - path.op_at(t - h)) / (Scalar(2) * h)).eval();
}

// Length by Simpson quadrature of the op-norm estimate of the body velocity.
// The previous node's maximizer seeds the next node's ascent.
template <typename Scalar>
Scalar group_path_length(const AlgebraPtr<Scalar>& alg, const GroupPathT<Scalar>& path,
                         int simpson_intervals = 250, int node_restarts = 8) {
  const int n = simpson_intervals;
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("group_path_length: interval count must be even");
  const Scalar h = Scalar(1) / Scalar(n);
  Scalar acc = 0;
  OpNormOptions<Scalar> opts;
  opts.restarts = node_restarts;
  for (int i = 0; i <= n; ++i) {
    const Scalar t = Scalar(i) * h;
    MatX<Scalar> body =
        path.op_at(t).partialPivLu().solve(group_path_velocity(path, t));
    OpNormResult<Scalar> r = op_norm(alg, body, opts);
    opts.warm_starts = {r.argmax};
    const Scalar w = (i == 0 || i == n) ? Scalar(1) : (i % 2 ? Scalar(4) : Scalar(2));
    acc += w * r.estimate;
  }
  return acc * h / Scalar(3);
}

// q(g) = g(1)
template <typename Scalar>
ConePointT<Scalar> quotient_map(const GroupElementT<Scalar>& g) {
  return make_cone_point(apply_op(g.op, unit(g.alg)));
}

// closed form of inf_D ||Z - gD||_g: the Finsler norm ||U_{p^{-1/2}} Z(1)||
// at p = g(1)
template <typename Scalar>
Scalar quotient_norm(const GroupElementT<Scalar>& g, const MatX<Scalar>& z) {
  ConePointT<Scalar> p = quotient_map(g);
  return jb_norm(apply_U(p.inv_sqrt_p, apply_op(z, unit(g.alg))));
}

// ---------------------------------------------------------------------------
// horizontal lifts

template <typename Scalar>
struct LiftResultT {
  VecX<Scalar> times;
  std::vector<MatX<Scalar>> k_ops;
  std::vector<MatX<Scalar>> lift_ops;
  VecX<Scalar> automorphism_residual;
  VecX<Scalar> horizontality_residual;
  VecX<Scalar> base_residual;
  VecX<Scalar> speed;
  Scalar length = 0;
};

using LiftResult = LiftResultT<double>;

namespace detail {

// spectral data needed at one path time
template <typename Scalar>
struct LiftFrame {
  ElementT<Scalar> sqrt, inv_sqrt, sqrt_dot;
};

template <typename Scalar>
LiftFrame<Scalar> lift_frame(const SampledPathT<Scalar>& path, Scalar t) {
  ElementT<Scalar> gamma = path.point_at(t);
  SpectrumT<Scalar> s = spectral_decompose(gamma);
  Scalar eps = positivity_eps(s.eigenvalues);
  if (s.eigenvalues.minCoeff() <= eps)
    throw std::domain_error("horizontal_lift: path left the cone");
  LiftFrame<Scalar> f{zero(gamma.algebra), zero(gamma.algebra), zero(gamma.algebra)};
  for (size_t i = 0; i < s.idempotents.size(); ++i) {
    Scalar root = std::sqrt(s.eigenvalues[static_cast<int>(i)]);
    f.sqrt.coords += root * s.idempotents[i].coords;
    f.inv_sqrt.coords += s.idempotents[i].coords / root;
  }
  // (gamma^{1/2})' solves 2 L_{gamma^{1/2}} u = gamma'
  ElementT<Scalar> vel = path_velocity(path, t);
  f.sqrt_dot = {gamma.algebra, (Scalar(2) * L_operator(f.sqrt))
                                   .partialPivLu()
                                   .solve(vel.coords)
                                   .eval()};
  return f;
}

// right-hand side of the lift equation, k' = 2 [L_{(gamma^{1/2})'},
// L_{gamma^{-1/2}}] k; the printed form carries the bracket without the
// factor 2, which fails horizontality (see the V-operator identities).
template <typename Scalar>
MatX<Scalar> lift_rhs_operator(const LiftFrame<Scalar>& f) {
  return Scalar(2) * commutator(L_operator(f.sqrt_dot), L_operator(f.inv_sqrt));
}

}  // namespace detail

template <typename Scalar>
LiftResultT<Scalar> horizontal_lift(const SampledPathT<Scalar>& path, int steps = 1000,
                                    int grid_points = 101, int node_restarts = 8,
                                    Scalar abort_residual = Scalar(1e-3)) {
  const AlgebraPtr<Scalar> alg = path.point_at(Scalar(0)).algebra;
  if ((steps % (grid_points - 1)) != 0 || steps % 250 != 0)
    throw std::invalid_argument("horizontal_lift: grid must divide the step count");

  std::vector<MatX<Scalar>> ks;
  ks.reserve(steps + 1);
  MatX<Scalar> k = MatX<Scalar>::Identity(alg->dim, alg->dim);
  ks.push_back(k);
  const Scalar h = Scalar(1) / Scalar(steps);
  for (int i = 0; i < steps; ++i) {
    const Scalar t = Scalar(i) * h;
    MatX<Scalar> a1 = detail::lift_rhs_operator(detail::lift_frame(path, t));
    MatX<Scalar> a2 = detail::lift_rhs_operator(detail::lift_frame(path, t + h / 2));
    MatX<Scalar> a4 = detail::lift_rhs_operator(detail::lift_frame(path, t + h));
    MatX<Scalar> k1 = a1 * k;
    MatX<Scalar> k2 = a2 * (k + h / 2 * k1);
    MatX<Scalar> k3 = a2 * (k + h / 2 * k2);
    MatX<Scalar> k4 = a4 * (k + h * k3);
    k += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    ks.push_back(k);
  }

  // body of Lambda^{-1} Lambda' at a stored step index
  auto body_at = [&](int idx) -> MatX<Scalar> {
    const Scalar t = Scalar(idx) * h;
    detail::LiftFrame<Scalar> f = detail::lift_frame(path, t);
    const MatX<Scalar>& kt = ks[static_cast<size_t>(idx)];
    MatX<Scalar> kt_inv = kt.partialPivLu().solve(
        MatX<Scalar>::Identity(alg->dim, alg->dim));
    MatX<Scalar> du = Scalar(2) * U_bilinear(f.sqrt, f.sqrt_dot);
    MatX<Scalar> kdot = detail::lift_rhs_operator(f) * kt;
    return kt_inv * (U_operator(f.inv_sqrt) * du) * kt + kt_inv * kdot;
  };

  LiftResultT<Scalar> out;
  out.times.resize(grid_points);
  out.automorphism_residual.resize(grid_points);
  out.horizontality_residual.resize(grid_points);
  out.base_residual.resize(grid_points);
  out.speed.resize(grid_points);

  const int grid_stride = steps / (grid_points - 1);
  OpNormOptions<Scalar> speed_opts;
  speed_opts.restarts = node_restarts;
  for (int gpt = 0; gpt < grid_points; ++gpt) {
    const int idx = gpt * grid_stride;
    const Scalar t = Scalar(idx) * h;
    out.times[gpt] = t;
    detail::LiftFrame<Scalar> f = detail::lift_frame(path, t);
    const MatX<Scalar>& kt = ks[static_cast<size_t>(idx)];
    MatX<Scalar> lift = U_operator(f.sqrt) * kt;
    out.k_ops.push_back(kt);
    out.lift_ops.push_back(lift);

    ElementT<Scalar> gamma = path.point_at(t);
    out.base_residual[gpt] =
        jb_norm(apply_op(lift, unit(alg)) - gamma) / (Scalar(1) + jb_norm(gamma));
    out.automorphism_residual[gpt] = is_automorphism(alg, kt);

    MatX<Scalar> body = body_at(idx);
    StrDecompositionT<Scalar> s = split_str(alg, body);
    out.horizontality_residual[gpt] = s.der_part.norm() / (Scalar(1) + body.norm());
    OpNormResult<Scalar> r = op_norm(alg, body, speed_opts);
    out.speed[gpt] = r.estimate;
    speed_opts.warm_starts = {r.argmax};

    if (out.horizontality_residual[gpt] > abort_residual ||
        out.automorphism_residual[gpt] > abort_residual)
      throw std::runtime_error("horizontal_lift: residual blow-up at t = " +
                               std::to_string(double(t)));
  }

  // length by Simpson over 250 intervals of the stored grid
  const int len_stride = steps / 250;
  OpNormOptions<Scalar> len_opts;
  len_opts.restarts = node_restarts;
  Scalar acc = 0;
  for (int i = 0; i <= 250; ++i) {
    OpNormResult<Scalar> r = op_norm(alg, body_at(i * len_stride), len_opts);
    len_opts.warm_starts = {r.argmax};
    const Scalar w = (i == 0 || i == 250) ? Scalar(1) : (i % 2 ? Scalar(4) : Scalar(2));
    acc += w * r.estimate;
  }
  out.length = acc / (Scalar(3) * Scalar(250));
  return out;
}

// closed form of the isometric lift of the geodesic from x to y:
// U_{x^{1/2}} e^{t L_z} with z = log(U_{x^{-1/2}} y)
template <typename Scalar>
MatX<Scalar> isometric_lift_of_geodesic(const ConePointT<Scalar>& x,
                                        const ConePointT<Scalar>& y, Scalar t) {
  ElementT<Scalar> z = relative_log(x, y);
  return U_operator(x.sqrt_p) * op_exp((t * L_operator(z)).eval());
}

// d'(x,y) bounds: the Thompson distance from below, the length of the
// horizontal lift of the geodesic from above
template <typename Scalar>
std::pair<Scalar, Scalar> quotient_distance_bounds(const ConePointT<Scalar>& x,
                                                   const ConePointT<Scalar>& y,
                                                   int steps = 1000) {
  Scalar lower = thompson_distance(x, y);
  LiftResultT<Scalar> lift = horizontal_lift(geodesic_path(x, y), steps);
  return {lower, lift.length};
}

}  // namespace jordan
