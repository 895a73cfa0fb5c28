#pragma once

#include "jordan/suites.hpp"

namespace jordan {

// geometry suite: the cone as a symmetric space plus the group connection
inline SuiteReport run_geometry(const SuiteConfig& cfg) {
  return detail::timed_suite("geometry", cfg, [&](SuiteReport& report) {
    auto alg = make_algebra(cfg.algebra);
    detail::SuiteBuilder b(report, cfg);
    const int n = cfg.trials;
    auto capped = [&](int cap) { return std::min(n, cap); };
    auto positive = [&](Rng& rng) {
      return make_cone_point(detail::sample_bounded_positive(alg, rng));
    };

    b.max_check("mu_s1", n, [&](Rng& rng) {
      ConePoint a = positive(rng);
      return jb_norm(mu(a, a) - a.p) / (1.0 + jb_norm(a.p));
    });

    b.max_check("mu_s2", n, [&](Rng& rng) {
      ConePoint a = positive(rng), c = positive(rng);
      return jb_norm(mu(a, make_cone_point(mu(a, c))) - c.p) / (1.0 + jb_norm(c.p));
    });

    b.max_check("mu_s3", n, [&](Rng& rng) {
      ConePoint a = positive(rng), c = positive(rng), e = positive(rng);
      Element lhs = mu(a, make_cone_point(mu(c, e)));
      Element rhs = mu(make_cone_point(mu(a, c)), make_cone_point(mu(a, e)));
      return jb_norm(lhs - rhs) / (1.0 + jb_norm(lhs));
    });

    b.max_check("mu_str_invariance", n, [&](Rng& rng) {
      ConePoint a = positive(rng), c = positive(rng);
      Mat g = U_operator(detail::sample_bounded_positive(alg, rng));
      Element lhs = apply_op(g, mu(a, c));
      Element rhs = mu(make_cone_point(apply_op(g, a.p)),
                       make_cone_point(apply_op(g, c.p)));
      return jb_norm(lhs - rhs) / (1.0 + jb_norm(lhs));
    });

    b.max_check("mu_star_fd", capped(100), [&](Rng& rng) {
      ConePoint x = positive(rng), y = positive(rng);
      Element v = random_element(alg, rng, 1.0), w = random_element(alg, rng, 1.0);
      Element got = mu_star(Tangent{x, v}, Tangent{y, w});
      const double h = 1e-4;
      Element plus = apply_U(x.p + h * v, inverse(y.p + h * w));
      Element minus = apply_U(x.p - h * v, inverse(y.p - h * w));
      Element fd = (1.0 / (2.0 * h)) * (plus - minus);
      return jb_norm(got - fd) / (1.0 + jb_norm(got));
    });

    b.max_check("spray_polarization", n, [&](Rng& rng) {
      ConePoint p = positive(rng);
      Element v = random_element(alg, rng, 1.0), w = random_element(alg, rng, 1.0);
      Element pol = 0.5 * (spray(p, v + w) - spray(p, v) - spray(p, w));
      return jb_norm(christoffel(p, v, w) - pol) / (1.0 + jb_norm(pol));
    });

    b.max_check("christoffel_diag_spray", n, [&](Rng& rng) {
      ConePoint p = positive(rng);
      Element v = random_element(alg, rng, 1.0);
      return jb_norm(christoffel(p, v, v) - spray(p, v)) /
             (1.0 + jb_norm(spray(p, v)));
    });

    b.max_check("geodesic_ode", capped(100), [&](Rng& rng) {
      ConePoint p = positive(rng);
      Element v = random_element(alg, rng, 1.0);
      const double h = 1e-4;
      double worst = 0;
      for (int k = 1; k <= 11; ++k) {
        double t = k / 12.0;
        Element am = geodesic(p, v, t - h).p, a0 = geodesic(p, v, t).p,
                ap = geodesic(p, v, t + h).p;
        Element accel = (1.0 / (h * h)) * (ap - 2.0 * a0 + am);
        Element vel = (1.0 / (2.0 * h)) * (ap - am);
        Element rhs = apply_U(vel, inverse(a0));
        worst = std::max(worst, jb_norm(accel - rhs) / (1.0 + jb_norm(accel)));
      }
      return worst;
    });

    b.max_check("geodesic_initial_speed", capped(200), [&](Rng& rng) {
      ConePoint p = positive(rng);
      Element v = random_element(alg, rng, 1.0);
      const double h = 1e-5;
      Element fd = (1.0 / (2.0 * h)) * (geodesic(p, v, h).p - geodesic(p, v, -h).p);
      return jb_norm(fd - v) / (1.0 + jb_norm(v));
    });

    b.max_check("geodesic_endpoints", n, [&](Rng& rng) {
      ConePoint x = positive(rng), y = positive(rng);
      double r0 = jb_norm(geodesic_between(x, y, 0.0).p - x.p) / (1.0 + jb_norm(x.p));
      double r1 = jb_norm(geodesic_between(x, y, 1.0).p - y.p) / (1.0 + jb_norm(y.p));
      return std::max(r0, r1);
    });

    b.max_check("exp_log_inversion", n, [&](Rng& rng) {
      ConePoint x = positive(rng), y = positive(rng);
      Element v = log_map(x, y);
      return jb_norm(geodesic(x, v, 1.0).p - y.p) / (1.0 + jb_norm(y.p));
    });

    b.max_check("transport_closed_vs_ode", capped(25), [&](Rng& rng) {
      ConePoint x = positive(rng), y = positive(rng);
      Element w = random_element(alg, rng, 1.0);
      Element got = parallel_transport(x, y, 1.0, w);
      Element ode = parallel_transport_ode(x, y, 1.0, w);
      return jb_norm(got - ode) / (1.0 + jb_norm(got));
    });

    b.max_check("transport_isometry", capped(200), [&](Rng& rng) {
      ConePoint x = positive(rng), y = positive(rng);
      Element w = random_element(alg, rng, 1.0);
      double t = rng.uniform();
      Element pw = parallel_transport(x, y, t, w);
      ConePoint at = geodesic_between(x, y, t);
      double before = jb_norm(apply_U(x.inv_sqrt_p, w));
      double after = jb_norm(apply_U(at.inv_sqrt_p, pw));
      return std::abs(after - before) / (1.0 + before);
    });

    b.max_check("transport_gauge_isometry", capped(200), [&](Rng& rng) {
      ConePoint x = positive(rng), y = positive(rng);
      Element w = random_element(alg, rng, 1.0);
      double t = rng.uniform();
      Element pw = parallel_transport(x, y, t, w);
      ConePoint at = geodesic_between(x, y, t);
      GaugeFunction phi = GaugeFunction::lp(1);
      double before = gauge_norm(apply_U(x.inv_sqrt_p, w), phi);
      double after = gauge_norm(apply_U(at.inv_sqrt_p, pw), phi);
      return std::abs(after - before) / (1.0 + before);
    });

    b.max_check("curvature_two_routes", n, [&](Rng& rng) {
      ConePoint p = positive(rng);
      Element v = random_element(alg, rng, 1.0), w = random_element(alg, rng, 1.0);
      Element z = random_element(alg, rng, 1.0);
      Element a = curvature(p, v, w, z), c = curvature_nested(p, v, w, z);
      return jb_norm(a - c) / (1.0 + jb_norm(a));
    });

    b.max_check("curvature_antisymmetry", n, [&](Rng& rng) {
      ConePoint p = positive(rng);
      Element v = random_element(alg, rng, 1.0), w = random_element(alg, rng, 1.0);
      Element z = random_element(alg, rng, 1.0);
      double diag = jb_norm(curvature(p, v, v, z));
      double anti = jb_norm(curvature(p, v, w, z) + curvature(p, w, v, z));
      return std::max(diag, anti);
    });

    b.max_check("curvature_unit_formula", n, [&](Rng& rng) {
      ConePoint one = make_cone_point(unit(alg));
      Element v = random_element(alg, rng, 1.0), w = random_element(alg, rng, 1.0);
      Mat lv = L_operator(v);
      Element expect = apply_op(Mat(lv * lv - U_operator(v)), w);
      return jb_norm(curvature(one, v, w, v) - expect) / (1.0 + jb_norm(expect));
    });

    if (alg->kind == AlgebraKind::rn) {
      b.max_check("curvature_flat_rn", n, [&](Rng& rng) {
        ConePoint p = positive(rng);
        return jb_norm(curvature(p, random_element(alg, rng, 1.0),
                                 random_element(alg, rng, 1.0),
                                 random_element(alg, rng, 1.0)));
      });
    }

    b.max_check("killing_derivative", capped(200), [&](Rng& rng) {
      ConePoint p = positive(rng);
      Element x = random_element(alg, rng, 1.0);
      const double h = 1e-5;
      Element fd =
          (1.0 / (2.0 * h)) * (killing_flow(x, p, h).p - killing_flow(x, p, -h).p);
      return jb_norm(fd - jordan_product(p.p, x)) / (1.0 + jb_norm(fd));
    });

    b.max_check("killing_flow_property", capped(200), [&](Rng& rng) {
      ConePoint p = positive(rng);
      Element x = random_element(alg, rng, 1.0);
      Element once = killing_flow(x, make_cone_point(killing_flow(x, p, 0.4).p), 0.6).p;
      return jb_norm(once - killing_flow(x, p, 1.0).p) / (1.0 + jb_norm(once));
    });

    b.max_check("killing_preserves_mu", capped(200), [&](Rng& rng) {
      ConePoint p = positive(rng), q = positive(rng);
      Element x = random_element(alg, rng, 1.0);
      Element lhs = killing_flow(x, make_cone_point(mu(p, q)), 0.5).p;
      Element rhs = mu(make_cone_point(killing_flow(x, p, 0.5).p),
                       make_cone_point(killing_flow(x, q, 0.5).p));
      return jb_norm(lhs - rhs) / (1.0 + jb_norm(lhs));
    });

    b.max_check("thompson_symmetry", n, [&](Rng& rng) {
      ConePoint p = positive(rng), q = positive(rng);
      double d1 = thompson_distance(p, q), d2 = thompson_distance(q, p);
      return std::abs(d1 - d2) / (1.0 + d1);
    });

    b.max_check("thompson_invariance", n, [&](Rng& rng) {
      ConePoint p = positive(rng), q = positive(rng);
      Element a = detail::sample_bounded_positive(alg, rng);
      double base = thompson_distance(p, q);
      double moved = thompson_distance(make_cone_point(apply_U(a, p.p)),
                                       make_cone_point(apply_U(a, q.p)));
      return std::abs(moved - base) / (1.0 + base);
    });

    b.max_check("thompson_triangle", n, [&](Rng& rng) {
      ConePoint p = positive(rng), q = positive(rng), r = positive(rng);
      double slack =
          thompson_distance(p, r) - thompson_distance(p, q) - thompson_distance(q, r);
      return std::max(0.0, slack);
    });

    b.max_check("convexity_probe", capped(25), [&](Rng& rng) {
      ConePoint a0 = positive(rng), a1 = positive(rng);
      ConePoint b0 = positive(rng), b1 = positive(rng);
      auto dist_at = [&](double t) {
        return thompson_distance(geodesic_between(a0, a1, t),
                                 geodesic_between(b0, b1, t));
      };
      double worst = 0;
      for (int k = 1; k <= 9; ++k) {
        double t = k / 10.0;
        worst = std::max(worst, dist_at(t) - 0.5 * (dist_at(t - 0.1) + dist_at(t + 0.1)));
      }
      return std::max(0.0, worst);
    });

    b.max_check("velocity_identity", capped(100), [&](Rng& rng) {
      Element g = random_element(alg, rng, 1.0);
      Element gdot = random_element(alg, rng, 1.0);
      Element a = lie_velocity(g, gdot);
      Element c = lie_velocity_fd(g, gdot);
      return jb_norm(a - c) / (1.0 + jb_norm(a));
    });

    // ---- group connection ----

    b.max_check("group_spray_routes", capped(300), [&](Rng& rng) {
      Mat v = detail::sample_str_body(alg, rng);
      Mat a = group_spray_body(alg, v), c = group_spray_body_split(alg, v);
      return (a - c).norm() / (1.0 + a.norm());
    });

    b.max_check("group_spray_horizontal", capped(300), [&](Rng& rng) {
      Mat lx = L_operator(random_element(alg, rng, 1.0));
      return (group_spray_body(alg, lx) - lx * lx).norm() / (1.0 + (lx * lx).norm());
    });

    b.max_check("group_spray_vertical", capped(300), [&](Rng& rng) {
      Mat d = random_derivation(alg, rng);
      return (group_spray_body(alg, d) - d * d).norm() / (1.0 + (d * d).norm());
    });

    b.max_check("group_christoffel_formula", capped(300), [&](Rng& rng) {
      Mat v = detail::sample_str_body(alg, rng), w = detail::sample_str_body(alg, rng);
      Mat a = group_christoffel_body(alg, v, w), c = group_christoffel_formula(alg, v, w);
      return (a - c).norm() / (1.0 + a.norm());
    });

    b.max_check("group_geodesic_ode", capped(25), [&](Rng& rng) {
      GroupElement g = detail::sample_group_element(alg, rng);
      Element x = random_element(alg, rng, 0.7);
      Mat d = 0.8 * random_derivation(alg, rng);
      auto gamma = [&](double t) { return group_geodesic(g, x, d, t).op; };
      const double h = 1e-4;
      double worst = 0;
      for (double t : {0.25, 0.5, 0.75}) {
        Mat accel = (gamma(t + h) - 2.0 * gamma(t) + gamma(t - h)) / (h * h);
        Mat gt = gamma(t);
        Mat body = gt.partialPivLu().solve(Mat((gamma(t + h) - gamma(t - h)) / (2.0 * h)));
        Mat force = gt * group_spray_body(alg, body);
        worst = std::max(worst, (accel - force).norm() / (1.0 + accel.norm()));
      }
      return worst;
    });

    b.max_check("group_velocity_body", capped(25), [&](Rng& rng) {
      GroupElement g = detail::sample_group_element(alg, rng);
      Element x = random_element(alg, rng, 0.7);
      Mat d = 0.8 * random_derivation(alg, rng);
      const double h = 1e-4;
      double worst = 0;
      for (double t : {0.3, 0.7}) {
        Mat gt = group_geodesic(g, x, d, t).op;
        Mat fd = (group_geodesic(g, x, d, t + h).op - group_geodesic(g, x, d, t - h).op) /
                 (2.0 * h);
        Mat body = gt.partialPivLu().solve(fd);
        Mat expect = group_geodesic_body_velocity(alg, x, d, t);
        worst = std::max(worst, (body - expect).norm() / (1.0 + expect.norm()));
      }
      return worst;
    });

    b.max_check("totally_geodesic_aut", capped(25), [&](Rng& rng) {
      GroupElement one = group_identity(alg);
      Mat d = 0.8 * random_derivation(alg, rng);
      double worst = 0;
      for (double t : {0.25, 0.5, 0.75, 1.0})
        worst = std::max(
            worst, is_automorphism(alg, group_geodesic(one, zero(alg), d, t).op, 16,
                                   rng.next()));
      return worst;
    });

    b.max_check("totally_geodesic_cone", capped(25), [&](Rng& rng) {
      GroupElement g = detail::sample_group_element(alg, rng);
      Element x = random_element(alg, rng, 0.7);
      Mat d = 0.8 * random_derivation(alg, rng);
      double worst = 0;
      for (double t : {0.25, 0.5, 0.75, 1.0})
        worst = std::max(worst, group_geodesic(g, x, d, t).cone_residual);
      return worst;
    });

    b.max_check("group_transport_closed_vs_ode", capped(25), [&](Rng& rng) {
      GroupElement g = detail::sample_group_element(alg, rng);
      Element x0 = random_element(alg, rng, 0.7);
      Mat d0 = 0.8 * random_derivation(alg, rng);
      Mat mu0 = g.op * detail::sample_str_body(alg, rng);
      Mat closed = group_parallel_transport(g, x0, d0, 1.0, mu0);
      Mat ode = group_parallel_transport_ode(g, x0, d0, 1.0, mu0);
      return (closed - ode).norm() / (1.0 + closed.norm());
    });

    b.max_check("group_transport_velocity", capped(25), [&](Rng& rng) {
      GroupElement g = detail::sample_group_element(alg, rng);
      Element x0 = random_element(alg, rng, 0.7);
      Mat d0 = 0.8 * random_derivation(alg, rng);
      Mat v0 = g.op * (L_operator(x0) + d0);
      double worst = 0;
      for (double t : {0.5, 1.0}) {
        Mat moved = group_parallel_transport(g, x0, d0, t, v0);
        Mat expect =
            group_geodesic(g, x0, d0, t).op * group_geodesic_body_velocity(alg, x0, d0, t);
        worst = std::max(worst, (moved - expect).norm() / (1.0 + expect.norm()));
      }
      return worst;
    });

    b.min_check("metric_positive_definite", n, [&](Rng& rng) {
      Mat v = detail::sample_str_body(alg, rng);
      double denom = v.squaredNorm();
      if (denom < 1e-14) return 1.0;
      return euclidean_metric_body(alg, v, v) / denom;
    });

    b.max_check("metric_lx_d_orthogonal", capped(300), [&](Rng& rng) {
      Mat lx = L_operator(random_element(alg, rng, 1.0));
      Mat d = random_derivation(alg, rng);
      return std::abs((lx * d).trace()) / (1.0 + lx.norm() * d.norm());
    });

    b.max_check("metric_compatibility", capped(20), [&](Rng& rng) {
      Mat a = L_operator(random_element(alg, rng, 0.6)) + 0.5 * random_derivation(alg, rng);
      Mat v0 = detail::sample_str_body(alg, rng), v1 = detail::sample_str_body(alg, rng);
      Mat w0 = detail::sample_str_body(alg, rng), w1 = detail::sample_str_body(alg, rng);
      auto vbody = [&](double t) { return Mat(v0 + t * v1); };
      auto wbody = [&](double t) { return Mat(w0 + t * w1); };
      auto inner = [&](double t) { return euclidean_metric_body(alg, vbody(t), wbody(t)); };
      const double t0 = 0.3, h = 1e-5;
      double lhs = (inner(t0 + h) - inner(t0 - h)) / (2.0 * h);
      Mat dmu = a * vbody(t0) + v1 - group_christoffel_body(alg, a, vbody(t0));
      Mat deta = a * wbody(t0) + w1 - group_christoffel_body(alg, a, wbody(t0));
      double rhs = euclidean_metric_body(alg, dmu, wbody(t0)) +
                   euclidean_metric_body(alg, vbody(t0), deta);
      return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
    });
  });
}

}  // namespace jordan
