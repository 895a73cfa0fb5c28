#include <cmath>

#include "doctest.h"
#include "jordan/group.hpp"
#include "test_support.hpp"

using namespace jordan;
using testsup::bounded_positive;

namespace {

GroupElement random_group_element(const AlgebraPtr<double>& alg, Rng& rng) {
  Mat g = U_operator(bounded_positive(alg, rng)) *
          op_exp(Mat(0.7 * random_derivation(alg, rng)));
  return make_group_element(alg, g);
}

Mat central_second_difference(const std::function<Mat(double)>& f, double t, double h) {
  return (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h);
}

}  // namespace

TEST_CASE("group element construction") {
  Rng rng(101);
  for (const auto& spec : testsup::algebra_specs()) {
    auto alg = make_algebra(spec);
    GroupElement g = random_group_element(alg, rng);
    CHECK((g.op * g.inv - Mat::Identity(alg->dim, alg->dim)).norm() < 1e-10);
    CHECK(g.cone_residual < 1e-12);

    Mat singular = Mat::Zero(alg->dim, alg->dim);
    CHECK_THROWS_AS((void)make_group_element(alg, singular), std::domain_error);
  }
}

TEST_CASE("group tangent membership gate") {
  auto alg = make_algebra("sym:3");
  Rng rng(102);
  GroupElement g = random_group_element(alg, rng);
  Mat body = L_operator(random_element(alg, rng, 1.0)) + random_derivation(alg, rng);
  GroupTangent tangent = make_group_tangent(g, body);
  CHECK(tangent.split.derivation_residual < 1e-9);

  Mat noise = Mat::Random(alg->dim, alg->dim);
  CHECK_THROWS_AS((void)make_group_tangent(g, noise), std::invalid_argument);
}

TEST_CASE("group spray: two routes, horizontal and vertical parts") {
  Rng rng(103);
  for (const auto& spec : testsup::algebra_specs()) {
    auto alg = make_algebra(spec);
    for (int t = 0; t < 25; ++t) {
      Element x = random_element(alg, rng, 1.0);
      Mat d = random_derivation(alg, rng);
      Mat lx = L_operator(x);
      Mat v = lx + d;

      Mat via_dagger = group_spray_body(alg, v);
      Mat via_split = group_spray_body_split(alg, v);
      CHECK((via_dagger - via_split).norm() < 1e-10 * (1.0 + via_dagger.norm()));

      CHECK((group_spray_body(alg, lx) - lx * lx).norm() <
            1e-10 * (1.0 + (lx * lx).norm()));
      CHECK((group_spray_body(alg, d) - d * d).norm() < 1e-10 * (1.0 + (d * d).norm()));

      GroupElement g = random_group_element(alg, rng);
      CHECK((group_spray(g, v) - g.op * via_dagger).norm() <
            1e-12 * (1.0 + via_dagger.norm()));
    }
  }
}

TEST_CASE("group christoffel: polarization equals the explicit formula") {
  Rng rng(104);
  for (const auto& spec : testsup::algebra_specs()) {
    auto alg = make_algebra(spec);
    for (int t = 0; t < 25; ++t) {
      Mat v = L_operator(random_element(alg, rng, 1.0)) + random_derivation(alg, rng);
      Mat w = L_operator(random_element(alg, rng, 1.0)) + random_derivation(alg, rng);
      Mat a = group_christoffel_body(alg, v, w);
      Mat b = group_christoffel_formula(alg, v, w);
      CHECK((a - b).norm() < 1e-10 * (1.0 + a.norm()));
      // Gamma(v,v) is the spray
      Mat s = group_christoffel_body(alg, v, v);
      CHECK((s - group_spray_body(alg, v)).norm() < 1e-10 * (1.0 + s.norm()));
    }
  }
}

TEST_CASE("group geodesics") {
  Rng rng(105);
  for (const auto& spec : {"sym:2", "sym:3", "spin:4", "rn:4"}) {
    auto alg = make_algebra(spec);
    GroupElement g = random_group_element(alg, rng);
    Element x = random_element(alg, rng, 0.7);
    Mat d = 0.8 * random_derivation(alg, rng);

    // x = 0, D = 0: constant
    CHECK((group_geodesic(g, zero(alg), Mat(Mat::Zero(alg->dim, alg->dim)), 0.9).op -
           g.op).norm() < 1e-12 * (1.0 + g.op.norm()));

    // g = 1, D = 0: e^{tL_x} = U_{exp(tx/2)}
    GroupElement one = group_identity(alg);
    Mat horizontal = group_geodesic(one, x, Mat(Mat::Zero(alg->dim, alg->dim)), 0.6).op;
    CHECK((horizontal - U_operator(exp_element(0.3 * x))).norm() <
          1e-9 * (1.0 + horizontal.norm()));

    // g = 1, x = 0: an automorphism path
    for (double t : {0.0, 0.25, 0.5, 1.0}) {
      GroupElement aut = group_geodesic(one, zero(alg), d, t);
      CHECK(is_automorphism(alg, aut.op) < 1e-7);
      CHECK(aut.cone_residual < 1e-7);
    }

    // geodesic ODE residual by central differences
    auto gamma = [&](double t) { return group_geodesic(g, x, d, t).op; };
    const double h = 1e-4;
    for (double t : {0.2, 0.5, 0.8}) {
      Mat accel = central_second_difference(gamma, t, h);
      Mat gt = gamma(t);
      Mat vel = (gamma(t + h) - gamma(t - h)) / (2.0 * h);
      Mat body = gt.partialPivLu().solve(vel);
      Mat force = gt * group_spray_body(alg, body);
      CHECK((accel - force).norm() < 1e-6 * (1.0 + accel.norm()));

      // body velocity closed form
      Mat expect_body = group_geodesic_body_velocity(alg, x, d, t);
      CHECK((body - expect_body).norm() < 1e-6 * (1.0 + expect_body.norm()));

      // the whole geodesic stays cone preserving
      CHECK(group_geodesic(g, x, d, t).cone_residual < 1e-7);
    }

    // rejects a non-derivation
    if (alg->kind != AlgebraKind::rn) {
      Mat bad = L_operator(random_element(alg, rng, 1.0));
      if (bad.norm() > 1e-6)
        CHECK_THROWS_AS((void)group_geodesic(g, x, bad, 0.5), std::invalid_argument);
    }
  }
}

TEST_CASE("group parallel transport: closed form vs ODE oracle") {
  Rng rng(106);
  for (const auto& spec : {"sym:2", "sym:3", "spin:4", "rn:4"}) {
    auto alg = make_algebra(spec);
    for (int trial = 0; trial < 5; ++trial) {
      GroupElement g = random_group_element(alg, rng);
      Element x0 = random_element(alg, rng, 0.7);
      Mat d0 = 0.8 * random_derivation(alg, rng);
      Mat mu0 = g.op * (L_operator(random_element(alg, rng, 1.0)) +
                        random_derivation(alg, rng));

      CHECK((group_parallel_transport(g, x0, d0, 0.0, mu0) - mu0).norm() <
            1e-10 * (1.0 + mu0.norm()));

      Mat closed = group_parallel_transport(g, x0, d0, 1.0, mu0);
      Mat ode = group_parallel_transport_ode(g, x0, d0, 1.0, mu0);
      CHECK((closed - ode).norm() < 1e-7 * (1.0 + closed.norm()));

      // velocity transports to velocity along the geodesic
      Mat v0 = g.op * (L_operator(x0) + d0);
      for (double t : {0.4, 1.0}) {
        Mat moved = group_parallel_transport(g, x0, d0, t, v0);
        Mat expect = group_geodesic(g, x0, d0, t).op *
                     group_geodesic_body_velocity(alg, x0, d0, t);
        CHECK((moved - expect).norm() < 1e-7 * (1.0 + expect.norm()));
      }
    }
  }
}

TEST_CASE("euclidean riemannian metric") {
  Rng rng(107);
  for (const auto& spec : {"sym:2", "sym:3", "spin:4", "rn:4"}) {
    auto alg = make_algebra(spec);
    GroupElement one = group_identity(alg);

    // <L_1, L_1> = Tr(Id) = dim
    Mat l1 = L_operator(unit(alg));
    CHECK(euclidean_metric(one, l1, l1) == doctest::Approx(double(alg->dim)));

    for (int t = 0; t < 50; ++t) {
      Element x = random_element(alg, rng, 1.0);
      Mat d = random_derivation(alg, rng);
      Mat lx = L_operator(x);

      if (d.norm() > 1e-12) {
        CHECK(euclidean_metric(one, d, d) > 0.0);
        CHECK(euclidean_metric(one, d, d) ==
              doctest::Approx(-(d * d).trace()).epsilon(1e-10));
      }
      // L and der are orthogonal
      CHECK(std::abs(euclidean_metric(one, lx, d)) <
            1e-10 * (1.0 + lx.norm() * d.norm()));

      Mat v = lx + d;
      if (v.norm() > 1e-12) CHECK(euclidean_metric(one, v, v) > 0.0);

      // left invariance by construction
      GroupElement g = random_group_element(alg, rng);
      CHECK(euclidean_metric(g, Mat(g.op * v), Mat(g.op * v)) ==
            doctest::Approx(euclidean_metric(one, v, v)).epsilon(1e-8));
    }
  }
}

TEST_CASE("metric compatibility with the connection") {
  Rng rng(108);
  for (const auto& spec : {"sym:3", "spin:4"}) {
    auto alg = make_algebra(spec);
    for (int trial = 0; trial < 10; ++trial) {
      Mat a = L_operator(random_element(alg, rng, 0.6)) +
              0.5 * random_derivation(alg, rng);
      Mat v0 = L_operator(random_element(alg, rng, 1.0)) + random_derivation(alg, rng);
      Mat v1 = L_operator(random_element(alg, rng, 1.0)) + random_derivation(alg, rng);
      Mat w0 = L_operator(random_element(alg, rng, 1.0)) + random_derivation(alg, rng);
      Mat w1 = L_operator(random_element(alg, rng, 1.0)) + random_derivation(alg, rng);

      // gamma(t) = e^{tA}, mu = gamma (V0 + t V1), eta = gamma (W0 + t W1)
      auto vbody = [&](double t) { return Mat(v0 + t * v1); };
      auto wbody = [&](double t) { return Mat(w0 + t * w1); };
      auto inner = [&](double t) {
        return euclidean_metric_body(alg, vbody(t), wbody(t));
      };

      const double t0 = 0.3, h = 1e-5;
      double lhs = (inner(t0 + h) - inner(t0 - h)) / (2.0 * h);

      // D_t mu has body AV + V' - Gamma_body(A, V)
      Mat dmu = a * vbody(t0) + v1 - group_christoffel_body(alg, a, vbody(t0));
      Mat deta = a * wbody(t0) + w1 - group_christoffel_body(alg, a, wbody(t0));
      double rhs = euclidean_metric_body(alg, dmu, wbody(t0)) +
                   euclidean_metric_body(alg, vbody(t0), deta);
      CHECK(std::abs(lhs - rhs) < 2e-6 * (1.0 + std::abs(lhs)));
    }
  }
}

TEST_CASE("left-invariant finsler norm and group path lengths") {
  Rng rng(109);
  auto alg = make_algebra("sym:3");
  GroupElement g = random_group_element(alg, rng);

  // H = g * Id has unit norm
  CHECK(finsler_norm_at(g, g.op).estimate == doctest::Approx(1.0).epsilon(1e-12));

  // left invariance is structural: ||(fg)^{-1} f H|| = ||g^{-1} H||
  Mat h = g.op *
          (L_operator(random_element(alg, rng, 1.0)) + random_derivation(alg, rng));
  GroupElement f = random_group_element(alg, rng);
  GroupElement fg = make_group_element(alg, Mat(f.op * g.op));
  OpNormOpts tight;
  tight.restarts = 24;
  CHECK(finsler_norm_at(fg, Mat(f.op * h), tight).estimate ==
        doctest::Approx(finsler_norm_at(g, h, tight).estimate).epsilon(1e-9));

  // Aut right invariance within estimator tolerance; the conjugated side is
  // seeded with the transported maximizer of the plain side
  Mat k = op_exp(Mat(0.9 * random_derivation(alg, rng)));
  GroupElement gk = make_group_element(alg, Mat(g.op * k));
  OpNormResult<double> plain = finsler_norm_at(g, h, tight);
  OpNormOpts seeded = tight;
  seeded.warm_starts = {k.partialPivLu().solve(plain.argmax)};
  CHECK(finsler_norm_at(gk, Mat(h * k), seeded).estimate ==
        doctest::Approx(plain.estimate).epsilon(1e-7));

  // path t -> e^{tL_v} has length ||v||
  Element v = random_element(alg, rng, 1.0);
  Mat lv = L_operator(v);
  GroupPath pv{[&](double t) { return op_exp(Mat(t * lv)); },
               [&](double t) { return Mat(lv * op_exp(Mat(t * lv))); }, 1e-5};
  CHECK(group_path_length(alg, pv, 64) == doctest::Approx(jb_norm(v)).epsilon(1e-6));

  // path t -> e^{tD} has length ||D||
  Mat d = random_derivation(alg, rng);
  OpNormResult<double> dn = op_norm(alg, d);
  GroupPath pd{[&](double t) { return op_exp(Mat(t * d)); },
               [&](double t) { return Mat(d * op_exp(Mat(t * d))); }, 1e-5};
  CHECK(group_path_length(alg, pd, 64) == doctest::Approx(dn.estimate).epsilon(1e-6));
}

TEST_CASE("quotient map and quotient norm") {
  Rng rng(110);
  for (const auto& spec : {"sym:2", "sym:3", "spin:4"}) {
    auto alg = make_algebra(spec);

    Element p = bounded_positive(alg, rng);
    GroupElement up = make_group_element(alg, U_operator(sqrt_element(p)));
    CHECK(jb_norm(quotient_map(up).p - p) < 1e-9 * (1.0 + jb_norm(p)));

    // g = 1, Z = L_x: the quotient norm is ||x||
    GroupElement one = group_identity(alg);
    Element x = random_element(alg, rng, 1.0);
    CHECK(quotient_norm(one, L_operator(x)) ==
          doctest::Approx(jb_norm(x)).epsilon(1e-12));

    // sampled-infimum sandwich around the closed form
    for (int trial = 0; trial < 5; ++trial) {
      GroupElement g = random_group_element(alg, rng);
      Mat z = g.op * (L_operator(random_element(alg, rng, 1.0)) +
                      random_derivation(alg, rng));
      double closed = quotient_norm(g, z);
      Mat body = g.inv * z;

      OpNormOpts light;
      light.restarts = 8;
      for (int k = 0; k < 20; ++k) {
        Mat d = (1.0 + rng.uniform()) * random_derivation(alg, rng);
        double lb = op_norm(alg, Mat(body - d), light).lower_bound;
        CHECK(lb >= closed - 1e-9 * (1.0 + closed));
      }
      // attained at the derivation component of the body
      StrDecomposition s = split_str(alg, body);
      double attained = op_norm(alg, Mat(body - s.der_part), light).estimate;
      CHECK(attained == doctest::Approx(closed).epsilon(1e-9));
    }
  }
}

TEST_CASE("horizontal lift of paths from the unit") {
  Rng rng(111);
  auto alg = make_algebra("sym:3");

  // one-parameter geodesic: k stays the identity and the lift is e^{tL_v}
  Element v = random_element(alg, rng, 0.8);
  ConePoint one = make_cone_point(unit(alg));
  ConePoint target = make_cone_point(exp_element(v));
  LiftResult lift = horizontal_lift(geodesic_path(one, target), 1000, 11);
  const Mat id = Mat::Identity(alg->dim, alg->dim);
  for (int i = 0; i < lift.times.size(); ++i) {
    CHECK((lift.k_ops[i] - id).norm() < 1e-8);
    CHECK((lift.lift_ops[i] - op_exp(Mat(lift.times[i] * L_operator(v)))).norm() <
          1e-7 * (1.0 + lift.lift_ops[i].norm()));
  }
  CHECK(lift.length == doctest::Approx(jb_norm(v)).epsilon(1e-6));

  // constant path lifts to a constant
  ConePoint p = make_cone_point(bounded_positive(alg, rng));
  auto constant = make_sampled_path<double>([&](double) { return p.p; }, 16);
  LiftResult still = horizontal_lift(constant, 1000, 11);
  for (int i = 0; i < still.times.size(); ++i)
    CHECK((still.lift_ops[i] - still.lift_ops[0]).norm() < 1e-9);
  CHECK(still.length == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("horizontal lift of random smooth paths") {
  Rng rng(112);
  for (const auto& spec : {"sym:2", "spin:4"}) {
    auto alg = make_algebra(spec);
    for (int trial = 0; trial < 3; ++trial) {
      Element a = random_element(alg, rng, 0.5);
      Element b = random_element(alg, rng, 0.5);
      Element c = random_element(alg, rng, 0.5);
      auto gamma = [=](double t) {
        return exp_element(a + t * b + std::sin(M_PI * t) * c);
      };
      auto path = make_sampled_path<double>(gamma, 32);
      LiftResult lift = horizontal_lift(path, 1000, 101);

      CHECK(lift.base_residual.maxCoeff() < 1e-7);
      CHECK(lift.horizontality_residual.maxCoeff() < 1e-6);
      CHECK(lift.automorphism_residual.maxCoeff() < 1e-6);

      auto norms = std::vector<PathNorm>{PathNorm::order_norm()};
      double base_len = path_lengths(path, norms, 2048)[0];
      CHECK(std::abs(lift.length - base_len) < 1e-5 * (1.0 + base_len));
    }
  }
}

TEST_CASE("lift of a general geodesic matches the closed form") {
  Rng rng(113);
  for (const auto& spec : {"sym:2", "sym:3", "spin:4"}) {
    auto alg = make_algebra(spec);
    ConePoint x = make_cone_point(bounded_positive(alg, rng));
    ConePoint y = make_cone_point(bounded_positive(alg, rng));
    LiftResult lift = horizontal_lift(geodesic_path(x, y), 1000, 11);
    for (int i = 0; i < lift.times.size(); ++i) {
      Mat closed = isometric_lift_of_geodesic(x, y, lift.times[i]);
      CHECK((lift.lift_ops[i] - closed).norm() < 1e-6 * (1.0 + closed.norm()));
    }
  }
}

TEST_CASE("quotient distance bounds sandwich the thompson distance") {
  Rng rng(114);
  for (const auto& spec : {"sym:2", "spin:4"}) {
    auto alg = make_algebra(spec);

    ConePoint x = make_cone_point(bounded_positive(alg, rng));
    auto same = quotient_distance_bounds(x, x);
    CHECK(same.first == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(same.second == doctest::Approx(0.0).epsilon(1e-8));

    Element v = random_element(alg, rng, 0.8);
    ConePoint one = make_cone_point(unit(alg));
    ConePoint ev = make_cone_point(exp_element(v));
    auto from_one = quotient_distance_bounds(one, ev);
    CHECK(from_one.first == doctest::Approx(jb_norm(v)).epsilon(1e-9));
    CHECK(from_one.second == doctest::Approx(jb_norm(v)).epsilon(1e-5));

    for (int trial = 0; trial < 3; ++trial) {
      ConePoint a = make_cone_point(bounded_positive(alg, rng));
      ConePoint b = make_cone_point(bounded_positive(alg, rng));
      auto bounds = quotient_distance_bounds(a, b);
      CHECK(bounds.second >= bounds.first - 1e-9);
      CHECK(bounds.second - bounds.first < 1e-5);
    }
  }
}

TEST_CASE("one-parameter horizontal groups are shorter than perturbed paths") {
  Rng rng(115);
  auto alg = make_algebra("sym:2");
  Element v = random_element(alg, rng, 0.8);
  Mat lv = L_operator(v);
  GroupPath base{[&](double t) { return op_exp(Mat(t * lv)); },
                 [&](double t) { return Mat(lv * op_exp(Mat(t * lv))); }, 1e-5};
  double base_len = group_path_length(alg, base, 64);

  for (int c = 0; c < 10; ++c) {
    Mat s1 = L_operator(random_element(alg, rng, 0.4)) +
             0.4 * random_derivation(alg, rng);
    Mat s2 = L_operator(random_element(alg, rng, 0.4)) +
             0.4 * random_derivation(alg, rng);
    auto phase = [=](double t) {
      return Mat(std::sin(M_PI * t) * s1 + std::sin(2.0 * M_PI * t) * s2);
    };
    GroupPath comp{[=](double t) { return Mat(op_exp(Mat(t * lv)) * op_exp(phase(t))); },
                   {},
                   1e-5};
    double len = group_path_length(alg, comp, 64);
    CHECK(len >= base_len - 1e-7);
  }
}
