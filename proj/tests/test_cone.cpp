#include <cmath>

#include "doctest.h"
#include "jordan/cone.hpp"
#include "jordan/structure.hpp"
#include "test_support.hpp"

using namespace jordan;
using testsup::bounded_positive;
using testsup::diag2;

namespace {

ConePoint cp(const Element& x) { return make_cone_point(x); }

}  // namespace

TEST_CASE("cone point caches and invariant") {
  Rng rng(71);
  for (const auto& spec : testsup::algebra_specs()) {
    auto alg = make_algebra(spec);
    for (int t = 0; t < 25; ++t) {
      ConePoint p = cp(bounded_positive(alg, rng));
      CHECK(jb_norm(apply_U(p.sqrt_p, unit(alg)) - p.p) < 1e-9 * (1.0 + jb_norm(p.p)));
      CHECK(jb_norm(jordan_product(p.inv_p, p.p) - unit(alg)) < 1e-9);
      CHECK(jb_norm(exp_element(p.log_p) - p.p) < 1e-9 * (1.0 + jb_norm(p.p)));
    }
  }
  CHECK_THROWS_AS((void)cp(diag2(make_algebra("sym:2"), 1.0, -1.0)), std::domain_error);
}

TEST_CASE("mu examples and symmetric-space axioms") {
  auto sym2 = make_algebra("sym:2");
  ConePoint x = cp(diag2(sym2, 2, 3)), one = cp(unit(sym2));
  CHECK(jb_norm(mu(one, x) - inverse(x.p)) < 1e-13);
  CHECK(jb_norm(mu(x, x) - x.p) < 1e-13);
  CHECK(jb_norm(mu(x, one) - diag2(sym2, 4, 9)) < 1e-13);

  Rng rng(72);
  for (const auto& spec : testsup::algebra_specs()) {
    auto alg = make_algebra(spec);
    for (int t = 0; t < 50; ++t) {
      ConePoint a = cp(bounded_positive(alg, rng));
      ConePoint b = cp(bounded_positive(alg, rng));
      ConePoint c = cp(bounded_positive(alg, rng));
      // (S1), (S2), (S3)
      CHECK(jb_norm(mu(a, a) - a.p) < 1e-9 * (1.0 + jb_norm(a.p)));
      CHECK(jb_norm(mu(a, cp(mu(a, b))) - b.p) < 1e-8 * (1.0 + jb_norm(b.p)));
      Element lhs = mu(a, cp(mu(b, c)));
      Element rhs = mu(cp(mu(a, b)), cp(mu(a, c)));
      CHECK(jb_norm(lhs - rhs) < 1e-8 * (1.0 + jb_norm(lhs)));

      // Str acts by mu automorphisms; probe with U-operators
      Element w = bounded_positive(alg, rng);
      Mat g = U_operator(w);
      Element lhs2 = apply_op(g, mu(a, b));
      Element rhs2 = mu(cp(apply_op(g, a.p)), cp(apply_op(g, b.p)));
      CHECK(jb_norm(lhs2 - rhs2) < 1e-8 * (1.0 + jb_norm(lhs2)));
    }
  }
}

TEST_CASE("mu_star against the finite-difference oracle") {
  Rng rng(73);
  for (const auto& spec : testsup::algebra_specs()) {
    auto alg = make_algebra(spec);
    for (int t = 0; t < 25; ++t) {
      ConePoint x = cp(bounded_positive(alg, rng));
      ConePoint y = cp(bounded_positive(alg, rng));
      Element v = random_element(alg, rng, 1.0);
      Element w = random_element(alg, rng, 1.0);

      Element got = mu_star(Tangent{x, v}, Tangent{y, w});
      const double h = 1e-4;
      Element plus = apply_U(x.p + h * v, inverse(y.p + h * w));
      Element minus = apply_U(x.p - h * v, inverse(y.p - h * w));
      Element fd = (1.0 / (2.0 * h)) * (plus - minus);
      CHECK(jb_norm(got - fd) < 2e-6 * (1.0 + jb_norm(got)));

      CHECK(jb_norm(mu_star(Tangent{x, zero(alg)}, Tangent{y, zero(alg)})) < 1e-12);
    }
  }
  // x = y = 1, v = 0 gives -w
  auto alg = make_algebra("spin:4");
  ConePoint one = cp(unit(alg));
  Element w = random_element(alg, rng, 1.0);
  CHECK(jb_norm(mu_star(Tangent{one, zero(alg)}, Tangent{one, w}) + w) < 1e-13);
}

TEST_CASE("spray and christoffel") {
  auto sym2 = make_algebra("sym:2");
  ConePoint one = cp(unit(sym2));
  Rng rng(74);
  Element v = random_element(sym2, rng, 1.0);
  CHECK(jb_norm(spray(one, v) - square(v)) < 1e-13);

  // sym(2) oracle: v x^{-1} v
  ConePoint x = cp(diag2(sym2, 1, 4));
  Element s = spray(x, diag2(sym2, 2, 6));
  CHECK(jb_norm(s - diag2(sym2, 4, 9)) < 1e-13);

  for (const auto& spec : testsup::algebra_specs()) {
    auto alg = make_algebra(spec);
    for (int t = 0; t < 50; ++t) {
      ConePoint p = cp(bounded_positive(alg, rng));
      Element a = random_element(alg, rng, 1.0);
      Element b = random_element(alg, rng, 1.0);
      CHECK(jb_norm(christoffel(p, a, a) - spray(p, a)) <
            1e-12 * (1.0 + jb_norm(spray(p, a))));
      Element pol = 0.5 * (spray(p, a + b) - spray(p, a) - spray(p, b));
      CHECK(jb_norm(christoffel(p, a, b) - pol) < 1e-10 * (1.0 + jb_norm(pol)));
    }
  }
}

TEST_CASE("geodesics") {
  auto sym2 = make_algebra("sym:2");
  ConePoint one = cp(unit(sym2));
  Element v = diag2(sym2, std::log(4.0), std::log(9.0));
  CHECK(jb_norm(geodesic(one, v, 0.5).p - diag2(sym2, 2, 3)) < 1e-12);

  Rng rng(75);
  for (const auto& spec : testsup::algebra_specs()) {
    auto alg = make_algebra(spec);
    for (int t = 0; t < 10; ++t) {
      ConePoint p = cp(bounded_positive(alg, rng));
      Element w = random_element(alg, rng, 1.0);

      CHECK(jb_norm(geodesic(p, zero(alg), 0.7).p - p.p) < 1e-10 * (1.0 + jb_norm(p.p)));
      CHECK(jb_norm(geodesic(p, w, 0.0).p - p.p) < 1e-12 * (1.0 + jb_norm(p.p)));

      // alpha'(0) = v by central differences
      const double h = 1e-5;
      Element fd = (1.0 / (2.0 * h)) * (geodesic(p, w, h).p - geodesic(p, w, -h).p);
      CHECK(jb_norm(fd - w) < 2e-7 * (1.0 + jb_norm(w)));

      // geodesic ODE alpha'' = U_{alpha'}(alpha^{-1}) at interior times
      const double hh = 1e-4;
      for (int k = 1; k <= 11; ++k) {
        double tt = k / 12.0;
        Element am = geodesic(p, w, tt - hh).p, a0 = geodesic(p, w, tt).p,
                ap = geodesic(p, w, tt + hh).p;
        Element accel = (1.0 / (hh * hh)) * (ap - 2.0 * a0 + am);
        Element vel = (1.0 / (2.0 * hh)) * (ap - am);
        Element rhs = apply_U(vel, inverse(a0));
        CHECK(jb_norm(accel - rhs) < 1e-6 * (1.0 + jb_norm(accel)));
        CHECK(jb_norm(geodesic_velocity(p, w, tt) - vel) < 1e-6 * (1.0 + jb_norm(vel)));
      }
    }
  }
}

TEST_CASE("geodesic between points and log map") {
  auto sym2 = make_algebra("sym:2");
  ConePoint one = cp(unit(sym2));
  ConePoint q = cp(diag2(sym2, 4, 9));
  CHECK(jb_norm(geodesic_between(one, q, 0.5).p - diag2(sym2, 2, 3)) < 1e-12);

  Rng rng(76);
  for (const auto& spec : testsup::algebra_specs()) {
    auto alg = make_algebra(spec);
    for (int t = 0; t < 25; ++t) {
      ConePoint x = cp(bounded_positive(alg, rng));
      ConePoint y = cp(bounded_positive(alg, rng));
      CHECK(jb_norm(geodesic_between(x, y, 0.0).p - x.p) < 1e-9 * (1.0 + jb_norm(x.p)));
      CHECK(jb_norm(geodesic_between(x, y, 1.0).p - y.p) < 1e-9 * (1.0 + jb_norm(y.p)));
      CHECK(jb_norm(geodesic_between(x, x, 0.37).p - x.p) < 1e-9 * (1.0 + jb_norm(x.p)));

      // exp/log inversion
      Element v = log_map(x, y);
      CHECK(jb_norm(geodesic(x, v, 1.0).p - y.p) < 1e-8 * (1.0 + jb_norm(y.p)));

      Element w = random_element(alg, rng, 1.0);
      CHECK(jb_norm(log_map(cp(unit(alg)), cp(exp_element(w))) - w) <
            1e-9 * (1.0 + jb_norm(w)));
    }
  }
}

TEST_CASE("parallel transport: closed form, ODE oracle, isometry") {
  Rng rng(77);
  for (const auto& spec : testsup::algebra_specs()) {
    auto alg = make_algebra(spec);
    for (int t = 0; t < 8; ++t) {
      ConePoint x = cp(bounded_positive(alg, rng));
      ConePoint y = cp(bounded_positive(alg, rng));
      Element w = random_element(alg, rng, 1.0);

      CHECK(jb_norm(parallel_transport(x, y, 0.0, w) - w) < 1e-12);

      Element got = parallel_transport(x, y, 1.0, w);
      Element ode = parallel_transport_ode(x, y, 1.0, w);
      CHECK(jb_norm(got - ode) < 1e-7 * (1.0 + jb_norm(got)));

      // transport also matches the assembled operator
      Element via_op = apply_op(transport_operator(x, y, 1.0), w);
      CHECK(jb_norm(got - via_op) < 1e-11 * (1.0 + jb_norm(got)));

      // transport is an isometry of the Finsler norm
      for (double tt : {0.3, 1.0}) {
        Element pw = parallel_transport(x, y, tt, w);
        ConePoint at = geodesic_between(x, y, tt);
        double before = jb_norm(apply_U(x.inv_sqrt_p, w));
        double after = jb_norm(apply_U(at.inv_sqrt_p, pw));
        CHECK(std::abs(after - before) < 1e-8 * (1.0 + before));
      }
    }
  }

  // commuting case: transport from 1 toward exp(v) is U_{exp(tv/2)}
  auto alg = make_algebra("sym:3");
  Element v = random_element(alg, rng, 1.0);
  ConePoint one = cp(unit(alg));
  ConePoint target = cp(exp_element(v));
  Element w = jordan_product(v, v) + 0.3 * v;  // same eigenbasis
  for (double tt : {0.25, 0.75}) {
    Element got = parallel_transport(one, target, tt, w);
    Element expect = apply_U(exp_element((0.5 * tt) * v), w);
    CHECK(jb_norm(got - expect) < 1e-10 * (1.0 + jb_norm(expect)));
  }
}

TEST_CASE("curvature") {
  Rng rng(78);
  for (const auto& spec : testsup::algebra_specs()) {
    auto alg = make_algebra(spec);
    for (int t = 0; t < 25; ++t) {
      ConePoint p = cp(bounded_positive(alg, rng));
      Element V = random_element(alg, rng, 1.0);
      Element W = random_element(alg, rng, 1.0);
      Element Z = random_element(alg, rng, 1.0);

      Element a = curvature(p, V, W, Z);
      Element b = curvature_nested(p, V, W, Z);
      CHECK(jb_norm(a - b) < 1e-10 * (1.0 + jb_norm(a)));

      CHECK(jb_norm(curvature(p, V, V, Z)) < 1e-12);
      CHECK(jb_norm(curvature(p, V, W, Z) + curvature(p, W, V, Z)) < 1e-12);
    }
  }

  // R_1(V,W)V = (L_v^2 - U_v) w at the unit
  auto alg = make_algebra("sym:3");
  ConePoint one = cp(unit(alg));
  Element V = random_element(alg, rng, 1.0);
  Element W = random_element(alg, rng, 1.0);
  Mat lv = L_operator(V);
  Element expect = apply_op(Mat(lv * lv - U_operator(V)), W);
  CHECK(jb_norm(curvature(one, V, W, V) - expect) < 1e-10 * (1.0 + jb_norm(expect)));

  // nonpositive sectional curvature probe: <R(v,w)w, v> <= 0 in the trace form
  for (int t = 0; t < 50; ++t) {
    Element v = random_element(alg, rng, 1.0);
    Element w = random_element(alg, rng, 1.0);
    Element rv = curvature(one, v, w, w);
    double sec = L_operator(jordan_product(rv, v)).trace();
    CHECK(sec <= 1e-10);
  }

  // commuting directions are flat
  auto sym2 = make_algebra("sym:2");
  Element D1 = diag2(sym2, 1.0, 2.0);
  Element D2 = diag2(sym2, -3.0, 0.5);
  ConePoint pp = cp(diag2(sym2, 1.0, 1.0));
  CHECK(jb_norm(curvature(pp, D1, D2, D1)) < 1e-13);

  // associative-commutative case: curvature vanishes identically
  auto rn = make_algebra("rn:4");
  ConePoint q = cp(bounded_positive(rn, rng));
  for (int t = 0; t < 20; ++t)
    CHECK(jb_norm(curvature(q, random_element(rn, rng, 1.0),
                            random_element(rn, rng, 1.0),
                            random_element(rn, rng, 1.0))) < 1e-14);
}

TEST_CASE("killing flow") {
  Rng rng(79);
  for (const auto& spec : testsup::algebra_specs()) {
    auto alg = make_algebra(spec);
    ConePoint p = cp(bounded_positive(alg, rng));
    Element x = random_element(alg, rng, 1.0);

    CHECK(jb_norm(killing_flow(zero(alg), p, 0.8).p - p.p) < 1e-12);
    CHECK(jb_norm(killing_flow(x, cp(unit(alg)), 1.0).p - exp_element(x)) <
          1e-9 * (1.0 + jb_norm(x)));

    // derivative at zero is p o x
    const double h = 1e-5;
    Element fd = (1.0 / (2.0 * h)) * (killing_flow(x, p, h).p - killing_flow(x, p, -h).p);
    CHECK(jb_norm(fd - jordan_product(p.p, x)) < 2e-6 * (1.0 + jb_norm(fd)));

    // flow property and mu equivariance
    Element once = killing_flow(x, cp(killing_flow(x, p, 0.4).p), 0.6).p;
    CHECK(jb_norm(once - killing_flow(x, p, 1.0).p) < 1e-9 * (1.0 + jb_norm(once)));

    ConePoint b = cp(bounded_positive(alg, rng));
    Element lhs = killing_flow(x, cp(mu(p, b)), 0.5).p;
    Element rhs = mu(cp(killing_flow(x, p, 0.5).p), cp(killing_flow(x, b, 0.5).p));
    CHECK(jb_norm(lhs - rhs) < 1e-8 * (1.0 + jb_norm(lhs)));
  }
}

TEST_CASE("thompson distance") {
  auto sym2 = make_algebra("sym:2");
  ConePoint p = cp(diag2(sym2, 1, 4));
  ConePoint q = cp(diag2(sym2, 4, 1));
  CHECK(thompson_distance(p, q) == doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK(thompson_distance(p, p) == doctest::Approx(0.0).epsilon(1e-12));

  Rng rng(80);
  for (const auto& spec : testsup::algebra_specs()) {
    auto alg = make_algebra(spec);
    for (int t = 0; t < 50; ++t) {
      ConePoint a = cp(bounded_positive(alg, rng));
      ConePoint b = cp(bounded_positive(alg, rng));
      ConePoint c = cp(bounded_positive(alg, rng));

      double dab = thompson_distance(a, b);
      CHECK(std::abs(dab - thompson_distance(b, a)) < 1e-9 * (1.0 + dab));
      CHECK(dab + 1e-12 >= 0.0);
      CHECK(thompson_distance(a, c) <= dab + thompson_distance(b, c) + 1e-12);

      // invariance under the inner structure group
      Element g = bounded_positive(alg, rng);
      ConePoint ga = cp(apply_U(g, a.p)), gb = cp(apply_U(g, b.p));
      CHECK(std::abs(thompson_distance(ga, gb) - dab) < 1e-8 * (1.0 + dab));
    }
  }
}

TEST_CASE("lie velocity: quadrature vs finite differences") {
  Rng rng(81);
  for (const auto& spec : testsup::algebra_specs()) {
    auto alg = make_algebra(spec);
    for (int t = 0; t < 25; ++t) {
      Element g = random_element(alg, rng, 1.0);
      Element gdot = random_element(alg, rng, 1.0);
      Element a = lie_velocity(g, gdot);
      Element b = lie_velocity_fd(g, gdot);
      CHECK(jb_norm(a - b) < 1e-7 * (1.0 + jb_norm(a)));
    }
    // commuting pair keeps the velocity unchanged
    Element g = random_element(alg, rng, 1.0);
    Element gdot = square(g) + (-0.7) * g;
    CHECK(jb_norm(lie_velocity(g, gdot) - gdot) < 1e-9 * (1.0 + jb_norm(gdot)));
    CHECK(jb_norm(lie_velocity(zero(alg), gdot) - gdot) < 1e-11);
  }
}
