#pragma once

#include <Eigen/SVD>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jordan/group.hpp"
#include "jordan/parallel.hpp"
#include "jordan/report.hpp"

namespace jordan {

struct TolSpec {
  double threshold;
  char cmp;
};

// every tunable threshold, by check name; --tol overrides are validated here
inline const std::map<std::string, TolSpec>& tolerance_registry() {
  static const std::map<std::string, TolSpec> registry = {
      // identities
      {"jordan_identity", {1e-10, '<'}},
      {"product_commutativity", {1e-12, '<'}},
      {"unit_neutrality", {1e-13, '<'}},
      {"kernel_vs_structure_constants", {1e-12, '<'}},
      {"fundamental_formula", {1e-9, '<'}},
      {"u_bilinear_polarization", {1e-10, '<'}},
      {"v_definition", {1e-9, '<'}},
      {"v_identity_inverse", {1e-9, '<'}},
      {"v_identity_symmetric", {1e-9, '<'}},
      {"v_identity_bracket", {1e-9, '<'}},
      {"spectrum_reconstruction", {1e-8, '<'}},
      {"idempotent_orthogonality", {1e-8, '<'}},
      {"log_exp_inversion", {1e-9, '<'}},
      {"inverse_u_criterion", {1e-9, '<'}},
      {"invertibility_iff_u", {0.5, '<'}},
      {"exp_in_cone", {0.5, '<'}},
      {"jb_submultiplicative", {1e-12, '<'}},
      {"jb_square_identity", {1e-12, '<'}},
      {"jb_square_monotone", {1e-12, '<'}},
      {"gauge_triangle", {1e-12, '<'}},
      {"gauge_homogeneity", {1e-12, '<'}},
      {"gauge_aut_invariance", {1e-8, '<'}},
      {"cartan_ll_der", {1e-10, '<'}},
      {"cartan_lder_l", {1e-10, '<'}},
      {"cartan_derder_der", {1e-10, '<'}},
      {"split_reconstruction", {1e-12, '<'}},
      {"derivation_kills_unit", {1e-10, '<'}},
      {"dagger_anti_bracket", {1e-9, '<'}},
      {"sigma_star_homomorphism", {1e-9, '<'}},
      {"overline_vs_sigma_star", {1e-9, '<'}},
      {"str_membership_members", {1e-9, '<'}},
      {"str_membership_generic", {1e-3, '>'}},
      {"automorphism_exp_derivation", {1e-8, '<'}},
      {"aut_preserves_spectrum", {1e-8, '<'}},
      {"sigma_involution", {1e-8, '<'}},
      {"sigma_fixes_automorphisms", {1e-8, '<'}},
      {"sigma_u_inverse", {1e-8, '<'}},
      {"op_exp_u_identity", {1e-9, '<'}},
      {"op_exp_inverse_pair", {1e-10, '<'}},
      {"op_norm_identity", {1e-15, '<'}},
      {"op_norm_l_operator", {1e-9, '<'}},
      {"op_norm_homogeneity", {1e-9, '<'}},
      {"birkhoff_lx_lower", {1e-10, '<'}},
      {"birkhoff_der_lower", {1e-10, '<'}},
      // geometry: the cone as a symmetric space
      {"mu_s1", {1e-9, '<'}},
      {"mu_s2", {1e-8, '<'}},
      {"mu_s3", {1e-8, '<'}},
      {"mu_str_invariance", {1e-8, '<'}},
      {"mu_star_fd", {2e-6, '<'}},
      {"spray_polarization", {1e-10, '<'}},
      {"christoffel_diag_spray", {1e-12, '<'}},
      {"geodesic_ode", {1e-6, '<'}},
      {"geodesic_initial_speed", {1e-6, '<'}},
      {"geodesic_endpoints", {1e-9, '<'}},
      {"exp_log_inversion", {1e-8, '<'}},
      {"transport_closed_vs_ode", {1e-7, '<'}},
      {"transport_isometry", {1e-8, '<'}},
      {"transport_gauge_isometry", {1e-8, '<'}},
      {"curvature_two_routes", {1e-10, '<'}},
      {"curvature_antisymmetry", {1e-12, '<'}},
      {"curvature_unit_formula", {1e-10, '<'}},
      {"curvature_flat_rn", {1e-14, '<'}},
      {"killing_derivative", {2e-6, '<'}},
      {"killing_flow_property", {1e-9, '<'}},
      {"killing_preserves_mu", {1e-8, '<'}},
      {"thompson_symmetry", {1e-9, '<'}},
      {"thompson_invariance", {1e-8, '<'}},
      {"thompson_triangle", {1e-12, '<'}},
      {"convexity_probe", {1e-8, '<'}},
      {"velocity_identity", {1e-7, '<'}},
      // geometry: the group connection
      {"group_spray_routes", {1e-10, '<'}},
      {"group_spray_horizontal", {1e-10, '<'}},
      {"group_spray_vertical", {1e-10, '<'}},
      {"group_christoffel_formula", {1e-10, '<'}},
      {"group_geodesic_ode", {1e-6, '<'}},
      {"group_velocity_body", {1e-6, '<'}},
      {"totally_geodesic_aut", {1e-7, '<'}},
      {"totally_geodesic_cone", {1e-7, '<'}},
      {"group_transport_closed_vs_ode", {1e-7, '<'}},
      {"group_transport_velocity", {1e-7, '<'}},
      {"metric_positive_definite", {0.0, '>'}},
      {"metric_lx_d_orthogonal", {1e-10, '<'}},
      {"metric_compatibility", {2e-6, '<'}},
      // minimality
      {"minimality_order", {1e-7, '<'}},
      {"minimality_lp1", {1e-7, '<'}},
      {"minimality_lp2", {1e-7, '<'}},
      {"minimality_kyfan_half", {1e-7, '<'}},
      {"minimality_kyfan_full", {1e-7, '<'}},
      {"geodesic_length_closed_form", {1e-6, '<'}},
      {"gauge_finsler_invariance", {1e-8, '<'}},
      // lifts and the quotient
      {"lift_base", {1e-7, '<'}},
      {"lift_horizontality", {1e-6, '<'}},
      {"lift_automorphism", {1e-6, '<'}},
      {"lift_isometry", {1e-5, '<'}},
      {"lift_geodesic_closed_form", {1e-6, '<'}},
      {"lift_from_unit_k_identity", {1e-8, '<'}},
      {"quotient_map_roundtrip", {1e-9, '<'}},
      {"quotient_norm_lower_sandwich", {1e-9, '<'}},
      {"quotient_norm_attained", {1e-9, '<'}},
      {"quotient_distance_sandwich", {1e-5, '<'}},
      {"quotient_sandwich_order", {1e-9, '<'}},
      {"group_minimality_margin", {1e-7, '<'}},
  };
  return registry;
}

inline void validate_config(const SuiteConfig& cfg) {
  for (const auto& [name, value] : cfg.tol_overrides) {
    (void)value;
    if (tolerance_registry().find(name) == tolerance_registry().end())
      throw std::invalid_argument("unknown tolerance name: " + name);
  }
}

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

// append-a-check helper carrying the config's overrides
class SuiteBuilder {
 public:
  SuiteBuilder(SuiteReport& report, const SuiteConfig& cfg) : report_(report), cfg_(cfg) {}

  std::uint64_t seed_for(const std::string& name) const {
    return derive_seed(cfg_.seed, fnv1a(name));
  }

  void add(const std::string& name, int trials, double value) {
    TolSpec spec = tolerance_registry().at(name);
    auto it = cfg_.tol_overrides.find(name);
    if (it != cfg_.tol_overrides.end()) spec.threshold = it->second;
    CheckRecord rec{name, trials, value, spec.threshold, spec.cmp,
                    spec.cmp == '<' ? value < spec.threshold : value > spec.threshold};
    report_.checks.push_back(std::move(rec));
  }

  // max over parallel independently-seeded trials
  template <typename Fn>
  void max_check(const std::string& name, int trials, Fn&& fn) {
    std::vector<double> vals(static_cast<size_t>(std::max(trials, 0)), 0.0);
    std::uint64_t base = seed_for(name);
    parallel_for(trials, [&](int i) {
      Rng rng(derive_seed(base, static_cast<std::uint64_t>(i)));
      vals[static_cast<size_t>(i)] = fn(rng);
    });
    double worst = 0;
    for (double v : vals) worst = std::max(worst, v);
    add(name, trials, worst);
  }

  // min over parallel independently-seeded trials
  template <typename Fn>
  void min_check(const std::string& name, int trials, Fn&& fn) {
    std::vector<double> vals(static_cast<size_t>(std::max(trials, 0)), 0.0);
    std::uint64_t base = seed_for(name);
    parallel_for(trials, [&](int i) {
      Rng rng(derive_seed(base, static_cast<std::uint64_t>(i)));
      vals[static_cast<size_t>(i)] = fn(rng);
    });
    double best = std::numeric_limits<double>::infinity();
    for (double v : vals) best = std::min(best, v);
    add(name, trials, best);
  }

 private:
  SuiteReport& report_;
  const SuiteConfig& cfg_;
};

inline Element sample_bounded_positive(const AlgebraPtr<double>& alg, Rng& rng,
                                       double bound = 1.2) {
  Element g = random_element(alg, rng, 1.0);
  double n = jb_norm(g);
  if (n > bound) g = (bound / n) * g;
  return exp_element(g);
}

inline GroupElement sample_group_element(const AlgebraPtr<double>& alg, Rng& rng) {
  Mat g = U_operator(sample_bounded_positive(alg, rng)) *
          op_exp(Mat(0.7 * random_derivation(alg, rng)));
  return make_group_element(alg, g);
}

inline Mat sample_str_body(const AlgebraPtr<double>& alg, Rng& rng) {
  return L_operator(random_element(alg, rng, 1.0)) + random_derivation(alg, rng);
}

template <typename F>
SuiteReport timed_suite(const std::string& name, const SuiteConfig& cfg, F&& body) {
  validate_config(cfg);
  SuiteReport report;
  report.suite = name;
  report.config = cfg;
  auto t0 = std::chrono::steady_clock::now();
  if (cfg.trials > 0) body(report);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// identities suite: the algebraic layer

inline SuiteReport run_identities(const SuiteConfig& cfg) {
  return detail::timed_suite("identities", cfg, [&](SuiteReport& report) {
    auto alg = make_algebra(cfg.algebra);
    detail::SuiteBuilder b(report, cfg);
    const int n = cfg.trials;
    auto capped = [&](int cap) { return std::min(n, cap); };

    b.max_check("jordan_identity", n, [&](Rng& rng) {
      Element x = random_element(alg, rng, 1.0), y = random_element(alg, rng, 1.0);
      Element lhs = jordan_product(square(x), jordan_product(x, y));
      Element rhs = jordan_product(x, jordan_product(square(x), y));
      double nx = jb_norm(x), ny = jb_norm(y);
      return jb_norm(lhs - rhs) / (1e-12 + nx * nx * nx * ny);
    });

    b.max_check("product_commutativity", n, [&](Rng& rng) {
      Element x = random_element(alg, rng, 1.0), y = random_element(alg, rng, 1.0);
      return jb_norm(jordan_product(x, y) - jordan_product(y, x)) /
             (1e-12 + jb_norm(x) * jb_norm(y));
    });

    b.max_check("unit_neutrality", n, [&](Rng& rng) {
      Element x = random_element(alg, rng, 1.0);
      return jb_norm(jordan_product(unit(alg), x) - x) / (1.0 + jb_norm(x));
    });

    b.max_check("kernel_vs_structure_constants", n, [&](Rng& rng) {
      Element x = random_element(alg, rng, 1.0), y = random_element(alg, rng, 1.0);
      return jb_norm(jordan_product(x, y) - jordan_product_generic(x, y)) /
             (1e-12 + jb_norm(x) * jb_norm(y));
    });

    b.max_check("fundamental_formula", n, [&](Rng& rng) {
      Element x = random_element(alg, rng, 1.0), y = random_element(alg, rng, 1.0);
      Mat ux = U_operator(x), uy = U_operator(y);
      Mat rhs = ux * uy * ux;
      return (U_operator(apply_U(x, y)) - rhs).norm() / (1.0 + rhs.norm());
    });

    b.max_check("u_bilinear_polarization", n, [&](Rng& rng) {
      Element x = random_element(alg, rng, 1.0), y = random_element(alg, rng, 1.0);
      Mat direct = U_bilinear(x, y);
      Mat pol = 0.5 * (U_operator(x + y) - U_operator(x) - U_operator(y));
      return (direct - pol).norm() / (1.0 + pol.norm());
    });

    b.max_check("v_definition", n, [&](Rng& rng) {
      Element x = random_element(alg, rng, 1.0), y = random_element(alg, rng, 1.0);
      Element z = random_element(alg, rng, 1.0);
      Element lhs = apply_op(V_operator(x, y), z);
      Element rhs = apply_U_bilinear(x, z, y);
      return jb_norm(lhs - rhs) / (1.0 + jb_norm(rhs));
    });

    b.max_check("v_identity_inverse", n, [&](Rng& rng) {
      Element p = detail::sample_bounded_positive(alg, rng);
      Element y = random_element(alg, rng, 1.0);
      Mat lhs = U_operator(inverse(p)) * U_bilinear(p, y);
      Mat rhs = V_operator(inverse(p), y);
      return (lhs - rhs).norm() / (1.0 + rhs.norm());
    });

    b.max_check("v_identity_symmetric", n, [&](Rng& rng) {
      Element a = random_element(alg, rng, 1.0), c = random_element(alg, rng, 1.0);
      Mat lhs = V_operator(a, c) + V_operator(c, a);
      Mat rhs = L_operator(2.0 * jordan_product(a, c));
      return (lhs - rhs).norm() / (1.0 + rhs.norm());
    });

    b.max_check("v_identity_bracket", n, [&](Rng& rng) {
      Element a = random_element(alg, rng, 1.0), c = random_element(alg, rng, 1.0);
      Mat lhs = V_operator(a, c) - V_operator(c, a);
      Mat rhs = 2.0 * commutator(L_operator(a), L_operator(c));
      return (lhs - rhs).norm() / (1.0 + rhs.norm());
    });

    b.max_check("spectrum_reconstruction", n, [&](Rng& rng) {
      Element x = random_element(alg, rng, 1.0);
      return jb_norm(reconstruct(spectral_decompose(x)) - x) / (1.0 + jb_norm(x));
    });

    b.max_check("idempotent_orthogonality", n, [&](Rng& rng) {
      Element x = random_element(alg, rng, 1.0);
      Spectrum s = spectral_decompose(x);
      double worst = 0;
      Element total = zero(alg);
      for (size_t i = 0; i < s.idempotents.size(); ++i) {
        total = total + s.idempotents[i];
        for (size_t j = 0; j < s.idempotents.size(); ++j) {
          Element prod = jordan_product(s.idempotents[i], s.idempotents[j]);
          Element expect = (i == j) ? s.idempotents[i] : zero(alg);
          worst = std::max(worst, jb_norm(prod - expect));
        }
      }
      return std::max(worst, jb_norm(total - unit(alg)));
    });

    b.max_check("log_exp_inversion", n, [&](Rng& rng) {
      Element x = random_element(alg, rng, 1.0);
      double nx = jb_norm(x);
      if (nx > 2.0) x = (2.0 / nx) * x;
      return jb_norm(log_element(exp_element(x)) - x) / (1.0 + jb_norm(x));
    });

    b.max_check("inverse_u_criterion", n, [&](Rng& rng) {
      Element x = random_element(alg, rng, 1.0);
      if (!is_invertible(x)) return 0.0;
      Element xi = inverse(x);
      double r1 = jb_norm(apply_U(x, xi) - x);
      double r2 = jb_norm(apply_U(x, square(xi)) - unit(alg));
      return std::max(r1, r2) / (1.0 + jb_norm(x));
    });

    b.max_check("invertibility_iff_u", capped(200), [&](Rng& rng) {
      // random draw plus a constructed singular element
      Element x = random_element(alg, rng, 1.0);
      Element c = spectral_decompose(random_element(alg, rng, 1.0)).idempotents[0];
      double bad = 0;
      for (const Element* e : {&x, &c}) {
        Eigen::JacobiSVD<Mat> svd(U_operator(*e));
        double smin = svd.singularValues().minCoeff();
        double smax = svd.singularValues().maxCoeff();
        bool op_invertible_clear = smin > 1e-8 * (1.0 + smax);
        bool op_singular_clear = smin < 1e-14 * (1.0 + smax);
        bool elem = is_invertible(*e);
        if (elem && op_singular_clear) bad += 1.0;
        if (!elem && op_invertible_clear) bad += 1.0;
      }
      return bad;
    });

    b.max_check("exp_in_cone", n, [&](Rng& rng) {
      return in_cone(exp_element(random_element(alg, rng, 1.0))) ? 0.0 : 1.0;
    });

    b.max_check("jb_submultiplicative", n, [&](Rng& rng) {
      Element x = random_element(alg, rng, 1.0), y = random_element(alg, rng, 1.0);
      double slack = jb_norm(jordan_product(x, y)) - jb_norm(x) * jb_norm(y);
      return std::max(0.0, slack) / (1e-12 + jb_norm(x) * jb_norm(y));
    });

    b.max_check("jb_square_identity", n, [&](Rng& rng) {
      Element x = random_element(alg, rng, 1.0);
      double nx = jb_norm(x);
      return std::abs(jb_norm(square(x)) - nx * nx) / (1e-12 + nx * nx);
    });

    b.max_check("jb_square_monotone", n, [&](Rng& rng) {
      Element x = random_element(alg, rng, 1.0), y = random_element(alg, rng, 1.0);
      double slack = jb_norm(square(x)) - jb_norm(square(x) + square(y));
      return std::max(0.0, slack) / (1.0 + jb_norm(square(x)));
    });

    const std::vector<GaugeFunction> gauges = {
        GaugeFunction::lp(1), GaugeFunction::lp(2), GaugeFunction::kyfan(1),
        GaugeFunction::kyfan(alg->rank)};

    b.max_check("gauge_triangle", n, [&](Rng& rng) {
      Element x = random_element(alg, rng, 1.0), y = random_element(alg, rng, 1.0);
      double worst = 0;
      for (const auto& phi : gauges) {
        double slack = gauge_norm(x + y, phi) - gauge_norm(x, phi) - gauge_norm(y, phi);
        worst = std::max(worst, slack / (1e-12 + gauge_norm(x, phi) + gauge_norm(y, phi)));
      }
      return std::max(worst, 0.0);
    });

    b.max_check("gauge_homogeneity", n, [&](Rng& rng) {
      Element x = random_element(alg, rng, 1.0);
      double c = 2.0 * rng.normal();
      double worst = 0;
      for (const auto& phi : gauges) {
        double base = gauge_norm(x, phi);
        worst = std::max(worst,
                         std::abs(gauge_norm(c * x, phi) - std::abs(c) * base) /
                             (1e-12 + std::abs(c) * base));
      }
      return worst;
    });

    b.max_check("gauge_aut_invariance", capped(200), [&](Rng& rng) {
      Element x = random_element(alg, rng, 1.0);
      Mat k = op_exp(random_derivation(alg, rng));
      Element kx = apply_op(k, x);
      double worst = 0;
      for (const auto& phi : gauges)
        worst = std::max(worst, std::abs(gauge_norm(kx, phi) - gauge_norm(x, phi)) /
                                    (1.0 + gauge_norm(x, phi)));
      return worst;
    });

    b.max_check("cartan_ll_der", capped(300), [&](Rng& rng) {
      Mat d = commutator(L_operator(random_element(alg, rng, 1.0)),
                         L_operator(random_element(alg, rng, 1.0)));
      StrDecomposition s = split_str(alg, d);
      return std::max(jb_norm(s.l_part) / (1.0 + d.norm()), s.derivation_residual);
    });

    b.max_check("cartan_lder_l", capped(300), [&](Rng& rng) {
      Mat d = random_derivation(alg, rng);
      Mat ld = commutator(L_operator(random_element(alg, rng, 1.0)), d);
      StrDecomposition s = split_str(alg, ld);
      return s.der_part.norm() / (1.0 + ld.norm());
    });

    b.max_check("cartan_derder_der", capped(300), [&](Rng& rng) {
      Mat d1 = random_derivation(alg, rng), d2 = random_derivation(alg, rng);
      Mat dd = commutator(d1, d2);
      StrDecomposition s = split_str(alg, dd);
      return std::max(jb_norm(s.l_part) / (1.0 + dd.norm()), s.derivation_residual);
    });

    b.max_check("split_reconstruction", capped(300), [&](Rng& rng) {
      Element v = random_element(alg, rng, 1.0);
      Mat d = random_derivation(alg, rng);
      Mat h = L_operator(v) + d;
      StrDecomposition s = split_str(alg, h);
      double rec = (L_operator(s.l_part) + s.der_part - h).norm() / (1.0 + h.norm());
      double parts = std::max(jb_norm(s.l_part - v), (s.der_part - d).norm());
      return std::max(rec, parts / (1.0 + h.norm()));
    });

    b.max_check("derivation_kills_unit", capped(300), [&](Rng& rng) {
      Mat d = random_derivation(alg, rng);
      return (d * alg->unit_coords).norm() / (1.0 + d.norm());
    });

    b.max_check("dagger_anti_bracket", capped(300), [&](Rng& rng) {
      Mat a = detail::sample_str_body(alg, rng), c = detail::sample_str_body(alg, rng);
      Mat lhs = dagger(alg, commutator(a, c));
      Mat rhs = -commutator(dagger(alg, a), dagger(alg, c));
      return (lhs - rhs).norm() / (1.0 + rhs.norm());
    });

    b.max_check("sigma_star_homomorphism", capped(300), [&](Rng& rng) {
      Mat a = detail::sample_str_body(alg, rng), c = detail::sample_str_body(alg, rng);
      Mat lhs = sigma_star(alg, commutator(a, c));
      Mat rhs = commutator(sigma_star(alg, a), sigma_star(alg, c));
      return (lhs - rhs).norm() / (1.0 + rhs.norm());
    });

    b.max_check("overline_vs_sigma_star", capped(300), [&](Rng& rng) {
      Mat a = detail::sample_str_body(alg, rng);
      return (overline(alg, a) - sigma_star(alg, a)).norm() / (1.0 + a.norm());
    });

    b.max_check("str_membership_members", capped(100), [&](Rng& rng) {
      Mat a = detail::sample_str_body(alg, rng);
      return in_structure_algebra(alg, a, 16, rng.next());
    });

    b.min_check("str_membership_generic", capped(100), [&](Rng& rng) {
      Mat h(alg->dim, alg->dim);
      for (int i = 0; i < alg->dim; ++i)
        for (int j = 0; j < alg->dim; ++j) h(i, j) = rng.normal();
      return in_structure_algebra(alg, h, 16, rng.next());
    });

    b.max_check("automorphism_exp_derivation", capped(200), [&](Rng& rng) {
      Mat k = op_exp(random_derivation(alg, rng));
      return is_automorphism(alg, k, 16, rng.next());
    });

    b.max_check("aut_preserves_spectrum", capped(200), [&](Rng& rng) {
      Mat k = op_exp(random_derivation(alg, rng));
      Element x = random_element(alg, rng, 1.0);
      return (eigenvalues_of(x) - eigenvalues_of(apply_op(k, x))).cwiseAbs().maxCoeff() /
             (1.0 + jb_norm(x));
    });

    b.max_check("sigma_involution", capped(200), [&](Rng& rng) {
      Mat g = detail::sample_group_element(alg, rng).op;
      return (sigma(alg, sigma(alg, g)) - g).norm() / (1.0 + g.norm());
    });

    b.max_check("sigma_fixes_automorphisms", capped(200), [&](Rng& rng) {
      Mat k = op_exp(random_derivation(alg, rng));
      return (sigma(alg, k) - k).norm() / (1.0 + k.norm());
    });

    b.max_check("sigma_u_inverse", capped(200), [&](Rng& rng) {
      Element p = detail::sample_bounded_positive(alg, rng);
      Mat lhs = sigma(alg, U_operator(p));
      Mat rhs = U_operator(inverse(p));
      return (lhs - rhs).norm() / (1.0 + rhs.norm());
    });

    b.max_check("op_exp_u_identity", capped(200), [&](Rng& rng) {
      Element x = random_element(alg, rng, 1.0);
      Mat lhs = op_exp(Mat(2.0 * L_operator(x)));
      Mat rhs = U_operator(exp_element(x));
      return (lhs - rhs).norm() / (1.0 + rhs.norm());
    });

    b.max_check("op_exp_inverse_pair", capped(200), [&](Rng& rng) {
      Mat h = detail::sample_str_body(alg, rng);
      return (op_exp(h) * op_exp(Mat(-h)) - Mat::Identity(alg->dim, alg->dim)).norm();
    });

    {
      auto r = op_norm(alg, Mat(Mat::Identity(alg->dim, alg->dim)));
      b.add("op_norm_identity", 1, std::abs(r.estimate - 1.0));
    }

    OpNormOpts light;
    light.restarts = 16;
    b.max_check("op_norm_l_operator", capped(50), [&](Rng& rng) {
      Element v = random_element(alg, rng, 1.0);
      OpNormOpts o = light;
      o.seed = rng.next();
      return std::abs(op_norm(alg, L_operator(v), o).estimate - jb_norm(v)) /
             (1.0 + jb_norm(v));
    });

    b.max_check("op_norm_homogeneity", capped(20), [&](Rng& rng) {
      Mat h = detail::sample_str_body(alg, rng);
      OpNormOpts o = light;
      o.seed = rng.next();
      double base = op_norm(alg, h, o).estimate;
      double scaled = op_norm(alg, Mat(-2.5 * h), o).estimate;
      return std::abs(scaled - 2.5 * base) / (1.0 + 2.5 * base);
    });

    const int birkhoff_pairs = capped(200);
    b.max_check("birkhoff_lx_lower", birkhoff_pairs, [&](Rng& rng) {
      Element x = random_element(alg, rng, 1.0);
      Mat d = random_derivation(alg, rng);
      OpNormOpts full;
      full.seed = rng.next();
      double est = op_norm(alg, Mat(L_operator(x) + d), full).estimate;
      double lb = op_norm(alg, L_operator(x), full).lower_bound;
      return std::max(0.0, lb - est);
    });

    b.max_check("birkhoff_der_lower", birkhoff_pairs, [&](Rng& rng) {
      Element x = random_element(alg, rng, 1.0);
      Mat d = random_derivation(alg, rng);
      OpNormOpts full;
      full.seed = rng.next();
      double est = op_norm(alg, Mat(L_operator(x) + d), full).estimate;
      double lb = op_norm(alg, d, full).lower_bound;
      return std::max(0.0, lb - est);
    });
  });
}

}  // namespace jordan

#include "jordan/suites_geometry.hpp"
#include "jordan/suites_experiments.hpp"
