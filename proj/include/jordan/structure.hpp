#pragma once

#include <Eigen/LU>
#include <cmath>
#include <stdexcept>

#include "jordan/rng.hpp"

namespace jordan {

// Decomposition str = L (+) der of an operator H: the L-component is
// L_{H(1)} and the remainder is a derivation when H lies in str. The
// derivation residual of the remainder is sampled so callers can gate.
template <typename Scalar>
struct StrDecompositionT {
  ElementT<Scalar> l_part;   // x such that the L-component is L_x
  MatX<Scalar> der_part;     // D = H - L_{H(1)}
  Scalar derivation_residual = 0;
};

using StrDecomposition = StrDecompositionT<double>;

namespace detail {
inline constexpr std::uint64_t kResidualSeed = 0x5D1F00D5EEDULL;
}

// max over sampled pairs of ||D(a o b) - Da o b - a o Db|| / (||a|| ||b||)
template <typename Scalar>
Scalar derivation_residual(const AlgebraPtr<Scalar>& alg, const MatX<Scalar>& d,
                           int pairs = 64,
                           std::uint64_t seed = detail::kResidualSeed) {
  Rng rng(seed);
  Scalar worst = 0;
  for (int trial = 0; trial < pairs; ++trial) {
    ElementT<Scalar> a = random_element(alg, rng, Scalar(1));
    ElementT<Scalar> b = random_element(alg, rng, Scalar(1));
    ElementT<Scalar> lhs = apply_op(d, jordan_product(a, b));
    ElementT<Scalar> rhs = jordan_product(apply_op(d, a), b) +
                           jordan_product(a, apply_op(d, b));
    Scalar na = jb_norm(a), nb = jb_norm(b);
    if (na < Scalar(1e-12) || nb < Scalar(1e-12)) continue;
    worst = std::max(worst, jb_norm(lhs - rhs) / (na * nb));
  }
  return worst;
}

// exhaustive basis-pair variant, O(dim^2) products
template <typename Scalar>
Scalar derivation_residual_strict(const AlgebraPtr<Scalar>& alg, const MatX<Scalar>& d) {
  Scalar worst = 0;
  for (int i = 0; i < alg->dim; ++i) {
    ElementT<Scalar> a = zero(alg);
    a.coords[i] = Scalar(1);
    for (int j = i; j < alg->dim; ++j) {
      ElementT<Scalar> b = zero(alg);
      b.coords[j] = Scalar(1);
      ElementT<Scalar> lhs = apply_op(d, jordan_product(a, b));
      ElementT<Scalar> rhs = jordan_product(apply_op(d, a), b) +
                             jordan_product(a, apply_op(d, b));
      worst = std::max(worst, jb_norm(lhs - rhs));
    }
  }
  return worst;
}

template <typename Scalar>
StrDecompositionT<Scalar> split_str(const AlgebraPtr<Scalar>& alg,
                                    const MatX<Scalar>& h, int residual_pairs = 64) {
  StrDecompositionT<Scalar> out;
  out.l_part = apply_op(h, unit(alg));
  out.der_part = h - L_operator(out.l_part);
  out.derivation_residual = derivation_residual(alg, out.der_part, residual_pairs);
  return out;
}

// (L_x + D)^dagger = L_x - D
template <typename Scalar>
MatX<Scalar> dagger(const AlgebraPtr<Scalar>& alg, const MatX<Scalar>& h,
                    Scalar residual_tol = Scalar(1e-6)) {
  StrDecompositionT<Scalar> s = split_str(alg, h);
  if (s.derivation_residual > residual_tol)
    throw std::invalid_argument("dagger: operator is not in str, residual " +
                                std::to_string(s.derivation_residual));
  return L_operator(s.l_part) - s.der_part;
}

// sigma_* = -dagger: L_x + D -> -L_x + D
template <typename Scalar>
MatX<Scalar> sigma_star(const AlgebraPtr<Scalar>& alg, const MatX<Scalar>& h,
                        Scalar residual_tol = Scalar(1e-6)) {
  return (-dagger(alg, h, residual_tol)).eval();
}

// overline H = H - 2 U_{H1,1}; agrees with sigma_star on str
template <typename Scalar>
MatX<Scalar> overline(const AlgebraPtr<Scalar>& alg, const MatX<Scalar>& h) {
  ElementT<Scalar> h1 = apply_op(h, unit(alg));
  return h - Scalar(2) * U_bilinear(h1, unit(alg));
}

// max over random x of ||2 U_{x,Hx} - H U_x + U_x overline(H)|| / scale;
// near zero exactly on str
template <typename Scalar>
Scalar in_structure_algebra(const AlgebraPtr<Scalar>& alg, const MatX<Scalar>& h,
                            int trials = 32,
                            std::uint64_t seed = detail::kResidualSeed) {
  Rng rng(seed);
  MatX<Scalar> hbar = overline(alg, h);
  Scalar hn = h.norm();
  if (hn < Scalar(1e-300)) return Scalar(0);
  Scalar worst = 0;
  for (int trial = 0; trial < trials; ++trial) {
    ElementT<Scalar> x = random_element(alg, rng, Scalar(1));
    MatX<Scalar> ux = U_operator(x);
    MatX<Scalar> lhs = Scalar(2) * U_bilinear(x, apply_op(h, x));
    MatX<Scalar> rhs = h * ux - ux * hbar;
    Scalar scale = hn * (Scalar(1) + ux.norm());
    worst = std::max(worst, (lhs - rhs).norm() / scale);
  }
  return worst;
}

// max over random pairs of ||k(a o b) - ka o kb|| / (||a|| ||b||)
template <typename Scalar>
Scalar is_automorphism(const AlgebraPtr<Scalar>& alg, const MatX<Scalar>& k,
                       int trials = 64,
                       std::uint64_t seed = detail::kResidualSeed) {
  Rng rng(seed);
  Scalar worst = 0;
  for (int trial = 0; trial < trials; ++trial) {
    ElementT<Scalar> a = random_element(alg, rng, Scalar(1));
    ElementT<Scalar> b = random_element(alg, rng, Scalar(1));
    ElementT<Scalar> lhs = apply_op(k, jordan_product(a, b));
    ElementT<Scalar> rhs = jordan_product(apply_op(k, a), apply_op(k, b));
    Scalar na = jb_norm(a), nb = jb_norm(b);
    if (na < Scalar(1e-12) || nb < Scalar(1e-12)) continue;
    worst = std::max(worst, jb_norm(lhs - rhs) / (na * nb));
  }
  return worst;
}

// sigma(g) = U_{g1}^{-1} g; involutive on Str, fixes Aut, sigma(U_x) = U_x^{-1}
template <typename Scalar>
MatX<Scalar> sigma(const AlgebraPtr<Scalar>& alg, const MatX<Scalar>& g) {
  ElementT<Scalar> g1 = apply_op(g, unit(alg));
  if (!is_invertible(g1))
    throw std::domain_error("sigma: g(1) is not invertible");
  return U_operator(g1).partialPivLu().solve(g);
}

template <typename Scalar>
MatX<Scalar> commutator(const MatX<Scalar>& a, const MatX<Scalar>& b) {
  return a * b - b * a;
}

// random linear combination of brackets [L_a, L_b]; inner derivations only
template <typename Scalar>
MatX<Scalar> random_derivation(const AlgebraPtr<Scalar>& alg, Rng& rng, int terms = 3) {
  MatX<Scalar> d = MatX<Scalar>::Zero(alg->dim, alg->dim);
  for (int t = 0; t < terms; ++t) {
    ElementT<Scalar> a = random_element(alg, rng, Scalar(1));
    ElementT<Scalar> b = random_element(alg, rng, Scalar(1));
    d += commutator(L_operator(a), L_operator(b));
  }
  Scalar n = d.norm();
  if (n > Scalar(1e-12)) d /= n;  // rn(k) has no nonzero inner derivations
  return d;
}

}  // namespace jordan
