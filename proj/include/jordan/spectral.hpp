#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "jordan/algebra.hpp"
#include "jordan/jacobi.hpp"

namespace jordan {

// Complete system of orthogonal primitive idempotents with eigenvalues,
// decreasing; x = sum_i eigenvalues[i] * idempotents[i].
template <typename Scalar>
struct SpectrumT {
  VecX<Scalar> eigenvalues;
  std::vector<ElementT<Scalar>> idempotents;
};

using Spectrum = SpectrumT<double>;

// scale-aware positivity / invertibility cutoff
template <typename Scalar>
Scalar positivity_eps(const VecX<Scalar>& eigenvalues) {
  Scalar m = eigenvalues.size() ? eigenvalues.cwiseAbs().maxCoeff() : Scalar(0);
  return Scalar(1e-12) * (Scalar(1) + m);
}

namespace detail {

// relative gap below which a spin factor is treated as a multiple of the unit
inline constexpr double kMultiplicityTol = 1e-9;

template <typename Scalar>
void spin_split(const VecX<Scalar>& x, Scalar& lam_plus, Scalar& lam_minus,
                VecX<Scalar>& dir) {
  const Eigen::Index k = x.size();
  VecX<Scalar> xbar = x.tail(k - 1);
  Scalar r = xbar.norm();
  lam_plus = x[0] + r;
  lam_minus = x[0] - r;
  dir.resize(k - 1);
  if (r <= Scalar(kMultiplicityTol) * (Scalar(1) + std::abs(x[0]))) {
    dir.setZero();
    dir[0] = Scalar(1);  // canonical axis for a near-multiple of the unit
  } else {
    dir = xbar / r;
  }
}

}  // namespace detail

// Eigenvalues only, decreasing with multiplicity.
template <typename Scalar>
VecX<Scalar> eigenvalues_of(const ElementT<Scalar>& x) {
  const auto& alg = *x.algebra;
  switch (alg.kind) {
    case AlgebraKind::sym: {
      VecX<Scalar> vals;
      jacobi_eigen<Scalar>(alg.sym_unpack(x.coords), vals, nullptr);
      return vals;
    }
    case AlgebraKind::spin: {
      Scalar lp, lm;
      VecX<Scalar> dir;
      detail::spin_split(x.coords, lp, lm, dir);
      VecX<Scalar> vals(2);
      vals[0] = lp;
      vals[1] = lm;
      return vals;
    }
    case AlgebraKind::rn: {
      VecX<Scalar> vals = x.coords;
      std::sort(vals.data(), vals.data() + vals.size(), std::greater<Scalar>());
      return vals;
    }
    case AlgebraKind::sum: {
      ElementT<Scalar> a{alg.left, x.coords.head(alg.left->dim)};
      ElementT<Scalar> b{alg.right, x.coords.tail(alg.right->dim)};
      VecX<Scalar> va = eigenvalues_of(a), vb = eigenvalues_of(b);
      VecX<Scalar> vals(va.size() + vb.size());
      vals << va, vb;
      std::sort(vals.data(), vals.data() + vals.size(), std::greater<Scalar>());
      return vals;
    }
  }
  throw std::logic_error("unreachable");
}

template <typename Scalar>
SpectrumT<Scalar> spectral_decompose(const ElementT<Scalar>& x) {
  const auto& alg = *x.algebra;
  SpectrumT<Scalar> out;
  switch (alg.kind) {
    case AlgebraKind::sym: {
      MatX<Scalar> vecs;
      jacobi_eigen<Scalar>(alg.sym_unpack(x.coords), out.eigenvalues, &vecs);
      for (int i = 0; i < alg.rank; ++i) {
        MatX<Scalar> proj = vecs.col(i) * vecs.col(i).transpose();
        out.idempotents.push_back({x.algebra, alg.sym_pack(proj)});
      }
      return out;
    }
    case AlgebraKind::spin: {
      Scalar lp, lm;
      VecX<Scalar> dir;
      detail::spin_split(x.coords, lp, lm, dir);
      out.eigenvalues.resize(2);
      out.eigenvalues << lp, lm;
      VecX<Scalar> cp(alg.dim), cm(alg.dim);
      cp[0] = Scalar(0.5);
      cp.tail(alg.dim - 1) = Scalar(0.5) * dir;
      cm[0] = Scalar(0.5);
      cm.tail(alg.dim - 1) = Scalar(-0.5) * dir;
      out.idempotents.push_back({x.algebra, cp});
      out.idempotents.push_back({x.algebra, cm});
      return out;
    }
    case AlgebraKind::rn: {
      std::vector<int> order(alg.dim);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](int i, int j) { return x.coords[i] > x.coords[j]; });
      out.eigenvalues.resize(alg.dim);
      for (int i = 0; i < alg.dim; ++i) {
        out.eigenvalues[i] = x.coords[order[i]];
        VecX<Scalar> c = VecX<Scalar>::Zero(alg.dim);
        c[order[i]] = Scalar(1);
        out.idempotents.push_back({x.algebra, c});
      }
      return out;
    }
    case AlgebraKind::sum: {
      ElementT<Scalar> a{alg.left, x.coords.head(alg.left->dim)};
      ElementT<Scalar> b{alg.right, x.coords.tail(alg.right->dim)};
      SpectrumT<Scalar> sa = spectral_decompose(a), sb = spectral_decompose(b);
      struct Item {
        Scalar lam;
        VecX<Scalar> coords;
      };
      std::vector<Item> items;
      for (int i = 0; i < sa.eigenvalues.size(); ++i) {
        VecX<Scalar> c = VecX<Scalar>::Zero(alg.dim);
        c.head(alg.left->dim) = sa.idempotents[i].coords;
        items.push_back({sa.eigenvalues[i], std::move(c)});
      }
      for (int i = 0; i < sb.eigenvalues.size(); ++i) {
        VecX<Scalar> c = VecX<Scalar>::Zero(alg.dim);
        c.tail(alg.right->dim) = sb.idempotents[i].coords;
        items.push_back({sb.eigenvalues[i], std::move(c)});
      }
      std::stable_sort(items.begin(), items.end(),
                       [](const Item& u, const Item& v) { return u.lam > v.lam; });
      out.eigenvalues.resize(alg.rank);
      for (int i = 0; i < alg.rank; ++i) {
        out.eigenvalues[i] = items[i].lam;
        out.idempotents.push_back({x.algebra, std::move(items[i].coords)});
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

template <typename Scalar>
ElementT<Scalar> reconstruct(const SpectrumT<Scalar>& s) {
  ElementT<Scalar> out = zero(s.idempotents.at(0).algebra);
  for (size_t i = 0; i < s.idempotents.size(); ++i)
    out.coords += s.eigenvalues[static_cast<int>(i)] * s.idempotents[i].coords;
  return out;
}

// sum_i f(lambda_i) c_i
template <typename Scalar, typename F>
ElementT<Scalar> functional_calculus(const ElementT<Scalar>& x, F&& f) {
  SpectrumT<Scalar> s = spectral_decompose(x);
  ElementT<Scalar> out = zero(x.algebra);
  for (size_t i = 0; i < s.idempotents.size(); ++i)
    out.coords += f(s.eigenvalues[static_cast<int>(i)]) * s.idempotents[i].coords;
  return out;
}

namespace detail {

template <typename Scalar>
void require_positive_spectrum(const SpectrumT<Scalar>& s, const char* fn) {
  Scalar eps = positivity_eps(s.eigenvalues);
  Scalar mn = s.eigenvalues.minCoeff();
  if (mn <= eps)
    throw std::domain_error(std::string(fn) + ": eigenvalue " + std::to_string(mn) +
                            " outside the positive domain");
}

}  // namespace detail

template <typename Scalar>
ElementT<Scalar> exp_element(const ElementT<Scalar>& x) {
  return functional_calculus(x, [](Scalar t) { return std::exp(t); });
}

template <typename Scalar>
ElementT<Scalar> log_element(const ElementT<Scalar>& x) {
  SpectrumT<Scalar> s = spectral_decompose(x);
  detail::require_positive_spectrum(s, "log_element");
  ElementT<Scalar> out = zero(x.algebra);
  for (size_t i = 0; i < s.idempotents.size(); ++i)
    out.coords += std::log(s.eigenvalues[static_cast<int>(i)]) * s.idempotents[i].coords;
  return out;
}

template <typename Scalar>
ElementT<Scalar> sqrt_element(const ElementT<Scalar>& x) {
  SpectrumT<Scalar> s = spectral_decompose(x);
  detail::require_positive_spectrum(s, "sqrt_element");
  ElementT<Scalar> out = zero(x.algebra);
  for (size_t i = 0; i < s.idempotents.size(); ++i)
    out.coords += std::sqrt(s.eigenvalues[static_cast<int>(i)]) * s.idempotents[i].coords;
  return out;
}

template <typename Scalar>
ElementT<Scalar> inv_sqrt_element(const ElementT<Scalar>& x) {
  SpectrumT<Scalar> s = spectral_decompose(x);
  detail::require_positive_spectrum(s, "inv_sqrt_element");
  ElementT<Scalar> out = zero(x.algebra);
  for (size_t i = 0; i < s.idempotents.size(); ++i)
    out.coords += s.idempotents[i].coords / std::sqrt(s.eigenvalues[static_cast<int>(i)]);
  return out;
}

template <typename Scalar>
ElementT<Scalar> pow_element(const ElementT<Scalar>& x, Scalar a) {
  SpectrumT<Scalar> s = spectral_decompose(x);
  detail::require_positive_spectrum(s, "pow_element");
  ElementT<Scalar> out = zero(x.algebra);
  for (size_t i = 0; i < s.idempotents.size(); ++i)
    out.coords += std::pow(s.eigenvalues[static_cast<int>(i)], a) * s.idempotents[i].coords;
  return out;
}

template <typename Scalar>
VecX<Scalar> spectrum_values(const ElementT<Scalar>& x) {
  return eigenvalues_of(x);
}

template <typename Scalar>
bool is_invertible(const ElementT<Scalar>& x) {
  VecX<Scalar> lam = eigenvalues_of(x);
  return lam.cwiseAbs().minCoeff() > positivity_eps(lam);
}

template <typename Scalar>
ElementT<Scalar> inverse(const ElementT<Scalar>& x) {
  SpectrumT<Scalar> s = spectral_decompose(x);
  Scalar eps = positivity_eps(s.eigenvalues);
  ElementT<Scalar> out = zero(x.algebra);
  for (size_t i = 0; i < s.idempotents.size(); ++i) {
    Scalar lam = s.eigenvalues[static_cast<int>(i)];
    if (std::abs(lam) <= eps)
      throw std::domain_error("inverse: singular element, eigenvalue " +
                              std::to_string(lam));
    out.coords += s.idempotents[i].coords / lam;
  }
  return out;
}

// x is positive iff its spectrum is strictly positive
template <typename Scalar>
bool in_cone(const ElementT<Scalar>& x) {
  VecX<Scalar> lam = eigenvalues_of(x);
  return lam.minCoeff() > positivity_eps(lam);
}

// order norm = spectral sup norm
template <typename Scalar>
Scalar jb_norm(const ElementT<Scalar>& x) {
  return eigenvalues_of(x).cwiseAbs().maxCoeff();
}

}  // namespace jordan
