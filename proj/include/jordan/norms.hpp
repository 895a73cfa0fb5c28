#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "jordan/spectral.hpp"

namespace jordan {

// Symmetric gauge function applied to the decreasingly ordered moduli of the
// eigenvalues: sup, lp(p >= 1), or Ky Fan kyfan(k).
struct GaugeFunction {
  enum class Type { sup, lp, kyfan };
  Type type = Type::sup;
  double p = 2.0;
  int k = 1;

  static GaugeFunction sup() { return {Type::sup, 0.0, 0}; }
  static GaugeFunction lp(double p) {
    if (p < 1.0) throw std::invalid_argument("lp gauge needs p >= 1");
    return {Type::lp, p, 0};
  }
  static GaugeFunction kyfan(int k) {
    if (k < 1) throw std::invalid_argument("kyfan gauge needs k >= 1");
    return {Type::kyfan, 0.0, k};
  }

  std::string name() const {
    switch (type) {
      case Type::sup:
        return "sup";
      case Type::lp:
        return "lp(" + std::to_string(p) + ")";
      case Type::kyfan:
        return "kyfan(" + std::to_string(k) + ")";
    }
    return "?";
  }
};

template <typename Scalar>
Scalar gauge_apply(const GaugeFunction& phi, const VecX<Scalar>& s) {
  switch (phi.type) {
    case GaugeFunction::Type::sup:
      return s.size() ? s[0] : Scalar(0);
    case GaugeFunction::Type::lp: {
      if (phi.p == 1.0) return s.sum();
      if (phi.p == 2.0) return s.norm();
      Scalar acc = 0;
      for (Eigen::Index i = 0; i < s.size(); ++i) acc += std::pow(s[i], Scalar(phi.p));
      return std::pow(acc, Scalar(1) / Scalar(phi.p));
    }
    case GaugeFunction::Type::kyfan: {
      const int k = std::min<int>(phi.k, static_cast<int>(s.size()));
      return s.head(k).sum();
    }
  }
  throw std::logic_error("unreachable");
}

// moduli of the eigenvalues, decreasing; ties broken by signed value decreasing
template <typename Scalar>
VecX<Scalar> singular_values(const ElementT<Scalar>& x) {
  VecX<Scalar> lam = eigenvalues_of(x);
  std::sort(lam.data(), lam.data() + lam.size(), [](Scalar a, Scalar b) {
    Scalar ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma > mb;
    return a > b;
  });
  return lam.cwiseAbs();
}

template <typename Scalar>
Scalar gauge_norm(const ElementT<Scalar>& x, const GaugeFunction& phi) {
  if (phi.type == GaugeFunction::Type::kyfan && phi.k > x.algebra->rank)
    throw std::invalid_argument("kyfan order exceeds algebra rank");
  return gauge_apply(phi, singular_values(x));
}

}  // namespace jordan
