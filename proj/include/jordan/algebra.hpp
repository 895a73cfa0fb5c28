#pragma once

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "jordan/types.hpp"

namespace jordan {

enum class AlgebraKind { sym, spin, rn, sum };

template <typename Scalar>
class AlgebraT;

template <typename Scalar>
using AlgebraPtr = std::shared_ptr<const AlgebraT<Scalar>>;

// Coordinate vector of a point of the algebra, tied to its algebra handle.
template <typename Scalar>
struct ElementT {
  AlgebraPtr<Scalar> algebra;
  VecX<Scalar> coords;
};

using Element = ElementT<double>;

// A finite-dimensional Euclidean Jordan algebra given by a basis and the
// dense structure-constant tensor, with specialized product kernels for the
// concrete families:
//   sym(n)  real symmetric n x n matrices, x o y = (xy + yx)/2
//   spin(k) R x R^{k-1}, (x0,xb) o (y0,yb) = (x0 y0 + xb.yb, x0 yb + y0 xb)
//   rn(k)   R^k componentwise
//   sum     direct sum of two algebras
// sym coordinates are Frobenius-orthonormal: diagonal cells E_ii first, then
// (E_ij + E_ji)/sqrt(2) for i < j in lexicographic order.
template <typename Scalar>
class AlgebraT {
 public:
  AlgebraKind kind;
  int param = 0;  // n for sym, k for spin/rn, 0 for sum
  int dim = 0;
  int rank = 0;
  std::string spec;
  std::vector<std::string> basis;
  AlgebraPtr<Scalar> left, right;      // populated for sums only
  std::vector<MatX<Scalar>> lmat;      // L-matrix of each basis element
  VecX<Scalar> unit_coords;

  // structure constants: c(i,j,k) = k-th coordinate of e_i o e_j
  Scalar structure_constant(int i, int j, int k) const { return lmat[i](k, j); }

  VecX<Scalar> product(const VecX<Scalar>& a, const VecX<Scalar>& b) const {
    switch (kind) {
      case AlgebraKind::sym: {
        const int n = param;
        MatX<Scalar> A = sym_unpack(a), B = sym_unpack(b);
        MatX<Scalar> C = (A * B + B * A) / Scalar(2);
        return sym_pack(C);
      }
      case AlgebraKind::spin: {
        VecX<Scalar> out(dim);
        out[0] = a.dot(b);
        out.tail(dim - 1) = a[0] * b.tail(dim - 1) + b[0] * a.tail(dim - 1);
        return out;
      }
      case AlgebraKind::rn:
        return a.cwiseProduct(b);
      case AlgebraKind::sum: {
        VecX<Scalar> out(dim);
        const int dl = left->dim;
        out.head(dl) = left->product(a.head(dl), b.head(dl));
        out.tail(dim - dl) = right->product(a.tail(dim - dl), b.tail(dim - dl));
        return out;
      }
    }
    throw std::logic_error("unreachable");
  }

  // reference path: contract the structure-constant tensor directly
  VecX<Scalar> product_generic(const VecX<Scalar>& a, const VecX<Scalar>& b) const {
    VecX<Scalar> out = VecX<Scalar>::Zero(dim);
    for (int i = 0; i < dim; ++i)
      if (a[i] != Scalar(0)) out.noalias() += a[i] * (lmat[i] * b);
    return out;
  }

  MatX<Scalar> sym_unpack(const VecX<Scalar>& x) const {
    const int n = param;
    MatX<Scalar> m(n, n);
    const Scalar inv_sqrt2 = Scalar(1) / std::sqrt(Scalar(2));
    for (int i = 0; i < n; ++i) m(i, i) = x[i];
    int idx = n;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        m(i, j) = m(j, i) = x[idx++] * inv_sqrt2;
      }
    return m;
  }

  VecX<Scalar> sym_pack(const MatX<Scalar>& m) const {
    const int n = param;
    VecX<Scalar> x(dim);
    const Scalar sqrt2 = std::sqrt(Scalar(2));
    for (int i = 0; i < n; ++i) x[i] = m(i, i);
    int idx = n;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) x[idx++] = sqrt2 * m(i, j);
    return x;
  }
};

using Algebra = AlgebraT<double>;

namespace detail {

template <typename Scalar>
void finish_algebra(AlgebraT<Scalar>& alg) {
  alg.lmat.resize(alg.dim);
  VecX<Scalar> ei = VecX<Scalar>::Zero(alg.dim);
  for (int i = 0; i < alg.dim; ++i) {
    ei.setZero();
    ei[i] = Scalar(1);
    MatX<Scalar> li(alg.dim, alg.dim);
    VecX<Scalar> ej = VecX<Scalar>::Zero(alg.dim);
    for (int j = 0; j < alg.dim; ++j) {
      ej.setZero();
      ej[j] = Scalar(1);
      li.col(j) = alg.product(ei, ej);
    }
    alg.lmat[i] = std::move(li);
  }
}

}  // namespace detail

template <typename Scalar = double>
AlgebraPtr<Scalar> make_sym(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("sym(n) supports 1 <= n <= 6");
  auto alg = std::make_shared<AlgebraT<Scalar>>();
  alg->kind = AlgebraKind::sym;
  alg->param = n;
  alg->dim = n * (n + 1) / 2;
  alg->rank = n;
  alg->spec = "sym:" + std::to_string(n);
  for (int i = 0; i < n; ++i)
    alg->basis.push_back("E" + std::to_string(i + 1) + std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      alg->basis.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  alg->unit_coords = VecX<Scalar>::Zero(alg->dim);
  alg->unit_coords.head(n).setOnes();
  detail::finish_algebra(*alg);
  return alg;
}

template <typename Scalar = double>
AlgebraPtr<Scalar> make_spin(int k) {
  if (k < 2 || k > 16) throw std::invalid_argument("spin(k) supports 2 <= k <= 16");
  auto alg = std::make_shared<AlgebraT<Scalar>>();
  alg->kind = AlgebraKind::spin;
  alg->param = k;
  alg->dim = k;
  alg->rank = 2;
  alg->spec = "spin:" + std::to_string(k);
  for (int i = 0; i < k; ++i) alg->basis.push_back("e" + std::to_string(i));
  alg->unit_coords = VecX<Scalar>::Zero(k);
  alg->unit_coords[0] = Scalar(1);
  detail::finish_algebra(*alg);
  return alg;
}

template <typename Scalar = double>
AlgebraPtr<Scalar> make_rn(int k) {
  if (k < 1 || k > 64) throw std::invalid_argument("rn(k) supports 1 <= k <= 64");
  auto alg = std::make_shared<AlgebraT<Scalar>>();
  alg->kind = AlgebraKind::rn;
  alg->param = k;
  alg->dim = k;
  alg->rank = k;
  alg->spec = "rn:" + std::to_string(k);
  for (int i = 0; i < k; ++i) alg->basis.push_back("e" + std::to_string(i + 1));
  alg->unit_coords = VecX<Scalar>::Ones(k);
  detail::finish_algebra(*alg);
  return alg;
}

template <typename Scalar = double>
AlgebraPtr<Scalar> make_sum(AlgebraPtr<Scalar> a, AlgebraPtr<Scalar> b) {
  auto alg = std::make_shared<AlgebraT<Scalar>>();
  alg->kind = AlgebraKind::sum;
  alg->dim = a->dim + b->dim;
  alg->rank = a->rank + b->rank;
  alg->spec = "sum:" + a->spec + "+" + b->spec;
  alg->left = a;
  alg->right = b;
  for (const auto& s : a->basis) alg->basis.push_back("0:" + s);
  for (const auto& s : b->basis) alg->basis.push_back("1:" + s);
  alg->unit_coords.resize(alg->dim);
  alg->unit_coords.head(a->dim) = a->unit_coords;
  alg->unit_coords.tail(b->dim) = b->unit_coords;
  detail::finish_algebra(*alg);
  return alg;
}

// Parses "sym:3", "spin:4", "rn:5" or "sum:sym:2+spin:3".
template <typename Scalar = double>
AlgebraPtr<Scalar> make_algebra(const std::string& spec) {
  auto parse_atom = [](const std::string& s) -> AlgebraPtr<Scalar> {
    auto colon = s.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("bad algebra spec: " + s);
    const std::string kind = s.substr(0, colon);
    int value = 0;
    try {
      size_t pos = 0;
      value = std::stoi(s.substr(colon + 1), &pos);
      if (pos != s.size() - colon - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad algebra size in spec: " + s);
    }
    if (kind == "sym") return make_sym<Scalar>(value);
    if (kind == "spin") return make_spin<Scalar>(value);
    if (kind == "rn") return make_rn<Scalar>(value);
    throw std::invalid_argument("unknown algebra kind: " + kind);
  };

  if (spec.rfind("sum:", 0) == 0) {
    const std::string body = spec.substr(4);
    auto plus = body.find('+');
    if (plus == std::string::npos)
      throw std::invalid_argument("sum spec needs two parts: " + spec);
    return make_sum<Scalar>(parse_atom(body.substr(0, plus)),
                            parse_atom(body.substr(plus + 1)));
  }
  return parse_atom(spec);
}

template <typename Scalar>
ElementT<Scalar> element(AlgebraPtr<Scalar> alg, VecX<Scalar> coords) {
  if (coords.size() != alg->dim)
    throw std::invalid_argument("coords length does not match algebra dim");
  return {std::move(alg), std::move(coords)};
}

template <typename Scalar>
ElementT<Scalar> unit(AlgebraPtr<Scalar> alg) {
  VecX<Scalar> u = alg->unit_coords;
  return {std::move(alg), std::move(u)};
}

template <typename Scalar>
ElementT<Scalar> zero(AlgebraPtr<Scalar> alg) {
  VecX<Scalar> z = VecX<Scalar>::Zero(alg->dim);
  return {std::move(alg), std::move(z)};
}

template <typename Scalar>
void require_same_algebra(const ElementT<Scalar>& a, const ElementT<Scalar>& b) {
  if (a.algebra->spec != b.algebra->spec)
    throw std::invalid_argument("algebra mismatch: " + a.algebra->spec + " vs " +
                                b.algebra->spec);
}

template <typename Scalar>
ElementT<Scalar> jordan_product(const ElementT<Scalar>& a, const ElementT<Scalar>& b) {
  require_same_algebra(a, b);
  return {a.algebra, a.algebra->product(a.coords, b.coords)};
}

template <typename Scalar>
ElementT<Scalar> jordan_product_generic(const ElementT<Scalar>& a,
                                        const ElementT<Scalar>& b) {
  require_same_algebra(a, b);
  return {a.algebra, a.algebra->product_generic(a.coords, b.coords)};
}

template <typename Scalar>
ElementT<Scalar> square(const ElementT<Scalar>& a) {
  return {a.algebra, a.algebra->product(a.coords, a.coords)};
}

template <typename Scalar>
ElementT<Scalar> operator+(const ElementT<Scalar>& a, const ElementT<Scalar>& b) {
  require_same_algebra(a, b);
  return {a.algebra, a.coords + b.coords};
}

template <typename Scalar>
ElementT<Scalar> operator-(const ElementT<Scalar>& a, const ElementT<Scalar>& b) {
  require_same_algebra(a, b);
  return {a.algebra, a.coords - b.coords};
}

template <typename Scalar>
ElementT<Scalar> operator-(const ElementT<Scalar>& a) {
  return {a.algebra, (-a.coords).eval()};
}

template <typename Scalar>
ElementT<Scalar> operator*(Scalar c, const ElementT<Scalar>& a) {
  return {a.algebra, (c * a.coords).eval()};
}

// L_x y = x o y
template <typename Scalar>
MatX<Scalar> L_operator(const ElementT<Scalar>& x) {
  const auto& alg = *x.algebra;
  MatX<Scalar> l = MatX<Scalar>::Zero(alg.dim, alg.dim);
  for (int i = 0; i < alg.dim; ++i)
    if (x.coords[i] != Scalar(0)) l.noalias() += x.coords[i] * alg.lmat[i];
  return l;
}

// quadratic representation U_x = 2 L_x^2 - L_{x^2}
template <typename Scalar>
MatX<Scalar> U_operator(const ElementT<Scalar>& x) {
  MatX<Scalar> l = L_operator(x);
  return Scalar(2) * l * l - L_operator(square(x));
}

// U_{x,y} = L_x L_y + L_y L_x - L_{x o y} (polarization of U)
template <typename Scalar>
MatX<Scalar> U_bilinear(const ElementT<Scalar>& x, const ElementT<Scalar>& y) {
  MatX<Scalar> lx = L_operator(x), ly = L_operator(y);
  return lx * ly + ly * lx - L_operator(jordan_product(x, y));
}

// V_{x,y} = [L_x, L_y] + L_{x o y}, so that V_{x,y} z = U_{x,z} y
template <typename Scalar>
MatX<Scalar> V_operator(const ElementT<Scalar>& x, const ElementT<Scalar>& y) {
  MatX<Scalar> lx = L_operator(x), ly = L_operator(y);
  return lx * ly - ly * lx + L_operator(jordan_product(x, y));
}

// U_x w without forming the operator
template <typename Scalar>
ElementT<Scalar> apply_U(const ElementT<Scalar>& x, const ElementT<Scalar>& w) {
  ElementT<Scalar> xw = jordan_product(x, w);
  return Scalar(2) * jordan_product(x, xw) - jordan_product(square(x), w);
}

template <typename Scalar>
ElementT<Scalar> apply_U_bilinear(const ElementT<Scalar>& x, const ElementT<Scalar>& y,
                                  const ElementT<Scalar>& w) {
  return jordan_product(x, jordan_product(y, w)) +
         jordan_product(y, jordan_product(x, w)) -
         jordan_product(jordan_product(x, y), w);
}

template <typename Scalar>
ElementT<Scalar> apply_op(const MatX<Scalar>& h, const ElementT<Scalar>& x) {
  return {x.algebra, (h * x.coords).eval()};
}

}  // namespace jordan
