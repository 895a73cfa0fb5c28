#pragma once

#include <cstdint>
#include <random>

#include "jordan/spectral.hpp"

namespace jordan {

// stateless mix used to derive independent per-trial streams
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream));
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(gen); }
  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(gen); }
  std::uint64_t next() { return gen(); }
};

template <typename Scalar>
ElementT<Scalar> random_element(const AlgebraPtr<Scalar>& alg, Rng& rng, Scalar scale) {
  VecX<Scalar> c(alg->dim);
  for (int i = 0; i < alg->dim; ++i) c[i] = Scalar(rng.normal()) * scale;
  return {alg, std::move(c)};
}

inline Element random_element(const AlgebraPtr<double>& alg, std::uint64_t seed,
                              double scale) {
  Rng rng(seed);
  return random_element<double>(alg, rng, scale);
}

// exp of a random element; always lands in the positive cone
template <typename Scalar>
ElementT<Scalar> random_positive(const AlgebraPtr<Scalar>& alg, Rng& rng, Scalar scale) {
  return exp_element(random_element(alg, rng, scale));
}

inline Element random_positive(const AlgebraPtr<double>& alg, std::uint64_t seed,
                               double scale) {
  Rng rng(seed);
  return random_positive<double>(alg, rng, scale);
}

// random element rescaled to unit order norm
template <typename Scalar>
ElementT<Scalar> random_unit(const AlgebraPtr<Scalar>& alg, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    ElementT<Scalar> x = random_element(alg, rng, Scalar(1));
    Scalar n = jb_norm(x);
    if (n > Scalar(1e-8)) return {alg, (x.coords / n).eval()};
  }
  return unit(alg);
}

}  // namespace jordan
