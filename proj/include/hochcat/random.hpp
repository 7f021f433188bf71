#pragma once

#include <cstdint>
#include <random>

#include "morphisms.hpp"

namespace hochcat {

using Rng = std::mt19937_64;

// Platform-stable uniform draw in [0, n).
inline std::uint64_t draw(Rng& rng, std::uint64_t n) { return rng() % n; }

inline Rat random_scalar(Rng& rng, const Rat&) {
  long num = (long)draw(rng, 9) - 4;
  long den = (long)draw(rng, 3) + 1;
  return Rat(num, den);
}

inline Fp random_scalar(Rng& rng, const Fp& proto) {
  return Fp((std::int64_t)draw(rng, proto.modulus()), proto.modulus());
}

template <class S>
Mat<S> random_mat(Rng& rng, int rows, int cols, const S& proto) {
  Mat<S> m(rows, cols, proto);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = random_scalar(rng, proto);
  return m;
}

template <class S>
Morphism<S> random_mor(Rng& rng, const InstancePtr<S>& inst, const TensorWord& dom, const TensorWord& cod) {
  return Morphism<S>(inst, dom, cod, random_mat(rng, inst->dim(cod), inst->dim(dom), inst->proto()));
}

}  // namespace hochcat
