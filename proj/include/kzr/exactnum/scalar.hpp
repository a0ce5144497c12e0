#pragma once

// Lifting exact field data into the scalar types the assembly code runs on:
// exact points (FieldScalar), exact lines (RationalFunction) and floats.

#include <type_traits>

#include "kzr/exactnum/matrix.hpp"
#include "kzr/exactnum/rational_function.hpp"

namespace kzr {

template <class T>
T from_field(const FieldScalar& x) {
  if constexpr (std::is_floating_point_v<T>) {
    return x.to<T>();
  } else {
    return T(x);
  }
}

template <class T>
Matrix<T> lift(const FieldMatrix& m) {
  if constexpr (std::is_same_v<T, FieldScalar>) {
    return m;
  } else {
    return m.map([](const FieldScalar& x) { return from_field<T>(x); });
  }
}

/// x^k for integer k, inverting first when k < 0.
template <class T>
T int_pow(const T& x, long k) {
  if (k < 0) {
    if (is_zero(x)) throw PoleError("negative power of zero");
    return int_pow(T(1) / x, -k);
  }
  T result(1);
  T base = x;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

/// m / d, reporting a pole when d vanishes.
template <class T>
Matrix<T> divide_or_pole(Matrix<T> m, const T& d, const char* what) {
  if (is_zero(d)) throw PoleError(std::string("pole: ") + what + " vanishes");
  const T inv = T(1) / d;
  return m * inv;
}

}  // namespace kzr
