#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace langtrack::nn {

template <typename T>
T sigmoid(T x) {
  // Split by sign so exp never overflows.
  if (x >= T(0)) {
    const T e = std::exp(-x);
    return T(1) / (T(1) + e);
  }
  const T e = std::exp(x);
  return e / (T(1) + e);
}

// Derivative from the activation value y = sigmoid(x).
template <typename T>
T dsigmoid_from_y(T y) {
  return y * (T(1) - y);
}

template <typename T>
T dtanh_from_y(T y) {
  return T(1) - y * y;
}

// In-place max-shifted softmax over v[0..n).
template <typename T>
void softmax(T* v, std::size_t n) {
  T m = v[0];
  for (std::size_t i = 1; i < n; ++i) m = std::max(m, v[i]);
  T sum = T(0);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = std::exp(v[i] - m);
    sum += v[i];
  }
  for (std::size_t i = 0; i < n; ++i) v[i] /= sum;
}

// Given y = softmax(x) and dL/dy, writes dL/dx (may alias dy).
template <typename T>
void softmax_backward(const T* y, const T* dy, T* dx, std::size_t n) {
  T dot = T(0);
  for (std::size_t i = 0; i < n; ++i) dot += y[i] * dy[i];
  for (std::size_t i = 0; i < n; ++i) dx[i] = y[i] * (dy[i] - dot);
}

inline constexpr double kBceClamp = 1e-7;

// Binary cross-entropy; p is clamped to [1e-7, 1 - 1e-7] before the logs.
template <typename T>
T bce(T p, T label) {
  const T lo = T(kBceClamp);
  const T pc = std::clamp(p, lo, T(1) - lo);
  return -(label * std::log(pc) + (T(1) - label) * std::log(T(1) - pc));
}

// dL/dp at the clamped point.
template <typename T>
T bce_backward(T p, T label) {
  const T lo = T(kBceClamp);
  const T pc = std::clamp(p, lo, T(1) - lo);
  return (pc - label) / (pc * (T(1) - pc));
}

}  // namespace langtrack::nn
