#pragma once

#include <cmath>
#include <vector>

#include "langtrack/error.hpp"
#include "langtrack/nn/tensor.hpp"

namespace langtrack::nn {

// Adagrad: acc += g^2; theta -= lr * g / (sqrt(acc) + eps), elementwise.
// step() consumes the gradients and zeroes them afterwards.
template <typename T>
struct AdagradT {
  T learning_rate;
  T epsilon;
  std::vector<TensorT<T>> accumulators;

  explicit AdagradT(T lr, T eps = T(1e-10)) : learning_rate(lr), epsilon(eps) {}

  void step(const ParamRefs<T>& params) {
    if (accumulators.empty()) {
      for (const auto* p : params) accumulators.emplace_back(p->value.shape);
    }
    if (accumulators.size() != params.size()) {
      throw Error("adagrad: parameter list changed between steps");
    }
    for (std::size_t i = 0; i < params.size(); ++i) {
      ParamT<T>& p = *params[i];
      TensorT<T>& acc = accumulators[i];
      if (acc.numel() != p.numel()) {
        throw Error("adagrad: shape mismatch for " + p.name);
      }
      T* theta = p.value.data.data();
      T* g = p.grad.data.data();
      T* a = acc.data.data();
      const T lr = learning_rate;
      const T eps = epsilon;
      const std::size_t n = p.numel();
      for (std::size_t j = 0; j < n; ++j) {
        a[j] += g[j] * g[j];
        theta[j] -= lr * g[j] / (std::sqrt(a[j]) + eps);
        g[j] = T(0);
      }
    }
  }
};

template <typename T>
void zero_grads(const ParamRefs<T>& params) {
  for (auto* p : params) p->grad.fill(T(0));
}

}  // namespace langtrack::nn
