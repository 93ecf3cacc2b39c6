#pragma once

#include <cmath>
#include <string>

#include "langtrack/error.hpp"
#include "langtrack/nn/blas.hpp"
#include "langtrack/nn/tensor.hpp"
#include "langtrack/rng.hpp"

namespace langtrack::nn {

// Xavier-uniform fill with explicit fan sizes.
template <typename T>
void xavier_uniform(TensorT<T>& t, std::size_t fan_in, std::size_t fan_out,
                    Rng& rng) {
  const double limit = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
  for (auto& v : t.data) v = static_cast<T>(rng.uniform(-limit, limit));
}

// Fully connected layer y = W x + b with exact analytic gradients.
template <typename T>
struct DenseT {
  ParamT<T> W;  // out x in
  ParamT<T> b;  // out

  std::size_t in() const { return W.value.cols(); }
  std::size_t out() const { return W.value.rows(); }

  void init(const std::string& name, std::size_t in_dim, std::size_t out_dim,
            Rng& rng) {
    W.resize(name + ".W", {out_dim, in_dim});
    b.resize(name + ".b", {out_dim});
    xavier_uniform(W.value, in_dim, out_dim, rng);
    // Biases start at zero.
  }

  void collect(ParamRefs<T>& refs) {
    refs.push_back(&W);
    refs.push_back(&b);
  }

  // X: n x in rows, Y: n x out rows.
  void forward_batch(const T* x, std::size_t n, T* y) const {
    const int m = static_cast<int>(n);
    const int o = static_cast<int>(out());
    const int i = static_cast<int>(in());
    for (std::size_t row = 0; row < n; ++row) {
      for (int j = 0; j < o; ++j) y[row * o + j] = b.value[j];
    }
    gemm(false, true, m, o, i, T(1), x, i, W.value.data.data(), i, T(1), y, o);
  }

  void forward(const T* x, T* y) const { forward_batch(x, 1, y); }

  // Accumulates parameter gradients; writes dL/dX when dx is non-null
  // (added to existing contents when accumulate_dx is set).
  void backward_batch(const T* x, std::size_t n, const T* dy, T* dx,
                      bool accumulate_dx = false) {
    const int m = static_cast<int>(n);
    const int o = static_cast<int>(out());
    const int i = static_cast<int>(in());
    // dW += dY^T X
    gemm(true, false, o, i, m, T(1), dy, o, x, i, T(1), W.grad.data.data(), i);
    for (std::size_t row = 0; row < n; ++row) {
      for (int j = 0; j < o; ++j) b.grad[j] += dy[row * o + j];
    }
    if (dx) {
      // dX = dY W
      gemm(false, false, m, i, o, T(1), dy, o, W.value.data.data(), i,
           accumulate_dx ? T(1) : T(0), dx, i);
    }
  }

  void backward(const T* x, const T* dy, T* dx) { backward_batch(x, 1, dy, dx); }
};

}  // namespace langtrack::nn
