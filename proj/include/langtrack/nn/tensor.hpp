#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "langtrack/error.hpp"

namespace langtrack::nn {

// Dense row-major tensor; shape is a list of positive extents.
template <typename T>
struct TensorT {
  std::vector<std::size_t> shape;
  std::vector<T> data;

  TensorT() = default;
  explicit TensorT(std::vector<std::size_t> s) : shape(std::move(s)) {
    data.assign(numel_of(shape), T(0));
  }

  static std::size_t numel_of(const std::vector<std::size_t>& s) {
    std::size_t n = 1;
    for (auto e : s) n *= e;
    return n;
  }

  std::size_t numel() const { return data.size(); }
  std::size_t rows() const { return shape.empty() ? 0 : shape[0]; }
  std::size_t cols() const { return shape.size() < 2 ? 1 : shape[1]; }

  T& operator[](std::size_t i) { return data[i]; }
  const T& operator[](std::size_t i) const { return data[i]; }
  T& operator()(std::size_t i, std::size_t j) { return data[i * cols() + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data[i * cols() + j];
  }

  void fill(T v) { std::fill(data.begin(), data.end(), v); }
};

// A named trainable tensor with its gradient buffer.
template <typename T>
struct ParamT {
  std::string name;
  TensorT<T> value;
  TensorT<T> grad;

  void resize(std::string n, std::vector<std::size_t> shape) {
    name = std::move(n);
    value = TensorT<T>(shape);
    grad = TensorT<T>(std::move(shape));
  }
  std::size_t numel() const { return value.numel(); }
};

template <typename T>
using ParamRefs = std::vector<ParamT<T>*>;

using Tensor = TensorT<double>;
using Param = ParamT<double>;

}  // namespace langtrack::nn
