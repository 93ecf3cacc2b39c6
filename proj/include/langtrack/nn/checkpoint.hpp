#pragma once

#include <filesystem>
#include <vector>

#include "langtrack/nn/tensor.hpp"

namespace langtrack::nn {

// Checkpoint layout: a plain-text manifest (one "name dims..." line per
// tensor) followed by a BINARY marker and the values as little-endian
// 64-bit floats in manifest order. Loading verifies names and shapes.
void save_checkpoint(const std::filesystem::path& path,
                     const std::vector<const ParamT<double>*>& params);
void save_checkpoint(const std::filesystem::path& path,
                     const std::vector<const ParamT<float>*>& params);
void load_checkpoint(const std::filesystem::path& path,
                     const std::vector<ParamT<double>*>& params);
void load_checkpoint(const std::filesystem::path& path,
                     const std::vector<ParamT<float>*>& params);

template <typename T>
std::vector<const ParamT<T>*> as_const_refs(const ParamRefs<T>& refs) {
  return std::vector<const ParamT<T>*>(refs.begin(), refs.end());
}

}  // namespace langtrack::nn
