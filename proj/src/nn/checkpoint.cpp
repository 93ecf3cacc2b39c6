#include "langtrack/nn/checkpoint.hpp"

#include <bit>
#include <fstream>
#include <sstream>

#include "langtrack/error.hpp"

static_assert(std::endian::native == std::endian::little,
              "checkpoint format assumes a little-endian host");

namespace langtrack::nn {

namespace {

constexpr const char* kMagic = "LTCKPT 1";

template <typename T>
void save_impl(const std::filesystem::path& path,
               const std::vector<const ParamT<T>*>& params) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path.string());
  out << kMagic << '\n' << params.size() << '\n';
  for (const auto* p : params) {
    out << p->name;
    for (auto d : p->value.shape) out << ' ' << d;
    out << '\n';
  }
  out << "BINARY\n";
  for (const auto* p : params) {
    for (const T v : p->value.data) {
      const double d = static_cast<double>(v);
      out.write(reinterpret_cast<const char*>(&d), sizeof(double));
    }
  }
  if (!out) throw Error("write failed: " + path.string());
}

template <typename T>
void load_impl(const std::filesystem::path& path,
               const std::vector<ParamT<T>*>& params) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), -1, "cannot open");
  std::string line;
  std::getline(in, line);
  if (line != kMagic) throw ParseError(path.string(), 1, "bad magic");
  std::getline(in, line);
  std::size_t count = 0;
  try {
    count = std::stoul(line);
  } catch (...) {
    throw ParseError(path.string(), 2, "bad tensor count");
  }
  if (count != params.size()) {
    throw ParseError(path.string(), 2,
                     "checkpoint has " + std::to_string(count) +
                         " tensors, expected " +
                         std::to_string(params.size()));
  }
  for (std::size_t i = 0; i < count; ++i) {
    std::getline(in, line);
    std::istringstream ls(line);
    std::string name;
    ls >> name;
    std::vector<std::size_t> shape;
    std::size_t d;
    while (ls >> d) shape.push_back(d);
    if (name != params[i]->name || shape != params[i]->value.shape) {
      throw ParseError(path.string(), static_cast<long>(3 + i),
                       "manifest mismatch for '" + params[i]->name + "'");
    }
  }
  std::getline(in, line);
  if (line != "BINARY") throw ParseError(path.string(), -1, "missing BINARY marker");
  for (auto* p : params) {
    for (auto& v : p->value.data) {
      double d = 0.0;
      in.read(reinterpret_cast<char*>(&d), sizeof(double));
      v = static_cast<T>(d);
    }
  }
  if (!in) throw ParseError(path.string(), -1, "truncated payload");
}

}  // namespace

void save_checkpoint(const std::filesystem::path& path,
                     const std::vector<const ParamT<double>*>& params) {
  save_impl(path, params);
}
void save_checkpoint(const std::filesystem::path& path,
                     const std::vector<const ParamT<float>*>& params) {
  save_impl(path, params);
}
void load_checkpoint(const std::filesystem::path& path,
                     const std::vector<ParamT<double>*>& params) {
  load_impl(path, params);
}
void load_checkpoint(const std::filesystem::path& path,
                     const std::vector<ParamT<float>*>& params) {
  load_impl(path, params);
}

}  // namespace langtrack::nn
