#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "langtrack/nn/tensor.hpp"
#include "langtrack/rng.hpp"

namespace langtrack::nn {

struct GradCheckOptions {
  double step = 1e-5;
  // 0 checks every coordinate; otherwise a seeded random subset per tensor.
  std::size_t max_coords_per_tensor = 0;
  std::uint64_t seed = 0;
};

struct GradCheckReport {
  double max_rel_error = 0.0;
  std::size_t coords_checked = 0;
  std::string worst_param;
  std::size_t worst_index = 0;

  bool passes(double tolerance) const { return max_rel_error < tolerance; }
};

// Central finite differences against already-filled analytic gradients.
// `loss` must re-evaluate the forward pass from the current parameter values.
// Inputs can be checked too by wrapping them in ParamT with grad = dL/dinput.
inline GradCheckReport grad_check(const std::vector<ParamT<double>*>& params,
                                  const std::function<double()>& loss,
                                  const GradCheckOptions& opt = {}) {
  GradCheckReport report;
  Rng rng(opt.seed);
  for (auto* p : params) {
    const std::size_t n = p->numel();
    std::vector<std::size_t> coords;
    if (opt.max_coords_per_tensor == 0 || n <= opt.max_coords_per_tensor) {
      coords.resize(n);
      for (std::size_t i = 0; i < n; ++i) coords[i] = i;
    } else {
      for (std::size_t i = 0; i < opt.max_coords_per_tensor; ++i) {
        coords.push_back(static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<std::int64_t>(n) - 1)));
      }
    }
    for (std::size_t idx : coords) {
      const double saved = p->value[idx];
      p->value[idx] = saved + opt.step;
      const double up = loss();
      p->value[idx] = saved - opt.step;
      const double down = loss();
      p->value[idx] = saved;
      const double numeric = (up - down) / (2.0 * opt.step);
      const double analytic = p->grad[idx];
      const double denom =
          std::max({1e-2, std::fabs(numeric), std::fabs(analytic)});
      const double rel = std::fabs(numeric - analytic) / denom;
      ++report.coords_checked;
      if (rel > report.max_rel_error) {
        report.max_rel_error = rel;
        report.worst_param = p->name;
        report.worst_index = idx;
      }
    }
  }
  return report;
}

}  // namespace langtrack::nn
