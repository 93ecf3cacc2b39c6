#pragma once

#include <cstring>
#include <string>
#include <vector>

#include "langtrack/nn/blas.hpp"
#include "langtrack/nn/dense.hpp"
#include "langtrack/nn/ops.hpp"
#include "langtrack/nn/tensor.hpp"

namespace langtrack::nn {

// Gated recurrent unit with fused gate matrices. Row blocks of W, U and b are
// ordered [update z | reset r | candidate]. The state update follows
//   z = sigmoid(Wz x + Uz h + bz)
//   r = sigmoid(Wr x + Ur h + br)
//   c = tanh(Wc x + Uc (r .* h) + bc)
//   h' = (1 - z) .* h + z .* c
template <typename T>
struct GruCellT {
  std::size_t input_size = 0;
  std::size_t hidden_size = 0;
  ParamT<T> W;  // 3H x input
  ParamT<T> U;  // 3H x H
  ParamT<T> b;  // 3H

  void init(const std::string& name, std::size_t in_dim, std::size_t hidden,
            Rng& rng) {
    input_size = in_dim;
    hidden_size = hidden;
    W.resize(name + ".W", {3 * hidden, in_dim});
    U.resize(name + ".U", {3 * hidden, hidden});
    b.resize(name + ".b", {3 * hidden});
    xavier_uniform(W.value, in_dim, hidden, rng);
    xavier_uniform(U.value, hidden, hidden, rng);
  }

  void collect(ParamRefs<T>& refs) {
    refs.push_back(&W);
    refs.push_back(&U);
    refs.push_back(&b);
  }
};

// Cached activations of one unrolled pass, enough for exact BPTT.
template <typename T>
struct GruTraceT {
  std::size_t n = 0;
  std::size_t hidden = 0;
  std::vector<T> h0;           // H (initial state)
  std::vector<T> z, r, c, rh;  // n x H each; rh = r .* h_prev
  std::vector<T> h;            // n x H (outputs)

  const T* h_prev_row(std::size_t t) const {
    return t == 0 ? h0.data() : h.data() + (t - 1) * hidden;
  }
};

// Unrolls the cell over x (n rows of input_size). h0 may be null for zeros.
template <typename T>
void gru_forward(const GruCellT<T>& cell, const T* x, std::size_t n,
                 const T* h0, GruTraceT<T>& trace) {
  const std::size_t H = cell.hidden_size;
  const std::size_t I = cell.input_size;
  trace.n = n;
  trace.hidden = H;
  trace.h0.assign(H, T(0));
  if (h0) std::memcpy(trace.h0.data(), h0, H * sizeof(T));
  trace.z.resize(n * H);
  trace.r.resize(n * H);
  trace.c.resize(n * H);
  trace.rh.resize(n * H);
  trace.h.resize(n * H);

  // Input contributions for every step in one pass: A = X W^T + b.
  std::vector<T> a(n * 3 * H);
  for (std::size_t t = 0; t < n; ++t) {
    std::memcpy(a.data() + t * 3 * H, cell.b.value.data.data(),
                3 * H * sizeof(T));
  }
  gemm(false, true, static_cast<int>(n), static_cast<int>(3 * H),
       static_cast<int>(I), T(1), x, static_cast<int>(I),
       cell.W.value.data.data(), static_cast<int>(I), T(1), a.data(),
       static_cast<int>(3 * H));

  std::vector<T> u(2 * H), uc(H);
  for (std::size_t t = 0; t < n; ++t) {
    const T* hp = trace.h_prev_row(t);
    const T* at = a.data() + t * 3 * H;
    T* zt = trace.z.data() + t * H;
    T* rt = trace.r.data() + t * H;
    T* ct = trace.c.data() + t * H;
    T* rht = trace.rh.data() + t * H;
    T* ht = trace.h.data() + t * H;

    // u = [Uz; Ur] h_prev
    gemv(false, static_cast<int>(2 * H), static_cast<int>(H), T(1),
         cell.U.value.data.data(), static_cast<int>(H), hp, T(0), u.data());
    for (std::size_t j = 0; j < H; ++j) {
      zt[j] = sigmoid(at[j] + u[j]);
      rt[j] = sigmoid(at[H + j] + u[H + j]);
      rht[j] = rt[j] * hp[j];
    }
    gemv(false, static_cast<int>(H), static_cast<int>(H), T(1),
         cell.U.value.data.data() + 2 * H * H, static_cast<int>(H), rht, T(0),
         uc.data());
    for (std::size_t j = 0; j < H; ++j) {
      ct[j] = std::tanh(at[2 * H + j] + uc[j]);
      ht[j] = (T(1) - zt[j]) * hp[j] + zt[j] * ct[j];
    }
  }
}

// BPTT over a recorded trace. dh_out holds n x H gradients on the outputs.
// Parameter gradients accumulate into the cell; dx (n x input) is written
// (or accumulated) when non-null; dh0 likewise when non-null.
template <typename T>
void gru_backward(GruCellT<T>& cell, const T* x, const GruTraceT<T>& trace,
                  const T* dh_out, T* dx, bool accumulate_dx = false,
                  T* dh0 = nullptr) {
  const std::size_t H = cell.hidden_size;
  const std::size_t I = cell.input_size;
  const std::size_t n = trace.n;

  std::vector<T> da(n * 3 * H, T(0));  // pre-activation grads per step
  std::vector<T> dh(H, T(0));          // carried dL/dh_prev
  std::vector<T> ds(H), scratch(2 * H);

  for (std::size_t t = n; t-- > 0;) {
    const T* hp = trace.h_prev_row(t);
    const T* zt = trace.z.data() + t * H;
    const T* rt = trace.r.data() + t * H;
    const T* ct = trace.c.data() + t * H;
    const T* rht = trace.rh.data() + t * H;
    T* dat = da.data() + t * 3 * H;

    std::vector<T> dht(H);
    for (std::size_t j = 0; j < H; ++j) dht[j] = dh[j] + dh_out[t * H + j];

    // Through h' = (1-z) h + z c.
    for (std::size_t j = 0; j < H; ++j) {
      const T dz = dht[j] * (ct[j] - hp[j]);
      const T dc = dht[j] * zt[j];
      dh[j] = dht[j] * (T(1) - zt[j]);  // start of new carried gradient
      dat[2 * H + j] = dc * dtanh_from_y(ct[j]);
      dat[j] = dz * dsigmoid_from_y(zt[j]);
    }
    // ds = Uc^T d(pre-candidate); dr and carried dh pick up their shares.
    gemv(true, static_cast<int>(H), static_cast<int>(H), T(1),
         cell.U.value.data.data() + 2 * H * H, static_cast<int>(H),
         dat + 2 * H, T(0), ds.data());
    for (std::size_t j = 0; j < H; ++j) {
      const T dr = ds[j] * hp[j];
      dh[j] += ds[j] * rt[j];
      dat[H + j] = dr * dsigmoid_from_y(rt[j]);
    }
    // dUc += dpc x rh ; dUz += dpz x hp ; dUr += dpr x hp
    gemm(false, false, static_cast<int>(H), static_cast<int>(H), 1, T(1),
         dat + 2 * H, 1, rht, static_cast<int>(H), T(1),
         cell.U.grad.data.data() + 2 * H * H, static_cast<int>(H));
    gemm(false, false, static_cast<int>(2 * H), static_cast<int>(H), 1, T(1),
         dat, 1, hp, static_cast<int>(H), T(1), cell.U.grad.data.data(),
         static_cast<int>(H));
    // Carried gradient through the z and r gates.
    gemv(true, static_cast<int>(2 * H), static_cast<int>(H), T(1),
         cell.U.value.data.data(), static_cast<int>(H), dat, T(0),
         scratch.data());
    for (std::size_t j = 0; j < H; ++j) dh[j] += scratch[j];
    for (std::size_t j = 0; j < 3 * H; ++j) cell.b.grad[j] += dat[j];
  }

  // Batched parameter and input gradients: dW += dA^T X, dX = dA W.
  gemm(true, false, static_cast<int>(3 * H), static_cast<int>(I),
       static_cast<int>(n), T(1), da.data(), static_cast<int>(3 * H), x,
       static_cast<int>(I), T(1), cell.W.grad.data.data(),
       static_cast<int>(I));
  if (dx) {
    gemm(false, false, static_cast<int>(n), static_cast<int>(I),
         static_cast<int>(3 * H), T(1), da.data(), static_cast<int>(3 * H),
         cell.W.value.data.data(), static_cast<int>(I),
         accumulate_dx ? T(1) : T(0), dx, static_cast<int>(I));
  }
  if (dh0) {
    for (std::size_t j = 0; j < H; ++j) dh0[j] += dh[j];
  }
}

// Single-step convenience wrappers.
template <typename T>
std::vector<T> gru_step(const GruCellT<T>& cell, const T* x_t, const T* h_prev,
                        GruTraceT<T>* trace_out = nullptr) {
  GruTraceT<T> local;
  GruTraceT<T>& trace = trace_out ? *trace_out : local;
  gru_forward(cell, x_t, 1, h_prev, trace);
  return std::vector<T>(trace.h.begin(), trace.h.end());
}

// Bi-directional wrapper: output row t is [forward state at t | backward
// state at t]; both directions start from zero states.
template <typename T>
struct BiGruT {
  GruCellT<T> fwd;
  GruCellT<T> bwd;

  void init(const std::string& name, std::size_t in_dim, std::size_t hidden,
            Rng& rng) {
    fwd.init(name + ".fwd", in_dim, hidden, rng);
    bwd.init(name + ".bwd", in_dim, hidden, rng);
  }
  void collect(ParamRefs<T>& refs) {
    fwd.collect(refs);
    bwd.collect(refs);
  }
  std::size_t out_dim() const { return 2 * fwd.hidden_size; }
};

template <typename T>
struct BiGruTraceT {
  GruTraceT<T> fwd;
  GruTraceT<T> bwd;
  std::vector<T> x_rev;  // reversed input rows
};

template <typename T>
void bigru_forward(const BiGruT<T>& net, const T* x, std::size_t n,
                   BiGruTraceT<T>& trace, T* y) {
  if (n == 0) throw Error("bigru_forward: empty sequence");
  const std::size_t I = net.fwd.input_size;
  const std::size_t H = net.fwd.hidden_size;
  gru_forward(net.fwd, x, n, nullptr, trace.fwd);
  trace.x_rev.resize(n * I);
  for (std::size_t t = 0; t < n; ++t) {
    std::memcpy(trace.x_rev.data() + t * I, x + (n - 1 - t) * I,
                I * sizeof(T));
  }
  gru_forward(net.bwd, trace.x_rev.data(), n, nullptr, trace.bwd);
  for (std::size_t t = 0; t < n; ++t) {
    std::memcpy(y + t * 2 * H, trace.fwd.h.data() + t * H, H * sizeof(T));
    std::memcpy(y + t * 2 * H + H, trace.bwd.h.data() + (n - 1 - t) * H,
                H * sizeof(T));
  }
}

template <typename T>
void bigru_backward(BiGruT<T>& net, const T* x, const BiGruTraceT<T>& trace,
                    const T* dy, T* dx, bool accumulate_dx = false) {
  const std::size_t n = trace.fwd.n;
  const std::size_t I = net.fwd.input_size;
  const std::size_t H = net.fwd.hidden_size;
  std::vector<T> dhf(n * H), dhb(n * H);
  for (std::size_t t = 0; t < n; ++t) {
    std::memcpy(dhf.data() + t * H, dy + t * 2 * H, H * sizeof(T));
    std::memcpy(dhb.data() + (n - 1 - t) * H, dy + t * 2 * H + H,
                H * sizeof(T));
  }
  gru_backward(net.fwd, x, trace.fwd, dhf.data(), dx, accumulate_dx);
  std::vector<T> dx_rev;
  T* dx_rev_ptr = nullptr;
  if (dx) {
    dx_rev.assign(n * I, T(0));
    dx_rev_ptr = dx_rev.data();
  }
  gru_backward(net.bwd, trace.x_rev.data(), trace.bwd, dhb.data(), dx_rev_ptr,
               false);
  if (dx) {
    for (std::size_t t = 0; t < n; ++t) {
      const T* src = dx_rev.data() + (n - 1 - t) * I;
      T* dst = dx + t * I;
      for (std::size_t j = 0; j < I; ++j) dst[j] += src[j];
    }
  }
}

}  // namespace langtrack::nn
