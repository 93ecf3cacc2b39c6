#pragma once

#include <cstddef>

namespace langtrack::nn {

// Row-major C(m x n) = alpha * op(A) * op(B) + beta * C.
// op(A) is m x k, op(B) is k x n. Backed by single-threaded BLAS so results
// are bitwise reproducible.
void gemm(bool trans_a, bool trans_b, int m, int n, int k, float alpha,
          const float* a, int lda, const float* b, int ldb, float beta,
          float* c, int ldc);
void gemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha,
          const double* a, int lda, const double* b, int ldb, double beta,
          double* c, int ldc);

// y(m) = alpha * op(A) * x + beta * y, A row-major m x n when not transposed.
void gemv(bool trans_a, int m, int n, float alpha, const float* a, int lda,
          const float* x, float beta, float* y);
void gemv(bool trans_a, int m, int n, double alpha, const double* a, int lda,
          const double* x, double beta, double* y);

}  // namespace langtrack::nn
