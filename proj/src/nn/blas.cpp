#include "langtrack/nn/blas.hpp"

#include <cblas.h>

#include <mutex>

extern "C" void openblas_set_num_threads(int);

namespace langtrack::nn {

namespace {

void pin_threads() {
  // One BLAS thread keeps every reduction order fixed.
  static std::once_flag flag;
  std::call_once(flag, [] { openblas_set_num_threads(1); });
}

}  // namespace

void gemm(bool trans_a, bool trans_b, int m, int n, int k, float alpha,
          const float* a, int lda, const float* b, int ldb, float beta,
          float* c, int ldc) {
  pin_threads();
  cblas_sgemm(CblasRowMajor, trans_a ? CblasTrans : CblasNoTrans,
              trans_b ? CblasTrans : CblasNoTrans, m, n, k, alpha, a, lda, b,
              ldb, beta, c, ldc);
}

void gemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha,
          const double* a, int lda, const double* b, int ldb, double beta,
          double* c, int ldc) {
  pin_threads();
  cblas_dgemm(CblasRowMajor, trans_a ? CblasTrans : CblasNoTrans,
              trans_b ? CblasTrans : CblasNoTrans, m, n, k, alpha, a, lda, b,
              ldb, beta, c, ldc);
}

void gemv(bool trans_a, int m, int n, float alpha, const float* a, int lda,
          const float* x, float beta, float* y) {
  pin_threads();
  cblas_sgemv(CblasRowMajor, trans_a ? CblasTrans : CblasNoTrans, m, n, alpha,
              a, lda, x, 1, beta, y, 1);
}

void gemv(bool trans_a, int m, int n, double alpha, const double* a, int lda,
          const double* x, double beta, double* y) {
  pin_threads();
  cblas_dgemv(CblasRowMajor, trans_a ? CblasTrans : CblasNoTrans, m, n, alpha,
              a, lda, x, 1, beta, y, 1);
}

}  // namespace langtrack::nn
