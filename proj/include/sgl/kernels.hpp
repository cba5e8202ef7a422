#pragma once

#include <cstdint>

namespace sgl::kernels {

// Two interchangeable backends: `serial` is the straightforward reference
// implementation kept for testing; `omp` is the OpenMP-parallel production
// path. Every parallel loop has independent iterations, so results are
// reproducible run to run regardless of thread count (floating-point order
// within one output element never changes).
enum class Backend { serial, openmp };

Backend active_backend();
void set_backend(Backend b);

// C(m x n) = alpha * op(A) * op(B) + beta * C, row-major, op = optional transpose.
void gemm(bool trans_a, bool trans_b, int m, int n, int k,
          float alpha, const float* a, const float* b, float beta, float* c);

// col has (channels*ksize*ksize) rows of (out_h*out_w) columns.
void im2col(const float* im, int channels, int height, int width,
            int ksize, int stride, int pad, float* col);
// Scatter-add inverse of im2col; `im` must be pre-zeroed by the caller.
void col2im(const float* col, int channels, int height, int width,
            int ksize, int stride, int pad, float* im);

void leaky_relu_forward(const float* x, float* y, int64_t n, float slope);
void leaky_relu_backward(const float* x, const float* dy, float* dx, int64_t n, float slope);
void tanh_forward(const float* x, float* y, int64_t n);
void tanh_backward(const float* y, const float* dy, float* dx, int64_t n);

// y += alpha * x
void axpy(int64_t n, float alpha, const float* x, float* y);

// Per-group mean and 1/sqrt(var+eps) over contiguous groups (instance norm stats).
void instance_norm_stats(const float* x, int groups, int64_t group_size,
                         float eps, float* mean, float* inv_std);

void adam_update(int64_t n, float* w, const float* g, float* m, float* v,
                 float lr, float beta1, float beta2, float eps,
                 float bias_corr1, float bias_corr2);

// Deterministic double-accumulated reduction (always serial).
double sum(const float* x, int64_t n);

int conv_out_size(int in, int ksize, int stride, int pad);

namespace serial {
void gemm(bool trans_a, bool trans_b, int m, int n, int k,
          float alpha, const float* a, const float* b, float beta, float* c);
void im2col(const float* im, int channels, int height, int width,
            int ksize, int stride, int pad, float* col);
void col2im(const float* col, int channels, int height, int width,
            int ksize, int stride, int pad, float* im);
void leaky_relu_forward(const float* x, float* y, int64_t n, float slope);
void leaky_relu_backward(const float* x, const float* dy, float* dx, int64_t n, float slope);
void tanh_forward(const float* x, float* y, int64_t n);
void tanh_backward(const float* y, const float* dy, float* dx, int64_t n);
void axpy(int64_t n, float alpha, const float* x, float* y);
void instance_norm_stats(const float* x, int groups, int64_t group_size,
                         float eps, float* mean, float* inv_std);
void adam_update(int64_t n, float* w, const float* g, float* m, float* v,
                 float lr, float beta1, float beta2, float eps,
                 float bias_corr1, float bias_corr2);
}  // namespace serial

namespace omp {
void gemm(bool trans_a, bool trans_b, int m, int n, int k,
          float alpha, const float* a, const float* b, float beta, float* c);
void im2col(const float* im, int channels, int height, int width,
            int ksize, int stride, int pad, float* col);
void col2im(const float* col, int channels, int height, int width,
            int ksize, int stride, int pad, float* im);
void leaky_relu_forward(const float* x, float* y, int64_t n, float slope);
void leaky_relu_backward(const float* x, const float* dy, float* dx, int64_t n, float slope);
void tanh_forward(const float* x, float* y, int64_t n);
void tanh_backward(const float* y, const float* dy, float* dx, int64_t n);
void axpy(int64_t n, float alpha, const float* x, float* y);
void instance_norm_stats(const float* x, int groups, int64_t group_size,
                         float eps, float* mean, float* inv_std);
void adam_update(int64_t n, float* w, const float* g, float* m, float* v,
                 float lr, float beta1, float beta2, float eps,
                 float bias_corr1, float bias_corr2);
}  // namespace omp

}  // namespace sgl::kernels
