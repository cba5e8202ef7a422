#include "sgl/kernels.hpp"

namespace sgl::kernels {

namespace {
Backend g_backend = Backend::openmp;
}

Backend active_backend() { return g_backend; }
void set_backend(Backend b) { g_backend = b; }

int conv_out_size(int in, int ksize, int stride, int pad) {
    return (in + 2 * pad - ksize) / stride + 1;
}

double sum(const float* x, int64_t n) {
    double acc = 0.0;
    for (int64_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

#define SGL_DISPATCH(fn, ...)                    \
    do {                                         \
        if (g_backend == Backend::serial)        \
            serial::fn(__VA_ARGS__);             \
        else                                     \
            omp::fn(__VA_ARGS__);                \
    } while (0)

void gemm(bool trans_a, bool trans_b, int m, int n, int k,
          float alpha, const float* a, const float* b, float beta, float* c) {
    SGL_DISPATCH(gemm, trans_a, trans_b, m, n, k, alpha, a, b, beta, c);
}

void im2col(const float* im, int channels, int height, int width,
            int ksize, int stride, int pad, float* col) {
    SGL_DISPATCH(im2col, im, channels, height, width, ksize, stride, pad, col);
}

void col2im(const float* col, int channels, int height, int width,
            int ksize, int stride, int pad, float* im) {
    SGL_DISPATCH(col2im, col, channels, height, width, ksize, stride, pad, im);
}

void leaky_relu_forward(const float* x, float* y, int64_t n, float slope) {
    SGL_DISPATCH(leaky_relu_forward, x, y, n, slope);
}

void leaky_relu_backward(const float* x, const float* dy, float* dx, int64_t n, float slope) {
    SGL_DISPATCH(leaky_relu_backward, x, dy, dx, n, slope);
}

void tanh_forward(const float* x, float* y, int64_t n) {
    SGL_DISPATCH(tanh_forward, x, y, n);
}

void tanh_backward(const float* y, const float* dy, float* dx, int64_t n) {
    SGL_DISPATCH(tanh_backward, y, dy, dx, n);
}

void axpy(int64_t n, float alpha, const float* x, float* y) {
    SGL_DISPATCH(axpy, n, alpha, x, y);
}

void instance_norm_stats(const float* x, int groups, int64_t group_size,
                         float eps, float* mean, float* inv_std) {
    SGL_DISPATCH(instance_norm_stats, x, groups, group_size, eps, mean, inv_std);
}

void adam_update(int64_t n, float* w, const float* g, float* m, float* v,
                 float lr, float beta1, float beta2, float eps,
                 float bias_corr1, float bias_corr2) {
    SGL_DISPATCH(adam_update, n, w, g, m, v, lr, beta1, beta2, eps, bias_corr1, bias_corr2);
}

#undef SGL_DISPATCH

}  // namespace sgl::kernels
