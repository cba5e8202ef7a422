#include <cmath>
#include <cstring>

#include "sgl/kernels.hpp"

// Production kernels. Parallel loops are over independent output elements
// (rows of C, rows of col, channels, elementwise chunks), so a given output
// value is always accumulated by exactly one thread in a fixed order.

namespace sgl::kernels::omp {

namespace {

// C[i,:] += alpha * opA[i,p] * B[p,:] with contiguous inner loop.
inline void gemm_rowmajor_nn(bool trans_a, int m, int n, int k,
                             float alpha, const float* a, const float* b, float* c) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < m; ++i) {
        float* crow = c + int64_t(i) * n;
        for (int p = 0; p < k; ++p) {
            const float av = alpha * (trans_a ? a[int64_t(p) * m + i] : a[int64_t(i) * k + p]);
            const float* brow = b + int64_t(p) * n;
            for (int j = 0; j < n; ++j) crow[j] += av * brow[j];
        }
    }
}

// C[i,j] += alpha * dot(opA[i,:], B[j,:]) — B transposed, contiguous dots.
inline void gemm_rowmajor_nt(bool trans_a, int m, int n, int k,
                             float alpha, const float* a, const float* b, float* c) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < m; ++i) {
        float* crow = c + int64_t(i) * n;
        for (int j = 0; j < n; ++j) {
            const float* brow = b + int64_t(j) * k;
            float acc = 0.0f;
            if (trans_a) {
                for (int p = 0; p < k; ++p) acc += a[int64_t(p) * m + i] * brow[p];
            } else {
                const float* arow = a + int64_t(i) * k;
                for (int p = 0; p < k; ++p) acc += arow[p] * brow[p];
            }
            crow[j] += alpha * acc;
        }
    }
}

}  // namespace

void gemm(bool trans_a, bool trans_b, int m, int n, int k,
          float alpha, const float* a, const float* b, float beta, float* c) {
    const int64_t total = int64_t(m) * n;
    if (beta == 0.0f) {
        std::memset(c, 0, sizeof(float) * static_cast<size_t>(total));
    } else if (beta != 1.0f) {
#pragma omp parallel for schedule(static)
        for (int64_t i = 0; i < total; ++i) c[i] *= beta;
    }
    if (trans_b)
        gemm_rowmajor_nt(trans_a, m, n, k, alpha, a, b, c);
    else
        gemm_rowmajor_nn(trans_a, m, n, k, alpha, a, b, c);
}

void im2col(const float* im, int channels, int height, int width,
            int ksize, int stride, int pad, float* col) {
    const int out_h = conv_out_size(height, ksize, stride, pad);
    const int out_w = conv_out_size(width, ksize, stride, pad);
    const int rows = channels * ksize * ksize;
#pragma omp parallel for schedule(static)
    for (int row = 0; row < rows; ++row) {
        const int c = row / (ksize * ksize);
        const int ki = (row / ksize) % ksize;
        const int kj = row % ksize;
        float* dst = col + int64_t(row) * out_h * out_w;
        for (int oh = 0; oh < out_h; ++oh) {
            const int ih = oh * stride - pad + ki;
            float* drow = dst + int64_t(oh) * out_w;
            if (ih < 0 || ih >= height) {
                std::memset(drow, 0, sizeof(float) * static_cast<size_t>(out_w));
                continue;
            }
            const float* srow = im + (int64_t(c) * height + ih) * width;
            for (int ow = 0; ow < out_w; ++ow) {
                const int iw = ow * stride - pad + kj;
                drow[ow] = (iw >= 0 && iw < width) ? srow[iw] : 0.0f;
            }
        }
    }
}

void col2im(const float* col, int channels, int height, int width,
            int ksize, int stride, int pad, float* im) {
    const int out_h = conv_out_size(height, ksize, stride, pad);
    const int out_w = conv_out_size(width, ksize, stride, pad);
    // Parallel over channels: every (c,ih,iw) target is touched by one thread.
#pragma omp parallel for schedule(static)
    for (int c = 0; c < channels; ++c) {
        for (int ki = 0; ki < ksize; ++ki) {
            for (int kj = 0; kj < ksize; ++kj) {
                const int row = (c * ksize + ki) * ksize + kj;
                const float* src = col + int64_t(row) * out_h * out_w;
                for (int oh = 0; oh < out_h; ++oh) {
                    const int ih = oh * stride - pad + ki;
                    if (ih < 0 || ih >= height) continue;
                    float* irow = im + (int64_t(c) * height + ih) * width;
                    const float* srow = src + int64_t(oh) * out_w;
                    for (int ow = 0; ow < out_w; ++ow) {
                        const int iw = ow * stride - pad + kj;
                        if (iw >= 0 && iw < width) irow[iw] += srow[ow];
                    }
                }
            }
        }
    }
}

void leaky_relu_forward(const float* x, float* y, int64_t n, float slope) {
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < n; ++i) y[i] = x[i] > 0.0f ? x[i] : slope * x[i];
}

void leaky_relu_backward(const float* x, const float* dy, float* dx, int64_t n, float slope) {
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < n; ++i) dx[i] = x[i] > 0.0f ? dy[i] : slope * dy[i];
}

void tanh_forward(const float* x, float* y, int64_t n) {
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < n; ++i) y[i] = std::tanh(x[i]);
}

void tanh_backward(const float* y, const float* dy, float* dx, int64_t n) {
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < n; ++i) dx[i] = dy[i] * (1.0f - y[i] * y[i]);
}

void axpy(int64_t n, float alpha, const float* x, float* y) {
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void instance_norm_stats(const float* x, int groups, int64_t group_size,
                         float eps, float* mean, float* inv_std) {
#pragma omp parallel for schedule(static)
    for (int g = 0; g < groups; ++g) {
        const float* p = x + int64_t(g) * group_size;
        double s = 0.0;
        for (int64_t i = 0; i < group_size; ++i) s += p[i];
        double mu = s / double(group_size);
        double sq = 0.0;
        for (int64_t i = 0; i < group_size; ++i) {
            double d = p[i] - mu;
            sq += d * d;
        }
        mean[g] = static_cast<float>(mu);
        inv_std[g] = static_cast<float>(1.0 / std::sqrt(sq / double(group_size) + eps));
    }
}

void adam_update(int64_t n, float* w, const float* g, float* m, float* v,
                 float lr, float beta1, float beta2, float eps,
                 float bias_corr1, float bias_corr2) {
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < n; ++i) {
        m[i] = beta1 * m[i] + (1.0f - beta1) * g[i];
        v[i] = beta2 * v[i] + (1.0f - beta2) * g[i] * g[i];
        float mhat = m[i] / bias_corr1;
        float vhat = v[i] / bias_corr2;
        w[i] -= lr * mhat / (std::sqrt(vhat) + eps);
    }
}

}  // namespace sgl::kernels::omp
