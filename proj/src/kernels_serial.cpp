#include <cmath>
#include <cstring>

#include "sgl/kernels.hpp"

// Reference kernels: plain loops, no tricks. These define the expected
// numerics; the OpenMP backend is validated against them.

namespace sgl::kernels::serial {

void gemm(bool trans_a, bool trans_b, int m, int n, int k,
          float alpha, const float* a, const float* b, float beta, float* c) {
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            float acc = 0.0f;
            for (int p = 0; p < k; ++p) {
                float av = trans_a ? a[int64_t(p) * m + i] : a[int64_t(i) * k + p];
                float bv = trans_b ? b[int64_t(j) * k + p] : b[int64_t(p) * n + j];
                acc += av * bv;
            }
            int64_t idx = int64_t(i) * n + j;
            c[idx] = alpha * acc + (beta == 0.0f ? 0.0f : beta * c[idx]);
        }
    }
}

void im2col(const float* im, int channels, int height, int width,
            int ksize, int stride, int pad, float* col) {
    const int out_h = conv_out_size(height, ksize, stride, pad);
    const int out_w = conv_out_size(width, ksize, stride, pad);
    int64_t row = 0;
    for (int c = 0; c < channels; ++c) {
        for (int ki = 0; ki < ksize; ++ki) {
            for (int kj = 0; kj < ksize; ++kj, ++row) {
                float* dst = col + row * out_h * out_w;
                for (int oh = 0; oh < out_h; ++oh) {
                    for (int ow = 0; ow < out_w; ++ow) {
                        int ih = oh * stride - pad + ki;
                        int iw = ow * stride - pad + kj;
                        float v = 0.0f;
                        if (ih >= 0 && ih < height && iw >= 0 && iw < width)
                            v = im[(int64_t(c) * height + ih) * width + iw];
                        dst[int64_t(oh) * out_w + ow] = v;
                    }
                }
            }
        }
    }
}

void col2im(const float* col, int channels, int height, int width,
            int ksize, int stride, int pad, float* im) {
    const int out_h = conv_out_size(height, ksize, stride, pad);
    const int out_w = conv_out_size(width, ksize, stride, pad);
    int64_t row = 0;
    for (int c = 0; c < channels; ++c) {
        for (int ki = 0; ki < ksize; ++ki) {
            for (int kj = 0; kj < ksize; ++kj, ++row) {
                const float* src = col + row * out_h * out_w;
                for (int oh = 0; oh < out_h; ++oh) {
                    for (int ow = 0; ow < out_w; ++ow) {
                        int ih = oh * stride - pad + ki;
                        int iw = ow * stride - pad + kj;
                        if (ih >= 0 && ih < height && iw >= 0 && iw < width)
                            im[(int64_t(c) * height + ih) * width + iw] += src[int64_t(oh) * out_w + ow];
                    }
                }
            }
        }
    }
}

void leaky_relu_forward(const float* x, float* y, int64_t n, float slope) {
    for (int64_t i = 0; i < n; ++i) y[i] = x[i] > 0.0f ? x[i] : slope * x[i];
}

void leaky_relu_backward(const float* x, const float* dy, float* dx, int64_t n, float slope) {
    for (int64_t i = 0; i < n; ++i) dx[i] = x[i] > 0.0f ? dy[i] : slope * dy[i];
}

void tanh_forward(const float* x, float* y, int64_t n) {
    for (int64_t i = 0; i < n; ++i) y[i] = std::tanh(x[i]);
}

void tanh_backward(const float* y, const float* dy, float* dx, int64_t n) {
    for (int64_t i = 0; i < n; ++i) dx[i] = dy[i] * (1.0f - y[i] * y[i]);
}

void axpy(int64_t n, float alpha, const float* x, float* y) {
    for (int64_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void instance_norm_stats(const float* x, int groups, int64_t group_size,
                         float eps, float* mean, float* inv_std) {
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
    for (int64_t i = 0; i < n; ++i) {
        m[i] = beta1 * m[i] + (1.0f - beta1) * g[i];
        v[i] = beta2 * v[i] + (1.0f - beta2) * g[i] * g[i];
        float mhat = m[i] / bias_corr1;
        float vhat = v[i] / bias_corr2;
        w[i] -= lr * mhat / (std::sqrt(vhat) + eps);
    }
}

}  // namespace sgl::kernels::serial
