#include "sgl/layers.hpp"

#include <cmath>

#include "sgl/kernels.hpp"

namespace sgl {

namespace {

void init_conv_weight(Tensor& w, Rng& rng) {
    for (int64_t i = 0; i < w.numel(); ++i) w[i] = rng.normal(0.0f, 0.02f);
}

void add_bias_rows(float* y, const float* bias, int channels, int64_t plane) {
    for (int c = 0; c < channels; ++c) {
        float* row = y + c * plane;
        const float b = bias[c];
        for (int64_t i = 0; i < plane; ++i) row[i] += b;
    }
}

void bias_grad_rows(const float* dy, float* db, int channels, int64_t plane) {
    for (int c = 0; c < channels; ++c) db[c] += static_cast<float>(kernels::sum(dy + c * plane, plane));
}

}  // namespace

// ---------------------------------------------------------------------------
// Conv2d
// ---------------------------------------------------------------------------

Conv2d::Conv2d(int in_ch, int out_ch, int ksize, int stride, int pad, Rng& rng)
    : in_ch_(in_ch),
      out_ch_(out_ch),
      ksize_(ksize),
      stride_(stride),
      pad_(pad),
      weight_({out_ch, in_ch, ksize, ksize}),
      bias_({out_ch}) {
    init_conv_weight(weight_.value, rng);
}

Tensor Conv2d::forward(const Tensor& x) {
    if (x.ndim() != 4 || x.dim(1) != in_ch_)
        throw ShapeError("Conv2d: expected (N," + std::to_string(in_ch_) + ",H,W), got " + x.shape_str());
    const int n = x.dim(0), h = x.dim(2), w = x.dim(3);
    const int oh = kernels::conv_out_size(h, ksize_, stride_, pad_);
    const int ow = kernels::conv_out_size(w, ksize_, stride_, pad_);
    const int kk = in_ch_ * ksize_ * ksize_;
    cached_x_ = x;
    col_.resize(static_cast<size_t>(kk) * oh * ow);

    Tensor y({n, out_ch_, oh, ow});
    const int64_t in_plane = int64_t(in_ch_) * h * w;
    const int64_t out_plane = int64_t(out_ch_) * oh * ow;
    for (int b = 0; b < n; ++b) {
        kernels::im2col(x.data() + b * in_plane, in_ch_, h, w, ksize_, stride_, pad_, col_.data());
        kernels::gemm(false, false, out_ch_, oh * ow, kk, 1.0f, weight_.value.data(), col_.data(), 0.0f,
                      y.data() + b * out_plane);
        add_bias_rows(y.data() + b * out_plane, bias_.value.data(), out_ch_, int64_t(oh) * ow);
    }
    return y;
}

Tensor Conv2d::backward(const Tensor& dy) {
    const Tensor& x = cached_x_;
    const int n = x.dim(0), h = x.dim(2), w = x.dim(3);
    const int oh = dy.dim(2), ow = dy.dim(3);
    const int kk = in_ch_ * ksize_ * ksize_;
    std::vector<float> dcol(static_cast<size_t>(kk) * oh * ow);

    Tensor dx({n, in_ch_, h, w});
    const int64_t in_plane = int64_t(in_ch_) * h * w;
    const int64_t out_plane = int64_t(out_ch_) * oh * ow;
    for (int b = 0; b < n; ++b) {
        const float* dyb = dy.data() + b * out_plane;
        kernels::im2col(x.data() + b * in_plane, in_ch_, h, w, ksize_, stride_, pad_, col_.data());
        // dW += dy * col^T ; dcol = W^T * dy ; dx = col2im(dcol)
        kernels::gemm(false, true, out_ch_, kk, oh * ow, 1.0f, dyb, col_.data(), 1.0f, weight_.grad.data());
        kernels::gemm(true, false, kk, oh * ow, out_ch_, 1.0f, weight_.value.data(), dyb, 0.0f, dcol.data());
        kernels::col2im(dcol.data(), in_ch_, h, w, ksize_, stride_, pad_, dx.data() + b * in_plane);
        bias_grad_rows(dyb, bias_.grad.data(), out_ch_, int64_t(oh) * ow);
    }
    return dx;
}

void Conv2d::collect(const std::string& prefix, ParamRefs& out) {
    weight_.name = prefix + ".weight";
    bias_.name = prefix + ".bias";
    out.push_back(&weight_);
    out.push_back(&bias_);
}

// ---------------------------------------------------------------------------
// ConvTranspose2d
// ---------------------------------------------------------------------------

ConvTranspose2d::ConvTranspose2d(int in_ch, int out_ch, int ksize, int stride, int pad, Rng& rng)
    : in_ch_(in_ch),
      out_ch_(out_ch),
      ksize_(ksize),
      stride_(stride),
      pad_(pad),
      weight_({in_ch, out_ch, ksize, ksize}),
      bias_({out_ch}) {
    init_conv_weight(weight_.value, rng);
}

Tensor ConvTranspose2d::forward(const Tensor& x) {
    if (x.ndim() != 4 || x.dim(1) != in_ch_)
        throw ShapeError("ConvTranspose2d: expected (N," + std::to_string(in_ch_) + ",H,W), got " + x.shape_str());
    const int n = x.dim(0), h = x.dim(2), w = x.dim(3);
    const int oh = (h - 1) * stride_ - 2 * pad_ + ksize_;
    const int ow = (w - 1) * stride_ - 2 * pad_ + ksize_;
    const int kk = out_ch_ * ksize_ * ksize_;
    cached_x_ = x;
    col_.resize(static_cast<size_t>(kk) * h * w);

    Tensor y({n, out_ch_, oh, ow});
    const int64_t in_plane = int64_t(in_ch_) * h * w;
    const int64_t out_plane = int64_t(out_ch_) * oh * ow;
    for (int b = 0; b < n; ++b) {
        // cols = W_view^T (kk x in) * x_b (in x hw), scattered back to the
        // upsampled raster.
        kernels::gemm(true, false, kk, h * w, in_ch_, 1.0f, weight_.value.data(), x.data() + b * in_plane, 0.0f,
                      col_.data());
        float* yb = y.data() + b * out_plane;
        std::fill(yb, yb + out_plane, 0.0f);
        kernels::col2im(col_.data(), out_ch_, oh, ow, ksize_, stride_, pad_, yb);
        add_bias_rows(yb, bias_.value.data(), out_ch_, int64_t(oh) * ow);
    }
    return y;
}

Tensor ConvTranspose2d::backward(const Tensor& dy) {
    const Tensor& x = cached_x_;
    const int n = x.dim(0), h = x.dim(2), w = x.dim(3);
    const int oh = dy.dim(2), ow = dy.dim(3);
    const int kk = out_ch_ * ksize_ * ksize_;
    std::vector<float> dcol(static_cast<size_t>(kk) * h * w);

    Tensor dx({n, in_ch_, h, w});
    const int64_t in_plane = int64_t(in_ch_) * h * w;
    const int64_t out_plane = int64_t(out_ch_) * oh * ow;
    for (int b = 0; b < n; ++b) {
        const float* dyb = dy.data() + b * out_plane;
        kernels::im2col(dyb, out_ch_, oh, ow, ksize_, stride_, pad_, dcol.data());
        // dx = W_view (in x kk) * dcol ; dW_view += x_b * dcol^T
        kernels::gemm(false, false, in_ch_, h * w, kk, 1.0f, weight_.value.data(), dcol.data(), 0.0f,
                      dx.data() + b * in_plane);
        kernels::gemm(false, true, in_ch_, kk, h * w, 1.0f, x.data() + b * in_plane, dcol.data(), 1.0f,
                      weight_.grad.data());
        bias_grad_rows(dyb, bias_.grad.data(), out_ch_, int64_t(oh) * ow);
    }
    return dx;
}

void ConvTranspose2d::collect(const std::string& prefix, ParamRefs& out) {
    weight_.name = prefix + ".weight";
    bias_.name = prefix + ".bias";
    out.push_back(&weight_);
    out.push_back(&bias_);
}

// ---------------------------------------------------------------------------
// InstanceNorm2d
// ---------------------------------------------------------------------------

InstanceNorm2d::InstanceNorm2d(int channels, float eps)
    : channels_(channels), eps_(eps), gamma_({channels}), beta_({channels}) {
    gamma_.value.fill(1.0f);
}

Tensor InstanceNorm2d::forward(const Tensor& x) {
    if (x.ndim() != 4 || x.dim(1) != channels_)
        throw ShapeError("InstanceNorm2d: expected (N," + std::to_string(channels_) + ",H,W), got " + x.shape_str());
    const int n = x.dim(0);
    const int64_t plane = int64_t(x.dim(2)) * x.dim(3);
    const int groups = n * channels_;
    std::vector<float> mean(static_cast<size_t>(groups));
    inv_std_.resize(static_cast<size_t>(groups));
    kernels::instance_norm_stats(x.data(), groups, plane, eps_, mean.data(), inv_std_.data());

    cached_norm_ = Tensor(x.shape());
    Tensor y(x.shape());
    for (int g = 0; g < groups; ++g) {
        const float mu = mean[static_cast<size_t>(g)];
        const float is = inv_std_[static_cast<size_t>(g)];
        const float gain = gamma_.value[g % channels_];
        const float shift = beta_.value[g % channels_];
        const float* src = x.data() + g * plane;
        float* nh = cached_norm_.data() + g * plane;
        float* dst = y.data() + g * plane;
        for (int64_t i = 0; i < plane; ++i) {
            nh[i] = (src[i] - mu) * is;
            dst[i] = gain * nh[i] + shift;
        }
    }
    return y;
}

Tensor InstanceNorm2d::backward(const Tensor& dy) {
    const int n = dy.dim(0);
    const int64_t plane = int64_t(dy.dim(2)) * dy.dim(3);
    const int groups = n * channels_;
    Tensor dx(dy.shape());
    for (int g = 0; g < groups; ++g) {
        const int c = g % channels_;
        const float gain = gamma_.value[c];
        const float is = inv_std_[static_cast<size_t>(g)];
        const float* dyg = dy.data() + g * plane;
        const float* nh = cached_norm_.data() + g * plane;
        float* dxg = dx.data() + g * plane;

        double sum_dy = 0.0, sum_dy_nh = 0.0;
        for (int64_t i = 0; i < plane; ++i) {
            sum_dy += dyg[i];
            sum_dy_nh += double(dyg[i]) * nh[i];
        }
        gamma_.grad[c] += static_cast<float>(sum_dy_nh);
        beta_.grad[c] += static_cast<float>(sum_dy);

        const float mean_g = static_cast<float>(sum_dy / double(plane)) * gain;
        const float mean_g_nh = static_cast<float>(sum_dy_nh / double(plane)) * gain;
        for (int64_t i = 0; i < plane; ++i)
            dxg[i] = is * (gain * dyg[i] - mean_g - nh[i] * mean_g_nh);
    }
    return dx;
}

void InstanceNorm2d::collect(const std::string& prefix, ParamRefs& out) {
    gamma_.name = prefix + ".gamma";
    beta_.name = prefix + ".beta";
    out.push_back(&gamma_);
    out.push_back(&beta_);
}

// ---------------------------------------------------------------------------
// Activations
// ---------------------------------------------------------------------------

Tensor LeakyReLU::forward(const Tensor& x) {
    cached_x_ = x;
    Tensor y(x.shape());
    kernels::leaky_relu_forward(x.data(), y.data(), x.numel(), slope_);
    return y;
}

Tensor LeakyReLU::backward(const Tensor& dy) {
    Tensor dx(dy.shape());
    kernels::leaky_relu_backward(cached_x_.data(), dy.data(), dx.data(), dy.numel(), slope_);
    return dx;
}

Tensor Tanh::forward(const Tensor& x) {
    Tensor y(x.shape());
    kernels::tanh_forward(x.data(), y.data(), x.numel());
    cached_y_ = y;
    return y;
}

Tensor Tanh::backward(const Tensor& dy) {
    Tensor dx(dy.shape());
    kernels::tanh_backward(cached_y_.data(), dy.data(), dx.data(), dy.numel());
    return dx;
}

}  // namespace sgl
