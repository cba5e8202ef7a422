#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgl/rng.hpp"
#include "sgl/tensor.hpp"

namespace sgl {

struct Parameter {
    std::string name;
    Tensor value;
    Tensor grad;

    explicit Parameter(std::vector<int> shape) : value(shape), grad(std::move(shape)) {}
    void zero_grad() { grad.fill(0.0f); }
};

using ParamRefs = std::vector<Parameter*>;

// Layers run forward once, then backward once; each caches what its backward
// needs. Backward accumulates parameter gradients and returns the input
// gradient.

class Conv2d {
public:
    Conv2d(int in_ch, int out_ch, int ksize, int stride, int pad, Rng& rng);
    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& dy);
    void collect(const std::string& prefix, ParamRefs& out);

    int in_channels() const { return in_ch_; }
    int out_channels() const { return out_ch_; }

private:
    int in_ch_, out_ch_, ksize_, stride_, pad_;
    Parameter weight_;  // (out, in, k, k)
    Parameter bias_;    // (out)
    Tensor cached_x_;
    std::vector<float> col_;
};

class ConvTranspose2d {
public:
    ConvTranspose2d(int in_ch, int out_ch, int ksize, int stride, int pad, Rng& rng);
    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& dy);
    void collect(const std::string& prefix, ParamRefs& out);

private:
    int in_ch_, out_ch_, ksize_, stride_, pad_;
    Parameter weight_;  // (in, out, k, k)
    Parameter bias_;    // (out)
    Tensor cached_x_;
    std::vector<float> col_;
};

class InstanceNorm2d {
public:
    explicit InstanceNorm2d(int channels, float eps = 1e-5f);
    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& dy);
    void collect(const std::string& prefix, ParamRefs& out);

private:
    int channels_;
    float eps_;
    Parameter gamma_, beta_;
    Tensor cached_norm_;  // x-hat
    std::vector<float> inv_std_;
};

class LeakyReLU {
public:
    explicit LeakyReLU(float slope) : slope_(slope) {}
    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& dy);

private:
    float slope_;
    Tensor cached_x_;
};

class Tanh {
public:
    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& dy);

private:
    Tensor cached_y_;
};

}  // namespace sgl
