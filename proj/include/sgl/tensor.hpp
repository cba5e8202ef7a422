#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "sgl/errors.hpp"

namespace sgl {

// Dense row-major float32 tensor. Activations are NCHW, conv weights are
// (out, in, k, k), transposed-conv weights are (in, out, k, k).
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<int> shape);
    Tensor(std::initializer_list<int> shape) : Tensor(std::vector<int>(shape)) {}

    static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }
    static Tensor full(std::vector<int> shape, float value);

    int ndim() const { return static_cast<int>(shape_.size()); }
    int dim(int i) const { return shape_[static_cast<size_t>(i)]; }
    const std::vector<int>& shape() const { return shape_; }
    int64_t numel() const { return static_cast<int64_t>(data_.size()); }
    bool empty() const { return data_.empty(); }

    float* data() { return data_.data(); }
    const float* data() const { return data_.data(); }

    float& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
    float operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

    // 4-d accessor for NCHW tensors.
    float& at(int n, int c, int h, int w) {
        return data_[static_cast<size_t>(((int64_t(n) * shape_[1] + c) * shape_[2] + h) * shape_[3] + w)];
    }
    float at(int n, int c, int h, int w) const {
        return data_[static_cast<size_t>(((int64_t(n) * shape_[1] + c) * shape_[2] + h) * shape_[3] + w)];
    }

    void fill(float value);
    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
    std::string shape_str() const;

    // Throws ShapeError unless shapes match.
    void require_shape(const std::vector<int>& expect, const char* what) const;

    bool all_finite() const;

private:
    std::vector<int> shape_;
    std::vector<float> data_;
};

// Channel-axis concatenation of NCHW tensors (all parts share N, H, W).
Tensor concat_channels(const std::vector<const Tensor*>& parts);
// Splits a channel-axis gradient back into the given part sizes.
std::vector<Tensor> split_channels(const Tensor& whole, const std::vector<int>& channels);

}  // namespace sgl
