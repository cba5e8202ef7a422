#include "sgl/tensor.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace sgl {

Tensor::Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
    int64_t n = 1;
    for (int d : shape_) {
        if (d < 0) throw ShapeError("tensor dimension must be non-negative");
        n *= d;
    }
    data_.assign(static_cast<size_t>(n), 0.0f);
}

Tensor Tensor::full(std::vector<int> shape, float value) {
    Tensor t(std::move(shape));
    t.fill(value);
    return t;
}

void Tensor::fill(float value) {
    std::fill(data_.begin(), data_.end(), value);
}

std::string Tensor::shape_str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < shape_.size(); ++i) os << (i ? "," : "") << shape_[i];
    os << ")";
    return os.str();
}

void Tensor::require_shape(const std::vector<int>& expect, const char* what) const {
    if (shape_ != expect) {
        Tensor probe;
        probe.shape_ = expect;
        throw ShapeError(std::string(what) + ": expected shape " + probe.shape_str() + ", got " + shape_str());
    }
}

bool Tensor::all_finite() const {
    for (float v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

Tensor concat_channels(const std::vector<const Tensor*>& parts) {
    if (parts.empty()) throw ShapeError("concat_channels: no parts");
    const Tensor& first = *parts.front();
    if (first.ndim() != 4) throw ShapeError("concat_channels: expects NCHW tensors");
    int n = first.dim(0), h = first.dim(2), w = first.dim(3);
    int total_c = 0;
    for (const Tensor* p : parts) {
        if (p->ndim() != 4 || p->dim(0) != n || p->dim(2) != h || p->dim(3) != w)
            throw ShapeError("concat_channels: parts disagree on N/H/W");
        total_c += p->dim(1);
    }
    Tensor out({n, total_c, h, w});
    const int64_t plane = int64_t(h) * w;
    for (int b = 0; b < n; ++b) {
        int64_t dst_c = 0;
        for (const Tensor* p : parts) {
            const int pc = p->dim(1);
            const float* src = p->data() + int64_t(b) * pc * plane;
            float* dst = out.data() + (int64_t(b) * total_c + dst_c) * plane;
            std::copy(src, src + int64_t(pc) * plane, dst);
            dst_c += pc;
        }
    }
    return out;
}

std::vector<Tensor> split_channels(const Tensor& whole, const std::vector<int>& channels) {
    if (whole.ndim() != 4) throw ShapeError("split_channels: expects NCHW tensor");
    int sum = std::accumulate(channels.begin(), channels.end(), 0);
    if (sum != whole.dim(1)) throw ShapeError("split_channels: channel counts do not sum to input channels");
    int n = whole.dim(0), h = whole.dim(2), w = whole.dim(3);
    const int64_t plane = int64_t(h) * w;
    std::vector<Tensor> out;
    out.reserve(channels.size());
    int offset = 0;
    for (int c : channels) {
        Tensor part({n, c, h, w});
        for (int b = 0; b < n; ++b) {
            const float* src = whole.data() + (int64_t(b) * whole.dim(1) + offset) * plane;
            float* dst = part.data() + int64_t(b) * c * plane;
            std::copy(src, src + int64_t(c) * plane, dst);
        }
        offset += c;
        out.push_back(std::move(part));
    }
    return out;
}

}  // namespace sgl
