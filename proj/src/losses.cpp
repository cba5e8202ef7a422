#include "sgl/losses.hpp"

#include <cmath>

namespace sgl {

namespace {

double mean_sq_diff(const Tensor& t, float target) {
    double acc = 0.0;
    for (int64_t i = 0; i < t.numel(); ++i) {
        const double d = double(t[i]) - target;
        acc += d * d;
    }
    return acc / double(t.numel());
}

}  // namespace

double lsgan_d_loss(const Tensor& real_scores, const Tensor& fake_scores) {
    if (!real_scores.same_shape(fake_scores))
        throw ShapeError("lsgan_d_loss: score maps differ in shape: " + real_scores.shape_str() + " vs " +
                         fake_scores.shape_str());
    return 0.5 * mean_sq_diff(real_scores, 1.0f) + 0.5 * mean_sq_diff(fake_scores, 0.0f);
}

double lsgan_g_loss(const Tensor& fake_scores) { return 0.5 * mean_sq_diff(fake_scores, 1.0f); }

Tensor lsgan_d_real_grad(const Tensor& real_scores) {
    Tensor g(real_scores.shape());
    const float inv = 1.0f / static_cast<float>(real_scores.numel());
    for (int64_t i = 0; i < g.numel(); ++i) g[i] = (real_scores[i] - 1.0f) * inv;
    return g;
}

Tensor lsgan_d_fake_grad(const Tensor& fake_scores) {
    Tensor g(fake_scores.shape());
    const float inv = 1.0f / static_cast<float>(fake_scores.numel());
    for (int64_t i = 0; i < g.numel(); ++i) g[i] = fake_scores[i] * inv;
    return g;
}

Tensor lsgan_g_grad(const Tensor& fake_scores) {
    Tensor g(fake_scores.shape());
    const float inv = 1.0f / static_cast<float>(fake_scores.numel());
    for (int64_t i = 0; i < g.numel(); ++i) g[i] = (fake_scores[i] - 1.0f) * inv;
    return g;
}

double l1_loss(const Tensor& generated, const Tensor& target) {
    if (!generated.same_shape(target))
        throw ShapeError("l1_loss: shapes differ: " + generated.shape_str() + " vs " + target.shape_str());
    double acc = 0.0;
    for (int64_t i = 0; i < generated.numel(); ++i) acc += std::abs(double(generated[i]) - target[i]);
    return acc / double(generated.numel());
}

Tensor l1_grad(const Tensor& generated, const Tensor& target) {
    Tensor g(generated.shape());
    const float inv = 1.0f / static_cast<float>(generated.numel());
    for (int64_t i = 0; i < g.numel(); ++i) {
        const float d = generated[i] - target[i];
        g[i] = d > 0.0f ? inv : (d < 0.0f ? -inv : 0.0f);
    }
    return g;
}

double generator_objective(const Tensor& fake_scores, const Tensor& generated, const Tensor& target,
                           double lambda) {
    return lsgan_g_loss(fake_scores) + lambda * l1_loss(generated, target);
}

double softmax_cross_entropy(const Tensor& logits, const std::vector<uint8_t>& labels, Tensor* dlogits) {
    if (logits.ndim() != 4) throw ShapeError("softmax_cross_entropy: expected (N,C,H,W) logits");
    const int n = logits.dim(0), c = logits.dim(1), h = logits.dim(2), w = logits.dim(3);
    const int64_t plane = int64_t(h) * w;
    if (static_cast<int64_t>(labels.size()) != int64_t(n) * plane)
        throw ShapeError("softmax_cross_entropy: label count does not match logits");

    if (dlogits) *dlogits = Tensor(logits.shape());
    const double inv_count = 1.0 / (double(n) * double(plane));
    double loss = 0.0;
    std::vector<double> probs(static_cast<size_t>(c));
    for (int b = 0; b < n; ++b) {
        const float* lb = logits.data() + int64_t(b) * c * plane;
        float* db = dlogits ? dlogits->data() + int64_t(b) * c * plane : nullptr;
        for (int64_t i = 0; i < plane; ++i) {
            double max_v = lb[i];
            for (int ch = 1; ch < c; ++ch) max_v = std::max(max_v, double(lb[ch * plane + i]));
            double denom = 0.0;
            for (int ch = 0; ch < c; ++ch) {
                probs[static_cast<size_t>(ch)] = std::exp(double(lb[ch * plane + i]) - max_v);
                denom += probs[static_cast<size_t>(ch)];
            }
            const int label = labels[static_cast<size_t>(int64_t(b) * plane + i)];
            if (label >= c) throw InvalidLabel("cross entropy label " + std::to_string(label) + " >= channels");
            loss -= std::log(probs[static_cast<size_t>(label)] / denom);
            if (db) {
                for (int ch = 0; ch < c; ++ch) {
                    const double p = probs[static_cast<size_t>(ch)] / denom;
                    db[ch * plane + i] =
                        static_cast<float>((p - (ch == label ? 1.0 : 0.0)) * inv_count);
                }
            }
        }
    }
    return loss * inv_count;
}

}  // namespace sgl
