#pragma once

#include <cstdint>
#include <vector>

#include "sgl/tensor.hpp"

namespace sgl {

// Least-squares adversarial losses (labels: real -> 1, fake -> 0, generator
// target c = 1). Score maps are raw reals of any matching shape.

// 0.5*mean((real-1)^2) + 0.5*mean(fake^2)
double lsgan_d_loss(const Tensor& real_scores, const Tensor& fake_scores);
// 0.5*mean((fake-1)^2)
double lsgan_g_loss(const Tensor& fake_scores);

// d/dscores of the respective loss terms.
Tensor lsgan_d_real_grad(const Tensor& real_scores);
Tensor lsgan_d_fake_grad(const Tensor& fake_scores);
Tensor lsgan_g_grad(const Tensor& fake_scores);

// Mean absolute error over all entries (normalized image domain).
double l1_loss(const Tensor& generated, const Tensor& target);
// d/dgenerated: sign(generated-target)/numel
Tensor l1_grad(const Tensor& generated, const Tensor& target);

// lsgan_g_loss + lambda * l1_loss
double generator_objective(const Tensor& fake_scores, const Tensor& generated, const Tensor& target,
                           double lambda);

// Mean per-pixel cross entropy of channel softmax vs integer labels
// (labels.size() == N*H*W). Optionally writes d/dlogits.
double softmax_cross_entropy(const Tensor& logits, const std::vector<uint8_t>& labels, Tensor* dlogits);

}  // namespace sgl
