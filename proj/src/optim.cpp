#include "sgl/optim.hpp"

#include <cmath>

#include "sgl/kernels.hpp"

namespace sgl {

Adam::Adam(ParamRefs params, AdamConfig cfg) : params_(std::move(params)), cfg_(cfg) {
    m_.reserve(params_.size());
    v_.reserve(params_.size());
    for (Parameter* p : params_) {
        m_.emplace_back(p->value.shape());
        v_.emplace_back(p->value.shape());
    }
}

void Adam::step() {
    ++t_;
    const float bc1 = 1.0f - std::pow(cfg_.beta1, static_cast<float>(t_));
    const float bc2 = 1.0f - std::pow(cfg_.beta2, static_cast<float>(t_));
    for (size_t i = 0; i < params_.size(); ++i) {
        Parameter* p = params_[i];
        kernels::adam_update(p->value.numel(), p->value.data(), p->grad.data(), m_[i].data(), v_[i].data(),
                             cfg_.lr, cfg_.beta1, cfg_.beta2, cfg_.eps, bc1, bc2);
    }
}

void Adam::zero_grad() {
    for (Parameter* p : params_) p->zero_grad();
}

}  // namespace sgl
