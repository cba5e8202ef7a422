#pragma once

#include <cstdint>
#include <vector>

#include "sgl/layers.hpp"

namespace sgl {

struct AdamConfig {
    float lr = 2e-4f;
    float beta1 = 0.5f;
    float beta2 = 0.999f;
    float eps = 1e-8f;
};

class Adam {
public:
    Adam(ParamRefs params, AdamConfig cfg);

    void step();
    void zero_grad();

    int64_t step_count() const { return t_; }
    void set_step_count(int64_t t) { t_ = t; }
    const ParamRefs& params() const { return params_; }
    Tensor& moment1(size_t i) { return m_[i]; }
    Tensor& moment2(size_t i) { return v_[i]; }

private:
    ParamRefs params_;
    AdamConfig cfg_;
    std::vector<Tensor> m_, v_;
    int64_t t_ = 0;
};

}  // namespace sgl
