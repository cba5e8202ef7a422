#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sgl/layers.hpp"
#include "sgl/model_config.hpp"

namespace sgl {

// Conv block vocabulary shared by all nets: 4x4 stride-2 convs on the way
// down, mirrored transposed convs on the way up, norm in all but the
// first/last blocks, leaky-0.2 activations in encoders.

struct EncBlock {
    Conv2d conv;
    std::optional<InstanceNorm2d> norm;
    LeakyReLU act;

    EncBlock(int in_ch, int out_ch, int ksize, int stride, int pad, bool use_norm, Rng& rng);
    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& dy);
    void collect(const std::string& prefix, ParamRefs& out);
};

enum class DecAct { relu, tanh_out, logits };

struct DecBlock {
    ConvTranspose2d deconv;
    std::optional<InstanceNorm2d> norm;
    DecAct act;
    LeakyReLU relu{0.0f};
    Tanh tanh;

    DecBlock(int in_ch, int out_ch, bool use_norm, DecAct act, Rng& rng);
    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& dy);
    void collect(const std::string& prefix, ParamRefs& out);
};

// U-Net encoder-decoder with per-resolution skip connections. Serves as the
// semantic parser (frame -> parsing logits), the parsing predictor
// (parsing+pose -> parsing logits) and the single-encoder generator ablation
// (frame+pose -> image).
class UNet {
public:
    UNet(int in_ch, int out_ch, const ModelConfig& cfg, DecAct final_act, Rng& rng);

    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& dy);
    void collect(const std::string& prefix, ParamRefs& out);
    ParamRefs parameters(const std::string& prefix);
    int64_t parameter_count();

    int in_channels() const { return in_ch_; }
    int out_channels() const { return out_ch_; }

private:
    int in_ch_, out_ch_, depth_, image_size_;
    std::vector<int> enc_ch_;
    std::vector<EncBlock> enc_;
    std::vector<DecBlock> dec_;
    std::vector<Tensor> acts_;
};

struct GenAblation {
    bool zero_enc1_skips = false;
    bool zero_enc2_skips = false;
};

// Two downsampling encoders, concatenated latents, one decoder receiving
// skips from both encoders at every resolution. Output is tanh-bounded RGB.
class DualEncoderGenerator {
public:
    DualEncoderGenerator(const ModelConfig& cfg, Rng& rng);

    Tensor forward(const Tensor& enc1_in, const Tensor& enc2_in);
    Tensor forward_ablated(const Tensor& enc1_in, const Tensor& enc2_in, const GenAblation& ablation);
    // Returns (d_enc1_in, d_enc2_in).
    std::pair<Tensor, Tensor> backward(const Tensor& dy);
    void collect(const std::string& prefix, ParamRefs& out);
    ParamRefs parameters(const std::string& prefix);
    int64_t parameter_count();

    int enc1_channels() const { return enc1_in_ch_; }
    int enc2_channels() const { return enc2_in_ch_; }

private:
    int enc1_in_ch_, enc2_in_ch_, depth_, image_size_;
    std::vector<int> enc_ch_;
    std::vector<EncBlock> enc1_, enc2_;
    std::vector<DecBlock> dec_;
    std::vector<Tensor> a1_, a2_;
};

// Three stride-2 blocks then a stride-1 tail; emits a (1, S/8, S/8) map of
// unbounded patch scores (least-squares objective, no sigmoid).
class PatchDiscriminator {
public:
    PatchDiscriminator(int in_ch, const ModelConfig& cfg, Rng& rng);

    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& dy);  // input gradient; param grads accumulate
    void collect(const std::string& prefix, ParamRefs& out);
    ParamRefs parameters(const std::string& prefix);
    int64_t parameter_count();

    int in_channels() const { return in_ch_; }
    static constexpr int downsampling_blocks = 3;

private:
    int in_ch_, image_size_;
    std::vector<EncBlock> blocks_;
    std::unique_ptr<Conv2d> final_;
};

// Channel widths of the conditioning stacks.
int parser_in_channels();
int predictor_in_channels(const ModelConfig& cfg);
int generator_enc1_channels(const ModelConfig& cfg);  // one-hot predicted parsing ⊕ pose render
int generator_enc2_channels(const ModelConfig& cfg);  // input frame ⊕ one-hot initial parsing
int discriminator_in_channels(const ModelConfig& cfg);

// The four nets of the pipeline (pix2pix arch keeps only generator +
// discriminator, with the single-encoder UNet standing in as generator).
struct Networks {
    ModelConfig config;
    std::unique_ptr<UNet> parser;
    std::unique_ptr<UNet> predictor;
    std::unique_ptr<DualEncoderGenerator> generator;
    std::unique_ptr<UNet> p2p_generator;
    std::unique_ptr<PatchDiscriminator> discriminator;

    static Networks create(const ModelConfig& cfg);
    ParamRefs all_parameters();
};

}  // namespace sgl
