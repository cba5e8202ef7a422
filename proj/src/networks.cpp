#include "sgl/networks.hpp"

#include <algorithm>

#include "sgl/kernels.hpp"

namespace sgl {

namespace {

std::vector<int> encoder_channels(const ModelConfig& cfg) {
    const int depth = cfg.resolved_depth();
    std::vector<int> ch(static_cast<size_t>(depth));
    for (int k = 0; k < depth; ++k) ch[static_cast<size_t>(k)] = cfg.base_channels * std::min(1 << k, 8);
    return ch;
}

void check_input(const Tensor& x, int channels, int size, const char* what) {
    if (x.ndim() != 4 || x.dim(1) != channels || x.dim(2) != size || x.dim(3) != size)
        throw ShapeError(std::string(what) + ": expected (N," + std::to_string(channels) + "," +
                         std::to_string(size) + "," + std::to_string(size) + "), got " + x.shape_str());
}

Tensor maybe_zeroed(const Tensor& t, bool zero) {
    if (!zero) return t;
    return Tensor(t.shape());
}

void add_into(const Tensor& src, Tensor& dst) {
    kernels::axpy(dst.numel(), 1.0f, src.data(), dst.data());
}

}  // namespace

// ---------------------------------------------------------------------------
// Blocks
// ---------------------------------------------------------------------------

EncBlock::EncBlock(int in_ch, int out_ch, int ksize, int stride, int pad, bool use_norm, Rng& rng)
    : conv(in_ch, out_ch, ksize, stride, pad, rng), act(0.2f) {
    if (use_norm) norm.emplace(out_ch);
}

Tensor EncBlock::forward(const Tensor& x) {
    Tensor h = conv.forward(x);
    if (norm) h = norm->forward(h);
    return act.forward(h);
}

Tensor EncBlock::backward(const Tensor& dy) {
    Tensor dh = act.backward(dy);
    if (norm) dh = norm->backward(dh);
    return conv.backward(dh);
}

void EncBlock::collect(const std::string& prefix, ParamRefs& out) {
    conv.collect(prefix + ".conv", out);
    if (norm) norm->collect(prefix + ".norm", out);
}

DecBlock::DecBlock(int in_ch, int out_ch, bool use_norm, DecAct act_kind, Rng& rng)
    : deconv(in_ch, out_ch, 4, 2, 1, rng), act(act_kind) {
    if (use_norm) norm.emplace(out_ch);
}

Tensor DecBlock::forward(const Tensor& x) {
    Tensor h = deconv.forward(x);
    if (norm) h = norm->forward(h);
    switch (act) {
        case DecAct::relu:
            return relu.forward(h);
        case DecAct::tanh_out:
            return tanh.forward(h);
        case DecAct::logits:
            return h;
    }
    return h;
}

Tensor DecBlock::backward(const Tensor& dy) {
    Tensor dh = dy;
    switch (act) {
        case DecAct::relu:
            dh = relu.backward(dh);
            break;
        case DecAct::tanh_out:
            dh = tanh.backward(dh);
            break;
        case DecAct::logits:
            break;
    }
    if (norm) dh = norm->backward(dh);
    return deconv.backward(dh);
}

void DecBlock::collect(const std::string& prefix, ParamRefs& out) {
    deconv.collect(prefix + ".deconv", out);
    if (norm) norm->collect(prefix + ".norm", out);
}

// ---------------------------------------------------------------------------
// UNet
// ---------------------------------------------------------------------------

UNet::UNet(int in_ch, int out_ch, const ModelConfig& cfg, DecAct final_act, Rng& rng)
    : in_ch_(in_ch), out_ch_(out_ch), depth_(cfg.resolved_depth()), image_size_(cfg.image_size) {
    enc_ch_ = encoder_channels(cfg);
    enc_.reserve(static_cast<size_t>(depth_));
    for (int k = 0; k < depth_; ++k) {
        const int block_in = k == 0 ? in_ch_ : enc_ch_[static_cast<size_t>(k - 1)];
        const int spatial = image_size_ >> (k + 1);
        const bool use_norm = k > 0 && spatial > 1;
        enc_.emplace_back(block_in, enc_ch_[static_cast<size_t>(k)], 4, 2, 1, use_norm, rng);
    }
    dec_.reserve(static_cast<size_t>(depth_));
    for (int j = 0; j < depth_; ++j) {
        const bool outermost = j == depth_ - 1;
        const int prev_out = j == 0 ? 0 : enc_ch_[static_cast<size_t>(depth_ - 1 - j)];
        const int block_in = j == 0 ? enc_ch_[static_cast<size_t>(depth_ - 1)]
                                    : prev_out + enc_ch_[static_cast<size_t>(depth_ - 1 - j)];
        const int block_out = outermost ? out_ch_ : enc_ch_[static_cast<size_t>(depth_ - 2 - j)];
        dec_.emplace_back(block_in, block_out, !outermost, outermost ? final_act : DecAct::relu, rng);
    }
}

Tensor UNet::forward(const Tensor& x) {
    check_input(x, in_ch_, image_size_, "UNet");
    acts_.clear();
    acts_.reserve(static_cast<size_t>(depth_));
    Tensor h = x;
    for (int k = 0; k < depth_; ++k) {
        h = enc_[static_cast<size_t>(k)].forward(h);
        acts_.push_back(h);
    }
    for (int j = 0; j < depth_; ++j) {
        if (j > 0) {
            const Tensor& skip = acts_[static_cast<size_t>(depth_ - 1 - j)];
            h = concat_channels({&h, &skip});
        }
        h = dec_[static_cast<size_t>(j)].forward(h);
    }
    return h;
}

Tensor UNet::backward(const Tensor& dy) {
    std::vector<Tensor> skip_grads(static_cast<size_t>(depth_));
    Tensor dh = dy;
    for (int j = depth_ - 1; j >= 0; --j) {
        dh = dec_[static_cast<size_t>(j)].backward(dh);
        if (j > 0) {
            const int skip_level = depth_ - 1 - j;
            const int skip_c = enc_ch_[static_cast<size_t>(skip_level)];
            auto parts = split_channels(dh, {dh.dim(1) - skip_c, skip_c});
            dh = std::move(parts[0]);
            skip_grads[static_cast<size_t>(skip_level)] = std::move(parts[1]);
        }
    }
    // dh now holds the bottleneck gradient (enc output depth_-1).
    for (int k = depth_ - 1; k >= 0; --k) {
        Tensor g = std::move(dh);
        if (k < depth_ - 1 && skip_grads[static_cast<size_t>(k)].numel() > 0)
            add_into(skip_grads[static_cast<size_t>(k)], g);
        dh = enc_[static_cast<size_t>(k)].backward(g);
    }
    return dh;
}

void UNet::collect(const std::string& prefix, ParamRefs& out) {
    for (size_t k = 0; k < enc_.size(); ++k) enc_[k].collect(prefix + ".enc." + std::to_string(k), out);
    for (size_t j = 0; j < dec_.size(); ++j) dec_[j].collect(prefix + ".dec." + std::to_string(j), out);
}

ParamRefs UNet::parameters(const std::string& prefix) {
    ParamRefs out;
    collect(prefix, out);
    return out;
}

int64_t UNet::parameter_count() {
    ParamRefs refs = parameters("net");
    int64_t n = 0;
    for (Parameter* p : refs) n += p->value.numel();
    return n;
}

// ---------------------------------------------------------------------------
// DualEncoderGenerator
// ---------------------------------------------------------------------------

DualEncoderGenerator::DualEncoderGenerator(const ModelConfig& cfg, Rng& rng)
    : enc1_in_ch_(generator_enc1_channels(cfg)),
      enc2_in_ch_(generator_enc2_channels(cfg)),
      depth_(cfg.resolved_depth()),
      image_size_(cfg.image_size) {
    enc_ch_ = encoder_channels(cfg);
    auto build_encoder = [&](int in_ch, std::vector<EncBlock>& enc) {
        for (int k = 0; k < depth_; ++k) {
            const int block_in = k == 0 ? in_ch : enc_ch_[static_cast<size_t>(k - 1)];
            const int spatial = image_size_ >> (k + 1);
            enc.emplace_back(block_in, enc_ch_[static_cast<size_t>(k)], 4, 2, 1, k > 0 && spatial > 1, rng);
        }
    };
    build_encoder(enc1_in_ch_, enc1_);
    build_encoder(enc2_in_ch_, enc2_);

    for (int j = 0; j < depth_; ++j) {
        const bool outermost = j == depth_ - 1;
        const int prev_out = j == 0 ? 0 : enc_ch_[static_cast<size_t>(depth_ - 1 - j)];
        const int block_in = j == 0 ? 2 * enc_ch_[static_cast<size_t>(depth_ - 1)]
                                    : prev_out + 2 * enc_ch_[static_cast<size_t>(depth_ - 1 - j)];
        const int block_out = outermost ? 3 : enc_ch_[static_cast<size_t>(depth_ - 2 - j)];
        dec_.emplace_back(block_in, block_out, !outermost, outermost ? DecAct::tanh_out : DecAct::relu, rng);
    }
}

Tensor DualEncoderGenerator::forward(const Tensor& enc1_in, const Tensor& enc2_in) {
    return forward_ablated(enc1_in, enc2_in, GenAblation{});
}

Tensor DualEncoderGenerator::forward_ablated(const Tensor& enc1_in, const Tensor& enc2_in,
                                             const GenAblation& ablation) {
    check_input(enc1_in, enc1_in_ch_, image_size_, "DualEncoderGenerator.enc1");
    check_input(enc2_in, enc2_in_ch_, image_size_, "DualEncoderGenerator.enc2");
    if (enc1_in.dim(0) != enc2_in.dim(0)) throw ShapeError("DualEncoderGenerator: batch sizes differ");

    a1_.clear();
    a2_.clear();
    Tensor h1 = enc1_in, h2 = enc2_in;
    for (int k = 0; k < depth_; ++k) {
        h1 = enc1_[static_cast<size_t>(k)].forward(h1);
        a1_.push_back(h1);
        h2 = enc2_[static_cast<size_t>(k)].forward(h2);
        a2_.push_back(h2);
    }
    // Latent spaces of both encoders concatenated; decoder merges both sides'
    // skips at every resolution on the way up.
    Tensor h = concat_channels({&a1_.back(), &a2_.back()});
    for (int j = 0; j < depth_; ++j) {
        if (j > 0) {
            const int level = depth_ - 1 - j;
            Tensor s1 = maybe_zeroed(a1_[static_cast<size_t>(level)], ablation.zero_enc1_skips);
            Tensor s2 = maybe_zeroed(a2_[static_cast<size_t>(level)], ablation.zero_enc2_skips);
            h = concat_channels({&h, &s1, &s2});
        }
        h = dec_[static_cast<size_t>(j)].forward(h);
    }
    return h;
}

std::pair<Tensor, Tensor> DualEncoderGenerator::backward(const Tensor& dy) {
    std::vector<Tensor> skip1(static_cast<size_t>(depth_)), skip2(static_cast<size_t>(depth_));
    Tensor dh = dy;
    for (int j = depth_ - 1; j >= 0; --j) {
        dh = dec_[static_cast<size_t>(j)].backward(dh);
        if (j > 0) {
            const int level = depth_ - 1 - j;
            const int skip_c = enc_ch_[static_cast<size_t>(level)];
            auto parts = split_channels(dh, {dh.dim(1) - 2 * skip_c, skip_c, skip_c});
            dh = std::move(parts[0]);
            skip1[static_cast<size_t>(level)] = std::move(parts[1]);
            skip2[static_cast<size_t>(level)] = std::move(parts[2]);
        }
    }
    // Bottleneck gradient splits into the two encoders' final activations.
    const int bott_c = enc_ch_[static_cast<size_t>(depth_ - 1)];
    auto bott = split_channels(dh, {bott_c, bott_c});

    auto walk_encoder = [&](std::vector<EncBlock>& enc, std::vector<Tensor>& skips, Tensor top_grad) {
        Tensor g_above = std::move(top_grad);
        for (int k = depth_ - 1; k >= 0; --k) {
            Tensor g = std::move(g_above);
            if (k < depth_ - 1 && skips[static_cast<size_t>(k)].numel() > 0)
                add_into(skips[static_cast<size_t>(k)], g);
            g_above = enc[static_cast<size_t>(k)].backward(g);
        }
        return g_above;
    };
    Tensor d1 = walk_encoder(enc1_, skip1, std::move(bott[0]));
    Tensor d2 = walk_encoder(enc2_, skip2, std::move(bott[1]));
    return {std::move(d1), std::move(d2)};
}

void DualEncoderGenerator::collect(const std::string& prefix, ParamRefs& out) {
    for (size_t k = 0; k < enc1_.size(); ++k) enc1_[k].collect(prefix + ".enc1." + std::to_string(k), out);
    for (size_t k = 0; k < enc2_.size(); ++k) enc2_[k].collect(prefix + ".enc2." + std::to_string(k), out);
    for (size_t j = 0; j < dec_.size(); ++j) dec_[j].collect(prefix + ".dec." + std::to_string(j), out);
}

ParamRefs DualEncoderGenerator::parameters(const std::string& prefix) {
    ParamRefs out;
    collect(prefix, out);
    return out;
}

int64_t DualEncoderGenerator::parameter_count() {
    ParamRefs refs = parameters("net");
    int64_t n = 0;
    for (Parameter* p : refs) n += p->value.numel();
    return n;
}

// ---------------------------------------------------------------------------
// PatchDiscriminator
// ---------------------------------------------------------------------------

PatchDiscriminator::PatchDiscriminator(int in_ch, const ModelConfig& cfg, Rng& rng)
    : in_ch_(in_ch), image_size_(cfg.image_size) {
    const int b = cfg.base_channels;
    blocks_.emplace_back(in_ch, b, 4, 2, 1, false, rng);
    blocks_.emplace_back(b, 2 * b, 4, 2, 1, true, rng);
    blocks_.emplace_back(2 * b, 4 * b, 4, 2, 1, true, rng);
    blocks_.emplace_back(4 * b, 8 * b, 3, 1, 1, true, rng);
    final_ = std::make_unique<Conv2d>(8 * b, 1, 3, 1, 1, rng);
}

Tensor PatchDiscriminator::forward(const Tensor& x) {
    check_input(x, in_ch_, image_size_, "PatchDiscriminator");
    Tensor h = x;
    for (EncBlock& b : blocks_) h = b.forward(h);
    return final_->forward(h);
}

Tensor PatchDiscriminator::backward(const Tensor& dy) {
    Tensor dh = final_->backward(dy);
    for (int i = static_cast<int>(blocks_.size()) - 1; i >= 0; --i)
        dh = blocks_[static_cast<size_t>(i)].backward(dh);
    return dh;
}

void PatchDiscriminator::collect(const std::string& prefix, ParamRefs& out) {
    for (size_t i = 0; i < blocks_.size(); ++i) blocks_[i].collect(prefix + ".blocks." + std::to_string(i), out);
    final_->collect(prefix + ".final", out);
}

ParamRefs PatchDiscriminator::parameters(const std::string& prefix) {
    ParamRefs out;
    collect(prefix, out);
    return out;
}

int64_t PatchDiscriminator::parameter_count() {
    ParamRefs refs = parameters("net");
    int64_t n = 0;
    for (Parameter* p : refs) n += p->value.numel();
    return n;
}

// ---------------------------------------------------------------------------
// Channel plans + bundle
// ---------------------------------------------------------------------------

int parser_in_channels() { return 3; }

int predictor_in_channels(const ModelConfig& cfg) { return cfg.categories + cfg.pose_channels; }

int generator_enc1_channels(const ModelConfig& cfg) { return cfg.categories + cfg.pose_channels; }

int generator_enc2_channels(const ModelConfig& cfg) { return 3 + cfg.categories; }

int discriminator_in_channels(const ModelConfig& cfg) {
    if (cfg.arch == Arch::pix2pix) return 3 + cfg.pose_channels + 3;
    return 3 + cfg.categories + cfg.categories + cfg.pose_channels + 3;
}

Networks Networks::create(const ModelConfig& cfg) {
    cfg.validate();
    Networks nets;
    nets.config = cfg;
    Rng rng(cfg.seed ^ 0x5167414eull);
    if (cfg.arch == Arch::dual_encoder) {
        nets.parser = std::make_unique<UNet>(parser_in_channels(), cfg.categories, cfg, DecAct::logits, rng);
        nets.predictor = std::make_unique<UNet>(predictor_in_channels(cfg), cfg.categories, cfg, DecAct::logits, rng);
        nets.generator = std::make_unique<DualEncoderGenerator>(cfg, rng);
    } else {
        nets.p2p_generator = std::make_unique<UNet>(3 + cfg.pose_channels, 3, cfg, DecAct::tanh_out, rng);
    }
    nets.discriminator = std::make_unique<PatchDiscriminator>(discriminator_in_channels(cfg), cfg, rng);
    return nets;
}

ParamRefs Networks::all_parameters() {
    ParamRefs out;
    if (parser) parser->collect("parser", out);
    if (predictor) predictor->collect("predictor", out);
    if (generator) generator->collect("generator", out);
    if (p2p_generator) p2p_generator->collect("generator", out);
    if (discriminator) discriminator->collect("discriminator", out);
    return out;
}

}  // namespace sgl
