#include "sgl/app_config.hpp"

#include <fstream>

namespace sgl {

using nlohmann::json;

namespace {

// Rejects misspelled keys so config typos fail loudly.
void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& section) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) throw ConfigError("unknown key '" + it.key() + "' in config section '" + section + "'");
    }
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("config field '") + key + "' has the wrong type");
    }
}

}  // namespace

json model_config_to_json(const ModelConfig& m) {
    return json{{"image_size", m.image_size},
                {"categories", m.categories},
                {"base_channels", m.base_channels},
                {"depth", m.depth},
                {"pose_channels", m.pose_channels},
                {"seed", m.seed},
                {"arch", arch_name(m.arch)},
                {"d_real_parsing", m.d_real_uses_groundtruth_parsing ? "groundtruth" : "predicted"}};
}

ModelConfig model_config_from_json(const json& j) {
    check_keys(j,
               {"image_size", "categories", "base_channels", "depth", "pose_channels", "seed", "arch",
                "d_real_parsing"},
               "model");
    ModelConfig m;
    m.image_size = get_or(j, "image_size", m.image_size);
    m.categories = get_or(j, "categories", m.categories);
    m.base_channels = get_or(j, "base_channels", m.base_channels);
    m.depth = get_or(j, "depth", m.depth);
    m.pose_channels = get_or(j, "pose_channels", m.pose_channels);
    m.seed = get_or(j, "seed", m.seed);
    m.arch = arch_from_name(get_or<std::string>(j, "arch", arch_name(m.arch)));
    const std::string real_parsing = get_or<std::string>(j, "d_real_parsing", "predicted");
    if (real_parsing != "predicted" && real_parsing != "groundtruth")
        throw ConfigError("model.d_real_parsing must be predicted|groundtruth");
    m.d_real_uses_groundtruth_parsing = real_parsing == "groundtruth";
    m.validate();
    return m;
}

json schedule_to_json(const LambdaSchedule& s) {
    json j{{"mode", schedule_mode_name(s.mode)},
           {"i", s.lower},
           {"j", s.amplitude},
           {"half_period", s.half_period},
           {"continuation", continuation_name(s.continuation)}};
    if (s.static_value) j["static_value"] = *s.static_value;
    return j;
}

LambdaSchedule schedule_from_json(const json& j) {
    check_keys(j, {"mode", "i", "j", "half_period", "continuation", "static_value"}, "schedule");
    LambdaSchedule s;
    s.mode = schedule_mode_from_name(get_or<std::string>(j, "mode", schedule_mode_name(s.mode)));
    s.lower = get_or(j, "i", s.lower);
    s.amplitude = get_or(j, "j", s.amplitude);
    s.half_period = get_or(j, "half_period", s.half_period);
    s.continuation = continuation_from_name(get_or<std::string>(j, "continuation", continuation_name(s.continuation)));
    if (j.contains("static_value")) s.static_value = j.at("static_value").get<double>();
    s.validate();
    return s;
}

json adam_to_json(const AdamConfig& a) {
    return json{{"lr", a.lr}, {"beta1", a.beta1}, {"beta2", a.beta2}, {"eps", a.eps}};
}

AdamConfig adam_from_json(const json& j) {
    check_keys(j, {"lr", "beta1", "beta2", "eps"}, "optimizer");
    AdamConfig a;
    a.lr = get_or(j, "lr", a.lr);
    a.beta1 = get_or(j, "beta1", a.beta1);
    a.beta2 = get_or(j, "beta2", a.beta2);
    a.eps = get_or(j, "eps", a.eps);
    if (a.lr <= 0.0f) throw ConfigError("optimizer.lr must be > 0");
    return a;
}

AppConfig app_config_from_json(const json& j) {
    check_keys(j, {"model", "schedule", "optimizer", "data"}, "<root>");
    AppConfig cfg;
    if (j.contains("model")) cfg.model = model_config_from_json(j.at("model"));
    if (j.contains("schedule")) cfg.schedule = schedule_from_json(j.at("schedule"));
    if (j.contains("optimizer")) cfg.adam = adam_from_json(j.at("optimizer"));
    if (j.contains("data")) {
        const json& d = j.at("data");
        check_keys(d, {"stride", "batch_size", "parser_epochs", "b_pretrain_epochs", "joint_b", "checkpoint_every"},
                   "data");
        cfg.data.stride = get_or(d, "stride", cfg.data.stride);
        cfg.data.batch_size = get_or(d, "batch_size", cfg.data.batch_size);
        cfg.data.parser_epochs = get_or(d, "parser_epochs", cfg.data.parser_epochs);
        cfg.data.b_pretrain_epochs = get_or(d, "b_pretrain_epochs", cfg.data.b_pretrain_epochs);
        cfg.data.joint_b = get_or(d, "joint_b", cfg.data.joint_b);
        cfg.data.checkpoint_every = get_or(d, "checkpoint_every", cfg.data.checkpoint_every);
        if (cfg.data.stride < 1) throw ConfigError("data.stride must be >= 1");
        if (cfg.data.batch_size < 1) throw ConfigError("data.batch_size must be >= 1");
        if (cfg.data.checkpoint_every < 1) throw ConfigError("data.checkpoint_every must be >= 1");
    }
    return cfg;
}

json app_config_to_json(const AppConfig& cfg) {
    return json{{"model", model_config_to_json(cfg.model)},
                {"schedule", schedule_to_json(cfg.schedule)},
                {"optimizer", adam_to_json(cfg.adam)},
                {"data",
                 json{{"stride", cfg.data.stride},
                      {"batch_size", cfg.data.batch_size},
                      {"parser_epochs", cfg.data.parser_epochs},
                      {"b_pretrain_epochs", cfg.data.b_pretrain_epochs},
                      {"joint_b", cfg.data.joint_b},
                      {"checkpoint_every", cfg.data.checkpoint_every}}}};
}

AppConfig load_app_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config is not valid JSON: " + path.string() + ": " + e.what());
    }
    return app_config_from_json(j);
}

}  // namespace sgl
