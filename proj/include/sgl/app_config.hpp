#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "sgl/model_config.hpp"
#include "sgl/optim.hpp"
#include "sgl/schedule.hpp"

namespace sgl {

struct DataOptions {
    int stride = 1;
    int batch_size = 4;
    int parser_epochs = 20;
    int b_pretrain_epochs = 20;
    bool joint_b = false;       // keep updating B during adversarial training
    int checkpoint_every = 1;   // epochs between checkpoints
};

// One JSON config file drives every command; CLI flags override fields.
struct AppConfig {
    ModelConfig model;
    LambdaSchedule schedule;
    AdamConfig adam;
    DataOptions data;
};

AppConfig app_config_from_json(const nlohmann::json& j);
nlohmann::json app_config_to_json(const AppConfig& cfg);
AppConfig load_app_config(const std::filesystem::path& path);

nlohmann::json model_config_to_json(const ModelConfig& m);
ModelConfig model_config_from_json(const nlohmann::json& j);
nlohmann::json schedule_to_json(const LambdaSchedule& s);
LambdaSchedule schedule_from_json(const nlohmann::json& j);
nlohmann::json adam_to_json(const AdamConfig& a);
AdamConfig adam_from_json(const nlohmann::json& j);

}  // namespace sgl
