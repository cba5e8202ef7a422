#include "sgl/manifest.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sgl/errors.hpp"

namespace sgl {

namespace {

using nlohmann::json;

std::string pick_label(const json& entry) {
    for (const char* key : {"clean_text", "text", "org_text"}) {
        if (entry.contains(key) && entry.at(key).is_string()) return entry.at(key).get<std::string>();
    }
    return "";
}

}  // namespace

ManifestLoad load_msasl_manifest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open manifest: " + path.string());
    json root;
    try {
        in >> root;
    } catch (const json::exception& e) {
        throw FormatError("manifest is not valid JSON: " + path.string() + ": " + e.what());
    }
    if (!root.is_array()) throw FormatError("manifest must be a JSON array: " + path.string());

    const std::filesystem::path root_dir = path.parent_path();
    ManifestLoad out;
    for (size_t i = 0; i < root.size(); ++i) {
        const json& entry = root[i];
        auto reject = [&](const std::string& why) {
            out.rejected.push_back({static_cast<int>(i), "manifest entry " + std::to_string(i) + ": " + why});
        };
        if (!entry.is_object()) {
            reject("not an object");
            continue;
        }
        ClipRecord rec;
        rec.gloss_label = pick_label(entry);
        if (entry.contains("signer_id") && entry.at("signer_id").is_number())
            rec.signer_id = entry.at("signer_id").get<int>();
        if (!entry.contains("file") || !entry.at("file").is_string()) {
            reject("missing 'file' field");
            continue;
        }
        const std::string file = entry.at("file").get<std::string>();
        rec.frame_dir = root_dir / "clips" / file;
        rec.keypoint_dir = rec.frame_dir;
        rec.start_frame = entry.value("start", 0);
        rec.end_frame = entry.value("end", 0);
        if (rec.start_frame >= rec.end_frame) {
            reject("start frame " + std::to_string(rec.start_frame) + " >= end frame " +
                   std::to_string(rec.end_frame));
            continue;
        }
        if (entry.contains("box")) {
            const json& box = entry.at("box");
            if (!box.is_array() || box.size() != 4) {
                reject("'box' must be [y0,x0,y1,x1]");
                continue;
            }
            rec.box = {box[0].get<double>(), box[1].get<double>(), box[2].get<double>(), box[3].get<double>()};
            const bool in_unit = rec.box.y0 >= 0.0 && rec.box.x0 >= 0.0 && rec.box.y1 <= 1.0 && rec.box.x1 <= 1.0 &&
                                 rec.box.y0 <= rec.box.y1 && rec.box.x0 <= rec.box.x1;
            if (!in_unit) {
                reject("'box' outside [0,1]^2");
                continue;
            }
        }
        rec.unavailable = !std::filesystem::is_directory(rec.frame_dir);
        out.records.push_back(std::move(rec));
    }
    return out;
}

}  // namespace sgl
