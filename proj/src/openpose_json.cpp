#include "sgl/openpose_json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sgl {

namespace {

using nlohmann::json;

template <size_t N>
void fill_joints(const json& person, const char* key, bool required, int canvas_h, int canvas_w,
                 std::array<Keypoint, N>& out) {
    if (!person.contains(key)) {
        if (required) throw FormatError(std::string("missing '") + key + "' array");
        return;  // absent hand arrays mean all hand keypoints missing
    }
    const json& arr = person.at(key);
    if (!arr.is_array() || arr.size() != N * 3)
        throw FormatError(std::string("'") + key + "' must hold " + std::to_string(N * 3) + " numbers, got " +
                          std::to_string(arr.is_array() ? arr.size() : 0));
    for (size_t j = 0; j < N; ++j) {
        const json& xv = arr[j * 3], &yv = arr[j * 3 + 1], &cv = arr[j * 3 + 2];
        if (!xv.is_number() || !yv.is_number() || !cv.is_number())
            throw FormatError(std::string("non-numeric keypoint entry in '") + key + "'");
        Keypoint k;
        k.confidence = std::clamp(cv.get<float>(), 0.0f, 1.0f);
        if (k.confidence > 0.0f) {
            k.x = std::clamp(xv.get<float>(), 0.0f, static_cast<float>(canvas_w - 1));
            k.y = std::clamp(yv.get<float>(), 0.0f, static_cast<float>(canvas_h - 1));
        }
        out[j] = k;
    }
}

template <size_t N>
void append_joints(std::ostringstream& os, const std::array<Keypoint, N>& joints) {
    for (size_t j = 0; j < N; ++j) {
        if (j) os << ",";
        os << joints[j].x << "," << joints[j].y << "," << joints[j].confidence;
    }
}

}  // namespace

PoseSkeleton parse_openpose_json(const std::string& doc, int canvas_h, int canvas_w) {
    json root;
    try {
        root = json::parse(doc);
    } catch (const json::exception& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object() || !root.contains("people") || !root.at("people").is_array())
        throw FormatError("document has no 'people' array");
    const json& people = root.at("people");
    if (people.empty()) throw NoPersonDetected("no person detected in keypoint document");

    PoseSkeleton best;
    double best_sum = -1.0;
    for (const json& person : people) {
        PoseSkeleton s;
        s.canvas_h = canvas_h;
        s.canvas_w = canvas_w;
        fill_joints(person, "pose_keypoints_2d", true, canvas_h, canvas_w, s.body);
        fill_joints(person, "hand_left_keypoints_2d", false, canvas_h, canvas_w, s.left_hand);
        fill_joints(person, "hand_right_keypoints_2d", false, canvas_h, canvas_w, s.right_hand);
        double sum = 0.0;
        for (const Keypoint& k : s.body) sum += k.confidence;
        if (sum > best_sum) {
            best_sum = sum;
            best = s;
        }
    }
    return best;
}

PoseSkeleton load_openpose_file(const std::filesystem::path& path, int canvas_h, int canvas_w) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open keypoint file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_openpose_json(buf.str(), canvas_h, canvas_w);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

std::string openpose_json_from_skeleton(const PoseSkeleton& skeleton) {
    std::ostringstream os;
    os << "{\"version\":1.3,\"people\":[{\"person_id\":[-1],\"pose_keypoints_2d\":[";
    append_joints(os, skeleton.body);
    os << "],\"hand_left_keypoints_2d\":[";
    append_joints(os, skeleton.left_hand);
    os << "],\"hand_right_keypoints_2d\":[";
    append_joints(os, skeleton.right_hand);
    os << "]}]}";
    return os.str();
}

}  // namespace sgl
