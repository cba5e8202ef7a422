#pragma once

#include <cstdint>
#include <vector>

namespace sgl {

// Deterministic RNG. Normal deviates use hand-rolled Box-Muller so streams are
// identical across standard libraries, not just across runs.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    uint64_t next_u64();
    double uniform();                 // [0, 1)
    double uniform(double lo, double hi);
    float normal(float mean, float stddev);
    int uniform_int(int n);           // [0, n)

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
            int j = uniform_int(i + 1);
            std::swap(v[static_cast<size_t>(i)], v[static_cast<size_t>(j)]);
        }
    }

private:
    uint64_t state_;
    bool have_spare_ = false;
    float spare_ = 0.0f;
};

}  // namespace sgl
