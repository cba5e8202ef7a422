#include "sgl/rng.hpp"

#include <cmath>

namespace sgl {

// splitmix64-style mixing; fixed constants, platform independent.
uint64_t Rng::next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

float Rng::normal(float mean, float stddev) {
    if (have_spare_) {
        have_spare_ = false;
        return mean + stddev * spare_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 1e-300);
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    spare_ = static_cast<float>(r * std::sin(theta));
    have_spare_ = true;
    return mean + stddev * static_cast<float>(r * std::cos(theta));
}

int Rng::uniform_int(int n) {
    if (n <= 1) return 0;
    return static_cast<int>(next_u64() % static_cast<uint64_t>(n));
}

}  // namespace sgl
