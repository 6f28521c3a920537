#include "rankgraph/perlin.hpp"

#include <cmath>
#include <numeric>

#include "rankgraph/counter_rng.hpp"

namespace rankgraph {

namespace {

double fade(double t) {
    return t * t * t * (t * (t * 6.0 - 15.0) + 10.0);
}

double lerp(double t, double a, double b) {
    return a + t * (b - a);
}

// one of 8 gradient directions, dotted with (x, y)
double grad(std::uint8_t hash, double x, double y) {
    switch (hash & 7) {
        case 0: return x + y;
        case 1: return -x + y;
        case 2: return x - y;
        case 3: return -x - y;
        case 4: return x;
        case 5: return -x;
        case 6: return y;
        default: return -y;
    }
}

}

PerlinNoise::PerlinNoise(Seed seed) {
    std::array<std::uint8_t, 256> p;
    std::iota(p.begin(), p.end(), std::uint8_t{0});
    // Fisher-Yates with counter-based draws so the table is identical on every platform
    const std::uint64_t key = counter_rng::stream_key(counter_rng::Permute, seed);
    for (std::size_t i = p.size() - 1; i > 0; --i) {
        const std::size_t j = counter_rng::hash(key, i) % (i + 1);
        std::swap(p[i], p[j]);
    }
    for (std::size_t i = 0; i < 512; ++i) perm_[i] = p[i & 255];
}

double PerlinNoise::operator()(double x, double y) const {
    const double fx = std::floor(x);
    const double fy = std::floor(y);
    const int xi = static_cast<int>(static_cast<long long>(fx) & 255);
    const int yi = static_cast<int>(static_cast<long long>(fy) & 255);
    x -= fx;
    y -= fy;
    const double u = fade(x);
    const double v = fade(y);

    const int a = perm_[xi] + yi;
    const int b = perm_[xi + 1] + yi;
    return lerp(v,
                lerp(u, grad(perm_[a], x, y), grad(perm_[b], x - 1, y)),
                lerp(u, grad(perm_[a + 1], x, y - 1), grad(perm_[b + 1], x - 1, y - 1)));
}

double PerlinNoise::fractal(double x, double y, unsigned octaves) const {
    double sum = 0.0;
    double freq = 1.0;
    double amp = 1.0;
    for (unsigned o = 0; o < octaves; ++o) {
        sum += amp * (*this)(x * freq, y * freq);
        freq *= 2.0;
        amp *= 0.5;
    }
    return sum;
}

}
