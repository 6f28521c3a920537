#ifndef rankgraph_perlin_hpp
#define rankgraph_perlin_hpp

#include <array>
#include <cstdint>

#include "rankgraph/types.hpp"

namespace rankgraph {

/*
 * 2D improved Perlin gradient noise (quintic fade, hashed gradients) with a
 * permutation table shuffled from a seed. Values lie roughly in [-1, 1] and
 * are 0 on integer lattice points.
 */
class PerlinNoise {
public:
    explicit PerlinNoise(Seed seed);

    double operator()(double x, double y) const;

    /// Sum of `octaves` layers; layer i has frequency 2^i and amplitude 2^-i.
    double fractal(double x, double y, unsigned octaves) const;

private:
    std::array<std::uint8_t, 512> perm_;
};

}

#endif /* rankgraph_perlin_hpp */
