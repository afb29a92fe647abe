#include "trussdec/generate.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace trussdec {

namespace {

// Engine-independent uniform double in [0, 1); std:: distributions are not
// specified bit-for-bit across standard libraries.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

RawEdgeList generate_er(std::uint32_t n, double p, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("generate_er: n must be positive");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("generate_er: p must be in [0, 1]");

    RawEdgeList raw;
    if (p == 0.0) return raw;

    std::mt19937_64 rng(seed);
    const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;

    if (p == 1.0) {
        for (std::uint32_t u = 0; u < n; u++)
            for (std::uint32_t v = u + 1; v < n; v++) raw.edges.emplace_back(u, v);
        return raw;
    }

    // Geometric skipping over the C(n, 2) pair indices.
    const double log1mp = std::log1p(-p);
    std::uint64_t idx = 0;
    while (true) {
        double r = uniform01(rng);
        std::uint64_t skip = static_cast<std::uint64_t>(std::floor(std::log1p(-r) / log1mp));
        idx += skip;
        if (idx >= total) break;
        // Pair index -> (u, v) with u < v, row-major over u.
        std::uint64_t i = idx;
        std::uint32_t u = 0;
        std::uint64_t row = n - 1;
        while (i >= row) {
            i -= row;
            row--;
            u++;
        }
        raw.edges.emplace_back(u, u + 1 + i);
        idx++;
    }
    return raw;
}

RawEdgeList generate_rmat(std::uint32_t scale, std::uint32_t edge_factor, std::uint64_t seed,
                          double a, double b, double c, double d) {
    if (std::abs(a + b + c + d - 1.0) > 1e-9)
        throw std::invalid_argument("generate_rmat: quadrant probabilities must sum to 1");
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw std::invalid_argument("generate_rmat: quadrant probabilities must be nonnegative");
    if (scale == 0 || scale > 31) throw std::invalid_argument("generate_rmat: scale must be in [1, 31]");

    std::mt19937_64 rng(seed);
    const std::uint64_t n = 1ull << scale;
    const std::uint64_t edges = n * edge_factor;

    RawEdgeList raw;
    raw.edges.reserve(edges);
    for (std::uint64_t e = 0; e < edges; e++) {
        std::uint64_t u = 0, v = 0;
        for (std::uint32_t bit = 0; bit < scale; bit++) {
            double r = uniform01(rng);
            u <<= 1;
            v <<= 1;
            if (r < a) {
                // top-left
            } else if (r < a + b) {
                v |= 1;
            } else if (r < a + b + c) {
                u |= 1;
            } else {
                u |= 1;
                v |= 1;
            }
        }
        raw.edges.emplace_back(u, v);
    }
    return raw;
}

}  // namespace trussdec
