#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace evoviz {

// The single random stream of a run. The engine is std::mt19937_64 (its
// output sequence is fixed by the C++ standard); doubles and bounded integers
// are derived from raw 64-bit outputs without std::*_distribution, whose
// algorithms are implementation-defined. This keeps histories reproducible
// across standard libraries.
class Rng {
public:
    static constexpr std::string_view algorithm = "mt19937_64;u01=(x>>11)*2^-53;below=rejection";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0,1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n) for n >= 1, unbiased.
    std::size_t below(std::size_t n)
    {
        const auto bound = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = (~std::uint64_t{0} / bound) * bound;
        std::uint64_t x = 0;
        do {
            x = next();
        } while (x >= limit);
        return static_cast<std::size_t>(x % bound);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace evoviz
