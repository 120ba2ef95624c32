#pragma once

#include "geoplan/rational.hpp"

#include <cstdint>
#include <random>

namespace geoplan::verify {

// Deterministic across platforms: only the raw mt19937_64 stream is used,
// never the implementation-defined std distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t n);
    // Inclusive range.
    long range(long lo, long hi);
    bool coin() { return below(2) == 1; }
    // Uniform rational p/q in [0,1) with q in [1, max_den].
    Rational unit(long max_den = 1000);
    // lo + (hi - lo) * unit(max_den)
    Rational between(const Rational& lo, const Rational& hi, long max_den = 1000);

private:
    std::mt19937_64 engine_;
};

// GEOPLAN_SEED when set, otherwise a fixed default.
std::uint64_t default_seed();

} // namespace geoplan::verify
