#include "geoplan/verify/rng.hpp"

#include "geoplan/errors.hpp"

#include <cstdlib>
#include <limits>
#include <string>

namespace geoplan::verify {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw DomainError("Rng::below(0)");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return v % n;
}

long Rng::range(long lo, long hi) {
    if (hi < lo) throw DomainError("Rng::range with hi < lo");
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational Rng::unit(long max_den) {
    const long q = range(1, max_den);
    const long p = static_cast<long>(below(static_cast<std::uint64_t>(q)));
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational Rng::between(const Rational& lo, const Rational& hi, long max_den) {
    return lo + (hi - lo) * unit(max_den);
}

std::uint64_t default_seed() {
    if (const char* s = std::getenv("GEOPLAN_SEED"); s != nullptr && *s != '\0') {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw ParseError(std::string("GEOPLAN_SEED is not an unsigned integer: ") + s);
        }
    }
    return 20240531;
}

} // namespace geoplan::verify
