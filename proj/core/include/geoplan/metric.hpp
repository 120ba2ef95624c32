#pragma once

#include "geoplan/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace geoplan {

using Vec = std::vector<Rational>;

Rational squared_norm(const Vec& v);
Rational squared_distance(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& v);
// a + t (b - a)
Vec lerp(const Vec& a, const Vec& b, const Rational& t);

// Exact nonnegative sum r + c_1 sqrt(s_1) + ... + c_k sqrt(s_k) with the
// s_i pairwise incommensurable (no ratio s_i/s_j is a rational square), so
// the representation is unique.
class ExactLength {
public:
    struct Term {
        Rational coeff;
        Rational radicand;
    };

    ExactLength() = default;
    explicit ExactLength(const Rational& r) : rational_(r) {}
    static ExactLength sqrt_of(const Rational& square);

    ExactLength& operator+=(const ExactLength& other);
    ExactLength& add_sqrt(const Rational& square, const Rational& coeff = 1);
    friend ExactLength operator+(ExactLength a, const ExactLength& b) { return a += b; }

    const Rational& rational_part() const { return rational_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const;
    // The value when it is rational.
    std::optional<Rational> as_rational() const;
    // The exact square when it is rational, i.e. at most one term is present.
    std::optional<Rational> square() const;

    long double approx() const;
    // Fixed-point decimal with `digits` fractional digits, computed at high precision.
    std::string decimal(int digits = 12) const;
    // "5", "sqrt(2)", "1+3/2*sqrt(5)"
    std::string str() const;

    bool operator==(const ExactLength& other) const;

private:
    Rational rational_{0};
    std::vector<Term> terms_;
};

// Piecewise-linear path in a Euclidean chart. A single vertex is a constant path.
struct Polyline {
    std::vector<Vec> vertices;
    std::vector<Rational> params;
    std::string chart;

    // Params i/(m-1).
    static Polyline uniform(std::vector<Vec> vertices, std::string chart = {});

    // Throws ValidationError or DimensionMismatch.
    void validate() const;
    std::size_t dimension() const;
    Vec at(const Rational& t) const;
};

// lambda as a piecewise-linear table of (t, lambda(t)) knots.
struct SpeedProfile {
    std::vector<std::pair<Rational, Rational>> knots;
    Rational operator()(const Rational& t) const;
};

ExactLength path_length(const Polyline& p);

// True iff |d(p(t),p(t')) - lambda |t-t'|| <= tol for all pairs on the uniform
// grid of `samples` points merged with the breakpoints, lambda = path_length(p).
// tol = 0 compares squares exactly; tol > 0 evaluates at high precision.
bool is_geodesic(const Polyline& p, std::size_t samples, const Rational& tol = 0);

// Maximum over merged breakpoints and a uniform grid of d(p(t), q(t)). The
// distance between two linear maps is convex on each merged interval, so the
// result is the exact supremum.
ExactLength sup_distance(const Polyline& p, const Polyline& q, std::size_t samples = 2);
Rational sup_distance_squared(const Polyline& p, const Polyline& q, std::size_t samples = 2);

// lambda(t) = length(p|[0,t]) / length(p), identity for constant paths.
SpeedProfile speed_profile(const Polyline& p);

// Same vertex sequence (consecutive repeats collapsed), params replaced by the
// cumulative length fractions. Exact whenever the chord lengths are pairwise
// commensurable; otherwise fractions are rounded to 2^-64 and kept strictly
// increasing.
Polyline reparametrize_constant_speed(const Polyline& p);

} // namespace geoplan

namespace geoplan {

// For each `from[i]` the index of the unique nearest `to[j]` (squared
// Euclidean distance). Throws AmbiguityError on an exact tie or when two
// entries pick the same target.
std::vector<std::size_t> nearest_matching(const std::vector<Vec>& from, const std::vector<Vec>& to);

} // namespace geoplan
