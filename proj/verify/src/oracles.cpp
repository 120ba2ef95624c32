#include "geoplan/verify/oracles.hpp"

#include "geoplan/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

namespace geoplan::verify {

std::vector<Vec> torus_lattice_minimizers(const Vec& x, const Vec& y, int window) {
    if (x.size() != y.size()) throw DimensionMismatch("oracle: dimension mismatch");
    const std::size_t n = x.size();
    const std::size_t span = static_cast<std::size_t>(2 * window + 1);
    // offsets[i][j] = y_i + (j - window) - x_i, squares alongside
    std::vector<std::vector<Rational>> offsets(n), squares(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < span; ++j) {
            Rational d = y[i] + static_cast<long>(j) - window - x[i];
            squares[i].push_back(d * d);
            offsets[i].push_back(std::move(d));
        }

    std::vector<std::size_t> digit(n, 0);
    std::vector<std::vector<std::size_t>> best_digits;
    Rational best, sum;
    bool first = true;
    while (true) {
        sum = 0;
        for (std::size_t i = 0; i < n; ++i) sum += squares[i][digit[i]];
        if (first || sum < best) {
            best = sum;
            best_digits.clear();
            first = false;
        }
        if (sum == best) best_digits.push_back(digit);
        std::size_t i = 0;
        while (i < n && ++digit[i] == span) digit[i++] = 0;
        if (i == n) break;
    }
    std::vector<Vec> out;
    for (const auto& d : best_digits) {
        Vec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = offsets[i][d[i]];
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// (u, v) -> (u + tu, s v + tv)
struct Affine {
    int s;
    long tu;
    long tv;
    auto key() const { return std::make_tuple(s, tu, tv); }
    Affine then(const Affine& g) const { return {g.s * s, tu + g.tu, g.s * tv + g.tv}; }
};

const std::vector<Affine>& word_ball(int radius) {
    static std::mutex mu;
    static std::map<int, std::vector<Affine>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(radius); it != cache.end()) return it->second;

    const std::vector<Affine> generators{
        {-1, 1, 1},  // alpha
        {-1, -1, 1}, // alpha^-1
        {1, 0, 1},   // beta
        {1, 0, -1},  // beta^-1
    };
    std::set<std::tuple<int, long, long>> seen{{1, 0, 0}};
    std::vector<Affine> all{{1, 0, 0}}, frontier = all;
    for (int r = 0; r < radius; ++r) {
        std::vector<Affine> next;
        for (const auto& g : frontier)
            for (const auto& h : generators) {
                Affine c = g.then(h);
                if (seen.insert(c.key()).second) next.push_back(c);
            }
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return cache.emplace(radius, std::move(all)).first->second;
}

} // namespace

std::vector<Vec> klein_word_orbit(const Vec& y, int radius) {
    std::vector<Vec> out;
    for (const auto& g : word_ball(radius)) out.push_back({y[0] + g.tu, g.s * y[1] + g.tv});
    return out;
}

OrbitMinimum klein_orbit_minimum(const Vec& x, const Vec& y, int radius) {
    std::vector<std::pair<Rational, Vec>> all;
    for (auto& p : klein_word_orbit(y, radius)) all.emplace_back(squared_distance(x, p), std::move(p));
    std::sort(all.begin(), all.end());
    OrbitMinimum m;
    m.squared_distance = all.front().first;
    for (const auto& [d, p] : all) {
        if (d == m.squared_distance) {
            m.lifts.push_back(p);
        } else {
            m.gap = d - m.squared_distance;
            break;
        }
    }
    return m;
}

long double partition_sum(const Polyline& p, const std::vector<Rational>& partition) {
    long double total = 0;
    for (std::size_t i = 1; i < partition.size(); ++i)
        total += std::sqrt(static_cast<long double>(
            to_double(squared_distance(p.at(partition[i - 1]), p.at(partition[i])))));
    return total;
}

} // namespace geoplan::verify
