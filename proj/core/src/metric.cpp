#include "geoplan/metric.hpp"

#include "geoplan/errors.hpp"

#include <algorithm>
#include <sstream>

namespace geoplan {
namespace {

constexpr mp_bitcnt_t kWorkingBits = 320;

void require_same_dimension(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
}

// Writes sqrt(square) as coeff * sqrt(radicand) with an integer radicand
// stripped of small square factors, so equal radicals print identically.
std::pair<Rational, Rational> normalize_radical(const Rational& square) {
    // sqrt(p/q) = sqrt(p q) / q
    Integer radicand = square.get_num() * square.get_den();
    Rational coeff(1, square.get_den());
    coeff.canonicalize();
    for (unsigned long f = 2; f <= 997 && f * f <= radicand; ++f) {
        const unsigned long ff = f * f;
        while (mpz_divisible_ui_p(radicand.get_mpz_t(), ff)) {
            radicand /= ff;
            coeff *= f;
        }
    }
    return {coeff, Rational(radicand)};
}

mpf_class to_mpf(const Rational& q) { return mpf_class(q, kWorkingBits); }

mpf_class to_mpf(const ExactLength& l) {
    mpf_class sum(to_mpf(l.rational_part()));
    for (const auto& t : l.terms()) {
        mpf_class r(0, kWorkingBits);
        r = sqrt(to_mpf(t.radicand));
        sum += to_mpf(t.coeff) * r;
    }
    return sum;
}

std::vector<Rational> merged_grid(const std::vector<const Polyline*>& paths, std::size_t samples) {
    std::vector<Rational> ts;
    for (std::size_t i = 0; i < samples; ++i) {
        Rational t(static_cast<long>(i), static_cast<long>(samples - 1));
        t.canonicalize();
        ts.push_back(t);
    }
    for (auto* p : paths) ts.insert(ts.end(), p->params.begin(), p->params.end());
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

// q with a = q b, when such a rational exists. b must be nonzero.
std::optional<Rational> rational_ratio(const ExactLength& a, const ExactLength& b) {
    Rational q;
    if (b.rational_part() != 0) {
        q = a.rational_part() / b.rational_part();
    } else {
        const auto& lead = b.terms().front();
        q = 0;
        for (const auto& t : a.terms()) {
            if (auto r = exact_sqrt(t.radicand / lead.radicand)) {
                q = t.coeff * *r / lead.coeff;
                break;
            }
        }
    }
    ExactLength scaled(q * b.rational_part());
    for (const auto& t : b.terms()) scaled.add_sqrt(t.radicand, q * t.coeff);
    if (scaled == a) return q;
    return std::nullopt;
}

Rational round_dyadic(const mpf_class& v) {
    mpf_class scaled(v, kWorkingBits);
    mpf_mul_2exp(scaled.get_mpf_t(), scaled.get_mpf_t(), 64);
    scaled += 0.5;
    mpf_class f(0, kWorkingBits);
    mpf_floor(f.get_mpf_t(), scaled.get_mpf_t());
    Integer n(f);
    Integer d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, 64);
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::vector<Vec> collapse_repeats(const std::vector<Vec>& vertices) {
    std::vector<Vec> out;
    for (const auto& v : vertices)
        if (out.empty() || out.back() != v) out.push_back(v);
    return out;
}

// Cumulative length fractions of a path with no repeated consecutive vertices
// and positive length.
std::vector<Rational> length_fractions(const std::vector<Vec>& vertices) {
    std::vector<ExactLength> cumulative(1);
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        ExactLength next = cumulative.back();
        next.add_sqrt(squared_distance(vertices[i - 1], vertices[i]));
        cumulative.push_back(std::move(next));
    }
    const ExactLength& total = cumulative.back();
    const mpf_class total_f = to_mpf(total);

    std::vector<Rational> out;
    out.reserve(cumulative.size());
    for (std::size_t i = 0; i < cumulative.size(); ++i) {
        if (i == 0) {
            out.emplace_back(0);
        } else if (i + 1 == cumulative.size()) {
            out.emplace_back(1);
        } else if (auto q = rational_ratio(cumulative[i], total)) {
            out.push_back(*q);
        } else {
            mpf_class v = to_mpf(cumulative[i]) / total_f;
            out.push_back(round_dyadic(v));
        }
    }
    // Rounding can only collide when two fractions are within 2^-64.
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] <= out[i - 1])
            throw Error("reparametrization: cumulative fractions not separable at 2^-64");
    return out;
}

} // namespace

Rational squared_norm(const Vec& v) {
    Rational s = 0;
    for (const auto& c : v) s += c * c;
    return s;
}

Rational squared_distance(const Vec& a, const Vec& b) {
    require_same_dimension(a, b);
    Rational s = 0, d;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

Vec operator+(const Vec& a, const Vec& b) {
    require_same_dimension(a, b);
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec operator-(const Vec& a, const Vec& b) {
    require_same_dimension(a, b);
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec operator*(const Rational& s, const Vec& v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

Vec lerp(const Vec& a, const Vec& b, const Rational& t) {
    require_same_dimension(a, b);
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + t * (b[i] - a[i]);
    return out;
}

// ---------------------------------------------------------------- ExactLength

ExactLength ExactLength::sqrt_of(const Rational& square) {
    ExactLength l;
    l.add_sqrt(square);
    return l;
}

ExactLength& ExactLength::add_sqrt(const Rational& square, const Rational& coeff) {
    if (square < 0) throw DomainError("square root of a negative number");
    if (square == 0 || coeff == 0) return *this;
    if (auto root = exact_sqrt(square)) {
        rational_ += coeff * *root;
        return *this;
    }
    auto [c, radicand] = normalize_radical(square);
    c *= coeff;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (auto r = exact_sqrt(radicand / it->radicand)) {
            it->coeff += c * *r;
            if (it->coeff == 0) terms_.erase(it);
            return *this;
        }
    }
    terms_.push_back({c, radicand});
    return *this;
}

ExactLength& ExactLength::operator+=(const ExactLength& other) {
    rational_ += other.rational_;
    for (const auto& t : other.terms_) add_sqrt(t.radicand, t.coeff);
    return *this;
}

bool ExactLength::is_zero() const { return rational_ == 0 && terms_.empty(); }

std::optional<Rational> ExactLength::as_rational() const {
    if (!terms_.empty()) return std::nullopt;
    return rational_;
}

std::optional<Rational> ExactLength::square() const {
    if (terms_.empty()) return rational_ * rational_;
    if (terms_.size() == 1 && rational_ == 0)
        return terms_[0].coeff * terms_[0].coeff * terms_[0].radicand;
    return std::nullopt;
}

long double ExactLength::approx() const { return to_mpf(*this).get_d(); }

std::string ExactLength::decimal(int digits) const {
    if (digits < 0) digits = 0;
    mpf_class v = to_mpf(*this);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    v *= mpf_class(scale, kWorkingBits);
    const bool negative = v < 0;
    if (negative) v = -v;
    v += 0.5;
    mpf_class f(0, kWorkingBits);
    mpf_floor(f.get_mpf_t(), v.get_mpf_t());
    std::string s = Integer(f).get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits))
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    return negative ? "-" + s : s;
}

std::string ExactLength::str() const {
    std::ostringstream os;
    bool first = true;
    if (rational_ != 0 || terms_.empty()) {
        os << to_string(rational_);
        first = false;
    }
    for (const auto& t : terms_) {
        if (!first) os << (t.coeff < 0 ? "-" : "+");
        else if (t.coeff < 0) os << "-";
        first = false;
        Rational c = abs(t.coeff);
        if (c != 1) os << to_string(c) << "*";
        os << "sqrt(" << to_string(t.radicand) << ")";
    }
    return os.str();
}

bool ExactLength::operator==(const ExactLength& other) const {
    ExactLength diff = *this;
    diff.rational_ -= other.rational_;
    for (const auto& t : other.terms_) diff.add_sqrt(t.radicand, -t.coeff);
    return diff.is_zero();
}

// ------------------------------------------------------------------- Polyline

Polyline Polyline::uniform(std::vector<Vec> vertices, std::string chart) {
    Polyline p;
    const std::size_t m = vertices.size();
    p.vertices = std::move(vertices);
    p.chart = std::move(chart);
    for (std::size_t i = 0; i < m; ++i) {
        if (m == 1) {
            p.params.emplace_back(0);
        } else {
            Rational t(static_cast<long>(i), static_cast<long>(m - 1));
            t.canonicalize();
            p.params.push_back(t);
        }
    }
    return p;
}

void Polyline::validate() const {
    if (vertices.empty()) throw ValidationError("polyline has no vertices");
    if (params.size() != vertices.size())
        throw ValidationError("polyline needs one param per vertex");
    const std::size_t dim = vertices.front().size();
    if (dim == 0) throw ValidationError("polyline vertices have dimension 0");
    for (const auto& v : vertices)
        if (v.size() != dim) throw DimensionMismatch("polyline vertices differ in dimension");
    for (const auto& t : params)
        if (t < 0 || t > 1) throw ValidationError("polyline param outside [0,1]");
    for (std::size_t i = 1; i < params.size(); ++i)
        if (params[i] <= params[i - 1]) throw ValidationError("polyline params not strictly increasing");
    if (vertices.size() >= 2 && (params.front() != 0 || params.back() != 1))
        throw ValidationError("polyline params must start at 0 and end at 1");
}

std::size_t Polyline::dimension() const { return vertices.empty() ? 0 : vertices.front().size(); }

Vec Polyline::at(const Rational& t) const {
    if (t < 0 || t > 1) throw DomainError("path parameter outside [0,1]");
    if (vertices.size() == 1) return vertices.front();
    auto it = std::upper_bound(params.begin(), params.end(), t);
    if (it == params.end()) return vertices.back();
    const std::size_t hi = static_cast<std::size_t>(it - params.begin());
    const std::size_t lo = hi - 1;
    Rational s = (t - params[lo]) / (params[hi] - params[lo]);
    return lerp(vertices[lo], vertices[hi], s);
}

Rational SpeedProfile::operator()(const Rational& t) const {
    if (knots.empty()) return t;
    if (t <= knots.front().first) return knots.front().second;
    for (std::size_t i = 1; i < knots.size(); ++i) {
        if (t <= knots[i].first) {
            const auto& [t0, l0] = knots[i - 1];
            const auto& [t1, l1] = knots[i];
            return l0 + (t - t0) / (t1 - t0) * (l1 - l0);
        }
    }
    return knots.back().second;
}

// ----------------------------------------------------------------- operations

ExactLength path_length(const Polyline& p) {
    p.validate();
    ExactLength total;
    for (std::size_t i = 1; i < p.vertices.size(); ++i)
        total.add_sqrt(squared_distance(p.vertices[i - 1], p.vertices[i]));
    return total;
}

bool is_geodesic(const Polyline& p, std::size_t samples, const Rational& tol) {
    if (samples < 2) throw ValidationError("is_geodesic needs at least 2 samples");
    if (tol < 0) throw ValidationError("negative tolerance");
    const ExactLength lambda = path_length(p);
    const auto ts = merged_grid({&p}, samples);
    std::vector<Vec> pts;
    pts.reserve(ts.size());
    for (const auto& t : ts) pts.push_back(p.at(t));

    if (tol == 0) {
        // A geodesic has lambda = d(p(0), p(1)), so lambda^2 must be rational.
        auto lambda_sq = lambda.square();
        if (!lambda_sq) return false;
        Rational dt;
        for (std::size_t i = 0; i < ts.size(); ++i)
            for (std::size_t j = i + 1; j < ts.size(); ++j) {
                dt = ts[j] - ts[i];
                if (squared_distance(pts[i], pts[j]) != *lambda_sq * dt * dt) return false;
            }
        return true;
    }

    const mpf_class lambda_f = to_mpf(lambda);
    const mpf_class tol_f = to_mpf(tol);
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            mpf_class d(0, kWorkingBits);
            d = sqrt(to_mpf(squared_distance(pts[i], pts[j])));
            mpf_class err = d - lambda_f * to_mpf(ts[j] - ts[i]);
            if (abs(err) > tol_f) return false;
        }
    return true;
}

Rational sup_distance_squared(const Polyline& p, const Polyline& q, std::size_t samples) {
    if (samples < 2) throw ValidationError("sup_distance needs at least 2 samples");
    p.validate();
    q.validate();
    if (p.chart != q.chart) throw DomainError("chart mismatch: '" + p.chart + "' vs '" + q.chart + "'");
    if (p.dimension() != q.dimension()) throw DimensionMismatch("sup_distance: dimension mismatch");
    Rational best = 0;
    for (const auto& t : merged_grid({&p, &q}, samples)) {
        Rational d = squared_distance(p.at(t), q.at(t));
        if (d > best) best = d;
    }
    return best;
}

ExactLength sup_distance(const Polyline& p, const Polyline& q, std::size_t samples) {
    return ExactLength::sqrt_of(sup_distance_squared(p, q, samples));
}

SpeedProfile speed_profile(const Polyline& p) {
    p.validate();
    SpeedProfile s;
    if (path_length(p).is_zero()) {
        s.knots = {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}};
        return s;
    }
    // Repeated vertices keep the fraction of their predecessor.
    std::vector<Vec> distinct;
    std::vector<std::size_t> index_of;
    for (const auto& v : p.vertices) {
        if (distinct.empty() || distinct.back() != v) distinct.push_back(v);
        index_of.push_back(distinct.size() - 1);
    }
    const auto fractions = length_fractions(distinct);
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
        s.knots.emplace_back(p.params[i], fractions[index_of[i]]);
    return s;
}

Polyline reparametrize_constant_speed(const Polyline& p) {
    p.validate();
    if (path_length(p).is_zero()) return p;
    Polyline out;
    out.chart = p.chart;
    out.vertices = collapse_repeats(p.vertices);
    out.params = length_fractions(out.vertices);
    return out;
}

} // namespace geoplan

namespace geoplan {

std::vector<std::size_t> nearest_matching(const std::vector<Vec>& from, const std::vector<Vec>& to) {
    if (from.size() != to.size()) throw AmbiguityError("matching sets differ in size");
    std::vector<std::size_t> out;
    std::vector<bool> taken(to.size(), false);
    for (const auto& f : from) {
        std::size_t best = 0;
        Rational best_d;
        bool tie = false;
        for (std::size_t j = 0; j < to.size(); ++j) {
            Rational d = squared_distance(f, to[j]);
            if (j == 0 || d < best_d) {
                best = j;
                best_d = d;
                tie = false;
            } else if (d == best_d) {
                tie = true;
            }
        }
        if (tie) throw AmbiguityError("two continuations are equally near; use more steps");
        if (taken[best]) throw AmbiguityError("continuations collide; use more steps");
        taken[best] = true;
        out.push_back(best);
    }
    return out;
}

} // namespace geoplan
