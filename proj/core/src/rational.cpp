#include "geoplan/rational.hpp"

#include "geoplan/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace geoplan {
namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer pow10(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const std::string original(text);
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ParseError("empty number in '" + original + "'");

    Rational out;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction '" + original + "'");
        Integer d(std::string(den), 10);
        if (d == 0) throw ParseError("zero denominator in '" + original + "'");
        out = Rational(Integer(std::string(num), 10), d);
        out.canonicalize();
    } else {
        long exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            auto exp_part = s.substr(e + 1);
            bool exp_negative = false;
            if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
                exp_negative = exp_part.front() == '-';
                exp_part.remove_prefix(1);
            }
            if (!all_digits(exp_part) || exp_part.size() > 6)
                throw ParseError("malformed exponent in '" + original + "'");
            exponent = std::strtol(std::string(exp_part).c_str(), nullptr, 10);
            if (exp_negative) exponent = -exponent;
            s = s.substr(0, e);
        }
        std::string_view int_part = s, frac_part;
        if (auto dot = s.find('.'); dot != std::string_view::npos) {
            int_part = s.substr(0, dot);
            frac_part = s.substr(dot + 1);
        }
        if (int_part.empty() && frac_part.empty())
            throw ParseError("malformed number '" + original + "'");
        if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
            throw ParseError("malformed number '" + original + "'");
        Integer digits(std::string(int_part.empty() ? "0" : int_part) + std::string(frac_part), 10);
        long scale = static_cast<long>(frac_part.size()) - exponent;
        if (scale >= 0) {
            out = Rational(digits, pow10(static_cast<unsigned long>(scale)));
        } else {
            out = Rational(digits * pow10(static_cast<unsigned long>(-scale)));
        }
        out.canonicalize();
    }
    return negative ? Rational(-out) : out;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational make_rational(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

double to_double(const Rational& q) { return q.get_d(); }

std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return std::nullopt;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Rational from_double(double value) {
    if (!std::isfinite(value)) throw DomainError("non-finite value");
    return Rational(value);
}

} // namespace geoplan
