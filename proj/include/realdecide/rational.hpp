#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace realdecide {

// Exact rational coefficient domain. GMP keeps values canonical
// (positive denominator, reduced fraction, zero as 0/1).
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

inline Rational rational_abs(const Rational& q) { return abs(q); }

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    r.canonicalize();
    return r;
}

// Renders "p" or "p/q"; the CLI output format never uses floating point.
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "p" or "p/q" with an optional leading sign. Returns nullopt on
// malformed text or a zero denominator.
inline std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t slash = text.find('/');
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) return std::nullopt;
            return Rational(Integer(text));
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        Integer d(den);
        if (d == 0) return std::nullopt;
        Rational r(Integer(num), d);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace realdecide
