#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace nilsol {

/// Exact rational scalar. Canonical form (gcd 1, positive denominator) is
/// maintained by every operation.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Accepts "p" or "p/q" with optional sign on either part, q nonzero.
inline Rational rat_from_string(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
    };
    if (text.empty()) fail();
    std::string num, den = "1";
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        num = std::string(text);
    } else {
        num = std::string(text.substr(0, slash));
        den = std::string(text.substr(slash + 1));
        if (num.empty() || den.empty() || den.find('/') != std::string::npos) fail();
    }
    mpz_class n, d;
    try {
        n = mpz_class(num);
        d = mpz_class(den);
    } catch (const std::invalid_argument&) {
        fail();
    }
    if (d == 0) fail();
    Rational r(n, d);
    r.canonicalize();
    return r;
}

/// "p" when the denominator is 1, "p/q" otherwise.
inline std::string rat_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Integer power, negative exponents allowed for nonzero base.
inline Rational rat_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0 && exp < 0) throw std::domain_error("negative power of zero");
    unsigned long e = exp < 0 ? -static_cast<unsigned long>(exp) : exp;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    Rational r;
    if (exp < 0)
        r = Rational(den, num);
    else
        r = Rational(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace nilsol
