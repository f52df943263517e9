#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace cycbrauer {

using Rational = mpq_class;

/// Errors raised when a request is well-formed but exceeds the documented
/// desk-scale limits of a computation.
class scale_error : public std::runtime_error {
public:
    explicit scale_error(const std::string& what) : std::runtime_error(what) {}
};

/// Errors raised when an internal consistency certificate fails to verify.
class verification_error : public std::runtime_error {
public:
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

/// Formats a rational as a decimal-free "p/q" string (q > 0, gcd(p,q)=1).
inline std::string rational_to_string(const Rational& r) {
    Rational c(r);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Parses "p/q" or plain "p". Throws std::invalid_argument on malformed input
/// or a zero denominator.
inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r(mpz_class(s), 1);
            r.canonicalize();
            return r;
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in: " + s);
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

}  // namespace cycbrauer
