#pragma once

#include <vector>

#include "cycbrauer/rational.hpp"

namespace cycbrauer {

/// Shared per-order data for the field Q(xi_m) = Q[x]/Phi_m(x): the m-th
/// cyclotomic polynomial, a reduction table for high powers of x, and the
/// reduced powers xi^e. Instances are cached and immutable; access them
/// through CycField::get().
class CycField {
public:
    static const CycField& get(int m);

    int order() const { return m_; }
    int degree() const { return deg_; }

    /// Coefficients of Phi_m, constant term first, monic.
    const std::vector<mpz_class>& phi() const { return phi_; }

    /// x^(degree+k) reduced mod Phi_m, for 0 <= k <= degree-2.
    const std::vector<Rational>& power_reduction(int k) const { return red_[k]; }

    /// xi^e for 0 <= e < m, as a reduced coefficient vector.
    const std::vector<Rational>& xi_power(int e) const { return xi_[e]; }

private:
    explicit CycField(int m);
    int m_;
    int deg_;
    std::vector<mpz_class> phi_;
    std::vector<std::vector<Rational>> red_;
    std::vector<std::vector<Rational>> xi_;
};

/// An element of Q(xi_m), stored as the unique reduced residue mod Phi_m.
/// The representation is canonical, so operator== is field equality.
/// A default-constructed value is a "universal zero" that combines with
/// elements of any order.
class Cyclotomic {
public:
    Cyclotomic() : m_(0) {}
    Cyclotomic(int m, std::vector<Rational> coeffs);

    static Cyclotomic zero(int m);
    static Cyclotomic one(int m);
    static Cyclotomic from_rational(int m, const Rational& r);
    /// xi^e (e taken mod m).
    static Cyclotomic xi_pow(int m, long e);

    int order() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    /// True if the element lies in Q (all non-constant coordinates vanish).
    bool is_rational() const;
    /// The constant coordinate; only meaningful when is_rational().
    Rational rational_part() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);

    /// Multiplicative inverse. Throws std::domain_error on zero.
    Cyclotomic inverse() const;
    Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Scale by a rational.
    Cyclotomic scaled(const Rational& r) const;

    /// Galois map xi -> xi^k; requires gcd(k, m) = 1.
    Cyclotomic galois(long k) const;

    std::string to_string() const;

private:
    void reduce();
    int m_;
    std::vector<Rational> c_;
};

/// The cyclotomic parameter tuple (delta_0, ..., delta_{m-1}). Entries share
/// one coefficient field, which for the main algebra is Q(xi_m) itself; the
/// classical factor algebras use m = 1 with a scalar from an ambient field.
struct Params {
    int m = 1;
    std::vector<Cyclotomic> delta;

    Params() = default;
    Params(int m_, std::vector<Cyclotomic> d);
    static Params from_rationals(int m, const std::vector<Rational>& values);

    bool all_zero() const;
    int field_order() const { return delta.empty() ? m : delta[0].order(); }
};

/// The signed parameters: entry r is (1/m) * sum_i xi^{ir} delta_i.
/// Requires the entries to lie in Q(xi_m).
std::vector<Cyclotomic> signed_parameters(const Params& p);

/// Cyclotomic polynomial Phi_m as integer coefficients, constant term first.
std::vector<mpz_class> cyclotomic_polynomial(int m);

}  // namespace cycbrauer
