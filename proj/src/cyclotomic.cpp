#include "cycbrauer/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace cycbrauer {

namespace {

// Dense polynomials over Z, constant term first, no trailing zeros.
using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of monic-result polynomials over Z; remainder must be zero.
ZPoly divide_exact(ZPoly num, const ZPoly& den) {
    ZPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpz_class(0));
    while (num.size() >= den.size() && !num.empty()) {
        mpz_class lead = num.back() / den.back();
        size_t shift = num.size() - den.size();
        quot[shift] = lead;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= lead * den[i];
        trim(num);
    }
    if (!num.empty()) throw std::logic_error("inexact cyclotomic polynomial division");
    return quot;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
    if (m == 1) return {mpz_class(-1), mpz_class(1)};  // x - 1
    ZPoly num(m + 1, mpz_class(0));                    // x^m - 1
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d == 0) num = divide_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

CycField::CycField(int m) : m_(m) {
    phi_ = cyclotomic_polynomial(m);
    deg_ = static_cast<int>(phi_.size()) - 1;

    // x^deg = -(phi_0 + phi_1 x + ... ), then multiply up by x and re-reduce.
    std::vector<Rational> cur(deg_);
    for (int j = 0; j < deg_; ++j) cur[j] = Rational(-phi_[j]);
    red_.push_back(cur);
    for (int k = 1; k + 1 <= deg_ - 1; ++k) {
        std::vector<Rational> next(deg_, Rational(0));
        Rational top = cur[deg_ - 1];
        for (int j = 0; j + 1 < deg_; ++j) next[j + 1] = cur[j];
        if (top != 0)
            for (int j = 0; j < deg_; ++j) next[j] += top * red_[0][j];
        red_.push_back(next);
        cur = std::move(next);
    }

    std::vector<Rational> pw(deg_, Rational(0));
    pw[0] = 1;
    for (int e = 0; e < m_; ++e) {
        xi_.push_back(pw);
        // multiply by x
        std::vector<Rational> next(deg_, Rational(0));
        Rational top = pw[deg_ - 1];
        for (int j = 0; j + 1 < deg_; ++j) next[j + 1] = pw[j];
        if (top != 0)
            for (int j = 0; j < deg_; ++j) next[j] += top * red_[0][j];
        pw = std::move(next);
    }
}

const CycField& CycField::get(int m) {
    static std::mutex mu;
    static std::map<int, const CycField*> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, new CycField(m)).first;
    return *it->second;
}

Cyclotomic::Cyclotomic(int m, std::vector<Rational> coeffs) : m_(m), c_(std::move(coeffs)) {
    const CycField& f = CycField::get(m);
    if (static_cast<int>(c_.size()) < f.degree()) c_.resize(f.degree(), Rational(0));
    reduce();
}

void Cyclotomic::reduce() {
    const CycField& f = CycField::get(m_);
    int deg = f.degree();
    if (static_cast<int>(c_.size()) > deg) {
        // Fold the top power down one degree at a time: x^k = x^{k-deg} x^deg.
        const auto& top_row = f.power_reduction(0);
        for (int k = static_cast<int>(c_.size()) - 1; k >= deg; --k) {
            Rational top = c_[k];
            c_[k] = 0;
            if (top != 0) {
                for (int j = 0; j < deg; ++j) c_[k - deg + j] += top * top_row[j];
            }
        }
        c_.resize(deg);
    }
    for (auto& x : c_) x.canonicalize();
}

Cyclotomic Cyclotomic::zero(int m) { return Cyclotomic(m, std::vector<Rational>()); }

Cyclotomic Cyclotomic::one(int m) { return from_rational(m, Rational(1)); }

Cyclotomic Cyclotomic::from_rational(int m, const Rational& r) {
    std::vector<Rational> c(1, r);
    return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::xi_pow(int m, long e) {
    const CycField& f = CycField::get(m);
    long em = ((e % m) + m) % m;
    return Cyclotomic(m, f.xi_power(static_cast<int>(em)));
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_) {
        if (x != 0) return false;
    }
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t j = 1; j < c_.size(); ++j) {
        if (c_[j] != 0) return false;
    }
    return true;
}

Rational Cyclotomic::rational_part() const {
    if (m_ == 0) return Rational(0);
    return c_[0];
}

namespace {
// Resolves the operating order for mixed operations with the universal zero.
int join_order(int a, int b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a != b) throw std::invalid_argument("cyclotomic order mismatch");
    return a;
}
}  // namespace

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    Cyclotomic r(*this);
    r += o;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    int m = join_order(m_, o.m_);
    if (m == 0) return *this;
    if (m_ == 0) {
        *this = o;
        return *this;
    }
    if (o.m_ == 0) return *this;
    for (size_t j = 0; j < c_.size(); ++j) {
        c_[j] += o.c_[j];
        c_[j].canonicalize();
    }
    return *this;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    *this += (-o);
    return *this;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    int m = join_order(m_, o.m_);
    if (m == 0) return Cyclotomic();
    if (m_ == 0 || o.m_ == 0) return Cyclotomic::zero(m);
    size_t deg = c_.size();
    std::vector<Rational> prod(2 * deg - 1, Rational(0));
    for (size_t i = 0; i < deg; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < deg; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    return Cyclotomic(m, std::move(prod));
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    *this = *this * o;
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(xi)");
    const CycField& f = CycField::get(m_);

    // Extended Euclid in Q[x] for gcd(a, Phi_m) = 1: track u with u*a = g mod Phi.
    using QPoly = std::vector<Rational>;
    auto deg_of = [](const QPoly& p) {
        int d = static_cast<int>(p.size()) - 1;
        while (d >= 0 && p[d] == 0) --d;
        return d;
    };
    QPoly r0(f.phi().size());
    for (size_t i = 0; i < f.phi().size(); ++i) r0[i] = Rational(f.phi()[i]);
    QPoly r1(c_.begin(), c_.end());
    QPoly u0{Rational(0)}, u1{Rational(1)};

    while (true) {
        int d1 = deg_of(r1);
        if (d1 < 0) throw std::logic_error("lost gcd while inverting cyclotomic");
        // r0 = q*r1 + rem
        QPoly rem = r0;
        QPoly q(std::max<size_t>(1, r0.size()), Rational(0));
        int dr = deg_of(rem);
        while (dr >= d1) {
            Rational coef = rem[dr] / r1[d1];
            q[dr - d1] += coef;
            for (int i = 0; i <= d1; ++i) {
                rem[dr - d1 + i] -= coef * r1[i];
                rem[dr - d1 + i].canonicalize();
            }
            dr = deg_of(rem);
        }
        // u_next = u0 - q*u1
        QPoly un(std::max(u0.size(), q.size() + u1.size()), Rational(0));
        for (size_t i = 0; i < u0.size(); ++i) un[i] = u0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < u1.size(); ++j) {
                un[i + j] -= q[i] * u1[j];
                un[i + j].canonicalize();
            }
        }
        if (deg_of(rem) < 0) {
            // r1 is the gcd (a nonzero constant times a unit); normalize u1/r1.
            int d = deg_of(r1);
            if (d != 0) throw std::logic_error("cyclotomic inverse: nonunit gcd");
            Rational lead = r1[0];
            std::vector<Rational> res(u1.size());
            for (size_t i = 0; i < u1.size(); ++i) res[i] = u1[i] / lead;
            return Cyclotomic(m_, std::move(res));
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(un);
    }
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (m_ == 0) return o.is_zero();
    if (o.m_ == 0) return is_zero();
    if (m_ != o.m_) throw std::invalid_argument("cyclotomic order mismatch in comparison");
    return c_ == o.c_;
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
    Cyclotomic out(*this);
    for (auto& x : out.c_) {
        x *= r;
        x.canonicalize();
    }
    return out;
}

Cyclotomic Cyclotomic::galois(long k) const {
    if (m_ == 0) return *this;
    long km = ((k % m_) + m_) % m_;
    if (std::gcd(km, static_cast<long>(m_)) != 1)
        throw std::invalid_argument("galois exponent not coprime to the order");
    Cyclotomic out = Cyclotomic::zero(m_);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        out += Cyclotomic::xi_pow(m_, static_cast<long>(j) * km).scaled(c_[j]);
    }
    return out;
}

std::string Cyclotomic::to_string() const {
    if (m_ == 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        if (!first) os << " + ";
        os << rational_to_string(c_[j]);
        if (j == 1) os << "*xi";
        if (j > 1) os << "*xi^" << j;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Params::Params(int m_, std::vector<Cyclotomic> d) : m(m_), delta(std::move(d)) {
    if (static_cast<int>(delta.size()) != m)
        throw std::invalid_argument("parameter tuple must have length m");
    int fm = 0;
    for (const auto& x : delta) fm = std::max(fm, x.order());
    if (fm == 0) fm = m;
    for (auto& x : delta) {
        if (x.order() == 0) x = Cyclotomic::zero(fm);
        if (x.order() != fm) throw std::invalid_argument("parameter entries must share one field");
    }
}

Params Params::from_rationals(int m, const std::vector<Rational>& values) {
    if (static_cast<int>(values.size()) != m)
        throw std::invalid_argument("parameter tuple must have length m");
    std::vector<Cyclotomic> d;
    d.reserve(values.size());
    for (const auto& v : values) d.push_back(Cyclotomic::from_rational(m, v));
    return Params(m, std::move(d));
}

bool Params::all_zero() const {
    for (const auto& x : delta) {
        if (!x.is_zero()) return false;
    }
    return true;
}

std::vector<Cyclotomic> signed_parameters(const Params& p) {
    if (p.field_order() != p.m)
        throw std::invalid_argument("signed parameters need coefficients in Q(xi_m)");
    std::vector<Cyclotomic> out;
    out.reserve(p.m);
    Rational inv_m(1, p.m);
    for (int r = 0; r < p.m; ++r) {
        Cyclotomic acc = Cyclotomic::zero(p.m);
        for (int i = 0; i < p.m; ++i)
            acc += Cyclotomic::xi_pow(p.m, static_cast<long>(i) * r) * p.delta[i];
        out.push_back(acc.scaled(inv_m));
    }
    return out;
}

}  // namespace cycbrauer
