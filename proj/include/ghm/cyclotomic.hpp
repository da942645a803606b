#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_m). Values are rational
// polynomials in zeta_m reduced mod the m-th cyclotomic polynomial, so
// equality is coefficient equality. Complex doubles appear only in eval()
// used for display.

#include "ghm/numeric.hpp"

#include <complex>
#include <map>

namespace ghm {

namespace poly {

// dense ascending-degree polynomials
using IntPoly = std::vector<Int>;
using RatPoly = std::vector<Rat>;

inline void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

/// Remainder of a modulo monic b.
inline RatPoly mod(RatPoly a, const RatPoly& b) {
    trim(a);
    while (a.size() >= b.size()) {
        Rat c = a.back();  // b monic
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    return a;
}

/// Exact quotient a/b for monic b dividing a.
inline IntPoly divide_exact(IntPoly a, const IntPoly& b) {
    IntPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
        Int c = a.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    if (!a.empty()) throw std::logic_error("divide_exact: nonzero remainder");
    return q;
}

// extended gcd over Q[x]: returns (g, s) with s*a = g (mod b), g monic gcd
inline std::pair<RatPoly, RatPoly> half_ext_gcd(RatPoly a, RatPoly b) {
    RatPoly s0{Rat(1)}, s1{};
    trim(a);
    trim(b);
    while (!b.empty()) {
        // divide a by b
        RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
        RatPoly r = a;
        while (r.size() >= b.size() && !r.empty()) {
            Rat c = r.back() / b.back();
            std::size_t shift = r.size() - b.size();
            q[shift] = c;
            for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
            trim(r);
        }
        // (a,b) <- (b,r); (s0,s1) <- (s1, s0 - q*s1)
        RatPoly qs = mul(q, s1);
        RatPoly s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size());
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (a.empty()) throw std::domain_error("half_ext_gcd: zero gcd");
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
    for (auto& c : s0) c /= lead;
    return {a, s0};
}

}  // namespace poly

/// m-th cyclotomic polynomial, by exact division of x^m - 1 by the proper
/// cyclotomic divisors. Cached.
inline const poly::IntPoly& cyclotomic_polynomial(long long m) {
    static std::map<long long, poly::IntPoly> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m <= 0) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
    poly::IntPoly f(m + 1);
    f[0] = -1;
    f[m] = 1;
    for (long long d = 1; d < m; ++d)
        if (m % d == 0) f = poly::divide_exact(std::move(f), cyclotomic_polynomial(d));
    return cache.emplace(m, std::move(f)).first->second;
}

class Cyclotomic {
public:
    Cyclotomic() = default;  // zero of order 1

    static Cyclotomic zero(long long m) { return Cyclotomic(m); }
    static Cyclotomic one(long long m) { return from_rat(m, 1); }

    static Cyclotomic from_rat(long long m, const Rat& r) {
        Cyclotomic c(m);
        c.coeffs_[0] = r;
        return c;
    }

    /// zeta_m^k
    static Cyclotomic zeta(long long m, long long k = 1) {
        Cyclotomic c(m);
        k %= m;
        if (k < 0) k += m;
        poly::RatPoly p(static_cast<std::size_t>(k) + 1);
        p.back() = 1;
        c.assign(std::move(p));
        return c;
    }

    long long order() const { return m_; }
    std::size_t degree() const { return coeffs_.size(); }
    const poly::RatPoly& coefficients() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_) if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    Rat to_rational() const {
        if (!is_rational()) throw std::domain_error("Cyclotomic: not rational");
        return coeffs_[0];
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        a.check_order(b);
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    Cyclotomic operator+(const Cyclotomic& o) const {
        check_order(o);
        Cyclotomic out = *this;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += o.coeffs_[i];
        return out;
    }

    Cyclotomic operator-(const Cyclotomic& o) const {
        check_order(o);
        Cyclotomic out = *this;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= o.coeffs_[i];
        return out;
    }

    Cyclotomic operator-() const {
        Cyclotomic out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    Cyclotomic operator*(const Cyclotomic& o) const {
        check_order(o);
        Cyclotomic out(m_);
        out.assign(poly::mul(coeffs_, o.coeffs_));
        return out;
    }

    Cyclotomic operator*(const Rat& r) const {
        Cyclotomic out = *this;
        for (auto& c : out.coeffs_) c *= r;
        return out;
    }

    Cyclotomic operator/(const Rat& r) const {
        if (r == 0) throw std::domain_error("Cyclotomic: division by zero");
        Cyclotomic out = *this;
        for (auto& c : out.coeffs_) c /= r;
        return out;
    }

    /// Multiplicative inverse via the extended euclidean algorithm against
    /// the (irreducible) cyclotomic polynomial.
    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
        poly::RatPoly phi = rat_phi();
        auto [g, s] = poly::half_ext_gcd(coeffs_, phi);
        if (g.size() != 1) throw std::logic_error("Cyclotomic: gcd with Phi_m not constant");
        Cyclotomic out(m_);
        out.assign(std::move(s));
        return out;
    }

    Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

    /// Complex conjugation, zeta -> zeta^{-1}.
    Cyclotomic conj() const {
        Cyclotomic out(m_);
        poly::RatPoly acc(static_cast<std::size_t>(m_));
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            if (coeffs_[j] == 0) continue;
            std::size_t e = j == 0 ? 0 : static_cast<std::size_t>(m_) - j;
            acc[e] += coeffs_[j];
        }
        out.assign(std::move(acc));
        return out;
    }

    bool is_real() const { return *this == conj(); }

    /// Same value inside Q(zeta_M) for m | M.
    Cyclotomic promote(long long M) const {
        if (M == m_) return *this;
        if (M % m_ != 0) throw std::invalid_argument("Cyclotomic: promote needs m | M");
        long long step = M / m_;
        Cyclotomic out(M);
        poly::RatPoly acc(static_cast<std::size_t>(M));
        for (std::size_t j = 0; j < coeffs_.size(); ++j)
            if (coeffs_[j] != 0) acc[j * static_cast<std::size_t>(step)] += coeffs_[j];
        out.assign(std::move(acc));
        return out;
    }

    std::complex<double> eval() const {
        std::complex<double> z = 0;
        constexpr double tau = 6.283185307179586476925286766559;
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            if (coeffs_[j] == 0) continue;
            double c = static_cast<double>(coeffs_[j]);
            z += c * std::polar(1.0, tau * double(j) / double(m_));
        }
        return z;
    }

    /// Total order for canonical sorting (order, then coefficient tuples).
    friend bool lex_less(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.m_ != b.m_) return a.m_ < b.m_;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
        return false;
    }

private:
    explicit Cyclotomic(long long m) : m_(m) {
        coeffs_.resize(cyclotomic_polynomial(m).size() - 1);
    }

    poly::RatPoly rat_phi() const {
        const auto& phi = cyclotomic_polynomial(m_);
        poly::RatPoly p(phi.size());
        for (std::size_t i = 0; i < phi.size(); ++i) p[i] = Rat(phi[i]);
        return p;
    }

    void assign(poly::RatPoly p) {
        p = poly::mod(std::move(p), rat_phi());
        p.resize(coeffs_.size());
        coeffs_ = std::move(p);
    }

    void check_order(const Cyclotomic& o) const {
        if (m_ != o.m_) throw std::invalid_argument("Cyclotomic: mixed orders");
    }

    long long m_ = 1;
    poly::RatPoly coeffs_ = poly::RatPoly(1);
};

inline Cyclotomic operator*(const Rat& r, const Cyclotomic& c) { return c * r; }

}  // namespace ghm
