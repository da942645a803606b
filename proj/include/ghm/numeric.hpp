#pragma once

// Exact arithmetic aliases and small helpers shared by the whole library.
// All verification paths stay in Int/Rat; doubles appear only in display code.

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

/// Floor division; sign convention matches mathematical floor, not truncation.
inline Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("floor_div: zero divisor");
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_rat(const Rat& r) { return floor_div(num(r), den(r)); }

/// Canonical representative of r mod 1 in [0,1).
inline Rat mod1(const Rat& r) { return r - Rat(floor_rat(r)); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

/// True when d*r is an integer, i.e. r lies in (1/d)Z.
inline bool in_scaled_lattice(const Rat& r, const Int& d) { return is_integer(Rat(d) * r); }

/// Parses "p", "-p" or "p/q" with q > 0 after normalization.
inline Rat parse_rational(const std::string& s) {
    auto bad = [&] { return std::invalid_argument("not a rational: '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw bad();
        return Rat(p, q);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

/// Renders reduced form, "p/q" when q != 1, plain integer otherwise.
inline std::string format_rational(const Rat& r) {
    std::string out = num(r).str();
    if (den(r) != 1) out += "/" + den(r).str();
    return out;
}

inline long long to_int64(const Int& v) {
    if (v > Int(std::numeric_limits<long long>::max()) ||
        v < Int(std::numeric_limits<long long>::min()))
        throw std::overflow_error("to_int64: value out of range");
    return static_cast<long long>(v);
}

}  // namespace ghm
