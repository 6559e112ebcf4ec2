#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace genuspart {

// Exact arithmetic everywhere: all series and polynomial coefficients are
// arbitrary-precision rationals, counts are arbitrary-precision integers
// narrowed to uint64 only at API boundaries.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt factorial_big(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial_big(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// binomial(e, k) for rational e: e(e-1)...(e-k+1)/k!
inline Rat binomial_rat(const Rat& e, int k) {
    Rat r = 1;
    for (int i = 0; i < k; ++i) {
        r *= e - i;
        r /= i + 1;
    }
    return r;
}

inline std::uint64_t to_u64(const BigInt& v, const char* what) {
    if (v < 0 || v > BigInt(UINT64_MAX))
        throw std::overflow_error(std::string(what) + ": value does not fit in uint64");
    return v.convert_to<std::uint64_t>();
}

// parses "p" or "p/q"
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        // reject empty pieces explicitly: BigInt("") would silently read as 0
        if (slash == std::string::npos) {
            if (s.empty()) throw std::runtime_error("empty");
            return Rat(BigInt(s));
        }
        std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty()) throw std::runtime_error("empty");
        BigInt num(ns), den(ds);
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

inline std::string rat_to_string(const Rat& r) {
    return r.str();
}

}  // namespace genuspart
