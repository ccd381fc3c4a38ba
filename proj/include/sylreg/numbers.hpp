#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace sylreg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Integer ipow(Integer base, unsigned long e) {
    Integer r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r = 1;
    for (unsigned long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// q = r^f with r prime, or nullopt.
inline std::optional<std::pair<long, long>> prime_power_split(long q) {
    if (q < 2) return std::nullopt;
    for (long r = 2; r * r <= q; ++r) {
        if (q % r == 0) {
            long f = 0, m = q;
            while (m % r == 0) { m /= r; ++f; }
            if (m != 1) return std::nullopt;
            return std::make_pair(r, f);
        }
    }
    return std::make_pair(q, 1L);
}

// Multiplicative order of a modulo m, gcd(a, m) = 1.
inline long mult_order(long a, long m) {
    if (m <= 1) throw error("mult_order: modulus must be > 1");
    a %= m;
    if (a < 0) a += m;
    if (std::gcd(a, m) != 1) throw error("mult_order: arguments not coprime");
    long x = a % m, e = 1;
    while (x != 1) {
        x = (x * a) % m;
        ++e;
    }
    return e;
}

// Kronecker symbol (a|n).
inline int kronecker(Integer a, Integer n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    int v = 0;
    while (n % 2 == 0) { n /= 2; ++v; }
    if (v % 2 == 1) {
        Integer am = a % 8;
        if (am < 0) am += 8;
        if (am == 3 || am == 5) sign = -sign;
        if (am % 2 == 0) return 0;
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            Integer nm = n % 8;
            if (nm == 3 || nm == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

}  // namespace sylreg
