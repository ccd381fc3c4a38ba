#pragma once

#include "sylreg/numbers.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sylreg {

/// Exact element of Q(zeta_N), stored sparsely in the power basis
/// {zeta^k : 0 <= k < phi(N)} reduced modulo the N-th cyclotomic polynomial.
///
/// Canonical form: no zero coefficients, all exponents < phi(N), and N = 1
/// whenever the value is rational. For a fixed conductor the representation
/// is unique, so zero-testing and equality are exact.
class Cyclotomic {
public:
    Cyclotomic() : n_(1) {}
    explicit Cyclotomic(const Rational& r) : n_(1) {
        if (r != 0) c_[0] = r;
    }
    explicit Cyclotomic(const Integer& z) : Cyclotomic(Rational(z)) {}
    explicit Cyclotomic(long z) : Cyclotomic(Rational(z)) {}

    /// Sum of coeff * zeta_N^exp over the given terms; exponents arbitrary.
    static Cyclotomic make(long n, const std::vector<std::pair<long, Rational>>& terms);

    /// zeta_N^k
    static Cyclotomic zeta(long n, long k = 1);

    /// Exact square root of an integer: sqrt(m) for m >= 0, i*sqrt(|m|) for m < 0.
    static Cyclotomic sqrt_int(const Integer& m);

    long conductor() const { return n_; }
    const std::map<long, Rational>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
    std::optional<Rational> to_rational() const;

    /// Dense power-basis coordinates inside Q(zeta_m); requires N | m.
    std::vector<Rational> power_coords(long m) const;

    /// Image under zeta_N -> zeta_N^k; requires gcd(k, N) = 1.
    Cyclotomic galois(long k) const;
    /// Complex conjugate, i.e. galois(-1).
    Cyclotomic conj() const { return galois(-1); }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    bool operator==(const Cyclotomic& o) const { return (*this - o).is_zero(); }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    std::string str() const;

    /// phi(N), also the degree of the power basis.
    static long phi(long n);
    /// Coefficients of the N-th cyclotomic polynomial (degree phi(N), monic).
    static const std::vector<Integer>& cyclotomic_poly(long n);

private:
    long n_;                         // conductor
    std::map<long, Rational> c_;     // exponent -> coefficient, canonical

    Cyclotomic rebased(long m) const;          // embed into Q(zeta_m), n_ | m
    void reduce(std::map<long, Rational>&& raw);  // exponents already < n_
};

}  // namespace sylreg
