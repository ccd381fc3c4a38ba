#include "sylreg/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace sylreg {

namespace {

std::mutex g_cache_mutex;
std::unordered_map<long, std::vector<Integer>> g_phi_polys;
// For each conductor: rows for exponents in [phi(N), N); row e gives the
// power-basis coefficients of zeta^e.
std::unordered_map<long, std::vector<std::vector<Integer>>> g_reduction_rows;

long phi_of(long n) {
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// Exact division of polynomials with integer coefficients (divisor monic).
std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    long dn = static_cast<long>(num.size()) - 1;
    long dd = static_cast<long>(den.size()) - 1;
    std::vector<Integer> quot(dn - dd + 1, 0);
    for (long i = dn; i >= dd; --i) {
        Integer c = num[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (long j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    return quot;
}

std::vector<Integer> compute_phi_poly(long n, const std::function<const std::vector<Integer>&(long)>& get) {
    // x^n - 1 = prod over d | n of Phi_d
    std::vector<Integer> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d == 0) num = poly_div_exact(std::move(num), get(d));
    }
    return num;
}

}  // namespace

long Cyclotomic::phi(long n) { return phi_of(n); }

const std::vector<Integer>& Cyclotomic::cyclotomic_poly(long n) {
    if (n <= 0) throw error("cyclotomic_poly: conductor must be positive");
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    std::function<const std::vector<Integer>&(long)> get = [&](long m) -> const std::vector<Integer>& {
        auto it = g_phi_polys.find(m);
        if (it != g_phi_polys.end()) return it->second;
        auto poly = compute_phi_poly(m, get);
        return g_phi_polys.emplace(m, std::move(poly)).first->second;
    };
    return get(n);
}

namespace {

// Must be called with no lock held; fills the row table for conductor n.
const std::vector<std::vector<Integer>>& reduction_rows(long n) {
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_reduction_rows.find(n);
        if (it != g_reduction_rows.end()) return it->second;
    }
    const auto& poly = Cyclotomic::cyclotomic_poly(n);
    long deg = static_cast<long>(poly.size()) - 1;  // = phi(n)
    std::vector<std::vector<Integer>> rows;
    rows.reserve(n - deg);
    // zeta^deg = -(poly[deg-1] zeta^{deg-1} + ... + poly[0])
    std::vector<Integer> row(deg);
    for (long j = 0; j < deg; ++j) row[j] = -poly[j];
    rows.push_back(row);
    for (long e = deg + 1; e < n; ++e) {
        std::vector<Integer> next(deg, 0);
        // next = shift(prev) with overflow folded through rows[0]
        const auto& prev = rows.back();
        Integer top = prev[deg - 1];
        for (long j = deg - 1; j >= 1; --j) next[j] = prev[j - 1];
        next[0] = 0;
        if (top != 0)
            for (long j = 0; j < deg; ++j) next[j] += top * rows[0][j];
        rows.push_back(std::move(next));
    }
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_reduction_rows.emplace(n, std::move(rows)).first->second;
}

}  // namespace

void Cyclotomic::reduce(std::map<long, Rational>&& raw) {
    long deg = phi_of(n_);
    const std::vector<std::vector<Integer>>* rows = nullptr;
    if (!raw.empty() && raw.rbegin()->first >= deg) rows = &reduction_rows(n_);
    c_.clear();
    std::vector<Rational> dense;
    bool use_dense = rows != nullptr;
    if (use_dense) {
        dense.assign(deg, Rational(0));
        for (auto& [e, co] : raw) {
            if (e < deg) {
                dense[e] += co;
            } else {
                const auto& row = (*rows)[e - deg];
                for (long j = 0; j < deg; ++j)
                    if (row[j] != 0) dense[j] += co * Rational(row[j]);
            }
        }
        for (long j = 0; j < deg; ++j)
            if (dense[j] != 0) c_[j] = dense[j];
    } else {
        for (auto& [e, co] : raw)
            if (co != 0) c_[e] = co;
    }
    if (is_rational()) n_ = 1;
    if (n_ == 1 && !c_.empty()) {
        Rational v = c_.begin()->second;
        c_.clear();
        if (v != 0) c_[0] = v;
    }
}

Cyclotomic Cyclotomic::make(long n, const std::vector<std::pair<long, Rational>>& terms) {
    if (n <= 0) throw error("Cyclotomic: conductor must be positive");
    Cyclotomic x;
    x.n_ = n;
    std::map<long, Rational> raw;
    for (const auto& [e, co] : terms) {
        if (co == 0) continue;
        long r = e % n;
        if (r < 0) r += n;
        raw[r] += co;
    }
    x.reduce(std::move(raw));
    return x;
}

Cyclotomic Cyclotomic::zeta(long n, long k) {
    return make(n, {{k, Rational(1)}});
}

Cyclotomic Cyclotomic::rebased(long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw error("Cyclotomic: rebase target must be a multiple of the conductor");
    long f = m / n_;
    Cyclotomic x;
    x.n_ = m;
    std::map<long, Rational> raw;
    for (const auto& [e, co] : c_) raw[e * f] = co;
    x.reduce(std::move(raw));
    return x;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    long m = std::lcm(n_, o.n_);
    Cyclotomic a = rebased(m), b = o.rebased(m);
    std::map<long, Rational> raw = std::move(a.c_);
    for (const auto& [e, co] : b.c_) raw[e] += co;
    Cyclotomic x;
    x.n_ = m;
    x.reduce(std::move(raw));
    return x;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic x = *this;
    for (auto& [e, co] : x.c_) co = -co;
    return x;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (n_ == 1 && o.n_ == 1) {
        if (c_.empty() || o.c_.empty()) return Cyclotomic();
        return Cyclotomic(c_.begin()->second * o.c_.begin()->second);
    }
    long m = std::lcm(n_, o.n_);
    Cyclotomic a = rebased(m), b = o.rebased(m);
    std::map<long, Rational> raw;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) {
            long e = ea + eb;
            if (e >= m) e -= m;
            raw[e] += ca * cb;
        }
    Cyclotomic x;
    x.n_ = m;
    x.reduce(std::move(raw));
    return x;
}

std::vector<Rational> Cyclotomic::power_coords(long m) const {
    if (m % n_ != 0) throw error("power_coords: m must be a multiple of the conductor");
    Cyclotomic r = rebased(m);
    std::vector<Rational> out(phi_of(m), Rational(0));
    for (const auto& [e, co] : r.c_) out[e] = co;
    return out;
}

Cyclotomic Cyclotomic::galois(long k) const {
    if (n_ == 1) return *this;
    long kk = k % n_;
    if (kk < 0) kk += n_;
    if (std::gcd(kk, n_) != 1) throw error("galois: exponent not coprime to conductor");
    std::map<long, Rational> raw;
    for (const auto& [e, co] : c_) raw[(e * kk) % n_] += co;
    Cyclotomic x;
    x.n_ = n_;
    x.reduce(std::move(raw));
    return x;
}

std::optional<Rational> Cyclotomic::to_rational() const {
    if (c_.empty()) return Rational(0);
    if (is_rational()) return c_.begin()->second;
    return std::nullopt;
}

Cyclotomic Cyclotomic::sqrt_int(const Integer& m) {
    if (m == 0) return Cyclotomic();
    Integer a = m < 0 ? -m : m;
    // a = s^2 * squarefree part
    Integer s = 1;
    std::vector<long> odd_primes;
    long twos = 0;
    Integer rest = a;
    for (Integer d = 2; d * d <= rest; ++d) {
        long e = 0;
        while (rest % d == 0) { rest /= d; ++e; }
        if (e == 0) continue;
        s *= ipow(d, e / 2);
        if (e % 2 == 1) {
            if (d == 2) twos = 1;
            else odd_primes.push_back(static_cast<long>(d));
        }
    }
    if (rest > 1) {
        if (rest == 2) twos = 1;
        else odd_primes.push_back(static_cast<long>(rest));
    }

    Cyclotomic out{Rational(s)};
    long i_power = (m < 0) ? 1 : 0;  // net power of i still to apply
    for (long p : odd_primes) {
        // Gauss sum: sum_t (t|p) zeta_p^t equals sqrt(p) for p = 1 mod 4,
        // i*sqrt(p) for p = 3 mod 4.
        std::vector<std::pair<long, Rational>> terms;
        for (long t = 1; t < p; ++t)
            terms.emplace_back(t, Rational(kronecker(t, p)));
        out *= make(p, terms);
        if (p % 4 == 3) i_power -= 1;
    }
    if (twos) out *= zeta(8, 1) + zeta(8, 7);  // sqrt(2)
    i_power %= 4;
    if (i_power < 0) i_power += 4;
    if (i_power) out *= zeta(4, i_power);
    return out;
}

std::string Cyclotomic::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, co] : c_) {
        if (!first) os << " + ";
        first = false;
        os << co;
        if (e > 0) os << "*z" << n_ << "^" << e;
    }
    return os.str();
}

}  // namespace sylreg
