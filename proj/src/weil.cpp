#include "sylreg/weil.hpp"

#include "sylreg/cyclotomic.hpp"

#include <sstream>

namespace sylreg {

void check_weil_spec(const WeilSpec& s) {
    if (!is_prime(s.p) || s.p == 2) throw error("weil: p must be an odd prime");
    if (!prime_power_split(s.q)) throw error("weil: q must be a prime power");
    if (s.c() <= 0 || s.c() % s.p != 0)
        throw error(std::string("weil: p must divide ") + (s.unitary ? "q+1" : "q-1"));
    if (s.unitary && s.p == 3 && s.q == 2) throw error("weil: (p,q) = (3,2) excluded in the unitary kind");
}

namespace {

long eigenvalue_one_count(const WeilSpec& s, long z_exp, long h_exp) {
    long c = s.c();
    long step = c / s.p;  // exponent of the order-p element of Z_c
    long d = 0;
    for (long j = 0; j < s.p; ++j) {
        long e = (z_exp + j * h_exp % c * step) % c;
        if (e < 0) e += c;
        if (e == 0) ++d;
    }
    return d;
}

}  // namespace

Integer omega_value(const WeilSpec& s, long z_exp, long h_exp) {
    check_weil_spec(s);
    long d = eigenvalue_one_count(s, z_exp, h_exp);
    if (s.unitary) {
        Integer v = ipow(Integer(-s.q), d);
        return -v;
    }
    return ipow(Integer(s.q), d) - 1;
}

Integer weil_inner(const WeilSpec& s, long zeta_index, long i) {
    check_weil_spec(s);
    long c = s.c(), p = s.p;
    // exact sum over X of omega(x) * conj(zeta(z) eps_i(h)) in Q(zeta_{pc})
    Cyclotomic acc;
    for (long a = 0; a < c; ++a)
        for (long k = 0; k < p; ++k) {
            Integer w = omega_value(s, a, k);
            if (w == 0) continue;
            Cyclotomic character = Cyclotomic::zeta(c, zeta_index * a) * Cyclotomic::zeta(p, i * k);
            acc += Cyclotomic(Rational(w)) * character.conj();
        }
    auto r = acc.to_rational();
    if (!r) throw error("weil_inner: non-rational inner product (implementation bug)");
    Rational val = *r / Rational(Integer(c) * p);
    if (boost::multiprecision::denominator(val) != 1 || val < 0) {
        std::ostringstream os;
        os << "weil_inner: multiplicity " << val << " is not a nonnegative integer";
        throw error(os.str());
    }
    return boost::multiprecision::numerator(val);
}

RhoValue rho_at_h(const WeilSpec& s, long zeta_index) {
    check_weil_spec(s);
    long c = s.c(), p = s.p;
    RhoValue out;
    out.zeta_trivial = (zeta_index % c + c) % c == 0;
    // zeta restricted to the order-p subgroup {0, c/p, 2c/p, ...} of Z_c is
    // trivial iff p divides zeta_index
    out.zeta_trivial_on_zp = ((zeta_index % p) + p) % p == 0;

    // trace of h on M_zeta: sum_i m_i nu^i; the multiplicities for i != p are
    // all equal, so the trace is m_p - m_{i != p}
    Integer m_p = weil_inner(s, zeta_index, p);
    Integer m_other = weil_inner(s, zeta_index, 1);
    for (long i = 2; i < p; ++i)
        if (weil_inner(s, zeta_index, i) != m_other)
            throw error("rho_at_h: eigenvalue multiplicities for i != p are not constant");
    out.trace = m_p - m_other;
    out.rho_h = out.trace;
    if (!s.unitary && out.zeta_trivial) out.rho_h -= 1;  // M_1 = trivial + irreducible
    return out;
}

std::vector<WeilCheck> verify_weil(const WeilSpec& s) {
    check_weil_spec(s);
    std::vector<WeilCheck> checks;
    long c = s.c(), p = s.p;
    auto add = [&checks](std::string item, bool ok, std::string detail = "") {
        checks.push_back({std::move(item), ok, std::move(detail)});
    };

    Integer qp = ipow(Integer(s.q), p);
    Integer X = Integer(c) * p;

    // spot values of omega
    add("omega(identity) = q^p", omega_value(s, 0, 0) == (s.unitary ? qp : qp - 1));
    if (c > p) {
        // some z with z^p != 1
        bool ok = true;
        for (long a = 1; a < c; ++a) {
            if ((a * p) % c == 0) continue;
            for (long k = 0; k < p; ++k)
                if (omega_value(s, a, k) != (s.unitary ? Integer(-1) : Integer(0))) ok = false;
        }
        add("omega = -1 off the p-torsion of the centre (unitary) / 0 (linear)", ok);
    }
    {
        bool ok = true;
        for (long j = 0; j < p; ++j) {
            long a = j * (c / p);
            for (long k = 1; k < p; ++k)
                if (omega_value(s, a, k) != (s.unitary ? Integer(s.q) : Integer(s.q - 1))) ok = false;
        }
        add("omega(z h^k) = q (unitary) / q-1 (linear) for z^p = 1, k != 0", ok);
    }

    // closed forms of |X| * (omega, zeta eps_i) and the partition of unity
    Integer total = 0;
    bool closed_ok = true, integral_ok = true;
    std::ostringstream bad;
    for (long t = 0; t < c; ++t) {
        bool on_zp = (t % p) == 0;
        for (long i = 1; i <= p; ++i) {
            Integer m;
            try {
                m = weil_inner(s, t, i);
            } catch (const error& e) {
                integral_ok = false;
                bad << " (t=" << t << ",i=" << i << ")";
                continue;
            }
            total += m;
            Integer expected;
            if (s.unitary) {
                if (!on_zp) expected = qp + 1;
                else if (i != p) expected = qp + 1 - p * (c);
                else if (t != 0) expected = qp + 1 + (p - 1) * p * c;
                else expected = qp + 1 + (p - 2) * p * c;
            } else {
                if (!on_zp) expected = qp - 1;
                else if (i != p) expected = qp - 1 - p * c;
                else expected = qp - 1 + p * (p - 1) * c;
            }
            if (m * X != expected) {
                closed_ok = false;
                bad << " (t=" << t << ",i=" << i << ")";
            }
        }
    }
    add("inner products are nonnegative integers", integral_ok, bad.str());
    add("inner products match the closed forms", closed_ok, bad.str());
    add("multiplicities sum to dim omega", total == (s.unitary ? qp : qp - 1));

    // rho(h) with the zeta(Z_p) criterion
    bool criterion_ok = true, quoted_ok = true;
    std::ostringstream crit_bad, quoted_bad;
    for (long t = 0; t < c; ++t) {
        auto rv = rho_at_h(s, t);
        if ((rv.rho_h != 0) != rv.zeta_trivial_on_zp) {
            criterion_ok = false;
            crit_bad << " (t=" << t << " rho=" << rv.rho_h << ")";
        }
        // quoted value set: {0, p, p-1} for the unitary kind; for the linear
        // kind the quoted exception at trivial zeta is p-2
        Integer quoted;
        if (!rv.zeta_trivial_on_zp) quoted = 0;
        else if (!rv.zeta_trivial) quoted = p;
        else quoted = s.unitary ? Integer(p - 1) : Integer(p - 2);
        if (rv.rho_h != quoted) {
            quoted_ok = false;
            quoted_bad << " (t=" << t << " rho=" << rv.rho_h << " quoted=" << quoted << ")";
        }
    }
    add("rho(h) nonzero exactly when zeta is trivial on Z_p", criterion_ok, crit_bad.str());
    add("rho(h) matches the quoted value set", quoted_ok, quoted_bad.str());

    return checks;
}

}  // namespace sylreg
