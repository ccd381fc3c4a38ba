#pragma once

#include "sylreg/numbers.hpp"

#include <string>
#include <vector>

namespace sylreg {

/// Verification of the restriction of the Weil character of GU_p(q) resp.
/// GL_p(q) to the abelian group X = <Z(H), h>, h = diag(1, e, ..., e^{p-1})
/// with e of order p. Everything is exponent arithmetic in Z_c x Z_p,
/// c = q + 1 (unitary) or q - 1 (linear).
struct WeilSpec {
    bool unitary = true;
    long p = 3;
    long q = 0;
    long c() const { return unitary ? q + 1 : q - 1; }
};

/// Throws unless p is an odd prime, q a prime power, p | c, and, in the
/// unitary kind, (p, q) != (3, 2).
void check_weil_spec(const WeilSpec& s);

/// Weil character value at z^a * h^k: the eigenvalue-1 multiplicity d drives
/// -(-q)^d (unitary) resp. q^d - 1 (linear; the permutation character on the
/// nonzero vectors, which is the variant whose inner products are integral).
Integer omega_value(const WeilSpec& s, long z_exp, long h_exp);

/// (omega|_X, zeta ** eps_i) as an exact rational; the contract demands a
/// nonnegative integer, so any other outcome throws.
Integer weil_inner(const WeilSpec& s, long zeta_index, long i);

struct RhoValue {
    Integer trace;        // trace of h on the zeta-isotypic component M_zeta
    Integer rho_h;        // value on the irreducible Weil constituent
    bool zeta_trivial;
    bool zeta_trivial_on_zp;
};

/// Trace of h on M_zeta from the inner products; for the linear kind at
/// trivial zeta the component is 1 + rho, so rho_h = trace - 1 there.
RhoValue rho_at_h(const WeilSpec& s, long zeta_index);

struct WeilCheck {
    std::string item;
    bool ok;
    std::string detail;
};

/// Full verification battery for one (kind, p, q): closed forms of the inner
/// products, integrality, the partition of unity over all (zeta, i), and the
/// value-set membership of rho(h) with the zeta(Z_p) criterion.
std::vector<WeilCheck> verify_weil(const WeilSpec& s);

}  // namespace sylreg
