#pragma once

#include "sylreg/numbers.hpp"

#include <map>
#include <string>
#include <vector>

namespace sylreg {

enum class Family {
    Sym, Alt,
    GL, SL, PSL, PGL,
    GU, SU, PSU, PGU,
    Sp, PSp,
    OmegaOdd,      // Omega_{2n+1}(q)
    GOplus, GOminus,       // full orthogonal groups GO^{+-}_{2n}(q)
    POmegaPlus, POmegaMinus
};

std::string family_name(Family f);
Family family_from_string(const std::string& s);

struct GroupFamilySpec {
    Family family;
    long n = 0;      // degree / rank parameter
    long q = 0;      // field size; ignored for Sym/Alt
};

/// Exact p-part of x (the largest power of p dividing x).
Integer p_part(const Integer& x, long p);
/// p-part of n! by Legendre's formula, without forming the factorial.
Integer p_part_factorial(long n, long p);

/// e = ord_p(q), d = ord_p(-q) for an odd prime p not dividing q.
std::pair<long, long> e_and_d(long q, long p);

/// Order of the group as an exact integer (full classical group orders,
/// quotients by the standard centres).
Integer group_order(const GroupFamilySpec& g);

/// Exact |G|_p computed from the closed-form order polynomial. This is the
/// unconditional oracle.
Integer sylow_order(const GroupFamilySpec& g, long p);

/// |G|_p through the reduction formulas (tower of GL / GU reductions for odd
/// p, the n-fold wreath 2-part formula for PSp at p = 2). Falls back to the
/// polynomial route where no shortcut applies; always cross-checked against
/// sylow_order in the tests.
Integer sylow_order_shortcut(const GroupFamilySpec& g, long p);

struct MuTriple {
    std::optional<Integer> mu1, mu2, mu3;
};

/// Smallest three nontrivial irreducible character degrees, where the
/// standard minimal-degree tables cover the parameters; unset components
/// mean unknown-for-params.
MuTriple mu_degrees(const GroupFamilySpec& g);

enum class AuditLemma { dd77, u44, su_dp, third, ms1, remark666 };

AuditLemma audit_lemma_from_string(const std::string& s);
std::string audit_lemma_name(AuditLemma l);

struct AuditRecord {
    std::map<std::string, std::string> params;
    Integer lhs, rhs;
    bool holds = false;               // the audited inequality is satisfied
    bool exception_expected = false;  // listed exception, so !holds is fine
    bool skipped = false;             // outside formula validity
    std::string note;
    bool consistent() const {
        if (skipped) return true;
        return holds != exception_expected;
    }
};

struct AuditReport {
    AuditLemma lemma;
    std::vector<AuditRecord> records;
    bool all_consistent() const {
        for (const auto& r : records)
            if (!r.consistent()) return false;
        return true;
    }
    long checked() const {
        long c = 0;
        for (const auto& r : records)
            if (!r.skipped) ++c;
        return c;
    }
};

struct AuditGrid {
    long pmax = 13;
    long qmax = 16;
    long nmax = 12;
};

AuditReport audit_inequality(AuditLemma lemma, const AuditGrid& grid);

}  // namespace sylreg
