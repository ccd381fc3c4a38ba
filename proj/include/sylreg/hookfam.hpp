#pragma once

#include "sylreg/ctable.hpp"
#include "sylreg/sn_an.hpp"

namespace sylreg {

/// The explicit 2-vanishing hook-sum families over S_n and A_n.
enum class GammaVariant {
    full,      // S_n, n even: sum of all hooks
    e,         // S_n, n odd: even-indexed hooks
    o,         // S_n, n odd: odd-indexed hooks
    a0,        // A_n, n even: Gamma restricted and halved
    ea,        // A_n, n = 1 mod 4
    o_plus,    // A_n, n = 1 mod 4, split hook with + half
    o_minus,
    oa,        // A_n, n = 3 mod 4
    e_plus,    // A_n, n = 3 mod 4, split hook with + half
    e_minus,
};

std::string gamma_variant_name(GammaVariant v);
GammaVariant gamma_variant_from_string(const std::string& s);

/// Whether the variant lives on the S_n table (full/e/o) or the A_n table.
bool gamma_variant_on_sn(GammaVariant v);

/// Parity constraint of the variant.
bool gamma_variant_allows(GammaVariant v, long n);

/// Multiplicity vector of the family over sn_table(n) resp. an_table(n);
/// throws if the parity constraint fails.
VirtualCharacter gamma_family(long n, GammaVariant v, const CharacterTable& t);

/// Value of the hook character Gamma_i on a class (m-cycle) * h with m even
/// and h of cycle type h_type on the remaining n-m points, computed by the
/// three-case reduction to hooks of S_{n-m}. Serves as the independent check
/// against direct Murnaghan-Nakayama evaluation.
Integer h66_value(long n, long m, long i, const Partition& h_type);

struct FamilyVerification {
    long n;
    GammaVariant variant;
    Integer degree;
    Integer sylow_part;        // |G|_2
    bool vanishing_ok;         // zero on every 2-singular class
    bool steinberg_like;       // vanishing and degree == |G|_2
    bool expected_steinberg;   // n = 2^k resp. 2^k + 1 rule
    bool passed() const { return vanishing_ok && steinberg_like == expected_steinberg; }
};

/// Evaluates the family directly on every 2-singular class of the table and
/// compares the verdicts with the n = 2^k / 2^k + 1 classification.
FamilyVerification verify_family(long n, GammaVariant v);

std::string verification_to_json(const FamilyVerification& r);

}  // namespace sylreg
