#include "sylreg/hookfam.hpp"

#include "sylreg/mn.hpp"
#include "sylreg/sylow.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace sylreg {

namespace {

Partition hook_partition(long n, long i) {
    if (i < 1 || i > n) throw error("hook_partition: index out of range");
    if (i == 1) return Partition(n, 1);
    Partition h{i};
    for (long j = 0; j < n - i; ++j) h.push_back(1);
    return h;
}

bool is_two_power(long n) { return n >= 1 && (n & (n - 1)) == 0; }

// hook indices selected by each variant
std::vector<long> variant_indices(long n, GammaVariant v) {
    std::vector<long> idx;
    switch (v) {
        case GammaVariant::full:
            for (long i = 1; i <= n; ++i) idx.push_back(i);
            break;
        case GammaVariant::e:
            for (long i = 2; i <= n - 1; i += 2) idx.push_back(i);
            break;
        case GammaVariant::o:
            for (long i = 1; i <= n; i += 2) idx.push_back(i);
            break;
        case GammaVariant::a0:
            for (long i = 1; i <= n / 2; ++i) idx.push_back(i);
            break;
        case GammaVariant::ea:
            for (long i = 2; i <= (n - 1) / 2; i += 2) idx.push_back(i);
            break;
        case GammaVariant::o_plus:
        case GammaVariant::o_minus:
            for (long i = 1; i <= (n - 3) / 2; i += 2) idx.push_back(i);
            break;
        case GammaVariant::oa:
            for (long i = 1; i <= (n - 1) / 2; i += 2) idx.push_back(i);
            break;
        case GammaVariant::e_plus:
        case GammaVariant::e_minus:
            for (long i = 2; i <= (n - 3) / 2; i += 2) idx.push_back(i);
            break;
    }
    return idx;
}

bool variant_has_split_hook(GammaVariant v) {
    return v == GammaVariant::o_plus || v == GammaVariant::o_minus || v == GammaVariant::e_plus ||
           v == GammaVariant::e_minus;
}

}  // namespace

std::string gamma_variant_name(GammaVariant v) {
    switch (v) {
        case GammaVariant::full: return "full";
        case GammaVariant::e: return "e";
        case GammaVariant::o: return "o";
        case GammaVariant::a0: return "a0";
        case GammaVariant::ea: return "ea";
        case GammaVariant::o_plus: return "o+";
        case GammaVariant::o_minus: return "o-";
        case GammaVariant::oa: return "oa";
        case GammaVariant::e_plus: return "e+";
        case GammaVariant::e_minus: return "e-";
    }
    throw error("gamma_variant_name: bad variant");
}

GammaVariant gamma_variant_from_string(const std::string& s) {
    static const std::map<std::string, GammaVariant> m = {
        {"full", GammaVariant::full}, {"e", GammaVariant::e}, {"o", GammaVariant::o},
        {"a0", GammaVariant::a0}, {"ea", GammaVariant::ea}, {"o+", GammaVariant::o_plus},
        {"o-", GammaVariant::o_minus}, {"oa", GammaVariant::oa}, {"e+", GammaVariant::e_plus},
        {"e-", GammaVariant::e_minus}};
    auto it = m.find(s);
    if (it == m.end()) throw error("unknown gamma variant '" + s + "'");
    return it->second;
}

bool gamma_variant_on_sn(GammaVariant v) {
    return v == GammaVariant::full || v == GammaVariant::e || v == GammaVariant::o;
}

bool gamma_variant_allows(GammaVariant v, long n) {
    switch (v) {
        case GammaVariant::full: return n >= 2 && n % 2 == 0;
        case GammaVariant::e:
        case GammaVariant::o: return n >= 3 && n % 2 == 1;
        case GammaVariant::a0: return n >= 4 && n % 2 == 0;
        case GammaVariant::ea:
        case GammaVariant::o_plus:
        case GammaVariant::o_minus: return n >= 5 && n % 4 == 1;
        case GammaVariant::oa:
        case GammaVariant::e_plus:
        case GammaVariant::e_minus: return n > 3 && n % 4 == 3;
    }
    return false;
}

VirtualCharacter gamma_family(long n, GammaVariant v, const CharacterTable& t) {
    if (!gamma_variant_allows(v, n))
        throw error("gamma_family: variant " + gamma_variant_name(v) + " not defined for n = " +
                    std::to_string(n));
    VirtualCharacter vc;
    vc.mult.assign(t.num_rows(), 0);
    auto bump = [&](const std::string& label) {
        for (size_t i = 0; i < t.num_rows(); ++i)
            if (t.row_labels[i] == label) {
                vc.mult[i] += 1;
                return;
            }
        throw error("gamma_family: row '" + label + "' not found in " + t.name);
    };

    if (gamma_variant_on_sn(v)) {
        for (long i : variant_indices(n, v)) bump(partition_label(hook_partition(n, i)));
        return vc;
    }

    // A_n: the pair row carries the revlex-first representative of
    // {hook_i, hook_{n+1-i}}, which is the one with the larger first part.
    for (long i : variant_indices(n, v)) {
        long canonical = std::max(i, n + 1 - i);
        bump(partition_label(hook_partition(n, canonical)));
    }
    if (variant_has_split_hook(v)) {
        Partition split_hook = hook_partition(n, (n + 1) / 2);
        bool plus = (v == GammaVariant::o_plus || v == GammaVariant::e_plus);
        bump(partition_label(split_hook) + (plus ? "+" : "-"));
    }
    return vc;
}

Integer h66_value(long n, long m, long i, const Partition& h_type) {
    if (m <= 0 || m >= n || m % 2 != 0) throw error("h66_value: m must be even with 0 < m < n");
    if (i < 1 || i > n) throw error("h66_value: hook index out of range");
    if (partition_sum(h_type) != n - m) throw error("h66_value: h must have size n - m");
    auto term = [&](long k) -> Integer {
        // Gamma^{n-m}_k evaluated at h, zero outside the valid index range
        if (k < 1 || k > n - m) return 0;
        return mn_value(hook_partition(n - m, k), h_type);
    };
    if (i <= m && n - m < i) return term(i - m) - term(i);  // both cases degenerate together
    if (i <= m) return -term(i);
    if (n - m < i) return term(i - m);
    return term(i - m) - term(i);
}

FamilyVerification verify_family(long n, GammaVariant v) {
    FamilyVerification out;
    out.n = n;
    out.variant = v;
    CharacterTable t = gamma_variant_on_sn(v) ? sn_table(n) : an_table(n);
    VirtualCharacter vc = gamma_family(n, v, t);
    out.degree = vc.degree(t);
    out.sylow_part = p_part(t.group_order, 2);

    out.vanishing_ok = true;
    auto ptypes = classes_by_p_type(t, 2);
    for (size_t c : ptypes.p_singular)
        if (!vc.value_at(t, c).is_zero()) { out.vanishing_ok = false; break; }

    out.steinberg_like = out.vanishing_ok && out.degree == out.sylow_part;
    switch (v) {
        case GammaVariant::full:
        case GammaVariant::a0:
            out.expected_steinberg = is_two_power(n);
            break;
        case GammaVariant::e:
        case GammaVariant::o:
        case GammaVariant::ea:
        case GammaVariant::o_plus:
        case GammaVariant::o_minus:
            out.expected_steinberg = is_two_power(n - 1);
            break;
        case GammaVariant::oa:
        case GammaVariant::e_plus:
        case GammaVariant::e_minus:
            out.expected_steinberg = false;  // n = 3 mod 4 is never 2^k or 2^k + 1 here
            break;
    }
    return out;
}

std::string verification_to_json(const FamilyVerification& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["variant"] = gamma_variant_name(r.variant);
    j["degree"] = r.degree.convert_to<long long>();
    j["sylow_part"] = r.sylow_part.convert_to<long long>();
    j["vanishing"] = r.vanishing_ok;
    j["steinberg_like"] = r.steinberg_like;
    j["expected_steinberg_like"] = r.expected_steinberg;
    j["pass"] = r.passed();
    return j.dump(1) + "\n";
}

}  // namespace sylreg
