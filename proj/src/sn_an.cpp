#include "sylreg/sn_an.hpp"

#include "sylreg/mn.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sylreg {

std::string partition_label(const Partition& p) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    os << "]";
    return os.str();
}

namespace {

// Classes throughout are cycle types in lexicographic order so that the
// identity [1^n] comes first.
std::vector<Partition> classes_lex(long n) {
    auto parts = partitions_of(n);
    std::reverse(parts.begin(), parts.end());
    return parts;
}

void check_range(long n, long lo, const char* who) {
    if (n < lo || n > kMaxSymmetricN)
        throw error(std::string(who) + ": n must be in [" + std::to_string(lo) + ", " +
                    std::to_string(kMaxSymmetricN) + "]");
}

bool is_even_type(const Partition& mu, long n) {
    return (n - static_cast<long>(mu.size())) % 2 == 0;
}

bool splits_in_an(const Partition& mu) {
    for (size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] % 2 == 0) return false;
        if (i + 1 < mu.size() && mu[i] == mu[i + 1]) return false;
    }
    return true;
}

}  // namespace

CharacterTable sn_table(long n) {
    check_range(n, 1, "sn_table");
    CharacterTable t;
    t.name = "S" + std::to_string(n);
    t.group_order = factorial(n);

    auto class_types = classes_lex(n);
    for (const auto& mu : class_types) {
        ClassInfo ci;
        ci.label = partition_label(mu);
        ci.size = t.group_order / centralizer_order(mu);
        ci.element_order = cycle_type_order(mu);
        t.classes.push_back(std::move(ci));
    }

    auto rows = partitions_of(n);
    for (const auto& lambda : rows) {
        t.row_labels.push_back(partition_label(lambda));
        std::vector<Cyclotomic> row;
        row.reserve(class_types.size());
        for (const auto& mu : class_types) row.emplace_back(mn_value(lambda, mu));
        t.irreducibles.push_back(std::move(row));
    }

    // power maps: class of g^p has the cycle type of the p-th power
    std::map<Partition, int> index_of;
    for (size_t c = 0; c < class_types.size(); ++c) index_of[class_types[c]] = static_cast<int>(c);
    for (long p = 2; p <= n; ++p) {
        if (!is_prime(p)) continue;
        std::vector<int> pm;
        pm.reserve(class_types.size());
        for (const auto& mu : class_types) pm.push_back(index_of.at(power_cycle_type(mu, p)));
        t.power_maps[p] = std::move(pm);
    }
    return t;
}

std::vector<AnClass> an_classes(long n) {
    std::vector<AnClass> out;
    for (const auto& mu : classes_lex(n)) {
        if (!is_even_type(mu, n)) continue;
        if (splits_in_an(mu)) {
            out.push_back({mu, true, true});
            out.push_back({mu, true, false});
        } else {
            out.push_back({mu, false, false});
        }
    }
    return out;
}

std::vector<AnRow> an_rows(long n) {
    std::vector<AnRow> out;
    for (const auto& lambda : partitions_of(n)) {
        Partition conj = conjugate(lambda);
        if (lambda == conj) {
            out.push_back({lambda, +1});
            out.push_back({lambda, -1});
        } else if (lambda > conj) {
            // revlex-first representative: [n] before [1^n]; partitions_of
            // emits revlex order, and "greater in lex on the vectors" matches
            // coming earlier in that order for conjugate pairs.
            out.push_back({lambda, 0});
        }
    }
    return out;
}

CharacterTable an_table(long n) {
    check_range(n, 3, "an_table");
    CharacterTable t;
    t.name = "A" + std::to_string(n);
    t.group_order = factorial(n) / 2;

    auto cls = an_classes(n);
    for (const auto& ac : cls) {
        ClassInfo ci;
        ci.label = partition_label(ac.type) + (ac.split ? (ac.plus_half ? "+" : "-") : "");
        Integer sn_class = factorial(n) / centralizer_order(ac.type);
        ci.size = ac.split ? sn_class / 2 : sn_class;
        ci.element_order = cycle_type_order(ac.type);
        t.classes.push_back(std::move(ci));
    }

    for (const auto& row : an_rows(n)) {
        std::string label = partition_label(row.lambda);
        if (row.split_sign) label += (row.split_sign > 0 ? "+" : "-");
        t.row_labels.push_back(label);

        std::vector<Cyclotomic> values;
        values.reserve(cls.size());
        if (row.split_sign == 0) {
            for (const auto& ac : cls) values.emplace_back(mn_value(row.lambda, ac.type));
        } else {
            Partition h = diagonal_hooks(row.lambda);
            long r = static_cast<long>(h.size());
            long eps = ((n - r) / 2) % 2 == 0 ? 1 : -1;
            Integer prod = 1;
            for (long x : h) prod *= x;
            // (eps +- sqrt(eps * prod)) / 2 on the two classes of type h
            Cyclotomic root = Cyclotomic::sqrt_int(Integer(eps) * prod);
            Cyclotomic half{Rational(1, 2)};
            Cyclotomic v_plus = (Cyclotomic(Rational(eps)) + root) * half;
            Cyclotomic v_minus = (Cyclotomic(Rational(eps)) - root) * half;
            for (const auto& ac : cls) {
                if (ac.split && ac.type == h) {
                    bool plus_branch = (row.split_sign > 0) == ac.plus_half;
                    values.push_back(plus_branch ? v_plus : v_minus);
                } else {
                    Integer full = mn_value(row.lambda, ac.type);
                    values.emplace_back(Rational(full, 2));
                }
            }
        }
        t.irreducibles.push_back(std::move(values));
    }
    return t;
}

}  // namespace sylreg
