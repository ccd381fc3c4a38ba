#include "sylreg/psl2.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace sylreg {

namespace {

struct Sl2Class {
    // kind: 0 identity, 1 centre z, 2 unipotent u, 3 unipotent u',
    //       4 z*u, 5 z*u', 6 split torus a^l, 7 nonsplit torus b^m
    int kind;
    long idx;  // l or m for torus classes
    std::string label;
    Integer size;
    long order;
};

std::vector<Sl2Class> sl2_classes(long q, long r) {
    std::vector<Sl2Class> cls;
    Integer half_q2 = Integer(q) * q;
    half_q2 = (half_q2 - 1) / 2;
    cls.push_back({0, 0, "1", Integer(1), 1});
    cls.push_back({1, 0, "z", Integer(1), 2});
    cls.push_back({2, 0, "u", half_q2, r});
    cls.push_back({3, 0, "u'", half_q2, r});
    cls.push_back({4, 0, "zu", half_q2, 2 * r});
    cls.push_back({5, 0, "zu'", half_q2, 2 * r});
    for (long l = 1; l <= (q - 3) / 2; ++l) {
        std::ostringstream os;
        os << "a" << l;
        cls.push_back({6, l, os.str(), Integer(q) * (q + 1), (q - 1) / std::gcd(l, q - 1)});
    }
    for (long m = 1; m <= (q - 1) / 2; ++m) {
        std::ostringstream os;
        os << "b" << m;
        cls.push_back({7, m, os.str(), Integer(q) * (q - 1), (q + 1) / std::gcd(m, q + 1)});
    }
    return cls;
}

// central sign: chi(z) / chi(1), always +-1 here
struct Sl2Row {
    std::string label;
    int central;  // +1 or -1
    std::vector<Cyclotomic> values;
};

int sign_pow(long k) { return k % 2 == 0 ? 1 : -1; }

std::vector<Sl2Row> sl2_rows(long q, const std::vector<Sl2Class>& cls) {
    long eps = sign_pow((q - 1) / 2);
    Cyclotomic tau = Cyclotomic::sqrt_int(Integer(eps) * q);
    Cyclotomic half{Rational(1, 2)};
    Cyclotomic one{1L};

    std::vector<Sl2Row> rows;
    auto value_on = [&](const Sl2Class& c, int central, const Cyclotomic& deg, const Cyclotomic& at_u,
                        const Cyclotomic& at_up, const std::function<Cyclotomic(long)>& at_a,
                        const std::function<Cyclotomic(long)>& at_b) -> Cyclotomic {
        switch (c.kind) {
            case 0: return deg;
            case 1: return deg * Cyclotomic(Rational(central));
            case 2: return at_u;
            case 3: return at_up;
            case 4: return at_u * Cyclotomic(Rational(central));
            case 5: return at_up * Cyclotomic(Rational(central));
            case 6: return at_a(c.idx);
            case 7: return at_b(c.idx);
        }
        throw error("sl2: bad class kind");
    };
    auto push = [&](const std::string& label, int central, Cyclotomic deg, Cyclotomic at_u, Cyclotomic at_up,
                    std::function<Cyclotomic(long)> at_a, std::function<Cyclotomic(long)> at_b) {
        Sl2Row row{label, central, {}};
        row.values.reserve(cls.size());
        for (const auto& c : cls) row.values.push_back(value_on(c, central, deg, at_u, at_up, at_a, at_b));
        rows.push_back(std::move(row));
    };

    auto const_fn = [](Cyclotomic v) { return [v](long) { return v; }; };

    // trivial and Steinberg
    push("1", 1, one, one, one, const_fn(one), const_fn(one));
    push("St", 1, Cyclotomic(Integer(q)), Cyclotomic(), Cyclotomic(), const_fn(one), const_fn(-one));

    // principal series of degree q+1, indexed by characters of the split torus
    for (long i = 1; i <= (q - 3) / 2; ++i) {
        int central = sign_pow(i);
        auto at_a = [q, i](long l) {
            return Cyclotomic::zeta(q - 1, i * l) + Cyclotomic::zeta(q - 1, -(i * l));
        };
        push("ps" + std::to_string(i), central, Cyclotomic(Integer(q + 1)), one, one, at_a,
             const_fn(Cyclotomic()));
    }

    // discrete series of degree q-1, indexed by characters of the nonsplit torus
    for (long j = 1; j <= (q - 1) / 2; ++j) {
        int central = sign_pow(j);
        auto at_b = [q, j](long m) {
            return -(Cyclotomic::zeta(q + 1, j * m) + Cyclotomic::zeta(q + 1, -(j * m)));
        };
        push("ds" + std::to_string(j), central, Cyclotomic(Integer(q - 1)), -one, -one,
             const_fn(Cyclotomic()), at_b);
    }

    // half characters of degree (q+1)/2 from the quadratic split-torus character
    {
        Cyclotomic deg{Rational(q + 1, 2)};
        auto at_a = [](long l) { return Cyclotomic(Rational(sign_pow(l))); };
        Cyclotomic xp = (one + tau) * half, xm = (one - tau) * half;
        push("xi+", eps, deg, xp, xm, at_a, const_fn(Cyclotomic()));
        push("xi-", eps, deg, xm, xp, at_a, const_fn(Cyclotomic()));
    }

    // half characters of degree (q-1)/2 from the quadratic nonsplit-torus character
    {
        Cyclotomic deg{Rational(q - 1, 2)};
        auto at_b = [](long m) { return Cyclotomic(Rational(-sign_pow(m))); };
        Cyclotomic ep = (-one + tau) * half, em = (-one - tau) * half;
        push("eta+", -eps, deg, ep, em, const_fn(Cyclotomic()), at_b);
        push("eta-", -eps, deg, em, ep, const_fn(Cyclotomic()), at_b);
    }
    return rows;
}

long check_q(long q) {
    auto pp = prime_power_split(q);
    if (!pp || q % 2 == 0 || q < 5) throw error("sl2/psl2: q must be an odd prime power >= 5");
    return pp->first;
}

}  // namespace

CharacterTable sl2_table(long q) {
    long r = check_q(q);
    auto cls = sl2_classes(q, r);
    auto rows = sl2_rows(q, cls);

    CharacterTable t;
    t.name = "SL2(" + std::to_string(q) + ")";
    t.group_order = Integer(q) * (q - 1) * (q + 1);
    for (const auto& c : cls) t.classes.push_back({c.label, c.size, c.order});
    // trivial first, then by degree (stable)
    std::stable_sort(rows.begin(), rows.end(), [](const Sl2Row& x, const Sl2Row& y) {
        auto dx = *x.values[0].to_rational(), dy = *y.values[0].to_rational();
        return dx < dy;
    });
    std::stable_partition(rows.begin(), rows.end(), [](const Sl2Row& x) { return x.label == "1"; });
    for (auto& row : rows) {
        t.row_labels.push_back(row.label);
        t.irreducibles.push_back(std::move(row.values));
    }
    return t;
}

CharacterTable psl2_table(long q) {
    long r = check_q(q);
    auto cls = sl2_classes(q, r);
    auto rows = sl2_rows(q, cls);

    // class fusion along multiplication by z
    auto z_partner = [&](size_t c) -> size_t {
        const auto& ci = cls[c];
        switch (ci.kind) {
            case 0: return 1;
            case 1: return 0;
            case 2: return 4;
            case 3: return 5;
            case 4: return 2;
            case 5: return 3;
            case 6: {
                long l = ci.idx + (q - 1) / 2;
                l %= (q - 1);
                if (l > (q - 1) / 2) l = (q - 1) - l;  // fold by inversion
                for (size_t d = 0; d < cls.size(); ++d)
                    if (cls[d].kind == 6 && cls[d].idx == l) return d;
                throw error("psl2: split torus fusion out of range");
            }
            case 7: {
                long m = ci.idx + (q + 1) / 2;
                m %= (q + 1);
                if (m > (q + 1) / 2) m = (q + 1) - m;
                for (size_t d = 0; d < cls.size(); ++d)
                    if (cls[d].kind == 7 && cls[d].idx == m) return d;
                throw error("psl2: nonsplit torus fusion out of range");
            }
        }
        throw error("psl2: bad class kind");
    };

    CharacterTable t;
    t.name = "PSL2(" + std::to_string(q) + ")";
    t.group_order = Integer(q) * (q - 1) * (q + 1) / 2;

    std::vector<size_t> keep;       // representative SL2 class per PSL2 class
    std::vector<int> image(cls.size(), -1);
    for (size_t c = 0; c < cls.size(); ++c) {
        if (image[c] >= 0) continue;
        size_t zc = z_partner(c);
        image[c] = static_cast<int>(keep.size());
        image[zc] = static_cast<int>(keep.size());
        keep.push_back(c);

        ClassInfo ci;
        const auto& rep = cls[c];
        ci.label = rep.label;
        ci.size = (zc == c) ? rep.size / 2 : rep.size;
        long o = rep.order;
        switch (rep.kind) {
            case 0: case 1: o = 1; break;
            case 2: case 3: o = r; break;
            case 4: case 5: o = r; break;
            case 6: o = ((q - 1) / 2) / std::gcd(rep.idx, (q - 1) / 2); break;
            case 7: o = ((q + 1) / 2) / std::gcd(rep.idx, (q + 1) / 2); break;
        }
        ci.element_order = o;
        t.classes.push_back(std::move(ci));
    }

    std::vector<Sl2Row> kept_rows;
    for (auto& row : rows) {
        if (row.central != 1) continue;
        Sl2Row nr{row.label, 1, {}};
        nr.values.reserve(keep.size());
        for (size_t c : keep) nr.values.push_back(row.values[c]);
        kept_rows.push_back(std::move(nr));
    }
    std::stable_sort(kept_rows.begin(), kept_rows.end(), [](const Sl2Row& x, const Sl2Row& y) {
        auto dx = *x.values[0].to_rational(), dy = *y.values[0].to_rational();
        return dx < dy;
    });
    std::stable_partition(kept_rows.begin(), kept_rows.end(),
                          [](const Sl2Row& x) { return x.label == "1"; });
    for (auto& row : kept_rows) {
        t.row_labels.push_back(row.label);
        t.irreducibles.push_back(std::move(row.values));
    }
    return t;
}

}  // namespace sylreg
