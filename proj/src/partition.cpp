#include "sylreg/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace sylreg {

namespace {

void gen(long n, long maxpart, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (long k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        gen(n - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(long n) {
    if (n < 0) throw error("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    Partition cur;
    gen(n, n, cur, out);
    if (n == 0) out = {Partition{}};
    return out;
}

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

Partition conjugate(const Partition& p) {
    Partition q;
    if (p.empty()) return q;
    for (long j = 0; j < p[0]; ++j) {
        long count = 0;
        for (long part : p)
            if (part > j) ++count;
        q.push_back(count);
    }
    return q;
}

Integer centralizer_order(const Partition& mu) {
    std::map<long, long> mult;
    for (long part : mu) ++mult[part];
    Integer z = 1;
    for (auto [k, m] : mult) z *= ipow(Integer(k), m) * factorial(m);
    return z;
}

long cycle_type_order(const Partition& mu) {
    long l = 1;
    for (long part : mu) l = std::lcm(l, part);
    return l;
}

Partition power_cycle_type(const Partition& mu, long s) {
    if (s <= 0) throw error("power_cycle_type: exponent must be positive");
    Partition out;
    for (long part : mu) {
        long g = std::gcd(part, s);
        for (long i = 0; i < g; ++i) out.push_back(part / g);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

Partition diagonal_hooks(const Partition& p) {
    Partition q = conjugate(p);
    Partition h;
    for (size_t i = 0; i < p.size(); ++i) {
        long li = static_cast<long>(i);
        if (p[i] > li && q[i] > li) h.push_back((p[i] - li) + (q[i] - li) - 1);
        else break;
    }
    return h;
}

Integer hook_product(const Partition& p) {
    Partition q = conjugate(p);
    Integer prod = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (long j = 0; j < p[i]; ++j) {
            long arm = p[i] - 1 - j;
            long leg = q[j] - 1 - static_cast<long>(i);
            prod *= (arm + leg + 1);
        }
    return prod;
}

Integer hook_degree_of(const Partition& p) {
    long n = partition_sum(p);
    return factorial(n) / hook_product(p);
}

}  // namespace sylreg
