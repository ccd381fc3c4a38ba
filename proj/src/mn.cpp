#include "sylreg/mn.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace sylreg {

namespace {

// Beta set of a partition: strictly decreasing first-column hook lengths
// lambda_i + (len - 1 - i). Removing a rim hook of length t is moving a bead
// from b to b - t; the leg length is the number of beads passed over.
using Beta = std::vector<long>;

Beta to_beta(const Partition& p) {
    Beta b(p.size());
    long len = static_cast<long>(p.size());
    for (long i = 0; i < len; ++i) b[i] = p[i] + (len - 1 - i);
    return b;
}

Partition from_beta(Beta b) {
    std::sort(b.rbegin(), b.rend());
    // strip trailing zeros of the staircase
    Partition p;
    long len = static_cast<long>(b.size());
    for (long i = 0; i < len; ++i) {
        long part = b[i] - (len - 1 - i);
        if (part > 0) p.push_back(part);
    }
    return p;
}

struct Key {
    Partition lambda;
    Partition mu;
    bool operator==(const Key& o) const { return lambda == o.lambda && mu == o.mu; }
};

struct KeyHash {
    size_t operator()(const Key& k) const {
        size_t h = 1469598103934665603ull;
        auto mix = [&h](long v) {
            h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        };
        for (long v : k.lambda) mix(v);
        mix(-1);
        for (long v : k.mu) mix(v);
        return h;
    }
};

std::mutex g_mn_mutex;
std::unordered_map<Key, Integer, KeyHash> g_mn_cache;

Integer mn_rec(const Partition& lambda, const Partition& mu) {
    if (lambda.empty()) return 1;
    Key key{lambda, mu};
    {
        std::lock_guard<std::mutex> lock(g_mn_mutex);
        auto it = g_mn_cache.find(key);
        if (it != g_mn_cache.end()) return it->second;
    }
    long t = mu[0];
    Partition rest(mu.begin() + 1, mu.end());
    Beta b = to_beta(lambda);
    Integer total = 0;
    for (size_t i = 0; i < b.size(); ++i) {
        long target = b[i] - t;
        if (target < 0) continue;
        if (std::find(b.begin(), b.end(), target) != b.end()) continue;
        long leg = 0;
        for (long v : b)
            if (v > target && v < b[i]) ++leg;
        Beta nb = b;
        nb[i] = target;
        Integer sub = mn_rec(from_beta(std::move(nb)), rest);
        total += (leg % 2 == 0) ? sub : -sub;
    }
    std::lock_guard<std::mutex> lock(g_mn_mutex);
    g_mn_cache.emplace(std::move(key), total);
    return total;
}

}  // namespace

Integer mn_value(const Partition& lambda, const Partition& mu) {
    if (!is_partition(lambda) || !is_partition(mu))
        throw error("mn_value: arguments must be partitions");
    if (partition_sum(lambda) != partition_sum(mu))
        throw error("mn_value: |lambda| != |mu|");
    return mn_rec(lambda, mu);
}

Integer hook_degree(const Partition& lambda) { return hook_degree_of(lambda); }

void mn_clear_cache() {
    std::lock_guard<std::mutex> lock(g_mn_mutex);
    g_mn_cache.clear();
}

}  // namespace sylreg
