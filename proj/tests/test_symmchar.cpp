#include "sylreg/mn.hpp"
#include "sylreg/partition.hpp"

#include <doctest.h>

using namespace sylreg;

namespace {

// Independent partition counter: Euler's pentagonal number recurrence.
Integer partition_count(long n) {
    std::vector<Integer> p(n + 1, 0);
    p[0] = 1;
    for (long m = 1; m <= n; ++m) {
        Integer acc = 0;
        for (long k = 1;; ++k) {
            long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            Integer term = 0;
            if (g1 <= m) term += p[m - g1];
            if (g2 <= m) term += p[m - g2];
            acc += (k % 2 == 1) ? term : -term;
        }
        p[m] = acc;
    }
    return p[n];
}

}  // namespace

TEST_CASE("partitions_of ordering and counts") {
    auto p4 = partitions_of(4);
    std::vector<Partition> expected = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    CHECK(p4 == expected);

    CHECK(partitions_of(0) == std::vector<Partition>{{}});

    for (long n : {5L, 9L, 12L, 16L})
        CHECK(Integer(partitions_of(n).size()) == partition_count(n));
    CHECK(partitions_of(16).size() == 231);
}

TEST_CASE("conjugate and hooks") {
    CHECK(conjugate({4, 2, 1}) == Partition{3, 2, 1, 1});
    CHECK(conjugate(conjugate({5, 3, 3, 1})) == Partition{5, 3, 3, 1});
    CHECK(diagonal_hooks({2, 2}) == Partition{3, 1});
    CHECK(diagonal_hooks({3, 1, 1}) == Partition{5});
    CHECK(hook_product({2, 2}) == 12);
}

TEST_CASE("mn_value basics") {
    // trivial character
    for (auto& mu : partitions_of(6)) CHECK(mn_value({6}, mu) == 1);

    // [n-1,1] on a transposition: fixed points minus one
    CHECK(mn_value({3, 1}, {2, 1, 1}) == 1);

    // hooks on an n-cycle: (-1)^{n-i}
    for (long n : {4L, 5L, 7L}) {
        for (long i = 1; i <= n; ++i) {
            Partition lambda{i};
            for (long j = 0; j < n - i; ++j) lambda.push_back(1);
            if (i == 1) lambda.assign(n, 1);
            CHECK(mn_value(lambda, {n}) == ((n - i) % 2 == 0 ? 1 : -1));
        }
    }

    CHECK_THROWS_AS(mn_value({3, 1}, {3}), error);
}

TEST_CASE("hook degrees") {
    CHECK(hook_degree({2, 2}) == 2);
    CHECK(hook_degree({5}) == 1);
    for (long n = 2; n <= 9; ++n)
        for (long i = 1; i <= n; ++i) {
            Partition lambda{i};
            for (long j = 0; j < n - i; ++j) lambda.push_back(1);
            if (i == 1) lambda.assign(n, 1);
            Integer binom = factorial(n - 1) / (factorial(i - 1) * factorial(n - i));
            CHECK(hook_degree(lambda) == binom);
        }
}

TEST_CASE("degree column matches hook length formula") {
    for (long n = 1; n <= 9; ++n) {
        Partition ones(n, 1);
        Integer sumsq = 0;
        for (auto& lambda : partitions_of(n)) {
            Integer d = mn_value(lambda, ones);
            CHECK(d == hook_degree(lambda));
            sumsq += d * d;
        }
        CHECK(sumsq == factorial(n));
    }
}

TEST_CASE("column orthogonality of mn values") {
    for (long n : {5L, 8L}) {
        auto parts = partitions_of(n);
        for (auto& mu : parts)
            for (auto& nu : parts) {
                Integer s = 0;
                for (auto& lambda : parts) s += mn_value(lambda, mu) * mn_value(lambda, nu);
                if (mu == nu) CHECK(s == centralizer_order(mu));
                else CHECK(s == 0);
            }
    }
}

TEST_CASE("power cycle types") {
    CHECK(power_cycle_type({6, 2}, 2) == Partition{3, 3, 1, 1});
    CHECK(power_cycle_type({5, 3}, 3) == Partition{5, 1, 1, 1});
    CHECK(cycle_type_order({6, 4, 1}) == 12);
}
