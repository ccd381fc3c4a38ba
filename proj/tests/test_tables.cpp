#include "sylreg/ctable.hpp"
#include "sylreg/mn.hpp"
#include "sylreg/psl2.hpp"
#include "sylreg/sn_an.hpp"
#include "sylreg/sylow.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace sylreg;

namespace {

std::multiset<long> degree_multiset(const CharacterTable& t) {
    std::multiset<long> out;
    for (size_t i = 0; i < t.num_rows(); ++i) out.insert(t.degree(i).convert_to<long>());
    return out;
}

}  // namespace

TEST_CASE("sn tables validate") {
    for (long n = 1; n <= 10; ++n) {
        auto t = sn_table(n);
        auto rep = validate(t);
        INFO("n = ", n, ": ", rep.summary());
        CHECK(rep.ok());
    }
}

TEST_CASE("sn table degree facts") {
    auto s4 = sn_table(4);
    CHECK(degree_multiset(s4) == std::multiset<long>{1, 1, 2, 3, 3});

    auto s8 = sn_table(8);
    long count64 = 0;
    for (size_t i = 0; i < s8.num_rows(); ++i)
        if (s8.degree(i) == 64) ++count64;
    CHECK(count64 == 2);
}

TEST_CASE("an tables validate") {
    for (long n = 3; n <= 10; ++n) {
        auto t = an_table(n);
        auto rep = validate(t);
        INFO("n = ", n, ": ", rep.summary());
        CHECK(rep.ok());
    }
}

TEST_CASE("a5 degrees and split values") {
    auto a5 = an_table(5);
    CHECK(degree_multiset(a5) == std::multiset<long>{1, 3, 3, 4, 5});

    // the split rows of [3,1,1] take (1 +- sqrt(5))/2 on the two classes of
    // 5-cycles; swap-invariant assertions
    size_t plus_row = a5.num_rows(), minus_row = a5.num_rows();
    for (size_t i = 0; i < a5.num_rows(); ++i) {
        if (a5.row_labels[i] == "[3,1,1]+") plus_row = i;
        if (a5.row_labels[i] == "[3,1,1]-") minus_row = i;
    }
    REQUIRE(plus_row < a5.num_rows());
    REQUIRE(minus_row < a5.num_rows());
    size_t c5a = a5.num_classes(), c5b = a5.num_classes();
    for (size_t c = 0; c < a5.num_classes(); ++c) {
        if (a5.classes[c].label == "[5]+") c5a = c;
        if (a5.classes[c].label == "[5]-") c5b = c;
    }
    REQUIRE(c5a < a5.num_classes());
    Cyclotomic root5 = Cyclotomic::sqrt_int(Integer(5));
    Cyclotomic golden_p = (Cyclotomic(1L) + root5) * Cyclotomic(Rational(1, 2));
    Cyclotomic golden_m = (Cyclotomic(1L) - root5) * Cyclotomic(Rational(1, 2));
    auto v = a5.irreducibles[plus_row][c5a];
    CHECK((v == golden_p || v == golden_m));
    CHECK(a5.irreducibles[plus_row][c5a] + a5.irreducibles[plus_row][c5b] == Cyclotomic(1L));
    CHECK(a5.irreducibles[plus_row][c5a] == a5.irreducibles[minus_row][c5b]);
}

TEST_CASE("an split rows restrict from the sn rows") {
    // chi+ + chi- agrees with the S_n value on every A_n class
    for (long n : {4L, 6L, 7L, 9L}) {
        auto t = an_table(n);
        auto rows = an_rows(n);
        auto cls = an_classes(n);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].split_sign != +1) continue;
            for (size_t c = 0; c < cls.size(); ++c) {
                Cyclotomic sum = t.irreducibles[i][c] + t.irreducibles[i + 1][c];
                CHECK(sum == Cyclotomic(mn_value(rows[i].lambda, cls[c].type)));
            }
        }
    }
}

TEST_CASE("branching rule consistency") {
    // chi^lambda restricted to S_{n-1}: remove a fixed point from the class
    for (long n : {5L, 6L, 7L, 8L}) {
        auto parts = partitions_of(n);
        auto parts_m = partitions_of(n - 1);
        for (const auto& lambda : parts) {
            for (const auto& mu : parts_m) {
                Partition mu_ext = mu;
                mu_ext.push_back(1);
                std::sort(mu_ext.rbegin(), mu_ext.rend());
                // corners of lambda
                Integer total = 0;
                for (size_t r = 0; r < lambda.size(); ++r) {
                    bool corner = (r + 1 == lambda.size()) || lambda[r] > lambda[r + 1];
                    if (!corner) continue;
                    Partition down = lambda;
                    down[r] -= 1;
                    if (down[r] == 0) down.erase(down.begin() + r);
                    total += mn_value(down, mu);
                }
                CHECK(total == mn_value(lambda, mu_ext));
            }
        }
    }
}

TEST_CASE("hook characters are positive on p-cycles") {
    for (long p : {3L, 5L, 7L}) {
        for (long n = 2 * p; n <= 13; ++n) {
            Partition pcycle{p};
            for (long j = 0; j < n - p; ++j) pcycle.push_back(1);
            for (long m = 0; m <= n - 1; ++m) {
                Partition hook{m + 1};
                for (long j = 0; j < n - m - 1; ++j) hook.push_back(1);
                if (m == 0) hook.assign(n, 1);
                Integer value = mn_value(hook, pcycle);
                // value = sum_{i=0}^{min(p-1,m)} (-1)^i C(n-p, m-i)
                Integer expect = 0;
                for (long i = 0; i <= std::min(p - 1, m); ++i) {
                    if (m - i > n - p) continue;
                    Integer binom = factorial(n - p) / (factorial(m - i) * factorial(n - p - m + i));
                    expect += (i % 2 == 0) ? binom : -binom;
                }
                CHECK(value == expect);
                CHECK(value > 0);
            }
        }
    }
}

TEST_CASE("psl2 and sl2 tables validate") {
    for (long q : {5L, 7L, 9L, 11L, 13L}) {
        auto s = sl2_table(q);
        auto rep = validate(s);
        INFO("SL2(", q, "): ", rep.summary());
        CHECK(rep.ok());
        CHECK(s.num_classes() == static_cast<size_t>(q + 4));

        auto t = psl2_table(q);
        auto rep2 = validate(t);
        INFO("PSL2(", q, "): ", rep2.summary());
        CHECK(rep2.ok());
        size_t expected = (q % 4 == 1) ? (q + 5) / 2 : (q + 5) / 2;
        CHECK(t.num_classes() == expected);
    }
    CHECK_THROWS_AS(psl2_table(8), error);
    CHECK_THROWS_AS(psl2_table(15), error);
    CHECK_THROWS_AS(psl2_table(3), error);
}

TEST_CASE("psl2 degree sets") {
    auto p7 = psl2_table(7);
    CHECK(degree_multiset(p7) == std::multiset<long>{1, 3, 3, 6, 7, 8});

    auto p5 = psl2_table(5);
    CHECK(degree_multiset(p5) == std::multiset<long>{1, 3, 3, 4, 5});

    // all degrees lie in {1, q, q-1, q+1, (q-1)/2, (q+1)/2}
    for (long q : {9L, 11L, 13L, 17L}) {
        auto t = psl2_table(q);
        CHECK(t.group_order == Integer(q) * (q - 1) * (q + 1) / 2);
        for (size_t i = 0; i < t.num_rows(); ++i) {
            long d = t.degree(i).convert_to<long>();
            bool ok = d == 1 || d == q || d == q - 1 || d == q + 1 || 2 * d == q - 1 || 2 * d == q + 1;
            CHECK(ok);
        }
    }
}

TEST_CASE("a17 and s17 tables build with consistent degree sums") {
    auto s = sn_table(12);
    Integer sum = 0;
    for (size_t i = 0; i < s.num_rows(); ++i) sum += s.degree(i) * s.degree(i);
    CHECK(sum == s.group_order);

    auto a = an_table(12);
    sum = 0;
    for (size_t i = 0; i < a.num_rows(); ++i) sum += a.degree(i) * a.degree(i);
    CHECK(sum == a.group_order);
}
