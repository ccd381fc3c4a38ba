#include "sylreg/search.hpp"

#include "sylreg/mn.hpp"
#include "sylreg/psl2.hpp"
#include "sylreg/sn_an.hpp"
#include "sylreg/sylow.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace sylreg;

namespace {

std::vector<Integer> row_vector(const CharacterTable& t, const std::vector<std::string>& labels) {
    std::vector<Integer> m(t.num_rows(), 0);
    for (const auto& want : labels) {
        bool found = false;
        for (size_t i = 0; i < t.num_rows(); ++i)
            if (t.row_labels[i] == want) {
                m[i] += 1;
                found = true;
                break;
            }
        REQUIRE(found);
    }
    return m;
}

std::set<std::vector<Integer>> solution_set(const SearchReport& r) {
    std::set<std::vector<Integer>> out;
    for (const auto& s : r.solutions) out.insert(s.v.mult);
    return out;
}

}  // namespace

TEST_CASE("mn values match the symmetric function oracle") {
    for (long n = 1; n <= 8; ++n) {
        auto parts = partitions_of(n);
        for (const auto& mu : parts) {
            oracles::SymfunColumn col(mu);
            for (const auto& lambda : parts)
                CHECK(mn_value(lambda, mu) == Integer(col.value(lambda)));
        }
    }
}

TEST_CASE("steinberg search on S4") {
    auto t = sn_table(4);
    SearchQuery q;
    q.p = 2;
    q.mode = SearchMode::steinberg_like;
    auto rep = enumerate_virtual_characters(t, q);
    CHECK(rep.exhaustive);
    auto gamma = row_vector(t, {"[4]", "[3,1]", "[2,1,1]", "[1,1,1,1]"});
    auto nonlinear = row_vector(t, {"[3,1]", "[2,2]", "[2,1,1]"});
    CHECK(solution_set(rep) == std::set<std::vector<Integer>>{gamma, nonlinear});
    for (const auto& s : rep.solutions) {
        CHECK(s.flags.is_steinberg_like);
        CHECK(s.flags.degree == 8);
    }
}

TEST_CASE("steinberg search on S6 finds only the degree 16 row") {
    auto t = sn_table(6);
    SearchQuery q;
    q.p = 2;
    q.mode = SearchMode::steinberg_like;
    auto rep = enumerate_virtual_characters(t, q);
    auto only = row_vector(t, {"[3,2,1]"});
    CHECK(solution_set(rep) == std::set<std::vector<Integer>>{only});
    CHECK(mn_value({3, 2, 1}, {1, 1, 1, 1, 1, 1}) == 16);
}

TEST_CASE("steinberg search on S8") {
    auto t = sn_table(8);
    SearchQuery q;
    q.p = 2;
    q.mode = SearchMode::steinberg_like;
    q.threads = 2;
    auto rep = enumerate_virtual_characters(t, q);
    std::vector<Integer> gamma(t.num_rows(), 0), two64(t.num_rows(), 0);
    for (size_t i = 0; i < t.num_rows(); ++i) {
        auto lbl = t.row_labels[i];
        // hooks
        for (long k = 1; k <= 8; ++k) {
            Partition hook{k};
            for (long j = 0; j < 8 - k; ++j) hook.push_back(1);
            if (k == 1) hook.assign(8, 1);
            if (lbl == partition_label(hook)) gamma[i] = 1;
        }
        if (t.degree(i) == 64) two64[i] = 1;
    }
    CHECK(solution_set(rep) == std::set<std::vector<Integer>>{gamma, two64});
}

TEST_CASE("A7 at p=7 finds the trivial plus degree six character") {
    auto t = an_table(7);
    SearchQuery q;
    q.p = 7;
    q.mode = SearchMode::steinberg_like;
    auto rep = enumerate_virtual_characters(t, q);
    REQUIRE(rep.solutions.size() == 1);
    const auto& s = rep.solutions[0];
    CHECK(s.flags.contains_trivial == 1);
    CHECK(s.v.total_multiplicity() == 2);
    CHECK(s.flags.degree == 7);
}

TEST_CASE("psl2 searches at p=2") {
    // q = 7: contains trivial + Steinberg
    auto t7 = psl2_table(7);
    SearchQuery q;
    q.p = 2;
    q.mode = SearchMode::syl_regular;
    auto rep = enumerate_virtual_characters(t7, q);
    auto st = row_vector(t7, {"1", "St"});
    CHECK(solution_set(rep).count(st) == 1);

    // q = 5: exactly two reducible syl-regular of degree 4
    auto t5 = psl2_table(5);
    auto rep5 = enumerate_virtual_characters(t5, q);
    long reducible = 0;
    for (const auto& s : rep5.solutions)
        if (s.v.total_multiplicity() > 1) {
            ++reducible;
            CHECK(s.flags.degree == 4);
        }
    CHECK(reducible == 2);
}

TEST_CASE("psl2(7) at p=7: steinberg-like inventory") {
    auto t = psl2_table(7);
    SearchQuery q;
    q.p = 7;
    q.mode = SearchMode::steinberg_like;
    auto rep = enumerate_virtual_characters(t, q);
    long irreducible = 0, one_plus_irreducible = 0, one_plus_pair = 0;
    for (const auto& s : rep.solutions) {
        if (s.v.is_irreducible_row()) ++irreducible;
        else if (s.flags.contains_trivial == 1 && s.v.total_multiplicity() == 2) ++one_plus_irreducible;
        else if (s.flags.contains_trivial == 1 && s.v.total_multiplicity() == 3) ++one_plus_pair;
    }
    // (p-3)/4 = 1 characters of the form 1+tau with tau irreducible of degree p-1,
    // plus the 1 + tau1 + tau2 character with both halves of degree (p-1)/2,
    // plus the irreducible Steinberg character itself
    CHECK(irreducible == 1);
    CHECK(one_plus_irreducible == 1);
    CHECK(one_plus_pair == 1);
    CHECK(rep.solutions.size() == 3);
}

TEST_CASE("classify basics") {
    auto t = sn_table(4);
    VirtualCharacter triv{std::vector<Integer>(t.num_rows(), 0)};
    triv.mult[0] = 1;
    auto res = classify(t, 2, triv);
    CHECK(res.degree == 1);
    CHECK(!res.syl_vanishing);
    CHECK(!res.is_syl_regular);

    // p not dividing |G|: everything vacuously vanishes, level = degree
    auto res5 = classify(t, 5, triv);
    CHECK(res5.syl_vanishing);
    CHECK(res5.is_syl_regular);  // degree 1 = |G|_5
    CHECK(*res5.level == 1);

    CHECK_THROWS_AS(classify(t, 2, VirtualCharacter{{Integer(1)}}), error);
}

TEST_CASE("classify the 1+St character of PSL2(7)") {
    auto t = psl2_table(7);
    VirtualCharacter v{std::vector<Integer>(t.num_rows(), 0)};
    for (size_t i = 0; i < t.num_rows(); ++i)
        if (t.row_labels[i] == "1" || t.row_labels[i] == "St") v.mult[i] = 1;
    auto res = classify(t, 2, v);
    CHECK(res.degree == 8);
    CHECK(res.is_syl_regular);
    CHECK(res.is_steinberg_like);
}

TEST_CASE("classify Gamma on S10 at p=2") {
    auto t = sn_table(10);
    VirtualCharacter v{std::vector<Integer>(t.num_rows(), 0)};
    for (size_t i = 0; i < t.num_rows(); ++i) {
        for (long k = 1; k <= 10; ++k) {
            Partition hook{k};
            for (long j = 0; j < 10 - k; ++j) hook.push_back(1);
            if (k == 1) hook.assign(10, 1);
            if (t.row_labels[i] == partition_label(hook)) v.mult[i] = 1;
        }
    }
    auto res = classify(t, 2, v);
    CHECK(res.degree == 512);
    CHECK(res.p_vanishing);
    REQUIRE(res.level.has_value());
    CHECK(*res.level == 2);  // |S10|_2 = 2^8
    CHECK(!res.is_steinberg_like);
    CHECK(p_part_factorial(10, 2) == 256);
}

TEST_CASE("search agrees with the naive enumeration oracle") {
    struct Case {
        CharacterTable t;
        long p;
    };
    std::vector<Case> cases;
    cases.push_back({sn_table(4), 2});
    cases.push_back({sn_table(5), 2});
    cases.push_back({sn_table(5), 3});
    cases.push_back({an_table(5), 2});
    cases.push_back({an_table(6), 3});
    cases.push_back({psl2_table(5), 2});
    cases.push_back({psl2_table(7), 2});
    cases.push_back({psl2_table(7), 7});
    for (auto& cs : cases) {
        for (auto mode : {SearchMode::steinberg_like, SearchMode::syl_regular, SearchMode::p_vanishing}) {
            SearchQuery q;
            q.p = cs.p;
            q.mode = mode;
            q.level = (mode == SearchMode::p_vanishing) ? 2 : 1;
            auto rep = enumerate_virtual_characters(cs.t, q);
            auto naive = oracles::naive_enumerate(cs.t, cs.p, mode, q.level);
            std::vector<std::vector<Integer>> got;
            for (const auto& s : rep.solutions) got.push_back(s.v.mult);
            INFO(cs.t.name, " p=", cs.p, " mode=", search_mode_name(mode));
            CHECK(got == naive);
        }
    }
}

TEST_CASE("mode monotonicity") {
    auto t = sn_table(6);
    SearchQuery q;
    q.p = 2;
    q.mode = SearchMode::steinberg_like;
    auto steinberg = solution_set(enumerate_virtual_characters(t, q));
    q.mode = SearchMode::p_vanishing;
    auto pvanish = solution_set(enumerate_virtual_characters(t, q));
    q.mode = SearchMode::syl_regular;
    auto sylreg = solution_set(enumerate_virtual_characters(t, q));
    for (const auto& s : steinberg) {
        CHECK(pvanish.count(s) == 1);
        CHECK(sylreg.count(s) == 1);
    }
}

TEST_CASE("determinism across thread counts") {
    auto t = sn_table(8);
    std::string first;
    unsigned long long nodes = 0;
    for (int th : {1, 2, 4}) {
        SearchQuery q;
        q.p = 2;
        q.mode = SearchMode::steinberg_like;
        q.threads = th;
        auto rep = enumerate_virtual_characters(t, q);
        rep.stats.wall_ms = 0;
        std::string s = report_to_json(rep);
        if (first.empty()) {
            first = s;
            nodes = rep.stats.nodes;
        } else {
            CHECK(s == first);
            CHECK(rep.stats.nodes == nodes);
        }
    }
}

TEST_CASE("max_solutions truncates and clears the exhaustive flag") {
    auto t = sn_table(4);
    SearchQuery q;
    q.p = 2;
    q.mode = SearchMode::steinberg_like;
    q.max_solutions = 1;
    auto rep = enumerate_virtual_characters(t, q);
    CHECK(rep.solutions.size() == 1);
    CHECK(!rep.exhaustive);
}

TEST_CASE("search rejects bad inputs") {
    auto t = sn_table(4);
    SearchQuery q;
    q.p = 5;  // does not divide 24
    CHECK_THROWS_AS(enumerate_virtual_characters(t, q), error);

    auto broken = sn_table(4);
    broken.irreducibles[1][2] += Cyclotomic(1L);
    SearchQuery q2;
    q2.p = 2;
    CHECK_THROWS_AS(enumerate_virtual_characters(broken, q2), error);
}

TEST_CASE("direct product vanishing decomposes per factor") {
    // every 2-vanishing solution of S3 x S4 restricts to 2-vanishing
    // components on the S4 factor
    auto s3 = sn_table(3), s4 = sn_table(4);
    auto prod = direct_product(s3, s4);
    SearchQuery q;
    q.p = 2;
    q.mode = SearchMode::p_vanishing;
    q.level = 2;
    auto rep = enumerate_virtual_characters(prod, q);
    CHECK(!rep.solutions.empty());
    auto pt4 = classes_by_p_type(s4, 2);
    for (const auto& sol : rep.solutions) {
        for (size_t i = 0; i < s3.num_rows(); ++i) {
            // sigma_i = sum_j m_{(i,j)} chi_j over the S4 rows
            for (size_t c : pt4.p_singular) {
                Cyclotomic val;
                for (size_t j = 0; j < s4.num_rows(); ++j) {
                    const Integer& m = sol.v.mult[i * s4.num_rows() + j];
                    if (m != 0) val += Cyclotomic(Rational(m)) * s4.irreducibles[j][c];
                }
                CHECK(val.is_zero());
            }
        }
    }
}

TEST_CASE("minimal level multiplies over direct products") {
    auto s3 = sn_table(3);
    auto prod = direct_product(s3, s3);
    SearchQuery q;
    q.p = 3;
    q.mode = SearchMode::syl_vanishing;
    q.level = 2;
    auto factor_rep = enumerate_virtual_characters(s3, q);
    auto prod_rep = enumerate_virtual_characters(prod, q);
    REQUIRE(!factor_rep.solutions.empty());
    REQUIRE(!prod_rep.solutions.empty());
    Integer min_factor = *factor_rep.solutions[0].flags.level;
    Integer min_prod = *prod_rep.solutions[0].flags.level;
    for (const auto& s : factor_rep.solutions) min_factor = std::min(min_factor, *s.flags.level);
    for (const auto& s : prod_rep.solutions) min_prod = std::min(min_prod, *s.flags.level);
    CHECK(min_prod == min_factor * min_factor);
}
