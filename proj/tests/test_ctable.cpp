#include "sylreg/ctable.hpp"
#include "sylreg/sn_an.hpp"

#include <doctest.h>

#include <sstream>

using namespace sylreg;

namespace {

// Smallest valid table: the trivial group.
const char* kTrivialTable = R"({
 "name": "1",
 "order": "1",
 "classes": [{"label": "1a", "size": "1", "order": 1}],
 "irreducibles": [{"label": "triv", "values": ["1"]}]
})";

const char* kC2Table = R"({
 "name": "C2",
 "order": "2",
 "classes": [{"label": "1a", "size": "1", "order": 1},
             {"label": "2a", "size": "1", "order": 2}],
 "powermaps": {"2": [0, 0]},
 "irreducibles": [{"label": "triv", "values": ["1", "1"]},
                  {"label": "sgn", "values": ["1", "-1"]}]
})";

}  // namespace

TEST_CASE("ingest minimal tables") {
    auto t = ingest_string(kTrivialTable);
    CHECK(t.group_order == 1);
    CHECK(validate(t).ok());

    auto c2 = ingest_string(kC2Table);
    CHECK(validate(c2).ok());
    CHECK(c2.power_maps.at(2) == std::vector<int>{0, 0});
}

TEST_CASE("ingest error paths") {
    CHECK_THROWS_AS(ingest_string("{"), error);
    CHECK_THROWS_AS(ingest_string("{\"name\": \"x\"}"), error);

    // ragged row
    std::string ragged = R"({"name":"x","order":"2",
      "classes":[{"label":"1a","size":"1","order":1},{"label":"2a","size":"1","order":2}],
      "irreducibles":[{"label":"t","values":["1"]}]})";
    CHECK_THROWS_AS(ingest_string(ragged), error);

    // non-integer class size
    std::string badsize = R"({"name":"x","order":"2",
      "classes":[{"label":"1a","size":"1.5","order":1}],
      "irreducibles":[{"label":"t","values":["1"]}]})";
    CHECK_THROWS_AS(ingest_string(badsize), error);

    // missing element order
    std::string noorder = R"({"name":"x","order":"2",
      "classes":[{"label":"1a","size":"1"}],
      "irreducibles":[{"label":"t","values":["1"]}]})";
    CHECK_THROWS_AS(ingest_string(noorder), error);
}

TEST_CASE("validate flags broken tables without throwing") {
    // wrong degree sum: ingests fine, validate reports
    std::string bad = R"({"name":"x","order":"4",
      "classes":[{"label":"1a","size":"1","order":1},{"label":"2a","size":"3","order":2}],
      "irreducibles":[{"label":"t","values":["1","1"]},{"label":"u","values":["1","-1"]}]})";
    auto t = ingest_string(bad);
    auto rep = validate(t);
    CHECK(!rep.ok());

    // perturb one value of a good table: failure must name the cell
    auto s4 = sn_table(4);
    s4.irreducibles[2][3] += Cyclotomic(1L);
    auto rep2 = validate(s4);
    CHECK(!rep2.ok());
    bool located = false;
    for (const auto& f : rep2.failures)
        if ((f.check == "row-orthogonality" && (f.i == 2 || f.j == 2)) ||
            (f.check == "column-orthogonality" && (f.i == 3 || f.j == 3)))
            located = true;
    CHECK(located);
}

TEST_CASE("emit then ingest round-trips byte for byte") {
    auto t = sn_table(5);
    std::string one = emit(t);
    auto back = ingest_string(one);
    std::string two = emit(back);
    CHECK(one == two);
    CHECK(validate(back).ok());
}

TEST_CASE("classes_by_p_type") {
    auto s4 = sn_table(4);
    auto pt = classes_by_p_type(s4, 2);
    // 2-singular cycle types: [2,1,1], [2,2], [4]; all are 2-element classes
    CHECK(pt.p_singular.size() == 3);
    CHECK(pt.nontrivial_p_element.size() == 3);

    auto s6 = sn_table(6);
    auto pt3 = classes_by_p_type(s6, 3);
    std::vector<std::string> singular, elements;
    for (size_t c : pt3.p_singular) singular.push_back(s6.classes[c].label);
    for (size_t c : pt3.nontrivial_p_element) elements.push_back(s6.classes[c].label);
    CHECK(elements == std::vector<std::string>{"[3,1,1,1]", "[3,3]"});
    CHECK(singular == std::vector<std::string>{"[3,1,1,1]", "[3,2,1]", "[3,3]", "[6]"});

    // p not dividing the order
    auto pt5 = classes_by_p_type(sn_table(4), 5);
    CHECK(pt5.p_singular.empty());
    CHECK(pt5.nontrivial_p_element.empty());
}

TEST_CASE("direct products") {
    auto s3 = sn_table(3);
    auto triv = ingest_string(kTrivialTable);
    auto prod = direct_product(s3, triv);
    CHECK(prod.num_classes() == s3.num_classes());
    for (size_t i = 0; i < s3.num_rows(); ++i)
        for (size_t c = 0; c < s3.num_classes(); ++c)
            CHECK(prod.irreducibles[i][c] == s3.irreducibles[i][c]);

    auto s4 = sn_table(4);
    auto p2 = direct_product(s3, s4);
    CHECK(p2.num_classes() == s3.num_classes() * s4.num_classes());
    CHECK(p2.group_order == s3.group_order * s4.group_order);
    CHECK(validate(p2).ok());
}

TEST_CASE("rational rows equal rational classes on generated tables") {
    for (long n = 3; n <= 8; ++n) {
        auto t = an_table(n);
        long rational_rows = 0, rational_classes = 0;
        for (size_t i = 0; i < t.num_rows(); ++i) {
            bool r = true;
            for (size_t c = 0; c < t.num_classes(); ++c)
                if (!t.irreducibles[i][c].is_rational()) { r = false; break; }
            rational_rows += r;
        }
        for (size_t c = 0; c < t.num_classes(); ++c) {
            bool r = true;
            for (size_t i = 0; i < t.num_rows(); ++i)
                if (!t.irreducibles[i][c].is_rational()) { r = false; break; }
            rational_classes += r;
        }
        CHECK(rational_rows == rational_classes);
    }
}

TEST_CASE("powermap galois fixpoint check for sn tables") {
    // every class of S_n is rational: any supplied power map with exponent
    // coprime to the class order must fix the class, matching the fact that
    // every row is rational-valued
    for (long n : {5L, 6L, 7L}) {
        auto t = sn_table(n);
        REQUIRE(!t.power_maps.empty());
        for (const auto& [p, pm] : t.power_maps)
            for (size_t c = 0; c < t.num_classes(); ++c)
                if (t.classes[c].element_order % p != 0) CHECK(pm[c] == static_cast<int>(c));
    }
}
