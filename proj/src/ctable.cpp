#include "sylreg/ctable.hpp"

#include <json.hpp>

#include <fstream>
#include <numeric>
#include <sstream>

namespace sylreg {

using json = nlohmann::ordered_json;

Integer CharacterTable::degree(size_t row) const {
    auto r = irreducibles[row][0].to_rational();
    if (!r || boost::multiprecision::denominator(*r) != 1)
        throw error("degree: row value at the identity is not an integer");
    return boost::multiprecision::numerator(*r);
}

Integer VirtualCharacter::degree(const CharacterTable& t) const {
    Integer d = 0;
    for (size_t i = 0; i < mult.size(); ++i)
        if (mult[i] != 0) d += mult[i] * t.degree(i);
    return d;
}

Cyclotomic VirtualCharacter::value_at(const CharacterTable& t, size_t cls) const {
    Cyclotomic v;
    for (size_t i = 0; i < mult.size(); ++i)
        if (mult[i] != 0) v += Cyclotomic(Rational(mult[i])) * t.irreducibles[i][cls];
    return v;
}

Integer VirtualCharacter::total_multiplicity() const {
    Integer s = 0;
    for (const auto& m : mult) s += m;
    return s;
}

bool VirtualCharacter::is_irreducible_row() const { return total_multiplicity() == 1; }

std::string rational_to_string(const Rational& r) {
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    std::ostringstream os;
    os << num;
    if (den != 1) os << "/" << den;
    return os.str();
}

namespace {

Integer integer_from_string(const std::string& s, const std::string& what) {
    if (s.empty()) throw error(what + ": empty integer string");
    size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size()) throw error(what + ": malformed integer '" + s + "'");
    for (size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw error(what + ": malformed integer '" + s + "'");
    return Integer(s);
}

}  // namespace

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(integer_from_string(s, "rational"));
    Integer num = integer_from_string(s.substr(0, slash), "rational numerator");
    Integer den = integer_from_string(s.substr(slash + 1), "rational denominator");
    if (den <= 0) throw error("rational: denominator must be positive");
    return Rational(num, den);
}

namespace {

json cycval_to_json(const Cyclotomic& v) {
    if (auto r = v.to_rational()) return json(rational_to_string(*r));
    json terms = json::array();
    for (const auto& [e, co] : v.coeffs()) terms.push_back({e, rational_to_string(co)});
    json obj;
    obj["N"] = v.conductor();
    obj["terms"] = std::move(terms);
    return obj;
}

Cyclotomic cycval_from_json(const json& j) {
    if (j.is_string()) return Cyclotomic(rational_from_string(j.get<std::string>()));
    if (!j.is_object() || !j.contains("N") || !j.contains("terms"))
        throw error("cycval: expected rational string or {N, terms} object");
    long n = j.at("N").get<long>();
    std::vector<std::pair<long, Rational>> terms;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2) throw error("cycval: term must be [exponent, coefficient]");
        long e = t.at(0).get<long>();
        if (e < 0) throw error("cycval: exponent must be nonnegative");
        terms.emplace_back(e, rational_from_string(t.at(1).get<std::string>()));
    }
    return Cyclotomic::make(n, terms);
}

}  // namespace

CharacterTable ingest(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const std::exception& e) {
        throw error(std::string("ingest: malformed JSON: ") + e.what());
    }
    CharacterTable t;
    try {
        t.name = j.at("name").get<std::string>();
        t.group_order = integer_from_string(j.at("order").get<std::string>(), "order");
        for (const auto& c : j.at("classes")) {
            ClassInfo ci;
            ci.label = c.at("label").get<std::string>();
            if (!c.at("size").is_string()) throw error("ingest: class size must be an integer string");
            ci.size = integer_from_string(c.at("size").get<std::string>(), "class size");
            if (!c.at("order").is_number_integer()) throw error("ingest: element order must be an integer");
            ci.element_order = c.at("order").get<long>();
            if (ci.element_order <= 0) throw error("ingest: element order must be positive");
            t.classes.push_back(std::move(ci));
        }
        for (const auto& row : j.at("irreducibles")) {
            t.row_labels.push_back(row.at("label").get<std::string>());
            std::vector<Cyclotomic> values;
            for (const auto& v : row.at("values")) values.push_back(cycval_from_json(v));
            if (values.size() != t.classes.size())
                throw error("ingest: ragged row '" + t.row_labels.back() + "' (" +
                            std::to_string(values.size()) + " values, " +
                            std::to_string(t.classes.size()) + " classes)");
            t.irreducibles.push_back(std::move(values));
        }
        if (j.contains("powermaps")) {
            for (const auto& [key, val] : j.at("powermaps").items()) {
                long p = std::stol(key);
                std::vector<int> m = val.get<std::vector<int>>();
                if (m.size() != t.classes.size()) throw error("ingest: powermap length mismatch");
                for (int x : m)
                    if (x < 0 || static_cast<size_t>(x) >= t.classes.size())
                        throw error("ingest: powermap index out of range");
                t.power_maps[p] = std::move(m);
            }
        }
    } catch (const json::exception& e) {
        throw error(std::string("ingest: ") + e.what());
    }
    return t;
}

CharacterTable ingest_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("ingest: cannot open '" + path + "'");
    return ingest(in);
}

CharacterTable ingest_string(const std::string& text) {
    std::istringstream in(text);
    return ingest(in);
}

std::string emit(const CharacterTable& t) {
    json j;
    j["name"] = t.name;
    {
        std::ostringstream os;
        os << t.group_order;
        j["order"] = os.str();
    }
    j["classes"] = json::array();
    for (const auto& c : t.classes) {
        std::ostringstream os;
        os << c.size;
        j["classes"].push_back({{"label", c.label}, {"size", os.str()}, {"order", c.element_order}});
    }
    if (!t.power_maps.empty()) {
        json pm;
        for (const auto& [p, m] : t.power_maps) pm[std::to_string(p)] = m;
        j["powermaps"] = std::move(pm);
    }
    j["irreducibles"] = json::array();
    for (size_t i = 0; i < t.irreducibles.size(); ++i) {
        json values = json::array();
        for (const auto& v : t.irreducibles[i]) values.push_back(cycval_to_json(v));
        j["irreducibles"].push_back(
            {{"label", i < t.row_labels.size() ? t.row_labels[i] : std::string()}, {"values", std::move(values)}});
    }
    return j.dump(1) + "\n";
}

std::string ValidationReport::summary() const {
    if (ok()) return "ok";
    std::ostringstream os;
    os << failures.size() << " failure(s):";
    for (size_t k = 0; k < failures.size() && k < 8; ++k) {
        const auto& f = failures[k];
        os << "\n  [" << f.check;
        if (f.i >= 0) os << " i=" << f.i;
        if (f.j >= 0) os << " j=" << f.j;
        os << "] " << f.detail;
    }
    if (failures.size() > 8) os << "\n  ...";
    return os.str();
}

namespace {

// Inner sum chi(c) * conj(psi(c)) weighted by w, with a fast path when both
// values are rational (the common case for symmetric-group tables).
struct MixedSum {
    Rational rat;
    Cyclotomic cyc;
    void add(const Cyclotomic& a, const Cyclotomic& b_conj, const Rational& w) {
        auto ra = a.to_rational();
        auto rb = b_conj.to_rational();
        if (ra && rb) {
            rat += *ra * *rb * w;
        } else {
            cyc += a * b_conj * Cyclotomic(w);
        }
    }
    Cyclotomic total() const { return cyc + Cyclotomic(rat); }
    bool equals_rational(const Rational& r) const {
        if (cyc.is_zero()) return rat == r;
        return total() == Cyclotomic(r);
    }
};

}  // namespace

ValidationReport validate(const CharacterTable& t) {
    ValidationReport rep;
    auto fail = [&rep](std::string check, long i, long j, std::string detail) {
        rep.failures.push_back({std::move(check), i, j, std::move(detail)});
    };

    size_t k = t.num_classes();
    if (k == 0) {
        fail("classes", -1, -1, "table has no classes");
        return rep;
    }
    if (t.group_order <= 0) fail("order", -1, -1, "group order must be positive");
    if (t.classes[0].size != 1 || t.classes[0].element_order != 1)
        fail("identity-class", 0, -1, "class 0 must have size 1 and element order 1");

    Integer size_sum = 0;
    for (size_t c = 0; c < k; ++c) {
        const auto& ci = t.classes[c];
        size_sum += ci.size;
        if (ci.size <= 0) fail("class-size", c, -1, "class size must be positive");
        else if (t.group_order % ci.size != 0) fail("class-size", c, -1, "class size does not divide the group order");
        if (ci.element_order <= 0 || t.group_order % ci.element_order != 0)
            fail("element-order", c, -1, "element order does not divide the group order");
    }
    if (size_sum != t.group_order) {
        std::ostringstream os;
        os << "class sizes sum to " << size_sum << ", group order is " << t.group_order;
        fail("class-sizes-sum", -1, -1, os.str());
    }

    if (t.num_rows() != k)
        fail("square", -1, -1, "number of irreducibles (" + std::to_string(t.num_rows()) +
                                   ") differs from number of classes (" + std::to_string(k) + ")");
    if (t.num_rows() == 0) return rep;

    for (size_t c = 0; c < k && c < t.irreducibles[0].size(); ++c)
        if (!t.irreducibles[0][c].is_rational() || *t.irreducibles[0][c].to_rational() != 1) {
            fail("trivial-row", 0, c, "row 0 must be the trivial character");
            break;
        }

    Integer degree_sq_sum = 0;
    std::vector<Integer> degrees(t.num_rows(), 0);
    for (size_t i = 0; i < t.num_rows(); ++i) {
        auto r = t.irreducibles[i][0].to_rational();
        if (!r || boost::multiprecision::denominator(*r) != 1 || *r <= 0) {
            fail("degree", i, -1, "value at class 0 is not a positive integer");
            continue;
        }
        degrees[i] = boost::multiprecision::numerator(*r);
        degree_sq_sum += degrees[i] * degrees[i];
    }
    if (degree_sq_sum != t.group_order) {
        std::ostringstream os;
        os << "sum of squared degrees is " << degree_sq_sum << ", group order is " << t.group_order;
        fail("degree-squares", -1, -1, os.str());
    }

    // conjugate rows once
    std::vector<std::vector<Cyclotomic>> conj_rows(t.num_rows());
    for (size_t i = 0; i < t.num_rows(); ++i) {
        conj_rows[i].reserve(k);
        for (size_t c = 0; c < k; ++c) conj_rows[i].push_back(t.irreducibles[i][c].conj());
    }

    std::vector<Rational> weights(k);
    for (size_t c = 0; c < k; ++c) weights[c] = Rational(t.classes[c].size);

    for (size_t i = 0; i < t.num_rows(); ++i)
        for (size_t j = i; j < t.num_rows(); ++j) {
            MixedSum s;
            for (size_t c = 0; c < k; ++c) s.add(t.irreducibles[i][c], conj_rows[j][c], weights[c]);
            Rational expected = (i == j) ? Rational(t.group_order) : Rational(0);
            if (!s.equals_rational(expected)) {
                std::ostringstream os;
                os << "sum is " << s.total().str();
                fail("row-orthogonality", i, j, os.str());
            }
        }

    if (t.num_rows() == k) {
        for (size_t c = 0; c < k; ++c)
            for (size_t d = c; d < k; ++d) {
                MixedSum s;
                for (size_t i = 0; i < t.num_rows(); ++i)
                    s.add(t.irreducibles[i][c], conj_rows[i][d], Rational(1));
                Rational expected = (c == d) ? Rational(t.centralizer_order_of(c)) : Rational(0);
                if (!s.equals_rational(expected)) {
                    std::ostringstream os;
                    os << "sum is " << s.total().str();
                    fail("column-orthogonality", c, d, os.str());
                }
            }
    }

    return rep;
}

PTypeClasses classes_by_p_type(const CharacterTable& t, long p) {
    PTypeClasses out;
    if (p <= 1 || t.group_order % p != 0) return out;
    for (size_t c = 0; c < t.num_classes(); ++c) {
        long o = t.classes[c].element_order;
        if (o % p == 0) {
            out.p_singular.push_back(c);
            long m = o;
            while (m % p == 0) m /= p;
            if (m == 1) out.nontrivial_p_element.push_back(c);
        }
    }
    return out;
}

CharacterTable direct_product(const CharacterTable& a, const CharacterTable& b) {
    CharacterTable t;
    t.name = a.name + "x" + b.name;
    t.group_order = a.group_order * b.group_order;
    for (const auto& ca : a.classes)
        for (const auto& cb : b.classes) {
            ClassInfo ci;
            ci.label = ca.label + "|" + cb.label;
            ci.size = ca.size * cb.size;
            ci.element_order = std::lcm(ca.element_order, cb.element_order);
            t.classes.push_back(std::move(ci));
        }
    for (size_t i = 0; i < a.num_rows(); ++i)
        for (size_t j = 0; j < b.num_rows(); ++j) {
            t.row_labels.push_back(a.row_labels[i] + "|" + b.row_labels[j]);
            std::vector<Cyclotomic> row;
            row.reserve(t.classes.size());
            for (size_t c = 0; c < a.num_classes(); ++c)
                for (size_t d = 0; d < b.num_classes(); ++d)
                    row.push_back(a.irreducibles[i][c] * b.irreducibles[j][d]);
            t.irreducibles.push_back(std::move(row));
        }
    return t;
}

}  // namespace sylreg
