#pragma once

#include "sylreg/cyclotomic.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace sylreg {

struct ClassInfo {
    std::string label;
    Integer size;
    long element_order = 0;
};

/// Ordinary character table: exact irreducible character values over the
/// conjugacy classes. Class 0 is the identity, row 0 the trivial character.
struct CharacterTable {
    std::string name;
    Integer group_order;
    std::vector<ClassInfo> classes;
    std::vector<std::string> row_labels;
    std::vector<std::vector<Cyclotomic>> irreducibles;
    // prime -> (class index of g^p per class); optional.
    std::map<long, std::vector<int>> power_maps;

    size_t num_classes() const { return classes.size(); }
    size_t num_rows() const { return irreducibles.size(); }
    Integer centralizer_order_of(size_t c) const { return group_order / classes[c].size; }
    /// Row degree, assuming the table passed structural checks.
    Integer degree(size_t row) const;
};

struct ValidationFailure {
    std::string check;
    long i = -1;  // row or class index, -1 when not applicable
    long j = -1;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationFailure> failures;
    bool ok() const { return failures.empty(); }
    std::string summary() const;
};

/// Nonnegative integer combination of a table's irreducibles.
struct VirtualCharacter {
    std::vector<Integer> mult;

    Integer degree(const CharacterTable& t) const;
    Cyclotomic value_at(const CharacterTable& t, size_t cls) const;
    Integer total_multiplicity() const;
    bool is_irreducible_row() const;  // exactly one multiplicity, equal to 1
};

/// Parse the table JSON format. Structural errors throw; no consistency
/// validation happens here (validate() is explicit).
CharacterTable ingest(std::istream& in);
CharacterTable ingest_file(const std::string& path);
CharacterTable ingest_string(const std::string& text);

/// Serialize in canonical byte-stable form; ingest(emit(t)) == t.
std::string emit(const CharacterTable& t);

/// Full consistency check: structural invariants, degree equation, row and
/// column orthogonality. Failures are report entries, never throws.
ValidationReport validate(const CharacterTable& t);

struct PTypeClasses {
    std::vector<size_t> p_singular;            // p divides element order
    std::vector<size_t> nontrivial_p_element;  // element order = p^k, k >= 1
};

/// Splits classes by p-behaviour. Both sets empty when p does not divide
/// the group order. A character vanishing on all nontrivial p-element
/// classes vanishes on every non-identity element of a Sylow p-subgroup,
/// since each p-element lies in a conjugate of it.
PTypeClasses classes_by_p_type(const CharacterTable& t, long p);

/// Direct product table: classes are pairs (sizes multiply, orders lcm),
/// irreducibles are the outer products of the factor rows.
CharacterTable direct_product(const CharacterTable& a, const CharacterTable& b);

/// Serialization helpers shared with report writers.
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

}  // namespace sylreg
