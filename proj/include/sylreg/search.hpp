#pragma once

#include "sylreg/ctable.hpp"

#include <optional>

namespace sylreg {

enum class SearchMode { syl_regular, steinberg_like, p_vanishing, syl_vanishing };

std::string search_mode_name(SearchMode m);
SearchMode search_mode_from_string(const std::string& s);

struct SearchQuery {
    long p = 2;
    SearchMode mode = SearchMode::steinberg_like;
    // Target degree level * |G|_p for syl_regular / steinberg_like; for the
    // two vanishing modes every level 1..level is enumerated.
    long level = 1;
    long max_solutions = 0;  // 0 = unlimited; a positive cap forces one thread
    int threads = 1;
};

struct ClassifyResult {
    Integer degree;
    bool syl_vanishing = false;  // zero on all nontrivial p-element classes
    bool p_vanishing = false;    // zero on all p-singular classes
    bool is_syl_regular = false;
    bool is_steinberg_like = false;
    std::optional<Integer> level;  // degree / |G|_p, defined when syl_vanishing
    Integer contains_trivial;
};

/// Flags for an arbitrary nonnegative combination of the table's rows; the
/// evaluation goes through exact cyclotomic arithmetic and shares no code
/// with the integer search kernel.
ClassifyResult classify(const CharacterTable& t, long p, const VirtualCharacter& v);

struct Solution {
    VirtualCharacter v;
    ClassifyResult flags;
};

struct SearchStats {
    unsigned long long nodes = 0;
    double wall_ms = 0.0;
};

struct SearchReport {
    std::string table_name;
    SearchQuery query;
    Integer sylow_part;  // |G|_p
    bool exhaustive = true;
    std::vector<Solution> solutions;  // sorted lexicographically by multiplicity vector
    SearchStats stats;
};

/// Complete enumeration of the query's solution set over a validated table.
/// Throws if the table fails validate() or p does not divide the group order.
/// Every emitted solution is re-verified through classify().
SearchReport enumerate_virtual_characters(const CharacterTable& t, const SearchQuery& q);

/// Canonical JSON form of a report (wall time field varies; everything else
/// is byte-stable).
std::string report_to_json(const SearchReport& r);

}  // namespace sylreg
