#pragma once

#include "sylreg/ctable.hpp"
#include "sylreg/partition.hpp"

namespace sylreg {

constexpr long kMaxSymmetricN = 17;

/// Full character table of S_n. Rows are labelled by partitions in
/// reverse-lexicographic order (trivial character [n] first); classes by
/// cycle-type partitions in lexicographic order (identity [1^n] first).
CharacterTable sn_table(long n);

/// Full character table of A_n, 3 <= n <= 17. Conjugate partition pairs give
/// one row; self-conjugate partitions split into two rows lambda+ / lambda-.
/// Cycle types with all parts odd and distinct split into two classes mu+ /
/// mu-; the + class carries the +sqrt branch on the + row.
CharacterTable an_table(long n);

std::string partition_label(const Partition& p);

/// Classes of A_n in table order, with split flags (used by hookfam and tests).
struct AnClass {
    Partition type;
    bool split = false;
    bool plus_half = false;  // meaningful when split
};
std::vector<AnClass> an_classes(long n);

/// Row labels of an_table in order: canonical partition plus '+'/'-' suffix
/// for split rows.
struct AnRow {
    Partition lambda;   // canonical representative (revlex-first of the pair)
    int split_sign = 0; // 0: unsplit pair row, +1 / -1: split halves
};
std::vector<AnRow> an_rows(long n);

}  // namespace sylreg
