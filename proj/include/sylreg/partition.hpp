#pragma once

#include "sylreg/numbers.hpp"

#include <vector>

namespace sylreg {

/// Weakly decreasing list of positive integers.
using Partition = std::vector<long>;

/// All partitions of n in reverse-lexicographic order: [n] first, [1^n] last.
std::vector<Partition> partitions_of(long n);

inline long partition_sum(const Partition& p) {
    long s = 0;
    for (long x : p) s += x;
    return s;
}

bool is_partition(const Partition& p);

/// Conjugate (transposed) partition.
Partition conjugate(const Partition& p);

/// Centralizer order z_mu = prod_k (k^{m_k} * m_k!) for cycle type mu in S_n.
Integer centralizer_order(const Partition& mu);

/// lcm of the parts: the order of a permutation of cycle type mu.
long cycle_type_order(const Partition& mu);

/// Cycle type of the s-th power of a permutation of cycle type mu.
Partition power_cycle_type(const Partition& mu, long s);

/// Diagonal hook lengths (principal hooks); for self-conjugate p these are
/// distinct odd numbers summing to |p|.
Partition diagonal_hooks(const Partition& p);

/// Product of all hook lengths of the diagram.
Integer hook_product(const Partition& p);

/// n! / hook_product, by the hook length formula.
Integer hook_degree_of(const Partition& p);

}  // namespace sylreg
