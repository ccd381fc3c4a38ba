#pragma once

#include "sylreg/partition.hpp"

namespace sylreg {

/// chi^lambda evaluated on the class of cycle type mu, by recursive rim-hook
/// removal with memoization. Requires |lambda| = |mu|.
Integer mn_value(const Partition& lambda, const Partition& mu);

/// Degree chi^lambda(1) through the hook length formula; equals
/// mn_value(lambda, [1^n]).
Integer hook_degree(const Partition& lambda);

/// Drops the whole memo table (mainly for tests measuring cold costs).
void mn_clear_cache();

}  // namespace sylreg
