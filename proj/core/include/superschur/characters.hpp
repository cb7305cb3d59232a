#pragma once

#include "superschur/partition.hpp"

#include <vector>

namespace superschur {

/// Irreducible character value chi^lambda on the class of the given cycle
/// type, by the Murnaghan-Nakayama border-strip recursion.
long long mn_character(const Partition& lambda, const Partition& cycle_type);

/// Character table of S_d: table[i][j] = chi^{lambda_i}(class_j) with both
/// partitions and classes in the canonical partitions_of(d) order.
/// Memoized behind an internal lock; memoization does not change results.
const std::vector<std::vector<long long>>& character_table(int d);

/// Index of a partition within partitions_of(d).
int partition_index(const Partition& p);

/// Order of the centralizer of the class with the given cycle type; the
/// class size is d! / centralizer_order.
Integer centralizer_order(const Partition& cycle_type);

} // namespace superschur
