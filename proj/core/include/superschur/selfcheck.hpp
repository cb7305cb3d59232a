#pragma once

#include "superschur/group_algebra.hpp"

#include <random>
#include <string>
#include <vector>

namespace superschur {

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail; // failure witness or short note
};

/// Deterministic random group-algebra element: a short signed-rational
/// combination of uniformly drawn permutations. Identical seeds give
/// identical elements on every platform (no distribution objects).
GroupAlgebraElement random_element(int degree, std::mt19937_64& rng, int max_terms = 4);

/// Runs the cross-module invariant suite at desk-scale bounds; one result
/// per property. The CLI exposes this as `selfcheck`.
std::vector<PropertyResult> run_selfcheck(std::uint64_t seed);

} // namespace superschur
