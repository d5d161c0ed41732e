#pragma once

#include <map>
#include <vector>

#include "nsgp/semigroup.hpp"

namespace nsgp {

/*
 * Exhaustive reference enumeration straight from the definitions, used to
 * referee the tree and join/minimals algorithms. Deliberately depends only
 * on the core semigroup type, never on the fast enumeration code.
 */

constexpr int default_oracle_limit = 22;
constexpr int default_intersection_limit = 14;

// Every numerical semigroup with the given Frobenius number, found by a
// positionwise member/gap search with closure pruning. Sorted, no
// duplicates.
std::vector<NumericalSemigroup> all_semigroups(int frobenius,
                                               int limit = default_oracle_limit);

// Members of all_semigroups(F) with at most one special gap. Internally
// cross-checked against the inclusion-maximal elements of the census; the
// two characterizations must agree.
std::vector<NumericalSemigroup> oracle_irreducible(int frobenius,
                                                   int limit = default_oracle_limit);

// Members with at most two special gaps.
std::vector<NumericalSemigroup> oracle_atomic(int frobenius,
                                              int limit = default_oracle_limit);

// ANI members grouped by their non-F special gap; keys are exactly the
// levels with a nonempty fiber.
std::map<int, std::vector<NumericalSemigroup>> oracle_ani_levels(
    int frobenius, int limit = default_oracle_limit);

// True iff every semigroup with Frobenius number F equals the intersection
// of the atomic semigroups (same F) containing it, with the intersection
// truncated to {0..F} u {F+1, ->}.
bool oracle_atomic_intersection_closure(int frobenius,
                                        int limit = default_intersection_limit);

}  // namespace nsgp
