#pragma once

#include <vector>

#include "nsgp/gap_vector.hpp"
#include "nsgp/irreducible.hpp"
#include "nsgp/semigroup.hpp"

namespace nsgp {

// Levels l with F/2 < l < F that pass the divisibility test; exactly the
// values that can appear as the non-F special gap of an ANI-semigroup
// with Frobenius number F.
struct LevelSet {
    int frobenius = 0;
    std::vector<int> levels;
};

// Stages of the join/minimals construction of N(g2, level g1). The stage
// vectors are retained only when requested; result is always filled.
struct AniLevelResult {
    int level = 0;      // g1
    int frobenius = 0;  // g2
    std::vector<GapVector> stage_a;   // I(g1) padded to length g2
    std::vector<GapVector> stage_b0;  // I(g2) vectors with position g1 a member
    std::vector<GapVector> stage_b1;  // I(g2) vectors with position g1 a gap
    std::vector<GapVector> stage_c;   // minimal elements of the pairwise joins A x B0
    std::vector<NumericalSemigroup> result;  // semigroups with special gaps {g1, g2}
};

// True iff some numerical semigroup S has E(S) = {g1, g2}: requires
// g2/2 < g1 and (g2 - g1 | g2 or 2*g1 - g2 does not divide g2).
bool ani_pair_feasible(int g1, int g2);

LevelSet levels(int frobenius);

// Component-wise maximum; as sets, the gaps of the join are the union of
// the gap sets, i.e. the member sets intersect.
GapVector join(const GapVector& a, const GapVector& b);

// Extend with member positions up to the given length.
GapVector pad(const GapVector& v, int length);

// Minimal elements under the component-wise order; input is deduplicated
// first. Output is an antichain in canonical order.
std::vector<GapVector> minimals(std::vector<GapVector> vs);

// Full join/minimals pipeline for one feasible pair (g1, g2):
// pad I(g1), split I(g2) on position g1, take minimal joins against the
// vectors containing g1, then drop joins below some vector missing g1.
AniLevelResult ani_level(int g1, int g2, bool keep_stages = false,
                         int max_frobenius = default_max_frobenius);

// All S with E(S) = {g1, g2}. Throws InfeasiblePair when no such
// semigroup exists (use ani_pair_feasible / levels to pre-check).
std::vector<NumericalSemigroup> ani_semigroups(int g1, int g2,
                                               int max_frobenius = default_max_frobenius);

// N(F): the ANI-semigroups with Frobenius number F, all levels merged.
std::vector<NumericalSemigroup> ani_with_frobenius(int frobenius,
                                                   int max_frobenius = default_max_frobenius);

// A(F) = I(F) u N(F); I(F) is enumerated once and shared across levels.
std::vector<NumericalSemigroup> atomic_semigroups(int frobenius,
                                                  int max_frobenius = default_max_frobenius);

}  // namespace nsgp
