#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nsgp/semigroup.hpp"

namespace nsgp {

// Default guard for enumeration entry points; the census grows
// exponentially in F, this keeps accidental runs interactive.
constexpr int default_max_frobenius = 40;

// One vertex of the rooted enumeration tree of the irreducible semigroups
// with fixed Frobenius number F. parent_edge = (x, F-x) records the swap
// that produced this node from its parent: x became a gap, F-x a member.
struct TreeNode {
    NumericalSemigroup semigroup;
    int depth = 0;
    std::optional<std::pair<int, int>> parent_edge;
};

// The unique irreducible semigroup with Frobenius number F whose minimal
// generators all exceed F/2; the root of the enumeration tree.
//   F odd:  {0, (F+1)/2, ->} \ {F}
//   F even: {0, F/2 + 1, ->} \ {F}
NumericalSemigroup canonical_irreducible(int frobenius);

// Children of an irreducible semigroup in the tree: for each minimal
// generator x with F/2 < x < F, 2x - F not in S, 3x != 2F, 4x != 3F and
// F - x < m(S), emit (S \ {x}) u {F - x}. Throws NotIrreducible.
std::vector<NumericalSemigroup> children(const NumericalSemigroup& s, int frobenius);

// Inverse edge: (S \ {m(S)}) u {F - m(S)} when m(S) < F/2, nothing when S
// is the root.
std::optional<NumericalSemigroup> parent(const NumericalSemigroup& s, int frobenius);

// Depth-first expansion from the root; the tree structure guarantees each
// semigroup appears exactly once.
std::vector<TreeNode> irreducible_tree(int frobenius, int max_frobenius = default_max_frobenius);

// I(F), sorted by the canonical (lexicographic bit string) order.
std::vector<NumericalSemigroup> enumerate_irreducible(int frobenius,
                                                      int max_frobenius = default_max_frobenius);

}  // namespace nsgp
