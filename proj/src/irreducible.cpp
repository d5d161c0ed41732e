#include "nsgp/irreducible.hpp"

#include <algorithm>
#include <stdexcept>

#include "nsgp/errors.hpp"

namespace nsgp {

namespace {

void check_enumeration_args(int frobenius, int max_frobenius) {
    if (frobenius < 1)
        throw std::invalid_argument("Frobenius number must be >= 1");
    if (frobenius > max_frobenius)
        throw LimitExceeded("F = " + std::to_string(frobenius) +
                            " exceeds the enumeration guard " + std::to_string(max_frobenius));
}

// Children together with the removed generator x; children() and the tree
// builder share this.
std::vector<std::pair<int, NumericalSemigroup>> children_with_swap(const NumericalSemigroup& s,
                                                                   int f) {
    if (s.frobenius() != f)
        throw NotIrreducible("children: semigroup has Frobenius number " +
                             std::to_string(s.frobenius()) + ", expected " + std::to_string(f));
    if (s.special_gaps().size() > 1)
        throw NotIrreducible("children: semigroup is not irreducible");

    std::vector<std::pair<int, NumericalSemigroup>> out;
    const int m = s.multiplicity();
    for (int x : s.minimal_generators()) {
        if (2 * x <= f || x >= f) continue;
        if (s.contains(2 * x - f)) continue;
        if (3 * x == 2 * f || 4 * x == 3 * f) continue;
        if (f - x >= m) continue;
        GapVector v = s.gap_vector();
        v.set_gap(x);
        v.set_member(f - x);  // f - x < m, so it was a gap
        out.emplace_back(x, NumericalSemigroup::from_gap_vector(std::move(v)));
    }
    return out;
}

}  // namespace

NumericalSemigroup canonical_irreducible(int frobenius) {
    if (frobenius < 1)
        throw std::invalid_argument("canonical_irreducible: Frobenius number must be >= 1");
    GapVector v(frobenius);
    const int half = frobenius % 2 ? (frobenius - 1) / 2 : frobenius / 2;
    for (int i = 1; i <= half; ++i) v.set_gap(i);
    v.set_gap(frobenius);
    return NumericalSemigroup::from_gap_vector(std::move(v));
}

std::vector<NumericalSemigroup> children(const NumericalSemigroup& s, int frobenius) {
    std::vector<NumericalSemigroup> out;
    for (auto& [x, child] : children_with_swap(s, frobenius)) out.push_back(std::move(child));
    return out;
}

std::optional<NumericalSemigroup> parent(const NumericalSemigroup& s, int frobenius) {
    if (s.frobenius() != frobenius)
        throw std::invalid_argument("parent: semigroup has Frobenius number " +
                                    std::to_string(s.frobenius()) + ", expected " +
                                    std::to_string(frobenius));
    const int m = s.multiplicity();
    if (2 * m >= frobenius) return std::nullopt;  // the root: all generators > F/2
    GapVector v = s.gap_vector();
    v.set_gap(m);
    v.set_member(frobenius - m);  // F - m is a gap, else m + (F - m) = F would be a member
    return NumericalSemigroup::from_gap_vector(std::move(v));
}

std::vector<TreeNode> irreducible_tree(int frobenius, int max_frobenius) {
    check_enumeration_args(frobenius, max_frobenius);
    std::vector<TreeNode> nodes;
    nodes.push_back(TreeNode{canonical_irreducible(frobenius), 0, std::nullopt});
    std::vector<std::size_t> pending{0};
    while (!pending.empty()) {
        const std::size_t at = pending.back();
        pending.pop_back();
        const int depth = nodes[at].depth;
        for (auto& [x, child] : children_with_swap(nodes[at].semigroup, frobenius)) {
            nodes.push_back(TreeNode{std::move(child), depth + 1,
                                     std::make_pair(x, frobenius - x)});
            pending.push_back(nodes.size() - 1);
        }
    }
    return nodes;
}

std::vector<NumericalSemigroup> enumerate_irreducible(int frobenius, int max_frobenius) {
    std::vector<NumericalSemigroup> out;
    for (auto& node : irreducible_tree(frobenius, max_frobenius))
        out.push_back(std::move(node.semigroup));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nsgp
