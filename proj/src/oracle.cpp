#include "nsgp/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "nsgp/errors.hpp"

namespace nsgp {

namespace {

void check_limit(int frobenius, int limit) {
    if (frobenius < 1)
        throw std::invalid_argument("oracle: Frobenius number must be >= 1");
    if (frobenius > limit)
        throw LimitExceeded("F = " + std::to_string(frobenius) + " exceeds the oracle limit " +
                            std::to_string(limit));
    if (frobenius > 62)
        throw LimitExceeded("the exhaustive search works on 64-bit masks and stops at F = 62");
}

/*
 * Decide membership of the positions 1..F-1 in ascending order.
 * `members` holds the chosen members, `sums` every pairwise sum of two
 * chosen nonzero members (bits above F are junk and never read). A
 * position whose bit is set in `sums` is forced to be a member; a branch
 * that would force F itself is dead.
 */
void expand(int frobenius, int pos, std::uint64_t members, std::uint64_t sums,
            std::vector<NumericalSemigroup>& out) {
    if (pos == frobenius) {
        GapVector v(frobenius);
        for (int i = 1; i < frobenius; ++i)
            if (!((members >> i) & 1)) v.set_gap(i);
        v.set_gap(frobenius);
        out.push_back(NumericalSemigroup::from_gap_vector(std::move(v)));
        return;
    }
    const bool forced = (sums >> pos) & 1;
    if (!forced) expand(frobenius, pos + 1, members, sums, out);  // pos stays a gap
    const std::uint64_t with = members | (std::uint64_t{1} << pos);
    const std::uint64_t new_sums = sums | (with << pos);
    if (!((new_sums >> frobenius) & 1)) expand(frobenius, pos + 1, with, new_sums, out);
}

}  // namespace

std::vector<NumericalSemigroup> all_semigroups(int frobenius, int limit) {
    check_limit(frobenius, limit);
    std::vector<NumericalSemigroup> out;
    expand(frobenius, 1, 0, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NumericalSemigroup> oracle_irreducible(int frobenius, int limit) {
    const auto all = all_semigroups(frobenius, limit);
    std::vector<NumericalSemigroup> by_count;
    for (const auto& s : all)
        if (s.special_gaps().size() <= 1) by_count.push_back(s);

    // Independent route: the inclusion-maximal elements of the census.
    // A semigroup is contained in another exactly when its gap vector
    // dominates the other's component-wise.
    std::vector<NumericalSemigroup> maximal;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool is_maximal = true;
        for (std::size_t j = 0; j < all.size() && is_maximal; ++j)
            if (j != i && all[j].gap_vector().componentwise_leq(all[i].gap_vector()))
                is_maximal = false;
        if (is_maximal) maximal.push_back(all[i]);
    }
    if (by_count != maximal)
        throw std::logic_error(
            "oracle_irreducible: special-gap count and inclusion maximality disagree at F = " +
            std::to_string(frobenius));
    return by_count;
}

std::vector<NumericalSemigroup> oracle_atomic(int frobenius, int limit) {
    std::vector<NumericalSemigroup> out;
    for (const auto& s : all_semigroups(frobenius, limit))
        if (s.special_gaps().size() <= 2) out.push_back(s);
    return out;
}

std::map<int, std::vector<NumericalSemigroup>> oracle_ani_levels(int frobenius, int limit) {
    std::map<int, std::vector<NumericalSemigroup>> out;
    for (const auto& s : all_semigroups(frobenius, limit)) {
        const auto special = s.special_gaps();
        if (special.size() == 2) out[special.front()].push_back(s);
    }
    return out;
}

bool oracle_atomic_intersection_closure(int frobenius, int limit) {
    const auto all = all_semigroups(frobenius, limit);
    std::vector<char> atomic(all.size(), 0);
    for (std::size_t i = 0; i < all.size(); ++i)
        atomic[i] = all[i].special_gaps().size() <= 2 ? 1 : 0;

    for (const auto& s : all) {
        GapVector meet(frobenius);  // all of N, truncated to 1..F
        for (std::size_t j = 0; j < all.size(); ++j)
            if (atomic[j] && all[j].gap_vector().componentwise_leq(s.gap_vector()))
                meet = meet.joined(all[j].gap_vector());
        if (meet != s.gap_vector()) return false;
    }
    return true;
}

}  // namespace nsgp
