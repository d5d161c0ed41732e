#pragma once

#include <compare>
#include <string>
#include <vector>

#include "nsgp/gap_vector.hpp"

namespace nsgp {

enum class ParityClass { symmetric, pseudo_symmetric, none };

// Classification by the number of special gaps #E(S):
//   irreducible  <=>  #E <= 1,   atomic  <=>  #E <= 2,   ANI  <=>  #E == 2.
// Irreducible semigroups split by the parity of the Frobenius number into
// symmetric (odd) and pseudo-symmetric (even).
struct ClassLabel {
    int special_gap_count = 0;
    bool is_irreducible = false;
    bool is_atomic = false;
    bool is_ani = false;
    ParityClass parity = ParityClass::none;
};

/*
 * A validated numerical semigroup: the co-finite, additively closed subset
 * of N described by a gap vector whose length equals the Frobenius number.
 * Immutable after construction; multiplicity and the minimal generating
 * set are computed once and cached.
 */
class NumericalSemigroup {
public:
    // Semigroup with exactly this gap set. Throws EmptyGapSet / NotClosed.
    static NumericalSemigroup from_gaps(const std::vector<int>& gap_set);

    // Validates closure and normalizes the length to the largest gap.
    static NumericalSemigroup from_gap_vector(GapVector bits);

    static NumericalSemigroup from_bit_string(const std::string& bits);

    // Additive sieve over <generators>. Throws GcdNotOne, or EmptyGapSet
    // when the generators span all of N (1 is generated).
    static NumericalSemigroup from_generators(const std::vector<int>& generators);

    int frobenius() const noexcept { return gaps_.length(); }
    int multiplicity() const noexcept { return multiplicity_; }
    const std::vector<int>& minimal_generators() const noexcept { return generators_; }
    const GapVector& gap_vector() const noexcept { return gaps_; }
    std::vector<int> gaps() const { return gaps_.gap_list(); }

    bool contains(int n) const noexcept;

    // PF(S): gaps x with x + s in S for every nonzero s in S. Checking the
    // minimal generators suffices since every member is a sum of them.
    std::vector<int> pseudo_frobenius() const;

    // Elements of PF(S) strictly above F/2.
    std::vector<int> big_pseudo_frobenius() const;

    // E(S): pseudo-Frobenius numbers x with 2x in S; exactly the gaps whose
    // adjunction keeps the set additively closed. Always contains F.
    std::vector<int> special_gaps() const;

    // S u {x} for a special gap x, renormalized when x is the Frobenius
    // number. Throws NotSpecialGap, or EmptyGapSet when the result is N.
    NumericalSemigroup adjoin(int x) const;

    ClassLabel classify() const;

    bool operator==(const NumericalSemigroup& other) const { return gaps_ == other.gaps_; }
    std::strong_ordering operator<=>(const NumericalSemigroup& other) const {
        return gaps_ <=> other.gaps_;
    }

private:
    explicit NumericalSemigroup(GapVector gaps);

    GapVector gaps_;
    int multiplicity_;
    std::vector<int> generators_;
};

}  // namespace nsgp
