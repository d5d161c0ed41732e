#include "nsgp/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nsgp/errors.hpp"

namespace nsgp {

namespace {

// Diagnostic witness for a failed closure check.
std::string closure_witness(const GapVector& v) {
    const int n = v.length();
    for (int i = 1; i <= n; ++i) {
        if (!v.is_member(i)) continue;
        for (int j = i; i + j <= n; ++j)
            if (v.is_member(j) && v.is_gap(i + j))
                return std::to_string(i) + " + " + std::to_string(j) + " = " +
                       std::to_string(i + j) + " is a gap";
    }
    return "no witness";
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(GapVector gaps)
    : gaps_(std::move(gaps)), multiplicity_(gaps_.smallest_member_position()) {
    // Minimal generators are the members in (0, F + m] that are not a sum
    // of two nonzero members; anything above F + m drops below the search
    // window after subtracting m.
    const int f = gaps_.length();
    const int bound = f + multiplicity_;
    auto member = [&](int i) { return i > f || gaps_.is_member(i); };
    for (int s = multiplicity_; s <= bound; ++s) {
        if (!member(s)) continue;
        bool decomposable = false;
        for (int i = multiplicity_; i + i <= s; ++i)
            if (member(i) && member(s - i)) {
                decomposable = true;
                break;
            }
        if (!decomposable) generators_.push_back(s);
    }
}

NumericalSemigroup NumericalSemigroup::from_gap_vector(GapVector bits) {
    const int largest = bits.largest_gap();
    if (largest == 0)
        throw EmptyGapSet("gap set is empty: N has no Frobenius number");
    if (largest < bits.length()) bits = bits.truncated(largest);
    if (!bits.members_closed_under_addition())
        throw NotClosed("member set not closed under addition: " + closure_witness(bits));
    return NumericalSemigroup(std::move(bits));
}

NumericalSemigroup NumericalSemigroup::from_bit_string(const std::string& bits) {
    return from_gap_vector(GapVector::parse(bits));
}

NumericalSemigroup NumericalSemigroup::from_gaps(const std::vector<int>& gap_set) {
    if (gap_set.empty())
        throw EmptyGapSet("gap set is empty: N has no Frobenius number");
    const int largest = *std::max_element(gap_set.begin(), gap_set.end());
    const int smallest = *std::min_element(gap_set.begin(), gap_set.end());
    if (smallest < 1) throw std::invalid_argument("from_gaps: gaps must be positive");
    GapVector v(largest);
    for (int g : gap_set) v.set_gap(g);
    return from_gap_vector(std::move(v));
}

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<int>& generators) {
    if (generators.empty())
        throw std::invalid_argument("from_generators: need at least one generator");
    for (int g : generators)
        if (g < 1) throw std::invalid_argument("from_generators: generators must be positive");

    int g = 0;
    for (int a : generators) g = std::gcd(g, a);
    if (g != 1)
        throw GcdNotOne("from_generators: gcd is " + std::to_string(g) +
                        ", the complement would be infinite");

    // Sieve membership upward; once m consecutive members appear, every
    // larger integer is a member and the largest gap lies below the run.
    const int m = *std::min_element(generators.begin(), generators.end());
    int bound = 2 * *std::max_element(generators.begin(), generators.end());
    while (true) {
        std::vector<char> member(static_cast<std::size_t>(bound) + 1, 0);
        member[0] = 1;
        int run = 0;
        int conductor = -1;
        for (int i = 1; i <= bound; ++i) {
            for (int a : generators)
                if (i >= a && member[i - a]) {
                    member[i] = 1;
                    break;
                }
            run = member[i] ? run + 1 : 0;
            if (run == m) {
                conductor = i - m + 1;
                break;
            }
        }
        if (conductor < 0) {
            bound *= 2;
            continue;
        }
        int frob = 0;
        for (int i = conductor - 1; i >= 1; --i)
            if (!member[i]) {
                frob = i;
                break;
            }
        if (frob == 0)
            throw EmptyGapSet("from_generators: the generators span all of N");
        GapVector v(frob);
        for (int i = 1; i <= frob; ++i)
            if (!member[i]) v.set_gap(i);
        return from_gap_vector(std::move(v));
    }
}

bool NumericalSemigroup::contains(int n) const noexcept {
    if (n < 0) return false;
    if (n == 0 || n > frobenius()) return true;
    return !gaps_.is_gap(n);
}

std::vector<int> NumericalSemigroup::pseudo_frobenius() const {
    std::vector<int> out;
    for (int x = 1; x <= frobenius(); ++x) {
        if (contains(x)) continue;
        bool pf = true;
        for (int g : generators_)
            if (!contains(x + g)) {
                pf = false;
                break;
            }
        if (pf) out.push_back(x);
    }
    return out;
}

std::vector<int> NumericalSemigroup::big_pseudo_frobenius() const {
    std::vector<int> out;
    for (int x : pseudo_frobenius())
        if (2 * x > frobenius()) out.push_back(x);
    return out;
}

std::vector<int> NumericalSemigroup::special_gaps() const {
    std::vector<int> out;
    for (int x : pseudo_frobenius())
        if (contains(2 * x)) out.push_back(x);
    return out;
}

NumericalSemigroup NumericalSemigroup::adjoin(int x) const {
    if (x < 1 || contains(x))
        throw std::invalid_argument("adjoin: " + std::to_string(x) + " is not a gap");
    const auto special = special_gaps();
    if (!std::binary_search(special.begin(), special.end(), x))
        throw NotSpecialGap("adjoin: " + std::to_string(x) +
                            " is not a special gap, the union is not closed");
    GapVector v = gaps_;
    v.set_member(x);
    // from_gap_vector renormalizes when x was the Frobenius number and
    // rejects the N case (x was the only gap).
    return from_gap_vector(std::move(v));
}

ClassLabel NumericalSemigroup::classify() const {
    ClassLabel label;
    label.special_gap_count = static_cast<int>(special_gaps().size());
    label.is_irreducible = label.special_gap_count <= 1;
    label.is_atomic = label.special_gap_count <= 2;
    label.is_ani = label.special_gap_count == 2;
    if (label.is_irreducible)
        label.parity = frobenius() % 2 ? ParityClass::symmetric : ParityClass::pseudo_symmetric;
    return label;
}

}  // namespace nsgp
