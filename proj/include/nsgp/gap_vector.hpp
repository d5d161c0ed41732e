#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace nsgp {

/*
 * Bit vector over the integers 1..length(). Bit i set means i is a gap
 * (missing from the encoded set); bit i clear means i is a member.
 * 0 and every integer beyond length() are implicit members, so a vector
 * whose last bit is set encodes a numerical semigroup with Frobenius
 * number length().
 *
 * Raw vectors carry no closure guarantee; NumericalSemigroup adds it.
 */
class GapVector {
public:
    explicit GapVector(int length);              // all positions members
    static GapVector parse(const std::string& bits);  // '1'/'0' chars, position 1 first

    int length() const noexcept { return length_; }

    bool is_gap(int i) const;      // 1 <= i <= length()
    bool is_member(int i) const;   // any i >= 0; 0 and i > length() are members
    void set_gap(int i);
    void set_member(int i);

    int gap_count() const noexcept;
    int largest_gap() const noexcept;            // 0 when there is no gap
    int smallest_member_position() const noexcept;  // length()+1 when all positions are gaps
    std::vector<int> gap_list() const;

    // True when {0} u {i <= length : is_member(i)} u {i > length} is closed
    // under addition. Word-parallel: for each member i <= length/2 the
    // shifted member mask must stay inside the member mask.
    bool members_closed_under_addition() const;

    GapVector padded(int length) const;      // extend with member positions
    GapVector truncated(int length) const;   // keep positions 1..length
    GapVector joined(const GapVector& other) const;  // component-wise max
    bool componentwise_leq(const GapVector& other) const;

    std::string to_string() const;

    bool operator==(const GapVector& other) const = default;
    // Lexicographic order on the bit string b1..bn ('0' < '1', prefix first).
    std::strong_ordering operator<=>(const GapVector& other) const;

private:
    void check_position(int i) const;

    int length_;
    std::vector<std::uint64_t> blocks_;  // bit (i-1) of the string lives in
                                         // blocks_[(i-1)/64] at (i-1)%64
};

}  // namespace nsgp
