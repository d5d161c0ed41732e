#include "nsgp/gap_vector.hpp"

#include <bit>
#include <stdexcept>

#include "nsgp/errors.hpp"

namespace nsgp {

namespace {
constexpr std::uint64_t one = 1;

int block_count(int length) { return (length + 63) / 64; }

// Mask selecting the bits of the top block that belong to a vector of
// the given length.
std::uint64_t top_mask(int length) {
    const int used = ((length - 1) & 63) + 1;
    return used == 64 ? ~std::uint64_t{0} : (one << used) - 1;
}
}  // namespace

GapVector::GapVector(int length) : length_(length) {
    if (length < 1) throw std::invalid_argument("GapVector: length must be >= 1");
    blocks_.assign(block_count(length), 0);
}

GapVector GapVector::parse(const std::string& bits) {
    if (bits.empty()) throw std::invalid_argument("GapVector: empty bit string");
    GapVector v(static_cast<int>(bits.size()));
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] == '1')
            v.set_gap(static_cast<int>(k) + 1);
        else if (bits[k] != '0')
            throw std::invalid_argument("GapVector: bit string may contain only '0' and '1'");
    }
    return v;
}

void GapVector::check_position(int i) const {
    if (i < 1 || i > length_)
        throw std::out_of_range("GapVector: position " + std::to_string(i) +
                                " outside 1.." + std::to_string(length_));
}

bool GapVector::is_gap(int i) const {
    check_position(i);
    return (blocks_[(i - 1) >> 6] >> ((i - 1) & 63)) & 1;
}

bool GapVector::is_member(int i) const {
    if (i < 0) throw std::out_of_range("GapVector: negative position");
    if (i == 0 || i > length_) return true;
    return !is_gap(i);
}

void GapVector::set_gap(int i) {
    check_position(i);
    blocks_[(i - 1) >> 6] |= one << ((i - 1) & 63);
}

void GapVector::set_member(int i) {
    check_position(i);
    blocks_[(i - 1) >> 6] &= ~(one << ((i - 1) & 63));
}

int GapVector::gap_count() const noexcept {
    int total = 0;
    for (std::uint64_t b : blocks_) total += std::popcount(b);
    return total;
}

int GapVector::largest_gap() const noexcept {
    for (int k = static_cast<int>(blocks_.size()) - 1; k >= 0; --k)
        if (blocks_[k]) return k * 64 + 64 - std::countl_zero(blocks_[k]);
    return 0;
}

int GapVector::smallest_member_position() const noexcept {
    for (int k = 0; k < static_cast<int>(blocks_.size()); ++k) {
        std::uint64_t inv = ~blocks_[k];
        if (k == static_cast<int>(blocks_.size()) - 1) inv &= top_mask(length_);
        if (inv) return k * 64 + std::countr_zero(inv) + 1;
    }
    return length_ + 1;
}

std::vector<int> GapVector::gap_list() const {
    std::vector<int> out;
    out.reserve(gap_count());
    for (int k = 0; k < static_cast<int>(blocks_.size()); ++k) {
        std::uint64_t b = blocks_[k];
        while (b) {
            out.push_back(k * 64 + std::countr_zero(b) + 1);
            b &= b - 1;
        }
    }
    return out;
}

bool GapVector::members_closed_under_addition() const {
    const int n = length_;
    // Member mask over the integers 0..n (bit i = integer i is a member).
    const int words = (n >> 6) + 1;
    std::vector<std::uint64_t> members(words, 0);
    members[0] = 1;
    for (int i = 1; i <= n; ++i)
        if (!is_gap(i)) members[i >> 6] |= one << (i & 63);
    const int top = n >> 6;
    const std::uint64_t keep = (n & 63) == 63 ? ~std::uint64_t{0} : (one << ((n & 63) + 1)) - 1;

    // Every pair i <= j with i + j <= n has i <= n/2, so shifting the full
    // member mask by each member i <= n/2 covers all constrained sums.
    for (int i = 1; 2 * i <= n; ++i) {
        if (is_gap(i)) continue;
        const int ws = i >> 6;
        const int bs = i & 63;
        for (int k = top; k >= ws; --k) {
            std::uint64_t shifted = members[k - ws] << bs;
            if (bs != 0 && k - ws - 1 >= 0) shifted |= members[k - ws - 1] >> (64 - bs);
            if (k == top) shifted &= keep;
            if (shifted & ~members[k]) return false;
        }
    }
    return true;
}

GapVector GapVector::padded(int length) const {
    if (length < length_)
        throw std::invalid_argument("GapVector: cannot pad to a shorter length");
    GapVector out(length);
    for (std::size_t k = 0; k < blocks_.size(); ++k) out.blocks_[k] = blocks_[k];
    return out;
}

GapVector GapVector::truncated(int length) const {
    if (length < 1 || length > length_)
        throw std::invalid_argument("GapVector: truncation length outside 1..length()");
    GapVector out(length);
    for (std::size_t k = 0; k < out.blocks_.size(); ++k) out.blocks_[k] = blocks_[k];
    out.blocks_.back() &= top_mask(length);
    return out;
}

GapVector GapVector::joined(const GapVector& other) const {
    if (other.length_ != length_)
        throw LengthMismatch("join: vector lengths differ (" + std::to_string(length_) +
                             " vs " + std::to_string(other.length_) + ")");
    GapVector out(length_);
    for (std::size_t k = 0; k < blocks_.size(); ++k)
        out.blocks_[k] = blocks_[k] | other.blocks_[k];
    return out;
}

bool GapVector::componentwise_leq(const GapVector& other) const {
    if (other.length_ != length_)
        throw LengthMismatch("componentwise_leq: vector lengths differ");
    for (std::size_t k = 0; k < blocks_.size(); ++k)
        if (blocks_[k] & ~other.blocks_[k]) return false;
    return true;
}

std::string GapVector::to_string() const {
    std::string out(static_cast<std::size_t>(length_), '0');
    for (int i = 1; i <= length_; ++i)
        if (is_gap(i)) out[static_cast<std::size_t>(i) - 1] = '1';
    return out;
}

std::strong_ordering GapVector::operator<=>(const GapVector& other) const {
    const int common = std::min(length_, other.length_);
    const int full = common / 64;
    for (int k = 0; k < full; ++k) {
        const std::uint64_t diff = blocks_[k] ^ other.blocks_[k];
        if (diff) {
            const int j = std::countr_zero(diff);
            return (blocks_[k] >> j) & 1 ? std::strong_ordering::greater
                                         : std::strong_ordering::less;
        }
    }
    if (common % 64) {
        const std::uint64_t mask = (one << (common % 64)) - 1;
        const std::uint64_t diff = (blocks_[full] ^ other.blocks_[full]) & mask;
        if (diff) {
            const int j = std::countr_zero(diff);
            return (blocks_[full] >> j) & 1 ? std::strong_ordering::greater
                                            : std::strong_ordering::less;
        }
    }
    return length_ <=> other.length_;
}

}  // namespace nsgp
