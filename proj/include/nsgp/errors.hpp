#pragma once

#include <stdexcept>

namespace nsgp {

// Base class for every domain error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The member set of a proposed gap set is not closed under addition.
struct NotClosed : Error { using Error::Error; };

// The construction would yield the whole of N, which has no Frobenius
// number and is not representable here.
struct EmptyGapSet : Error { using Error::Error; };

// Generators with gcd != 1 leave infinitely many gaps.
struct GcdNotOne : Error { using Error::Error; };

// adjoin() was asked for a gap that is not a special gap.
struct NotSpecialGap : Error { using Error::Error; };

// Component-wise vector operations need equal lengths.
struct LengthMismatch : Error { using Error::Error; };

// children() was called outside the irreducible tree.
struct NotIrreducible : Error { using Error::Error; };

// No numerical semigroup has exactly this pair of special gaps.
struct InfeasiblePair : Error { using Error::Error; };

// The requested Frobenius number exceeds the configured guard.
struct LimitExceeded : Error { using Error::Error; };

}  // namespace nsgp
