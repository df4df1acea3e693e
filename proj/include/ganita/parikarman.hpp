#pragma once

#include "ganita/numbers.hpp"

namespace ganita::parikarman {

/// Two quantities recovered by one of the elementary operations.
struct Pair {
    Rat first;
    Rat second;
    bool operator==(const Pair&) const = default;
};

/// Recovers (a, b) from a + b and a - b.
Pair sankramana(const Rat& sum, const Rat& diff);

/// Recovers (a, b) from a - b and a^2 - b^2. The quotient of the two inputs
/// is a + b, after which sankramana finishes the job.
/// Throws std::domain_error: "inconsistent-input" when diff == 0 but
/// square_diff != 0, "underdetermined" when both are zero.
Pair visamakarman(const Rat& diff, const Rat& square_diff);

/// Given a + b and a^2 + b^2, returns a * b.
Rat product_from_sum(const Rat& sum, const Rat& sum_of_squares);

/// Recovers (a, b) from a * b and a - b via the radicand 2^2*ab + (a-b)^2.
/// Throws std::domain_error: "no-real-pair" for a negative radicand,
/// "not-rational-pair" when the radicand has no rational root.
Pair pair_from_product_and_diff(const Rat& product, const Rat& diff);

using ganita::integer_sqrt;

}  // namespace ganita::parikarman
