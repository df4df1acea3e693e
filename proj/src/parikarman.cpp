#include "ganita/parikarman.hpp"

namespace ganita::parikarman {

Pair sankramana(const Rat& sum, const Rat& diff) {
    return {Rat((sum + diff) / 2), Rat((sum - diff) / 2)};
}

Pair visamakarman(const Rat& diff, const Rat& square_diff) {
    if (diff == 0) {
        if (square_diff != 0) {
            throw std::domain_error(
                "inconsistent-input: zero difference cannot produce a nonzero "
                "difference of squares");
        }
        throw std::domain_error(
            "underdetermined: zero difference and zero difference of squares "
            "admit every pair (a, a)");
    }
    return sankramana(square_diff / diff, diff);
}

Rat product_from_sum(const Rat& sum, const Rat& sum_of_squares) {
    return (sum * sum - sum_of_squares) / 2;
}

Pair pair_from_product_and_diff(const Rat& product, const Rat& diff) {
    const Rat radicand = 4 * product + diff * diff;
    if (radicand < 0) {
        throw std::domain_error("no-real-pair: radicand " + to_string(radicand) +
                                " is negative");
    }
    std::optional<Rat> root = rational_sqrt(radicand);
    if (!root) {
        throw std::domain_error("not-rational-pair: radicand " +
                                to_string(radicand) + " has no rational root");
    }
    return sankramana(*root, diff);
}

}  // namespace ganita::parikarman
