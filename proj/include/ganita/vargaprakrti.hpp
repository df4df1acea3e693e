#pragma once

#include "ganita/numbers.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace ganita::vargaprakrti {

/// Integer triple (a, b, k) intended to satisfy b^2 = N*a^2 + k for a fixed
/// multiplier N supplied alongside it.
struct Solution {
    Int a;  // initial root
    Int b;  // final root
    Int k;  // interpolator
    bool operator==(const Solution&) const = default;
    std::strong_ordering operator<=>(const Solution&) const = default;
};

/// Rational solution of y^2 = N*x^2 + k; arises from interpolator scaling.
struct RationalSolution {
    Rat x;
    Rat y;
    Rat k;
    bool operator==(const RationalSolution&) const = default;
};

bool verify(const Int& N, const Solution& s);
bool verify(const Int& N, const RationalSolution& s);

/// Combines two solutions into a third: a'' = a*b' + a'*b,
/// b'' = N*a*a' + b*b', k'' = k*k'. Outputs are canonicalized to
/// nonnegative roots. Throws "invalid-solution" when an input does not
/// verify against N.
Solution compose(const Int& N, const Solution& s1, const Solution& s2);
RationalSolution compose(const Int& N, const RationalSolution& s1,
                         const RationalSolution& s2);

/// For a solution whose interpolator is a positive perfect square kappa^2
/// (as produced by composing two solutions with equal interpolators +-kappa),
/// divides both roots by kappa, reaching interpolator 1. Throws
/// "not-unit-scalable" otherwise.
RationalSolution unit_scale(const Int& N, const Solution& s);

/// Starting from a rational solution of N*x^2 + 1 = y^2, repeatedly composes
/// with the original solution until both roots are integral, or the step
/// budget runs out (absent). The already-integral input is returned as is.
std::optional<Solution> promote_to_integral(const Int& N, const RationalSolution& r,
                                            unsigned max_steps = 8);

/// Smallest a in 1..a_bound with N*a^2 + 1 a perfect square, as (a, b, 1);
/// absent when none exists in range. Always absent for perfect-square N
/// (see refute_unit_solution_square for the reason), which is answered
/// without scanning.
std::optional<Solution> fundamental_solution(const Int& N,
                                             const Int& a_bound = 1000000);

/// For a square multiplier N = n^2 and any nonzero m:
/// a = (k/m - m)/(2n), b = (k/m + m)/2 solves n^2*a^2 + k = b^2.
RationalSolution solve_square_multiplier(const Int& n, const Int& k, const Rat& m);

/// All integral solutions of n^2*a^2 + k = b^2 with a >= 1, found by running
/// solve_square_multiplier over every integer divisor m of k (both signs),
/// deduplicated and sorted by a. The trivial a = 0 solutions are omitted.
/// Throws "underdetermined" for k == 0.
std::vector<Solution> enumerate_square_multiplier_integral(const Int& n, const Int& k);

enum class GrowthMode {
    chain,     // s_{i+1} = compose(s_i, seed)
    doubling,  // s_{i+1} = compose(s_i, s_i)
};

/// s_0 = seed, then t compositions; every element verifies with k = 1 and
/// the initial roots strictly increase (step >= 1). Preconditions (else
/// "invalid-seed"): seed verifies, seed.k == 1, seed.a >= 1, N >= 1 and not
/// a perfect square.
std::vector<Solution> growth_sequence(const Int& N, const Solution& seed, unsigned t,
                                      GrowthMode mode = GrowthMode::chain);

/// Exactly one branch is populated: either the exact integer root of N, or
/// a unit-interpolator witness with the number of verified self-composition
/// growth steps.
struct IrrationalityCertificate {
    std::optional<Int> exact_root;
    std::optional<Solution> witness;
    unsigned growth_steps = 0;

    bool is_exact_root() const { return exact_root.has_value(); }
    bool is_witness() const { return witness.has_value(); }
};

/// Perfect-square N certifies rationality of sqrt(N) via the exact root;
/// otherwise a fundamental solution found within a_bound certifies
/// irrationality, with growth_steps compositions verified strictly
/// increasing. Absent means inconclusive, never "rational".
std::optional<IrrationalityCertificate> irrationality_certificate(
    const Int& N, const Int& a_bound = 1000000, unsigned growth_steps = 3);

/// Why p/q (in lowest terms) is not sqrt(N).
struct RefutationReport {
    enum class Mode { direct, growth };
    Int p;
    Int q;
    Mode mode = Mode::direct;
    Int direct_value;        // direct: the nonzero p^2 - N*q^2
    unsigned growth_index = 0;  // growth: first t with a_t > q^2
    Solution growth_solution;   // the corresponding element, k = 1
    Int factor_bound;           // b_t*q + p*a_t, which exceeds q^2
};

/// With a witness certificate in hand: either p^2 - N*q^2 != 0 outright
/// (direct), or the growth sequence breaks the bound
/// (b*q + p*a)(b*q - p*a) = q^2 that equality would force. force_growth
/// skips the direct short-circuit to exhibit the growth argument anyway.
/// Throws std::domain_error for non-coprime p, q or a non-witness
/// certificate; std::length_error if the internal growth cap is exceeded.
RefutationReport refute_rational_root(const Int& N, const Int& p, const Int& q,
                                      const IrrationalityCertificate& cert,
                                      bool force_growth = false);

/// Why (a, b) cannot satisfy n^2*a^2 + 1 = b^2 for a, b >= 1: the factor
/// pair (b + n*a, b - n*a) would have to multiply to 1, forcing a = 0.
struct UnitSquareRefutation {
    Int n;
    Int a;
    Int b;
    bool direct = true;  // residual != 1; the other branch is unreachable
    Int residual;        // b^2 - n^2*a^2
    Int factor_plus;     // b + n*a
    Int factor_minus;    // b - n*a
};
UnitSquareRefutation refute_unit_solution_square(const Int& n, const Int& a,
                                                 const Int& b);

/// Brute-force oracle: all (a, b, k) with 0 <= a <= a_max, b >= 0 and
/// b^2 = N*a^2 + k, sorted by a. Includes the trivial a = 0 entries.
std::vector<Solution> enumerate_solutions(const Int& N, const Int& k,
                                          const Int& a_max);

/// Text form "a,b,k".
Solution parse_solution(const std::string& text);
std::string to_string(const Solution& s);
std::string to_string(const RationalSolution& s);

}  // namespace ganita::vargaprakrti
