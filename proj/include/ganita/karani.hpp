#pragma once

#include "ganita/numbers.hpp"

#include <map>
#include <optional>
#include <string>

namespace ganita::karani {

/**
 * Exact value of the form r + sum of q_i * sqrt(d_i).
 *
 * Canonical form: every radicand d_i is squarefree and >= 2, radicands are
 * pairwise distinct, and no coefficient q_i is zero. A value with no surd
 * terms is exactly its rational part. All operations return canonical
 * results, so equality is plain structural equality.
 */
class SurdExpression {
public:
    SurdExpression() = default;
    // rationals embed
    SurdExpression(Rat rational) : rational_(std::move(rational)) {}
    SurdExpression(int rational) : rational_(rational) {}

    const Rat& rational_part() const { return rational_; }
    const std::map<Int, Rat>& terms() const { return terms_; }
    bool is_rational() const { return terms_.empty(); }

    /// True when the stored representation satisfies the canonical-form
    /// invariants; operations always produce values for which this holds.
    bool is_canonical() const;

    bool operator==(const SurdExpression&) const = default;

private:
    friend SurdExpression make_surd(const Rat& coefficient, const Int& radicand);
    friend SurdExpression surd_add(const SurdExpression& x, const SurdExpression& y);
    friend SurdExpression surd_neg(const SurdExpression& x);
    friend SurdExpression surd_mul(const SurdExpression& x, const SurdExpression& y);
    friend SurdExpression conjugate(const SurdExpression& x);

    void add_term(const Int& squarefree_radicand, const Rat& coefficient);

    Rat rational_;
    std::map<Int, Rat> terms_;
};

/// Splits n >= 1 as s^2 * f with f squarefree, by trial division.
struct SquarefreeSplit {
    Int square_root_part;  // s
    Int squarefree_part;   // f
};
SquarefreeSplit squarefree_split(const Int& n);

/// coefficient * sqrt(radicand), canonicalized: the square part of the
/// radicand is absorbed into the coefficient. Throws std::domain_error for
/// radicand <= 0 (negative radicands are rejected everywhere).
SurdExpression make_surd(const Rat& coefficient, const Int& radicand);

/// Canonical expression with value sqrt(value), for a positive rational.
SurdExpression sqrt_of(const Rat& value);

/// The conditional surd-sum rule: if u * u' is the square of a rational z,
/// sqrt(u) + sqrt(u') = sqrt(u + 2z + u') and the combined radicand is
/// returned; otherwise the sum is irreducible and the result is absent.
/// Throws std::domain_error for nonpositive inputs.
std::optional<Rat> brahmagupta_sum(const Rat& u, const Rat& u_prime);

SurdExpression surd_add(const SurdExpression& x, const SurdExpression& y);
SurdExpression surd_neg(const SurdExpression& x);
SurdExpression surd_sub(const SurdExpression& x, const SurdExpression& y);
SurdExpression surd_mul(const SurdExpression& x, const SurdExpression& y);

/// Same rational part, negated surd coefficient. Restricted to binary forms
/// u + q*sqrt(d): more than one surd term throws std::domain_error
/// ("unsupported-form").
SurdExpression conjugate(const SurdExpression& x);

/// x * conjugate(x), guaranteed rational. Same restriction as conjugate.
Rat norm(const SurdExpression& x);

/// True iff sqrt(r) is irrational: in lowest terms, numerator and
/// denominator are not both perfect squares. Throws for r <= 0.
bool is_karani(const Rat& r);

/// Decimal approximation to `digits` significant digits (digits >= 1).
/// Computed with scaled exact integers; no floating point.
std::string evaluate(const SurdExpression& x, unsigned digits);

/// Canonical text: rational part first, then terms by ascending radicand,
/// e.g. "3 - 2*sqrt(2) + sqrt(5)". Coefficients of magnitude one are
/// elided ("sqrt(2)", not "1*sqrt(2)").
std::string to_string(const SurdExpression& x);

/// Parses expr := term (('+'|'-') term)*,
/// term := rational | rational '*'? 'sqrt(' positive-integer ')'
///       | 'sqrt(' positive-integer ')'.
/// Rationals are "p" or "p/q" with an optional leading '-'; spaces are
/// allowed around tokens. Throws ParseError with a 1-based position.
SurdExpression parse_expression(const std::string& text);

}  // namespace ganita::karani
