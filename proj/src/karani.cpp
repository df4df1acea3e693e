#include "ganita/karani.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <sstream>

namespace ganita::karani {

namespace mp = boost::multiprecision;

bool SurdExpression::is_canonical() const {
    for (const auto& [d, q] : terms_) {
        if (d < 2 || q == 0) {
            return false;
        }
        if (squarefree_split(d).square_root_part != 1) {
            return false;
        }
    }
    return true;
}

void SurdExpression::add_term(const Int& d, const Rat& q) {
    if (q == 0) {
        return;
    }
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, q);
        return;
    }
    it->second += q;
    if (it->second == 0) {
        terms_.erase(it);
    }
}

SquarefreeSplit squarefree_split(const Int& n) {
    if (n < 1) {
        throw std::domain_error("domain: squarefree split needs a positive integer");
    }
    Int rest = n;
    Int s = 1;
    Int f = 1;
    for (Int p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) {
            continue;
        }
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2) {
            s *= p;
        }
        if (e % 2 == 1) {
            f *= p;
        }
    }
    f *= rest;  // rest is 1 or a prime
    return {s, f};
}

SurdExpression make_surd(const Rat& coefficient, const Int& radicand) {
    if (radicand <= 0) {
        throw std::domain_error("domain: radicand " + radicand.str() +
                                " is not positive; square roots of nonpositive "
                                "numbers are not considered");
    }
    SquarefreeSplit split = squarefree_split(radicand);
    SurdExpression result;
    Rat scaled = coefficient * split.square_root_part;
    if (split.squarefree_part == 1) {
        result.rational_ = scaled;
    } else {
        result.add_term(split.squarefree_part, scaled);
    }
    return result;
}

SurdExpression sqrt_of(const Rat& value) {
    if (value <= 0) {
        throw std::domain_error("domain: sqrt of nonpositive rational " +
                                to_string(value));
    }
    const Int num = mp::numerator(value);
    const Int den = mp::denominator(value);
    // sqrt(p/q) = sqrt(p*q) / q
    return make_surd(Rat(1, den), num * den);
}

std::optional<Rat> brahmagupta_sum(const Rat& u, const Rat& u_prime) {
    if (u <= 0 || u_prime <= 0) {
        throw std::domain_error("domain: surd-sum rule needs positive radicands");
    }
    std::optional<Rat> z = rational_sqrt(u * u_prime);
    if (!z) {
        return std::nullopt;
    }
    return u + 2 * (*z) + u_prime;
}

SurdExpression surd_add(const SurdExpression& x, const SurdExpression& y) {
    SurdExpression result = x;
    result.rational_ += y.rational_;
    for (const auto& [d, q] : y.terms_) {
        result.add_term(d, q);
    }
    return result;
}

SurdExpression surd_neg(const SurdExpression& x) {
    SurdExpression result;
    result.rational_ = -x.rational_;
    for (const auto& [d, q] : x.terms_) {
        result.terms_.emplace(d, Rat(-q));
    }
    return result;
}

SurdExpression surd_sub(const SurdExpression& x, const SurdExpression& y) {
    return surd_add(x, surd_neg(y));
}

SurdExpression surd_mul(const SurdExpression& x, const SurdExpression& y) {
    SurdExpression result;
    result.rational_ = x.rational_ * y.rational_;
    for (const auto& [d, q] : y.terms_) {
        result.add_term(d, x.rational_ * q);
    }
    for (const auto& [d, q] : x.terms_) {
        result.add_term(d, y.rational_ * q);
    }
    for (const auto& [d1, q1] : x.terms_) {
        for (const auto& [d2, q2] : y.terms_) {
            if (d1 == d2) {
                result.rational_ += q1 * q2 * d1;
            } else {
                // sqrt(d1) * sqrt(d2) = sqrt(d1*d2), renormalized
                SurdExpression cross = make_surd(q1 * q2, d1 * d2);
                result.rational_ += cross.rational_;
                for (const auto& [d, q] : cross.terms_) {
                    result.add_term(d, q);
                }
            }
        }
    }
    return result;
}

SurdExpression conjugate(const SurdExpression& x) {
    if (x.terms_.size() > 1) {
        throw std::domain_error(
            "unsupported-form: conjugation is defined for binary forms "
            "u + q*sqrt(d) only");
    }
    SurdExpression result = x;
    for (auto& [d, q] : result.terms_) {
        q = -q;
    }
    return result;
}

Rat norm(const SurdExpression& x) {
    SurdExpression product = surd_mul(x, conjugate(x));
    // r^2 - d*q^2 for r + q*sqrt(d); always rational.
    return product.rational_part();
}

bool is_karani(const Rat& r) {
    if (r <= 0) {
        throw std::domain_error("domain: karani test needs a positive rational");
    }
    return !rational_sqrt(r).has_value();
}

namespace {

// round(sqrt(p/q) * 10^scale) computed purely with integers, error < 1 ulp.
Int scaled_sqrt(const Int& p, const Int& q, const Int& scale_factor) {
    // sqrt(p/q) = sqrt(p*q)/q
    Int inner = p * q * scale_factor * scale_factor;
    Int root = mp::sqrt(inner);  // floor
    // round the division by q
    return (root + q / 2) / q;
}

}  // namespace

std::string evaluate(const SurdExpression& x, unsigned digits) {
    if (digits < 1) {
        throw std::domain_error("domain: need at least one significant digit");
    }
    const unsigned guard = 12;
    const Int scale = pow10(digits + guard);

    // value * 10^(digits+guard), rounded; each term adds < 1 ulp of error.
    Int scaled = 0;
    {
        const Int num = mp::numerator(x.rational_part());
        const Int den = mp::denominator(x.rational_part());
        Int t = num * scale;
        Int half = den / 2;
        scaled += (t >= 0 ? Int(t + half) : Int(t - half)) / den;
    }
    for (const auto& [d, q] : x.terms()) {
        const Int num = mp::numerator(q);
        const Int den = mp::denominator(q);
        // |q|*sqrt(d) = sqrt(d * num^2 / den^2)
        Int term = scaled_sqrt(d * num * num, den * den, scale);
        scaled += (num >= 0) ? term : -term;
    }

    bool negative = scaled < 0;
    Int magnitude = mp::abs(scaled);

    std::string all = magnitude.str();  // digits of |value| * 10^(digits+guard)
    // Round to the requested number of significant digits.
    std::string result;
    long point_offset;  // decimal point goes point_offset digits into `result`
    if (magnitude == 0) {
        result = std::string(digits, '0');
        point_offset = 1;
    } else {
        long total = static_cast<long>(all.size());
        long drop = total - static_cast<long>(digits);
        if (drop > 0) {
            Int rounded = (magnitude + pow10(static_cast<unsigned>(drop)) / 2) /
                          pow10(static_cast<unsigned>(drop));
            result = rounded.str();
            if (static_cast<long>(result.size()) > static_cast<long>(digits)) {
                // rounding carried into a new leading digit (e.g. 999.9 -> 1000)
                drop += static_cast<long>(result.size()) - static_cast<long>(digits);
                result.resize(digits);
            }
        } else {
            result = all + std::string(static_cast<std::size_t>(-drop), '0');
            drop = 0;
        }
        // |value| = result * 10^(drop - digits - guard)
        point_offset = static_cast<long>(result.size()) + drop -
                       static_cast<long>(digits + guard);
    }

    std::string out;
    if (negative) {
        out += '-';
    }
    if (point_offset <= 0) {
        out += "0.";
        out += std::string(static_cast<std::size_t>(-point_offset), '0');
        out += result;
    } else if (point_offset >= static_cast<long>(result.size())) {
        out += result;
        out += std::string(static_cast<std::size_t>(point_offset - result.size()), '0');
    } else {
        out += result.substr(0, static_cast<std::size_t>(point_offset));
        out += '.';
        out += result.substr(static_cast<std::size_t>(point_offset));
    }
    return out;
}

namespace {

std::string coefficient_text(const Rat& magnitude) {
    if (magnitude == 1) {
        return "";
    }
    return ganita::to_string(magnitude) + "*";
}

}  // namespace

std::string to_string(const SurdExpression& x) {
    std::ostringstream out;
    bool wrote = false;
    if (x.rational_part() != 0 || x.terms().empty()) {
        out << ganita::to_string(x.rational_part());
        wrote = true;
    }
    for (const auto& [d, q] : x.terms()) {
        Rat magnitude = q < 0 ? Rat(-q) : q;
        if (!wrote) {
            if (q < 0) {
                out << "-";
            }
        } else {
            out << (q < 0 ? " - " : " + ");
        }
        out << coefficient_text(magnitude) << "sqrt(" << d.str() << ")";
        wrote = true;
    }
    return out.str();
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t i = 0;

    void skip_spaces() {
        while (i < text.size() && text[i] == ' ') {
            ++i;
        }
    }
    bool done() {
        skip_spaces();
        return i >= text.size();
    }
    char peek() {
        skip_spaces();
        return i < text.size() ? text[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, i + 1);
    }
};

Int parse_uint(Cursor& c) {
    c.skip_spaces();
    if (c.i >= c.text.size() || !std::isdigit(static_cast<unsigned char>(c.text[c.i]))) {
        c.fail("expected digit");
    }
    Int value = 0;
    while (c.i < c.text.size() &&
           std::isdigit(static_cast<unsigned char>(c.text[c.i]))) {
        value = value * 10 + (c.text[c.i] - '0');
        ++c.i;
    }
    return value;
}

bool try_keyword(Cursor& c, const std::string& word) {
    c.skip_spaces();
    if (c.text.compare(c.i, word.size(), word) == 0) {
        c.i += word.size();
        return true;
    }
    return false;
}

Int parse_sqrt_radicand(Cursor& c) {
    c.skip_spaces();
    if (c.peek() != '(') {
        c.fail("expected '(' after sqrt");
    }
    ++c.i;
    Int radicand = parse_uint(c);
    if (c.peek() != ')') {
        c.fail("expected ')'");
    }
    ++c.i;
    if (radicand <= 0) {
        c.fail("radicand must be positive");
    }
    return radicand;
}

SurdExpression parse_term(Cursor& c, bool negated) {
    if (c.peek() == '-') {
        negated = !negated;
        ++c.i;
    }
    if (try_keyword(c, "sqrt")) {
        Int radicand = parse_sqrt_radicand(c);
        return make_surd(negated ? Rat(-1) : Rat(1), radicand);
    }
    // rational, possibly followed by ['*'] sqrt(...)
    Int num = parse_uint(c);
    Int den = 1;
    if (c.peek() == '/') {
        ++c.i;
        den = parse_uint(c);
        if (den == 0) {
            c.fail("zero denominator");
        }
    }
    Rat value(num, den);
    if (negated) {
        value = -value;
    }
    if (c.peek() == '*') {
        ++c.i;
        if (!try_keyword(c, "sqrt")) {
            c.fail("expected sqrt after '*'");
        }
        return make_surd(value, parse_sqrt_radicand(c));
    }
    if (try_keyword(c, "sqrt")) {
        return make_surd(value, parse_sqrt_radicand(c));
    }
    return SurdExpression(value);
}

}  // namespace

SurdExpression parse_expression(const std::string& text) {
    Cursor c{text};
    if (c.done()) {
        c.fail("empty expression");
    }
    SurdExpression result = parse_term(c, false);
    while (!c.done()) {
        char op = c.peek();
        if (op != '+' && op != '-') {
            c.fail("expected '+' or '-'");
        }
        ++c.i;
        result = surd_add(result, parse_term(c, op == '-'));
    }
    return result;
}

}  // namespace ganita::karani
