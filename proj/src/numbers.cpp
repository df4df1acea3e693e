#include "ganita/numbers.hpp"

#include <algorithm>

namespace ganita {

ParseError::ParseError(const std::string& message, std::size_t pos)
    : std::invalid_argument(message + " (position " + std::to_string(pos) + ")"),
      position(pos) {}

IntSqrtResult integer_sqrt(const Int& n) {
    if (n < 0) {
        throw std::domain_error("domain: integer_sqrt of negative value " + n.str());
    }
    Int root = boost::multiprecision::sqrt(n);
    return {root, root * root == n};
}

bool is_perfect_square(const Int& n) {
    return n >= 0 && integer_sqrt(n).exact;
}

std::optional<Rat> rational_sqrt(const Rat& r) {
    if (r < 0) {
        return std::nullopt;
    }
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    IntSqrtResult sn = integer_sqrt(num);
    if (!sn.exact) {
        return std::nullopt;
    }
    IntSqrtResult sd = integer_sqrt(den);
    if (!sd.exact) {
        return std::nullopt;
    }
    return Rat(sn.root, sd.root);
}

bool is_integer(const Rat& r) {
    return boost::multiprecision::denominator(r) == 1;
}

Int to_integer(const Rat& r) {
    if (!is_integer(r)) {
        throw std::domain_error("domain: " + to_string(r) + " is not an integer");
    }
    return boost::multiprecision::numerator(r);
}

std::vector<Int> positive_divisors(const Int& n) {
    if (n == 0) {
        throw std::domain_error("domain: divisors of zero are unbounded");
    }
    Int m = boost::multiprecision::abs(n);
    std::vector<Int> small;
    std::vector<Int> large;
    for (Int d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d * d != m) {
                large.push_back(m / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Int pow10(unsigned n) {
    Int r = 1;
    for (unsigned i = 0; i < n; ++i) {
        r *= 10;
    }
    return r;
}

std::string to_string(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

namespace {

// Parses a run of decimal digits from text starting at *i (0-based).
Int parse_digits(const std::string& text, std::size_t* i) {
    if (*i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[*i]))) {
        throw ParseError("expected digit", *i + 1);
    }
    Int value = 0;
    while (*i < text.size() && std::isdigit(static_cast<unsigned char>(text[*i]))) {
        value = value * 10 + (text[*i] - '0');
        ++(*i);
    }
    return value;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && text[i] == '-') {
        negative = true;
        ++i;
    }
    Int num = parse_digits(text, &i);
    Int den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = parse_digits(text, &i);
        if (den == 0) {
            throw ParseError("zero denominator", i);
        }
    }
    if (i != text.size()) {
        throw ParseError("trailing characters after rational", i + 1);
    }
    Rat r(num, den);
    return negative ? Rat(-r) : r;
}

Int parse_integer(const std::string& text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && text[i] == '-') {
        negative = true;
        ++i;
    }
    Int value = parse_digits(text, &i);
    if (i != text.size()) {
        throw ParseError("trailing characters after integer", i + 1);
    }
    return negative ? Int(-value) : value;
}

}  // namespace ganita
