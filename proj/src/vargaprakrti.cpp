#include "ganita/vargaprakrti.hpp"

#include <algorithm>
#include <set>

namespace ganita::vargaprakrti {

namespace mp = boost::multiprecision;

bool verify(const Int& N, const Solution& s) {
    return s.b * s.b == N * s.a * s.a + s.k;
}

bool verify(const Int& N, const RationalSolution& s) {
    return s.y * s.y == N * s.x * s.x + s.k;
}

Solution compose(const Int& N, const Solution& s1, const Solution& s2) {
    if (!verify(N, s1)) {
        throw std::domain_error("invalid-solution: " + to_string(s1) +
                                " does not satisfy b^2 = " + N.str() + "*a^2 + k");
    }
    if (!verify(N, s2)) {
        throw std::domain_error("invalid-solution: " + to_string(s2) +
                                " does not satisfy b^2 = " + N.str() + "*a^2 + k");
    }
    Int a = s1.a * s2.b + s2.a * s1.b;
    Int b = N * s1.a * s2.a + s1.b * s2.b;
    return {mp::abs(a), mp::abs(b), s1.k * s2.k};
}

RationalSolution compose(const Int& N, const RationalSolution& s1,
                         const RationalSolution& s2) {
    if (!verify(N, s1) || !verify(N, s2)) {
        throw std::domain_error("invalid-solution: rational input does not verify");
    }
    Rat x = s1.x * s2.y + s2.x * s1.y;
    Rat y = N * s1.x * s2.x + s1.y * s2.y;
    if (x < 0) {
        x = -x;
    }
    if (y < 0) {
        y = -y;
    }
    return {x, y, Rat(s1.k * s2.k)};
}

RationalSolution unit_scale(const Int& N, const Solution& s) {
    if (!verify(N, s)) {
        throw std::domain_error("invalid-solution: " + to_string(s) +
                                " does not satisfy b^2 = " + N.str() + "*a^2 + k");
    }
    if (s.k <= 0 || !is_perfect_square(s.k)) {
        throw std::domain_error("not-unit-scalable: interpolator " + s.k.str() +
                                " is not a positive perfect square");
    }
    Int kappa = integer_sqrt(s.k).root;
    return {Rat(s.a, kappa), Rat(s.b, kappa), Rat(1)};
}

std::optional<Solution> promote_to_integral(const Int& N, const RationalSolution& r,
                                            unsigned max_steps) {
    if (r.k != 1 || !verify(N, r)) {
        throw std::domain_error(
            "invalid-solution: promotion needs a rational solution with "
            "interpolator 1");
    }
    RationalSolution current = r;
    for (unsigned step = 0;; ++step) {
        if (is_integer(current.x) && is_integer(current.y)) {
            return Solution{to_integer(current.x), to_integer(current.y), Int(1)};
        }
        if (step == max_steps) {
            return std::nullopt;
        }
        current = compose(N, current, r);
    }
}

std::optional<Solution> fundamental_solution(const Int& N, const Int& a_bound) {
    if (N < 1) {
        throw std::domain_error("domain: multiplier must be a positive integer");
    }
    if (is_perfect_square(N)) {
        // (b + n*a)(b - n*a) = 1 has no solution with a >= 1.
        return std::nullopt;
    }
    for (Int a = 1; a <= a_bound; ++a) {
        IntSqrtResult r = integer_sqrt(N * a * a + 1);
        if (r.exact) {
            return Solution{a, r.root, Int(1)};
        }
    }
    return std::nullopt;
}

RationalSolution solve_square_multiplier(const Int& n, const Int& k, const Rat& m) {
    if (n < 1) {
        throw std::domain_error("domain: square-multiplier root must be >= 1");
    }
    if (k == 0) {
        throw std::domain_error("domain: interpolator must be nonzero");
    }
    if (m == 0) {
        throw std::domain_error("domain: divisor m must be nonzero");
    }
    Rat quotient = Rat(k) / m;
    Rat a = (quotient - m) / (2 * n);
    Rat b = (quotient + m) / 2;
    return {a, b, Rat(k)};
}

std::vector<Solution> enumerate_square_multiplier_integral(const Int& n, const Int& k) {
    if (n < 1) {
        throw std::domain_error("domain: square-multiplier root must be >= 1");
    }
    if (k == 0) {
        throw std::domain_error(
            "underdetermined: interpolator 0 leaves no divisors to try");
    }
    std::set<Solution> found;
    for (const Int& d : positive_divisors(k)) {
        for (int sign : {1, -1}) {
            RationalSolution r = solve_square_multiplier(n, k, Rat(sign * d));
            if (!is_integer(r.x) || !is_integer(r.y)) {
                continue;
            }
            Int a = mp::abs(to_integer(r.x));
            Int b = mp::abs(to_integer(r.y));
            if (a >= 1) {
                found.insert(Solution{a, b, k});
            }
        }
    }
    return {found.begin(), found.end()};
}

std::vector<Solution> growth_sequence(const Int& N, const Solution& seed, unsigned t,
                                      GrowthMode mode) {
    if (N < 1 || is_perfect_square(N)) {
        throw std::domain_error("invalid-seed: multiplier " + N.str() +
                                " must be a nonsquare positive integer");
    }
    if (!verify(N, seed) || seed.k != 1 || seed.a < 1) {
        throw std::domain_error("invalid-seed: " + to_string(seed) +
                                " is not a nontrivial unit-interpolator solution");
    }
    std::vector<Solution> sequence{seed};
    sequence.reserve(t + 1);
    for (unsigned i = 0; i < t; ++i) {
        const Solution& last = sequence.back();
        Solution next = mode == GrowthMode::chain ? compose(N, last, seed)
                                                  : compose(N, last, last);
        sequence.push_back(next);
    }
    return sequence;
}

std::optional<IrrationalityCertificate> irrationality_certificate(
    const Int& N, const Int& a_bound, unsigned growth_steps) {
    if (N < 1) {
        throw std::domain_error("domain: multiplier must be a positive integer");
    }
    IntSqrtResult root = integer_sqrt(N);
    if (root.exact) {
        IrrationalityCertificate cert;
        cert.exact_root = root.root;
        return cert;
    }
    std::optional<Solution> witness = fundamental_solution(N, a_bound);
    if (!witness) {
        return std::nullopt;
    }
    // The composed sequence must strictly grow for the witness to count.
    std::vector<Solution> sequence = growth_sequence(N, *witness, growth_steps);
    for (std::size_t i = 1; i < sequence.size(); ++i) {
        if (sequence[i].a < sequence[i - 1].a + 1 || !verify(N, sequence[i]) ||
            sequence[i].k != 1) {
            throw std::logic_error("growth verification failed for N = " + N.str());
        }
    }
    IrrationalityCertificate cert;
    cert.witness = *witness;
    cert.growth_steps = growth_steps;
    return cert;
}

RefutationReport refute_rational_root(const Int& N, const Int& p, const Int& q,
                                      const IrrationalityCertificate& cert,
                                      bool force_growth) {
    if (p < 1 || q < 1) {
        throw std::domain_error("domain: claim p/q must have positive parts");
    }
    if (mp::gcd(p, q) != 1) {
        throw std::domain_error("domain: claim " + p.str() + "/" + q.str() +
                                " is not in lowest terms");
    }
    if (!cert.is_witness()) {
        throw std::domain_error(
            "domain: refutation needs a witness-branch certificate");
    }
    RefutationReport report;
    report.p = p;
    report.q = q;
    Int direct = p * p - N * q * q;
    if (direct != 0 && !force_growth) {
        report.mode = RefutationReport::Mode::direct;
        report.direct_value = direct;
        return report;
    }
    // If p/q were sqrt(N), every solution would obey
    // (b*q + p*a)(b*q - p*a) = k*q^2, bounding b*q + p*a by q^2 when k = 1.
    // The growth sequence exceeds any bound.
    const Int bound = q * q;
    Solution current = *cert.witness;
    const unsigned cap = 1000000;
    for (unsigned t = 0; t <= cap; ++t) {
        if (current.a > bound) {
            report.mode = RefutationReport::Mode::growth;
            report.growth_index = t;
            report.growth_solution = current;
            report.factor_bound = current.b * q + p * current.a;
            return report;
        }
        current = compose(N, current, *cert.witness);
    }
    throw std::length_error("internal-bound: growth refutation exceeded " +
                            std::to_string(cap) + " compositions");
}

UnitSquareRefutation refute_unit_solution_square(const Int& n, const Int& a,
                                                 const Int& b) {
    if (n < 1 || a < 1 || b < 1) {
        throw std::domain_error("domain: n, a, b must all be >= 1");
    }
    UnitSquareRefutation report;
    report.n = n;
    report.a = a;
    report.b = b;
    report.residual = b * b - n * n * a * a;
    report.factor_plus = b + n * a;
    report.factor_minus = b - n * a;
    // residual == 1 cannot happen for a >= 1: the factors multiply to 1 and
    // factor_plus >= 2, so their product exceeds 1 unless a = 0.
    report.direct = report.residual != 1;
    return report;
}

std::vector<Solution> enumerate_solutions(const Int& N, const Int& k,
                                          const Int& a_max) {
    if (a_max < 0) {
        throw std::domain_error("domain: a_max must be nonnegative");
    }
    std::vector<Solution> out;
    for (Int a = 0; a <= a_max; ++a) {
        Int target = N * a * a + k;
        if (target < 0) {
            continue;
        }
        IntSqrtResult r = integer_sqrt(target);
        if (r.exact) {
            out.push_back({a, r.root, k});
        }
    }
    return out;
}

Solution parse_solution(const std::string& text) {
    std::size_t first = text.find(',');
    std::size_t second = first == std::string::npos ? std::string::npos
                                                    : text.find(',', first + 1);
    if (first == std::string::npos || second == std::string::npos ||
        text.find(',', second + 1) != std::string::npos) {
        throw ParseError("expected solution in the form a,b,k", 1);
    }
    return Solution{parse_integer(text.substr(0, first)),
                    parse_integer(text.substr(first + 1, second - first - 1)),
                    parse_integer(text.substr(second + 1))};
}

std::string to_string(const Solution& s) {
    return "(" + s.a.str() + ", " + s.b.str() + ", " + s.k.str() + ")";
}

std::string to_string(const RationalSolution& s) {
    return "(" + ganita::to_string(s.x) + ", " + ganita::to_string(s.y) + ", " +
           ganita::to_string(s.k) + ")";
}

}  // namespace ganita::vargaprakrti
