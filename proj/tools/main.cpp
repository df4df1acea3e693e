#include "ganita/karani.hpp"
#include "ganita/output.hpp"
#include "ganita/parikarman.hpp"
#include "ganita/prosody.hpp"
#include "ganita/vargaprakrti.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ganita;
namespace vp = ganita::vargaprakrti;
using output::Envelope;
using output::Status;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInternalBound = 3;

struct CommonFlags {
    bool json = false;
};

int emit(const Envelope& envelope, const CommonFlags& flags, int exit_code) {
    std::cout << (flags.json ? output::render_json(envelope)
                             : output::render_text(envelope));
    return exit_code;
}

int emit_invalid(const std::string& command, const std::string& message,
                 const CommonFlags& flags) {
    Envelope e;
    e.command = command;
    e.status = Status::invalid_input;
    e.notes.push_back(message);
    e.text.push_back("error: " + message);
    return emit(e, flags, kExitInvalidInput);
}

std::string solution_text(const vp::Solution& s) {
    return "a=" + s.a.str() + " b=" + s.b.str() + " k=" + s.k.str();
}

std::string solution_text(const vp::RationalSolution& s) {
    return "a=" + to_string(s.x) + " b=" + to_string(s.y) + " k=" + to_string(s.k);
}

std::string check_text(const Int& n, const vp::Solution& s) {
    return s.b.str() + "^2 - " + n.str() + "*" + s.a.str() +
           "^2 = " + Int(s.b * s.b - n * s.a * s.a).str();
}

// ---------------------------------------------------------------------------

struct SolveArgs {
    std::string n;
    std::string k = "1";
    std::string bound = "1000000";
    bool all = false;
    std::string m;
    CommonFlags flags;
};

int run_solve(const SolveArgs& args) {
    Envelope e;
    e.command = "solve";
    try {
        Int n = parse_integer(args.n);
        Int k = parse_integer(args.k);
        Int bound = parse_integer(args.bound);
        e.result["n"] = n.str();
        e.result["k"] = k.str();

        if (!args.m.empty()) {
            // square-multiplier mode: n must be a perfect square
            IntSqrtResult root = integer_sqrt(n);
            if (!root.exact) {
                return emit_invalid("solve",
                                    "square-multiplier mode needs a perfect-square "
                                    "--n, got " + n.str(),
                                    args.flags);
            }
            Rat m = parse_rational(args.m);
            vp::RationalSolution s = vp::solve_square_multiplier(root.root, k, m);
            e.result["mode"] = "square-multiplier";
            e.result["solution"] = output::rational_solution_json(s);
            e.text.push_back("solution: " + solution_text(s));
            e.text.push_back("check: " + to_string(s.y * s.y) + " - " + n.str() +
                             "*" + to_string(s.x * s.x) + " = " + to_string(s.k));
            return emit(e, args.flags, kExitOk);
        }
        if (args.all) {
            std::vector<vp::Solution> all = vp::enumerate_solutions(n, k, bound);
            e.result["mode"] = "enumerate";
            e.result["a_max"] = bound.str();
            output::Json list = output::Json::array();
            e.text.push_back("solutions: " + std::to_string(all.size()));
            for (const vp::Solution& s : all) {
                list.push_back(output::solution_json(s));
                e.text.push_back("  " + solution_text(s));
            }
            e.result["solutions"] = list;
            return emit(e, args.flags, kExitOk);
        }
        if (k != 1) {
            return emit_invalid(
                "solve", "fundamental search is defined for k = 1; use --all",
                args.flags);
        }
        std::optional<vp::Solution> s = vp::fundamental_solution(n, bound);
        e.result["mode"] = "fundamental";
        e.result["bound"] = bound.str();
        if (s) {
            e.result["solution"] = output::solution_json(*s);
            e.text.push_back("solution: " + solution_text(*s));
            e.text.push_back("check: " + check_text(n, *s));
        } else {
            e.result["solution"] = nullptr;
            e.text.push_back("solution: absent");
            e.notes.push_back(is_perfect_square(n)
                                  ? "a square multiplier admits no solution with "
                                    "a >= 1"
                                  : "no solution with a <= " + bound.str());
        }
        return emit(e, args.flags, kExitOk);
    } catch (const std::invalid_argument& ex) {
        return emit_invalid("solve", ex.what(), args.flags);
    } catch (const std::domain_error& ex) {
        return emit_invalid("solve", ex.what(), args.flags);
    }
}

// ---------------------------------------------------------------------------

struct ComposeArgs {
    std::string n;
    std::string s1;
    std::string s2;
    bool unit = false;
    int promote = -1;
    CommonFlags flags;
};

int run_compose(const ComposeArgs& args) {
    Envelope e;
    e.command = "compose";
    try {
        Int n = parse_integer(args.n);
        vp::Solution s1 = vp::parse_solution(args.s1);
        vp::Solution s2 = vp::parse_solution(args.s2);
        vp::Solution composed = vp::compose(n, s1, s2);
        e.result["n"] = n.str();
        e.result["composed"] = output::solution_json(composed);
        e.text.push_back("composed: " + solution_text(composed));
        e.text.push_back("check: " + check_text(n, composed));

        vp::RationalSolution unit{0, 0, 0};
        bool have_unit = false;
        if (args.unit) {
            unit = vp::unit_scale(n, composed);
            have_unit = true;
            e.result["unit_scaled"] = output::rational_solution_json(unit);
            e.text.push_back("unit-scaled: " + solution_text(unit));
        }
        if (args.promote >= 0) {
            if (!have_unit) {
                if (composed.k != 1) {
                    return emit_invalid("compose",
                                        "--promote needs interpolator 1; compose "
                                        "with --unit first",
                                        args.flags);
                }
                unit = vp::RationalSolution{Rat(composed.a), Rat(composed.b), 1};
            }
            std::optional<vp::Solution> promoted = vp::promote_to_integral(
                n, unit, static_cast<unsigned>(args.promote));
            if (promoted) {
                e.result["promoted"] = output::solution_json(*promoted);
                e.text.push_back("promoted: " + solution_text(*promoted));
            } else {
                e.result["promoted"] = nullptr;
                e.text.push_back("promoted: absent");
                e.notes.push_back("no integral solution within " +
                                  std::to_string(args.promote) + " steps");
            }
        }
        return emit(e, args.flags, kExitOk);
    } catch (const std::invalid_argument& ex) {
        return emit_invalid("compose", ex.what(), args.flags);
    } catch (const std::domain_error& ex) {
        return emit_invalid("compose", ex.what(), args.flags);
    }
}

// ---------------------------------------------------------------------------

struct IrrArgs {
    std::string n;
    std::string refute;
    std::string bound = "1000000";
    std::string steps = "3";
    bool growth = false;
    CommonFlags flags;
};

int run_irr(const IrrArgs& args) {
    Envelope e;
    e.command = "irr";
    try {
        Int n = parse_integer(args.n);
        Int bound = parse_integer(args.bound);
        Int steps_raw = parse_integer(args.steps);
        if (steps_raw < 0 || steps_raw > 1000) {
            return emit_invalid("irr", "--steps must lie in 0..1000", args.flags);
        }
        unsigned steps = static_cast<unsigned>(steps_raw);
        e.result["n"] = n.str();
        std::optional<vp::IrrationalityCertificate> cert =
            vp::irrationality_certificate(n, bound, steps);
        if (!cert) {
            e.status = Status::inconclusive;
            e.result["certificate"] = nullptr;
            e.text.push_back("certificate: absent");
            e.text.push_back("verdict: inconclusive within bound " + bound.str());
            return emit(e, args.flags, kExitOk);
        }
        output::Json c;
        if (cert->is_exact_root()) {
            c["branch"] = "exact-root";
            c["root"] = cert->exact_root->str();
            e.result["certificate"] = c;
            e.text.push_back("certificate: exact root " + cert->exact_root->str());
            e.text.push_back("verdict: sqrt(" + n.str() + ") = " +
                             cert->exact_root->str() + " is rational (not a karani)");
        } else {
            c["branch"] = "witness";
            c["witness"] = output::solution_json(*cert->witness);
            c["growth_steps"] = std::to_string(cert->growth_steps);
            e.result["certificate"] = c;
            e.text.push_back("certificate: witness " + solution_text(*cert->witness));
            e.text.push_back("growth steps verified: " +
                             std::to_string(cert->growth_steps));
            e.text.push_back("verdict: sqrt(" + n.str() + ") is irrational (karani)");
        }

        if (!args.refute.empty()) {
            std::size_t slash = args.refute.find('/');
            if (slash == std::string::npos) {
                return emit_invalid("irr", "--refute expects p/q", args.flags);
            }
            Int p = parse_integer(args.refute.substr(0, slash));
            Int q = parse_integer(args.refute.substr(slash + 1));
            vp::RefutationReport report =
                vp::refute_rational_root(n, p, q, *cert, args.growth);
            output::Json r;
            r["p"] = p.str();
            r["q"] = q.str();
            if (report.mode == vp::RefutationReport::Mode::direct) {
                r["mode"] = "direct";
                r["value"] = report.direct_value.str();
                e.text.push_back("refutation of " + p.str() + "/" + q.str() +
                                 ": direct, " + p.str() + "^2 - " + n.str() + "*" +
                                 q.str() + "^2 = " + report.direct_value.str());
            } else {
                r["mode"] = "growth";
                r["step"] = std::to_string(report.growth_index);
                r["solution"] = output::solution_json(report.growth_solution);
                r["factor_bound"] = report.factor_bound.str();
                const vp::Solution& g = report.growth_solution;
                e.text.push_back(
                    "refutation of " + p.str() + "/" + q.str() + ": growth, step " +
                    std::to_string(report.growth_index) + " gives " +
                    solution_text(g) + " with " + g.b.str() + "*" + q.str() + " + " +
                    p.str() + "*" + g.a.str() + " = " + report.factor_bound.str() +
                    " > " + Int(q * q).str() + " = " + q.str() + "^2");
            }
            e.result["refutation"] = r;
        }
        return emit(e, args.flags, kExitOk);
    } catch (const std::length_error& ex) {
        Envelope bound_e;
        bound_e.command = "irr";
        bound_e.status = Status::inconclusive;
        bound_e.notes.push_back(ex.what());
        bound_e.text.push_back("error: " + std::string(ex.what()));
        return emit(bound_e, args.flags, kExitInternalBound);
    } catch (const std::invalid_argument& ex) {
        return emit_invalid("irr", ex.what(), args.flags);
    } catch (const std::domain_error& ex) {
        return emit_invalid("irr", ex.what(), args.flags);
    }
}

// ---------------------------------------------------------------------------

struct SurdArgs {
    std::string op;
    std::string expr;
    std::string expr2;
    std::string digits = "50";
    CommonFlags flags;
};

int run_surd(const SurdArgs& args) {
    Envelope e;
    e.command = "surd " + args.op;
    try {
        if (args.op == "sum18-38") {
            Rat u = parse_rational(args.expr);
            Rat u2 = parse_rational(args.expr2);
            std::optional<Rat> w = karani::brahmagupta_sum(u, u2);
            if (w) {
                e.result["combined_radicand"] = to_string(*w);
                e.text.push_back("result: sqrt(" + to_string(*w) + ")");
            } else {
                e.result["combined_radicand"] = nullptr;
                e.text.push_back("result: absent");
                e.notes.push_back("the product " + to_string(u * u2) +
                                  " is not the square of a rational");
            }
            return emit(e, args.flags, kExitOk);
        }

        karani::SurdExpression x = karani::parse_expression(args.expr);
        if (args.op == "add" || args.op == "mul") {
            karani::SurdExpression y = karani::parse_expression(args.expr2);
            karani::SurdExpression r =
                args.op == "add" ? karani::surd_add(x, y) : karani::surd_mul(x, y);
            e.result["expression"] = karani::to_string(r);
            e.text.push_back("result: " + karani::to_string(r));
        } else if (args.op == "norm") {
            Rat r = karani::norm(x);
            e.result["value"] = to_string(r);
            e.text.push_back("norm: " + to_string(r));
        } else if (args.op == "eval") {
            Int digits_raw = parse_integer(args.digits);
            if (digits_raw < 1 || digits_raw > 100000) {
                return emit_invalid("surd eval", "--digits must lie in 1..100000",
                                    args.flags);
            }
            unsigned digits = static_cast<unsigned>(digits_raw);
            std::string value = karani::evaluate(x, digits);
            e.result["digits"] = std::to_string(digits);
            e.result["value"] = value;
            e.text.push_back("value: " + value);
        } else {
            return emit_invalid("surd", "unknown operation " + args.op, args.flags);
        }
        return emit(e, args.flags, kExitOk);
    } catch (const std::invalid_argument& ex) {
        return emit_invalid(e.command, ex.what(), args.flags);
    } catch (const std::domain_error& ex) {
        return emit_invalid(e.command, ex.what(), args.flags);
    }
}

// ---------------------------------------------------------------------------

struct ScanArgs {
    std::string format;
    std::string file;
    std::string text;
    CommonFlags flags;
};

int run_scan(const ScanArgs& args) {
    try {
        std::string input = args.text;
        if (!args.file.empty()) {
            std::ifstream in(args.file, std::ios::binary);
            if (!in) {
                return emit_invalid("scan", "cannot open file " + args.file,
                                    args.flags);
            }
            std::ostringstream buffer;
            buffer << in.rdbuf();
            input = buffer.str();
            // file text may end with a newline
            while (!input.empty() && (input.back() == '\n' || input.back() == '\r')) {
                input.pop_back();
            }
        }
        if (input.empty()) {
            return emit_invalid("scan", "no verse text given", args.flags);
        }
        prosody::Verse verse = args.format == "lg" ? prosody::parse_lg(input)
                                                   : prosody::weigh_iast(input);
        prosody::AryaReport report = prosody::validate_arya(verse);
        Envelope e = output::scan_envelope(report, args.format);
        return emit(e, args.flags, kExitOk);
    } catch (const ParseError& ex) {
        return emit_invalid("scan", ex.what(), args.flags);
    } catch (const std::invalid_argument& ex) {
        return emit_invalid("scan", ex.what(), args.flags);
    } catch (const std::domain_error& ex) {
        return emit_invalid("scan", ex.what(), args.flags);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ganita: exact varga-prakrti solving, quadratic-surd arithmetic and "
        "arya-metre scansion"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand(
        "solve", "find solutions of N*a^2 + k = b^2");
    solve->add_option("--n", solve_args.n, "multiplier N")->required();
    solve->add_option("--k", solve_args.k, "interpolator (default 1)");
    solve->add_option("--bound", solve_args.bound, "search bound for a");
    solve->add_flag("--all", solve_args.all, "enumerate all solutions up to bound");
    solve->add_option("--m", solve_args.m,
                      "square-multiplier divisor (N must be a perfect square)");
    solve->add_flag("--json", solve_args.flags.json, "machine-readable output");

    ComposeArgs compose_args;
    CLI::App* compose =
        app.add_subcommand("compose", "compose two solutions for a multiplier");
    compose->add_option("--n", compose_args.n, "multiplier N")->required();
    compose->add_option("--s1", compose_args.s1, "first solution a,b,k")->required();
    compose->add_option("--s2", compose_args.s2, "second solution a,b,k")->required();
    compose->add_flag("--unit", compose_args.unit,
                      "divide roots by sqrt(k) to reach interpolator 1");
    compose->add_option("--promote", compose_args.promote,
                        "compose up to this many steps to reach integral roots");
    compose->add_flag("--json", compose_args.flags.json, "machine-readable output");

    IrrArgs irr_args;
    CLI::App* irr = app.add_subcommand(
        "irr", "irrationality certificate for sqrt(N), with optional refutation");
    irr->add_option("--n", irr_args.n, "the number under the root")->required();
    irr->add_option("--refute", irr_args.refute, "claim p/q to refute");
    irr->add_option("--bound", irr_args.bound, "witness search bound");
    irr->add_option("--steps", irr_args.steps, "growth steps to verify");
    irr->add_flag("--growth", irr_args.growth,
                  "force the growth argument even when the direct residue is "
                  "nonzero");
    irr->add_flag("--json", irr_args.flags.json, "machine-readable output");

    SurdArgs surd_args;
    CLI::App* surd = app.add_subcommand("surd", "exact quadratic-surd arithmetic");
    surd->require_subcommand(1);
    for (const std::string op : {"add", "mul", "norm", "sum18-38", "eval"}) {
        CLI::App* sub = surd->add_subcommand(op);
        sub->add_option("--expr", surd_args.expr, "expression")->required();
        sub->add_option("--expr2", surd_args.expr2, "second expression");
        if (op == "eval") {
            sub->add_option("--digits", surd_args.digits, "significant digits");
        }
        sub->add_flag("--json", surd_args.flags.json, "machine-readable output");
        sub->callback([&surd_args, op] { surd_args.op = op; });
    }

    ScanArgs scan_args;
    CLI::App* scan = app.add_subcommand("scan", "arya-metre scansion report");
    scan->add_option("--format", scan_args.format, "lg or iast")
        ->required()
        ->check(CLI::IsMember({"lg", "iast"}));
    scan->add_option("--file", scan_args.file, "read the verse from a file");
    scan->add_option("text", scan_args.text, "verse text");
    scan->add_flag("--json", scan_args.flags.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        std::cout << "error: " << ex.what() << "\n";
        return kExitInvalidInput;
    }

    if (solve->parsed()) {
        return run_solve(solve_args);
    }
    if (compose->parsed()) {
        return run_compose(compose_args);
    }
    if (irr->parsed()) {
        return run_irr(irr_args);
    }
    if (surd->parsed()) {
        return run_surd(surd_args);
    }
    if (scan->parsed()) {
        return run_scan(scan_args);
    }
    return kExitInvalidInput;
}
