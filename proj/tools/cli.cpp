#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cauchy/functions.hpp>
#include <cauchy/interval_eval.hpp>
#include <cauchy/pi01.hpp>
#include <cauchy/prover.hpp>

namespace cauchy::cli
{

namespace
{

using nlohmann::json;

// Domain-safe expressions exercised by `selftest`.
const char *const selftest_corpus[] = {
    "0",
    "1 + 2 * 3",
    "1/3",
    "0.1 + 0.2",
    "pi",
    "-pi / 7",
    "exp(1)",
    "exp(0 - 3.5)",
    "exp(pi) - pi",
    "sin(1)",
    "cos(1)",
    "sin(pi)",
    "cos(pi / 3)",
    "sin(100)",
    "tan(1)",
    "tan(0.5) * cos(0.5)",
    "ln(2)",
    "ln(0.001)",
    "ln(exp(2))",
    "exp(ln(3))",
    "(1 + 1/7) * (2 - 1/9)",
    "sin(1)*sin(1) + cos(1)*cos(1)",
    "1 / (pi - 3)",
    "ln(1 + sin(0.25)) / exp(0.125)",
};

json dyadic_json(const Dyadic &d) { return {{"m", d.mantissa().get_str()}, {"e", d.exponent()}}; }

json interval_json(const Interval &i) { return {{"lower", dyadic_json(i.lower)}, {"upper", dyadic_json(i.upper)}}; }

std::string verdict_key(Verdict v)
{
    switch (v) {
    case Verdict::proved:
        return "proved";
    case Verdict::refuted:
        return "refuted";
    case Verdict::exhausted:
        return "exhausted";
    }
    return "?";
}

// Accepts "p", "p/q" and "a.b"; the value must be positive.
mpq_class parse_positive_rational(const std::string &text)
{
    mpq_class q;
    const auto dot = text.find('.');
    const auto valid = [](const std::string &s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '/'; });
    };
    if (dot != std::string::npos) {
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        const std::string digits = whole + frac;
        if (!valid(digits) || digits.find('/') != std::string::npos) {
            throw std::invalid_argument("not a rational: " + text);
        }
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        q = mpq_class(mpz_class(digits, 10), den);
    } else {
        if (!valid(text) || text.front() == '/' || text.back() == '/' ||
            std::count(text.begin(), text.end(), '/') > 1) {
            throw std::invalid_argument("not a rational: " + text);
        }
        q = mpq_class(text, 10);
        if (q.get_den() == 0) {
            throw std::invalid_argument("zero denominator: " + text);
        }
    }
    q.canonicalize();
    if (q <= 0) {
        throw std::invalid_argument("epsilon must be positive: " + text);
    }
    return q;
}

// Smallest k >= 1 with 2^-k <= eps.
Precision precision_for_epsilon(const mpq_class &eps)
{
    Precision k = 1;
    mpq_class step(1, 2);
    while (step > eps) {
        step /= 2;
        if (++k > max_supported_precision) {
            throw ResourceLimit("--start-eps is below 2^-" + std::to_string(max_supported_precision));
        }
    }
    return k;
}

Precision precision_for_digits(int digits)
{
    mpz_class ten_d;
    mpz_ui_pow_ui(ten_d.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    return static_cast<Precision>(mpz_sizeinbase(ten_d.get_mpz_t(), 2)) + 2;
}

void report_parse_error(const ParseError &e, const std::string &input, std::ostream &err)
{
    err << "error: " << e.what() << "\n";
    err << "  " << input << "\n";
    err << "  " << std::string(std::min(e.position(), input.size()), ' ') << "^\n";
}


int emit_error(const std::string &command, const std::string &kind, const std::string &message, bool json_mode,
               std::ostream &out, std::optional<std::size_t> position = std::nullopt)
{
    if (json_mode) {
        json j{{"command", command}, {"error", {{"kind", kind}, {"message", message}}}};
        if (position) {
            j["error"]["position"] = *position;
        }
        out << j.dump() << "\n";
    }
    return exit_error;
}

// Runs `body`, mapping library exceptions to exit code 3 with a diagnostic.
template <class F>
int guarded(const std::string &command, const std::string &input, bool json_mode, std::ostream &out,
            std::ostream &err, F &&body)
{
    try {
        return body();
    } catch (const ParseError &e) {
        report_parse_error(e, input, err);
        return emit_error(command, "ParseError", e.what(), json_mode, out, e.position());
    } catch (const DomainViolation &e) {
        const bool ok = revalidate(e.operand(), e.certificate());
        err << "error: " << e.what() << "\n";
        err << "  certificate: negative at precision " << e.certificate().precision
            << (ok ? " (revalidated)" : " (REVALIDATION FAILED)") << "\n";
        if (json_mode) {
            json j{{"command", command},
                   {"error",
                    {{"kind", "DomainViolation"},
                     {"message", e.what()},
                     {"certificate",
                      {{"sign", "negative"}, {"precision", e.certificate().precision}, {"revalidated", ok}}}}}};
            out << j.dump() << "\n";
        }
        return exit_error;
    } catch (const DomainUnverifiable &e) {
        err << "error: " << e.what() << "\n";
        return emit_error(command, "DomainUnverifiable", e.what(), json_mode, out);
    } catch (const IntervalDomainViolation &e) {
        err << "error: " << e.what() << "\n";
        return emit_error(command, "DomainViolation", e.what(), json_mode, out);
    } catch (const ResourceLimit &e) {
        err << "error: " << e.what() << "\n";
        return emit_error(command, "ResourceLimit", e.what(), json_mode, out);
    } catch (const BackendDisagreement &e) {
        err << "error: " << e.what() << "\n";
        return emit_error(command, "BackendDisagreement", e.what(), json_mode, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return emit_error(command, "Error", e.what(), json_mode, out);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return emit_error(command, "InvalidArgument", e.what(), json_mode, out);
    }
}

int exit_code_for(Verdict v)
{
    switch (v) {
    case Verdict::proved:
        return exit_ok;
    case Verdict::refuted:
        return exit_refuted;
    case Verdict::exhausted:
        return exit_exhausted;
    }
    return exit_error;
}

void print_outcome_human(const ProofOutcome &o, bool with_trace, std::ostream &out, const std::string &label = "")
{
    if (o.verdict == Verdict::exhausted) {
        out << label << "Exhausted at precision 2^-" << o.precision << " (enclosures still overlap; nothing is claimed)\n";
    } else {
        out << label << to_string(o.verdict) << " at precision 2^-" << o.precision << "\n";
    }
    if (!o.trace.empty()) {
        out << "  lhs in " << o.lhs_enclosure().to_string() << "\n";
        out << "  rhs in " << o.rhs_enclosure().to_string() << "\n";
    }
    if (with_trace) {
        for (const auto &s : o.trace) {
            out << "  k=" << s.precision << " lhs=" << s.lhs.to_string() << " rhs=" << s.rhs.to_string() << "\n";
        }
    }
}

json outcome_json(const ProofOutcome &o, bool with_trace)
{
    json j{{"verdict", verdict_key(o.verdict)}, {"precision", o.precision}};
    if (!o.trace.empty()) {
        j["lhs_enclosure"] = interval_json(o.lhs_enclosure());
        j["rhs_enclosure"] = interval_json(o.rhs_enclosure());
    }
    if (with_trace) {
        j["trace"] = json::parse(trace_to_json(o.trace));
    }
    return j;
}

int do_prove(const std::string &input, const std::string &start_eps, Precision max_k, Backend backend,
             bool with_trace, bool json_mode, std::ostream &out, std::ostream &err)
{
    return guarded("prove", input, json_mode, out, err, [&] {
        ProveOptions opts;
        opts.start_k = precision_for_epsilon(parse_positive_rational(start_eps));
        opts.max_k = max_k;
        opts.backend = backend;
        if (opts.start_k > opts.max_k) {
            throw std::invalid_argument("start precision 2^-" + std::to_string(opts.start_k) +
                                        " exceeds --max-prec " + std::to_string(max_k));
        }
        const Query q = parse_query(input);
        const ProveResult r = prove(q, opts);
        if (json_mode) {
            json j{{"command", "prove"}, {"query", print(q)}, {"backend", std::string(to_string(backend))}};
            j.update(outcome_json(r.outcome, with_trace));
            if (r.cross_check) {
                j["cross_check"] = outcome_json(*r.cross_check, with_trace);
            }
            out << j.dump() << "\n";
        } else {
            print_outcome_human(r.outcome, with_trace, out);
            if (r.cross_check) {
                print_outcome_human(*r.cross_check, with_trace, out, "cross-check (interval): ");
            }
        }
        return exit_code_for(r.outcome.verdict);
    });
}

int do_eval(const std::string &input, int digits, bool json_mode, std::ostream &out, std::ostream &err)
{
    return guarded("eval", input, json_mode, out, err, [&] {
        if (digits < 1 || digits > 100000) {
            throw std::invalid_argument("--digits must be between 1 and 100000");
        }
        const Precision k = precision_for_digits(digits);
        const ExprPtr e = parse_expression(input);
        const Dyadic q = elaborate(*e).approx(k);
        const std::string text = q.to_decimal_string(digits);
        if (json_mode) {
            out << json{{"command", "eval"}, {"expression", print(*e)}, {"digits", digits}, {"precision", k},
                        {"value", text}}
                       .dump()
                << "\n";
        } else {
            out << text << "\n";
        }
        return exit_ok;
    });
}

int do_pi01(const std::string &input, Precision max_k, bool json_mode, std::ostream &out, std::ostream &err)
{
    return guarded("pi01", input, json_mode, out, err, [&] {
        const Pi01Pred p = Pi01Pred::parse(input);
        const Pi01Result r = pi01_decide(p, 1, max_k);
        if (const auto *c = std::get_if<Counterexample>(&r)) {
            if (json_mode) {
                out << json{{"command", "pi01"}, {"predicate", p.source()}, {"result", "counterexample"},
                            {"n", c->n}, {"precision", c->evidence.precision}}
                           .dump()
                    << "\n";
            } else {
                out << "Counterexample: n = " << c->n << "\n";
                out << "  S < 2 proved at precision 2^-" << c->evidence.precision << "\n";
            }
            return exit_ok;
        }
        const auto &b = std::get<NoCounterexampleBelowBound>(r);
        if (json_mode) {
            out << json{{"command", "pi01"}, {"predicate", p.source()}, {"result", "no_counterexample_below_bound"},
                        {"max_precision", b.max_precision}}
                       .dump()
                << "\n";
        } else {
            out << "NoCounterexampleBelowBound: S and 2 not separated up to precision 2^-" << b.max_precision
                << " (this does not prove the predicate for every n)\n";
        }
        return exit_exhausted;
    });
}

int do_selftest(const std::vector<Precision> &precisions, std::ostream &out, std::ostream &err)
{
    int failures = 0;
    std::size_t checks = 0;
    for (const char *src : selftest_corpus) {
        const ExprPtr e = parse_expression(src);
        for (Precision k : precisions) {
            ++checks;
            try {
                const ConformanceReport rep = conformance_check(*e, k);
                if (!rep.pass) {
                    ++failures;
                    err << "conformance FAIL: " << src << ": " << rep.to_string() << "\n";
                }
            } catch (const Error &ex) {
                ++failures;
                err << "conformance ERROR: " << src << " at k=" << k << ": " << ex.what() << "\n";
            }
        }
    }
    out << "conformance: " << (checks - failures) << "/" << checks << " passed\n";

    const Dyadic machin = pi(PiMethod::machin).approx(100);
    const Dyadic cosit = pi(PiMethod::cos_iteration).approx(100);
    const bool pi_fine = (machin - cosit).abs() <= Dyadic::pow2(-99);
    const bool pi_coarse = (pi(PiMethod::leibniz).approx(10) - pi(PiMethod::machin).approx(10)).abs() <= Dyadic::pow2(-9);
    out << "pi machin vs cos_iteration at 2^-100: " << (pi_fine ? "agree" : "DISAGREE") << "\n";
    out << "pi machin vs leibniz at 2^-10: " << (pi_coarse ? "agree" : "DISAGREE") << "\n";
    failures += pi_fine ? 0 : 1;
    failures += pi_coarse ? 0 : 1;
    out << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
    return failures == 0 ? exit_ok : exit_refuted;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact real arithmetic and strict-inequality prover", "cauchy"};
    app.require_subcommand(1);

    std::string input;
    bool json_mode = false;

    auto *prove_cmd = app.add_subcommand("prove", "Semi-decide a strict inequality");
    std::string start_eps = "1";
    Precision prove_max = 4096;
    std::string backend_name = "creal";
    bool with_trace = false;
    prove_cmd->add_option("query", input, "Inequality, e.g. \"exp(pi) - pi < 20\"")->required();
    prove_cmd->add_option("--start-eps", start_eps, "Starting tolerance as a positive rational (e.g. 1, 1/1024, 0.001)");
    prove_cmd->add_option("--max-prec", prove_max, "Give up after precision 2^-K")
        ->check(CLI::Range(Precision{0}, max_supported_precision));
    prove_cmd->add_option("--backend", backend_name, "creal | interval | both")
        ->check(CLI::IsMember({"creal", "interval", "both"}));
    prove_cmd->add_flag("--trace", with_trace, "Print every visited precision");
    prove_cmd->add_flag("--json", json_mode, "Machine-readable output");

    auto *eval_cmd = app.add_subcommand("eval", "Evaluate an expression to D certified decimal digits");
    int digits = 0;
    eval_cmd->add_option("expr", input, "Expression")->required();
    eval_cmd->add_option("--digits", digits, "Digits after the decimal point")->required();
    eval_cmd->add_flag("--json", json_mode, "Machine-readable output");

    auto *pi01_cmd = app.add_subcommand("pi01", "Search for a counterexample to forall n. P(n)");
    Precision pi01_max = 256;
    pi01_cmd->add_option("predicate", input, "Predicate in n, e.g. \"n*n != 49\"")->required();
    pi01_cmd->add_option("--max-prec", pi01_max, "Give up after precision 2^-K")
        ->check(CLI::Range(Precision{1}, Precision{1} << 20));
    pi01_cmd->add_flag("--json", json_mode, "Machine-readable output");

    auto *self_cmd = app.add_subcommand("selftest", "Cross-backend conformance and pi agreement checks");
    std::vector<Precision> prec_list{4, 10, 20, 40};
    self_cmd->add_option("--prec-list", prec_list, "Precisions for the conformance corpus")
        ->check(CLI::Range(Precision{0}, Precision{4096}));

    // There are no short options besides -h, so "-cos(1)" or "-1 < 0" is an
    // expression. A leading blank keeps CLI11 from reading it as a flag and is
    // ignored by both parsers.
    std::vector<std::string> reversed;
    for (auto it = args.rbegin(); it != args.rend(); ++it) {
        const bool negative_expr = it->size() > 1 && (*it)[0] == '-' && (*it)[1] != '-' && *it != "-h";
        reversed.push_back(negative_expr ? " " + *it : *it);
    }
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_error;
    }

    if (*prove_cmd) {
        const Backend backend = backend_name == "interval" ? Backend::interval
                                : backend_name == "both"   ? Backend::both
                                                           : Backend::creal;
        return do_prove(input, start_eps, prove_max, backend, with_trace, json_mode, out, err);
    }
    if (*eval_cmd) {
        return do_eval(input, digits, json_mode, out, err);
    }
    if (*pi01_cmd) {
        return do_pi01(input, pi01_max, json_mode, out, err);
    }
    return do_selftest(prec_list, out, err);
}

} // namespace cauchy::cli
