#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <divdiff/divdiff.hpp>

namespace {

using namespace divdiff;

std::string format_poly(const Polynomial& p, const std::string& format) {
    if (format == "text") return p.to_text();
    if (format == "latex") return p.to_latex();
    if (format == "json") return p.to_json();
    throw ParseError("unknown format: '" + format + "'");
}

void print_family_objects(FamilyKind kind, const WeakComposition& comp, int nvars) {
    switch (kind) {
        case FamilyKind::Fundamental:
            for (const SetSequence& s : enumerate_index_sequences(comp_stats(comp).flat, nvars))
                std::cout << s.to_string() << "\n";
            return;
        case FamilyKind::Multifundamental:
            for (const SetSequence& s : enumerate_set_sequences(comp_stats(comp).flat, nvars))
                std::cout << s.to_string() << "\n";
            return;
        case FamilyKind::Slide:
            for (const GlideWitness& w : enumerate_glides(comp))
                if (w.komp.excess() == 0) std::cout << w.to_string() << "\n";
            return;
        case FamilyKind::Glide:
            for (const GlideWitness& w : enumerate_glides(comp))
                std::cout << w.to_string() << "\n";
            return;
        case FamilyKind::Particle:
            for (const GlideWitness& w : enumerate_mesonic(comp))
                if (w.komp.excess() == 0) std::cout << w.to_string() << "\n";
            return;
        case FamilyKind::Kaon:
            for (const GlideWitness& w : enumerate_mesonic(comp))
                std::cout << w.to_string() << "\n";
            return;
        default:
            throw UnsupportedCombination(std::string(family_name(kind)) +
                                         " has no attached object enumeration");
    }
}

int run_compute(const std::string& family, const std::string& comp_str, int nvars,
                bool nvars_given, const std::string& format, bool show_objects) {
    FamilyKind kind = family_from_name(family);
    WeakComposition comp = parse_composition(comp_str);
    if (family_takes_nvars(kind) && !nvars_given)
        throw UnsupportedCombination(std::string(family_name(kind)) + " requires --nvars");
    if (!family_takes_nvars(kind) && nvars_given)
        throw UnsupportedCombination(std::string(family_name(kind)) +
                                     " does not accept --nvars; the composition length is the "
                                     "variable count");
    Polynomial p = compute_family(kind, comp, nvars_given ? nvars : 0);
    if (show_objects) print_family_objects(kind, comp, nvars_given ? nvars : 0);
    std::cout << format_poly(p, format) << "\n";
    return 0;
}

int run_apply(const std::string& op, const std::string& word_str, const std::string& monomial_str,
              const std::string& poly_str, int nvars, bool nvars_given,
              const std::string& format) {
    OperatorKind kind = kind_from_name(op);
    if (monomial_str.empty() == poly_str.empty())
        throw UnsupportedCombination("provide exactly one of --monomial and --poly");
    Polynomial f(1);
    if (!monomial_str.empty()) {
        WeakComposition exps = parse_composition(monomial_str);
        f = Polynomial::from_exponents(exps.parts);
    } else {
        f = Polynomial::from_json(poly_str);
    }
    if (nvars_given) f = f.embed(nvars);
    Word w = parse_word(word_str);
    Polynomial out = apply_word(kind, w, f);
    std::cout << format_poly(out, format) << "\n";
    return 0;
}

int run_verify(const std::string& suite_name, const SweepOptions& opt, bool as_json) {
    Suite suite = suite_from_name(suite_name);
    std::vector<CheckReport> reports = run_suite(suite, opt);
    int failures = 0;
    for (const CheckReport& r : reports)
        if (!r.pass) ++failures;
    if (as_json) {
        std::cout << reports_to_json(reports) << "\n";
    } else {
        for (const CheckReport& r : reports) std::cout << report_line(r) << "\n";
        std::cout << reports.size() << " checks, " << failures << " failed\n";
    }
    return failures ? 1 : 0;
}

int run_expand(const std::string& poly_str, const std::string& basis_name,
               const std::vector<std::string>& support_strs, int nvars, bool nvars_given,
               const std::string& format) {
    Polynomial f = Polynomial::from_json(poly_str);
    FamilyKind basis = family_from_name(basis_name);
    std::vector<WeakComposition> support;
    support.reserve(support_strs.size());
    for (const std::string& s : support_strs) support.push_back(parse_composition(s));
    std::vector<Rational> coeffs = expand_in_basis(f, basis, support, nvars_given ? nvars : 0);
    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (std::size_t t = 0; t < support.size(); ++t) {
            nlohmann::ordered_json o;
            o["comp"] = comp_to_string(support[t]);
            o["coeff"] = coeffs[t].str();
            arr.push_back(std::move(o));
        }
        std::cout << arr.dump(2) << "\n";
    } else if (format == "text") {
        for (std::size_t t = 0; t < support.size(); ++t)
            std::cout << comp_to_string(support[t]) << ": " << coeffs[t].str() << "\n";
    } else {
        throw ParseError("unknown format: '" + format + "'");
    }
    return 0;
}

int classify_errors(const std::function<int()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedCombination& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const VarCountMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IndexOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotReduced& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionUnmet& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact divided-difference operators and combinatorial polynomial families"};
    app.require_subcommand(1);

    std::string family, comp_str, format = "text";
    int nvars = 0;
    bool show_objects = false;
    CLI::App* compute = app.add_subcommand("compute", "Evaluate a polynomial family member");
    compute->add_option("--family", family,
                        "F|Fbar|slide|glide|particle|kaon|schur-via-pi|demazure-via-pi|"
                        "atom-via-theta")
        ->required();
    compute->add_option("--comp", comp_str, "composition, digits (021) or comma form (0,2,1)")
        ->required();
    CLI::Option* compute_nvars = compute->add_option("--nvars", nvars, "ambient variable count");
    compute->add_option("--format", format, "text|latex|json");
    compute->add_flag("--show-objects", show_objects, "list the combinatorial objects first");

    std::string op, word_str, monomial_str, poly_str, aformat = "text";
    int anvars = 0;
    CLI::App* apply_cmd = app.add_subcommand("apply", "Apply an operator composite to a polynomial");
    apply_cmd->add_option("--op", op, "swap|hswap|del|pi|theta|hdel|hpi|htheta|kpi|ktheta")
        ->required();
    apply_cmd->add_option("--word", word_str,
                          "comma-separated letters, rightmost applied first; empty = identity");
    apply_cmd->add_option("--monomial", monomial_str, "exponent vector, e.g. 2,1,0");
    apply_cmd->add_option("--poly", poly_str, "polynomial as JSON");
    CLI::Option* apply_nvars =
        apply_cmd->add_option("--nvars", anvars, "embed the input in this many variables");
    apply_cmd->add_option("--format", aformat, "text|latex|json");

    std::string suite_name;
    SweepOptions opt;
    bool as_json = false;
    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite_name, "main|hivert|classic|relations|lemma|local-moves|all")
        ->required();
    verify->add_option("--max-size", opt.max_size, "largest composition size swept")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--max-len", opt.max_len, "largest composition length swept")
        ->check(CLI::PositiveNumber);
    verify->add_option("--max-vars", opt.max_vars, "largest variable count swept")
        ->check(CLI::PositiveNumber);
    verify->add_option("--max-deg", opt.max_deg, "largest monomial degree in relation sweeps")
        ->check(CLI::PositiveNumber);
    verify->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--json", as_json, "emit reports as JSON");

    std::string epoly, basis_name, eformat = "text";
    std::vector<std::string> support_strs;
    int envars = 0;
    CLI::App* expand = app.add_subcommand("expand", "Expand a polynomial in a family basis");
    expand->add_option("--poly", epoly, "polynomial as JSON")->required();
    expand->add_option("--basis", basis_name, "family to expand in")->required();
    expand->add_option("--support", support_strs, "basis composition (repeatable)")
        ->required()
        ->take_all();
    CLI::Option* expand_nvars =
        expand->add_option("--nvars", envars, "ambient variable count for F/Fbar bases");
    expand->add_option("--format", eformat, "text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*compute)
        return classify_errors([&] {
            return run_compute(family, comp_str, nvars, compute_nvars->count() > 0, format,
                               show_objects);
        });
    if (*apply_cmd)
        return classify_errors([&] {
            return run_apply(op, word_str, monomial_str, poly_str, anvars,
                             apply_nvars->count() > 0, aformat);
        });
    if (*verify)
        return classify_errors([&] { return run_verify(suite_name, opt, as_json); });
    if (*expand)
        return classify_errors([&] {
            return run_expand(epoly, basis_name, support_strs, envars,
                              expand_nvars->count() > 0, eformat);
        });
    return 2;
}
