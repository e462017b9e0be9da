// Batch verification driver: runs verifier suites over case files and prints
// machine-readable reports.  Exit status: 0 all pass, 1 any fail, 2 any
// indeterminate without fails, 3 parse errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wildram/dimone.hpp"
#include "wildram/invariants.hpp"
#include "wildram/parse.hpp"
#include "wildram/suites.hpp"
#include "wildram/tateoort.hpp"

using namespace wildram;

namespace {

int cmd_verify(const std::string& file, const std::string& builtin,
               const std::vector<std::string>& suites, std::optional<std::uint32_t> precision,
               std::optional<std::uint32_t> length_cap, std::optional<std::uint32_t> degree_cap,
               std::optional<std::uint64_t> seed, const std::string& out, bool timings)
{
    CaseSpec cs;
    try {
        if (!builtin.empty()) {
            auto b = builtin_case(builtin);
            if (!b) {
                std::cerr << "unknown built-in case '" << builtin << "'; available:";
                for (const auto& n : builtin_case_names())
                    std::cerr << " " << n;
                std::cerr << "\n";
                return 3;
            }
            cs = *b;
        } else if (!file.empty()) {
            std::ifstream in(file);
            if (!in) {
                std::cerr << "cannot open case file " << file << "\n";
                return 3;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            cs = case_from_json(buf.str());
        } else {
            std::cerr << "verify needs a case file or --case NAME\n";
            return 3;
        }
        if (!suites.empty())
            cs.suites = suites;
        if (precision)
            cs.precision = *precision;
        if (length_cap)
            cs.length_cap = *length_cap;
        if (degree_cap)
            cs.degree_cap = *degree_cap;
        if (seed)
            cs.seed = *seed;
        cs.validate();
    } catch (const std::exception& e) {
        std::cerr << "case error: " << e.what() << "\n";
        return 3;
    }

    Report rep;
    try {
        rep = run_case(cs);
    } catch (const parse_error& e) {
        std::cerr << "polynomial parse error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::string json = report_to_json(rep, cs, timings);
    if (!out.empty()) {
        std::ofstream of(out);
        if (!of) {
            std::cerr << "cannot write " << out << "\n";
            return 1;
        }
        of << json;
    } else {
        std::cout << json;
    }
    for (const auto& c : rep.checks)
        std::cerr << "[" << verdict_name(c.verdict) << "] " << c.id
                  << (c.witness.empty() ? "" : "  (" + c.witness + ")") << "\n";
    return rep.exit_code();
}

int cmd_edim(std::uint32_t p, std::uint32_t n)
{
    try {
        EdimRecord r = edim_formulas(p, n);
        std::cout << "p = " << p << ", n = " << n << "\n";
        std::cout << "edim (2n-variable invariant ring) = " << r.edim_b << "\n";
        std::cout << "edim (A^G)                        = " << r.edim_ag << "\n";
        std::cout << "relevant tuples                   = " << relevant_count_formula(p, n)
                  << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

int cmd_break(std::uint32_t p, std::uint32_t r, std::optional<std::uint32_t> i,
              const std::string& f_text, std::uint32_t precision)
{
    try {
        RingPtr rx = make_ring(p, {"x"});
        Poly f = parse_poly(f_text, rx);
        if (i.has_value()) {
            std::uint32_t mu = break_via_valuation(*i, r, f, p);
            std::cout << "valuation break for mu = p r - i: " << mu << "\n";
        } else {
            LocalAutomorphism sigma = build_moderate_presentation(r, f, p, precision);
            auto m = ramification_break(sigma);
            std::cout << "presentation break: " << (m ? std::to_string(*m) : "indeterminate")
                      << "\n";
            if (m) {
                auto me = effective_model_exponent(*m, p);
                std::cout << "effective model exponent r = " << me.r << ", i = " << me.i
                          << (me.torsor ? " (torsor)" : " (not a torsor)") << "\n";
            }
        }
    } catch (const parse_error& e) {
        std::cerr << "polynomial parse error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int cmd_tate_oort(std::uint32_t p)
{
    try {
        AxiomReport r = verify_group_axioms(TateOortGroup::symbolic(p));
        std::cout << "p = " << p << "\n";
        std::cout << "closure:       " << (r.closure ? "pass" : "fail") << "\n";
        std::cout << "associativity: " << (r.associativity ? "pass" : "fail") << "\n";
        std::cout << "neutral:       " << (r.neutral ? "pass" : "fail") << "\n";
        std::cout << "inverse:       " << (r.inverse ? "pass" : "fail") << "\n";
        return r.ok() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact verifier for wildly ramified order-p actions on power series rings"};
    app.require_subcommand(1);

    // verify
    std::string file, builtin, out;
    std::vector<std::string> suites;
    std::optional<std::uint32_t> precision, length_cap, degree_cap;
    std::optional<std::uint64_t> seed;
    bool timings = false;
    auto* verify = app.add_subcommand("verify", "run verifier suites over a case");
    verify->add_option("file", file, "case file (JSON)");
    verify->add_option("--case", builtin, "built-in case name");
    verify->add_option("--suite", suites, "suite selector (repeatable)");
    verify->add_option("--precision", precision, "series precision");
    verify->add_option("--length-cap", length_cap, "length stabilization cap");
    verify->add_option("--degree-cap", degree_cap, "graded table degree cap");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--out", out, "write the JSON report to a file");
    verify->add_flag("--timings", timings, "include per-check timings in the report");

    // edim
    std::uint32_t ep = 2, en = 2;
    auto* edim = app.add_subcommand("edim", "print the embedding-dimension formulas");
    edim->add_option("--p", ep, "prime")->required();
    edim->add_option("--n", en, "dimension")->required();

    // break
    std::uint32_t bp = 2, br = 1, bprec = 48;
    std::optional<std::uint32_t> bi;
    std::string bf = "1";
    auto* brk = app.add_subcommand("break", "dimension-one ramification computations");
    brk->add_option("--p", bp, "prime")->required();
    brk->add_option("--r", br, "exponent r")->required();
    brk->add_option("--i", bi, "offset i (valuation route when given)");
    brk->add_option("--f", bf, "unit power series f(x), f(0) != 0");
    brk->add_option("--precision", bprec, "series precision");

    // tate-oort
    std::uint32_t tp = 2;
    auto* to = app.add_subcommand("tate-oort", "symbolic group-axiom sweep");
    to->add_option("--p", tp, "prime")->required();

    CLI11_PARSE(app, argc, argv);

    if (verify->parsed())
        return cmd_verify(file, builtin, suites, precision, length_cap, degree_cap, seed, out,
                          timings);
    if (edim->parsed())
        return cmd_edim(ep, en);
    if (brk->parsed())
        return cmd_break(bp, br, bi, bf, bprec);
    if (to->parsed())
        return cmd_tate_oort(tp);
    return 3;
}
