// Command-line front end: runs the verification suites and one-off operator
// applications with canonical-form output.

#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"

#include "cvf/expr.hpp"
#include "cvf/suites.hpp"

namespace {

int run_verify(const std::string& suite, const cvf::VerifyOptions& opt,
               const std::string& json_path, int jobs) {
    auto checks = cvf::build_suite(suite, opt);
    auto results = cvf::run_checks(checks, jobs);
    cvf::print_report(std::cout, results);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "cannot write " << json_path << "\n";
            return 3;
        }
        out << cvf::report_to_json(results, opt.seed);
    }
    int code = cvf::report_exit_code(results);
    if (code == 3) {
        for (const auto& r : results)
            if (r.internal_error)
                std::cerr << "internal error in check " << r.name << ": " << r.witness
                          << "\n";
    }
    return code;
}

int run_apply(const std::string& op_text, const std::string& fn_text,
              const std::string& basis_name, int degree_bound) {
    cvf::ParsedOperator op;
    cvf::ParsedFunction fn;
    try {
        op = cvf::parse_operator(op_text);
    } catch (const cvf::ParseError& e) {
        std::cerr << "operator expression error at position " << e.position() << ": "
                  << e.what() << "\n";
        return 2;
    }
    try {
        fn = cvf::parse_function(fn_text);
    } catch (const cvf::ParseError& e) {
        std::cerr << "function expression error at position " << e.position() << ": "
                  << e.what() << "\n";
        return 2;
    }

    cvf::ClassBasis basis = cvf::ClassBasis::I;
    if (basis_name == "J")
        basis = cvf::ClassBasis::J;
    else if (basis_name == "chi")
        basis = cvf::ClassBasis::Chi;
    else if (basis_name != "I") {
        std::cerr << "unknown basis '" << basis_name << "' (expected I, J or chi)\n";
        return 2;
    }

    int bound = degree_bound > 0 ? degree_bound : fn.tr_degree + op.degree_raise + 2;
    auto image = op.op.apply(fn.fn);
    try {
        if (fn.weight == 0) {
            auto form = cvf::restrict_to_torus(image, bound);
            std::cout << form.str(basis) << "\n";
        } else {
            auto form = cvf::reconstruct_borel(image, fn.weight, bound);
            std::cout << form.str() << "\n";
        }
    } catch (const cvf::DegreeOverflow& e) {
        std::cerr << e.what() << "; retry with --degree-bound "
                  << (bound + 4) << " or higher\n";
        return 3;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of conjugation-invariant vector field algebra on SL(n)"};
    app.require_subcommand(1);

    // verify
    std::string suite = "all";
    cvf::VerifyOptions opt;
    std::string json_path;
    int jobs = 0;
    auto* verify = app.add_subcommand("verify", "run a named check suite");
    verify->add_option("suite", suite, "one of: all, sln-commutators, sl2-witt, "
                                       "invariants-action, casimir, harmonic, circle, "
                                       "weyl-torus, flatness")
        ->check(CLI::IsMember(cvf::suite_names()));
    verify->add_option("--n", opt.n, "restrict SL(n) checks to one dimension (2..4)")
        ->check(CLI::Range(2, 4));
    verify->add_option("--max-k", opt.max_k, "field index bound")->check(CLI::Range(1, 16));
    verify->add_option("--max-m", opt.max_m, "tr-degree bound")->check(CLI::Range(0, 16));
    verify->add_option("--max-n", opt.max_n, "beta-weight bound")->check(CLI::Range(0, 16));
    verify->add_option("--samples", opt.samples, "sample count per pointwise identity")
        ->check(CLI::Range(1, 1000));
    verify->add_option("--seed", opt.seed, "sampling seed");
    verify->add_option("--height", opt.height, "sample entry height bound")
        ->check(CLI::Range(1, 100));
    verify->add_option("--json", json_path, "write the machine-readable report here");
    verify->add_option("--jobs", jobs, "max concurrent checks (0 = hardware)");
    verify->add_option("--inject-fault", opt.inject_fault,
                       "deliberately break one identity to exercise the failure path")
        ->check(CLI::IsMember({"psi3-sign"}));

    // apply
    std::string op_text, fn_text, basis = "I";
    int degree_bound = 0;
    auto* apply = app.add_subcommand("apply", "apply a field or operator expression to a "
                                              "function and print the canonical form");
    apply->add_option("operator", op_text, "e.g. \"Psi(1)\", \"Delta\", \"D\", "
                                           "\"J(1)*Psi(1)^2\"")
        ->required();
    apply->add_option("function", fn_text, "e.g. \"I(2)\", \"beta^2\", \"J(3) - 4*J(1)\"")
        ->required();
    apply->add_option("--basis", basis, "output basis for invariants: I, J or chi");
    apply->add_option("--degree-bound", degree_bound,
                      "override the inferred tr-degree bound for reconstruction");

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

    try {
        if (verify->parsed()) {
            if (jobs == 0) {
                unsigned hw = std::thread::hardware_concurrency();
                jobs = hw == 0 ? 2 : static_cast<int>(hw);
            }
            return run_verify(suite, opt, json_path, jobs);
        }
        return run_apply(op_text, fn_text, basis, degree_bound);
    } catch (const cvf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
