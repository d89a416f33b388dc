#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Unit-fraction decompositions of 4/n over quadratic integer rings"};
    app.require_subcommand(1);
    app.fallthrough();

    quadfrac::cli::CommonOptions common;
    app.add_flag("--pretty", common.pretty, "Human-readable output instead of JSON lines");

    long d = 0;
    std::string element;
    bool pad_three = false;
    auto* dec = app.add_subcommand("decompose", "Decompose 4/n into at most three unit fractions");
    dec->add_option("--d", d, "Ring discriminant parameter")->required();
    dec->add_option("element", element, "Element text, e.g. \"1+2*w\"")->required();
    dec->add_flag("--pad-three", pad_three, "Pad to exactly three terms via 1/x = 1/(2x) + 1/(2x)");

    std::vector<std::string> terms;
    auto* ver = app.add_subcommand("verify", "Exactly verify that unit fractions sum to 4/n");
    ver->add_option("--d", d, "Ring discriminant parameter")->required();
    ver->add_option("element", element, "Element n")->required();
    ver->add_option("terms", terms, "Denominators (negative sign goes into the denominator)")
        ->required()
        ->expected(1, 3);

    int max_power = 50;
    std::string max_coord = "1000000";
    auto* pell = app.add_subcommand("pell", "Two-term identity for 4 in D[d], d > 0");
    pell->add_option("--d", d, "Positive squarefree d")->required();
    pell->add_option("--power-bound", max_power, "Pell power bound (default 50)");
    pell->add_option("--coord-bound", max_coord, "omega-coordinate bound (default 10^6)");

    std::string norm_bound = "10000", den_bound = "10000";
    bool conjecture = false;
    int jobs = 1;
    auto* scan = app.add_subcommand("scan", "Exhaustive decomposition / conjecture scans");
    scan->add_option("--d", d, "Ring discriminant parameter")->required();
    scan->add_option("--norm-bound", norm_bound, "Scan all n with 1 <= N(n) <= bound");
    scan->add_flag("--conjecture", conjecture, "Cone-restricted conjecture scan (d = -1)");
    scan->add_option("--den-bound", den_bound, "Denominator norm bound for conjecture scans");
    scan->add_option("--jobs", jobs, "Worker threads (capped by QUADFRAC_JOBS)");

    CLI11_PARSE(app, argc, argv);

    if (dec->parsed()) {
        return quadfrac::cli::cmd_decompose(std::cout, std::cerr, d, element, pad_three, common);
    }
    if (ver->parsed()) {
        return quadfrac::cli::cmd_verify(std::cout, std::cerr, d, element, terms, common);
    }
    if (pell->parsed()) {
        return quadfrac::cli::cmd_pell(std::cout, std::cerr, d, max_power, max_coord, common);
    }
    return quadfrac::cli::cmd_scan(std::cout, std::cerr, d, norm_bound, conjecture, den_bound, jobs,
                                   common);
}
