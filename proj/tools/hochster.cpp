#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hochster/commands.hpp"

int main(int argc, char** argv) {
    using namespace hochster;

    CLI::App app{"Multigraded Hilbert series of local cohomology of monomial ideals"};
    app.require_subcommand(1);

    RunConfig config;
    std::uint64_t characteristic = 0;
    int max_i = -1;
    std::string format = "pretty";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--char", characteristic, "field characteristic (0 or a prime)");
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"pretty", "tsv"}));
        sub->add_option("--cap", config.pattern_cap, "maximum number of degree patterns")->check(CLI::PositiveNumber);
        sub->add_option("--threads", config.threads, "worker threads (0 = all cores)");
        sub->add_option("--max-i", max_i, "largest cohomological index to report")->check(CLI::NonNegativeNumber);
    };

    std::string file;
    int random_count = -1;
    std::vector<int> exponents;

    auto* series = app.add_subcommand("series", "print the Hilbert series of every H^i");
    series->add_option("file", file, "ideal file")->required();
    add_common(series);

    auto* table = app.add_subcommand("table", "export the cohomology table as TSV");
    table->add_option("file", file, "ideal file")->required();
    add_common(table);

    auto* invariants = app.add_subcommand("invariants", "dimension, depth, a_i/b_i, Buchsbaum bounds, regularity");
    invariants->add_option("file", file, "ideal file")->required();
    add_common(invariants);

    auto* verify = app.add_subcommand("verify", "check the formula against the Cech complex");
    auto* verify_file = verify->add_option("file", file, "ideal file");
    auto* verify_random = verify->add_option("--random", random_count, "verify N seeded random ideals")
                              ->check(CLI::NonNegativeNumber);
    verify_file->excludes(verify_random);
    verify->add_option("--seed", config.seed, "seed for --random");
    verify->add_option("--window", config.window, "negative depth of the degree window")->check(CLI::PositiveNumber);
    add_common(verify);

    auto* phi = app.add_subcommand("phi", "apply x_i -> x_i^{e_i} and print the ideal");
    phi->add_option("file", file, "ideal file")->required();
    phi->add_option("--exp", exponents, "exponents e1,...,en")->delimiter(',')->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(ExitCode::input_error);
    }

    try {
        config.field = FieldSpec(characteristic);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::input_error);
    }
    if (max_i >= 0) {
        config.max_i = max_i;
    }
    config.format = format == "tsv" ? OutputFormat::tsv : OutputFormat::pretty;

    if (*series) {
        return cmd_series(file, config, std::cout, std::cerr);
    }
    if (*table) {
        return cmd_table(file, config, std::cout, std::cerr);
    }
    if (*invariants) {
        return cmd_invariants(file, config, std::cout, std::cerr);
    }
    if (*verify) {
        if (random_count >= 0) {
            return cmd_verify_random(random_count, config, std::cout, std::cerr);
        }
        if (file.empty()) {
            std::cerr << "error: verify needs an ideal file or --random N\n";
            return static_cast<int>(ExitCode::input_error);
        }
        return cmd_verify_file(file, config, std::cout, std::cerr);
    }
    return cmd_phi(file, exponents, std::cout, std::cerr);
}
