#include "catch_amalgamated.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hochster/commands.hpp"

using namespace hochster;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("hochster_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

template <class Fn>
Run run(Fn&& fn) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = fn(out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("series command", "[cli]") {
    const std::string worked = write_temp("worked.txt", "n=2\nx1^2, x1*x2\n");
    RunConfig config;
    Run r = run([&](auto& o, auto& e) { return cmd_series(worked, config, o, e); });
    CHECK(r.code == 0);
    CHECK(r.out == "H^0: 1*t1\nH^1: 1*t2^-1/(1-t2^-1)\n");

    const std::string zero = write_temp("zero.txt", "n=2\n0\n");
    r = run([&](auto& o, auto& e) { return cmd_series(zero, config, o, e); });
    CHECK(r.out == "H^2: 1*t1^-1/(1-t1^-1)*t2^-1/(1-t2^-1)\n");

    const std::string unit = write_temp("unit.txt", "n=1\n1\n");
    r = run([&](auto& o, auto& e) { return cmd_series(unit, config, o, e); });
    CHECK(r.code == 2);
    CHECK(r.err.find("unit ideal") != std::string::npos);

    const std::string broken = write_temp("broken.txt", "n=2\nx1^\n");
    r = run([&](auto& o, auto& e) { return cmd_series(broken, config, o, e); });
    CHECK(r.code == 2);
    CHECK(r.err.find("offset") != std::string::npos);

    r = run([&](auto& o, auto& e) { return cmd_series("/nonexistent/ideal.txt", config, o, e); });
    CHECK(r.code == 2);

    config.pattern_cap = 3;
    r = run([&](auto& o, auto& e) { return cmd_series(worked, config, o, e); });
    CHECK(r.code == 3);

    config = RunConfig{};
    config.max_i = 0;
    r = run([&](auto& o, auto& e) { return cmd_series(worked, config, o, e); });
    CHECK(r.out == "H^0: 1*t1\n");
}

TEST_CASE("table command", "[cli]") {
    const std::string worked = write_temp("worked.txt", "n=2\nx1^2, x1*x2\n");
    const Run r = run([&](auto& o, auto& e) { return cmd_table(worked, RunConfig{}, o, e); });
    CHECK(r.code == 0);
    CHECK(r.out == "0\t0\t1,0\t1\n1\t2\t0,*\t1\n");
}

TEST_CASE("invariants command", "[cli]") {
    RunConfig config;
    config.format = OutputFormat::tsv;
    const std::string worked = write_temp("worked.txt", "n=2\nx1^2, x1*x2\n");
    Run r = run([&](auto& o, auto& e) { return cmd_invariants(worked, config, o, e); });
    CHECK(r.code == 0);
    CHECK(r.out.find("dim\t1\n") != std::string::npos);
    CHECK(r.out.find("depth\t0\n") != std::string::npos);
    CHECK(r.out.find("generalized_cm\ttrue\n") != std::string::npos);
    CHECK(r.out.find("buchsbaum_bound_global\t2\n") != std::string::npos);
    CHECK(r.out.find("buchsbaum_bound_refined\t1\n") != std::string::npos);
    CHECK(r.out.find("reg\t1\n") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    const std::string zero = write_temp("zero3.txt", "n=3\n0\n");
    r = run([&](auto& o, auto& e) { return cmd_invariants(zero, config, o, e); });
    CHECK(r.out.find("dim\t3\n") != std::string::npos);
    CHECK(r.out.find("depth\t3\n") != std::string::npos);
    CHECK(r.out.find("reg\t0\n") != std::string::npos);

    const std::string mixed = write_temp("mixed.txt", "n=3\nx1*x2, x1*x3\n");
    r = run([&](auto& o, auto& e) { return cmd_invariants(mixed, config, o, e); });
    CHECK(r.out.find("generalized_cm\tfalse\n") != std::string::npos);
    CHECK(r.out.find("buchsbaum_bound_refined\tundefined\n") != std::string::npos);

    config.format = OutputFormat::pretty;
    r = run([&](auto& o, auto& e) { return cmd_invariants(worked, config, o, e); });
    CHECK(r.out.rfind("dim ", 0) == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("verify command", "[cli]") {
    RunConfig config;
    const std::string worked = write_temp("worked.txt", "n=2\nx1^2, x1*x2\n");
    Run r = run([&](auto& o, auto& e) { return cmd_verify_file(worked, config, o, e); });
    CHECK(r.code == 0);
    CHECK(r.out.empty());

    const std::string edges = write_temp("edges.txt", "n=4\nx1*x3, x1*x4, x2*x3, x2*x4\n");
    r = run([&](auto& o, auto& e) { return cmd_verify_file(edges, config, o, e); });
    CHECK(r.code == 0);
    CHECK(r.out == "classical = generalized: PASS\n");

    config.seed = 42;
    r = run([&](auto& o, auto& e) { return cmd_verify_random(20, config, o, e); });
    CHECK(r.code == 0);
    CHECK(r.out.empty());

    config.window = 0;
    r = run([&](auto& o, auto& e) { return cmd_verify_file(worked, config, o, e); });
    CHECK(r.code == 2);
}

TEST_CASE("phi command round-trips through the parser", "[cli]") {
    const std::string edges = write_temp("edges.txt", "n=4\nx1*x3, x1*x4, x2*x3, x2*x4\n");
    Run r = run([&](auto& o, auto& e) { return cmd_phi(edges, {2, 1, 1, 1}, o, e); });
    CHECK(r.code == 0);
    CHECK(r.out == "n=4\nx1^2*x3, x1^2*x4, x2*x3, x2*x4\n");
    CHECK(parse_ideal(r.out) == parse_ideal("n=4; x1^2*x3, x1^2*x4, x2*x3, x2*x4"));

    r = run([&](auto& o, auto& e) { return cmd_phi(edges, {2, 1}, o, e); });
    CHECK(r.code == 2);
    r = run([&](auto& o, auto& e) { return cmd_phi(edges, {0, 1, 1, 1}, o, e); });
    CHECK(r.code == 2);
}

TEST_CASE("oracle window enumeration", "[cli]") {
    const auto window = detail::oracle_window({1, 0}, 2, 1000);
    CHECK(window.size() == 4 * 3);
    CHECK(window.front() == MultiDegree({-2, -2}));
    CHECK(window.back() == MultiDegree({1, 0}));
    CHECK_THROWS_AS(detail::oracle_window({3, 3, 3}, 2, 100), ResourceLimitError);
}
