#pragma once

// Batch commands behind the `hochster` executable. Each command writes its
// result to `out`, diagnostics to `err`, and returns the process exit code:
// 0 success, 1 verification mismatch, 2 input error, 3 resource cap.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hochster/cech.hpp"
#include "hochster/errors.hpp"
#include "hochster/hochster.hpp"
#include "hochster/invariants.hpp"
#include "hochster/monomial.hpp"
#include "hochster/random.hpp"
#include "hochster/substitution.hpp"

namespace hochster {

enum class ExitCode : int { success = 0, mismatch = 1, input_error = 2, resource_cap = 3 };

enum class OutputFormat { pretty, tsv };

struct RunConfig {
    FieldSpec field;
    std::optional<int> max_i;
    std::size_t pattern_cap = kDefaultPatternCap;
    OutputFormat format = OutputFormat::pretty;
    std::uint64_t seed = 0;
    /// Oracle windows cover a_j in [-window, rho_j].
    int window = 2;
    /// 0 means hardware concurrency.
    unsigned threads = 1;

    void validate() const {
        if (pattern_cap < 1) {
            throw std::invalid_argument("pattern cap must be >= 1");
        }
        if (window < 1) {
            throw std::invalid_argument("window must be >= 1");
        }
    }
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline MonomialIdeal load_ideal(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot read " + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_ideal(text.str());
}

namespace detail {

template <class Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::resource_cap);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::input_error);
    }
}

inline int max_index(const RunConfig& config, int n) { return config.max_i ? std::min(*config.max_i, n) : n; }

inline TableOptions table_options(const RunConfig& config) { return TableOptions{config.pattern_cap, config.threads}; }

inline std::string format_degree(const MultiDegree& a) {
    std::string out = "(";
    for (int j = 0; j < a.num_vars(); ++j) {
        out += (j ? "," : "") + std::to_string(a[j]);
    }
    return out + ")";
}

/// Every a with -window <= a_j <= rho_j, last coordinate fastest.
inline std::vector<MultiDegree> oracle_window(const std::vector<int>& rho, int window, std::size_t cap) {
    const int n = static_cast<int>(rho.size());
    std::size_t count = 1;
    for (int r : rho) {
        const auto width = static_cast<std::size_t>(r + window + 1);
        if (count > cap / width) {
            throw ResourceLimitError("oracle window exceeds cap of " + std::to_string(cap));
        }
        count *= width;
    }
    std::vector<MultiDegree> out;
    out.reserve(count);
    std::vector<int> a(static_cast<std::size_t>(n), -window);
    while (true) {
        out.emplace_back(a);
        int k = n - 1;
        for (; k >= 0; --k) {
            auto& slot = a[static_cast<std::size_t>(k)];
            if (slot < rho[static_cast<std::size_t>(k)]) {
                ++slot;
                break;
            }
            slot = -window;
        }
        if (k < 0) {
            break;
        }
    }
    return out;
}

}  // namespace detail

struct VerifyOutcome {
    std::size_t mismatches = 0;
    std::size_t degrees_checked = 0;
};

/// Formula table vs. Cech oracle and Delta_a homology vs. Cech oracle over
/// the whole window; square-free inputs also compare the classical table.
/// Writes one line per mismatch.
inline VerifyOutcome verify_ideal(const MonomialIdeal& ideal, const RunConfig& config, std::ostream& out,
                                  bool announce_classical) {
    VerifyOutcome outcome;
    const CohomologyTable table = cohomology_table(ideal, config.field, detail::table_options(config));
    const int n = ideal.num_vars();
    for (const MultiDegree& a : detail::oracle_window(rho(ideal), config.window, config.pattern_cap)) {
        const DegreeComplexReport check = verify_degree_complex(ideal, a, config.field);
        for (int i : check.mismatched_indices) {
            out << "degree complex mismatch a=" << detail::format_degree(a) << " i=" << i
                << " cech=" << check.cech_dims[static_cast<std::size_t>(i)]
                << " simplicial=" << check.simplicial_dims[static_cast<std::size_t>(i)] << '\n';
            ++outcome.mismatches;
        }
        for (int i = 0; i <= n; ++i) {
            const std::uint64_t formula = coefficient_at(table, i, a);
            const std::uint64_t oracle = check.cech_dims[static_cast<std::size_t>(i)];
            if (formula != oracle) {
                out << "mismatch a=" << detail::format_degree(a) << " i=" << i << " formula=" << formula
                    << " oracle=" << oracle << '\n';
                ++outcome.mismatches;
            }
        }
        ++outcome.degrees_checked;
    }
    if (ideal.is_squarefree()) {
        const CohomologyTable classical = classical_hochster(ideal, config.field);
        if (classical.entries() != table.entries()) {
            out << "classical = generalized: FAIL\n";
            ++outcome.mismatches;
        } else if (announce_classical) {
            out << "classical = generalized: PASS\n";
        }
    }
    return outcome;
}

inline int cmd_series(const std::string& path, const RunConfig& config, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        config.validate();
        const MonomialIdeal ideal = load_ideal(path);
        const CohomologyTable table = cohomology_table(ideal, config.field, detail::table_options(config));
        const int top = detail::max_index(config, ideal.num_vars());
        out << (config.format == OutputFormat::tsv ? format_table_tsv(table, top) : format_all_series(table, top));
        return static_cast<int>(ExitCode::success);
    });
}

inline int cmd_table(const std::string& path, const RunConfig& config, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        config.validate();
        const MonomialIdeal ideal = load_ideal(path);
        const CohomologyTable table = cohomology_table(ideal, config.field, detail::table_options(config));
        out << format_table_tsv(table, detail::max_index(config, ideal.num_vars()));
        return static_cast<int>(ExitCode::success);
    });
}

inline void write_invariants(const InvariantReport& report, const CorollaryReport& checks, int top,
                             OutputFormat format, std::ostream& out) {
    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("dim", std::to_string(report.dim));
    rows.emplace_back("depth", std::to_string(report.depth));
    for (int i = 0; i <= top; ++i) {
        rows.emplace_back("a_" + std::to_string(i), to_string(report.a[static_cast<std::size_t>(i)]));
        rows.emplace_back("b_" + std::to_string(i), to_string(report.b[static_cast<std::size_t>(i)]));
    }
    rows.emplace_back("generalized_cm", report.generalized_cm ? "true" : "false");
    rows.emplace_back("buchsbaum_bound_global", std::to_string(report.bounds.global));
    rows.emplace_back("buchsbaum_bound_refined",
                      report.bounds.refined ? std::to_string(*report.bounds.refined) : "undefined");
    rows.emplace_back("reg", std::to_string(report.reg));
    for (const CheckResult& c : checks.checks) {
        std::string verdict = !c.applicable ? "n/a" : (c.passed ? "PASS" : "FAIL");
        if (!c.witness.empty()) {
            verdict += " (" + c.witness + ")";
        }
        rows.emplace_back("check: " + c.name, verdict);
    }
    if (format == OutputFormat::tsv) {
        for (const auto& [key, value] : rows) {
            out << key << '\t' << value << '\n';
        }
        return;
    }
    std::size_t width = 0;
    for (const auto& row : rows) {
        width = std::max(width, row.first.size());
    }
    for (const auto& [key, value] : rows) {
        out << std::left << std::setw(static_cast<int>(width + 2)) << key << value << '\n';
    }
}

inline int cmd_invariants(const std::string& path, const RunConfig& config, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        config.validate();
        const MonomialIdeal ideal = load_ideal(path);
        const CohomologyTable table = cohomology_table(ideal, config.field, detail::table_options(config));
        const InvariantReport report = compute_invariants(ideal, table);
        const CorollaryReport checks = check_corollaries(ideal, table);
        write_invariants(report, checks, detail::max_index(config, ideal.num_vars()), config.format, out);
        return static_cast<int>(checks.all_passed() ? ExitCode::success : ExitCode::mismatch);
    });
}

inline int cmd_verify_file(const std::string& path, const RunConfig& config, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        config.validate();
        const MonomialIdeal ideal = load_ideal(path);
        const VerifyOutcome outcome = verify_ideal(ideal, config, out, true);
        return static_cast<int>(outcome.mismatches == 0 ? ExitCode::success : ExitCode::mismatch);
    });
}

/// Verifies `count` ideals drawn from the default random corpus with config.seed.
inline int cmd_verify_random(int count, const RunConfig& config, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        config.validate();
        if (count < 0) {
            throw std::invalid_argument("random count must be nonnegative");
        }
        std::size_t failures = 0;
        int k = 0;
        for (const MonomialIdeal& ideal : random_ideals(config.seed, count)) {
            std::ostringstream lines;
            if (verify_ideal(ideal, config, lines, false).mismatches != 0) {
                ++failures;
                std::string text = format_ideal(ideal);
                std::replace(text.begin(), text.end(), '\n', ' ');
                out << "ideal #" << k << ": " << text << '\n' << lines.str();
            }
            ++k;
        }
        return static_cast<int>(failures == 0 ? ExitCode::success : ExitCode::mismatch);
    });
}

inline int cmd_phi(const std::string& path, const std::vector<int>& exponents, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        const MonomialIdeal ideal = load_ideal(path);
        out << format_ideal(phi_ideal(ideal, SubstitutionMap(exponents)));
        return static_cast<int>(ExitCode::success);
    });
}

}  // namespace hochster
