#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hochster/hochster.hpp"
#include "hochster/monomial.hpp"

namespace hochster {

/// Extremal total degree of a local cohomology module.
struct DegreeBound {
    enum class Kind { finite, minus_infinity, plus_infinity, unbounded_below };
    Kind kind = Kind::finite;
    long long value = 0;

    static DegreeBound finite(long long v) { return {Kind::finite, v}; }
    static DegreeBound minus_infinity() { return {Kind::minus_infinity, 0}; }
    static DegreeBound plus_infinity() { return {Kind::plus_infinity, 0}; }
    /// Nonzero in arbitrarily negative total degrees.
    static DegreeBound unbounded_below() { return {Kind::unbounded_below, 0}; }

    bool is_finite() const { return kind == Kind::finite; }
    friend bool operator==(const DegreeBound&, const DegreeBound&) = default;
};

inline std::string to_string(const DegreeBound& d) {
    switch (d.kind) {
        case DegreeBound::Kind::finite:
            return std::to_string(d.value);
        case DegreeBound::Kind::minus_infinity:
            return "-inf";
        case DegreeBound::Kind::plus_infinity:
            return "+inf";
        case DegreeBound::Kind::unbounded_below:
            return "-inf-unbounded";
    }
    return "?";
}

/// (a_i, b_i): largest and smallest total degree where H^i is nonzero.
/// An entry (F, b) realises every total degree <= sum(b) - |F|, unbounded
/// below when F is nonempty.
inline std::pair<DegreeBound, DegreeBound> ai_bi(const CohomologyTable& table, int i) {
    const std::vector<TableEntry> entries = table.entries_at(i);
    if (entries.empty()) {
        return {DegreeBound::minus_infinity(), DegreeBound::plus_infinity()};
    }
    long long top = entries.front().pattern.max_total_degree();
    long long bottom = top;
    bool unbounded = false;
    for (const TableEntry& e : entries) {
        top = std::max(top, e.pattern.max_total_degree());
        bottom = std::min(bottom, e.pattern.max_total_degree());
        unbounded = unbounded || !e.pattern.negative.empty();
    }
    return {DegreeBound::finite(top), unbounded ? DegreeBound::unbounded_below() : DegreeBound::finite(bottom)};
}

/// Least i with H^i nonzero.
inline int depth(const CohomologyTable& table) {
    if (table.entries().empty()) {
        throw std::logic_error("empty cohomology table");
    }
    return table.entries().front().index;
}

/// H^i has finite length for every i < d.
inline bool is_generalized_cm(const CohomologyTable& table, int d) {
    return std::all_of(table.entries().begin(), table.entries().end(),
                       [d](const TableEntry& e) { return e.index >= d || e.pattern.negative.empty(); });
}

inline bool is_cohen_macaulay(const CohomologyTable& table) {
    return std::all_of(table.entries().begin(), table.entries().end(),
                       [&](const TableEntry& e) { return e.index == table.krull_dim(); });
}

struct BuchsbaumBounds {
    /// sum_j rho_j - n + 1.
    long long global = 0;
    /// max_{i != d, H^i != 0} (a_i - b_i + 1), 1 when Cohen-Macaulay;
    /// nullopt unless generalized Cohen-Macaulay.
    std::optional<long long> refined;
};

inline BuchsbaumBounds buchsbaum_bounds(const MonomialIdeal& ideal, const CohomologyTable& table) {
    const std::vector<int> r = rho(ideal);
    BuchsbaumBounds out;
    out.global = std::accumulate(r.begin(), r.end(), 0LL) - ideal.num_vars() + 1;
    const int d = table.krull_dim();
    if (!is_generalized_cm(table, d)) {
        return out;
    }
    long long refined = 1;
    for (int i = 0; i <= table.num_vars(); ++i) {
        if (i == d) {
            continue;
        }
        const auto [a, b] = ai_bi(table, i);
        if (a.is_finite() && b.is_finite()) {
            refined = std::max(refined, a.value - b.value + 1);
        }
    }
    out.refined = refined;
    return out;
}

/// max{i + j : H^i_j != 0}.
inline long long regularity(const CohomologyTable& table) {
    if (table.entries().empty()) {
        throw std::logic_error("empty cohomology table");
    }
    long long reg = table.entries().front().index + table.entries().front().pattern.max_total_degree();
    for (const TableEntry& e : table.entries()) {
        reg = std::max(reg, e.index + e.pattern.max_total_degree());
    }
    return reg;
}

struct InvariantReport {
    int dim = 0;
    int depth = 0;
    std::vector<DegreeBound> a;  // indexed by i = 0..n
    std::vector<DegreeBound> b;
    bool generalized_cm = false;
    BuchsbaumBounds bounds;
    long long reg = 0;
};

inline InvariantReport compute_invariants(const MonomialIdeal& ideal, const CohomologyTable& table) {
    InvariantReport report;
    report.dim = table.krull_dim();
    report.depth = depth(table);
    for (int i = 0; i <= table.num_vars(); ++i) {
        auto [a, b] = ai_bi(table, i);
        report.a.push_back(a);
        report.b.push_back(b);
    }
    report.generalized_cm = is_generalized_cm(table, report.dim);
    report.bounds = buchsbaum_bounds(ideal, table);
    report.reg = regularity(table);
    return report;
}

// ---------------------------------------------------------------------------
// Corollary checks. Each is a theorem; a failure means an implementation bug.
// ---------------------------------------------------------------------------

struct CheckResult {
    std::string name;
    bool applicable = true;
    bool passed = true;
    std::string witness;
};

struct CorollaryReport {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }
};

inline std::string describe(const TableEntry& e) {
    return "i=" + std::to_string(e.index) + " F=" + to_string(e.pattern.negative) + " b=" +
           format_pattern_b(e.pattern) + " coeff=" + std::to_string(e.coefficient);
}

/// H^i = 0 for q <= i < d, the vanishing range for ideals with a q-linear
/// resolution (q is caller-supplied metadata).
inline CheckResult check_linear_resolution_vanishing(const CohomologyTable& table, int q) {
    CheckResult c{"q-linear resolution: H^i = 0 for q <= i < d", true, true, {}};
    for (const TableEntry& e : table.entries()) {
        if (e.index >= q && e.index < table.krull_dim()) {
            c.passed = false;
            c.witness = describe(e);
            break;
        }
    }
    return c;
}

inline CorollaryReport check_corollaries(const MonomialIdeal& ideal, const CohomologyTable& table) {
    CorollaryReport report;
    const std::vector<int> r = rho(ideal);
    const long long top_bound = std::accumulate(r.begin(), r.end(), 0LL) - ideal.num_vars();
    const int d = table.krull_dim();
    const bool gen_cm = is_generalized_cm(table, d);

    auto scan = [&](CheckResult c, auto&& violates) {
        if (c.applicable) {
            for (const TableEntry& e : table.entries()) {
                if (violates(e)) {
                    c.passed = false;
                    c.witness = describe(e);
                    break;
                }
            }
        }
        report.checks.push_back(std::move(c));
    };

    scan(CheckResult{"a_i <= sum(rho) - n", true, true, {}},
         [&](const TableEntry& e) { return e.pattern.max_total_degree() > top_bound; });
    scan(CheckResult{"square-free: a_i <= 0", ideal.is_squarefree(), true, {}},
         [&](const TableEntry& e) { return e.pattern.max_total_degree() > 0; });
    scan(CheckResult{"generalized CM: b_i >= 0 for i < d", gen_cm, true, {}}, [&](const TableEntry& e) {
        return e.index < d && (!e.pattern.negative.empty() || e.pattern.max_total_degree() < 0);
    });

    if (!table.entries().empty()) {
        const long long reg = regularity(table);
        scan(CheckResult{"generalized CM: H^i = 0 for reg+1 <= i < d", gen_cm, true, {}},
             [&](const TableEntry& e) { return e.index >= reg + 1 && e.index < d; });
    }

    const BuchsbaumBounds bounds = buchsbaum_bounds(ideal, table);
    CheckResult refined{"generalized CM, not CM: refined bound <= global bound",
                        gen_cm && !is_cohen_macaulay(table), true, {}};
    if (refined.applicable && *bounds.refined > bounds.global) {
        refined.passed = false;
        refined.witness = "refined=" + std::to_string(*bounds.refined) + " global=" + std::to_string(bounds.global);
    }
    report.checks.push_back(std::move(refined));

    CheckResult top{"H^d != 0", true, !table.entries_at(d).empty(), {}};
    if (!top.passed) {
        top.witness = "d=" + std::to_string(d);
    }
    report.checks.push_back(std::move(top));

    if (!table.entries().empty()) {
        CheckResult order{"depth <= dim", true, depth(table) <= d, {}};
        report.checks.push_back(std::move(order));
    }
    return report;
}

}  // namespace hochster
