#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hochster/hochster.hpp"
#include "hochster/invariants.hpp"
#include "hochster/monomial.hpp"

namespace hochster {

/// The ring map x_i -> x_i^{e_i}, every e_i >= 1.
class SubstitutionMap {
public:
    explicit SubstitutionMap(std::vector<int> exponents) : exponents_(std::move(exponents)) {
        check_ambient(static_cast<int>(exponents_.size()));
        for (int e : exponents_) {
            if (e < 1) {
                throw std::invalid_argument("substitution exponents must be >= 1");
            }
        }
    }
    static SubstitutionMap identity(int n) { return SubstitutionMap(std::vector<int>(static_cast<std::size_t>(n), 1)); }

    int num_vars() const { return static_cast<int>(exponents_.size()); }
    const std::vector<int>& exponents() const { return exponents_; }
    int operator[](int j) const { return exponents_[static_cast<std::size_t>(j)]; }
    long long sum() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0LL); }

private:
    std::vector<int> exponents_;
};

/// phi(I): every generator's exponents scaled coordinatewise.
inline MonomialIdeal phi_ideal(const MonomialIdeal& ideal, const SubstitutionMap& phi) {
    if (phi.num_vars() != ideal.num_vars()) {
        throw std::invalid_argument("substitution map has wrong number of variables");
    }
    std::vector<Monomial> gens;
    for (const Monomial& u : ideal.generators()) {
        std::vector<int> e(static_cast<std::size_t>(ideal.num_vars()));
        for (int j = 0; j < ideal.num_vars(); ++j) {
            const long long scaled = static_cast<long long>(u[j]) * phi[j];
            if (scaled > std::numeric_limits<int>::max()) {
                throw std::overflow_error("substituted exponent too large");
            }
            e[static_cast<std::size_t>(j)] = static_cast<int>(scaled);
        }
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(ideal.num_vars(), std::move(gens));
}

/// Predicted series of H^i(S/phi(I)) for i with multiplicity m_i: m_i copies of
/// the Hilbert series of S/(x_1^{e_1}, ..., x_n^{e_n}), i.e. coefficient m_i
/// at every (emptyset, b) with 0 <= b_j < e_j. Indexed like `multiplicities`.
inline std::vector<SeriesExpr> expected_phi_series(const std::vector<std::uint64_t>& multiplicities,
                                                   const SubstitutionMap& phi) {
    const int n = phi.num_vars();
    std::vector<SeriesExpr> out(multiplicities.size());
    for (std::size_t i = 0; i < multiplicities.size(); ++i) {
        if (multiplicities[i] == 0) {
            continue;
        }
        std::vector<int> b(static_cast<std::size_t>(n), 0);
        while (true) {
            out[i].terms.push_back(SeriesTerm{multiplicities[i], b, VertexSet{}});
            int k = n - 1;
            for (; k >= 0; --k) {
                auto& slot = b[static_cast<std::size_t>(k)];
                if (slot + 1 < phi[k]) {
                    ++slot;
                    break;
                }
                slot = 0;
            }
            if (k < 0) {
                break;
            }
        }
    }
    return out;
}

/// Multiplicities m_i (i < d) of a square-free table whose lower cohomology
/// sits in degree 0 only; nullopt if some entry with i < d is not at (emptyset, 0).
inline std::optional<std::vector<std::uint64_t>> degree_zero_multiplicities(const CohomologyTable& table) {
    std::vector<std::uint64_t> m(static_cast<std::size_t>(table.krull_dim()), 0);
    for (const TableEntry& e : table.entries()) {
        if (e.index >= table.krull_dim()) {
            continue;
        }
        if (!e.pattern.negative.empty() || e.pattern.max_total_degree() != 0) {
            return std::nullopt;
        }
        m[static_cast<std::size_t>(e.index)] = e.coefficient;
    }
    return m;
}

struct StrictnessReport {
    bool ok = false;
    std::string message;
    int witness_index = -1;
    /// a_i - b_i + 1 of phi(I) at the witness index.
    long long span = 0;
    /// sum(phi) - n + 1.
    long long predicted = 0;
    /// sum(rho(phi(I))) - n + 1.
    long long global_bound = 0;
};

/// Checks that the degree span of the substituted cohomology attains the
/// global Buchsbaum bound. `ideal` must be square-free with its lower
/// cohomology concentrated in degree 0; `phi_table` is the table of phi(I).
inline StrictnessReport strictness_witness(const MonomialIdeal& ideal, const SubstitutionMap& phi,
                                           const CohomologyTable& phi_table, FieldSpec field = {}) {
    StrictnessReport report;
    const int n = ideal.num_vars();
    report.predicted = phi.sum() - n + 1;
    report.global_bound = buchsbaum_bounds(phi_ideal(ideal, phi), phi_table).global;
    if (!ideal.is_squarefree()) {
        report.message = "input ideal is not square-free";
        return report;
    }
    const CohomologyTable base = cohomology_table(ideal, field);
    const auto multiplicities = degree_zero_multiplicities(base);
    if (!multiplicities) {
        report.message = "lower cohomology of the input is not concentrated in degree 0";
        return report;
    }
    for (std::size_t i = 0; i < multiplicities->size(); ++i) {
        if ((*multiplicities)[i] != 0) {
            report.witness_index = static_cast<int>(i);
            break;
        }
    }
    if (report.witness_index < 0) {
        report.message = "input is Cohen-Macaulay: no lower cohomology to witness";
        return report;
    }
    const auto [a, b] = ai_bi(phi_table, report.witness_index);
    if (!a.is_finite() || !b.is_finite()) {
        report.message = "substituted cohomology at the witness index is not of finite length";
        return report;
    }
    report.span = a.value - b.value + 1;
    report.ok = report.span == report.predicted && report.span == report.global_bound;
    report.message = report.ok ? "bound attained" : "degree span differs from the bound";
    return report;
}

}  // namespace hochster
