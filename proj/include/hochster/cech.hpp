#pragma once

// Brute-force graded pieces of the Cech complex of S/I. This path shares no
// logic with the degree-complex route apart from the rank routine: basis
// membership is tested from the exponents directly, over every subset of [n].

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hochster/linalg.hpp"
#include "hochster/monomial.hpp"
#include "hochster/simplicial.hpp"
#include "hochster/degree_complex.hpp"
#include "hochster/vertex_set.hpp"

namespace hochster {

/// Largest n the oracle accepts (it scans all 2^n subsets).
inline constexpr int kMaxOracleVariables = 20;

/// (C^t)_a for t = 0..n and the differentials between consecutive levels.
struct GradedCechPiece {
    MultiDegree a;
    /// basis_by_level[t]: admitted F with |F| = t, ascending bit pattern.
    std::vector<std::vector<VertexSet>> basis_by_level;
    /// differentials[t]: (C^t)_a -> (C^{t+1})_a, rows indexed by level t+1.
    std::vector<IntMatrix> differentials;
};

namespace detail {

// (R_x)_a is nonzero, x the product of the variables in F.
inline bool localization_piece_nonzero(const MonomialIdeal& ideal, const MultiDegree& a, VertexSet f) {
    const int n = ideal.num_vars();
    for (int j = 0; j < n; ++j) {
        if (a[j] < 0 && !f.contains(j)) {
            return false;
        }
    }
    for (const Monomial& u : ideal.generators()) {
        bool witnessed = false;
        for (int j = 0; j < n && !witnessed; ++j) {
            witnessed = !f.contains(j) && u[j] > a[j] && a[j] >= 0;
        }
        if (!witnessed) {
            return false;
        }
    }
    return true;
}

inline void check_oracle_size(int n) {
    if (n > kMaxOracleVariables) {
        throw std::invalid_argument("Cech oracle supports at most " + std::to_string(kMaxOracleVariables) +
                                    " variables");
    }
}

}  // namespace detail

/// Subsets F with |F| = t spanning (C^t)_a, ascending bit pattern.
inline std::vector<VertexSet> cech_basis(const MonomialIdeal& ideal, const MultiDegree& a, int t) {
    const int n = ideal.num_vars();
    detail::check_oracle_size(n);
    if (a.num_vars() != n) {
        throw std::invalid_argument("multidegree has wrong number of variables");
    }
    if (t < 0 || t > n) {
        throw std::out_of_range("Cech level out of range");
    }
    std::vector<VertexSet> out;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        const VertexSet f(bits);
        if (f.size() == t && detail::localization_piece_nonzero(ideal, a, f)) {
            out.push_back(f);
        }
    }
    return out;
}

/// Builds the degree-a piece. The differential sends b_F to
/// sum (-1)^s b_{F'} over admitted F' = F + {v}, s the position of v in F'.
inline GradedCechPiece graded_cech_piece(const MonomialIdeal& ideal, const MultiDegree& a) {
    const int n = ideal.num_vars();
    GradedCechPiece piece{a, {}, {}};
    for (int t = 0; t <= n; ++t) {
        piece.basis_by_level.push_back(cech_basis(ideal, a, t));
    }
    for (int t = 0; t < n; ++t) {
        const auto& source = piece.basis_by_level[static_cast<std::size_t>(t)];
        const auto& target = piece.basis_by_level[static_cast<std::size_t>(t + 1)];
        IntMatrix d(target.size(), source.size());
        for (std::size_t c = 0; c < source.size(); ++c) {
            for (std::size_t r = 0; r < target.size(); ++r) {
                if (!source[c].subset_of(target[r])) {
                    continue;
                }
                const VertexSet added = target[r] - source[c];
                const int s = target[r].position_of(added.max_element());
                d(r, c) = (s % 2 == 0) ? 1 : -1;
            }
        }
        piece.differentials.push_back(std::move(d));
    }
    return piece;
}

/// dim_K H^i((C^.)_a) for i = 0..n, i.e. dim_K H^i_m(S/I)_a.
inline std::vector<std::size_t> cech_cohomology_dims(const GradedCechPiece& piece, FieldSpec field) {
    const std::size_t levels = piece.basis_by_level.size();
    std::vector<std::size_t> ranks(levels, 0);  // ranks[t] = rank of d: C^t -> C^{t+1}
    for (std::size_t t = 0; t < piece.differentials.size(); ++t) {
        ranks[t] = rank(piece.differentials[t], field);
    }
    std::vector<std::size_t> dims(levels, 0);
    for (std::size_t t = 0; t < levels; ++t) {
        const std::size_t incoming = t == 0 ? 0 : ranks[t - 1];
        dims[t] = piece.basis_by_level[t].size() - ranks[t] - incoming;
    }
    return dims;
}

inline std::vector<std::size_t> cech_cohomology_dims(const MonomialIdeal& ideal, const MultiDegree& a,
                                                     FieldSpec field = {}) {
    return cech_cohomology_dims(graded_cech_piece(ideal, a), field);
}

struct DegreeComplexReport {
    bool ok = true;
    std::vector<std::size_t> cech_dims;
    /// dim reduced H_{i-|G_a|-1}(Delta_a), per i = 0..n.
    std::vector<std::size_t> simplicial_dims;
    std::vector<int> mismatched_indices;
};

/// Compares the Cech piece at a with the shifted reduced homology of Delta_a.
inline DegreeComplexReport verify_degree_complex(const MonomialIdeal& ideal, const MultiDegree& a, FieldSpec field = {}) {
    const int n = ideal.num_vars();
    DegreeComplexReport report;
    report.cech_dims = cech_cohomology_dims(ideal, a, field);
    report.simplicial_dims.assign(static_cast<std::size_t>(n + 1), 0);
    const SimplicialComplex complex = delta_a(ideal, a);
    if (!complex.is_void()) {
        const std::vector<std::size_t> homology = reduced_homology_dims(complex, field);
        const int shift = sign_split(a).negative.size() + 1;
        for (std::size_t slot = 0; slot < homology.size(); ++slot) {
            const int i = static_cast<int>(slot) - 1 + shift;
            if (i >= 0 && i <= n) {
                report.simplicial_dims[static_cast<std::size_t>(i)] = homology[slot];
            } else if (homology[slot] != 0) {
                report.ok = false;
            }
        }
    }
    for (int i = 0; i <= n; ++i) {
        if (report.cech_dims[static_cast<std::size_t>(i)] != report.simplicial_dims[static_cast<std::size_t>(i)]) {
            report.ok = false;
            report.mismatched_indices.push_back(i);
        }
    }
    return report;
}

}  // namespace hochster
