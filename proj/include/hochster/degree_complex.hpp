#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "hochster/errors.hpp"
#include "hochster/monomial.hpp"
#include "hochster/simplicial.hpp"
#include "hochster/vertex_set.hpp"

namespace hochster {

/// Default cap on the number of degree patterns of one ideal.
inline constexpr std::size_t kDefaultPatternCap = 10'000'000;

/// Finite index of the local cohomology series: the negative support F and the
/// nonnegative part b of a multidegree. It stands for every a with G_a = F and
/// a_j = b_j off F. `b` has full length n and is 0 on F.
struct DegreePattern {
    VertexSet negative;
    std::vector<int> b;

    long long max_total_degree() const {
        long long sum = -static_cast<long long>(negative.size());
        for (int v : b) {
            sum += v;
        }
        return sum;
    }

    friend bool operator==(const DegreePattern&, const DegreePattern&) = default;
};

/// Enumeration order: |F|, then F as a bit pattern, then b lexicographically.
struct PatternLess {
    bool operator()(const DegreePattern& x, const DegreePattern& y) const {
        if (x.negative.size() != y.negative.size()) {
            return x.negative.size() < y.negative.size();
        }
        if (x.negative != y.negative) {
            return x.negative.bits() < y.negative.bits();
        }
        return x.b < y.b;
    }
};

/// The multidegree with -1 on F and b elsewhere.
inline MultiDegree pattern_to_representative(const DegreePattern& p) {
    std::vector<int> a = p.b;
    for (int j : p.negative.members()) {
        a[static_cast<std::size_t>(j)] = -1;
    }
    return MultiDegree(std::move(a));
}

/// The pattern of a multidegree: (G_a, a with zeros on G_a).
inline DegreePattern pattern_of(const MultiDegree& a) {
    DegreePattern p{sign_split(a).negative, std::vector<int>(a.entries().begin(), a.entries().end())};
    for (int j : p.negative.members()) {
        p.b[static_cast<std::size_t>(j)] = 0;
    }
    return p;
}

/// The degree complex of I at a: all F - G_a where F contains G_a and every
/// generator u has some j outside F with u_j > a_j >= 0.
///
/// Equivalently, the subsets L of [n] - G_a containing none of the sets
/// {j : u_j > a_j >= 0}; void when one of those sets is empty.
inline SimplicialComplex delta_a(const MonomialIdeal& ideal, const MultiDegree& a,
                                 std::size_t face_cap = kDefaultFaceCap) {
    const int n = ideal.num_vars();
    if (a.num_vars() != n) {
        throw std::invalid_argument("multidegree has wrong number of variables");
    }
    const VertexSet negative = sign_split(a).negative;
    std::vector<VertexSet> blockers;
    blockers.reserve(ideal.generators().size());
    for (const Monomial& u : ideal.generators()) {
        VertexSet m;
        for (int j = 0; j < n; ++j) {
            if (a[j] >= 0 && u[j] > a[j]) {
                m = m.with(j);
            }
        }
        blockers.push_back(m);
    }
    return blocker_complex(n, VertexSet::full(n) - negative, blockers, face_cap);
}

/// Stanley-Reisner complex of the radical.
inline SimplicialComplex radical_complex(const MonomialIdeal& ideal, std::size_t face_cap = kDefaultFaceCap) {
    return complex_of_squarefree(radical(ideal), face_cap);
}

/// Faces of the complex ordered by (|F|, bit pattern).
inline std::vector<VertexSet> faces_in_pattern_order(const SimplicialComplex& complex) {
    std::vector<VertexSet> faces = complex.faces();
    std::sort(faces.begin(), faces.end(), [](VertexSet x, VertexSet y) {
        return x.size() != y.size() ? x.size() < y.size() : x.bits() < y.bits();
    });
    return faces;
}

/// Number of patterns with negative support F: prod_{j not in F} rho_j.
/// Saturates at SIZE_MAX.
inline std::size_t box_size(VertexSet f, const std::vector<int>& rho) {
    std::size_t count = 1;
    for (std::size_t j = 0; j < rho.size(); ++j) {
        if (f.contains(static_cast<int>(j))) {
            continue;
        }
        const auto r = static_cast<std::size_t>(rho[j]);
        if (r == 0) {
            return 0;
        }
        if (count > std::numeric_limits<std::size_t>::max() / r) {
            return std::numeric_limits<std::size_t>::max();
        }
        count *= r;
    }
    return count;
}

/// Every pattern (F, b) with F a face of the radical's complex and
/// 0 <= b_j <= rho_j - 1 off F, in PatternLess order. Faces whose box is empty
/// (rho_j = 0 for some j outside F) contribute nothing.
/// Throws ResourceLimitError past `cap` patterns.
inline std::vector<DegreePattern> enumerate_patterns(const MonomialIdeal& ideal,
                                                     std::size_t cap = kDefaultPatternCap) {
    const int n = ideal.num_vars();
    const std::vector<int> r = rho(ideal);
    const std::vector<VertexSet> faces = faces_in_pattern_order(radical_complex(ideal, cap));

    std::size_t total = 0;
    for (VertexSet f : faces) {
        const std::size_t box = box_size(f, r);
        if (box > cap - total) {
            throw ResourceLimitError("degree pattern count exceeds cap of " + std::to_string(cap));
        }
        total += box;
    }

    std::vector<DegreePattern> out;
    out.reserve(total);
    for (VertexSet f : faces) {
        if (box_size(f, r) == 0) {
            continue;
        }
        std::vector<int> free;
        for (int j = 0; j < n; ++j) {
            if (!f.contains(j)) {
                free.push_back(j);
            }
        }
        std::vector<int> b(static_cast<std::size_t>(n), 0);
        // Odometer with the last free variable fastest: lexicographic order.
        while (true) {
            out.push_back(DegreePattern{f, b});
            auto k = static_cast<std::ptrdiff_t>(free.size()) - 1;
            for (; k >= 0; --k) {
                const auto j = static_cast<std::size_t>(free[static_cast<std::size_t>(k)]);
                if (b[j] + 1 < r[j]) {
                    ++b[j];
                    break;
                }
                b[j] = 0;
            }
            if (k < 0) {
                break;
            }
        }
    }
    return out;
}

}  // namespace hochster
