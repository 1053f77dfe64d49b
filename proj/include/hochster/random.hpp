#pragma once

// Seeded random corpora. std::mt19937_64 is fully specified by the standard,
// and draws are mapped to ranges by `draw % range` (no std distributions,
// whose output is implementation-defined), so a seed names the same corpus on
// every platform.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "hochster/monomial.hpp"
#include "hochster/simplicial.hpp"

namespace hochster {

struct RandomIdealParams {
    int max_vars = 4;
    int max_generators = 5;
    int max_exponent = 3;
};

/// Parameters of the square-free corpus.
inline constexpr RandomIdealParams kSquarefreeParams{6, 5, 1};

class CorpusGenerator {
public:
    explicit CorpusGenerator(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi].
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// n uniform in 1..max_vars, generator count uniform in 1..max_generators,
    /// each exponent uniform in 0..max_exponent. A generator that comes out
    /// as the constant 1 is redrawn.
    MonomialIdeal ideal(const RandomIdealParams& params) {
        const int n = uniform(1, params.max_vars);
        const int count = uniform(1, params.max_generators);
        std::vector<Monomial> gens;
        for (int g = 0; g < count; ++g) {
            std::vector<int> e;
            do {
                e.assign(static_cast<std::size_t>(n), 0);
                for (int& x : e) {
                    x = uniform(0, params.max_exponent);
                }
            } while (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }));
            gens.emplace_back(std::move(e));
        }
        return MonomialIdeal(n, std::move(gens));
    }

    /// n uniform in 1..max_vertices; up to max_facets random subsets (possibly
    /// empty) generate the complex. With probability 1/16 the void complex.
    SimplicialComplex complex(int max_vertices, int max_facets) {
        const int n = uniform(1, max_vertices);
        if (uniform(0, 15) == 0) {
            return SimplicialComplex::void_complex(n);
        }
        const int count = uniform(1, max_facets);
        std::vector<VertexSet> facets;
        for (int f = 0; f < count; ++f) {
            facets.emplace_back(engine_() & VertexSet::full(n).bits());
        }
        return SimplicialComplex::generated_by(n, facets);
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

inline std::vector<MonomialIdeal> random_ideals(std::uint64_t seed, int count, const RandomIdealParams& params = {}) {
    CorpusGenerator gen(seed);
    std::vector<MonomialIdeal> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        out.push_back(gen.ideal(params));
    }
    return out;
}

}  // namespace hochster
