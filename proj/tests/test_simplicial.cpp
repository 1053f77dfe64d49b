#include "catch_amalgamated.hpp"

#include <algorithm>

#include "hochster/random.hpp"
#include "hochster/simplicial.hpp"
#include "support.hpp"

using namespace hochster;
using namespace hochster::testing;

namespace {

std::vector<VertexSet> sorted_faces(const SimplicialComplex& c) {
    std::vector<VertexSet> f = c.faces();
    std::sort(f.begin(), f.end(), BitPatternLess{});
    return f;
}

std::vector<VertexSet> sorted(std::vector<VertexSet> f) {
    std::sort(f.begin(), f.end(), BitPatternLess{});
    return f;
}

// Disjoint edges {1,2} and {3,4}.
SimplicialComplex two_edges() { return SimplicialComplex::generated_by(4, {set({1, 2}), set({3, 4})}); }

}  // namespace

TEST_CASE("lexicographic face order", "[simplicial]") {
    CHECK(LexLess{}(set({1, 4}), set({2, 3})));
    CHECK_FALSE(LexLess{}(set({2, 3}), set({1, 4})));
    CHECK(LexLess{}(set({1, 2}), set({1, 3})));
    CHECK_FALSE(LexLess{}(set({1, 3}), set({1, 3})));
    const SimplicialComplex c = SimplicialComplex::simplex(4, set({1, 2, 3, 4}));
    const auto edges = c.faces_of_dimension(1);
    CHECK(std::vector<VertexSet>(edges.begin(), edges.end()) ==
          std::vector<VertexSet>{set({1, 2}), set({1, 3}), set({1, 4}), set({2, 3}), set({2, 4}), set({3, 4})});
}

TEST_CASE("from_faces rejects families not closed under subsets", "[simplicial]") {
    CHECK_THROWS_AS(SimplicialComplex::from_faces(2, {VertexSet{}, set({1, 2})}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex::from_faces(2, {set({1})}), std::invalid_argument);
    CHECK(SimplicialComplex::from_faces(2, {VertexSet{}, set({1}), set({1})}).num_faces() == 2);
    CHECK(SimplicialComplex::from_faces(2, {}).is_void());
}

TEST_CASE("complex_of_squarefree", "[simplicial]") {
    CHECK(sorted_faces(complex_of_squarefree(ideal("n=2; x1"))) == std::vector<VertexSet>{VertexSet{}, set({2})});

    const SimplicialComplex boundary = complex_of_squarefree(ideal("n=3; x1*x2*x3"));
    CHECK(boundary.num_faces() == 7);
    CHECK_FALSE(boundary.contains(set({1, 2, 3})));
    CHECK(boundary.dimension() == 1);

    CHECK(sorted_faces(complex_of_squarefree(MonomialIdeal::zero(2))) ==
          sorted({VertexSet{}, set({1}), set({2}), set({1, 2})}));

    CHECK(sorted_faces(complex_of_squarefree(two_disjoint_edges())) == sorted_faces(two_edges()));
    CHECK_THROWS_AS(complex_of_squarefree(ideal("n=2; x1^2")), std::invalid_argument);
}

TEST_CASE("link and star", "[simplicial]") {
    const SimplicialComplex c = two_edges();
    CHECK(link(c, VertexSet{}) == c);
    CHECK(sorted_faces(link(c, set({1}))) == std::vector<VertexSet>{VertexSet{}, set({2})});
    CHECK(link(c, set({1, 3})).is_void());

    CHECK(star(c, VertexSet{}) == c);
    CHECK(sorted_faces(star(c, set({1}))) == sorted({VertexSet{}, set({1}), set({2}), set({1, 2})}));
    CHECK(star(c, set({1, 3})).is_void());
    CHECK(link(c, set({1})).num_vertices() == 4);
}

TEST_CASE("boundary matrices", "[simplicial]") {
    const SimplicialComplex points = SimplicialComplex::generated_by(2, {set({1}), set({2})});
    const IntMatrix d0 = boundary_matrix(points, 0);
    CHECK(d0.rows() == 1);
    CHECK(d0.cols() == 2);
    CHECK(d0(0, 0) == 1);
    CHECK(d0(0, 1) == 1);

    const SimplicialComplex triangle = complex_of_squarefree(ideal("n=3; x1*x2*x3"));
    const IntMatrix d1 = boundary_matrix(triangle, 1);
    CHECK(d1.rows() == 3);
    CHECK(d1.cols() == 3);
    CHECK(rank(d1, FieldSpec()) == 2);
    // edge {1,2} -> {2} - {1}
    CHECK(d1(0, 0) == -1);
    CHECK(d1(1, 0) == 1);

    CHECK_THROWS_AS(boundary_matrix(triangle, 2), std::out_of_range);
    CHECK_THROWS_AS(boundary_matrix(triangle, -2), std::out_of_range);
    CHECK(boundary_matrix(triangle, -1).rows() == 0);
    CHECK(boundary_matrix(triangle, -1).cols() == 1);
}

TEST_CASE("reduced homology conventions", "[simplicial]") {
    CHECK(reduced_homology_dims(SimplicialComplex::empty_face_only(3), FieldSpec()) == std::vector<std::size_t>{1});
    CHECK(reduced_homology_dims(SimplicialComplex::void_complex(3), FieldSpec()) == std::vector<std::size_t>{0});
    CHECK(reduced_homology_dims(two_edges(), FieldSpec()) == std::vector<std::size_t>{0, 1, 0});
    CHECK(reduced_homology_dims(complex_of_squarefree(ideal("n=3; x1*x2*x3")), FieldSpec()) ==
          std::vector<std::size_t>{0, 0, 1});
}

TEST_CASE("projective plane homology depends on the field", "[simplicial]") {
    const SimplicialComplex rp2 = complex_of_squarefree(projective_plane());
    REQUIRE(rp2.faces_of_dimension(2).size() == 10);
    REQUIRE(rp2.faces_of_dimension(1).size() == 15);
    CHECK(reduced_homology_dims(rp2, FieldSpec()) == std::vector<std::size_t>{0, 0, 0, 0});
    CHECK(reduced_homology_dims(rp2, FieldSpec(3)) == std::vector<std::size_t>{0, 0, 0, 0});
    CHECK(reduced_homology_dims(rp2, FieldSpec(2)) == std::vector<std::size_t>{0, 0, 1, 1});
}

TEST_CASE("chain complex properties on random complexes", "[simplicial][property]") {
    CorpusGenerator gen(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const SimplicialComplex c = gen.complex(7, 5);
        for (int k = 0; k < c.dimension(); ++k) {
            CHECK(multiply(boundary_matrix(c, k), boundary_matrix(c, k + 1)).is_zero());
        }
        for (const FieldSpec field : {FieldSpec(), FieldSpec(2)}) {
            const auto dims = reduced_homology_dims(c, field);
            long long euler_faces = 0;
            long long euler_homology = 0;
            for (int k = -1; k <= c.dimension(); ++k) {
                const long long sign = (k % 2 == 0) ? 1 : -1;
                euler_faces += sign * static_cast<long long>(c.faces_of_dimension(k).size());
                euler_homology += sign * static_cast<long long>(dims[static_cast<std::size_t>(k + 1)]);
            }
            CHECK(euler_faces == euler_homology);
        }
    }
}

TEST_CASE("cones and simplices are acyclic", "[simplicial][property]") {
    CorpusGenerator gen(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = gen.uniform(2, 7);
        const int apex = gen.uniform(0, n - 1);
        std::vector<VertexSet> facets;
        for (int f = 0; f < gen.uniform(1, 4); ++f) {
            facets.push_back(VertexSet(gen.engine()() & VertexSet::full(n).bits()).with(apex));
        }
        const auto dims = reduced_homology_dims(SimplicialComplex::generated_by(n, facets), FieldSpec());
        CHECK(std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; }));

        const auto simplex = reduced_homology_dims(SimplicialComplex::simplex(n, VertexSet::full(n)), FieldSpec(2));
        CHECK(std::all_of(simplex.begin(), simplex.end(), [](std::size_t d) { return d == 0; }));
    }
}

TEST_CASE("Stanley-Reisner homology ignores generator order", "[simplicial][property]") {
    CorpusGenerator gen(17);
    for (int trial = 0; trial < 100; ++trial) {
        const MonomialIdeal j = gen.ideal(kSquarefreeParams);
        std::vector<Monomial> reversed(j.generators().rbegin(), j.generators().rend());
        const MonomialIdeal k(j.num_vars(), reversed);
        CHECK(reduced_homology_dims(complex_of_squarefree(j), FieldSpec()) ==
              reduced_homology_dims(complex_of_squarefree(k), FieldSpec()));
    }
}
