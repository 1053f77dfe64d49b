#include "catch_amalgamated.hpp"

#include "hochster/cech.hpp"
#include "hochster/random.hpp"
#include "support.hpp"

using namespace hochster;
using namespace hochster::testing;

using Dims = std::vector<std::size_t>;

TEST_CASE("cech_basis", "[cech]") {
    const MonomialIdeal i = worked_example();
    CHECK(cech_basis(i, deg({1, 0}), 0) == std::vector<VertexSet>{VertexSet{}});
    CHECK(cech_basis(i, deg({1, 0}), 1).empty());
    CHECK(cech_basis(i, deg({1, 0}), 2).empty());
    CHECK(cech_basis(i, deg({0, -1}), 1) == std::vector<VertexSet>{set({2})});
    CHECK(cech_basis(i, deg({0, -1}), 2).empty());
    for (int t = 0; t < 3; ++t) {
        CHECK(cech_basis(two_disjoint_edges(), deg({-1, -1, -1, -1}), t).empty());
    }
    CHECK_THROWS_AS(cech_basis(i, deg({0, 0}), 3), std::out_of_range);
    CHECK_THROWS_AS(cech_basis(ideal("n=21; x1"), MultiDegree(std::vector<int>(21, 0)), 0), std::invalid_argument);
}

TEST_CASE("cech_cohomology_dims", "[cech]") {
    const MonomialIdeal i = worked_example();
    CHECK(cech_cohomology_dims(i, deg({1, 0})) == Dims{1, 0, 0});
    CHECK(cech_cohomology_dims(i, deg({0, -1})) == Dims{0, 1, 0});
    CHECK(cech_cohomology_dims(MonomialIdeal::zero(2), deg({-1, -1})) == Dims{0, 0, 1});
    CHECK(cech_cohomology_dims(two_disjoint_edges(), deg({0, 0, 0, 0})) == Dims{0, 1, 0, 0, 0});
}

TEST_CASE("verify_degree_complex examples", "[cech]") {
    CHECK(verify_degree_complex(worked_example(), deg({1, 0})).ok);
    CorpusGenerator gen(1);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = gen.uniform(1, 4);
        std::vector<int> a(static_cast<std::size_t>(n));
        for (int& x : a) {
            x = gen.uniform(-2, 2);
        }
        const DegreeComplexReport r = verify_degree_complex(MonomialIdeal::zero(n), MultiDegree(a));
        CHECK(r.ok);
        CHECK(r.mismatched_indices.empty());
    }
}

TEST_CASE("graded Cech pieces: d o d = 0, degree complex homology, Euler characteristic", "[cech][property]") {
    CorpusGenerator gen(55);
    for (int trial = 0; trial < 300; ++trial) {
        const MonomialIdeal i = gen.ideal({5, 5, 3});
        const int n = i.num_vars();
        std::vector<int> a(static_cast<std::size_t>(n));
        for (int& x : a) {
            x = gen.uniform(-2, 3);
        }
        const MultiDegree degree(a);
        const GradedCechPiece piece = graded_cech_piece(i, degree);
        const VertexSet negative = sign_split(degree).negative;

        std::size_t total_basis = 0;
        for (const auto& level : piece.basis_by_level) {
            for (VertexSet f : level) {
                CHECK(negative.subset_of(f));
            }
            total_basis += level.size();
        }
        // One basis vector per admitted subset: never more than 2^n in all.
        CHECK(total_basis <= (std::size_t{1} << n));

        for (std::size_t t = 0; t + 1 < piece.differentials.size(); ++t) {
            CHECK(multiply(piece.differentials[t + 1], piece.differentials[t]).is_zero());
        }

        for (const FieldSpec field : {FieldSpec(), FieldSpec(2)}) {
            const auto dims = cech_cohomology_dims(piece, field);
            long long euler_basis = 0;
            long long euler_cohomology = 0;
            for (std::size_t t = 0; t < dims.size(); ++t) {
                const long long sign = t % 2 == 0 ? 1 : -1;
                euler_basis += sign * static_cast<long long>(piece.basis_by_level[t].size());
                euler_cohomology += sign * static_cast<long long>(dims[t]);
            }
            CHECK(euler_basis == euler_cohomology);

            const DegreeComplexReport report = verify_degree_complex(i, degree, field);
            CHECK(report.ok);
            CHECK(report.cech_dims == dims);
        }
    }
}
