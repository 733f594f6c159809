#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pseudoctx/fixtures.hpp"
#include "pseudoctx/geometry.hpp"

using namespace pseudoctx;

namespace
{

vector_labeling standard_basis()
{
    return vector_labeling::from_components({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

unit_vector3 random_unit(std::mt19937& rng)
{
    std::normal_distribution<double> g;
    return unit_vector3::normalized({g(rng), g(rng), g(rng)});
}

void expect_eigen_pairs(const sym_matrix3& m, const eigen_decomposition3& d)
{
    for (std::size_t i = 0; i < 3; ++i) {
        const vec3 mu = m.apply(d.vectors[i].components());
        for (std::size_t k = 0; k < 3; ++k)
            EXPECT_NEAR(mu[k], d.values[i] * d.vectors[i][k], 1e-9);
        for (std::size_t j = i + 1; j < 3; ++j)
            EXPECT_NEAR(dot(d.vectors[i], d.vectors[j]), 0.0, 1e-9);
    }
    EXPECT_LE(d.values[0], d.values[1]);
    EXPECT_LE(d.values[1], d.values[2]);
    EXPECT_NEAR(d.values[0] + d.values[1] + d.values[2], m.trace(), 1e-9);
}

} // namespace

TEST(UnitVector3, NormChecks)
{
    EXPECT_NO_THROW(unit_vector3({0, 0, 1}));
    EXPECT_THROW(unit_vector3({0, 0, 1.001}), precondition_error);
    EXPECT_THROW(unit_vector3::normalized({0, 0, 0}), precondition_error);
    const auto u = unit_vector3::normalized({3, 4, 0});
    EXPECT_DOUBLE_EQ(u.x(), 0.6);
    EXPECT_DOUBLE_EQ(u.y(), 0.8);
}

TEST(VectorLabeling, FromComponentsNeedsUnitLength)
{
    EXPECT_THROW(vector_labeling::from_components({{1, 1, 0}}), precondition_error);
    EXPECT_EQ(standard_basis().vertex_count(), 3);
    EXPECT_DOUBLE_EQ(standard_basis().overlap(1, 2), 0.0);
}

TEST(VerifyFor, HeuristicSmallForIsClean)
{
    EXPECT_TRUE(verify_for(fixtures::small_graph(), fixtures::small_heuristic_for()).clean());
}

TEST(VerifyFor, ReferenceLabelingsAreClean)
{
    EXPECT_TRUE(verify_for(fixtures::combo_graph(), fixtures::combo_for_alpha_pi3()).clean());
    EXPECT_TRUE(verify_for(fixtures::combo_graph(), fixtures::combo_for_alpha_pi2()).clean());
}

TEST(VerifyFor, ReportsEachKindOfDefect)
{
    const auto h = make_hypergraph(5, {hyperedge(1, 2, 3), hyperedge(3, 4, 5)});
    const double s = std::sqrt(0.5);
    // 4 duplicates 1 (extra orthogonality to 2 and 3 via 4 = 1), 5 is not orthogonal to 3.
    const auto l = vector_labeling::from_components({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {0, s, s}});
    const auto r = verify_for(h, l);
    EXPECT_FALSE(r.clean());
    EXPECT_EQ(r.missing_orthogonality, (std::vector<vertex_pair>{{3, 5}}));
    EXPECT_EQ(r.duplicates, (std::vector<vertex_pair>{{1, 4}}));
    EXPECT_TRUE(r.has_extra(4, 2));
    EXPECT_TRUE(r.has_extra(1, 5));
    EXPECT_THROW(verify_for(fixtures::small_graph(), l), precondition_error);
}

TEST(InferHypergraph, FixturesRecoverPartitionGraphs)
{
    EXPECT_EQ(infer_hypergraph_from_labels(fixtures::small_heuristic_for()), fixtures::small_graph());
    EXPECT_EQ(infer_hypergraph_from_labels(fixtures::combo_for_alpha_pi3()), fixtures::combo_graph());
    EXPECT_EQ(infer_hypergraph_from_labels(fixtures::combo_for_alpha_pi2()), fixtures::combo_graph());
}

TEST(InferHypergraph, OrthonormalTripleIsOneEdge)
{
    const auto h = infer_hypergraph_from_labels(standard_basis());
    EXPECT_EQ(h.edges(), std::vector<hyperedge>{hyperedge(1, 2, 3)});
}

TEST(InferHypergraph, RejectsNonTriangularCliques)
{
    const double s = std::sqrt(0.5);
    // A lone orthogonal pair is a maximal clique of size 2.
    EXPECT_THROW(infer_hypergraph_from_labels(vector_labeling::from_components({{1, 0, 0}, {0, 1, 0}, {s, s, 0}})),
                 validation_error);
    EXPECT_THROW(infer_hypergraph_from_labels(vector_labeling::from_components({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}})),
                 validation_error);
}

TEST(ProjectorSum, OrthonormalTripleIsIdentity)
{
    EXPECT_LE(projector_sum(standard_basis(), {1, 2, 3}).max_abs_diff(sym_matrix3::identity()), 1e-15);
    for (const auto& e : fixtures::combo_graph().edges())
        EXPECT_LE(projector_sum(fixtures::combo_for_alpha_pi3(), vertex_subset{e[0], e[1], e[2]})
                      .max_abs_diff(sym_matrix3::identity()),
                  1e-9);
}

TEST(ProjectorSum, ComboPseudocontextsAreDiagonal)
{
    const auto& l = fixtures::combo_for_alpha_pi3();
    const auto expected = sym_matrix3::diagonal(0.2, 0.2, 2.6);
    EXPECT_LE(projector_sum(l, {4, 16, 28}).max_abs_diff(expected), 1e-9);
    EXPECT_LE(projector_sum(l, {10, 22, 34}).max_abs_diff(expected), 1e-9);
    EXPECT_LE(projector_sum(l, {4, 16, 28}).max_abs_diff(projector_sum(l, {10, 22, 34})), 1e-9);
}

TEST(EigenSym3, HeuristicSmallPseudocontext)
{
    const auto m = projector_sum(fixtures::small_heuristic_for(), {1, 6, 11});
    const auto d = eigen_sym3(m);
    EXPECT_NEAR(d.values[0], (7 - std::sqrt(21.0)) / 14, 1e-9);
    EXPECT_NEAR(d.values[1], (7 + std::sqrt(21.0)) / 14, 1e-9);
    EXPECT_NEAR(d.values[2], 2.0, 1e-9);
    const double sign = d.vectors[2].z() >= 0 ? 1.0 : -1.0;
    EXPECT_NEAR(sign * d.vectors[2].x(), 0.0, 1e-8);
    EXPECT_NEAR(sign * d.vectors[2].y(), -2 / std::sqrt(5.0), 1e-8);
    EXPECT_NEAR(sign * d.vectors[2].z(), 1 / std::sqrt(5.0), 1e-8);
    expect_eigen_pairs(m, d);
}

TEST(EigenSym3, IdentityAndDegenerateSpectra)
{
    const auto id = eigen_sym3(sym_matrix3::identity());
    for (double x : id.values)
        EXPECT_NEAR(x, 1.0, 1e-15);
    expect_eigen_pairs(sym_matrix3::identity(), id);

    const auto combo = projector_sum(fixtures::combo_for_alpha_pi3(), {4, 16, 28});
    const auto d = eigen_sym3(combo);
    EXPECT_NEAR(d.values[0], 0.2, 1e-9);
    EXPECT_NEAR(d.values[1], 0.2, 1e-9);
    EXPECT_NEAR(d.values[2], 2.6, 1e-9);
    expect_eigen_pairs(combo, d);
}

TEST(EigenSym3, RandomMatricesAgainstCharacteristicPolynomial)
{
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int trial = 0; trial < 300; ++trial) {
        const sym_matrix3 m(u(rng), u(rng), u(rng), u(rng), u(rng), u(rng));
        const auto d = eigen_sym3(m);
        expect_eigen_pairs(m, d);
        double a[3][3];
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                a[i][j] = m(i, j);
        const auto ref = oracle::eigenvalues_by_bisection(a);
        if (ref[1] - ref[0] > 1e-3 && ref[2] - ref[1] > 1e-3) {
            for (std::size_t i = 0; i < 3; ++i)
                EXPECT_NEAR(d.values[i], ref[i], 1e-9);
        }
    }
}

TEST(EigenSym3, NearlyRepeatedEigenvaluesUseFallback)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        // Q diag(1, 1 + delta, 3) Q^T with a random rotation Q.
        const double delta = std::pow(10.0, -3.0 - (trial % 12));
        const auto a = random_unit(rng);
        auto b0 = cross(a.components(), {0.3, -0.7, 0.2});
        const auto b = unit_vector3::normalized(b0);
        const auto c = unit_vector3::normalized(cross(a.components(), b.components()));
        sym_matrix3 m;
        m.add_outer(a.components(), 1.0);
        m.add_outer(b.components(), 1.0 + delta);
        m.add_outer(c.components(), 3.0);
        const auto d = eigen_sym3(m);
        EXPECT_NEAR(d.values[0], 1.0, 1e-9);
        EXPECT_NEAR(d.values[1], 1.0 + delta, 1e-9);
        EXPECT_NEAR(d.values[2], 3.0, 1e-9);
        expect_eigen_pairs(m, d);
    }
}

TEST(QuantumBounds, PublishedValues)
{
    const auto combo = quantum_bounds(fixtures::combo_for_alpha_pi3(), {4, 16, 28});
    EXPECT_NEAR(combo.lo, 0.2, 1e-9);
    EXPECT_NEAR(combo.hi, 2.6, 1e-9);
    const auto small = quantum_bounds(fixtures::small_heuristic_for(), {1, 6, 11});
    EXPECT_NEAR(small.lo, (7 - std::sqrt(21.0)) / 14, 1e-9);
    EXPECT_NEAR(small.hi, 2.0, 1e-9);
    const auto single = quantum_bounds(standard_basis(), {2});
    EXPECT_NEAR(single.lo, 0.0, 1e-12);
    EXPECT_NEAR(single.hi, 1.0, 1e-12);
}

TEST(QuantumBounds, RandomStatesStayInsideInterval)
{
    std::mt19937 rng(3);
    const auto& l = fixtures::small_heuristic_for();
    const auto q = quantum_bounds(l, {1, 6, 11});
    for (int i = 0; i < 1000; ++i) {
        const auto p = born_probabilities(l, random_unit(rng));
        const double sum = p[0] + p[5] + p[10];
        EXPECT_GE(sum, q.lo - 1e-12);
        EXPECT_LE(sum, q.hi + 1e-12);
    }
}

TEST(BornProbabilities, SelfOverlapAndPoleState)
{
    const auto& l = fixtures::combo_for_alpha_pi3();
    EXPECT_NEAR(born_probabilities(l, l(4))[3], 1.0, 1e-12);
    const auto p = born_probabilities(l, unit_vector3({0, 0, 1}));
    EXPECT_NEAR(p[3] + p[15] + p[27], 13.0 / 5.0, 1e-9);
}

TEST(BornProbabilities, EdgeSumsAndPseudocontextSums)
{
    std::mt19937 rng(5);
    for (const auto* l : {&fixtures::combo_for_alpha_pi3(), &fixtures::combo_for_alpha_pi2()})
        for (int i = 0; i < 1000; ++i) {
            const auto p = born_probabilities(*l, random_unit(rng));
            for (const auto& e : fixtures::combo_graph().edges())
                ASSERT_NEAR(p[e[0] - 1] + p[e[1] - 1] + p[e[2] - 1], 1.0, 1e-10);
            ASSERT_NEAR(p[3] + p[15] + p[27], p[9] + p[21] + p[33], 1e-10);
        }
}

TEST(GramEquivalent, InvarianceAndDistinctness)
{
    const auto& a = fixtures::combo_for_alpha_pi3();
    EXPECT_TRUE(gram_equivalent(a, a));
    EXPECT_FALSE(gram_equivalent(a, fixtures::combo_for_alpha_pi2()));
    // A rotation plus sign flips is invisible.
    std::vector<vec3> turned;
    for (const auto& u : a.labels()) {
        vec3 r = rotate_z(u.components(), 0.7);
        turned.push_back(turned.size() % 2 == 0 ? r : -1.0 * r);
    }
    EXPECT_TRUE(gram_equivalent(a, vector_labeling::from_components(turned)));
    EXPECT_FALSE(gram_equivalent(a, fixtures::small_heuristic_for()));
}

TEST(PairwiseOverlaps, EquidistantPseudocontexts)
{
    const auto& l = fixtures::combo_for_alpha_pi3();
    for (const vertex_subset& s : {vertex_subset{4, 16, 28}, vertex_subset{10, 22, 34}}) {
        const auto o = pairwise_overlaps(l, s);
        ASSERT_EQ(o.size(), 3u);
        for (double x : o)
            EXPECT_NEAR(x, 0.8, 1e-9);
    }
    for (double x : pairwise_overlaps(standard_basis(), {1, 2, 3}))
        EXPECT_NEAR(x, 0.0, 1e-15);
}

TEST(Aperture, ReferencePseudocontextVectorsShareHeight)
{
    const auto& l = fixtures::combo_for_alpha_pi3();
    for (vertex_id v : {4, 16, 28, 10, 22, 34})
        EXPECT_NEAR(std::abs(l(v).z()), std::sqrt(13.0 / 15.0), 1e-9);
}
