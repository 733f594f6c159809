#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "pseudoctx/construction.hpp"
#include "pseudoctx/fixtures.hpp"

using namespace pseudoctx;

namespace
{

constexpr double pi = std::numbers::pi;

/// Sorted |<u|v>| over all pairs: a congruence invariant of an unlabeled vector set.
std::vector<double> overlap_spectrum(const std::vector<vec3>& vs)
{
    std::vector<double> out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            out.push_back(std::abs(dot(vs[i], vs[j])) / (norm(vs[i]) * norm(vs[j])));
    std::sort(out.begin(), out.end());
    return out;
}

/// 50 parameters spread over (lo, hi), nudged away from every known degenerate value.
std::vector<double> sweep(double lo, double hi, const std::vector<double>& avoid)
{
    std::vector<double> out;
    for (int i = 1; i <= 50; ++i) {
        double a = lo + (hi - lo) * i / 51.0;
        for (double bad : avoid)
            if (std::abs(a - bad) < 0.01)
                a += 0.02;
        out.push_back(a);
    }
    return out;
}

degenerate_construction expect_degenerate(auto&& f)
{
    try {
        f();
    } catch (const degenerate_construction& e) {
        return e;
    }
    ADD_FAILURE() << "construction was not rejected";
    return degenerate_construction(degeneracy::duplicate_vectors, {});
}

} // namespace

TEST(BetaOfAlpha, TableValues)
{
    EXPECT_NEAR(beta_of_alpha(0), pi / 2, 1e-12);
    EXPECT_NEAR(beta_of_alpha(pi / 3), pi - std::acos(1.0 / 14), 1e-12);
    EXPECT_NEAR(beta_of_alpha(2 * pi / 3), 2 * pi / 3, 1e-12);
    EXPECT_NEAR(beta_of_alpha(pi - std::acos(0.8)), pi, 1e-12);
    EXPECT_NEAR(beta_of_alpha(pi / 2), pi - std::acos(1.0 / 5), 1e-12); // arcsec(-5)
}

TEST(BetaOfAlpha, DomainEnd)
{
    EXPECT_NEAR(alpha_max, 2 * std::atan(3.0), 1e-15);
    EXPECT_DOUBLE_EQ(beta_of_alpha(alpha_max), pi);
    EXPECT_THROW(beta_of_alpha(alpha_max + 1e-6), precondition_error);
    EXPECT_THROW(beta_of_alpha(-1e-6), precondition_error);
    EXPECT_THROW(beta_of_alpha(std::nan("")), precondition_error);
}

TEST(DegenerateAlpha, RootOfTheExtraInnerProduct)
{
    const double a0 = find_degenerate_alpha();
    EXPECT_NEAR(a0, 0.886257, 1e-5);
    const auto v = small_construction_raw(a0);
    EXPECT_NEAR(dot(v[4], v[10]), 0.0, 1e-10);
    EXPECT_DOUBLE_EQ(degenerate_alpha(), a0);
}

TEST(SmallConstruction, CleanAtPiThirdAndPi)
{
    for (double a : {pi / 3, pi}) {
        const auto l = construct_small_for(a);
        EXPECT_TRUE(verify_for(fixtures::small_graph(), l).clean()) << a;
    }
}

TEST(SmallConstruction, PinnedGeometry)
{
    const auto l = construct_small_for(pi / 3);
    EXPECT_NEAR(l(4).x(), std::sqrt(2.0 / 3), 1e-15);
    EXPECT_NEAR(l(4).y(), 0.0, 1e-15);
    EXPECT_NEAR(l(4).z(), 1 / std::sqrt(3.0), 1e-15);
    for (vertex_id v : {4, 9, 14, 2, 7, 12})
        EXPECT_NEAR(l(v).z(), 1 / std::sqrt(3.0), 1e-10);
    // {2,7,12} is {4,9,14} turned by alpha.
    const vec3 turned = rotate_z(l(4).components(), pi / 3);
    for (std::size_t k = 0; k < 3; ++k)
        EXPECT_NEAR(turned[k], l(2)[k], 1e-15);
}

TEST(SmallConstruction, PseudocontextsAreNotOrthonormalBases)
{
    // Unlike an orthonormal triple (projector sum = identity), the constructed
    // pseudocontexts have spectrum {1/5, 7/5, 7/5}, and both sums coincide.
    const auto l = construct_small_for(pi / 3);
    const auto a = projector_sum(l, {1, 6, 11});
    const auto b = projector_sum(l, {5, 10, 15});
    EXPECT_LE(a.max_abs_diff(b), 1e-9);
    const auto d = eigen_sym3(a);
    EXPECT_NEAR(d.values[0], 0.2, 1e-9);
    EXPECT_NEAR(d.values[1], 1.4, 1e-9);
    EXPECT_NEAR(d.values[2], 1.4, 1e-9);
}

TEST(SmallConstruction, DuplicateTripleAtTwoPiThirds)
{
    const auto e = expect_degenerate([] { construct_small_for(2.0943951023931953); });
    EXPECT_EQ(e.kind(), degeneracy::duplicate_triple);
    EXPECT_NE(std::string(e.what()).find("degenerate: duplicate triple"), std::string::npos);
    // Numerically the raw vectors confirm it: 12 = 4, 2 = 9, 7 = 14.
    const auto v = small_construction_raw(2 * pi / 3);
    for (auto [p, q] : {std::pair{12, 4}, std::pair{2, 9}, std::pair{7, 14}})
        EXPECT_NEAR(std::abs(dot(v[p - 1], v[q - 1])), 1.0, 1e-12);
}

TEST(SmallConstruction, DuplicateHalvesAtZeroExposeCube)
{
    const auto e = expect_degenerate([] { construct_small_for(0.0); });
    EXPECT_EQ(e.kind(), degeneracy::duplicate_halves);
    ASSERT_EQ(e.cube().size(), 9u);
    const double s = 1 / std::sqrt(2.0);
    const std::vector<vec3> printed_cube{{s, -s, 0}, {0, 0, 1}, {s, s, 0},  {s, 0, -s}, {0, 1, 0},
                                         {s, 0, s},  {0, s, s}, {1, 0, 0}, {0, s, -s}};
    const auto got = overlap_spectrum(e.cube());
    const auto want = overlap_spectrum(printed_cube);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i)
        EXPECT_NEAR(got[i], want[i], 1e-12);
    // And the construction really does approach it.
    const auto near_zero = small_construction_raw(1e-7);
    std::vector<vec3> distinct{near_zero[3], near_zero[2], near_zero[4], near_zero[8], near_zero[7],
                               near_zero[9], near_zero[13], near_zero[12], near_zero[14]};
    const auto lim = overlap_spectrum(distinct);
    for (std::size_t i = 0; i < lim.size(); ++i)
        EXPECT_NEAR(lim[i], want[i], 1e-6);
}

TEST(SmallConstruction, ExtraOrthogonalityAtAlphaZero)
{
    const auto e = expect_degenerate([] { construct_small_for(degenerate_alpha()); });
    EXPECT_EQ(e.kind(), degeneracy::extra_orthogonality);
    EXPECT_NE(std::find(e.pairs().begin(), e.pairs().end(), vertex_pair{5, 11}), e.pairs().end());
    EXPECT_NE(std::string(e.what()).find("(5,11)"), std::string::npos);
}

TEST(SmallConstruction, CleanOnBothSidesOfAlphaZero)
{
    const double a0 = degenerate_alpha();
    for (double a : {a0 - 0.05, a0 + 0.05})
        EXPECT_TRUE(verify_for(fixtures::small_graph(), construct_small_for(a)).clean());
    // The raw construction at alpha_0 shows the extra pair under verify_for too.
    std::vector<unit_vector3> raw;
    for (const auto& v : small_construction_raw(a0))
        raw.push_back(unit_vector3::normalized(v));
    EXPECT_TRUE(verify_for(fixtures::small_graph(), vector_labeling(raw, 1e-9)).has_extra(5, 11));
}

TEST(SmallConstruction, DomainChecks)
{
    EXPECT_THROW(construct_small_for(-0.1), precondition_error);
    EXPECT_THROW(construct_small_for(pi + 0.1), precondition_error);
}

TEST(SmallConstruction, SweepIsFaithful)
{
    const auto& h = fixtures::small_graph();
    std::mt19937 rng(17);
    std::normal_distribution<double> g;
    for (double a : sweep(0, pi, {2 * pi / 3, degenerate_alpha()})) {
        const auto l = construct_small_for(a);
        ASSERT_TRUE(verify_for(h, l).clean()) << "alpha = " << a;
        for (int i = 0; i < 100; ++i) {
            const auto p = born_probabilities(l, unit_vector3::normalized({g(rng), g(rng), g(rng)}));
            for (const auto& e : h.edges())
                ASSERT_NEAR(p[e[0] - 1] + p[e[1] - 1] + p[e[2] - 1], 1.0, 1e-10);
            ASSERT_NEAR(p[0] + p[5] + p[10], p[4] + p[9] + p[14], 1e-10);
        }
    }
}

TEST(ComboConstruction, MatchesPi3ReferenceLabeling)
{
    const auto c = construct_combo_for(pi / 3);
    EXPECT_TRUE(gram_equivalent(c.labeling, fixtures::combo_for_alpha_pi3(), 1e-8));
    EXPECT_TRUE(verify_for(fixtures::combo_graph(), c.labeling).clean());
    EXPECT_NEAR(c.beta, pi - std::acos(1.0 / 14), 1e-12);
    EXPECT_NEAR(c.aperture, std::acos(std::sqrt(13.0 / 15)), 1e-9);
    for (vertex_id v : {4, 16, 28, 10, 22, 34})
        EXPECT_NEAR(std::abs(c.labeling(v).z()), std::sqrt(13.0 / 15), 1e-9);
}

TEST(ComboConstruction, Pi2ReferenceLabelingUsesOppositeSense)
{
    const auto cw = construct_combo_for(pi / 2, rotation_sense::clockwise);
    EXPECT_TRUE(gram_equivalent(cw.labeling, fixtures::combo_for_alpha_pi2(), 1e-8));
    EXPECT_NEAR(cw.beta, pi - std::acos(1.0 / 5), 1e-12);
    // The counterclockwise variant is an equally faithful but non-congruent labeling.
    const auto ccw = construct_combo_for(pi / 2, rotation_sense::counterclockwise);
    EXPECT_TRUE(verify_for(fixtures::combo_graph(), ccw.labeling).clean());
    EXPECT_FALSE(gram_equivalent(ccw.labeling, fixtures::combo_for_alpha_pi2(), 1e-8));
}

TEST(ComboConstruction, SpineContextsLieAtOneOverRootThree)
{
    const auto c = construct_combo_for(pi / 3);
    for (vertex_id v : {2, 14, 26, 12, 24, 36, 6, 18, 30, 8, 20, 32})
        EXPECT_NEAR(c.labeling(v).z(), 1 / std::sqrt(3.0), 1e-10);
}

TEST(ComboConstruction, PseudocontextBoundsAtPiThird)
{
    const auto c = construct_combo_for(pi / 3);
    const auto pa = projector_sum(c.labeling, {4, 16, 28});
    const auto pb = projector_sum(c.labeling, {10, 22, 34});
    EXPECT_LE(pa.max_abs_diff(pb), 1e-9);
    const auto q = quantum_bounds(c.labeling, {4, 16, 28});
    EXPECT_NEAR(q.lo, 0.2, 1e-9);
    EXPECT_NEAR(q.hi, 2.6, 1e-9);
    for (double x : pairwise_overlaps(c.labeling, {4, 16, 28}))
        EXPECT_NEAR(x, 0.8, 1e-9);
}

TEST(ComboConstruction, Rejections)
{
    EXPECT_THROW(construct_combo_for(alpha_max + 0.01), precondition_error);
    EXPECT_THROW(construct_combo_for(-0.5), precondition_error);
    EXPECT_EQ(expect_degenerate([] { construct_combo_for(0.0); }).kind(), degeneracy::duplicate_halves);
    EXPECT_EQ(expect_degenerate([] { construct_combo_for(2 * pi / 3); }).kind(), degeneracy::duplicate_triple);
    // At alpha_0 the two halves collide: atoms 3/21, 9/27 and 15/33 coincide.
    const auto e = expect_degenerate([] { construct_combo_for(degenerate_alpha()); });
    EXPECT_EQ(e.kind(), degeneracy::duplicate_vectors);
    EXPECT_EQ(e.pairs(), (std::vector<vertex_pair>{{3, 21}, {9, 27}, {15, 33}}));
}

TEST(ComboConstruction, FurtherDegenerateParameters)
{
    // Beyond the published exclusions the stitched labeling has other isolated
    // bad parameters; verify_for catches them. Near 0.5087 <v1|v30> changes sign
    // because v30 runs into v12: the halves collide rather than touch.
    auto f = [](double a) {
        const auto v = combo_construction_raw(a);
        return dot(v[0], v[29]);
    };
    double lo = 0.45, hi = 0.55;
    ASSERT_NE(f(lo) < 0, f(hi) < 0);
    for (int i = 0; i < 100; ++i) {
        const double m = 0.5 * (lo + hi);
        ((f(lo) < 0) == (f(m) < 0) ? lo : hi) = m;
    }
    EXPECT_NEAR(lo, 0.5086907502, 1e-9);
    const auto dup = expect_degenerate([&] { construct_combo_for(lo); });
    EXPECT_EQ(dup.kind(), degeneracy::duplicate_vectors);
    EXPECT_EQ(dup.pairs(), (std::vector<vertex_pair>{{6, 24}, {12, 30}, {18, 36}}));

    // Near 2.4852 six cross-block pairs become orthogonal with no coincidence.
    const auto extra = expect_degenerate([] { construct_combo_for(2.4852284909); });
    EXPECT_EQ(extra.kind(), degeneracy::extra_orthogonality);
    EXPECT_NE(std::find(extra.pairs().begin(), extra.pairs().end(), vertex_pair{1, 22}), extra.pairs().end());
    EXPECT_NO_THROW(construct_combo_for(2.4852284909 + 1e-8));
}

TEST(ComboConstruction, SweepIsFaithful)
{
    const auto& h = fixtures::combo_graph();
    std::mt19937 rng(23);
    std::normal_distribution<double> g;
    const std::vector<double> avoid{2 * pi / 3, degenerate_alpha(), 0.5086907502, 2.4852284909};
    for (auto sense : {rotation_sense::counterclockwise, rotation_sense::clockwise})
        for (double a : sweep(0, alpha_max, avoid)) {
            const auto c = construct_combo_for(a, sense);
            ASSERT_TRUE(verify_for(h, c.labeling).clean()) << "alpha = " << a;
            ASSERT_NEAR(dot(c.labeling(3), c.labeling(5)), 0.0, 1e-10);
            for (int i = 0; i < 100; ++i) {
                const auto p = born_probabilities(c.labeling, unit_vector3::normalized({g(rng), g(rng), g(rng)}));
                for (const auto& e : h.edges())
                    ASSERT_NEAR(p[e[0] - 1] + p[e[1] - 1] + p[e[2] - 1], 1.0, 1e-10);
                ASSERT_NEAR(p[3] + p[15] + p[27], p[9] + p[21] + p[33], 1e-10);
            }
            // Quantum range sits strictly inside the classical [0, 3].
            const auto q = quantum_bounds(c.labeling, {4, 16, 28});
            ASSERT_GT(q.lo, 0.0);
            ASSERT_LT(q.hi, 3.0);
        }
}

TEST(ComboAperture, EndpointsAndContinuity)
{
    EXPECT_DOUBLE_EQ(combo_aperture(0.0), 0.0);
    EXPECT_NEAR(combo_aperture(1e-4), 1e-4 / 3, 1e-8);
    EXPECT_NEAR(combo_aperture(pi / 3), std::acos(std::sqrt(13.0 / 15)), 1e-12);
    EXPECT_NEAR(combo_aperture(alpha_max), pi / 2, 1e-9);
}
