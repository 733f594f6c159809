#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "pseudoctx/fixtures.hpp"
#include "pseudoctx/hypergraph.hpp"

using namespace pseudoctx;

namespace
{

constexpr const char* small_graph_text = R"(# 15 atoms in 8 contexts
1 2 3
3 4 5
6 7 8
8 9 10
11 12 13
13 14 15
2 7 12   # spine
4 9 14   # spine
)";

} // namespace

TEST(Hyperedge, SortsMembersAndIgnoresInputOrder)
{
    const hyperedge e(7, 2, 12);
    EXPECT_EQ(e[0], 2);
    EXPECT_EQ(e[1], 7);
    EXPECT_EQ(e[2], 12);
    EXPECT_EQ(e, hyperedge(12, 7, 2));
    EXPECT_TRUE(e.contains(7));
    EXPECT_FALSE(e.contains(3));
}

TEST(Hyperedge, RejectsRepeatedOrNonPositiveMembers)
{
    EXPECT_THROW(hyperedge(1, 1, 2), validation_error);
    EXPECT_THROW(hyperedge(0, 1, 2), validation_error);
    EXPECT_THROW(hyperedge(-3, 1, 2), validation_error);
}

TEST(VertexSubset, CanonicalAndQueries)
{
    const vertex_subset s{11, 1, 6, 6};
    EXPECT_EQ(s.members(), (std::vector<vertex_id>{1, 6, 11}));
    EXPECT_TRUE(s.contains(6));
    EXPECT_FALSE(s.contains(5));
    EXPECT_TRUE(s.intersects(vertex_subset{11, 20}));
    EXPECT_FALSE(s.intersects(vertex_subset{5, 10, 15}));
    EXPECT_TRUE((vertex_subset{1, 3}).inside(hyperedge(1, 2, 3)));
    EXPECT_FALSE(s.inside(hyperedge(1, 2, 3)));
}

TEST(ParseHypergraph, TwoEdgeChain)
{
    const auto h = parse_hypergraph("1 2 3\n3 4 5\n");
    EXPECT_EQ(h.vertex_count(), 5);
    ASSERT_EQ(h.edge_count(), 2u);
    EXPECT_EQ(h.edges()[0], hyperedge(1, 2, 3));
    EXPECT_EQ(h.edges()[1], hyperedge(3, 4, 5));
}

TEST(ParseHypergraph, SmallFixtureFileWithComments)
{
    const auto h = parse_hypergraph(small_graph_text);
    EXPECT_EQ(h.vertex_count(), 15);
    EXPECT_EQ(h.edge_count(), 8u);
    EXPECT_EQ(h, fixtures::small_graph());
}

TEST(ParseHypergraph, BlankLinesAndTrailingWhitespace)
{
    const auto h = parse_hypergraph("\n\n  1\t2 3   \n\n# only a comment\n3 4 5");
    EXPECT_EQ(h.edge_count(), 2u);
}

TEST(ParseHypergraph, SharedPairIsRejected)
{
    try {
        parse_hypergraph("1 2 3\n1 2 4\n");
        FAIL() << "expected a parse error";
    } catch (const parse_error& e) {
        EXPECT_NE(std::string(e.what()).find("edges share two vertices"), std::string::npos) << e.what();
        EXPECT_EQ(e.line(), 2);
    }
}

TEST(ParseHypergraph, SyntaxErrorsCarryPosition)
{
    try {
        parse_hypergraph("1 2 3\n4 x 6\n");
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_EQ(e.line(), 2);
        EXPECT_EQ(e.column(), 3);
    }
    EXPECT_THROW(parse_hypergraph("1 2\n"), parse_error);         // not 3-uniform
    EXPECT_THROW(parse_hypergraph("1 2 3 4\n"), parse_error);     // not 3-uniform
    EXPECT_THROW(parse_hypergraph("1 2 0\n"), parse_error);       // ids are positive
    EXPECT_THROW(parse_hypergraph("1 2 -3\n"), parse_error);
    EXPECT_THROW(parse_hypergraph("1 1 2\n"), parse_error);       // repeated member
    EXPECT_THROW(parse_hypergraph("1 2 3\n3 2 1\n"), parse_error); // duplicate edge
}

TEST(ParseHypergraph, GapInNumberingIsRejected)
{
    try {
        parse_hypergraph("1 2 3\n3 4 6\n");
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_NE(std::string(e.what()).find("gap in vertex numbering"), std::string::npos) << e.what();
    }
}

TEST(ParseHypergraph, InputWithoutEdgesIsRejected)
{
    EXPECT_THROW(parse_hypergraph("# nothing\n"), parse_error);
    EXPECT_THROW(parse_hypergraph(""), parse_error);
}

TEST(Validate, FixturesAreValid)
{
    EXPECT_TRUE(validate(fixtures::small_graph()).empty());
    EXPECT_TRUE(validate(fixtures::combo_graph()).empty());
}

TEST(Validate, IsolatedVertex)
{
    const hypergraph h(7, {hyperedge(1, 2, 3), hyperedge(3, 4, 5), hyperedge(5, 6, 1)});
    const auto d = validate(h);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0].what, diagnostic::kind::isolated_vertex);
    EXPECT_EQ(d[0].vertices, std::vector<vertex_id>{7});
}

TEST(Validate, SharedPair)
{
    const hypergraph h(4, {hyperedge(1, 2, 3), hyperedge(2, 3, 4)});
    const auto d = validate(h);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0].what, diagnostic::kind::shared_pair);
    EXPECT_EQ(d[0].vertices, (std::vector<vertex_id>{2, 3}));
}

TEST(Validate, OneDiagnosticPerViolation)
{
    const hypergraph h(9, {hyperedge(1, 2, 3), hyperedge(1, 2, 3), hyperedge(2, 3, 4), hyperedge(5, 6, 10)});
    const auto d = validate(h);
    auto count = [&](diagnostic::kind k) { return std::count_if(d.begin(), d.end(), [&](const auto& x) { return x.what == k; }); };
    EXPECT_EQ(count(diagnostic::kind::duplicate_edge), 1);
    EXPECT_EQ(count(diagnostic::kind::shared_pair), 1);
    EXPECT_EQ(count(diagnostic::kind::vertex_out_of_range), 1);
    EXPECT_EQ(count(diagnostic::kind::isolated_vertex), 3); // 7, 8, 9
    EXPECT_THROW(make_hypergraph(9, h.edges()), validation_error);
}

TEST(VertexDegrees, SumIsThreeTimesEdges)
{
    const auto single = vertex_degrees(make_hypergraph(3, {hyperedge(1, 2, 3)}));
    EXPECT_EQ(single, (std::vector<int>{0, 1, 1, 1}));

    auto sum = [](const std::vector<int>& d) { return std::accumulate(d.begin(), d.end(), 0); };
    EXPECT_EQ(sum(vertex_degrees(fixtures::small_graph())), 24);
    EXPECT_EQ(sum(vertex_degrees(fixtures::combo_graph())), 66);
}

TEST(Hypergraph, AdjacencyIsOrderInsensitive)
{
    const auto& h = fixtures::small_graph();
    EXPECT_TRUE(h.adjacent(12, 2));
    EXPECT_TRUE(h.adjacent(2, 12));
    EXPECT_FALSE(h.adjacent(1, 6));
    EXPECT_TRUE(h.has_edge(hyperedge(14, 4, 9)));
    EXPECT_TRUE(h.inside_some_edge(vertex_subset{9, 14}));
    EXPECT_FALSE(h.inside_some_edge(vertex_subset{1, 6, 11}));
}

TEST(SerializeHypergraph, RoundTripOnFixtures)
{
    for (const auto* h : {&fixtures::small_graph(), &fixtures::combo_graph()})
        EXPECT_EQ(parse_hypergraph(serialize_hypergraph(*h)), *h);
}

TEST(SerializeHypergraph, RoundTripOnRandomLinearHypergraphs)
{
    // Random linear 3-uniform hypergraphs: grow by adding edges that share at most one vertex.
    std::mt19937 rng(20241018);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 20);
        std::vector<hyperedge> edges;
        std::uniform_int_distribution<int> pick(1, n);
        for (int attempt = 0; attempt < 200; ++attempt) {
            const int a = pick(rng), b = pick(rng), c = pick(rng);
            if (a == b || b == c || a == c)
                continue;
            const hyperedge e(a, b, c);
            const bool ok = std::all_of(edges.begin(), edges.end(), [&](const hyperedge& f) {
                int shared = 0;
                for (vertex_id v : e)
                    shared += f.contains(v) ? 1 : 0;
                return shared <= 1;
            });
            if (ok)
                edges.push_back(e);
        }
        // Relabel so that the used vertices are exactly 1..m.
        std::map<vertex_id, vertex_id> relabel;
        for (const auto& e : edges)
            for (vertex_id v : e)
                relabel.emplace(v, 0);
        int next = 0;
        for (auto& [v, w] : relabel)
            w = ++next;
        std::vector<hyperedge> renamed;
        for (const auto& e : edges)
            renamed.emplace_back(relabel[e[0]], relabel[e[1]], relabel[e[2]]);
        const auto h = make_hypergraph(next, renamed);
        ASSERT_EQ(parse_hypergraph(serialize_hypergraph(h)), h);
        for (std::size_t i = 0; i < h.edges().size(); ++i)
            for (std::size_t j = i + 1; j < h.edges().size(); ++j) {
                int shared = 0;
                for (vertex_id v : h.edges()[i])
                    shared += h.edges()[j].contains(v) ? 1 : 0;
                ASSERT_LE(shared, 1);
            }
    }
}
