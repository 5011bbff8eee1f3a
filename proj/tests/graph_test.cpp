#include <sstream>

#include <gtest/gtest.h>

#include "circum/generators.hpp"
#include "circum/graph.hpp"
#include "circum/graph6.hpp"

namespace circum {
namespace {

TEST(EdgeList, EdgelessAndComplete) {
    Graph g = Graph::from_edge_list(3, {});
    EXPECT_EQ(g.order(), 3);
    EXPECT_EQ(g.edge_count(), 0u);

    Graph k4 = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    EXPECT_EQ(k4, complete_graph(4));
    EXPECT_TRUE(k4.is_complete());
}

TEST(EdgeList, DuplicatesCollapse) {
    Graph g = Graph::from_edge_list(2, {{0, 1}, {1, 0}});
    EXPECT_EQ(g.edge_count(), 1u);
    EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(EdgeList, Rejections) {
    EXPECT_THROW(Graph::from_edge_list(3, {{1, 1}}), std::invalid_argument);
    EXPECT_THROW(Graph::from_edge_list(3, {{0, 3}}), std::invalid_argument);
    EXPECT_THROW(Graph::from_edge_list(0, {}), std::invalid_argument);
}

TEST(Graph6, SmallestRecord) {
    Graph g = parse_graph6("@");
    EXPECT_EQ(g.order(), 1);
    EXPECT_EQ(encode_graph6(g), "@");
}

// K4: six 1-bits fill one chunk, 63 + 63 = '~'. K5: ten 1-bits and two
// pad zeros, chunks 111111 '~' and 111100 = 60, 60 + 63 = '{'.
TEST(Graph6, CompleteGraphs) {
    EXPECT_EQ(parse_graph6("C~"), complete_graph(4));
    EXPECT_EQ(encode_graph6(complete_graph(4)), "C~");
    EXPECT_EQ(parse_graph6("D~{"), complete_graph(5));
    EXPECT_EQ(encode_graph6(complete_graph(5)), "D~{");
}

TEST(Graph6, HeaderAndNewline) {
    EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), complete_graph(4));
}

TEST(Graph6, ColumnMajorBitOrder) {
    // x(0,1) x(0,2) x(1,2) x(0,3) x(1,3) x(2,3): only x(0,3) set -> 000100.
    Graph g = Graph::from_edge_list(4, {{0, 3}});
    EXPECT_EQ(encode_graph6(g), std::string("C") + static_cast<char>(63 + 4));
}

TEST(Graph6, Malformed) {
    EXPECT_THROW(parse_graph6("C\x7f"), Graph6Error);
    EXPECT_THROW(parse_graph6(std::string("C") + static_cast<char>(62)), Graph6Error);
    // K5 with a nonzero padding bit.
    EXPECT_THROW(parse_graph6("D~|"), Graph6Error);
    EXPECT_THROW(parse_graph6("D~"), Graph6Error);
    EXPECT_THROW(parse_graph6(""), Graph6Error);
}

TEST(Graph6, RoundTripRandom) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const int n = 1 + static_cast<int>(seed % 20);
        Graph g = random_gnp(n, Rational(1, 2), seed);
        ASSERT_EQ(parse_graph6(encode_graph6(g)), g) << "seed " << seed;
    }
}

TEST(Graph6, MultiByteSizeAndWideRows) {
    for (int n : {62, 63, 100, 130}) {
        Graph g = random_gnp(n, Rational(3, 10), static_cast<std::uint64_t>(n));
        std::string code = encode_graph6(g);
        if (n >= 63) {
            EXPECT_EQ(code[0], '~');
        }
        EXPECT_EQ(parse_graph6(code), g);
    }
}

TEST(Graph6, MultiRecordStream) {
    std::stringstream ss("C~\n\nD~{\r\n@\n");
    auto gs = read_graph6_stream(ss);
    ASSERT_EQ(gs.size(), 3u);
    EXPECT_EQ(gs[1], complete_graph(5));
    std::stringstream out;
    write_graph6_stream(out, gs);
    EXPECT_EQ(out.str(), "C~\nD~{\n@\n");
}

TEST(Join, Examples) {
    EXPECT_EQ(join(complete_graph(1), complete_graph(1)), complete_graph(2));
    Graph star = join(edgeless_graph(2), complete_graph(1));
    EXPECT_EQ(star, Graph::from_edge_list(3, {{0, 2}, {1, 2}}));

    Graph three_k2 = disjoint_union(disjoint_union(complete_graph(2), complete_graph(2)), complete_graph(2));
    Graph family = join(three_k2, complete_graph(2));
    EXPECT_EQ(family.order(), 8);
    EXPECT_EQ(family, kappa_family(2, 3));
}

TEST(Join, EdgeCountProperty) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Graph a = random_gnp(1 + static_cast<int>(seed % 7), Rational(1, 2), seed);
        Graph b = random_gnp(1 + static_cast<int>(seed % 5), Rational(1, 3), seed + 100);
        Graph j = join(a, b);
        EXPECT_EQ(j.edge_count(), a.edge_count() + b.edge_count() +
                                      static_cast<std::size_t>(a.order()) * static_cast<std::size_t>(b.order()));
    }
}

TEST(DisjointUnion, Components) {
    Graph two = disjoint_union(complete_graph(2), complete_graph(2));
    EXPECT_EQ(components(two).size(), 2u);
    Graph three = disjoint_union(two, complete_graph(2));
    EXPECT_EQ(three.order(), 6);
    EXPECT_EQ(three.edge_count(), 3u);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Graph a = random_gnp(1 + static_cast<int>(seed % 8), Rational(1, 4), seed);
        Graph b = random_gnp(1 + static_cast<int>(seed % 6), Rational(1, 4), seed + 7);
        EXPECT_EQ(components(disjoint_union(a, b)).size(), components(a).size() + components(b).size());
    }
}

TEST(DeleteVertices, Examples) {
    auto k3 = delete_vertices(complete_graph(4), VertexSet(4, {2}));
    ASSERT_TRUE(k3);
    EXPECT_EQ(k3->graph, complete_graph(3));
    EXPECT_EQ(k3->old_index, (std::vector<int>{0, 1, 3}));
    EXPECT_EQ(k3->new_index[3], 2);
    EXPECT_EQ(k3->new_index[2], -1);

    Graph g = petersen_graph();
    auto same = delete_vertices(g, VertexSet(g.order()));
    ASSERT_TRUE(same);
    EXPECT_EQ(same->graph, g);

    EXPECT_FALSE(delete_vertices(complete_graph(2), VertexSet(2, {0, 1})));
}

TEST(DeleteVertices, HubOfKappaFamily) {
    for (int kappa = 1; kappa <= 3; ++kappa) {
        for (int delta = kappa; delta <= kappa + 3; ++delta) {
            Graph g = kappa_family(kappa, delta);
            VertexSet hub(g.order());
            for (int v = g.order() - kappa; v < g.order(); ++v) hub.insert(v);
            auto rest = delete_vertices(g, hub);
            ASSERT_TRUE(rest);
            EXPECT_EQ(rest->graph.order(), g.order() - kappa);
            auto comps = components(rest->graph);
            ASSERT_EQ(static_cast<int>(comps.size()), kappa + 1);
            for (const auto& c : comps) {
                auto sub = induced_subgraph(rest->graph, c);
                EXPECT_EQ(sub->graph, complete_graph(delta - kappa + 1));
            }
        }
    }
}

TEST(VertexSetTest, Basics) {
    VertexSet s(70, {0, 65});
    EXPECT_EQ(s.size(), 2);
    EXPECT_TRUE(s.contains(65));
    EXPECT_FALSE(s.contains(64));
    EXPECT_THROW(s.insert(70), std::out_of_range);
}

}  // namespace
}  // namespace circum
