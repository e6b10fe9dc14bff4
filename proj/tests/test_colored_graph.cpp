#include <gtest/gtest.h>

#include "rainsat/colored_graph.hpp"
#include "rainsat/patterns.hpp"
#include "test_util.hpp"

using namespace rainsat;

TEST(Edge, IsCanonical)
{
	Edge const e{5, 2};
	EXPECT_EQ(e.u, 2U);
	EXPECT_EQ(e.v, 5U);
	EXPECT_EQ(e, Edge(2, 5));
	EXPECT_TRUE(e.contains(5));
	EXPECT_EQ(e.other(2), 5U);
}

TEST(ColoredGraph, AddAndQuery)
{
	ColoredGraph g(4, 3);
	g.add_edge(2, 0, 3);
	g.add_edge(1, 2, 1);
	EXPECT_EQ(g.size(), 2U);
	EXPECT_TRUE(g.has_edge(0, 2));
	EXPECT_EQ(g.color(0, 2), 3U);
	EXPECT_EQ(g.color(2, 0), 3U);
	EXPECT_EQ(g.degree(2), 2U);
	EXPECT_EQ(g.neighbors(2), (std::vector<Vertex>{0, 1}));
	EXPECT_FALSE(g.has_edge(0, 1));
	EXPECT_EQ(g.color(0, 1), no_color);

	auto const edges = g.edges();
	ASSERT_EQ(edges.size(), 2U);
	EXPECT_EQ(edges[0].edge, Edge(0, 2));
	EXPECT_EQ(edges[1].edge, Edge(1, 2));
}

TEST(ColoredGraph, RejectsBadInput)
{
	ColoredGraph g(3, 2);
	g.add_edge(0, 1, 1);
	EXPECT_ERRC(g.add_edge(1, 0, 2), Errc::DuplicateEdge);
	EXPECT_ERRC(g.add_edge(0, 2, 3), Errc::BadColor);
	EXPECT_ERRC(g.add_edge(0, 2, 0), Errc::BadColor);
	EXPECT_ERRC(g.add_edge(0, 3, 1), Errc::BadVertex);
	EXPECT_ERRC(g.add_edge(1, 1, 1), Errc::BadVertex);
	EXPECT_ERRC(g.remove_edge(0, 2), Errc::MissingEdge);
}

TEST(ColoredGraph, RemoveRestoresState)
{
	ColoredGraph g(70, 2);
	g.add_edge(3, 65, 2);
	g.remove_edge(65, 3);
	EXPECT_EQ(g, ColoredGraph(70, 2));
	EXPECT_FALSE(g.adjacency().test(3, 65));
}

TEST(ColoredGraph, PaletteWidening)
{
	ColoredGraph g(3, 2);
	g.add_edge(0, 1, 2);
	auto const wide = g.with_palette(5);
	EXPECT_EQ(wide.palette(), 5U);
	EXPECT_EQ(wide.color(0, 1), 2U);
	EXPECT_ERRC(g.with_palette(1), Errc::BadColor);
}

TEST(ColoredGraph, NonEdgesAndHelpers)
{
	auto const k = monochromatic_clique(4, 3, 2);
	EXPECT_EQ(k.size(), 6U);
	EXPECT_TRUE(non_edges(k).empty());
	EXPECT_TRUE(sees_color(k, 0, 2));
	EXPECT_FALSE(sees_color(k, 0, 1));

	ColoredGraph g(3, 1);
	auto const h = add_colored_edge(g, 0, 2, 1);
	EXPECT_EQ(g.size(), 0U);
	EXPECT_EQ(h.size(), 1U);
	EXPECT_EQ(non_edges(h), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(Pattern, Basics)
{
	Pattern const p(4, {{2, 3}, {0, 1}, {1, 2}});
	EXPECT_EQ(p.order(), 4U);
	EXPECT_EQ(p.size(), 3U);
	EXPECT_EQ(p.edges().front(), Edge(0, 1));
	EXPECT_EQ(p.degree(1), 2U);
	EXPECT_FALSE(p.has_isolated_vertex());
	EXPECT_ERRC(Pattern(3, {{0, 1}, {1, 0}}), Errc::DuplicateEdge);
	EXPECT_ERRC(Pattern(3, {{0, 3}}), Errc::BadVertex);
	EXPECT_TRUE(Pattern(3, {{0, 1}}).has_isolated_vertex());
}

TEST(Patterns, Families)
{
	EXPECT_EQ(patterns::complete(5).size(), 10U);
	EXPECT_EQ(patterns::path(4).size(), 3U);
	EXPECT_EQ(patterns::cycle(5).size(), 5U);
	auto const s = patterns::star(3);
	EXPECT_EQ(s.order(), 4U);
	EXPECT_EQ(s.degree(0), 3U);
	EXPECT_TRUE(patterns::is_star(s));
	EXPECT_FALSE(patterns::is_star(patterns::path(4)));

	auto const h = patterns::hkl(4, 2);
	EXPECT_EQ(h.order(), 6U);
	EXPECT_EQ(h.size(), 6U + 2U + 1U);
	EXPECT_EQ(patterns::rotated_clique(4), patterns::hkl(3, 2));
	// K_r minus an edge plus a pendant edge: same edge count as K_r
	EXPECT_EQ(patterns::rotated_clique(5).size(), patterns::complete(5).size());
}

TEST(Patterns, Components)
{
	auto const u = patterns::disjoint_union(patterns::complete(3), patterns::path(2));
	EXPECT_EQ(u.order(), 5U);
	EXPECT_FALSE(patterns::is_connected(u));
	auto const comps = patterns::component_patterns(u);
	ASSERT_EQ(comps.size(), 2U);
	EXPECT_EQ(comps[0], patterns::complete(3));
	EXPECT_EQ(comps[1], patterns::path(2));
}
