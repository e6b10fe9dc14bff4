#include <gtest/gtest.h>

#include <map>
#include <set>

#include "rainsat/constructions.hpp"
#include "rainsat/designs.hpp"
#include "test_util.hpp"

using namespace rainsat;

class SteinerOrders : public ::testing::TestWithParam<Point> {};

TEST_P(SteinerOrders, Invariants)
{
	Point const t = GetParam();
	auto const s = steiner_triple_system(t);
	EXPECT_EQ(s.lines().size(), std::size_t{t} * (t - 1) / 6);
	EXPECT_EQ(s.flags().size(), std::size_t{t} * (t - 1) / 2);

	// every pair on exactly one line, counted independently of the index
	std::map<std::pair<Point, Point>, int> cover;
	for (auto const &l : s.lines()) {
		EXPECT_LT(l[0], l[1]);
		EXPECT_LT(l[1], l[2]);
		for (int a = 0; a < 3; ++a)
			for (int b = a + 1; b < 3; ++b)
				++cover[{l[a], l[b]}];
	}
	EXPECT_EQ(cover.size(), std::size_t{t} * (t - 1) / 2);
	for (auto const &[pair, count] : cover)
		EXPECT_EQ(count, 1) << pair.first << "," << pair.second;

	for (Point a = 1; a <= t; ++a) {
		EXPECT_EQ(s.star(a, a), a);
		for (Point b = 1; b <= t; ++b) {
			EXPECT_EQ(s.star(a, b), s.star(b, a));
			EXPECT_EQ(s.star(a, s.star(a, b)), b);
			if (a != b) {
				auto const &l = s.lines()[s.line_through(a, b)];
				EXPECT_TRUE(std::set<Point>(l.begin(), l.end()) == (std::set<Point>{a, b, s.star(a, b)}));
			}
		}
	}
}

INSTANTIATE_TEST_SUITE_P(AdmissibleOrders, SteinerOrders, ::testing::Values(3, 7, 9, 13, 15, 19, 21, 25, 27));

TEST(Steiner, NoSystemForOtherResidues)
{
	for (Point t : {0U, 1U, 2U, 4U, 5U, 6U, 8U, 10U, 11U, 12U, 14U})
		EXPECT_ERRC(steiner_triple_system(t), Errc::NoSuchSystem);
}

TEST(Steiner, RejectsInvalidLines)
{
	EXPECT_ERRC(SteinerTripleSystem(3, {{1, 2, 2}}), Errc::BadInput);
	EXPECT_ERRC(SteinerTripleSystem(7, {{1, 2, 3}}), Errc::BadInput);
	EXPECT_ERRC(SteinerTripleSystem(3, {{1, 2, 3}, {1, 2, 3}}), Errc::BadInput);
}

TEST(Steiner, FlagsFollowLineOrder)
{
	auto const s = steiner_triple_system(7);
	auto const &f = s.flags();
	for (std::size_t i = 0; i < f.size(); ++i) {
		EXPECT_EQ(f[i].line, i / 3);
		EXPECT_EQ(f[i].point, s.line_point(i / 3, i % 3 + 1));
	}
}

class FactorizationOrders : public ::testing::TestWithParam<std::size_t> {};

TEST_P(FactorizationOrders, ProperAndPerfect)
{
	std::size_t const r = GetParam();
	auto const f = one_factorization(r);
	EXPECT_EQ(f.colors(), r - 1);
	for (Vertex u = 0; u < r; ++u) {
		std::set<Color> seen;
		for (Vertex v = 0; v < r; ++v)
			if (u != v) {
				auto const c = f.color(u, v);
				EXPECT_GE(c, 1U);
				EXPECT_LE(c, r - 1);
				EXPECT_EQ(c, f.color(v, u));
				EXPECT_TRUE(seen.insert(c).second) << "colour repeated at " << u;
			}
	}
	for (Color i = 1; i <= r - 1; ++i) {
		auto const &m = f.matching(i);
		ASSERT_EQ(m.size(), r / 2);
		EXPECT_TRUE(std::is_sorted(m.begin(), m.end()));
		for (std::size_t k = 1; k <= r / 2; ++k) {
			EXPECT_EQ(f.color(f.g(i, k).u, f.g(i, k).v), i);
			EXPECT_EQ(f.g_inverse(i, f.g(i, k)), k);
		}
	}
}

INSTANTIATE_TEST_SUITE_P(EvenOrders, FactorizationOrders, ::testing::Values(2, 4, 6, 8, 10, 12));

TEST(Factorization, OddOrder)
{
	EXPECT_ERRC(one_factorization(5), Errc::OddOrder);
	EXPECT_ERRC(one_factorization(0), Errc::OddOrder);
}

class GammaOrders : public ::testing::TestWithParam<std::size_t> {};

TEST_P(GammaOrders, EveryVertexSeesEachColourOnce)
{
	std::size_t const r = GetParam();
	auto const g = gamma_graph(r);
	std::size_t count = 1;
	for (std::size_t q = 0; q < r / 2; ++q)
		count *= r;
	std::size_t const colors = r * (r - 1) / 2;
	EXPECT_EQ(g.order(), count);
	EXPECT_EQ(g.palette(), colors);
	EXPECT_EQ(g.size(), count * colors / 2);
	for (Vertex v = 0; v < g.order(); ++v) {
		EXPECT_EQ(g.degree(v), colors);
		std::set<Color> seen;
		for (auto w : g.neighbors(v))
			seen.insert(g.color(v, w));
		EXPECT_EQ(seen.size(), colors) << "vertex " << v;
	}
}

INSTANTIATE_TEST_SUITE_P(EvenOrders, GammaOrders, ::testing::Values(4, 6));

TEST(Gamma, CliqueColourIndexRoundTrip)
{
	for (std::size_t r : {4U, 6U, 8U})
		for (Color c = 1; c <= r * (r - 1) / 2; ++c)
			EXPECT_EQ(clique_edge_color(r, clique_edge_of_color(r, c)), c);
}
