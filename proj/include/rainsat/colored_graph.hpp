#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace rainsat {

using Vertex = std::uint32_t;
using Color = std::uint32_t; // 1..t; 0 means "no edge"

inline constexpr Color no_color = 0;

// Unordered vertex pair stored canonically with u < v.
struct Edge {
	Vertex u{};
	Vertex v{};

	constexpr Edge() = default;
	constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

	constexpr bool contains(Vertex w) const { return u == w || v == w; }
	constexpr Vertex other(Vertex w) const { return w == u ? v : u; }

	friend constexpr auto operator<=>(Edge const &, Edge const &) = default;
};

struct ColoredEdge {
	Edge edge;
	Color color{};

	friend constexpr auto operator<=>(ColoredEdge const &, ColoredEdge const &) = default;
};

// Row-major bitset adjacency; shared by ColoredGraph and the embedding search.
class AdjacencyBits {
public:
	AdjacencyBits() = default;
	explicit AdjacencyBits(std::size_t n) : m_n(n), m_words((n + 63) / 64), m_bits(n * m_words, 0) {}

	std::size_t order() const { return m_n; }
	std::size_t words() const { return m_words; }

	bool test(Vertex u, Vertex v) const { return (m_bits[u * m_words + v / 64] >> (v % 64)) & 1U; }
	void set(Vertex u, Vertex v) { m_bits[u * m_words + v / 64] |= std::uint64_t{1} << (v % 64); }
	void reset(Vertex u, Vertex v) { m_bits[u * m_words + v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

	std::span<std::uint64_t const> row(Vertex u) const { return {m_bits.data() + u * m_words, m_words}; }

private:
	std::size_t m_n{};
	std::size_t m_words{};
	std::vector<std::uint64_t> m_bits;
};

// Calls fn(index) for every set bit, in increasing order.
template <typename Fn>
void for_each_bit(std::span<std::uint64_t const> words, Fn &&fn)
{
	for (std::size_t w = 0; w < words.size(); ++w) {
		std::uint64_t bits = words[w];
		while (bits) {
			auto const b = static_cast<Vertex>(std::countr_zero(bits));
			fn(static_cast<Vertex>(w * 64 + b));
			bits &= bits - 1;
		}
	}
}

// A simple undirected graph whose every edge carries a colour from 1..t.
class ColoredGraph {
public:
	ColoredGraph() = default;

	ColoredGraph(std::size_t n, Color t) : m_n(n), m_t(t), m_colors(n * n, no_color), m_adj(n), m_degree(n, 0)
	{
		if (t == 0)
			fail(Errc::BadColor, "palette must contain at least one colour");
	}

	std::size_t order() const { return m_n; }
	Color palette() const { return m_t; }
	std::size_t size() const { return m_edges; }

	bool has_edge(Vertex u, Vertex v) const { return u < m_n && v < m_n && m_adj.test(u, v); }

	// Colour of {u,v}, or no_color when absent.
	Color color(Vertex u, Vertex v) const { return m_colors[u * m_n + v]; }

	std::size_t degree(Vertex v) const { return m_degree[v]; }
	AdjacencyBits const &adjacency() const { return m_adj; }

	void add_edge(Vertex u, Vertex v, Color c)
	{
		check_vertex(u);
		check_vertex(v);
		if (u == v)
			fail(Errc::BadVertex, "self-loop at " + std::to_string(u));
		if (c < 1 || c > m_t)
			fail(Errc::BadColor, "colour " + std::to_string(c) + " outside [1," + std::to_string(m_t) + "]");
		if (m_adj.test(u, v))
			fail(Errc::DuplicateEdge, "{" + std::to_string(u) + "," + std::to_string(v) + "} already present");
		m_adj.set(u, v);
		m_adj.set(v, u);
		m_colors[u * m_n + v] = c;
		m_colors[v * m_n + u] = c;
		++m_degree[u];
		++m_degree[v];
		++m_edges;
	}

	void remove_edge(Vertex u, Vertex v)
	{
		check_vertex(u);
		check_vertex(v);
		if (u == v || !m_adj.test(u, v))
			fail(Errc::MissingEdge, "{" + std::to_string(u) + "," + std::to_string(v) + "} not present");
		m_adj.reset(u, v);
		m_adj.reset(v, u);
		m_colors[u * m_n + v] = no_color;
		m_colors[v * m_n + u] = no_color;
		--m_degree[u];
		--m_degree[v];
		--m_edges;
	}

	// Copy with a wider palette; colours are kept.
	ColoredGraph with_palette(Color t) const
	{
		for (auto const &ce : edges())
			if (ce.color > t)
				fail(Errc::BadColor, "edge colour exceeds the requested palette");
		ColoredGraph g = *this;
		g.m_t = t;
		return g;
	}

	std::vector<Vertex> neighbors(Vertex v) const
	{
		std::vector<Vertex> out;
		out.reserve(m_degree[v]);
		for_each_bit(m_adj.row(v), [&](Vertex w) { out.push_back(w); });
		return out;
	}

	// Edges in lexicographic (u, v) order.
	std::vector<ColoredEdge> edges() const
	{
		std::vector<ColoredEdge> out;
		out.reserve(m_edges);
		for (Vertex u = 0; u < m_n; ++u)
			for_each_bit(m_adj.row(u), [&](Vertex v) {
				if (u < v)
					out.push_back({Edge{u, v}, color(u, v)});
			});
		return out;
	}

	friend bool operator==(ColoredGraph const &a, ColoredGraph const &b)
	{
		return a.m_n == b.m_n && a.m_t == b.m_t && a.m_colors == b.m_colors;
	}

private:
	void check_vertex(Vertex v) const
	{
		if (v >= m_n)
			fail(Errc::BadVertex, "vertex " + std::to_string(v) + " out of range (n=" + std::to_string(m_n) + ")");
	}

	std::size_t m_n{};
	Color m_t{1};
	std::vector<Color> m_colors;
	AdjacencyBits m_adj;
	std::vector<std::size_t> m_degree;
	std::size_t m_edges{};
};

inline ColoredGraph add_colored_edge(ColoredGraph g, Vertex u, Vertex v, Color c)
{
	g.add_edge(u, v, c);
	return g;
}

// Pairs {u,v}, u != v, absent from g, in lexicographic order.
inline std::vector<Edge> non_edges(ColoredGraph const &g)
{
	std::vector<Edge> out;
	auto const n = static_cast<Vertex>(g.order());
	for (Vertex u = 0; u < n; ++u)
		for (Vertex v = u + 1; v < n; ++v)
			if (!g.has_edge(u, v))
				out.emplace_back(u, v);
	return out;
}

inline bool sees_color(ColoredGraph const &g, Vertex v, Color c)
{
	bool seen = false;
	for_each_bit(g.adjacency().row(v), [&](Vertex w) { seen = seen || g.color(v, w) == c; });
	return seen;
}

inline ColoredGraph monochromatic_clique(std::size_t n, Color t, Color c = 1)
{
	ColoredGraph g(n, t);
	for (Vertex u = 0; u < n; ++u)
		for (Vertex v = u + 1; v < n; ++v)
			g.add_edge(u, v, c);
	return g;
}


// Uncoloured target graph H.
class Pattern {
public:
	Pattern() = default;

	Pattern(std::size_t n, std::vector<Edge> edges) : m_n(n), m_adj(n, std::vector<bool>(n, false)), m_degree(n, 0)
	{
		std::sort(edges.begin(), edges.end());
		for (auto const &e : edges) {
			if (e.u == e.v)
				fail(Errc::BadVertex, "pattern self-loop at " + std::to_string(e.u));
			if (e.v >= n)
				fail(Errc::BadVertex, "pattern vertex " + std::to_string(e.v) + " out of range");
			if (m_adj[e.u][e.v])
				fail(Errc::DuplicateEdge, "pattern edge repeated");
			m_adj[e.u][e.v] = m_adj[e.v][e.u] = true;
			++m_degree[e.u];
			++m_degree[e.v];
		}
		m_edges = std::move(edges);
	}

	std::size_t order() const { return m_n; }
	std::size_t size() const { return m_edges.size(); }
	std::vector<Edge> const &edges() const { return m_edges; }
	bool has_edge(Vertex u, Vertex v) const { return u < m_n && v < m_n && m_adj[u][v]; }
	std::size_t degree(Vertex v) const { return m_degree[v]; }

	std::vector<Vertex> neighbors(Vertex v) const
	{
		std::vector<Vertex> out;
		for (Vertex w = 0; w < m_n; ++w)
			if (m_adj[v][w])
				out.push_back(w);
		return out;
	}

	// Index of {u,v} in edges(), or size() if absent.
	std::size_t edge_index(Vertex u, Vertex v) const
	{
		Edge const e{u, v};
		auto const it = std::lower_bound(m_edges.begin(), m_edges.end(), e);
		return (it != m_edges.end() && *it == e) ? static_cast<std::size_t>(it - m_edges.begin()) : m_edges.size();
	}

	bool has_isolated_vertex() const
	{
		return std::any_of(m_degree.begin(), m_degree.end(), [](std::size_t d) { return d == 0; });
	}

	// Relabels vertices: vertex v becomes perm[v].
	Pattern relabeled(std::span<Vertex const> perm) const
	{
		std::vector<Edge> out;
		out.reserve(m_edges.size());
		for (auto const &e : m_edges)
			out.emplace_back(perm[e.u], perm[e.v]);
		return Pattern(m_n, std::move(out));
	}

	friend bool operator==(Pattern const &a, Pattern const &b) { return a.m_n == b.m_n && a.m_edges == b.m_edges; }

private:
	std::size_t m_n{};
	std::vector<Edge> m_edges;
	std::vector<std::vector<bool>> m_adj;
	std::vector<std::size_t> m_degree;
};

} // namespace rainsat
