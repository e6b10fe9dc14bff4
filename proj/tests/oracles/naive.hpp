#pragma once

// Slow reference implementations used only by the tests. They share no code
// with the library beyond the graph containers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "rainsat/colored_graph.hpp"

namespace oracle {

using rainsat::Color;
using rainsat::ColoredGraph;
using rainsat::Edge;
using rainsat::Pattern;
using rainsat::Vertex;

// Every injective map V(h) -> V(host), in lexicographic order; stops when fn returns true.
inline bool for_each_injection(std::size_t p, std::size_t n, std::function<bool(std::vector<Vertex> const &)> const &fn)
{
	std::vector<Vertex> map(p);
	std::vector<bool> used(n, false);
	std::function<bool(std::size_t)> rec = [&](std::size_t i) {
		if (i == p)
			return fn(map);
		for (Vertex v = 0; v < n; ++v) {
			if (used[v])
				continue;
			used[v] = true;
			map[i] = v;
			bool const stop = rec(i + 1);
			used[v] = false;
			if (stop)
				return true;
		}
		return false;
	};
	return rec(0);
}

inline bool is_copy(ColoredGraph const &g, Pattern const &h, std::vector<Vertex> const &map, bool rainbow)
{
	std::set<Color> seen;
	for (auto const &e : h.edges()) {
		if (!g.has_edge(map[e.u], map[e.v]))
			return false;
		if (rainbow && !seen.insert(g.color(map[e.u], map[e.v])).second)
			return false;
	}
	return true;
}

inline bool has_copy(ColoredGraph const &g, Pattern const &h, bool rainbow = true)
{
	if (h.order() > g.order())
		return false;
	return for_each_injection(h.order(), g.order(), [&](auto const &m) { return is_copy(g, h, m, rainbow); });
}

inline std::size_t count_copies(ColoredGraph const &g, Pattern const &h, bool rainbow = true)
{
	std::size_t count = 0;
	if (h.order() <= g.order())
		for_each_injection(h.order(), g.order(), [&](auto const &m) {
			count += is_copy(g, h, m, rainbow);
			return false;
		});
	return count;
}

// Copy in g + {u,v}:c whose image uses {u,v}.
inline bool creates(ColoredGraph g, Vertex u, Vertex v, Color c, Pattern const &h, bool rainbow = true)
{
	g.add_edge(u, v, c);
	if (h.order() > g.order())
		return false;
	return for_each_injection(h.order(), g.order(), [&](auto const &m) {
		bool uses = false;
		for (auto const &e : h.edges())
			uses = uses || Edge{m[e.u], m[e.v]} == Edge{u, v};
		return uses && is_copy(g, h, m, rainbow);
	});
}

inline bool is_saturated(ColoredGraph const &g, Pattern const &h, bool rainbow = true)
{
	if (has_copy(g, h, rainbow))
		return false;
	Color const colors = rainbow ? g.palette() : 1;
	for (Vertex u = 0; u < g.order(); ++u)
		for (Vertex v = u + 1; v < g.order(); ++v)
			if (!g.has_edge(u, v))
				for (Color c = 1; c <= colors; ++c)
					if (!creates(g, u, v, c, h, rainbow))
						return false;
	return true;
}

// Minimum over all edge sets and all colourings in [t]^E, no symmetry pruning.
inline std::size_t exact_sat(std::size_t n, Color t, Pattern const &h, bool rainbow = true)
{
	if (!rainbow)
		t = 1;
	std::vector<Edge> pairs;
	for (Vertex u = 0; u < n; ++u)
		for (Vertex v = u + 1; v < n; ++v)
			pairs.emplace_back(u, v);
	std::size_t best = pairs.size() + 1;
	for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
		auto const k = static_cast<std::size_t>(__builtin_popcount(mask));
		if (k >= best)
			continue;
		std::vector<Edge> chosen;
		for (std::size_t i = 0; i < pairs.size(); ++i)
			if (mask >> i & 1U)
				chosen.push_back(pairs[i]);
		std::vector<Color> col(k, 1);
		while (true) {
			ColoredGraph g(n, t);
			for (std::size_t i = 0; i < k; ++i)
				g.add_edge(chosen[i].u, chosen[i].v, col[i]);
			if (is_saturated(g, h, rainbow)) {
				best = k;
				break;
			}
			std::size_t i = 0;
			while (i < k && col[i] == t)
				col[i++] = 1;
			if (i == k)
				break;
			++col[i];
		}
	}
	return best;
}

inline std::size_t component_count(std::size_t n, std::vector<Edge> const &edges)
{
	std::vector<std::size_t> parent(n);
	for (std::size_t i = 0; i < n; ++i)
		parent[i] = i;
	std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
	std::size_t count = n;
	for (auto const &e : edges) {
		auto a = find(e.u), b = find(e.v);
		if (a != b) {
			parent[a] = b;
			--count;
		}
	}
	return count;
}

// Bridges by deletion.
inline std::vector<Edge> bridges(Pattern const &h)
{
	std::vector<Edge> out;
	auto const base = component_count(h.order(), h.edges());
	for (std::size_t i = 0; i < h.size(); ++i) {
		auto rest = h.edges();
		rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
		if (component_count(h.order(), rest) > base)
			out.push_back(h.edges()[i]);
	}
	return out;
}

// Ordered pairs (A, B) of u-subsets of [s] with A ∩ B = ∅, and the total.
inline std::pair<std::uint64_t, std::uint64_t> disjoint_subset_pairs(unsigned s, unsigned u)
{
	std::vector<std::uint32_t> subsets;
	for (std::uint32_t m = 0; m < (1U << s); ++m)
		if (static_cast<unsigned>(__builtin_popcount(m)) == u)
			subsets.push_back(m);
	std::uint64_t disjoint = 0;
	for (auto a : subsets)
		for (auto b : subsets)
			disjoint += (a & b) == 0;
	return {disjoint, static_cast<std::uint64_t>(subsets.size()) * subsets.size()};
}

inline ColoredGraph random_graph(std::size_t n, Color t, double density, std::uint64_t &state)
{
	auto next = [&state] {
		state ^= state << 13;
		state ^= state >> 7;
		state ^= state << 17;
		return state;
	};
	ColoredGraph g(n, t);
	for (Vertex u = 0; u < n; ++u)
		for (Vertex v = u + 1; v < n; ++v)
			if (static_cast<double>(next() % 1000) < density * 1000)
				g.add_edge(u, v, static_cast<Color>(next() % t + 1));
	return g;
}

inline Pattern random_pattern(std::size_t p, double density, std::uint64_t &state)
{
	auto next = [&state] {
		state ^= state << 13;
		state ^= state >> 7;
		state ^= state << 17;
		return state;
	};
	std::vector<Edge> edges;
	for (Vertex u = 0; u < p; ++u)
		for (Vertex v = u + 1; v < p; ++v)
			if (static_cast<double>(next() % 1000) < density * 1000)
				edges.emplace_back(u, v);
	if (edges.empty())
		edges.emplace_back(0, 1);
	return Pattern(p, std::move(edges));
}

} // namespace oracle
