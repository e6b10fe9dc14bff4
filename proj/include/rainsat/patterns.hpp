#pragma once

#include <numeric>
#include <vector>

#include "colored_graph.hpp"

// Named pattern families and component utilities.

namespace rainsat::patterns {

inline Pattern complete(std::size_t r)
{
	std::vector<Edge> edges;
	for (Vertex u = 0; u < r; ++u)
		for (Vertex v = u + 1; v < r; ++v)
			edges.emplace_back(u, v);
	return Pattern(r, std::move(edges));
}

// Path on k vertices (k-1 edges).
inline Pattern path(std::size_t k)
{
	std::vector<Edge> edges;
	for (Vertex v = 0; v + 1 < k; ++v)
		edges.emplace_back(v, v + 1);
	return Pattern(k, std::move(edges));
}

inline Pattern cycle(std::size_t k)
{
	if (k < 3)
		fail(Errc::BadParameters, "cycle needs at least 3 vertices");
	std::vector<Edge> edges;
	for (Vertex v = 0; v < k; ++v)
		edges.emplace_back(v, static_cast<Vertex>((v + 1) % k));
	return Pattern(k, std::move(edges));
}

// K_{1,k}: centre 0, leaves 1..k.
inline Pattern star(std::size_t k)
{
	if (k < 1)
		fail(Errc::BadParameters, "star needs at least one leaf");
	std::vector<Edge> edges;
	for (Vertex v = 1; v <= k; ++v)
		edges.emplace_back(0, v);
	return Pattern(k + 1, std::move(edges));
}

// K_k on 0..k-1, middle vertex k adjacent to 0..l-1, leaf k+1 hanging off k.
inline Pattern hkl(std::size_t k, std::size_t l)
{
	if (k < 3 || l < 1 || l > k)
		fail(Errc::BadParameters, "H_{k,l} needs k >= 3 and 1 <= l <= k");
	std::vector<Edge> edges = complete(k).edges();
	auto const x = static_cast<Vertex>(k);
	for (Vertex v = 0; v < l; ++v)
		edges.emplace_back(v, x);
	edges.emplace_back(x, x + 1);
	return Pattern(k + 2, std::move(edges));
}

// K_r with one edge rotated onto a new vertex; the same graph as H_{r-1,r-2}.
inline Pattern rotated_clique(std::size_t r)
{
	if (r < 4)
		fail(Errc::BadParameters, "rotated clique needs r >= 4");
	return hkl(r - 1, r - 2);
}

inline Pattern disjoint_union(Pattern const &a, Pattern const &b)
{
	std::vector<Edge> edges = a.edges();
	auto const shift = static_cast<Vertex>(a.order());
	for (auto const &e : b.edges())
		edges.emplace_back(e.u + shift, e.v + shift);
	return Pattern(a.order() + b.order(), std::move(edges));
}

// Connected components as sorted vertex lists, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> components(Pattern const &h)
{
	std::vector<Vertex> parent(h.order());
	std::iota(parent.begin(), parent.end(), Vertex{0});
	auto find = [&](Vertex v) {
		while (parent[v] != v)
			v = parent[v] = parent[parent[v]];
		return v;
	};
	for (auto const &e : h.edges())
		parent[find(e.u)] = find(e.v);

	std::vector<std::vector<Vertex>> out;
	std::vector<std::size_t> slot(h.order(), SIZE_MAX);
	for (Vertex v = 0; v < h.order(); ++v) {
		auto const root = find(v);
		if (slot[root] == SIZE_MAX) {
			slot[root] = out.size();
			out.emplace_back();
		}
		out[slot[root]].push_back(v);
	}
	return out;
}

inline bool is_connected(Pattern const &h) { return h.order() > 0 && components(h).size() == 1; }

// Subgraph induced on `keep`, relabelled 0..keep.size()-1 in the given order.
inline Pattern induced(Pattern const &h, std::vector<Vertex> const &keep)
{
	std::vector<Vertex> pos(h.order(), UINT32_MAX);
	for (std::size_t i = 0; i < keep.size(); ++i)
		pos[keep[i]] = static_cast<Vertex>(i);
	std::vector<Edge> edges;
	for (auto const &e : h.edges())
		if (pos[e.u] != UINT32_MAX && pos[e.v] != UINT32_MAX)
			edges.emplace_back(pos[e.u], pos[e.v]);
	return Pattern(keep.size(), std::move(edges));
}

inline std::vector<Pattern> component_patterns(Pattern const &h)
{
	std::vector<Pattern> out;
	for (auto const &comp : components(h))
		out.push_back(induced(h, comp));
	return out;
}

// Connected with some vertex adjacent to all others and no other edges.
inline bool is_star(Pattern const &h)
{
	if (h.order() < 2 || h.size() != h.order() - 1)
		return false;
	for (Vertex v = 0; v < h.order(); ++v)
		if (h.degree(v) == h.order() - 1)
			return true;
	return false;
}

} // namespace rainsat::patterns
