#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "colored_graph.hpp"
#include "patterns.hpp"
#include "rainbow_embed.hpp"

namespace rainsat {

inline bool is_isomorphic(Pattern const &a, Pattern const &b)
{
	if (a.order() != b.order() || a.size() != b.size())
		return false;
	auto degrees = [](Pattern const &p) {
		std::vector<std::size_t> d(p.order());
		for (Vertex v = 0; v < p.order(); ++v)
			d[v] = p.degree(v);
		std::sort(d.begin(), d.end());
		return d;
	};
	if (degrees(a) != degrees(b))
		return false;
	if (a.size() == 0)
		return true;
	// with equal vertex and edge counts an injective copy is a bijection
	ColoredGraph host(b.order(), 1);
	for (auto const &e : b.edges())
		host.add_edge(e.u, e.v, 1);
	return find_copy(host, a, CopyRule::Any).has_value();
}

// Returns (k, l) when h is isomorphic to H_{k,l}.
inline std::optional<std::pair<std::size_t, std::size_t>> match_hkl(Pattern const &h)
{
	if (h.order() < 5)
		return std::nullopt;
	std::size_t const k = h.order() - 2;
	std::size_t const clique_edges = k * (k - 1) / 2;
	if (h.size() < clique_edges + 2)
		return std::nullopt;
	std::size_t const l = h.size() - clique_edges - 1;
	if (l < 1 || l > k)
		return std::nullopt;
	if (!is_isomorphic(h, patterns::hkl(k, l)))
		return std::nullopt;
	return std::pair{k, l};
}

struct StructureProfile {
	bool is_star{};
	std::vector<Vertex> conical_vertices;
	bool every_edge_in_triangle{};
	std::vector<Edge> triangle_edges;
	std::vector<Edge> pendant_edges;
	std::vector<Edge> bridges;
	std::vector<Edge> non_pendant_bridges;
	std::vector<Edge> edges_in_cycle_not_triangle;
	std::optional<std::size_t> rotated_clique_r;
	std::optional<std::pair<std::size_t, std::size_t>> hkl_params;
};

namespace detail {

// Cut edges by DFS low-links.
inline std::vector<Edge> bridges(Pattern const &h)
{
	auto const n = h.order();
	std::vector<int> disc(n, -1), low(n, 0);
	std::vector<Edge> out;
	int timer = 0;
	std::function<void(Vertex, int)> dfs = [&](Vertex v, int parent) {
		disc[v] = low[v] = timer++;
		for (auto w : h.neighbors(v)) {
			if (static_cast<int>(w) == parent)
				continue;
			if (disc[w] >= 0) {
				low[v] = std::min(low[v], disc[w]);
			} else {
				dfs(w, static_cast<int>(v));
				low[v] = std::min(low[v], low[w]);
				if (low[w] > disc[v])
					out.emplace_back(v, w);
			}
		}
	};
	for (Vertex v = 0; v < n; ++v)
		if (disc[v] < 0)
			dfs(v, -1);
	std::sort(out.begin(), out.end());
	return out;
}

inline bool in_triangle(Pattern const &h, Edge e)
{
	for (Vertex w = 0; w < h.order(); ++w)
		if (h.has_edge(e.u, w) && h.has_edge(e.v, w))
			return true;
	return false;
}

} // namespace detail

inline StructureProfile profile(Pattern const &h)
{
	if (h.order() < 3)
		fail(Errc::TooSmall, "pattern needs at least 3 vertices");
	if (!patterns::is_connected(h))
		fail(Errc::Disconnected, "pattern is disconnected");

	StructureProfile p;
	p.is_star = patterns::is_star(h);
	for (Vertex v = 0; v < h.order(); ++v)
		if (h.degree(v) == h.order() - 1)
			p.conical_vertices.push_back(v);
	p.bridges = detail::bridges(h);
	p.every_edge_in_triangle = true;
	for (auto const &e : h.edges()) {
		bool const tri = detail::in_triangle(h, e);
		bool const pendant = h.degree(e.u) == 1 || h.degree(e.v) == 1;
		bool const bridge = std::binary_search(p.bridges.begin(), p.bridges.end(), e);
		if (tri)
			p.triangle_edges.push_back(e);
		else
			p.every_edge_in_triangle = false;
		if (pendant)
			p.pendant_edges.push_back(e);
		if (bridge && !pendant)
			p.non_pendant_bridges.push_back(e);
		if (!bridge && !tri)
			p.edges_in_cycle_not_triangle.push_back(e);
	}
	p.hkl_params = match_hkl(h);
	if (p.hkl_params && p.hkl_params->second + 1 == p.hkl_params->first)
		p.rotated_clique_r = p.hkl_params->first + 1;
	return p;
}


enum class SpecialEdgeKind { CycleNotTriangle, NonPendantBridge, TriangleEdge, NoSpecialEdge };

inline std::string_view to_string(SpecialEdgeKind kind)
{
	switch (kind) {
		case SpecialEdgeKind::CycleNotTriangle: return "CycleNotTriangle";
		case SpecialEdgeKind::NonPendantBridge: return "NonPendantBridge";
		case SpecialEdgeKind::TriangleEdge: return "TriangleEdge";
		case SpecialEdgeKind::NoSpecialEdge: return "NoSpecialEdge";
	}
	return "?";
}

// Oriented edge xy with d(x) >= d(y) (ties: smaller index first).
struct SpecialEdge {
	Vertex x{};
	Vertex y{};
	SpecialEdgeKind kind{SpecialEdgeKind::NoSpecialEdge};
};

namespace detail {

inline SpecialEdge orient(Pattern const &h, Edge e, SpecialEdgeKind kind)
{
	if (h.degree(e.v) > h.degree(e.u))
		return {e.v, e.u, kind};
	return {e.u, e.v, kind};
}

} // namespace detail

// Priority: an edge on a cycle but in no triangle; else the non-pendant
// bridge whose larger-degree endpoint has maximum degree; else a triangle
// edge. Stars have none of these.
inline SpecialEdge find_special_edge(Pattern const &h)
{
	auto const p = profile(h);
	if (!p.edges_in_cycle_not_triangle.empty())
		return detail::orient(h, p.edges_in_cycle_not_triangle.front(), SpecialEdgeKind::CycleNotTriangle);
	if (!p.non_pendant_bridges.empty()) {
		std::optional<SpecialEdge> best;
		for (auto const &e : p.non_pendant_bridges) {
			auto const cand = detail::orient(h, e, SpecialEdgeKind::NonPendantBridge);
			if (!best || h.degree(cand.x) > h.degree(best->x)
			    || (h.degree(cand.x) == h.degree(best->x)
			        && std::pair{cand.x, cand.y} < std::pair{best->x, best->y}))
				best = cand;
		}
		return *best;
	}
	if (!p.triangle_edges.empty())
		return detail::orient(h, p.triangle_edges.front(), SpecialEdgeKind::TriangleEdge);
	return {};
}


enum class GrowthTag { Quadratic, NLogN, Linear, UnresolvedClassB };

enum class GrowthClause {
	Star,                          // quadratic
	EveryEdgeInTriangle,           // n log n
	ConicalNonStar,                // n log n
	NonPendantEdgeOutsideTriangle, // linear
	EvenRotatedClique,             // linear
	LargePalette,                  // linear once t >= |H|^2
	HklLargePalette,               // linear for H_{k,l}, 2 <= l <= k-2, t >= k(k-1)
	OddRotatedClique,              // unresolved
	PaletteBelowThreshold,         // unresolved
};

inline std::string_view to_string(GrowthTag tag)
{
	switch (tag) {
		case GrowthTag::Quadratic: return "Θ(n²)";
		case GrowthTag::NLogN: return "Θ(n log n)";
		case GrowthTag::Linear: return "Θ(n)";
		case GrowthTag::UnresolvedClassB: return "unresolved (class B)";
	}
	return "?";
}

inline std::string_view to_string(GrowthClause clause)
{
	switch (clause) {
		case GrowthClause::Star: return "H is a star";
		case GrowthClause::EveryEdgeInTriangle: return "every edge of H lies in a triangle";
		case GrowthClause::ConicalNonStar: return "H has a conical vertex and is not a star";
		case GrowthClause::NonPendantEdgeOutsideTriangle: return "H has a non-pendant edge in no triangle";
		case GrowthClause::EvenRotatedClique: return "H is K_r with a rotated edge, r even";
		case GrowthClause::LargePalette: return "t >= |H|^2, H has a pendant edge and no conical vertex";
		case GrowthClause::HklLargePalette: return "H = H_{k,l} with 2 <= l <= k-2 and t >= k(k-1)";
		case GrowthClause::OddRotatedClique: return "H is K_r with a rotated edge, r odd >= 5";
		case GrowthClause::PaletteBelowThreshold: return "palette below every known linear threshold";
	}
	return "?";
}

struct GrowthClass {
	GrowthTag tag{};
	GrowthClause reason{};
	std::vector<GrowthClause> satisfied; // every clause that holds, in evaluation order
};

inline GrowthClass classify(Pattern const &h, std::size_t t)
{
	if (t < h.size())
		fail(Errc::PaletteTooSmall, "t < e(H)");
	auto const p = profile(h);

	std::vector<std::pair<GrowthClause, GrowthTag>> hits;
	if (p.is_star)
		hits.emplace_back(GrowthClause::Star, GrowthTag::Quadratic);
	if (p.every_edge_in_triangle)
		hits.emplace_back(GrowthClause::EveryEdgeInTriangle, GrowthTag::NLogN);
	if (!p.conical_vertices.empty() && !p.is_star)
		hits.emplace_back(GrowthClause::ConicalNonStar, GrowthTag::NLogN);
	bool const non_pendant_outside = std::any_of(h.edges().begin(), h.edges().end(), [&](Edge const &e) {
		return h.degree(e.u) > 1 && h.degree(e.v) > 1 && !detail::in_triangle(h, e);
	});
	if (non_pendant_outside)
		hits.emplace_back(GrowthClause::NonPendantEdgeOutsideTriangle, GrowthTag::Linear);
	bool const odd_rotated = p.rotated_clique_r && *p.rotated_clique_r % 2 == 1 && *p.rotated_clique_r >= 5;
	if (p.rotated_clique_r && *p.rotated_clique_r % 2 == 0)
		hits.emplace_back(GrowthClause::EvenRotatedClique, GrowthTag::Linear);

	if (hits.empty()) {
		bool const has_pendant = !p.pendant_edges.empty();
		if (t >= h.order() * h.order() && has_pendant && p.conical_vertices.empty() && !odd_rotated)
			hits.emplace_back(GrowthClause::LargePalette, GrowthTag::Linear);
		if (p.hkl_params) {
			auto const [k, l] = *p.hkl_params;
			if (l >= 2 && l + 2 <= k && t >= k * (k - 1))
				hits.emplace_back(GrowthClause::HklLargePalette, GrowthTag::Linear);
		}
	}

	GrowthClass out;
	for (auto const &[clause, tag] : hits)
		out.satisfied.push_back(clause);
	if (!hits.empty()) {
		out.tag = hits.front().second;
		out.reason = hits.front().first;
	} else {
		out.tag = GrowthTag::UnresolvedClassB;
		out.reason = odd_rotated ? GrowthClause::OddRotatedClique : GrowthClause::PaletteBelowThreshold;
		out.satisfied.push_back(out.reason);
	}
	return out;
}

} // namespace rainsat
