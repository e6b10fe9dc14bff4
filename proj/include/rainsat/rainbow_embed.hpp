#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "colored_graph.hpp"

namespace rainsat {

// Rainbow: image edges must carry pairwise distinct colours.
// Any: ordinary (uncoloured) subgraph copies.
enum class CopyRule { Rainbow, Any };

// map[p] is the host vertex playing pattern vertex p.
struct Embedding {
	std::vector<Vertex> map;

	friend bool operator==(Embedding const &, Embedding const &) = default;
};

// Checks an embedding independently of the search: injective, every pattern
// edge present in the host and, for Rainbow, no repeated colour.
inline bool is_valid_copy(ColoredGraph const &host, Pattern const &h, Embedding const &emb, CopyRule rule = CopyRule::Rainbow)
{
	if (emb.map.size() != h.order())
		return false;
	std::vector<Vertex> sorted = emb.map;
	std::sort(sorted.begin(), sorted.end());
	if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
		return false;
	if (!sorted.empty() && sorted.back() >= host.order())
		return false;
	std::vector<Color> colors;
	for (auto const &e : h.edges()) {
		if (!host.has_edge(emb.map[e.u], emb.map[e.v]))
			return false;
		colors.push_back(host.color(emb.map[e.u], emb.map[e.v]));
	}
	if (rule == CopyRule::Any)
		return true;
	std::sort(colors.begin(), colors.end());
	return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}


// Backtracking search for copies of one pattern in one (mutable) host.
//
// Pattern vertices are placed in a greedy connectivity order seeded by the
// highest-degree vertex; candidates for the next vertex are the intersection
// of the adjacency rows of its already-placed neighbours. Under the Rainbow
// rule a colour already used by the partial copy prunes the branch.
//
// The host is copied on construction, so edges can be inserted between
// queries (saturation closure) or temporarily (creates()).
class EmbeddingSearch {
public:
	EmbeddingSearch(ColoredGraph host, Pattern pattern, CopyRule rule = CopyRule::Rainbow)
		: m_host(std::move(host)), m_h(std::move(pattern)), m_rule(rule)
	{
		if (m_h.size() == 0)
			fail(Errc::EmptyPattern, "pattern has no edges");
		m_free_plan = make_plan({});
		for (auto const &e : m_h.edges())
			m_anchor_plans.push_back(make_plan({e.u, e.v}));

		m_words = m_host.adjacency().words();
		m_all.assign(m_words, ~std::uint64_t{0});
		if (m_host.order() % 64 != 0 && m_words > 0)
			m_all.back() = (std::uint64_t{1} << (m_host.order() % 64)) - 1;
		if (m_host.order() == 0)
			m_all.clear();
		m_used_vertices.assign(m_words, 0);
		m_scratch.assign(m_h.order() * m_words, 0);
		m_host_of.assign(m_h.order(), 0);
		m_color_used.assign(m_host.palette() + 1, 0);
	}

	ColoredGraph const &host() const { return m_host; }
	Pattern const &pattern() const { return m_h; }
	CopyRule rule() const { return m_rule; }

	std::optional<Embedding> find()
	{
		if (m_h.order() > m_host.order())
			return std::nullopt;
		++m_queries;
		if (extend(m_free_plan, 0))
			return Embedding{m_host_of};
		return std::nullopt;
	}

	// Copy that uses the pair {u,v} coloured c, with {u,v} temporarily added.
	std::optional<Embedding> find_through(Vertex u, Vertex v, Color c)
	{
		if (u >= m_host.order() || v >= m_host.order() || u == v)
			fail(Errc::BadVertex, "invalid vertex pair");
		if (m_host.has_edge(u, v))
			fail(Errc::NotANonEdge, "{" + std::to_string(u) + "," + std::to_string(v) + "} is an edge");
		if (c < 1 || c > m_host.palette())
			fail(Errc::BadColor, "colour " + std::to_string(c) + " outside palette");
		if (m_h.order() > m_host.order())
			return std::nullopt;

		++m_queries;
		m_host.add_edge(u, v, c);
		std::optional<Embedding> found;
		for (std::size_t i = 0; i < m_h.size() && !found; ++i) {
			auto const &e = m_h.edges()[i];
			if (anchored(m_anchor_plans[i], e.u, e.v, u, v, c) || anchored(m_anchor_plans[i], e.u, e.v, v, u, c))
				found = Embedding{m_host_of};
		}
		m_host.remove_edge(u, v);
		return found;
	}

	bool creates(Vertex u, Vertex v, Color c) { return find_through(u, v, c).has_value(); }

	void insert(Vertex u, Vertex v, Color c) { m_host.add_edge(u, v, c); }

	std::size_t queries() const { return m_queries; }

private:
	struct Plan {
		std::vector<Vertex> order;
		// back[i]: pattern vertices earlier in `order` adjacent to order[i]
		std::vector<std::vector<Vertex>> back;
	};

	Plan make_plan(std::vector<Vertex> prefix) const
	{
		auto const p = m_h.order();
		std::vector<bool> placed(p, false);
		std::vector<std::size_t> placed_nbrs(p, 0);
		Plan plan;
		auto place = [&](Vertex v) {
			placed[v] = true;
			plan.order.push_back(v);
			for (auto w : m_h.neighbors(v))
				++placed_nbrs[w];
		};
		for (auto v : prefix)
			place(v);
		while (plan.order.size() < p) {
			Vertex best = 0;
			bool have = false;
			for (Vertex v = 0; v < p; ++v) {
				if (placed[v])
					continue;
				if (!have || placed_nbrs[v] > placed_nbrs[best]
				    || (placed_nbrs[v] == placed_nbrs[best] && m_h.degree(v) > m_h.degree(best))) {
					best = v;
					have = true;
				}
			}
			place(best);
		}
		std::vector<std::size_t> pos(p);
		for (std::size_t i = 0; i < p; ++i)
			pos[plan.order[i]] = i;
		plan.back.resize(p);
		for (std::size_t i = 0; i < p; ++i)
			for (auto w : m_h.neighbors(plan.order[i]))
				if (pos[w] < i)
					plan.back[i].push_back(w);
		return plan;
	}

	bool anchored(Plan const &plan, Vertex a, Vertex b, Vertex host_a, Vertex host_b, Color c)
	{
		if (m_host.degree(host_a) < m_h.degree(a) || m_host.degree(host_b) < m_h.degree(b))
			return false;
		m_host_of[a] = host_a;
		m_host_of[b] = host_b;
		mark_vertex(host_a, true);
		mark_vertex(host_b, true);
		if (m_rule == CopyRule::Rainbow)
			m_color_used[c] = 1;
		bool const ok = extend(plan, 2);
		if (m_rule == CopyRule::Rainbow)
			m_color_used[c] = 0;
		mark_vertex(host_a, false);
		mark_vertex(host_b, false);
		return ok;
	}

	void mark_vertex(Vertex w, bool on)
	{
		auto &word = m_used_vertices[w / 64];
		auto const bit = std::uint64_t{1} << (w % 64);
		word = on ? (word | bit) : (word & ~bit);
	}

	bool extend(Plan const &plan, std::size_t depth)
	{
		if (depth == plan.order.size())
			return true;
		Vertex const p = plan.order[depth];
		auto const &back = plan.back[depth];
		std::uint64_t *cand = m_scratch.data() + depth * m_words;

		if (back.empty()) {
			for (std::size_t w = 0; w < m_words; ++w)
				cand[w] = m_all[w] & ~m_used_vertices[w];
		} else {
			auto const first = m_host.adjacency().row(m_host_of[back.front()]);
			for (std::size_t w = 0; w < m_words; ++w)
				cand[w] = first[w] & ~m_used_vertices[w];
			for (std::size_t k = 1; k < back.size(); ++k) {
				auto const row = m_host.adjacency().row(m_host_of[back[k]]);
				for (std::size_t w = 0; w < m_words; ++w)
					cand[w] &= row[w];
			}
		}

		std::size_t const need = m_h.degree(p);
		for (std::size_t w = 0; w < m_words; ++w) {
			std::uint64_t bits = cand[w];
			while (bits) {
				auto const host_v = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
				bits &= bits - 1;
				if (m_host.degree(host_v) < need)
					continue;
				if (try_place(plan, depth, p, host_v))
					return true;
			}
		}
		return false;
	}

	bool try_place(Plan const &plan, std::size_t depth, Vertex p, Vertex host_v)
	{
		auto const &back = plan.back[depth];
		std::size_t marked = 0;
		bool ok = true;
		if (m_rule == CopyRule::Rainbow) {
			for (; marked < back.size(); ++marked) {
				Color const c = m_host.color(m_host_of[back[marked]], host_v);
				if (m_color_used[c]) {
					ok = false;
					break;
				}
				m_color_used[c] = 1;
			}
		}
		if (ok) {
			m_host_of[p] = host_v;
			mark_vertex(host_v, true);
			ok = extend(plan, depth + 1);
			mark_vertex(host_v, false);
		}
		// colour marks are undone on every exit; m_host_of keeps the witness
		if (m_rule == CopyRule::Rainbow)
			for (std::size_t k = 0; k < marked; ++k)
				m_color_used[m_host.color(m_host_of[back[k]], host_v)] = 0;
		return ok;
	}

	ColoredGraph m_host;
	Pattern m_h;
	CopyRule m_rule;
	Plan m_free_plan;
	std::vector<Plan> m_anchor_plans;

	std::size_t m_words{};
	std::vector<std::uint64_t> m_all;
	std::vector<std::uint64_t> m_used_vertices;
	std::vector<std::uint64_t> m_scratch;
	std::vector<Vertex> m_host_of;
	std::vector<char> m_color_used;
	std::size_t m_queries{};
};


inline std::optional<Embedding> find_copy(ColoredGraph const &g, Pattern const &h, CopyRule rule)
{
	return EmbeddingSearch(g, h, rule).find();
}

inline std::optional<Embedding> find_rainbow_copy(ColoredGraph const &g, Pattern const &h)
{
	return find_copy(g, h, CopyRule::Rainbow);
}

// True iff g + {u,v}:c has a rainbow copy of h that uses {u,v}.
inline bool creates_rainbow(ColoredGraph const &g, Vertex u, Vertex v, Color c, Pattern const &h)
{
	return EmbeddingSearch(g, h, CopyRule::Rainbow).creates(u, v, c);
}

} // namespace rainsat
