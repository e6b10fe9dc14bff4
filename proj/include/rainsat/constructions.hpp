#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "colored_graph.hpp"
#include "designs.hpp"
#include "patterns.hpp"
#include "rainbow_embed.hpp"
#include "saturation.hpp"
#include "structure.hpp"

namespace rainsat {

// Result of a generator. `graph` is the final (closed) graph; `pre_closure`
// is the raw construction before saturation closure. Non-edges inside
// `protected_set` are already saturated in `pre_closure`.
struct ConstructionOutput {
	std::string name;
	ColoredGraph graph;
	ColoredGraph pre_closure;
	Pattern pattern;
	std::vector<Vertex> protected_set;
	std::int64_t declared_bound{};
	std::optional<std::uint64_t> seed;
	unsigned retries{};
	bool fallback{}; // monochromatic K_n because the parts did not fit
	ClosureStats closure;
	std::vector<std::pair<std::string, std::string>> params;
};

inline constexpr unsigned max_restarts = 64;

namespace detail {

inline std::int64_t choose2(std::int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

inline void close_output(ConstructionOutput &out)
{
	out.graph = saturation_closure(out.pre_closure, out.pattern, &out.closure);
}

inline ConstructionOutput fallback_clique(std::string name, std::size_t n, Color t, Pattern h, std::int64_t bound)
{
	ConstructionOutput out;
	out.name = std::move(name);
	out.pre_closure = monochromatic_clique(n, t);
	out.graph = out.pre_closure;
	out.pattern = std::move(h);
	out.declared_bound = bound;
	out.fallback = true;
	return out;
}

inline std::vector<Vertex> range(std::size_t from, std::size_t to)
{
	std::vector<Vertex> out;
	for (auto v = from; v < to; ++v)
		out.push_back(static_cast<Vertex>(v));
	return out;
}

// Labelling of H around a distinguished edge xy: `rest` lists the other
// vertices (v_1..v_{p-2}) and edge ids run 1..m with xy last.
struct EdgeLayout {
	Vertex x{}, y{};
	std::vector<Vertex> rest;
	std::vector<std::size_t> id; // id[a * p + b], 0 if not an edge
	std::size_t p{}, m{};

	EdgeLayout(Pattern const &h, Vertex x_, Vertex y_) : x(x_), y(y_), id(h.order() * h.order(), 0), p(h.order()), m(h.size())
	{
		for (Vertex v = 0; v < p; ++v)
			if (v != x && v != y)
				rest.push_back(v);
		std::size_t next = 1;
		Edge const special{x, y};
		for (auto const &e : h.edges()) {
			std::size_t const s = e == special ? m : next++;
			id[e.u * p + e.v] = id[e.v * p + e.u] = s;
		}
	}

	std::size_t edge_id(Vertex a, Vertex b) const { return id[a * p + b]; }

	// Colour of a realisation of e_s inside the copy with colour index i.
	Color shifted(std::size_t s, std::size_t i) const { return static_cast<Color>(s != i ? s : m); }
};

// Adds the copy of H - {x,y} with colour index i at vertices base..base+p-3.
inline void add_copy(ColoredGraph &g, EdgeLayout const &lay, Vertex base, std::size_t i)
{
	for (std::size_t a = 0; a < lay.rest.size(); ++a)
		for (std::size_t b = a + 1; b < lay.rest.size(); ++b)
			if (auto const s = lay.edge_id(lay.rest[a], lay.rest[b]))
				g.add_edge(base + static_cast<Vertex>(a), base + static_cast<Vertex>(b), lay.shifted(s, i));
}

// Joins u to the copy at `base` through neighbours of `end` (x or y).
inline void join_through(ColoredGraph &g, EdgeLayout const &lay, Vertex u, Vertex base, std::size_t i, Vertex end)
{
	for (std::size_t a = 0; a < lay.rest.size(); ++a)
		if (auto const s = lay.edge_id(lay.rest[a], end))
			g.add_edge(u, base + static_cast<Vertex>(a), lay.shifted(s, i));
}

// ceil(log2(n^2 m + 1)), exactly.
inline unsigned triangle_copies_per_color(std::size_t n, std::size_t m)
{
	unsigned __int128 const target = static_cast<unsigned __int128>(n) * n * m + 1;
	unsigned h = 0;
	while ((static_cast<unsigned __int128>(1) << h) < target)
		++h;
	return h;
}

inline Edge first_triangle_edge(Pattern const &h)
{
	for (auto const &e : h.edges())
		if (detail::in_triangle(h, e))
			return e;
	fail(Errc::NoQualifyingEdge, "pattern has no triangle");
}

} // namespace detail


// Linear-size construction around an edge on a cycle but in no triangle, or
// around the max-degree non-pendant bridge: m disjoint copies of H - {x,y}
// plus an independent set L joined through the neighbours of x and y.
inline ConstructionOutput construct_acyclic_edge(std::size_t n, Pattern const &h)
{
	auto const special = find_special_edge(h);
	if (special.kind != SpecialEdgeKind::CycleNotTriangle && special.kind != SpecialEdgeKind::NonPendantBridge)
		fail(Errc::NoQualifyingEdge, "pattern has no non-pendant edge outside every triangle");

	std::size_t const p = h.order(), m = h.size();
	auto const t = static_cast<Color>(m);
	std::size_t const k_size = m * (p - 2);
	auto const bound = static_cast<std::int64_t>(k_size * n);
	if (n <= k_size)
		return detail::fallback_clique("acyclic-edge", n, t, h, bound);

	detail::EdgeLayout const lay(h, special.x, special.y);
	ColoredGraph g(n, t);
	for (std::size_t i = 1; i <= m; ++i)
		detail::add_copy(g, lay, static_cast<Vertex>((i - 1) * (p - 2)), i);
	for (auto u = static_cast<Vertex>(k_size); u < n; ++u)
		for (std::size_t i = 1; i <= m; ++i) {
			auto const base = static_cast<Vertex>((i - 1) * (p - 2));
			detail::join_through(g, lay, u, base, i, lay.x);
			detail::join_through(g, lay, u, base, i, lay.y);
		}

	ConstructionOutput out;
	out.name = "acyclic-edge";
	out.pre_closure = std::move(g);
	out.pattern = h;
	out.protected_set = detail::range(k_size, n);
	out.declared_bound = bound;
	out.params = {{"special_edge", std::to_string(special.x) + "-" + std::to_string(special.y)},
	              {"special_kind", std::string(to_string(special.kind))}};
	detail::close_output(out);
	return out;
}

// n log n construction around a triangle edge: m*h copies of H - {x,y}; each
// L vertex joins copy (i,j) through x or y by a seeded coin. Draws are
// repeated until no pair in L agrees on every coin of some colour index.
inline ConstructionOutput construct_triangle_edge(std::size_t n, Pattern const &h, std::uint64_t seed)
{
	if (!patterns::is_connected(h) || h.order() < 3)
		fail(Errc::BadInput, "pattern must be connected with at least 3 vertices");
	auto const e = detail::first_triangle_edge(h);
	auto const oriented = detail::orient(h, e, SpecialEdgeKind::TriangleEdge);

	std::size_t const p = h.order(), m = h.size();
	auto const t = static_cast<Color>(m);
	unsigned const copies = detail::triangle_copies_per_color(n, m);
	if (copies > 64)
		fail(Errc::BadParameters, "n too large for the coin layout");
	std::size_t const k_size = m * copies * (p - 2);
	auto const bound = static_cast<std::int64_t>(n * k_size);
	std::vector<std::pair<std::string, std::string>> params = {{"h", std::to_string(copies)},
	                                                           {"K", std::to_string(k_size)}};
	if (n <= k_size) {
		auto out = detail::fallback_clique("triangle-edge", n, t, h, bound);
		out.seed = seed;
		out.params = std::move(params);
		return out;
	}

	detail::EdgeLayout const lay(h, oriented.x, oriented.y);
	std::size_t const l_size = n - k_size;
	// coins[u * m + (i-1)] bit j-1: 1 means X_{u,i,j} = y
	std::vector<std::uint64_t> coins(l_size * m);
	unsigned attempt = 0;
	for (;; ++attempt) {
		if (attempt > max_restarts)
			fail(Errc::RetriesExhausted, "no valid coin draw within the restart cap");
		std::mt19937_64 rng(seed + attempt);
		for (auto &word : coins) {
			word = 0;
			for (unsigned j = 0; j < copies; ++j)
				word |= (rng() >> 63) << j;
		}
		bool bad = false;
		for (std::size_t i = 0; i < m && !bad; ++i) {
			std::vector<std::uint64_t> column(l_size);
			for (std::size_t u = 0; u < l_size; ++u)
				column[u] = coins[u * m + i];
			std::sort(column.begin(), column.end());
			bad = std::adjacent_find(column.begin(), column.end()) != column.end();
		}
		if (!bad)
			break;
	}

	ColoredGraph g(n, t);
	auto base_of = [&](std::size_t i, std::size_t j) {
		return static_cast<Vertex>(((i - 1) * copies + (j - 1)) * (p - 2));
	};
	for (std::size_t i = 1; i <= m; ++i)
		for (std::size_t j = 1; j <= copies; ++j)
			detail::add_copy(g, lay, base_of(i, j), i);
	for (std::size_t u = 0; u < l_size; ++u)
		for (std::size_t i = 1; i <= m; ++i)
			for (std::size_t j = 1; j <= copies; ++j) {
				bool const to_y = (coins[u * m + (i - 1)] >> (j - 1)) & 1U;
				detail::join_through(g, lay, static_cast<Vertex>(k_size + u), base_of(i, j), i, to_y ? lay.y : lay.x);
			}

	ConstructionOutput out;
	out.name = "triangle-edge";
	out.pre_closure = std::move(g);
	out.pattern = h;
	out.protected_set = detail::range(k_size, n);
	out.declared_bound = bound;
	out.seed = seed;
	out.retries = attempt;
	out.params = std::move(params);
	detail::close_output(out);
	return out;
}

// Two rainbow k-cliques on disjoint halves A, B of [k(k-1)]; every L vertex
// joins the first l+1 vertices of each clique, coloured from B' towards the
// A-clique and from A' towards the B-clique.
inline ConstructionOutput construct_hkl(std::size_t n, std::size_t k, std::size_t l, Color t)
{
	if (k < 4 || l < 2 || l + 2 > k)
		fail(Errc::BadParameters, "need 2 <= l <= k-2");
	if (t < k * (k - 1))
		fail(Errc::BadParameters, "need t >= k(k-1)");
	auto h = patterns::hkl(k, l);
	auto const bound = static_cast<std::int64_t>(2 * k * n);
	if (n < 2 * k)
		return detail::fallback_clique("hkl", n, t, std::move(h), bound);

	auto const half = static_cast<Color>(k * (k - 1) / 2);
	ColoredGraph g(n, t);
	for (std::size_t side = 0; side < 2; ++side) {
		auto const base = static_cast<Vertex>(side * k);
		Color c = side == 0 ? 1 : half + 1;
		for (Vertex a = 0; a < k; ++a)
			for (Vertex b = a + 1; b < k; ++b)
				g.add_edge(base + a, base + b, c++);
	}
	for (auto u = static_cast<Vertex>(2 * k); u < n; ++u)
		for (Vertex j = 0; j <= l; ++j) {
			g.add_edge(u, j, half + 1 + j);                        // B' towards the A-clique
			g.add_edge(u, static_cast<Vertex>(k) + j, 1 + j);      // A' towards the B-clique
		}

	ConstructionOutput out;
	out.name = "hkl";
	out.pre_closure = std::move(g);
	out.pattern = std::move(h);
	out.protected_set = detail::range(2 * k, n);
	out.declared_bound = bound;
	detail::close_output(out);
	return out;
}

// Colour of edge {a,b} of K_r (0-based, a < b) when [C(r,2)] is identified
// with the edges of K_r in lexicographic order.
inline Color clique_edge_color(std::size_t r, Edge e)
{
	std::size_t before = 0;
	for (std::size_t a = 0; a < e.u; ++a)
		before += r - 1 - a;
	return static_cast<Color>(before + (e.v - e.u));
}

inline Edge clique_edge_of_color(std::size_t r, Color c)
{
	for (Vertex a = 0; a < r; ++a)
		for (Vertex b = a + 1; b < r; ++b)
			if (clique_edge_color(r, Edge{a, b}) == c)
				return {a, b};
	fail(Errc::BadColor, "colour outside [C(r,2)]");
}

// The Hamming-type graph on [r]^(r/2) (adjacent iff differing in exactly one
// component). The edge xy differing in component k is coloured by rotating
// e = {S(x), S(y)} k steps within its 1-factor, S = component sum mod r.
inline ColoredGraph gamma_graph(std::size_t r)
{
	if (r < 4 || r % 2 != 0)
		fail(Errc::BadOrder, "Gamma graph needs even r >= 4");
	auto const f = one_factorization(r);
	std::size_t const dims = r / 2;
	std::size_t count = 1;
	for (std::size_t q = 0; q < dims; ++q)
		count *= r;
	auto const t = static_cast<Color>(r * (r - 1) / 2);

	// digits[q] in 0..r-1 stands for component value digits[q] + 1;
	// the first component is the most significant digit
	auto digits_of = [&](std::size_t id) {
		std::vector<std::size_t> d(dims);
		for (std::size_t q = dims; q-- > 0;) {
			d[q] = id % r;
			id /= r;
		}
		return d;
	};
	// residue s of S(x) is the K_r vertex labelled s (0 -> r), i.e. index s-1 mod r
	auto kr_vertex = [&](std::vector<std::size_t> const &d) {
		std::size_t sum = 0;
		for (auto v : d)
			sum += v + 1;
		return static_cast<Vertex>((sum % r + r - 1) % r);
	};

	ColoredGraph g(count, t);
	std::size_t stride = count;
	for (std::size_t q = 0; q < dims; ++q) {
		stride /= r;
		std::size_t const k = q + 1;
		for (std::size_t id = 0; id < count; ++id) {
			auto const d = digits_of(id);
			for (std::size_t val = d[q] + 1; val < r; ++val) {
				auto const other = id + (val - d[q]) * stride;
				auto d2 = d;
				d2[q] = val;
				Edge const e{kr_vertex(d), kr_vertex(d2)};
				Color const i = f.color(e.u, e.v);
				std::size_t const shifted = (k + f.g_inverse(i, e) - 1) % dims + 1;
				g.add_edge(static_cast<Vertex>(id), static_cast<Vertex>(other), clique_edge_color(r, f.g(i, shifted)));
			}
		}
	}
	return g;
}

// floor(n / r^(r/2)) disjoint Gamma graphs plus a monochromatic clique on the
// leftover vertices; saturated for K_r with a rotated edge without closure.
inline ConstructionOutput construct_rotated_even(std::size_t n, std::size_t r)
{
	if (r < 4 || r % 2 != 0)
		fail(Errc::BadOrder, "need even r >= 4");
	auto const t = static_cast<Color>(r * (r - 1) / 2);
	std::size_t block = 1;
	for (std::size_t q = 0; q < r / 2; ++q)
		block *= r;
	std::size_t const copies = n / block;
	auto const bound = static_cast<std::int64_t>(t * block * copies / 2) + detail::choose2(static_cast<std::int64_t>(block) - 1);
	auto h = patterns::rotated_clique(r);
	if (copies == 0)
		return detail::fallback_clique("rotated-even", n, t, std::move(h), bound);

	auto const gamma = gamma_graph(r);
	ColoredGraph g(n, t);
	for (std::size_t c = 0; c < copies; ++c) {
		auto const base = static_cast<Vertex>(c * block);
		for (auto const &ce : gamma.edges())
			g.add_edge(base + ce.edge.u, base + ce.edge.v, ce.color);
	}
	for (auto u = static_cast<Vertex>(copies * block); u < n; ++u)
		for (Vertex v = u + 1; v < n; ++v)
			g.add_edge(u, v, 1);

	ConstructionOutput out;
	out.name = "rotated-even";
	out.pre_closure = g;
	out.graph = std::move(g);
	out.pattern = std::move(h);
	out.protected_set = detail::range(0, n);
	out.declared_bound = bound;
	out.params = {{"copies", std::to_string(copies)}};
	return out;
}

// l = max(ceil(10 log n / log t), 1), or 1 when the palette is unrestricted
// (t >= C(n,2), every edge may get its own colour).
inline std::size_t clique_random_blocks(std::size_t n, Color t)
{
	if (static_cast<std::int64_t>(t) >= detail::choose2(static_cast<std::int64_t>(n)))
		return 1;
	if (n < 2)
		return 1;
	double const ratio = 10.0 * std::log2(static_cast<double>(n)) / std::log2(static_cast<double>(t));
	return std::max<std::size_t>(static_cast<std::size_t>(std::ceil(ratio - 1e-12)), 1);
}

// 2l disjoint rainbow (r-2)-cliques (l coloured from the half-palette A, l
// from B) fully joined to an independent set M. Each x in M meets clique K
// in a random (r-2)-subset of the other half minus C_K. With an unrestricted
// palette every edge simply receives a fresh colour.
inline ConstructionOutput construct_clique_random(std::size_t n, std::size_t r, Color t, std::uint64_t seed)
{
	if (r < 3)
		fail(Errc::BadParameters, "need r >= 3");
	if (t < r * (r - 1) / 2)
		fail(Errc::BadParameters, "need t >= C(r,2)");
	auto h = patterns::complete(r);
	std::size_t const blocks = clique_random_blocks(n, t);
	bool const unrestricted = static_cast<std::int64_t>(t) >= detail::choose2(static_cast<std::int64_t>(n));
	std::size_t const s = r - 2;
	std::size_t const n_size = 2 * blocks * s;
	auto const bound = static_cast<std::int64_t>(n_size * n);
	std::vector<std::pair<std::string, std::string>> params = {{"l", std::to_string(blocks)},
	                                                           {"unrestricted", unrestricted ? "1" : "0"}};
	if (n < n_size) {
		auto out = detail::fallback_clique("clique-random", n, t, std::move(h), bound);
		out.seed = seed;
		out.params = std::move(params);
		return out;
	}

	Color const a_size = (t + 1) / 2;
	std::size_t const clique_edges = s * (s - 1) / 2;
	if (!unrestricted && t - a_size < clique_edges + s)
		fail(Errc::BadParameters, "half-palette too small for the random clique layout");

	auto build = [&](std::mt19937_64 *rng) {
		ColoredGraph g(n, t);
		Color fresh = 1;
		std::vector<std::vector<Color>> used(2 * blocks);
		for (std::size_t q = 0; q < 2 * blocks; ++q) {
			auto const base = static_cast<Vertex>(q * s);
			Color c = q < blocks ? 1 : a_size + 1;
			for (Vertex a = 0; a < s; ++a)
				for (Vertex b = a + 1; b < s; ++b) {
					Color const col = unrestricted ? fresh++ : c++;
					g.add_edge(base + a, base + b, col);
					used[q].push_back(col);
				}
		}
		for (auto x = static_cast<Vertex>(n_size); x < n; ++x)
			for (std::size_t q = 0; q < 2 * blocks; ++q) {
				auto const base = static_cast<Vertex>(q * s);
				if (unrestricted) {
					for (Vertex a = 0; a < s; ++a)
						g.add_edge(x, base + a, fresh++);
					continue;
				}
				std::vector<Color> pool;
				Color const lo = q < blocks ? 1 : a_size + 1;
				Color const hi = q < blocks ? a_size : t;
				for (Color c = lo; c <= hi; ++c)
					if (std::find(used[q].begin(), used[q].end(), c) == used[q].end())
						pool.push_back(c);
				for (std::size_t i = 0; i < s; ++i) {
					auto const j = i + static_cast<std::size_t>((*rng)() % (pool.size() - i));
					std::swap(pool[i], pool[j]);
				}
				std::sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(s));
				for (Vertex a = 0; a < s; ++a)
					g.add_edge(x, base + a, pool[a]);
			}
		return g;
	};

	auto all_m_pairs_saturated = [&](ColoredGraph const &g) {
		EmbeddingSearch search(g, h);
		for (auto x = static_cast<Vertex>(n_size); x < n; ++x)
			for (Vertex y = x + 1; y < n; ++y)
				for (Color c = 1; c <= t; ++c)
					if (!search.creates(x, y, c))
						return false;
		return true;
	};

	ConstructionOutput out;
	out.name = "clique-random";
	out.pattern = h;
	out.seed = seed;
	out.params = std::move(params);
	out.protected_set = detail::range(n_size, n);
	out.declared_bound = bound;
	for (unsigned attempt = 0;; ++attempt) {
		if (attempt > max_restarts)
			fail(Errc::RetriesExhausted, "no valid colouring within the restart cap");
		std::mt19937_64 rng(seed + attempt);
		auto g = build(&rng);
		if (all_m_pairs_saturated(g)) {
			out.pre_closure = std::move(g);
			out.retries = attempt;
			break;
		}
	}
	detail::close_output(out);
	return out;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k)
{
	if (k < 0 || k > n)
		return 0;
	k = std::min(k, n - k);
	std::int64_t r = 1;
	for (std::int64_t i = 1; i <= k; ++i)
		r = r * (n - k + i) / i;
	return r;
}

// C(s-u,u) / C(s,u) >= 1 - u^2/(s-u+1), cross-multiplied so it is exact.
// Needs 2u - 1 <= s.
inline bool disjoint_subset_bound_holds(std::int64_t s, std::int64_t u)
{
	if (u < 0 || 2 * u - 1 > s)
		fail(Errc::BadParameters, "need 2u - 1 <= s");
	std::int64_t const d = s - u + 1;
	return binomial(s - u, u) * d >= (d - u * u) * binomial(s, u);
}

// Least k with C(t,2)^k + 3k >= n.
inline std::size_t steiner_blocks(std::size_t n, Color t)
{
	std::size_t const flags = static_cast<std::size_t>(t) * (t - 1) / 2;
	std::size_t k = 1;
	std::size_t power = flags;
	while (power + 3 * k < n) {
		++k;
		power = power > n ? power : power * flags;
	}
	return k;
}

inline std::int64_t steiner_bound(std::size_t n, Color t)
{
	double const flags = static_cast<double>(t) * (t - 1) / 2.0;
	double const nn = static_cast<double>(n);
	double const value = 3.0 / std::log2(flags) * nn * (n > 1 ? std::log2(nn) : 0.0) + 3.0 * nn;
	return static_cast<std::int64_t>(std::floor(value + 1e-9));
}

// Complete bipartite graph between k-tuples of flags and K = [k] x [3]; the
// edge {f, (i,j)} gets p * l^(j) where (l, p) is the i-th flag of f.
inline ConstructionOutput construct_k3_steiner(std::size_t n, Color t)
{
	auto const sts = steiner_triple_system(t);
	auto const &flags = sts.flags();
	std::size_t const k = steiner_blocks(n, t);
	auto const bound = steiner_bound(n, t);
	auto h = patterns::complete(3);
	if (n <= 3 * k) {
		auto out = detail::fallback_clique("k3-steiner", n, t, std::move(h), bound);
		out.params = {{"k", std::to_string(k)}};
		return out;
	}

	ColoredGraph g(n, t);
	std::size_t const tuples = n - 3 * k;
	for (std::size_t idx = 0; idx < tuples; ++idx) {
		auto const vertex = static_cast<Vertex>(3 * k + idx);
		std::size_t rem = idx;
		for (std::size_t i = k; i-- > 0;) { // component i+1, last component least significant
			auto const &flag = flags[rem % flags.size()];
			rem /= flags.size();
			for (std::size_t j = 1; j <= 3; ++j)
				g.add_edge(vertex, static_cast<Vertex>(3 * i + j - 1), sts.star(flag.point, sts.line_point(flag.line, j)));
		}
	}

	ConstructionOutput out;
	out.name = "k3-steiner";
	out.pre_closure = std::move(g);
	out.pattern = std::move(h);
	out.protected_set = detail::range(3 * k, n);
	out.declared_bound = bound;
	out.params = {{"k", std::to_string(k)}};
	detail::close_output(out);
	return out;
}

namespace detail {

// Star sizes (vertex counts) ascending, or nullopt if some component is not a star.
inline std::optional<std::vector<std::size_t>> star_sizes(Pattern const &h)
{
	if (h.has_isolated_vertex())
		return std::nullopt;
	std::vector<std::size_t> sizes;
	for (auto const &comp : patterns::component_patterns(h)) {
		if (!patterns::is_star(comp))
			return std::nullopt;
		sizes.push_back(comp.order());
	}
	std::sort(sizes.begin(), sizes.end());
	return sizes;
}

inline Pattern star_union(std::vector<std::size_t> const &sizes)
{
	Pattern out = patterns::star(sizes.front() - 1);
	for (std::size_t i = 1; i < sizes.size(); ++i)
		out = patterns::disjoint_union(out, patterns::star(sizes[i] - 1));
	return out;
}

// Clique size of the two-star gadget for stars with a <= b leaves.
inline std::size_t two_star_clique(std::size_t a, std::size_t b) { return (a == 1 && b != 2) ? b + 1 : a + b - 1; }

// Two-star gadget on n vertices: clique x_1..x_{a+b-1}, L joined to x_i in
// colour i; x_i x_j (i < j) gets a+b if i <= a <= j, else j.
// That colouring leaves L-pairs unsaturated when a = 1 and b != 2 (the single
// edge cannot avoid the star's clique vertices), so there the clique has b+1
// vertices, all inside edges colour 1, and L meets x_i in colour i+1 for
// i <= b and colour 2 at x_{b+1}.
inline ColoredGraph two_star_gadget(std::size_t n, std::size_t a, std::size_t b, Color t)
{
	std::size_t const k_size = two_star_clique(a, b);
	bool const single_edge = k_size != a + b - 1;
	ColoredGraph g(n, t);
	for (std::size_t i = 1; i <= k_size; ++i)
		for (std::size_t j = i + 1; j <= k_size; ++j) {
			auto c = static_cast<Color>((i <= a && a <= j) ? a + b : j);
			if (single_edge)
				c = 1;
			g.add_edge(static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1), c);
		}
	for (auto y = static_cast<Vertex>(k_size); y < n; ++y)
		for (std::size_t i = 1; i <= k_size; ++i) {
			auto c = static_cast<Color>(i);
			if (single_edge)
				c = static_cast<Color>(i <= b ? i + 1 : 2);
			g.add_edge(y, static_cast<Vertex>(i - 1), c);
		}
	return g;
}

} // namespace detail

inline ConstructionOutput construct_star_forest(std::size_t n, Pattern const &h)
{
	auto const sizes = detail::star_sizes(h);
	if (!sizes || sizes->size() < 2)
		fail(Errc::NotAStarForest, "pattern is not a union of at least two stars");
	std::size_t const a = (*sizes)[0] - 1, b = (*sizes)[1] - 1;
	std::size_t const k_size = detail::two_star_clique(a, b);
	auto const t = static_cast<Color>(h.size());
	std::size_t const extra = sizes->size() - 2;
	std::size_t const tail = extra * (h.size() + 1);
	auto const bound = static_cast<std::int64_t>(n * tail + k_size * n);
	if (n < tail + k_size + 1)
		return detail::fallback_clique("star-forest", n, t, h, bound);

	std::size_t const head = n - tail;
	ConstructionOutput out;
	out.name = "star-forest";
	out.pattern = h;
	out.protected_set = detail::range(k_size, head);
	out.declared_bound = bound;

	if (extra == 0) {
		out.pre_closure = detail::two_star_gadget(n, a, b, t);
	} else {
		auto const pair = detail::star_union({(*sizes)[0], (*sizes)[1]});
		auto const gadget = saturation_closure(detail::two_star_gadget(head, a, b, t), pair);
		ColoredGraph g(n, t);
		for (auto const &ce : gadget.edges())
			g.add_edge(ce.edge.u, ce.edge.v, ce.color);
		for (std::size_t s = 0; s < extra; ++s) {
			auto const centre = static_cast<Vertex>(head + s * (h.size() + 1));
			for (Vertex leaf = 1; leaf <= h.size(); ++leaf)
				g.add_edge(centre, centre + leaf, leaf);
		}
		out.pre_closure = std::move(g);
	}
	detail::close_output(out);
	return out;
}

// Maximal component among the non-star components: largest |V| + |E|, first on ties.
inline std::size_t maximal_component(std::vector<Pattern> const &comps)
{
	std::optional<std::size_t> best;
	for (std::size_t i = 0; i < comps.size(); ++i) {
		if (patterns::is_star(comps[i]))
			continue;
		if (!best || comps[i].order() + comps[i].size() > comps[*best].order() + comps[*best].size())
			best = i;
	}
	if (!best)
		fail(Errc::BadInput, "every component is a star");
	return *best;
}

namespace detail {

template <typename Fn>
void for_each_subset(std::size_t universe, std::size_t size, Fn &&fn)
{
	std::vector<Color> pick(size);
	for (std::size_t i = 0; i < size; ++i)
		pick[i] = static_cast<Color>(i + 1);
	while (true) {
		fn(pick);
		std::size_t i = size;
		while (i > 0 && pick[i - 1] == universe - size + i)
			--i;
		if (i == 0)
			return;
		++pick[i - 1];
		for (std::size_t j = i; j < size; ++j)
			pick[j] = pick[j - 1] + 1;
	}
}

// Saturated graph for a connected non-star pattern with palette e(h).
inline ConstructionOutput connected_construction(std::size_t n, Pattern const &h, std::uint64_t seed)
{
	auto const kind = find_special_edge(h).kind;
	if (kind == SpecialEdgeKind::CycleNotTriangle || kind == SpecialEdgeKind::NonPendantBridge)
		return construct_acyclic_edge(n, h);
	return construct_triangle_edge(n, h, seed);
}

} // namespace detail

// For disconnected H with a non-star component H_1 (maximal, multiplicity
// l): rainbow copies of the other components in every colour set, l-1
// bouquets of rainbow H_1 copies glued at one vertex, and a saturated graph
// for H_1 on the remaining vertices.
inline ConstructionOutput construct_disconnected(std::size_t n, Pattern const &h, Color t, std::uint64_t seed = 0)
{
	auto comps = patterns::component_patterns(h);
	if (comps.size() < 2)
		fail(Errc::BadInput, "pattern is connected");
	if (h.has_isolated_vertex())
		fail(Errc::BadInput, "pattern has isolated vertices");
	if (t < h.size())
		fail(Errc::BadInput, "palette smaller than e(H)");
	if (detail::star_sizes(h)) {
		auto out = construct_star_forest(n, h);
		if (t > out.graph.palette()) {
			out.pre_closure = out.graph.with_palette(t);
			detail::close_output(out);
		}
		return out;
	}

	std::size_t const main = maximal_component(comps);
	Pattern const &h1 = comps[main];
	std::size_t copies_of_main = 0;
	Pattern others;
	bool have_others = false;
	for (std::size_t i = 0; i < comps.size(); ++i) {
		if (i != main && is_isomorphic(comps[i], h1) && comps[i].size() == h1.size()) {
			++copies_of_main;
			continue;
		}
		if (i == main)
			continue;
		others = have_others ? patterns::disjoint_union(others, comps[i]) : comps[i];
		have_others = true;
	}
	auto const palette = static_cast<std::size_t>(h.size());

	struct Placed {
		Vertex u, v;
		Color c;
	};
	std::vector<Placed> gadget;
	Vertex next = 0;
	if (have_others) {
		detail::for_each_subset(palette, others.size(), [&](std::vector<Color> const &cols) {
			for (std::size_t q = 0; q < others.size(); ++q)
				gadget.push_back({next + others.edges()[q].u, next + others.edges()[q].v, cols[q]});
			next += static_cast<Vertex>(others.order());
		});
	}
	std::size_t const v1_size = next;

	Vertex glue = 0;
	for (Vertex v = 0; v < h1.order(); ++v)
		if (h1.degree(v) > h1.degree(glue))
			glue = v;
	for (std::size_t b = 0; b < copies_of_main; ++b) {
		Vertex const centre = next++;
		detail::for_each_subset(palette, h1.size(), [&](std::vector<Color> const &cols) {
			std::vector<Vertex> where(h1.order());
			for (Vertex v = 0; v < h1.order(); ++v)
				where[v] = v == glue ? centre : next++;
			for (std::size_t q = 0; q < h1.size(); ++q)
				gadget.push_back({where[h1.edges()[q].u], where[h1.edges()[q].v], cols[q]});
		});
	}
	std::size_t const fixed = next;

	if (n < fixed + h1.order() + 1)
		return detail::fallback_clique("disconnected", n, t, h, detail::choose2(static_cast<std::int64_t>(n)));

	std::size_t const rest = n - fixed;
	auto sub = detail::connected_construction(rest, h1, seed);
	auto const sub_closed = saturation_closure(sub.graph.with_palette(t), h1);

	ColoredGraph g(n, t);
	for (auto const &pl : gadget)
		g.add_edge(pl.u, pl.v, pl.c);
	for (auto const &ce : sub_closed.edges())
		g.add_edge(static_cast<Vertex>(fixed + ce.edge.u), static_cast<Vertex>(fixed + ce.edge.v), ce.color);

	ConstructionOutput out;
	out.name = "disconnected";
	out.pre_closure = std::move(g);
	out.pattern = h;
	out.protected_set = detail::range(fixed, n);
	out.declared_bound = detail::choose2(static_cast<std::int64_t>(fixed))
	                   + static_cast<std::int64_t>(fixed * rest) + std::max<std::int64_t>(sub.declared_bound, static_cast<std::int64_t>(sub_closed.size()));
	out.seed = sub.seed;
	out.retries = sub.retries;
	out.params = {{"main_component_vertices", std::to_string(h1.order())},
	              {"main_component_copies", std::to_string(copies_of_main + 1)},
	              {"gadget_vertices", std::to_string(fixed)},
	              {"V1_vertices", std::to_string(v1_size)},
	              {"inner", sub.name}};
	detail::close_output(out);
	return out;
}

} // namespace rainsat
