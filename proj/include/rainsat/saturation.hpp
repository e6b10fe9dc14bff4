#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "colored_graph.hpp"
#include "rainbow_embed.hpp"

namespace rainsat {

struct UnsaturatedPair {
	Edge pair;
	Color color{};

	friend auto operator<=>(UnsaturatedPair const &, UnsaturatedPair const &) = default;
};

// Verdict of verify_saturated. The graph is saturated iff it is rainbow-free
// and no (non-edge, colour) pair fails to complete a copy.
struct SaturationCertificate {
	bool rainbow_free{};
	std::optional<Embedding> witness; // a copy found in the graph, if any
	std::vector<UnsaturatedPair> unsaturated;
	std::size_t edge_count{};
	std::optional<std::int64_t> bound;

	bool saturated() const { return rainbow_free && unsaturated.empty(); }
	bool within_bound() const { return !bound || static_cast<std::int64_t>(edge_count) <= *bound; }
};

namespace detail {

inline void check_palette(ColoredGraph const &g, Pattern const &h, CopyRule rule)
{
	if (h.size() == 0)
		fail(Errc::EmptyPattern, "pattern has no edges");
	if (rule == CopyRule::Rainbow && g.palette() < h.size())
		fail(Errc::PaletteTooSmall,
		     "palette " + std::to_string(g.palette()) + " < e(H) = " + std::to_string(h.size()));
}

} // namespace detail

inline SaturationCertificate verify_saturated(ColoredGraph const &g, Pattern const &h,
                                              std::optional<std::int64_t> bound = std::nullopt,
                                              CopyRule rule = CopyRule::Rainbow)
{
	detail::check_palette(g, h, rule);
	EmbeddingSearch search(g, h, rule);
	SaturationCertificate cert;
	cert.witness = search.find();
	cert.rainbow_free = !cert.witness.has_value();
	cert.edge_count = g.size();
	cert.bound = bound;
	Color const colors = rule == CopyRule::Rainbow ? g.palette() : 1;
	for (auto const &f : non_edges(g))
		for (Color c = 1; c <= colors; ++c)
			if (!search.creates(f.u, f.v, c))
				cert.unsaturated.push_back({f, c});
	return cert;
}

// Early-exit form of verify_saturated(...).saturated().
inline bool is_saturated(ColoredGraph const &g, Pattern const &h, CopyRule rule = CopyRule::Rainbow)
{
	detail::check_palette(g, h, rule);
	EmbeddingSearch search(g, h, rule);
	Color const colors = rule == CopyRule::Rainbow ? g.palette() : 1;
	for (auto const &f : non_edges(g))
		for (Color c = 1; c <= colors; ++c)
			if (!search.creates(f.u, f.v, c))
				return false;
	return !search.find();
}

struct ClosureStats {
	std::size_t added{};
	std::size_t passes{};
};

// Adds non-edges in lexicographic order, each with the smallest colour whose
// insertion creates no copy, until a full pass adds nothing. Every insertion
// keeps the graph copy-free, so the result is saturated.
inline ColoredGraph saturation_closure(ColoredGraph const &g, Pattern const &h, ClosureStats *stats = nullptr,
                                       CopyRule rule = CopyRule::Rainbow)
{
	detail::check_palette(g, h, rule);
	EmbeddingSearch search(g, h, rule);
	if (search.find())
		fail(Errc::NotRainbowFree, "closure input already contains a copy of the pattern");

	Color const colors = rule == CopyRule::Rainbow ? g.palette() : 1;
	ClosureStats local;
	bool added = true;
	while (added) {
		added = false;
		++local.passes;
		for (auto const &f : non_edges(search.host())) {
			for (Color c = 1; c <= colors; ++c) {
				if (!search.creates(f.u, f.v, c)) {
					search.insert(f.u, f.v, c);
					++local.added;
					added = true;
					break;
				}
			}
		}
	}
	if (stats)
		*stats = local;
	return search.host();
}


struct ExactSatOptions {
	bool force = false; // bypass the feasibility gate
	CopyRule rule = CopyRule::Rainbow;
};

struct ExactSatResult {
	std::size_t edges{};
	ColoredGraph witness;
	std::uint64_t examined{}; // coloured graphs tested
};

inline constexpr std::size_t exact_sat_max_order = 6;
inline constexpr Color exact_sat_max_palette = 4;
inline constexpr std::size_t exact_sat_max_pattern = 5;

namespace detail {

// Colourings of `k` edges up to permutation of [t]: restricted growth strings
// (each colour's first occurrence follows the previous colour's).
template <typename Fn>
bool for_each_canonical_coloring(std::vector<Color> &cols, std::size_t pos, Color max_used, Color t, Fn &fn)
{
	if (pos == cols.size())
		return fn(cols);
	Color const limit = std::min<Color>(t, max_used + 1);
	for (Color c = 1; c <= limit; ++c) {
		cols[pos] = c;
		if (for_each_canonical_coloring(cols, pos + 1, std::max(max_used, c), t, fn))
			return true;
	}
	return false;
}

} // namespace detail

// Minimum edge count of a saturated t-coloured graph on n labelled vertices,
// by enumerating edge sets in increasing size and colourings up to colour
// permutation. Under CopyRule::Any this is the ordinary saturation number and
// t is ignored.
inline ExactSatResult exact_sat(std::size_t n, Color t, Pattern const &h, ExactSatOptions opts = {})
{
	if (h.size() == 0)
		fail(Errc::EmptyPattern, "pattern has no edges");
	if (opts.rule == CopyRule::Any)
		t = 1;
	else if (t < h.size())
		fail(Errc::PaletteTooSmall, "palette smaller than e(H)");
	if (!opts.force
	    && (n > exact_sat_max_order || t > exact_sat_max_palette || h.order() > exact_sat_max_pattern))
		fail(Errc::TooLarge, "instance exceeds n <= 6, t <= 4, |H| <= 5 (use force to override)");

	std::vector<Edge> pairs;
	for (Vertex u = 0; u < n; ++u)
		for (Vertex v = u + 1; v < n; ++v)
			pairs.emplace_back(u, v);

	ExactSatResult result;
	for (std::size_t k = 0; k <= pairs.size(); ++k) {
		std::vector<std::size_t> pick(k);
		for (std::size_t i = 0; i < k; ++i)
			pick[i] = i;
		std::vector<Color> cols(k);
		while (true) {
			auto test = [&](std::vector<Color> const &coloring) {
				ColoredGraph g(n, t);
				for (std::size_t i = 0; i < k; ++i)
					g.add_edge(pairs[pick[i]].u, pairs[pick[i]].v, coloring[i]);
				++result.examined;
				if (!is_saturated(g, h, opts.rule))
					return false;
				result.edges = k;
				result.witness = std::move(g);
				return true;
			};
			if (detail::for_each_canonical_coloring(cols, 0, 0, t, test))
				return result;

			// next k-combination of pair indices
			std::size_t i = k;
			while (i > 0 && pick[i - 1] == pairs.size() - k + i - 1)
				--i;
			if (i == 0)
				break;
			++pick[i - 1];
			for (std::size_t j = i; j < k; ++j)
				pick[j] = pick[j - 1] + 1;
		}
	}
	fail(Errc::BadInput, "no saturated graph exists for this instance");
}

} // namespace rainsat
