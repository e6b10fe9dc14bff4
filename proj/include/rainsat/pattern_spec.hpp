#pragma once

#include <cctype>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "colored_graph.hpp"
#include "graph_io.hpp"
#include "patterns.hpp"

namespace rainsat {

namespace detail {

inline std::optional<std::size_t> parse_count(std::string_view s)
{
	if (!s.empty() && s.front() == '_')
		s.remove_prefix(1);
	if (s.empty() || s.size() > 6)
		return std::nullopt;
	std::size_t v = 0;
	for (char ch : s) {
		if (!std::isdigit(static_cast<unsigned char>(ch)))
			return std::nullopt;
		v = v * 10 + static_cast<std::size_t>(ch - '0');
	}
	return v;
}

inline std::optional<Pattern> parse_family(std::string_view s)
{
	constexpr std::string_view rotated = "rotated_K";
	if (s.substr(0, rotated.size()) == rotated) {
		auto const r = parse_count(s.substr(rotated.size()));
		if (!r || *r < 3)
			return std::nullopt;
		return patterns::rotated_clique(*r);
	}
	if (s.size() >= 2 && (s[0] == 'H' || s[0] == 'h') && s[1] == '_') {
		auto const sep = s.find('_', 2);
		if (sep == std::string_view::npos)
			return std::nullopt;
		auto const k = parse_count(s.substr(2, sep - 2));
		auto const l = parse_count(s.substr(sep + 1));
		if (!k || !l || *k < 2 || *l < 1 || *l > *k)
			return std::nullopt;
		return patterns::hkl(*k, *l);
	}
	if (s.empty())
		return std::nullopt;
	auto const n = parse_count(s.substr(1));
	if (!n)
		return std::nullopt;
	switch (s[0]) {
		case 'K': if (*n >= 2) return patterns::complete(*n); break;
		case 'P': if (*n >= 2) return patterns::path(*n); break;
		case 'C': if (*n >= 3) return patterns::cycle(*n); break;
		case 'S': if (*n >= 1) return patterns::star(*n); break;
		default: break;
	}
	return std::nullopt;
}

} // namespace detail

// Named families K4, P4 (4 vertices), C5, S3 (= K_{1,3}), H_4_2, rotated_K4,
// unions joined by '+', or the path of a pattern file.
inline Pattern parse_pattern(std::string const &spec)
{
	std::optional<Pattern> acc;
	bool ok = !spec.empty();
	std::size_t pos = 0;
	while (ok && pos <= spec.size()) {
		auto const next = spec.find('+', pos);
		auto const token = std::string_view(spec).substr(pos, next == std::string::npos ? std::string::npos : next - pos);
		auto part = detail::parse_family(token);
		if (!part) {
			ok = false;
			break;
		}
		acc = acc ? patterns::disjoint_union(*acc, *part) : *part;
		if (next == std::string::npos)
			break;
		pos = next + 1;
	}
	if (ok && acc)
		return *acc;
	if (std::filesystem::is_regular_file(spec))
		return read_pattern_file(spec);
	fail(Errc::ParseError, "unrecognised pattern '" + spec + "'");
}

} // namespace rainsat
