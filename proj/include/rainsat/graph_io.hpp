#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "colored_graph.hpp"
#include "error.hpp"

namespace rainsat {

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line, std::string const &what)
{
	fail(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

// Integer fields of one line; rejects trailing junk and signs.
inline std::vector<std::uint64_t> parse_fields(std::string const &text, std::size_t line)
{
	std::vector<std::uint64_t> out;
	std::istringstream in(text);
	std::string tok;
	while (in >> tok) {
		if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
			parse_fail(line, "expected a non-negative integer, got '" + tok + "'");
		try {
			out.push_back(std::stoull(tok));
		} catch (std::out_of_range const &) {
			parse_fail(line, "integer out of range");
		}
	}
	return out;
}

inline bool skip_line(std::string &text)
{
	if (!text.empty() && text.back() == '\r')
		text.pop_back();
	auto const first = text.find_first_not_of(" \t");
	return first == std::string::npos || text[first] == '#';
}

template <typename Fn>
void for_each_data_line(std::istream &in, Fn &&fn)
{
	std::string text;
	std::size_t line = 0;
	while (std::getline(in, text)) {
		++line;
		if (skip_line(text))
			continue;
		fn(parse_fields(text, line), line);
	}
}

} // namespace detail

// "n t" header, then "u v c" per edge. Edges may appear in any order on input.
inline ColoredGraph read_graph(std::istream &in)
{
	ColoredGraph g;
	bool header = false;
	detail::for_each_data_line(in, [&](std::vector<std::uint64_t> const &f, std::size_t line) {
		if (!header) {
			if (f.size() != 2)
				detail::parse_fail(line, "header must be 'n t'");
			g = ColoredGraph(f[0], static_cast<Color>(f[1]));
			header = true;
			return;
		}
		if (f.size() != 3)
			detail::parse_fail(line, "edge line must be 'u v c'");
		try {
			g.add_edge(static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]), static_cast<Color>(f[2]));
		} catch (Error const &e) {
			detail::parse_fail(line, e.what());
		}
	});
	if (!header)
		detail::parse_fail(0, "missing header");
	return g;
}

inline ColoredGraph read_graph_file(std::string const &path)
{
	std::ifstream in(path);
	if (!in)
		fail(Errc::ParseError, "cannot open " + path);
	return read_graph(in);
}

inline void write_graph(std::ostream &out, ColoredGraph const &g)
{
	out << g.order() << ' ' << g.palette() << '\n';
	for (auto const &ce : g.edges())
		out << ce.edge.u << ' ' << ce.edge.v << ' ' << ce.color << '\n';
}

inline std::string to_text(ColoredGraph const &g)
{
	std::ostringstream out;
	write_graph(out, g);
	return out.str();
}

inline void write_dot(std::ostream &out, ColoredGraph const &g)
{
	out << "graph G {\n";
	for (Vertex v = 0; v < g.order(); ++v)
		out << "  " << v << ";\n";
	for (auto const &ce : g.edges())
		out << "  " << ce.edge.u << " -- " << ce.edge.v << " [label=\"" << ce.color << "\"];\n";
	out << "}\n";
}

// Pattern file: "n" or "n t" header, then "u v" or "u v c" lines (colours ignored).
inline Pattern read_pattern(std::istream &in)
{
	std::size_t n = 0;
	bool header = false;
	std::vector<Edge> edges;
	detail::for_each_data_line(in, [&](std::vector<std::uint64_t> const &f, std::size_t line) {
		if (!header) {
			if (f.empty() || f.size() > 2)
				detail::parse_fail(line, "header must be 'n' or 'n t'");
			n = f[0];
			header = true;
			return;
		}
		if (f.size() != 2 && f.size() != 3)
			detail::parse_fail(line, "edge line must be 'u v' or 'u v c'");
		if (f[0] >= n || f[1] >= n || f[0] == f[1])
			detail::parse_fail(line, "bad vertex pair");
		edges.emplace_back(static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]));
	});
	if (!header)
		detail::parse_fail(0, "missing header");
	try {
		return Pattern(n, std::move(edges));
	} catch (Error const &e) {
		fail(Errc::ParseError, e.what());
	}
}

inline Pattern read_pattern_file(std::string const &path)
{
	std::ifstream in(path);
	if (!in)
		fail(Errc::ParseError, "cannot open " + path);
	return read_pattern(in);
}

// Ordered key=value record.
using Metadata = std::vector<std::pair<std::string, std::string>>;

inline void write_metadata(std::ostream &out, Metadata const &meta)
{
	for (auto const &[k, v] : meta)
		out << k << '=' << v << '\n';
}

inline std::map<std::string, std::string> read_metadata(std::istream &in)
{
	std::map<std::string, std::string> out;
	std::string text;
	std::size_t line = 0;
	while (std::getline(in, text)) {
		++line;
		if (detail::skip_line(text))
			continue;
		auto const eq = text.find('=');
		if (eq == std::string::npos || eq == 0)
			detail::parse_fail(line, "expected key=value");
		out[text.substr(0, eq)] = text.substr(eq + 1);
	}
	return out;
}

} // namespace rainsat
