// rainsat: command-line front end for the rainbow saturation toolkit.
//
//   rainsat construct <name> [--n N] [--t T] [--r R] [--k K] [--l L] [--pattern P] [--seed S] [-o FILE] [--format txt|dot]
//   rainsat verify <graph> --pattern P [--bound B] [--max-report M]
//   rainsat classify --pattern P --t T [--disconnected]
//   rainsat exact-sat --n N --t T --pattern P [-o FILE] [--force] [--uncolored]
//   rainsat report <graph> [--meta FILE] [--pattern P]
//
// Exit status: 0 success/saturated, 1 not saturated, 2 usage or parse error,
// 3 domain error. Reports go to stdout, timing to stderr.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rainsat/rainsat.hpp"

namespace {

using namespace rainsat;

constexpr int exit_ok = 0;
constexpr int exit_unsaturated = 1;
constexpr int exit_usage = 2;
constexpr int exit_domain = 3;

struct Timer {
	std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
	~Timer()
	{
		auto const ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
		std::cerr << "wall_ms=" << ms << '\n';
	}
};

void line(std::string const &key, std::string const &value) { std::cout << key << ": " << value << '\n'; }
void line(std::string const &key, char const *value) { line(key, std::string(value)); }
template <typename T>
void line(std::string const &key, T const &value) { line(key, std::to_string(value)); }

void print_certificate(SaturationCertificate const &cert, std::size_t max_report)
{
	line("rainbow_free", cert.rainbow_free ? "yes" : "no");
	if (cert.witness) {
		std::string w;
		for (auto v : cert.witness->map)
			w += (w.empty() ? "" : " ") + std::to_string(v);
		line("rainbow_copy", w);
	}
	line("unsaturated_pairs", cert.unsaturated.size());
	for (std::size_t i = 0; i < cert.unsaturated.size() && i < max_report; ++i) {
		auto const &u = cert.unsaturated[i];
		std::cout << "  " << u.pair.u << ' ' << u.pair.v << " colour " << u.color << '\n';
	}
	line("saturated", cert.saturated() ? "yes" : "no");
	if (cert.bound)
		line("within_bound", cert.within_bound() ? "yes" : "no");
}

void write_graph_file(std::string const &path, ColoredGraph const &g, std::string const &format)
{
	std::ofstream out(path, std::ios::binary);
	if (!out)
		fail(Errc::BadInput, "cannot write " + path);
	if (format == "dot")
		write_dot(out, g);
	else
		write_graph(out, g);
}

struct ConstructArgs {
	std::string name;
	std::size_t n = 0;
	Color t = 0;
	std::size_t r = 0, k = 0, l = 0;
	std::string pattern;
	std::uint64_t seed = 0;
	std::string out;
	std::string format = "txt";
	bool no_verify = false;
};

Pattern need_pattern(ConstructArgs const &a)
{
	if (a.pattern.empty())
		fail(Errc::BadParameters, "--pattern is required for " + a.name);
	return parse_pattern(a.pattern);
}

ConstructionOutput run_construction(ConstructArgs const &a)
{
	if (a.name == "acyclic-edge")
		return construct_acyclic_edge(a.n, need_pattern(a));
	if (a.name == "triangle-edge")
		return construct_triangle_edge(a.n, need_pattern(a), a.seed);
	if (a.name == "hkl")
		return construct_hkl(a.n, a.k, a.l, a.t);
	if (a.name == "rotated-even")
		return construct_rotated_even(a.n, a.r);
	if (a.name == "clique-random")
		return construct_clique_random(a.n, a.r, a.t, a.seed);
	if (a.name == "k3-steiner")
		return construct_k3_steiner(a.n, a.t);
	if (a.name == "star-forest")
		return construct_star_forest(a.n, need_pattern(a));
	if (a.name == "disconnected")
		return construct_disconnected(a.n, need_pattern(a), a.t, a.seed);
	fail(Errc::BadParameters, "unknown construction " + a.name);
}

int cmd_construct(ConstructArgs const &a)
{
	Timer timer;
	auto const out = run_construction(a);

	Metadata meta = {{"construction", out.name}, {"n", std::to_string(out.graph.order())},
	                 {"t", std::to_string(out.graph.palette())}};
	if (!a.pattern.empty())
		meta.emplace_back("pattern", a.pattern);
	for (auto const &[key, value] : {std::pair{"r", a.r}, std::pair{"k", a.k}, std::pair{"l", a.l}})
		if (value)
			meta.emplace_back(key, std::to_string(value));
	if (out.seed)
		meta.emplace_back("seed", std::to_string(*out.seed));
	meta.emplace_back("retries", std::to_string(out.retries));
	meta.emplace_back("declared_bound", std::to_string(out.declared_bound));
	meta.emplace_back("edges", std::to_string(out.graph.size()));
	meta.emplace_back("pre_closure_edges", std::to_string(out.pre_closure.size()));
	meta.emplace_back("closure_added", std::to_string(out.closure.added));
	meta.emplace_back("protected", std::to_string(out.protected_set.size()));
	meta.emplace_back("fallback", out.fallback ? "1" : "0");
	for (auto const &p : out.params)
		meta.push_back(p);

	std::cout << "command: construct " << a.name << '\n';
	for (auto const &[key, value] : meta)
		line(key, value);
	int status = exit_ok;
	if (!a.no_verify) {
		auto const cert = verify_saturated(out.graph, out.pattern, out.declared_bound);
		print_certificate(cert, 10);
		if (!cert.saturated() || !cert.within_bound())
			status = exit_unsaturated;
	}
	if (!a.out.empty()) {
		write_graph_file(a.out, out.graph, a.format);
		std::ofstream m(a.out + ".meta", std::ios::binary);
		write_metadata(m, meta);
		line("written", a.out);
	}
	return status;
}

int cmd_verify(std::string const &path, std::string const &pattern, std::optional<std::int64_t> bound, std::size_t max_report)
{
	Timer timer;
	auto const g = read_graph_file(path);
	auto const h = parse_pattern(pattern);
	std::cout << "command: verify\n";
	line("graph", path);
	line("pattern", pattern);
	line("n", g.order());
	line("t", g.palette());
	line("edges", g.size());
	if (bound)
		line("declared_bound", *bound);
	auto const cert = verify_saturated(g, h, bound);
	print_certificate(cert, max_report);
	return cert.saturated() && cert.within_bound() ? exit_ok : exit_unsaturated;
}

void print_class(GrowthClass const &c)
{
	line("growth", std::string(to_string(c.tag)));
	line("reason", std::string(to_string(c.reason)));
	for (auto clause : c.satisfied)
		line("satisfied", std::string(to_string(clause)));
}

int cmd_classify(std::string const &pattern, std::size_t t, bool disconnected)
{
	auto const h = parse_pattern(pattern);
	std::cout << "command: classify\n";
	line("pattern", pattern);
	line("t", t);
	if (disconnected && !patterns::is_connected(h)) {
		if (t < h.size())
			fail(Errc::PaletteTooSmall, "t < e(H)");
		auto const comps = patterns::component_patterns(h);
		if (detail::star_sizes(h)) {
			line("growth", "O(n)");
			line("reason", "every component of H is a star");
			return exit_ok;
		}
		auto const &main = comps[maximal_component(comps)];
		line("growth", "at most that of the maximal component plus O(n)");
		line("maximal_component_vertices", main.order());
		print_class(classify(main, t));
		return exit_ok;
	}
	auto const c = classify(h, t);
	print_class(c);
	if (c.tag != GrowthTag::Quadratic) {
		auto const e = find_special_edge(h);
		if (e.kind != SpecialEdgeKind::NoSpecialEdge)
			line("special_edge", std::to_string(e.x) + " " + std::to_string(e.y) + " (" + std::string(to_string(e.kind)) + ")");
	}
	return exit_ok;
}

int cmd_exact(std::size_t n, Color t, std::string const &pattern, std::string const &out, bool force, bool uncolored)
{
	Timer timer;
	auto const h = parse_pattern(pattern);
	ExactSatOptions opts;
	opts.force = force;
	opts.rule = uncolored ? CopyRule::Any : CopyRule::Rainbow;
	auto const r = exact_sat(n, t, h, opts);
	std::cout << "command: exact-sat\n";
	line("n", n);
	line("t", uncolored ? Color{1} : t);
	line("pattern", pattern);
	line("rule", uncolored ? "uncoloured" : "rainbow");
	line("exact_sat", r.edges);
	line("examined", r.examined);
	if (!out.empty()) {
		write_graph_file(out, r.witness, "txt");
		line("written", out);
	}
	return exit_ok;
}

int cmd_report(std::string const &path, std::string const &meta_path, std::string const &pattern)
{
	Timer timer;
	auto const g = read_graph_file(path);
	std::cout << "command: report\n";
	line("graph", path);
	line("n", g.order());
	line("t", g.palette());
	line("edges", g.size());
	std::size_t min_deg = g.order() ? g.degree(0) : 0, max_deg = 0;
	for (Vertex v = 0; v < g.order(); ++v) {
		min_deg = std::min(min_deg, g.degree(v));
		max_deg = std::max(max_deg, g.degree(v));
	}
	line("min_degree", min_deg);
	line("max_degree", max_deg);
	std::vector<std::size_t> hist(g.palette() + 1, 0);
	for (auto const &ce : g.edges())
		++hist[ce.color];
	for (Color c = 1; c <= g.palette(); ++c)
		std::cout << "colour " << c << ": " << hist[c] << '\n';

	std::optional<std::int64_t> bound;
	if (!meta_path.empty()) {
		std::ifstream in(meta_path);
		if (!in)
			fail(Errc::ParseError, "cannot open " + meta_path);
		auto const meta = read_metadata(in);
		for (auto const &[k, v] : meta)
			line("meta." + k, v);
		if (auto it = meta.find("declared_bound"); it != meta.end()) {
			bound = std::stoll(it->second);
			line("edges_over_bound", std::to_string(static_cast<double>(g.size()) / static_cast<double>(*bound)));
		}
	}
	if (!pattern.empty()) {
		auto const cert = verify_saturated(g, parse_pattern(pattern), bound);
		print_certificate(cert, 10);
		return cert.saturated() && cert.within_bound() ? exit_ok : exit_unsaturated;
	}
	return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Rainbow saturation constructions, verification and classification"};
	app.require_subcommand(1);

	ConstructArgs ca;
	auto *construct = app.add_subcommand("construct", "build a saturated coloured graph");
	construct->add_option("name", ca.name, "acyclic-edge | triangle-edge | hkl | rotated-even | clique-random | k3-steiner | star-forest | disconnected")
		->required()
		->check(CLI::IsMember({"acyclic-edge", "triangle-edge", "hkl", "rotated-even", "clique-random", "k3-steiner",
	                           "star-forest", "disconnected"}));
	construct->add_option("--n", ca.n, "number of vertices")->required();
	construct->add_option("--t", ca.t, "palette size");
	construct->add_option("--r", ca.r, "clique order");
	construct->add_option("--k", ca.k, "clique order of H_{k,l}");
	construct->add_option("--l", ca.l, "attachment count of H_{k,l}");
	construct->add_option("--pattern", ca.pattern, "pattern spec or file");
	construct->add_option("--seed", ca.seed, "RNG seed");
	construct->add_option("-o,--out", ca.out, "output graph file (sidecar written to <out>.meta)");
	construct->add_option("--format", ca.format, "txt or dot")->check(CLI::IsMember({"txt", "dot"}));
	construct->add_flag("--no-verify", ca.no_verify, "skip certification of the output");

	std::string graph_path, pattern, out, meta_path;
	std::optional<std::int64_t> bound;
	std::size_t max_report = 10, n = 0, t = 0;
	bool force = false, uncolored = false, disconnected = false;

	auto *verify = app.add_subcommand("verify", "check that a graph is saturated for a pattern");
	verify->add_option("graph", graph_path)->required();
	verify->add_option("--pattern", pattern)->required();
	verify->add_option("--bound", bound, "also require at most this many edges");
	verify->add_option("--max-report", max_report, "unsaturated pairs to list");

	auto *cls = app.add_subcommand("classify", "growth class of sat_t(n, H)");
	cls->add_option("--pattern", pattern)->required();
	cls->add_option("--t", t)->required();
	cls->add_flag("--disconnected", disconnected, "accept a disconnected pattern");

	auto *exact = app.add_subcommand("exact-sat", "exact value by exhaustive search");
	exact->add_option("--n", n)->required();
	exact->add_option("--t", t)->required();
	exact->add_option("--pattern", pattern)->required();
	exact->add_option("-o,--out", out, "witness graph file");
	exact->add_flag("--force", force, "bypass the size gate");
	exact->add_flag("--uncolored", uncolored, "ordinary saturation (t ignored)");

	auto *report = app.add_subcommand("report", "summarise a graph file");
	report->add_option("graph", graph_path)->required();
	report->add_option("--meta", meta_path, "sidecar metadata file");
	report->add_option("--pattern", pattern, "verify against this pattern");

	try {
		app.parse(argc, argv);
	} catch (CLI::ParseError const &e) {
		int const code = app.exit(e);
		return code == 0 ? exit_ok : exit_usage;
	}

	try {
		if (*construct)
			return cmd_construct(ca);
		if (*verify)
			return cmd_verify(graph_path, pattern, bound, max_report);
		if (*cls)
			return cmd_classify(pattern, t, disconnected);
		if (*exact)
			return cmd_exact(n, static_cast<Color>(t), pattern, out, force, uncolored);
		if (*report)
			return cmd_report(graph_path, meta_path, pattern);
	} catch (Error const &e) {
		std::cerr << "error: " << e.what() << '\n';
		return e.code() == Errc::ParseError ? exit_usage : exit_domain;
	}
	return exit_usage;
}
