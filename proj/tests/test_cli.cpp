#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
	int status;
	std::string out;
};

// Runs the CLI with stdout captured; stderr goes to the given file.
Run run(std::string const &args, std::string const &err_file = "/dev/null")
{
	std::string const cmd = std::string(RAINSAT_CLI) + " " + args + " 2>" + err_file;
	FILE *pipe = popen(cmd.c_str(), "r");
	if (!pipe)
		return {-1, {}};
	std::string out;
	std::array<char, 4096> buf{};
	while (auto n = fread(buf.data(), 1, buf.size(), pipe))
		out.append(buf.data(), n);
	int const raw = pclose(pipe);
	return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(std::filesystem::path const &p)
{
	std::ifstream in(p, std::ios::binary);
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

bool has(std::string const &text, std::string const &needle) { return text.find(needle) != std::string::npos; }

class Cli : public ::testing::Test {
protected:
	void SetUp() override
	{
		dir = std::filesystem::temp_directory_path() / ("rainsat_cli_" + std::to_string(::getpid()));
		std::filesystem::create_directories(dir);
	}
	void TearDown() override { std::filesystem::remove_all(dir); }
	std::string path(std::string const &name) const { return (dir / name).string(); }
	std::filesystem::path dir;
};

} // namespace

TEST_F(Cli, ConstructVerifyRoundTrip)
{
	auto const built = run("construct rotated-even --n 16 --r 4 -o " + path("g.txt"));
	EXPECT_EQ(built.status, 0) << built.out;
	EXPECT_TRUE(has(built.out, "edges: 48"));
	EXPECT_TRUE(has(built.out, "saturated: yes"));
	EXPECT_TRUE(has(slurp(path("g.txt.meta")), "declared_bound=153\n"));
	EXPECT_TRUE(has(slurp(path("g.txt.meta")), "construction=rotated-even\n"));
	EXPECT_EQ(slurp(path("g.txt")).substr(0, 5), "16 6\n");

	auto const ok = run("verify " + path("g.txt") + " --pattern rotated_K4");
	EXPECT_EQ(ok.status, 0) << ok.out;

	// drop the last edge line
	auto text = slurp(path("g.txt"));
	text.pop_back();
	text.erase(text.rfind('\n') + 1);
	std::ofstream(path("cut.txt"), std::ios::binary) << text;
	auto const cut = run("verify " + path("cut.txt") + " --pattern rotated_K4");
	EXPECT_EQ(cut.status, 1);
	EXPECT_TRUE(has(cut.out, "saturated: no"));
	EXPECT_TRUE(has(cut.out, "colour"));
}

TEST_F(Cli, MalformedGraphIsParseError)
{
	std::ofstream(path("bad.txt")) << "4 2\n0 1 1\n1 2 9\n";
	auto const r = run("verify " + path("bad.txt") + " --pattern K3", path("err.txt"));
	EXPECT_EQ(r.status, 2);
	EXPECT_TRUE(has(slurp(path("err.txt")), "line 3"));
}

TEST_F(Cli, Classify)
{
	auto const k4 = run("classify --pattern K4 --t 6");
	EXPECT_EQ(k4.status, 0);
	EXPECT_TRUE(has(k4.out, "growth: Θ(n log n)"));
	EXPECT_TRUE(has(k4.out, "reason: every edge of H lies in a triangle"));
	EXPECT_TRUE(has(run("classify --pattern S3 --t 3").out, "growth: Θ(n²)"));
	EXPECT_TRUE(has(run("classify --pattern rotated_K5 --t 10").out, "growth: unresolved (class B)"));
	EXPECT_TRUE(has(run("classify --pattern P4 --t 3").out, "special_edge: 1 2 (NonPendantBridge)"));
	EXPECT_EQ(run("classify --pattern K4 --t 5").status, 3);
	EXPECT_EQ(run("classify --pattern K3+K2 --t 4").status, 3);
	EXPECT_TRUE(has(run("classify --pattern K3+K2 --t 4 --disconnected").out, "maximal_component_vertices: 3"));
}

TEST_F(Cli, ExactSat)
{
	EXPECT_TRUE(has(run("exact-sat --n 3 --t 3 --pattern K3").out, "exact_sat: 3\n"));
	auto const four = run("exact-sat --n 4 --t 3 --pattern K3 -o " + path("w.txt"));
	EXPECT_TRUE(has(four.out, "exact_sat: 6\n"));
	EXPECT_TRUE(std::filesystem::exists(path("w.txt")));
	EXPECT_TRUE(has(run("exact-sat --n 5 --t 3 --pattern K3 --uncolored").out, "exact_sat: 4\n"));
	EXPECT_EQ(run("exact-sat --n 10 --t 3 --pattern K3").status, 3);
}

TEST_F(Cli, ConstructionsReportBounds)
{
	auto const st = run("construct k3-steiner --n 100 --t 3");
	EXPECT_EQ(st.status, 0);
	EXPECT_TRUE(has(st.out, "declared_bound: 1557"));
	EXPECT_TRUE(has(st.out, "within_bound: yes"));

	auto const fb = run("construct acyclic-edge --n 3 --pattern P4");
	EXPECT_EQ(fb.status, 0);
	EXPECT_TRUE(has(fb.out, "fallback: 1"));
	EXPECT_TRUE(has(fb.out, "edges: 3\n"));

	EXPECT_EQ(run("construct hkl --n 30 --k 4 --l 3 --t 12").status, 3);
	EXPECT_EQ(run("construct acyclic-edge --n 30").status, 3);
	EXPECT_EQ(run("construct nonsense --n 30").status, 2);
	EXPECT_EQ(run("").status, 2);
}

TEST_F(Cli, DeterministicOutputFiles)
{
	run("construct triangle-edge --n 60 --pattern K3 --seed 3 -o " + path("a.txt"));
	run("construct triangle-edge --n 60 --pattern K3 --seed 3 -o " + path("b.txt"));
	EXPECT_EQ(slurp(path("a.txt")), slurp(path("b.txt")));
	EXPECT_EQ(slurp(path("a.txt.meta")), slurp(path("b.txt.meta")));
	auto const a = run("construct triangle-edge --n 60 --pattern K3 --seed 3");
	auto const b = run("construct triangle-edge --n 60 --pattern K3 --seed 3");
	EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, ReportAndDot)
{
	run("construct hkl --n 20 --k 4 --l 2 --t 12 -o " + path("h.txt"));
	auto const r = run("report " + path("h.txt") + " --meta " + path("h.txt.meta") + " --pattern H_4_2");
	EXPECT_EQ(r.status, 0) << r.out;
	EXPECT_TRUE(has(r.out, "meta.construction: hkl"));
	EXPECT_TRUE(has(r.out, "edges_over_bound: "));
	EXPECT_TRUE(has(r.out, "colour 12: "));

	run("construct rotated-even --n 16 --r 4 --format dot -o " + path("g.dot"));
	EXPECT_TRUE(has(slurp(path("g.dot")), "graph G {"));
}
