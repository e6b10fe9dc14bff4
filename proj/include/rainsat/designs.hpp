#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "colored_graph.hpp"
#include "error.hpp"

namespace rainsat {

using Point = std::uint32_t; // points of a design are 1..t

struct Flag {
	std::size_t line{}; // index into SteinerTripleSystem::lines()
	Point point{};

	friend auto operator<=>(Flag const &, Flag const &) = default;
};

// Triples over [t] covering each pair of points exactly once. Lines are kept
// sorted, each with its points ascending; that ascending order is the fixed
// ordering l^(1), l^(2), l^(3).
class SteinerTripleSystem {
public:
	SteinerTripleSystem(Point t, std::vector<std::array<Point, 3>> lines)
		: m_t(t), m_lines(std::move(lines)), m_third((t + 1) * (t + 1), 0), m_line_of((t + 1) * (t + 1), 0)
	{
		for (auto &l : m_lines)
			std::sort(l.begin(), l.end());
		std::sort(m_lines.begin(), m_lines.end());
		for (std::size_t i = 0; i < m_lines.size(); ++i) {
			auto const &l = m_lines[i];
			for (int a = 0; a < 3; ++a) {
				if (l[a] < 1 || l[a] > t)
					fail(Errc::BadInput, "point outside [1,t]");
				for (int b = 0; b < 3; ++b) {
					if (a == b)
						continue;
					if (l[a] == l[b])
						fail(Errc::BadInput, "line with a repeated point");
					auto &slot = m_third[l[a] * (t + 1) + l[b]];
					if (slot != 0)
						fail(Errc::BadInput, "pair covered by two lines");
					slot = l[3 - a - b];
					m_line_of[l[a] * (t + 1) + l[b]] = i;
				}
			}
		}
		for (Point a = 1; a <= t; ++a)
			for (Point b = 1; b <= t; ++b)
				if (a != b && m_third[a * (t + 1) + b] == 0)
					fail(Errc::BadInput, "pair {" + std::to_string(a) + "," + std::to_string(b) + "} uncovered");
		for (std::size_t i = 0; i < m_lines.size(); ++i)
			for (Point p : m_lines[i])
				m_flags.push_back({i, p});
	}

	Point order() const { return m_t; }
	std::vector<std::array<Point, 3>> const &lines() const { return m_lines; }
	std::vector<Flag> const &flags() const { return m_flags; }

	// a if a == b, otherwise the third point on the line through a and b.
	Point star(Point a, Point b) const { return a == b ? a : m_third[a * (m_t + 1) + b]; }

	std::size_t line_through(Point a, Point b) const { return m_line_of[a * (m_t + 1) + b]; }

	// j-th point (1-based) of a line in its fixed ordering.
	Point line_point(std::size_t line, std::size_t j) const { return m_lines[line][j - 1]; }

private:
	Point m_t;
	std::vector<std::array<Point, 3>> m_lines;
	std::vector<Point> m_third;
	std::vector<std::size_t> m_line_of;
	std::vector<Flag> m_flags;
};

// Bose construction for t = 6s+3 over the idempotent commutative quasigroup
// x o y = (x+y)(m+1)/2 on Z_m, m = 2s+1; Skolem construction for t = 6s+1
// over the half-idempotent commutative quasigroup on Z_2s plus a point at
// infinity. Point (x, i) of Z_m x Z_3 is numbered i*m + x + 1.
inline SteinerTripleSystem steiner_triple_system(Point t)
{
	if (t < 3 || (t % 6 != 1 && t % 6 != 3))
		fail(Errc::NoSuchSystem, "no Steiner triple system of order " + std::to_string(t));

	std::vector<std::array<Point, 3>> lines;
	if (t % 6 == 3) {
		Point const m = t / 3;
		auto pt = [m](Point x, Point i) { return (i % 3) * m + x + 1; };
		auto op = [m](Point x, Point y) { return ((x + y) * ((m + 1) / 2)) % m; };
		for (Point x = 0; x < m; ++x)
			lines.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
		for (Point x = 0; x < m; ++x)
			for (Point y = x + 1; y < m; ++y)
				for (Point i = 0; i < 3; ++i)
					lines.push_back({pt(x, i), pt(y, i), pt(op(x, y), i + 1)});
	} else {
		Point const s = (t - 1) / 6;
		Point const m = 2 * s;
		Point const inf = t;
		auto pt = [m](Point x, Point i) { return (i % 3) * m + x + 1; };
		auto op = [m, s](Point x, Point y) {
			Point const sum = (x + y) % m;
			return sum % 2 == 0 ? sum / 2 : sum / 2 + s;
		};
		for (Point x = 0; x < s; ++x)
			lines.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
		for (Point x = 0; x < s; ++x)
			for (Point i = 0; i < 3; ++i)
				lines.push_back({inf, pt(x + s, i), pt(x, i + 1)});
		for (Point x = 0; x < m; ++x)
			for (Point y = x + 1; y < m; ++y)
				for (Point i = 0; i < 3; ++i)
					lines.push_back({pt(x, i), pt(y, i), pt(op(x, y), i + 1)});
	}
	return SteinerTripleSystem(t, std::move(lines));
}


// Proper (r-1)-edge-colouring of K_r (r even) on vertices 0..r-1.
class OneFactorization {
public:
	explicit OneFactorization(std::size_t r) : m_r(r), m_color(r * r, 0), m_matchings(r > 0 ? r - 1 : 0)
	{
		if (r < 2 || r % 2 != 0)
			fail(Errc::OddOrder, "1-factorization needs even r >= 2, got " + std::to_string(r));
		auto const hub = static_cast<Vertex>(r - 1);
		auto const mod = static_cast<Vertex>(r - 1);
		for (Vertex i = 0; i < mod; ++i) {
			Color const c = i + 1;
			set(hub, i, c);
			for (Vertex j = 1; j < r / 2; ++j)
				set((i + j) % mod, (i + mod - j) % mod, c);
		}
		for (auto &m : m_matchings)
			std::sort(m.begin(), m.end());
	}

	std::size_t order() const { return m_r; }
	std::size_t colors() const { return m_r - 1; }
	Color color(Vertex u, Vertex v) const { return m_color[u * m_r + v]; }

	// Edges of colour i in lexicographic order; position k-1 holds g_i(k).
	std::vector<Edge> const &matching(Color i) const { return m_matchings[i - 1]; }

	Edge g(Color i, std::size_t k) const { return m_matchings[i - 1][k - 1]; }

	std::size_t g_inverse(Color i, Edge e) const
	{
		auto const &m = m_matchings[i - 1];
		return static_cast<std::size_t>(std::lower_bound(m.begin(), m.end(), e) - m.begin()) + 1;
	}

private:
	void set(Vertex u, Vertex v, Color c)
	{
		m_color[u * m_r + v] = m_color[v * m_r + u] = c;
		m_matchings[c - 1].emplace_back(u, v);
	}

	std::size_t m_r;
	std::vector<Color> m_color;
	std::vector<std::vector<Edge>> m_matchings;
};

inline OneFactorization one_factorization(std::size_t r) { return OneFactorization(r); }

} // namespace rainsat
