// Builds a K3-saturated 3-coloured graph on 100 vertices from the Steiner
// construction, certifies it and prints it in the text format.

#include <iostream>

#include "rainsat/rainsat.hpp"

int main()
{
	using namespace rainsat;
	auto const out = construct_k3_steiner(100, 3);
	auto const cert = verify_saturated(out.graph, out.pattern, out.declared_bound);
	std::cerr << "edges " << out.graph.size() << " bound " << out.declared_bound
	          << (cert.saturated() ? " saturated" : " NOT saturated") << '\n';
	write_graph(std::cout, out.graph);
	return cert.saturated() && cert.within_bound() ? 0 : 1;
}
