#include "gr/ordered.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gr/extract.hpp"

namespace gr {

namespace {

void validate_spec(const OrderedPathSpec& spec) {
	if (spec.m < 1)
		throw BadInput("ordered path needs at least one vertex, got m = " + std::to_string(spec.m));
	if ((int)spec.pi.size() != spec.m)
		throw BadInput("path permutation has " + std::to_string(spec.pi.size()) +
		               " entries for m = " + std::to_string(spec.m));
	std::vector<char> seen(spec.m, 0);
	for (int v : spec.pi) {
		if (v < 0 || v >= spec.m)
			throw BadInput("path permutation entry " + std::to_string(v) + " out of range");
		if (seen[v]++)
			throw BadInput("path permutation repeats entry " + std::to_string(v));
	}
}

int ceil_log2(int x) {
	int k = 0;
	while ((1LL << k) < x)
		++k;
	return k;
}

// Base of the recursion.  A lone target vertex is a clique outright; for a
// pair, either some edge is blue or the whole set is red and hosts any
// ordered path of up to |verts| vertices directly.
CliqueOrPath base_case(const std::vector<int>& verts, int n, const OrderedPathSpec& spec,
                       const Coloring& oracle) {
	if (verts.empty())
		throw SizeTooSmall("ordered base case", "no vertices left for a 1-clique");
	if (n == 1)
		return BlueClique{{verts[0]}};
	for (size_t i = 0; i < verts.size(); ++i)
		for (size_t j = i + 1; j < verts.size(); ++j)
			if (oracle.edge(verts[i], verts[j]) == Color::Blue)
				return BlueClique{{verts[i], verts[j]}};
	// Everything here is red, so the first m vertices carry the path.
	if ((int)verts.size() < spec.m)
		throw SizeTooSmall("ordered base case",
		                   "an all-red set of " + std::to_string(verts.size()) +
		                       " vertices cannot host a path on " + std::to_string(spec.m));
	return RedPath{std::vector<int>(verts.begin(), verts.begin() + spec.m)};
}

CliqueOrPath search(const std::vector<int>& verts, int n, const OrderedPathSpec& spec,
                    const Coloring& oracle) {
	if (n <= 2)
		return base_case(verts, n, spec, oracle);

	const int m = spec.m;
	const int size = (int)verts.size() / m;
	if (size < 1)
		throw SizeTooSmall("interval partition", std::to_string(verts.size()) + " vertices cannot fill " +
		                                             std::to_string(m) + " intervals");

	// m consecutive intervals, surplus on the last; the sweep visits them
	// in path order, so interval pi[i] hosts the i-th path vertex.
	std::vector<std::vector<int>> blocks(m);
	for (int i = 0; i < m; ++i) {
		const int lo = spec.pi[i] * size;
		const int hi = spec.pi[i] == m - 1 ? (int)verts.size() : lo + size;
		blocks[i].assign(verts.begin() + lo, verts.begin() + hi);
	}

	auto swept = longpath_or_biclique(blocks, Color::Red, oracle);
	if (auto* path = std::get_if<BlockPath>(&swept)) {
		std::vector<int> map(m);
		for (int i = 0; i < m; ++i)
			map[spec.pi[i]] = path->verts[i];
		return RedPath{std::move(map)};
	}

	// Blue biclique between halves of two intervals: either half yields a
	// red path on its own, or both give blue cliques of half the target
	// size whose union is all blue.
	const auto& bb = std::get<BlockBiclique>(swept);
	const int half = (n + 1) / 2;
	auto low = search(bb.lower, half, spec, oracle);
	if (std::holds_alternative<RedPath>(low))
		return low;
	auto high = search(bb.upper, half, spec, oracle);
	if (std::holds_alternative<RedPath>(high))
		return high;

	std::vector<int> merged = std::get<BlueClique>(low).verts;
	const auto& hv = std::get<BlueClique>(high).verts;
	merged.insert(merged.end(), hv.begin(), hv.end());
	std::sort(merged.begin(), merged.end());
	merged.resize(n);
	return BlueClique{std::move(merged)};
}

}  // namespace

OrderedPathSpec identity_path(int m) {
	OrderedPathSpec spec;
	spec.m = m;
	spec.pi.resize(std::max(m, 0));
	std::iota(spec.pi.begin(), spec.pi.end(), 0);
	return spec;
}

long long ordered_bound(int n, int m) {
	if (n < 1 || m < 1)
		throw BadInput("ordered_bound needs n, m >= 1, got n = " + std::to_string(n) +
		               ", m = " + std::to_string(m));
	const long long exp = (long long)ceil_log2(n) * (ceil_log2(m) + 1);
	if (exp > 62)
		throw BadInput("ordered bound 2^" + std::to_string(exp) + " does not fit in 63 bits");
	return 1LL << exp;
}

CliqueOrPath find_clique_or_path(int R, int n, const OrderedPathSpec& spec,
                                 const Coloring& oracle) {
	validate_spec(spec);
	if (n < 1)
		throw BadInput("clique target needs n >= 1, got " + std::to_string(n));
	if (R < 1)
		throw BadInput("host needs R >= 1 vertices, got " + std::to_string(R));
	if (R > oracle.n)
		throw BadInput("host has " + std::to_string(oracle.n) + " vertices, asked to search " +
		               std::to_string(R));
	std::vector<int> verts(R);
	std::iota(verts.begin(), verts.end(), 0);
	return search(verts, n, spec, oracle);
}

OrderedPathWitness path_vs_path(int n, const OrderedPathSpec& spec, const Coloring& oracle) {
	validate_spec(spec);
	if (spec.m != n)
		throw BadInput("path_vs_path needs spec.m == n, got m = " + std::to_string(spec.m) +
		               ", n = " + std::to_string(n));
	auto found = find_clique_or_path(oracle.n, n, spec, oracle);
	if (auto* path = std::get_if<RedPath>(&found))
		return {Color::Red, std::move(path->map)};
	// A blue clique is order-free: its vertices in ascending order host
	// every ordered path on n vertices.
	return {Color::Blue, std::move(std::get<BlueClique>(found).verts)};
}

bool contains_ordered(const OrderedGraph& H, const OrderedGraph& G) {
	auto check_edges = [](const OrderedGraph& g, const char* name) {
		for (auto [a, b] : g.edges)
			if (a < 0 || a >= g.n || b < 0 || b >= g.n || a == b)
				throw BadInput(std::string(name) + " has a bad edge (" + std::to_string(a) + ", " +
				               std::to_string(b) + ") on " + std::to_string(g.n) + " vertices");
	};
	check_edges(H, "host");
	check_edges(G, "pattern");
	if (G.n > H.n)
		return false;
	if (G.n == 0)
		return true;

	std::vector<std::vector<char>> adj(H.n, std::vector<char>(H.n, 0));
	for (auto [a, b] : H.edges)
		adj[a][b] = adj[b][a] = 1;
	// Pattern edges grouped by their later endpoint, checked as soon as
	// that endpoint is placed.
	std::vector<std::vector<int>> back(G.n);
	for (auto [a, b] : G.edges)
		back[std::max(a, b)].push_back(std::min(a, b));

	std::vector<int> at(G.n, -1);
	auto place = [&](auto&& self, int g, int from) -> bool {
		if (g == G.n)
			return true;
		for (int h = from; h <= H.n - (G.n - g); ++h) {
			bool ok = true;
			for (int p : back[g])
				if (!adj[at[p]][h]) {
					ok = false;
					break;
				}
			if (!ok)
				continue;
			at[g] = h;
			if (self(self, g + 1, h + 1))
				return true;
		}
		return false;
	};
	return place(place, 0, 0);
}

}  // namespace gr
