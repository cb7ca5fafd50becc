#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "gr/coloring.hpp"
#include "gr/errors.hpp"
#include "gr/extract.hpp"
#include "gr/geometry.hpp"
#include "gr/ordered.hpp"
#include "gr/rng.hpp"
#include "gr/witness.hpp"

using namespace gr;

namespace {

// Red with probability 1/bias, blue otherwise; pure in (i, j, seed).
Coloring make_blue_heavy(int n, std::uint64_t seed, std::uint64_t bias) {
	Coloring g;
	g.n = n;
	g.fn = [seed, bias](int i, int j) {
		const std::uint64_t key = (std::uint64_t)i << 32 | (std::uint64_t)j;
		return splitmix64(seed ^ splitmix64(key)) % bias == 0 ? Color::Red : Color::Blue;
	};
	return g;
}

bool strictly_increasing(const std::vector<int>& v) {
	for (size_t i = 1; i < v.size(); ++i)
		if (v[i - 1] >= v[i])
			return false;
	return true;
}

// Full audit of either outcome: vertex ranges, ordering, and every edge the
// witness relies on queried against the oracle.
void check_outcome(const CliqueOrPath& found, int R, int n, const OrderedPathSpec& spec,
                   const Coloring& g) {
	if (auto* c = std::get_if<BlueClique>(&found)) {
		REQUIRE((int)c->verts.size() == n);
		CHECK(strictly_increasing(c->verts));
		CHECK(c->verts.front() >= 0);
		CHECK(c->verts.back() < R);
		for (size_t i = 0; i < c->verts.size(); ++i)
			for (size_t j = i + 1; j < c->verts.size(); ++j)
				CHECK(g.edge(c->verts[i], c->verts[j]) == Color::Blue);
	} else {
		const auto& p = std::get<RedPath>(found);
		REQUIRE((int)p.map.size() == spec.m);
		CHECK(strictly_increasing(p.map));
		CHECK(p.map.front() >= 0);
		CHECK(p.map.back() < R);
		for (int t = 0; t + 1 < spec.m; ++t)
			CHECK(g.edge(p.map[spec.pi[t]], p.map[spec.pi[t + 1]]) == Color::Red);
	}
}

OrderedGraph path_pattern(const OrderedPathSpec& spec) {
	OrderedGraph g;
	g.n = spec.m;
	for (int t = 0; t + 1 < spec.m; ++t)
		g.edges.emplace_back(spec.pi[t], spec.pi[t + 1]);
	return g;
}

// Reference for contains_ordered: try every increasing injection.
bool contains_brute(const OrderedGraph& H, const OrderedGraph& G) {
	if (G.n > H.n)
		return false;
	std::vector<std::vector<char>> adj(H.n, std::vector<char>(H.n, 0));
	for (auto [a, b] : H.edges)
		adj[a][b] = adj[b][a] = 1;
	std::vector<char> pick(H.n, 0);
	std::fill(pick.end() - G.n, pick.end(), 1);
	do {
		std::vector<int> at;
		for (int h = 0; h < H.n; ++h)
			if (pick[h])
				at.push_back(h);
		bool ok = true;
		for (auto [a, b] : G.edges)
			if (!adj[at[a]][at[b]]) {
				ok = false;
				break;
			}
		if (ok)
			return true;
	} while (std::next_permutation(pick.begin(), pick.end()));
	return false;
}

OrderedGraph random_ordered(int n, Rng& rng, int denom) {
	OrderedGraph g;
	g.n = n;
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
			if (rng.below(denom) == 0)
				g.edges.emplace_back(i, j);
	return g;
}

}  // namespace

TEST_CASE("ordered_bound pins and conventions") {
	CHECK(ordered_bound(4, 4) == 64);
	CHECK(ordered_bound(3, 3) == 64);   // ceilings round 3 up to 4
	CHECK(ordered_bound(2, 4) == 8);    // n = 2: 2^(ceil(log2 m) + 1)
	CHECK(ordered_bound(2, 5) == 16);
	CHECK(ordered_bound(5, 2) == 64);   // 2^(3 * 2)
	CHECK(ordered_bound(1, 1) == 1);    // empty exponent
	CHECK(ordered_bound(1, 1000) == 1); // a 1-clique needs one vertex, any m
	CHECK(ordered_bound(2, 2) == 4);
	CHECK(ordered_bound(16, 16) == 1LL << 20);
	CHECK_THROWS_AS((void)ordered_bound(0, 4), BadInput);
	CHECK_THROWS_AS((void)ordered_bound(4, -1), BadInput);
	CHECK_THROWS_AS((void)ordered_bound(1 << 30, 1 << 30), BadInput);
}

TEST_CASE("identity_path builds the monotone spec") {
	auto spec = identity_path(4);
	CHECK(spec.m == 4);
	CHECK_EQ(spec.pi, (std::vector<int>{0, 1, 2, 3}));
}

TEST_CASE("all-red host: the path threads the first vertex of each interval") {
	auto g = make_constant(64, Color::Red);
	auto spec = identity_path(4);
	auto found = find_clique_or_path(64, 4, spec, g);
	REQUIRE(std::holds_alternative<RedPath>(found));
	CHECK_EQ(std::get<RedPath>(found).map, (std::vector<int>{0, 16, 32, 48}));

	// Any permutation lands on the same carrier set: interval j always
	// contributes its first vertex as the host of path vertex j.
	std::vector<int> pi{0, 1, 2, 3};
	do {
		OrderedPathSpec s{4, pi};
		auto f = find_clique_or_path(64, 4, s, g);
		REQUIRE(std::holds_alternative<RedPath>(f));
		CHECK_EQ(std::get<RedPath>(f).map, (std::vector<int>{0, 16, 32, 48}));
		check_outcome(f, 64, 4, s, g);
	} while (std::next_permutation(pi.begin(), pi.end()));
}

TEST_CASE("all-blue host: recursion bottoms out at vertex pairs") {
	auto g = make_constant(64, Color::Blue);
	auto found = find_clique_or_path(64, 4, identity_path(4), g);
	REQUIRE(std::holds_alternative<BlueClique>(found));
	// Biclique between the first two intervals, then the lexicographically
	// first blue pair inside each half.
	CHECK_EQ(std::get<BlueClique>(found).verts, (std::vector<int>{0, 1, 16, 17}));
}

TEST_CASE("odd clique targets trim the merged halves") {
	auto g = make_constant(64, Color::Blue);
	auto found = find_clique_or_path(64, 3, identity_path(3), g);
	REQUIRE(std::holds_alternative<BlueClique>(found));
	// 64/3 leaves intervals of 21; two pair-cliques merge to four vertices
	// and the target keeps the first three.
	CHECK_EQ(std::get<BlueClique>(found).verts, (std::vector<int>{0, 1, 21}));
	check_outcome(found, 64, 3, identity_path(3), g);
}

TEST_CASE("single-vertex path is found in any host") {
	auto g = make_constant(1, Color::Blue);
	OrderedPathSpec spec{1, {0}};
	auto found = find_clique_or_path(1, 5, spec, g);
	REQUIRE(std::holds_alternative<RedPath>(found));
	CHECK_EQ(std::get<RedPath>(found).map, (std::vector<int>{0}));
}

TEST_CASE("at the bound, every random host certifies for every permutation") {
	const int R = 64;
	int paths = 0, cliques = 0;
	for (std::uint64_t seed = 0; seed < 500; ++seed) {
		auto g = make_seeded_random(R, seed);
		// Red-subgraph host for the order-preserving cross-check, built once.
		OrderedGraph red_host;
		red_host.n = R;
		for (int i = 0; i < R; ++i)
			for (int j = i + 1; j < R; ++j)
				if (g.edge(i, j) == Color::Red)
					red_host.edges.emplace_back(i, j);
		std::vector<int> pi{0, 1, 2, 3};
		do {
			OrderedPathSpec spec{4, pi};
			auto found = find_clique_or_path(R, 4, spec, g);
			check_outcome(found, R, 4, spec, g);
			if (std::holds_alternative<RedPath>(found)) {
				++paths;
				if (seed < 32)
					CHECK(contains_ordered(red_host, path_pattern(spec)));
			} else {
				++cliques;
			}
		} while (std::next_permutation(pi.begin(), pi.end()));
	}
	CHECK(paths + cliques == 500 * 24);
	CHECK(paths > 0);
}

TEST_CASE("blue-heavy hosts surface the clique branch") {
	int cliques = 0;
	for (std::uint64_t seed = 0; seed < 40; ++seed) {
		auto g = make_blue_heavy(64, seed, 50);
		auto spec = identity_path(4);
		auto found = find_clique_or_path(64, 4, spec, g);
		check_outcome(found, 64, 4, spec, g);
		if (std::holds_alternative<BlueClique>(found))
			++cliques;
	}
	CHECK(cliques > 0);
}

TEST_CASE("undersized hosts fail with the honest stage label") {
	auto red = make_constant(2, Color::Red);
	CHECK_THROWS_WITH_AS((void)find_clique_or_path(2, 4, identity_path(4), red),
	                     doctest::Contains("interval partition"), SizeTooSmall);

	// Blue across size-2 intervals, red inside: the biclique halves are too
	// small to host the path and hold no blue pair either.
	Coloring g;
	g.n = 8;
	g.fn = [](int i, int j) { return i / 2 == j / 2 ? Color::Red : Color::Blue; };
	CHECK_THROWS_WITH_AS((void)find_clique_or_path(8, 4, identity_path(4), g),
	                     doctest::Contains("ordered base case"), SizeTooSmall);
}

TEST_CASE("input screens reject malformed arguments") {
	auto g = make_constant(8, Color::Red);
	CHECK_THROWS_AS((void)find_clique_or_path(8, 0, identity_path(4), g), BadInput);
	CHECK_THROWS_AS((void)find_clique_or_path(0, 2, identity_path(4), g), BadInput);
	CHECK_THROWS_AS((void)find_clique_or_path(9, 2, identity_path(4), g), BadInput);
	OrderedPathSpec repeat{3, {0, 1, 1}};
	CHECK_THROWS_AS((void)find_clique_or_path(8, 2, repeat, g), BadInput);
	OrderedPathSpec range{3, {0, 1, 3}};
	CHECK_THROWS_AS((void)find_clique_or_path(8, 2, range, g), BadInput);
	OrderedPathSpec shortpi{3, {0, 1}};
	CHECK_THROWS_AS((void)find_clique_or_path(8, 2, shortpi, g), BadInput);
	CHECK_THROWS_AS((void)path_vs_path(3, identity_path(4), g), BadInput);
}

TEST_CASE("path_vs_path: n = 2 takes any edge") {
	auto blue = make_constant(4, Color::Blue);
	auto w = path_vs_path(2, identity_path(2), blue);
	CHECK(w.color == Color::Blue);
	CHECK_EQ(w.map, (std::vector<int>{0, 1}));

	auto red = make_constant(4, Color::Red);
	auto v = path_vs_path(2, identity_path(2), red);
	CHECK(v.color == Color::Red);
	CHECK_EQ(v.map, (std::vector<int>{0, 1}));
}

TEST_CASE("path_vs_path: monotone path in an all-red host is the interval transversal") {
	auto g = make_constant(64, Color::Red);
	auto w = path_vs_path(4, identity_path(4), g);
	CHECK(w.color == Color::Red);
	CHECK_EQ(w.map, (std::vector<int>{0, 16, 32, 48}));
}

TEST_CASE("path_vs_path: random hosts at the bound yield both colors across seeds") {
	auto spec = identity_path(4);
	int reds = 0, blues = 0;
	auto tally = [&](const Coloring& g) {
		auto w = path_vs_path(4, spec, g);
		REQUIRE((int)w.map.size() == 4);
		CHECK(strictly_increasing(w.map));
		for (int t = 0; t + 1 < 4; ++t)
			CHECK(g.edge(w.map[spec.pi[t]], w.map[spec.pi[t + 1]]) == w.color);
		(w.color == Color::Red ? reds : blues)++;
	};
	for (std::uint64_t seed = 0; seed < 20; ++seed)
		tally(make_seeded_random(64, seed));
	for (std::uint64_t seed = 0; seed < 20; ++seed)
		tally(make_blue_heavy(64, seed, 50));
	CHECK(reds > 0);
	CHECK(blues > 0);
}

TEST_CASE("contains_ordered: pinned examples") {
	OrderedGraph k3{3, {{0, 1}, {0, 2}, {1, 2}}};
	CHECK(contains_ordered(k3, k3));

	// Path visiting first, third, second still fits inside an ordered K_3.
	OrderedGraph zigzag{3, {{0, 2}, {2, 1}}};
	CHECK(contains_ordered(k3, zigzag));

	OrderedGraph edge01{2, {{0, 1}}};
	OrderedGraph bare{2, {}};
	CHECK_FALSE(contains_ordered(bare, edge01));

	// The order is part of the pattern: an edge from first to third of
	// three cannot land on a host whose only edge joins two neighbours.
	OrderedGraph host{3, {{0, 1}}};
	OrderedGraph firstthird{3, {{0, 2}}};
	CHECK_FALSE(contains_ordered(host, firstthird));
	CHECK(contains_ordered(OrderedGraph{3, {{0, 2}}}, firstthird));

	OrderedGraph skip{3, {{0, 2}}};
	CHECK(contains_ordered(k3, skip));
	OrderedGraph empty{0, {}};
	CHECK(contains_ordered(k3, empty));
	CHECK_FALSE(contains_ordered(empty, edge01));

	OrderedGraph badedge{2, {{0, 2}}};
	CHECK_THROWS_AS((void)contains_ordered(k3, badedge), BadInput);
	CHECK_THROWS_AS((void)contains_ordered(badedge, k3), BadInput);
}

TEST_CASE("contains_ordered agrees with exhaustive enumeration") {
	Rng rng(20260816);
	int hits = 0;
	for (int trial = 0; trial < 600; ++trial) {
		const int hn = 4 + (int)rng.below(4);  // 4..7
		const int gn = 2 + (int)rng.below(3);  // 2..4
		auto H = random_ordered(hn, rng, 2);
		auto G = random_ordered(gn, rng, 2);
		const bool fast = contains_ordered(H, G);
		CHECK(fast == contains_brute(H, G));
		hits += fast;
	}
	CHECK(hits > 100);
	CHECK(hits < 500);
}

TEST_CASE("convex ladder witnesses realize the canonical ladder order") {
	// Witness maps list one path then the other; sorted ascending, the
	// host vertices must spell out: first path left to right, then the
	// second path right to left, rungs joining i to 2n-1-i.
	for (int n : {2, 3}) {
		const int N = 32 * n * n * n;
		auto c = gen_convex(N);
		OrderedGraph pattern;
		pattern.n = 2 * n;
		for (int i = 0; i + 1 < n; ++i) {
			pattern.edges.emplace_back(i, i + 1);
			pattern.edges.emplace_back(n + i, n + i + 1);
		}
		for (int i = 0; i < n; ++i)
			pattern.edges.emplace_back(i, 2 * n - 1 - i);
		for (std::uint64_t seed = 1; seed <= 8; ++seed) {
			auto g = make_seeded_random(N, seed);
			auto w = convex_ladder_extract(c, n, g);
			std::vector<int> idx = w.map;
			std::sort(idx.begin(), idx.end());
			OrderedGraph host;
			host.n = 2 * n;
			for (int a = 0; a < 2 * n; ++a)
				for (int b = a + 1; b < 2 * n; ++b)
					if (g.edge(idx[a], idx[b]) == w.color)
						host.edges.emplace_back(a, b);
			CHECK(contains_ordered(host, pattern));
		}
	}
}
