#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "gr/coloring.hpp"
#include "gr/dilworth.hpp"

using namespace gr;

namespace {

// independent longest-c-path finder: plain DFS enumeration, no levels
int brute_longest_path(const std::vector<int>& S, Color c, const Coloring& g) {
	int n = static_cast<int>(S.size());
	int best = 0;
	std::vector<int> stack;
	auto dfs = [&](auto&& self, int i) -> void {
		stack.push_back(i);
		best = std::max(best, static_cast<int>(stack.size()));
		for (int j = i + 1; j < n; j++)
			if (g.edge(S[size_t(i)], S[size_t(j)]) == c) self(self, j);
		stack.pop_back();
	};
	for (int i = 0; i < n; i++) dfs(dfs, i);
	return best;
}

// comparability matrix of the c-path order, by transitive closure
std::vector<std::vector<bool>> reach(const std::vector<int>& S, Color c, const Coloring& g) {
	int n = static_cast<int>(S.size());
	std::vector<std::vector<bool>> r(size_t(n), std::vector<bool>(size_t(n), false));
	for (int i = 0; i < n; i++)
		for (int j = i + 1; j < n; j++)
			if (g.edge(S[size_t(i)], S[size_t(j)]) == c) r[size_t(i)][size_t(j)] = true;
	for (int k = 0; k < n; k++)
		for (int i = 0; i < n; i++)
			for (int j = 0; j < n; j++)
				if (r[size_t(i)][size_t(k)] && r[size_t(k)][size_t(j)]) r[size_t(i)][size_t(j)] = true;
	return r;
}

int pos_in(const std::vector<int>& S, int label) {
	return static_cast<int>(std::find(S.begin(), S.end(), label) - S.begin());
}

void check_result(const ChainOrAntichain& r, const std::vector<int>& S, Color c, int a, int b,
                  const Coloring& g) {
	auto cmp = reach(S, c, g);
	if (std::holds_alternative<Chain>(r)) {
		const auto& ch = std::get<Chain>(r).verts;
		REQUIRE(static_cast<int>(ch.size()) == a);
		for (size_t i = 0; i + 1 < ch.size(); i++) {
			CHECK(pos_in(S, ch[i]) < pos_in(S, ch[i + 1]));
			CHECK(g.edge(ch[i], ch[i + 1]) == c);
		}
		CHECK(brute_longest_path(S, c, g) >= a);
	} else {
		const auto& ac = std::get<Antichain>(r).verts;
		REQUIRE(static_cast<int>(ac.size()) == b);
		for (size_t i = 0; i < ac.size(); i++)
			for (size_t j = i + 1; j < ac.size(); j++) {
				int pi = pos_in(S, ac[i]), pj = pos_in(S, ac[j]);
				CHECK(pi < pj);
				CHECK_FALSE(cmp[size_t(pi)][size_t(pj)]);
				// incomparable implies the direct edge has the other color
				CHECK(g.edge(ac[i], ac[j]) == other(c));
			}
		// an antichain is only returned when no chain of a exists
		CHECK(brute_longest_path(S, c, g) < a);
	}
}

}  // namespace

TEST_CASE("all-red host: chain under red, antichain under blue") {
	Coloring g = make_constant(10, Color::Red);
	std::vector<int> S{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};

	auto r = chain_or_antichain(S, Color::Red, 5, 5, g);
	REQUIRE(std::holds_alternative<Chain>(r));
	CHECK(std::get<Chain>(r).verts == std::vector<int>{0, 1, 2, 3, 4});

	auto r2 = chain_or_antichain(S, Color::Blue, 4, 7, g);
	REQUIRE(std::holds_alternative<Antichain>(r2));
	CHECK(std::get<Antichain>(r2).verts == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
}

TEST_CASE("labels are taken from S, not from positions") {
	// host n=30, S uses scattered labels in scrambled order
	Coloring g = make_constant(30, Color::Red);
	std::vector<int> S{20, 3, 15, 27, 9};
	auto r = chain_or_antichain(S, Color::Red, 3, 3, g);
	REQUIRE(std::holds_alternative<Chain>(r));
	CHECK(std::get<Chain>(r).verts == std::vector<int>{20, 3, 15});
}

TEST_CASE("dichotomy against brute force on random colorings") {
	for (std::uint64_t seed = 0; seed < 60; seed++) {
		Coloring g = make_seeded_random(12, seed * 31 + 7);
		std::vector<int> S(12);
		for (int i = 0; i < 12; i++) S[size_t(i)] = i;
		for (Color c : {Color::Red, Color::Blue}) {
			auto r = chain_or_antichain(S, c, 4, 4, g);
			check_result(r, S, c, 4, 4, g);
		}
	}
}

TEST_CASE("guarantee at the Mirsky threshold") {
	// |S| = (a-1)(b-1)+1 must always succeed
	int a = 4, b = 5, n = (a - 1) * (b - 1) + 1;
	for (std::uint64_t seed = 0; seed < 40; seed++) {
		Coloring g = make_seeded_random(n, seed ^ 0x55aa);
		std::vector<int> S(static_cast<size_t>(n));
		for (int i = 0; i < n; i++) S[size_t(i)] = i;
		auto r = chain_or_antichain(S, Color::Red, a, b, g);
		check_result(r, S, Color::Red, a, b, g);
	}
}

TEST_CASE("too small inputs throw with stage info") {
	// one red edge among 4 vertices: longest red path 2, biggest level 3
	Coloring g = make_explicit(4, {{0, 1}});
	std::vector<int> S{0, 1, 2, 3};
	try {
		chain_or_antichain(S, Color::Red, 3, 4, g);
		FAIL("expected SizeTooSmall");
	} catch (const SizeTooSmall& e) {
		CHECK(e.stage == "chain_or_antichain");
	}
}

TEST_CASE("deterministic output") {
	Coloring g = make_seeded_random(14, 99);
	std::vector<int> S(14);
	for (int i = 0; i < 14; i++) S[size_t(i)] = i;
	auto r1 = chain_or_antichain(S, Color::Red, 4, 4, g);
	auto r2 = chain_or_antichain(S, Color::Red, 4, 4, g);
	REQUIRE(r1.index() == r2.index());
	if (std::holds_alternative<Chain>(r1))
		CHECK(std::get<Chain>(r1).verts == std::get<Chain>(r2).verts);
	else
		CHECK(std::get<Antichain>(r1).verts == std::get<Antichain>(r2).verts);
}

TEST_CASE("single-vertex chains and antichains") {
	Coloring g = make_seeded_random(5, 1);
	std::vector<int> S{2, 4};
	auto r = chain_or_antichain(S, Color::Red, 1, 5, g);
	REQUIRE(std::holds_alternative<Chain>(r));
	CHECK(std::get<Chain>(r).verts == std::vector<int>{2});
}
