#include "gr/dilworth.hpp"

#include <algorithm>

namespace gr {

ChainOrAntichain chain_or_antichain(const std::vector<int>& S, Color c, int a, int b,
                                    const Coloring& g) {
	int n = static_cast<int>(S.size());
	if (a < 1 || b < 1) throw BadInput("chain_or_antichain: a and b must be positive");

	// level[i] = longest c-path ending at S[i]; parent picks the earliest
	// predecessor achieving it, which keeps the output deterministic.
	std::vector<int> level(size_t(n), 1), parent(size_t(n), -1);
	int best = 0;
	for (int i = 0; i < n; i++) {
		for (int j = 0; j < i; j++)
			if (level[size_t(j)] + 1 > level[size_t(i)] &&
			    g.edge(S[size_t(j)], S[size_t(i)]) == c) {
				level[size_t(i)] = level[size_t(j)] + 1;
				parent[size_t(i)] = j;
			}
		best = std::max(best, level[size_t(i)]);
		if (level[size_t(i)] == a) {
			Chain ch;
			for (int v = i; v != -1; v = parent[size_t(v)]) ch.verts.push_back(S[size_t(v)]);
			std::reverse(ch.verts.begin(), ch.verts.end());
			return ch;
		}
	}

	// no level ever reached a: vertices on one level are pairwise
	// incomparable, so the fullest level (ties to the lowest) is our
	// antichain if it is big enough
	int pick = -1, count = 0;
	for (int l = 1; l < std::max(a, 2); l++) {
		int k = static_cast<int>(std::count(level.begin(), level.end(), l));
		if (k > count) {
			count = k;
			pick = l;
		}
	}
	if (count >= b) {
		Antichain ac;
		for (int i = 0; i < n && static_cast<int>(ac.verts.size()) < b; i++)
			if (level[size_t(i)] == pick) ac.verts.push_back(S[size_t(i)]);
		return ac;
	}
	throw SizeTooSmall("chain_or_antichain",
	                   "no " + std::string(color_name(c)) + " chain of " + std::to_string(a) +
	                       " and no antichain of " + std::to_string(b) + " in a set of " +
	                       std::to_string(n) + " (need " + std::to_string((a - 1) * (b - 1) + 1) +
	                       ")");
}

}  // namespace gr
