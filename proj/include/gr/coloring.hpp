#pragma once

/**
 * Lazy red/blue edge colorings of K_n.
 *
 * A Coloring never materializes the edge set: it is a pure function on vertex
 * pairs, so the extraction pipelines can work against hosts with 10^5+
 * vertices (10^10+ edges) while only paying for the edges they actually look
 * at.  Wrappers (restrict, swap, counted) compose by capturing the inner
 * oracle.
 */

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gr/errors.hpp"

namespace gr {

enum class Color : std::uint8_t { Red, Blue };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
inline const char* color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

// Metadata for the colorings that have a file representation.  Wrapper
// colorings (restrict/swap/counted) drop it: they are in-memory only.
struct ColoringMeta {
	std::string kind;  // "explicit" | "seeded_random" | "cycle_lower_bound"
	std::uint64_t seed = 0;
	int cycle = 0;
	std::vector<std::pair<int, int>> red_edges;
};

class Coloring {
public:
	int n = 0;
	std::function<Color(int, int)> fn;  // always invoked with i < j, both in range
	std::optional<ColoringMeta> meta;

	// Total symmetric accessor: validates the pair, canonicalizes the order.
	Color edge(int i, int j) const {
		if (i == j) throw BadInput("coloring: self-loop query at " + std::to_string(i));
		if (i < 0 || j < 0 || i >= n || j >= n)
			throw BadInput("coloring: vertex out of range: " + std::to_string(i) + "," +
			               std::to_string(j) + " with n=" + std::to_string(n));
		return i < j ? fn(i, j) : fn(j, i);
	}
};

// Every edge decided by a hash of (seed, i, j): deterministic, symmetric,
// uniform-ish.  The workhorse adversary for large hosts.
Coloring make_seeded_random(int n, std::uint64_t seed);

// Edges listed are red, everything else blue.
Coloring make_explicit(int n, const std::vector<std::pair<int, int>>& red_edges);

Coloring make_constant(int n, Color c);

// The classic convex lower-bound adversary for non-crossing cycles on `cycle`
// vertices: (cycle-1)^2 vertices split into cycle-1 consecutive blocks of
// cycle-1; edges inside a block are blue, edges across blocks red.  A
// non-crossing cycle in convex position visits its vertices in cyclic order,
// so pigeonhole puts two cycle-adjacent vertices in one block (killing red),
// while blue is confined to blocks of size cycle-1 (killing blue).  NOTE:
// trust but verify -- make_certified_cycle_lower_bound in the brute-force
// module cross-checks this construction exhaustively before handing it out.
Coloring make_cycle_lower_bound(int cycle);

// Sub-oracle on the vertices in `keep`, relabeled to 0..keep.size()-1 in the
// order given.
Coloring restrict_labels(const Coloring& g, std::vector<int> keep);

Coloring swap_colors(const Coloring& g);

struct QueryCounts {
	std::uint64_t red = 0;
	std::uint64_t blue = 0;
	std::uint64_t total() const { return red + blue; }
};

// Same coloring, but every query bumps *counts.
Coloring counted(const Coloring& g, std::shared_ptr<QueryCounts> counts);

// Memoizes queries; useful when an algorithm revisits pairs many times and
// the inner oracle is not free.
Coloring memoized(const Coloring& g);

// ---------------------------------------------------------------------------
// small query helpers used all over the extractors

// Majority color of the edges from v into S, and how many of them have it.
// Ties go to red.  v must not be in S.
std::pair<Color, int> majority_color(int v, const std::vector<int>& S, const Coloring& g);

int count_color(int v, const std::vector<int>& S, const Coloring& g, Color c);

// Members of S whose edge to v is red, in S's order.
std::vector<int> red_neighbours(int v, const std::vector<int>& S, const Coloring& g);
std::vector<int> colored_neighbours(int v, const std::vector<int>& S, const Coloring& g, Color c);

// ---------------------------------------------------------------------------
// serialization

std::string coloring_to_json(const Coloring& g);
Coloring coloring_from_json(const std::string& text);

}  // namespace gr
