#pragma once

/**
 * Mutually avoiding point sets and their visibility orders.
 *
 * Two disjoint sets A, B are mutually avoiding when no line through two
 * points of A meets the convex hull of B, and vice versa.  Such a pair
 * carries canonical total orders on each side (the order in which every
 * point of the other side sees them), and those orders drive all the
 * non-crossing path/ladder constructions: an increasing path never crosses
 * itself, and rungs between aligned positions never cross each other.
 */

#include <vector>

#include "gr/coloring.hpp"
#include "gr/errors.hpp"
#include "gr/geometry.hpp"

namespace gr {

struct NotSeparated : std::runtime_error {
	explicit NotSeparated(const std::string& what) : std::runtime_error(what) {}
};

struct InconsistentOrder : std::runtime_error {
	explicit InconsistentOrder(const std::string& what) : std::runtime_error(what) {}
};

struct AvoidingPair {
	std::vector<Point> a, b;
	std::vector<int> order_a, order_b;  // order_a[t] = index into a of the t-th point
	// Where each point came from, when the pair was carved out of larger sets
	// (indices into the originating sets); empty when standalone.
	std::vector<int> src_a, src_b;

	int size_a() const { return static_cast<int>(a.size()); }
	int size_b() const { return static_cast<int>(b.size()); }
	// t-th point of a side in mutual order
	Point a_at(int t) const { return a[size_t(order_a[size_t(t)])]; }
	Point b_at(int t) const { return b[size_t(order_b[size_t(t)])]; }
};

// Exact decision, straight from the definition: every line through two
// points of one side must have the entire other side strictly on one side.
// Degeneracies (a point on such a line) count as not avoiding.
bool is_mutually_avoiding(const std::vector<Point>& A, const std::vector<Point>& B);

// Computes the mutual visibility orders of an avoiding pair: order_a is the
// clockwise order in which every point of B sees A (consistent across
// witnesses because the pair is avoiding), and order_b is oriented so that
// rungs between equal positions never cross (the convention all extractors
// assume).  Throws InconsistentOrder when the pair is not actually avoiding.
AvoidingPair mutual_orders(const std::vector<Point>& A, const std::vector<Point>& B);

// Two disjoint index ranges [lo1,hi1) and [lo2,hi2) of a convex polygon are
// arcs, and any two disjoint arcs are mutually avoiding: a line through two
// points of one arc has every other polygon vertex on one side.  Cheap: no
// quadratic certification, orders derived from the polygon order.
AvoidingPair from_convex_ranges(const ConvexSeq& c, int lo1, int hi1, int lo2, int hi2);

// Complementary arcs [0,split) and [split,N).
AvoidingPair from_convex_split(const ConvexSeq& c, int split);

// From two line-separated clouds of >= 6k^2 points each, extracts a
// certified mutually avoiding pair with exactly k points per side.  The
// workhorse is a chain DP along the separation direction: for separated
// clouds, "every point of B' lies strictly on one fixed side of line(p,q)"
// is a transitive relation on A', so a longest chain of it is a set whose
// every pair-line misses the other cloud's hull; the mirror chain inside a
// block of B' is then extracted against the k chosen points.  Joint-hull
// arcs are tried first, exhaustive pair search covers k = 2, and a seeded
// randomized sweep backs everything up.  Output is re-checked with
// is_mutually_avoiding before it is returned.
AvoidingPair mutually_avoiding_subsets(const std::vector<Point>& Ap,
                                       const std::vector<Point>& Bp, int k);

// Restriction of mutually_avoiding_subsets to the separable-biclique route:
// same contract, callers pass the two sides of a separable structure.
AvoidingPair separable_to_avoiding(const std::vector<Point>& L, const std::vector<Point>& R,
                                   int k);

// Test/CLI plumbing: two clouds of m points each in general position as one
// combined set, separated by a vertical gap.  Deterministic in seed.
std::pair<std::vector<Point>, std::vector<Point>> gen_separated_clouds(int m, std::uint64_t seed,
                                                                       i64 box = 1'000'000);

}  // namespace gr
