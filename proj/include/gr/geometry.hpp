#pragma once

/**
 * Exact planar primitives over integer coordinates.
 *
 * Everything downstream (crossing tests, convex-position checks, mutual
 * visibility orders) reduces to the sign of a 3x3 orientation determinant,
 * computed in 128-bit arithmetic so there is no epsilon anywhere.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gr/errors.hpp"

namespace gr {

using i64 = std::int64_t;
using i128 = __int128;

// Coordinates are capped so the orientation determinant (two products of
// differences, each < 2^(61+61) = 2^122) fits comfortably in 128 bits.
constexpr i64 kCoordLimit = i64(1) << 60;

struct Point {
	i64 x = 0;
	i64 y = 0;
	friend bool operator==(const Point&, const Point&) = default;
	friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Orientation { Clockwise, Counterclockwise, Collinear };

// Sign of the cross product (q-p) x (r-p): +1 counterclockwise, -1 clockwise,
// 0 collinear.  Throws BadInput if any coordinate exceeds kCoordLimit.
int orient_sign(Point p, Point q, Point r);
Orientation orientation(Point p, Point q, Point r);

// True iff the *open* segments ab and cd share a point.  Segments that only
// touch at an endpoint (shared vertex, or a T-junction) do not cross; two
// collinear segments cross iff their interiors overlap.
bool segments_cross(Point a, Point b, Point c, Point d);

// ---------------------------------------------------------------------------
// point sets

struct PointSet {
	std::vector<Point> pts;

	int size() const { return static_cast<int>(pts.size()); }
	const Point& operator[](int i) const { return pts[static_cast<size_t>(i)]; }
};

enum class PositionKind { General, Convex, Degenerate };

struct PositionReport {
	PositionKind kind = PositionKind::Degenerate;
	// Populated only for Degenerate: indices of a collinear (or duplicate)
	// triple, in increasing order.
	std::array<int, 3> bad_triple{-1, -1, -1};
};

// Classifies a point set: Convex if every point is a vertex of the convex
// hull (which also implies general position), General if no three points are
// collinear and all are distinct, Degenerate otherwise.  Exhaustive over all
// triples up to `exhaustive_limit` points; beyond that duplicates are still
// detected exactly but collinearity is spot-checked on a deterministic sample
// (large inputs in this codebase are generator-certified convex sets, which
// take the exact hull path regardless of size).
PositionReport classify_position(const std::vector<Point>& pts, int exhaustive_limit = 400);

// Indices of hull vertices in counterclockwise order, starting from the
// lexicographically smallest point.  Collinear points on hull edges are not
// reported as vertices.
std::vector<int> convex_hull(const std::vector<Point>& pts);

// True iff the convex hulls of pts[A] and pts[B] are disjoint (equivalently:
// the two groups can be separated by a line).
bool hulls_disjoint(const std::vector<Point>& pts, const std::vector<int>& A,
                    const std::vector<int>& B);

// ---------------------------------------------------------------------------
// convex position

// A point set in convex position together with its cyclic order: traversing
// pts in index order walks the polygon boundary with a uniform turn
// direction.  The index order doubles as the vertex order ("p comes before
// q") used by the convex extractors.
struct ConvexSeq {
	std::vector<Point> pts;

	int size() const { return static_cast<int>(pts.size()); }
	const Point& operator[](int i) const { return pts[static_cast<size_t>(i)]; }
};

// Checks the ConvexSeq invariant (all N cyclically-consecutive triples turn
// the same nonzero way); throws BadInput naming the first offending triple.
void validate_convex_seq(const ConvexSeq& c);

// N points in convex position.  seed == 0 places point i exactly at (i, i^2);
// any other seed perturbs the vertical second differences, preserving strict
// convexity.  Deterministic in (n, seed).
ConvexSeq gen_convex(int n, std::uint64_t seed = 0);

// n distinct points with no three collinear, with coordinates in a box of the
// given half-width.  Rejection sampling; intended for test-sized n.
std::vector<Point> gen_general(int n, std::uint64_t seed, i64 box = 1'000'000);

// ---------------------------------------------------------------------------
// serialization: {"points": [[x, y], ...]}

std::string point_set_to_json(const std::vector<Point>& pts);
std::vector<Point> point_set_from_json(const std::string& text);

}  // namespace gr
