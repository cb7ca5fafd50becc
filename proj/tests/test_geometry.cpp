#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "gr/geometry.hpp"
#include "gr/rng.hpp"

using namespace gr;

TEST_CASE("orientation on pinned triples") {
	CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == Orientation::Counterclockwise);
	CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == Orientation::Clockwise);
	CHECK(orientation({0, 0}, {1, 1}, {2, 2}) == Orientation::Collinear);
	CHECK(orient_sign({0, 0}, {1, 0}, {2, 0}) == 0);
	CHECK(orient_sign({-5, -5}, {0, 0}, {-1, 4}) > 0);
}

TEST_CASE("orientation rejects out-of-range coordinates") {
	Point big{kCoordLimit + 1, 0};
	CHECK_THROWS_AS(orient_sign(big, {0, 0}, {1, 1}), BadInput);
}

TEST_CASE("orientation properties on random triples") {
	Rng rng(7);
	auto rnd = [&] {
		return Point{i64(rng.below(2001)) - 1000, i64(rng.below(2001)) - 1000};
	};
	for (int rep = 0; rep < 2000; rep++) {
		Point p = rnd(), q = rnd(), r = rnd();
		int s = orient_sign(p, q, r);
		// swapping any two arguments flips the sign
		CHECK(orient_sign(q, p, r) == -s);
		CHECK(orient_sign(p, r, q) == -s);
		CHECK(orient_sign(r, q, p) == -s);
		// cyclic shifts preserve it
		CHECK(orient_sign(q, r, p) == s);
		// translation invariance
		i64 dx = i64(rng.below(999)) - 499, dy = i64(rng.below(999)) - 499;
		CHECK(orient_sign({p.x + dx, p.y + dy}, {q.x + dx, q.y + dy}, {r.x + dx, r.y + dy}) == s);
	}
}

TEST_CASE("segment crossing on pinned configurations") {
	// X crossing
	CHECK(segments_cross({0, 0}, {2, 2}, {0, 2}, {2, 0}));
	// parallel, disjoint
	CHECK_FALSE(segments_cross({0, 0}, {1, 0}, {0, 1}, {1, 1}));
	// shared endpoint only
	CHECK_FALSE(segments_cross({0, 0}, {1, 1}, {1, 1}, {2, 0}));
	// T-junction: endpoint interior to the other segment, open segments miss it
	CHECK_FALSE(segments_cross({0, 0}, {2, 0}, {1, 0}, {1, 5}));
	// collinear overlap
	CHECK(segments_cross({0, 0}, {4, 0}, {1, 0}, {9, 0}));
	// collinear, sharing one endpoint, pointing away
	CHECK_FALSE(segments_cross({0, 0}, {2, 0}, {0, 0}, {-2, 0}));
	// collinear, sharing one endpoint, nested
	CHECK(segments_cross({0, 0}, {4, 0}, {0, 0}, {2, 0}));
	// far apart
	CHECK_FALSE(segments_cross({0, 0}, {1, 1}, {10, 10}, {11, 12}));
}

TEST_CASE("segment crossing symmetries on random segments") {
	Rng rng(21);
	auto rnd = [&] {
		return Point{i64(rng.below(41)) - 20, i64(rng.below(41)) - 20};
	};
	for (int rep = 0; rep < 4000; rep++) {
		Point a = rnd(), b = rnd(), c = rnd(), d = rnd();
		bool x = segments_cross(a, b, c, d);
		CHECK(segments_cross(b, a, c, d) == x);
		CHECK(segments_cross(a, b, d, c) == x);
		CHECK(segments_cross(c, d, a, b) == x);
	}
}

TEST_CASE("position classification") {
	std::vector<Point> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
	CHECK(classify_position(square).kind == PositionKind::Convex);

	std::vector<Point> tri_plus_inner{{0, 0}, {4, 0}, {0, 4}, {1, 1}};
	CHECK(classify_position(tri_plus_inner).kind == PositionKind::General);

	std::vector<Point> line{{0, 0}, {1, 0}, {2, 0}};
	PositionReport r = classify_position(line);
	CHECK(r.kind == PositionKind::Degenerate);
	CHECK(r.bad_triple == std::array<int, 3>{0, 1, 2});

	std::vector<Point> dup{{3, 3}, {1, 2}, {3, 3}, {0, 0}};
	PositionReport rd = classify_position(dup);
	CHECK(rd.kind == PositionKind::Degenerate);
	// reported triple must actually witness the degeneracy
	CHECK(orient_sign(dup[size_t(rd.bad_triple[0])], dup[size_t(rd.bad_triple[1])],
	                  dup[size_t(rd.bad_triple[2])]) == 0);

	// degenerate quad: one point on the hull edge
	std::vector<Point> edgemid{{0, 0}, {2, 0}, {1, 0}, {1, 5}};
	CHECK(classify_position(edgemid).kind == PositionKind::Degenerate);
}

TEST_CASE("convex hull drops interior and edge points") {
	std::vector<Point> pts{{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}, {2, 0}};
	std::vector<int> h = convex_hull(pts);
	std::sort(h.begin(), h.end());
	CHECK(h == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("hull disjointness") {
	std::vector<Point> pts{{0, 0}, {1, 2}, {2, 0},    // left cluster
	                       {10, 0}, {11, 2}, {12, 0},  // right cluster
	                       {1, 1}};                    // inside the left one
	CHECK(hulls_disjoint(pts, {0, 1, 2}, {3, 4, 5}));
	CHECK_FALSE(hulls_disjoint(pts, {0, 1, 2}, {6, 3}));
	// overlapping hulls with no contained vertices
	std::vector<Point> cross{{0, 0}, {4, 4}, {0, 4}, {4, 0}, {2, -1}, {2, 5}};
	CHECK_FALSE(hulls_disjoint(cross, {0, 1}, {2, 3}));
	CHECK(hulls_disjoint(cross, {0, 3, 4}, {2, 1, 5}));
}

TEST_CASE("moment curve generator") {
	ConvexSeq c = gen_convex(3);
	REQUIRE(c.size() == 3);
	CHECK(c[0] == Point{0, 0});
	CHECK(c[1] == Point{1, 1});
	CHECK(c[2] == Point{2, 4});

	ConvexSeq c5 = gen_convex(5);
	CHECK(classify_position(c5.pts).kind == PositionKind::Convex);

	for (std::uint64_t seed : {1ULL, 42ULL, 0xdeadULL}) {
		ConvexSeq p = gen_convex(40, seed);
		CHECK_NOTHROW(validate_convex_seq(p));
		CHECK(classify_position(p.pts).kind == PositionKind::Convex);
	}
	// determinism
	CHECK(gen_convex(12, 99).pts == gen_convex(12, 99).pts);
}

TEST_CASE("convex sequence validation rejects bad sequences") {
	ConvexSeq bad;
	bad.pts = {{0, 0}, {1, 0}, {2, 0}, {1, 1}};
	CHECK_THROWS_AS(validate_convex_seq(bad), BadInput);
	// convex position but wrong cyclic order (a bowtie walk)
	ConvexSeq tangled;
	tangled.pts = {{0, 0}, {1, 1}, {1, 0}, {0, 1}};
	CHECK_THROWS_AS(validate_convex_seq(tangled), BadInput);
	// clockwise is as valid as counterclockwise
	ConvexSeq cw;
	cw.pts = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
	CHECK_NOTHROW(validate_convex_seq(cw));
}

TEST_CASE("general position generator") {
	std::vector<Point> pts = gen_general(30, 5);
	CHECK(static_cast<int>(pts.size()) == 30);
	CHECK(classify_position(pts).kind != PositionKind::Degenerate);
	CHECK(gen_general(30, 5) == pts);
	CHECK(gen_general(30, 6) != pts);
}

TEST_CASE("point set json round trip") {
	std::vector<Point> pts{{0, 0}, {-3, 7}, {123456789012, -5}};
	std::string s = point_set_to_json(pts);
	CHECK(point_set_from_json(s) == pts);
	CHECK_THROWS_AS(point_set_from_json("{\"points\": [[1, 2], [3]]}"), BadInput);
	CHECK_THROWS_AS(point_set_from_json("{\"points\": [[1.5, 2]]}"), BadInput);
	CHECK_THROWS_AS(point_set_from_json("{}"), BadInput);
}
