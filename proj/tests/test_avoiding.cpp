#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "gr/avoiding.hpp"
#include "gr/rng.hpp"

using namespace gr;

namespace {

std::vector<Point> seq_points(const ConvexSeq& c, int lo, int hi) {
	std::vector<Point> out;
	for (int i = lo; i < hi; i++) out.push_back(c[i]);
	return out;
}

// positions of one side as an ordered point list
std::vector<Point> side_a(const AvoidingPair& p) {
	std::vector<Point> out;
	for (int t = 0; t < p.size_a(); t++) out.push_back(p.a_at(t));
	return out;
}
std::vector<Point> side_b(const AvoidingPair& p) {
	std::vector<Point> out;
	for (int t = 0; t < p.size_b(); t++) out.push_back(p.b_at(t));
	return out;
}

// the three structural facts every avoiding pair must satisfy, checked
// directly against segment geometry (positions, not the library's audit)
void check_order_properties(const AvoidingPair& p) {
	std::vector<Point> A = side_a(p), B = side_b(p);
	int na = static_cast<int>(A.size()), nb = static_cast<int>(B.size());

	// increasing paths do not self-cross
	for (int s = 0; s + 1 < na; s++)
		for (int t = s + 1; t + 1 < na; t++)
			CHECK_FALSE(segments_cross(A[size_t(s)], A[size_t(s + 1)], A[size_t(t)], A[size_t(t + 1)]));
	for (int s = 0; s + 1 < nb; s++)
		for (int t = s + 1; t + 1 < nb; t++)
			CHECK_FALSE(segments_cross(B[size_t(s)], B[size_t(s + 1)], B[size_t(t)], B[size_t(t + 1)]));

	// rungs cross exactly when their endpoints are counter-sorted
	for (int i = 0; i < na; i++)
		for (int j = i + 1; j < na; j++)
			for (int k = 0; k < nb; k++)
				for (int l = 0; l < nb; l++) {
					if (k == l) continue;
					bool crosses = segments_cross(A[size_t(i)], B[size_t(k)], A[size_t(j)], B[size_t(l)]);
					CHECK_EQ(crosses, l < k);
				}

	// a within-part edge never crosses an edge leaving from outside its span
	for (int i = 0; i < na; i++)
		for (int j = i + 1; j < na; j++)
			for (int w = 0; w < na; w++) {
				if (w > i && w < j) continue;
				for (int k = 0; k < nb; k++)
					CHECK_FALSE(segments_cross(A[size_t(i)], A[size_t(j)], A[size_t(w)], B[size_t(k)]));
			}
}

}  // namespace

TEST_CASE("is_mutually_avoiding accepts split arcs and rejects tangled sets") {
	ConvexSeq c = gen_convex(12);
	CHECK(is_mutually_avoiding(seq_points(c, 0, 6), seq_points(c, 6, 12)));
	CHECK(is_mutually_avoiding(seq_points(c, 0, 3), seq_points(c, 7, 11)));

	// alternating vertices of a convex polygon are not avoiding
	std::vector<Point> even, odd;
	for (int i = 0; i < 12; i++) (i % 2 == 0 ? even : odd).push_back(c[i]);
	CHECK_FALSE(is_mutually_avoiding(even, odd));

	// a cluster inside the other side's hull is not avoiding
	std::vector<Point> frame{{0, 0}, {100, 0}, {100, 100}, {0, 100}};
	std::vector<Point> inner{{60, 51}, {63, 57}};
	CHECK_FALSE(is_mutually_avoiding(frame, inner));

	CHECK_THROWS_AS((void)is_mutually_avoiding({{0, 0}}, inner), BadInput);
}

TEST_CASE("avoidance is symmetric and closed under subsets") {
	for (std::uint64_t seed = 1; seed <= 30; seed++) {
		auto [L, R] = gen_separated_clouds(8, seed, 1000);
		bool fwd = is_mutually_avoiding(L, R);
		CHECK_EQ(fwd, is_mutually_avoiding(R, L));
		if (!fwd) continue;
		Rng rng(seed);
		std::vector<Point> sa, sb;
		for (const Point& p : L)
			if (rng.below(2) == 0) sa.push_back(p);
		for (const Point& p : R)
			if (rng.below(2) == 0) sb.push_back(p);
		if (sa.size() >= 2 && sb.size() >= 2) CHECK(is_mutually_avoiding(sa, sb));
	}
}

TEST_CASE("convex split: one side keeps polygon order, the other reverses") {
	ConvexSeq c = gen_convex(8);
	AvoidingPair p = from_convex_split(c, 4);
	REQUIRE_EQ(p.size_a(), 4);
	REQUIRE_EQ(p.size_b(), 4);
	for (int t = 0; t < 4; t++) {
		CHECK_EQ(p.a_at(t), c[3 - t]);
		CHECK_EQ(p.b_at(t), c[4 + t]);
	}
	CHECK_EQ(p.src_a, std::vector<int>{0, 1, 2, 3});
	CHECK_EQ(p.src_b, std::vector<int>{4, 5, 6, 7});
	check_order_properties(p);

	// a seeded polygon and interior ranges behave the same way
	ConvexSeq d = gen_convex(20, 7);
	AvoidingPair q = from_convex_ranges(d, 2, 8, 11, 19);
	REQUIRE_EQ(q.size_a(), 6);
	REQUIRE_EQ(q.size_b(), 8);
	check_order_properties(q);
}

TEST_CASE("from_convex_ranges rejects malformed ranges") {
	ConvexSeq c = gen_convex(10);
	CHECK_THROWS_AS((void)from_convex_ranges(c, 0, 5, 4, 9), BadInput);   // overlap
	CHECK_THROWS_AS((void)from_convex_ranges(c, 0, 1, 5, 9), BadInput);   // too short
	CHECK_THROWS_AS((void)from_convex_ranges(c, 0, 5, 8, 11), BadInput);  // out of bounds
	CHECK_THROWS_AS((void)from_convex_split(c, 9), BadInput);
}

TEST_CASE("mutual_orders matches the arc derivation and audits its input") {
	ConvexSeq c = gen_convex(9, 3);
	AvoidingPair arc = from_convex_ranges(c, 0, 4, 4, 9);
	AvoidingPair full = mutual_orders(arc.a, arc.b);
	CHECK_EQ(side_a(arc), side_a(full));
	CHECK_EQ(side_b(arc), side_b(full));
	check_order_properties(full);

	// two-point sides still get the convention right
	std::vector<Point> A{{0, 0}, {1, 3}}, B{{10, 1}, {11, 4}};
	REQUIRE(is_mutually_avoiding(A, B));
	check_order_properties(mutual_orders(A, B));

	std::vector<Point> even, odd;
	for (int i = 0; i < 10; i++) (i % 2 == 0 ? even : odd).push_back(c[i % 9]);
	even.resize(4);
	odd.resize(4);
	CHECK_THROWS_AS((void)mutual_orders(even, odd), InconsistentOrder);
}

TEST_CASE("mutually_avoiding_subsets reaches k on separated clouds") {
	for (int k = 2; k <= 5; k++) {
		for (std::uint64_t seed = 0; seed < 12; seed++) {
			auto [L, R] = gen_separated_clouds(6 * k * k, seed * 131 + std::uint64_t(k));
			AvoidingPair p = mutually_avoiding_subsets(L, R, k);
			REQUIRE_EQ(p.size_a(), k);
			REQUIRE_EQ(p.size_b(), k);
			CHECK(is_mutually_avoiding(p.a, p.b));
			REQUIRE_EQ(p.src_a.size(), size_t(k));
			REQUIRE_EQ(p.src_b.size(), size_t(k));
			std::set<int> seen_a(p.src_a.begin(), p.src_a.end());
			CHECK_EQ(seen_a.size(), size_t(k));
			for (size_t i = 0; i < p.src_a.size(); i++) CHECK_EQ(L[size_t(p.src_a[i])], p.a[i]);
			for (size_t i = 0; i < p.src_b.size(); i++) CHECK_EQ(R[size_t(p.src_b[i])], p.b[i]);
			if (k <= 4) check_order_properties(p);
		}
	}
}

TEST_CASE("mutually_avoiding_subsets is deterministic") {
	auto [L, R] = gen_separated_clouds(54, 42);
	AvoidingPair p = mutually_avoiding_subsets(L, R, 3);
	AvoidingPair q = separable_to_avoiding(L, R, 3);
	CHECK_EQ(p.src_a, q.src_a);
	CHECK_EQ(p.src_b, q.src_b);
}

TEST_CASE("mutually_avoiding_subsets validates its input") {
	auto [L, R] = gen_separated_clouds(24, 5);
	CHECK_THROWS_AS((void)mutually_avoiding_subsets(L, R, 1), BadInput);
	try {
		(void)mutually_avoiding_subsets(L, R, 3);  // needs 54 per side
		FAIL("expected SizeTooSmall");
	} catch (const SizeTooSmall& e) {
		CHECK_EQ(e.stage, "mutually_avoiding_subsets");
	}

	// overlapping clouds: same box for both sides
	std::vector<Point> X = gen_general(24, 11, 500);
	std::vector<Point> Y = gen_general(24, 12, 500);
	CHECK_THROWS_AS((void)mutually_avoiding_subsets(X, Y, 2), NotSeparated);
}

TEST_CASE("gen_separated_clouds yields separated general-position input") {
	auto [L, R] = gen_separated_clouds(40, 9);
	auto [L2, R2] = gen_separated_clouds(40, 9);
	CHECK_EQ(L, L2);
	CHECK_EQ(R, R2);
	REQUIRE_EQ(L.size(), size_t(40));
	REQUIRE_EQ(R.size(), size_t(40));
	i64 lmax = L[0].x, rmin = R[0].x;
	for (const Point& p : L) lmax = std::max(lmax, p.x);
	for (const Point& p : R) rmin = std::min(rmin, p.x);
	CHECK_LT(lmax, rmin);
	std::vector<Point> comb = L;
	comb.insert(comb.end(), R.begin(), R.end());
	CHECK_EQ(classify_position(comb).kind, PositionKind::General);
	auto [S, T] = gen_separated_clouds(40, 10);
	CHECK_NE(L, S);
}
