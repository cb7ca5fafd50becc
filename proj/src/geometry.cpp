#include "gr/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "gr/rng.hpp"
#include "json.hpp"

namespace gr {

static void check_coord(Point p) {
	if (std::llabs(p.x) > kCoordLimit || std::llabs(p.y) > kCoordLimit)
		throw BadInput("coordinate out of range at (" + std::to_string(p.x) + ", " +
		               std::to_string(p.y) + ")");
}

int orient_sign(Point p, Point q, Point r) {
	check_coord(p);
	check_coord(q);
	check_coord(r);
	i128 lhs = i128(q.x - p.x) * i128(r.y - p.y);
	i128 rhs = i128(q.y - p.y) * i128(r.x - p.x);
	if (lhs > rhs) return 1;
	if (lhs < rhs) return -1;
	return 0;
}

Orientation orientation(Point p, Point q, Point r) {
	int s = orient_sign(p, q, r);
	if (s > 0) return Orientation::Counterclockwise;
	if (s < 0) return Orientation::Clockwise;
	return Orientation::Collinear;
}

// Is m strictly inside the segment ab, all three collinear?  (Callers check
// collinearity; this only compares along the dominant axis.)
static bool strictly_between(Point a, Point b, Point m) {
	if (a.x != b.x) return (a.x < m.x) != (b.x < m.x) && m.x != a.x && m.x != b.x;
	return (a.y < m.y) != (b.y < m.y) && m.y != a.y && m.y != b.y;
}

bool segments_cross(Point a, Point b, Point c, Point d) {
	int s1 = orient_sign(a, b, c);
	int s2 = orient_sign(a, b, d);
	int s3 = orient_sign(c, d, a);
	int s4 = orient_sign(c, d, b);

	// proper crossing: each segment's endpoints straddle the other's line
	if (((s1 > 0 && s2 < 0) || (s1 < 0 && s2 > 0)) &&
	    ((s3 > 0 && s4 < 0) || (s3 < 0 && s4 > 0)))
		return true;

	// all four collinear: open interiors overlap iff the intervals do
	if (s1 == 0 && s2 == 0 && s3 == 0 && s4 == 0) {
		Point lo1 = std::min(a, b), hi1 = std::max(a, b);
		Point lo2 = std::min(c, d), hi2 = std::max(c, d);
		if (a == b) return c != d && strictly_between(c, d, a);
		if (c == d) return strictly_between(a, b, c);
		return std::max(lo1, lo2) < std::min(hi1, hi2);
	}

	// T-junctions and shared endpoints touch only at a segment endpoint,
	// which open segments exclude
	return false;
}

// ---------------------------------------------------------------------------

std::vector<int> convex_hull(const std::vector<Point>& pts) {
	int n = static_cast<int>(pts.size());
	std::vector<int> id(static_cast<size_t>(n));
	std::iota(id.begin(), id.end(), 0);
	std::sort(id.begin(), id.end(), [&](int i, int j) { return pts[size_t(i)] < pts[size_t(j)]; });
	id.erase(std::unique(id.begin(), id.end(),
	                     [&](int i, int j) { return pts[size_t(i)] == pts[size_t(j)]; }),
	         id.end());
	n = static_cast<int>(id.size());
	if (n <= 2) return id;

	// Andrew's monotone chain; strict turns only, so edge-interior points are
	// dropped and every returned index is a true hull vertex.
	std::vector<int> h(2 * static_cast<size_t>(n));
	int k = 0;
	for (int ii = 0; ii < n; ii++) {
		int i = id[size_t(ii)];
		while (k >= 2 && orient_sign(pts[size_t(h[size_t(k - 2)])], pts[size_t(h[size_t(k - 1)])],
		                             pts[size_t(i)]) <= 0)
			k--;
		h[size_t(k++)] = i;
	}
	for (int ii = n - 2, lower = k + 1; ii >= 0; ii--) {
		int i = id[size_t(ii)];
		while (k >= lower && orient_sign(pts[size_t(h[size_t(k - 2)])], pts[size_t(h[size_t(k - 1)])],
		                                 pts[size_t(i)]) <= 0)
			k--;
		h[size_t(k++)] = i;
	}
	h.resize(static_cast<size_t>(k - 1));
	return h;
}

// closed point-in-hull; hull given as point list, counterclockwise
static bool point_in_hull_closed(const std::vector<Point>& hull, Point p) {
	size_t n = hull.size();
	if (n == 0) return false;
	if (n == 1) return hull[0] == p;
	if (n == 2) {
		if (orient_sign(hull[0], hull[1], p) != 0) return false;
		return p == hull[0] || p == hull[1] || strictly_between(hull[0], hull[1], p);
	}
	for (size_t i = 0; i < n; i++)
		if (orient_sign(hull[i], hull[(i + 1) % n], p) < 0) return false;
	return true;
}

// closed-segment intersection (shared endpoints count)
static bool closed_segments_meet(Point a, Point b, Point c, Point d) {
	if (segments_cross(a, b, c, d)) return true;
	auto on = [](Point u, Point v, Point p) {
		return orient_sign(u, v, p) == 0 &&
		       (p == u || p == v || (u != v && strictly_between(u, v, p)));
	};
	return on(a, b, c) || on(a, b, d) || on(c, d, a) || on(c, d, b);
}

bool hulls_disjoint(const std::vector<Point>& pts, const std::vector<int>& A,
                    const std::vector<int>& B) {
	if (A.empty() || B.empty()) return true;
	auto collect = [&](const std::vector<int>& ids) {
		std::vector<Point> sub;
		sub.reserve(ids.size());
		for (int i : ids) sub.push_back(pts[size_t(i)]);
		std::vector<int> h = convex_hull(sub);
		std::vector<Point> out;
		out.reserve(h.size());
		for (int i : h) out.push_back(sub[size_t(i)]);
		return out;
	};
	std::vector<Point> ha = collect(A), hb = collect(B);
	for (const Point& p : hb)
		if (point_in_hull_closed(ha, p)) return false;
	for (const Point& p : ha)
		if (point_in_hull_closed(hb, p)) return false;
	size_t na = ha.size(), nb = hb.size();
	if (na >= 2 && nb >= 2) {
		for (size_t i = 0; i < na; i++)
			for (size_t j = 0; j < nb; j++)
				if (closed_segments_meet(ha[i], ha[(i + 1) % na], hb[j], hb[(j + 1) % nb]))
					return false;
	}
	return true;
}

// ---------------------------------------------------------------------------

PositionReport classify_position(const std::vector<Point>& pts, int exhaustive_limit) {
	int n = static_cast<int>(pts.size());

	// duplicates: exact at any size
	{
		std::vector<int> id(static_cast<size_t>(n));
		std::iota(id.begin(), id.end(), 0);
		std::sort(id.begin(), id.end(),
		          [&](int i, int j) { return pts[size_t(i)] < pts[size_t(j)]; });
		for (int i = 0; i + 1 < n; i++)
			if (pts[size_t(id[size_t(i)])] == pts[size_t(id[size_t(i + 1)])]) {
				std::array<int, 3> t{id[size_t(i)], id[size_t(i + 1)], -1};
				for (int k = 0; k < n && t[2] < 0; k++)
					if (k != t[0] && k != t[1]) t[2] = k;
				std::sort(t.begin(), t.begin() + (t[2] < 0 ? 2 : 3));
				return {PositionKind::Degenerate, t};
			}
	}
	if (n < 3) return {PositionKind::General, {-1, -1, -1}};

	// all points hull vertices => strictly convex => also general position
	if (static_cast<int>(convex_hull(pts).size()) == n)
		return {PositionKind::Convex, {-1, -1, -1}};

	if (n <= exhaustive_limit) {
		for (int i = 0; i < n; i++)
			for (int j = i + 1; j < n; j++)
				for (int k = j + 1; k < n; k++)
					if (orient_sign(pts[size_t(i)], pts[size_t(j)], pts[size_t(k)]) == 0)
						return {PositionKind::Degenerate, {i, j, k}};
		return {PositionKind::General, {-1, -1, -1}};
	}

	// Too large for all triples: deterministic spot check.  All triples within
	// a stride-sampled subset plus a pseudorandom sweep.  A miss here is
	// possible in principle; large sets we generate ourselves never reach this
	// branch (they are convex and resolved above).
	std::vector<int> sub;
	int stride = std::max(1, n / exhaustive_limit);
	for (int i = 0; i < n; i += stride) sub.push_back(i);
	int m = static_cast<int>(sub.size());
	for (int i = 0; i < m; i++)
		for (int j = i + 1; j < m; j++)
			for (int k = j + 1; k < m; k++) {
				int a = sub[size_t(i)], b = sub[size_t(j)], c = sub[size_t(k)];
				if (orient_sign(pts[size_t(a)], pts[size_t(b)], pts[size_t(c)]) == 0)
					return {PositionKind::Degenerate, {a, b, c}};
			}
	Rng rng(0x9e0d1a7ull ^ (std::uint64_t(n) << 20));
	for (int rep = 0; rep < 2'000'000; rep++) {
		int a = int(rng.below(std::uint64_t(n)));
		int b = int(rng.below(std::uint64_t(n)));
		int c = int(rng.below(std::uint64_t(n)));
		if (a == b || b == c || a == c) continue;
		if (orient_sign(pts[size_t(a)], pts[size_t(b)], pts[size_t(c)]) == 0) {
			std::array<int, 3> t{a, b, c};
			std::sort(t.begin(), t.end());
			return {PositionKind::Degenerate, t};
		}
	}
	return {PositionKind::General, {-1, -1, -1}};
}

// ---------------------------------------------------------------------------

void validate_convex_seq(const ConvexSeq& c) {
	int n = c.size();
	if (n < 3) throw BadInput("convex sequence needs at least 3 points");
	int want = 0;
	for (int i = 0; i < n; i++) {
		int j = (i + 1) % n, k = (i + 2) % n;
		int s = orient_sign(c[i], c[j], c[k]);
		if (s == 0)
			throw BadInput("collinear triple at indices " + std::to_string(i) + "," +
			               std::to_string(j) + "," + std::to_string(k));
		if (want == 0) want = s;
		if (s != want)
			throw BadInput("turn direction flips at indices " + std::to_string(i) + "," +
			               std::to_string(j) + "," + std::to_string(k));
	}
}

ConvexSeq gen_convex(int n, std::uint64_t seed) {
	if (n < 3) throw BadInput("gen_convex: n must be >= 3");
	if (i64(n) > (i64(1) << 28)) throw BadInput("gen_convex: n too large for coordinate budget");
	ConvexSeq c;
	c.pts.reserve(static_cast<size_t>(n));
	if (seed == 0) {
		for (i64 i = 0; i < n; i++) c.pts.push_back({i, i * i});
	} else {
		// strictly increasing slope gaps keep the chain strictly convex
		i64 y = 0, gap = 1 + i64(splitmix64(seed) % 7);
		for (i64 i = 0; i < n; i++) {
			c.pts.push_back({i, y});
			y += gap;
			gap += 1 + i64(splitmix64(seed ^ std::uint64_t(i + 1)) % 7);
		}
	}
	validate_convex_seq(c);
	return c;
}

std::vector<Point> gen_general(int n, std::uint64_t seed, i64 box) {
	if (n < 1) throw BadInput("gen_general: n must be >= 1");
	if (box < 4 || box > kCoordLimit) throw BadInput("gen_general: bad box size");
	Rng rng(seed ^ 0xa3c59ac2ULL);
	std::vector<Point> out;
	out.reserve(static_cast<size_t>(n));
	int stall = 0;
	while (static_cast<int>(out.size()) < n) {
		Point p{i64(rng.below(std::uint64_t(2 * box + 1))) - box,
		        i64(rng.below(std::uint64_t(2 * box + 1))) - box};
		bool ok = true;
		for (size_t i = 0; i < out.size() && ok; i++) {
			if (out[i] == p) ok = false;
			for (size_t j = i + 1; j < out.size() && ok; j++)
				if (orient_sign(out[i], out[j], p) == 0) ok = false;
		}
		if (ok) {
			out.push_back(p);
			stall = 0;
		} else if (++stall > 100'000) {
			throw BadInput("gen_general: box too tight to stay in general position");
		}
	}
	return out;
}

// ---------------------------------------------------------------------------

std::string point_set_to_json(const std::vector<Point>& pts) {
	nlohmann::json j;
	j["points"] = nlohmann::json::array();
	for (const Point& p : pts) j["points"].push_back({p.x, p.y});
	return j.dump(1, '\t') + "\n";
}

std::vector<Point> point_set_from_json(const std::string& text) {
	nlohmann::json j = nlohmann::json::parse(text);
	if (!j.contains("points") || !j["points"].is_array())
		throw BadInput("point set json: missing \"points\" array");
	std::vector<Point> pts;
	pts.reserve(j["points"].size());
	for (const auto& e : j["points"]) {
		if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
		    !e[1].is_number_integer())
			throw BadInput("point set json: each point must be a pair of integers");
		Point p{e[0].get<i64>(), e[1].get<i64>()};
		check_coord(p);
		pts.push_back(p);
	}
	return pts;
}

}  // namespace gr
