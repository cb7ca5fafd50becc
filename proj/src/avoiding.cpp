#include "gr/avoiding.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "gr/rng.hpp"

namespace gr {

bool is_mutually_avoiding(const std::vector<Point>& A, const std::vector<Point>& B) {
	if (A.size() < 2 || B.size() < 2)
		throw BadInput("is_mutually_avoiding: both sides need at least 2 points");
	auto one_side = [](const std::vector<Point>& U, const std::vector<Point>& W) {
		for (size_t i = 0; i < U.size(); i++)
			for (size_t j = i + 1; j < U.size(); j++) {
				int s0 = orient_sign(U[i], U[j], W[0]);
				if (s0 == 0) return false;
				for (size_t t = 1; t < W.size(); t++)
					if (orient_sign(U[i], U[j], W[t]) != s0) return false;
			}
		return true;
	};
	return one_side(A, B) && one_side(B, A);
}

// The coupling convention all extractors assume: walking both sides in their
// mutual orders, rungs at equal positions do not cross and swapped rungs do.
// Checking the first quadruple fixes the relative direction of the orders;
// the audit below then confirms it holds globally.
static bool first_quadruple_parallel(const AvoidingPair& p) {
	return !segments_cross(p.a_at(0), p.b_at(0), p.a_at(1), p.b_at(1)) &&
	       segments_cross(p.a_at(0), p.b_at(1), p.a_at(1), p.b_at(0));
}

static void audit_order_convention(const AvoidingPair& p, bool exhaustive) {
	int na = p.size_a(), nb = p.size_b();
	auto check = [&](int i, int j, int k, int l) {
		if (segments_cross(p.a_at(i), p.b_at(k), p.a_at(j), p.b_at(l)) ||
		    !segments_cross(p.a_at(i), p.b_at(l), p.a_at(j), p.b_at(k)))
			throw InconsistentOrder("mutual order audit failed at A positions " +
			                        std::to_string(i) + "," + std::to_string(j) +
			                        " B positions " + std::to_string(k) + "," +
			                        std::to_string(l));
	};
	if (exhaustive) {
		for (int i = 0; i < na; i++)
			for (int j = i + 1; j < na; j++)
				for (int k = 0; k < nb; k++)
					for (int l = k + 1; l < nb; l++) check(i, j, k, l);
	} else {
		Rng rng(0xc0ffee);
		for (int rep = 0; rep < 200'000; rep++) {
			int i = int(rng.below(std::uint64_t(na))), j = int(rng.below(std::uint64_t(na)));
			int k = int(rng.below(std::uint64_t(nb))), l = int(rng.below(std::uint64_t(nb)));
			if (i == j || k == l) continue;
			check(std::min(i, j), std::max(i, j), std::min(k, l), std::max(k, l));
		}
	}
}

AvoidingPair mutual_orders(const std::vector<Point>& A, const std::vector<Point>& B) {
	if (!is_mutually_avoiding(A, B))
		throw InconsistentOrder("mutual_orders: the pair is not mutually avoiding");
	AvoidingPair p;
	p.a = A;
	p.b = B;
	p.order_a.resize(A.size());
	p.order_b.resize(B.size());
	std::iota(p.order_a.begin(), p.order_a.end(), 0);
	std::iota(p.order_b.begin(), p.order_b.end(), 0);

	// clockwise as seen from B; avoidance makes the choice of witness
	// irrelevant and the comparator transitive (A spans less than a half
	// turn from any point of B)
	Point b0 = B[0];
	std::sort(p.order_a.begin(), p.order_a.end(), [&](int x, int y) {
		return orient_sign(b0, A[size_t(x)], A[size_t(y)]) < 0;
	});
	Point a0 = A[size_t(p.order_a[0])];
	std::sort(p.order_b.begin(), p.order_b.end(), [&](int x, int y) {
		return orient_sign(a0, B[size_t(x)], B[size_t(y)]) > 0;
	});
	if (!first_quadruple_parallel(p)) {
		std::reverse(p.order_b.begin(), p.order_b.end());
		if (!first_quadruple_parallel(p))
			throw InconsistentOrder("mutual_orders: no orientation satisfies the rung convention");
	}
	bool small = std::uint64_t(A.size()) * A.size() * B.size() * B.size() <= 4'000'000ULL;
	audit_order_convention(p, small);
	return p;
}

// ---------------------------------------------------------------------------

AvoidingPair from_convex_ranges(const ConvexSeq& c, int lo1, int hi1, int lo2, int hi2) {
	int n = c.size();
	auto bad_range = [n](int lo, int hi) { return lo < 0 || hi > n || hi - lo < 2; };
	if (bad_range(lo1, hi1) || bad_range(lo2, hi2) ||
	    (lo1 < hi2 && lo2 < hi1))  // overlap
		throw BadInput("from_convex_ranges: ranges must be disjoint with >= 2 points each");

	AvoidingPair p;
	for (int i = lo1; i < hi1; i++) {
		p.a.push_back(c[i]);
		p.src_a.push_back(i);
	}
	for (int i = lo2; i < hi2; i++) {
		p.b.push_back(c[i]);
		p.src_b.push_back(i);
	}
	p.order_a.resize(p.a.size());
	p.order_b.resize(p.b.size());
	std::iota(p.order_a.begin(), p.order_a.end(), 0);
	std::iota(p.order_b.begin(), p.order_b.end(), 0);

	// arcs of a convex polygon see each other in polygon order or its
	// reverse; one witness decides which, and a linear sweep confirms
	Point b0 = p.b[0];
	if (orient_sign(b0, p.a[0], p.a[1]) > 0)
		std::reverse(p.order_a.begin(), p.order_a.end());
	for (size_t t = 0; t + 1 < p.a.size(); t++)
		if (orient_sign(b0, p.a[size_t(p.order_a[t])], p.a[size_t(p.order_a[t + 1])]) >= 0)
			throw InternalContradiction("from_convex_ranges: arc order not clockwise from B");
	Point a0 = p.a[size_t(p.order_a[0])];
	if (orient_sign(a0, p.b[0], p.b[1]) < 0)
		std::reverse(p.order_b.begin(), p.order_b.end());
	for (size_t t = 0; t + 1 < p.b.size(); t++)
		if (orient_sign(a0, p.b[size_t(p.order_b[t])], p.b[size_t(p.order_b[t + 1])]) <= 0)
			throw InternalContradiction("from_convex_ranges: arc order not consistent from A");
	if (!first_quadruple_parallel(p)) {
		std::reverse(p.order_b.begin(), p.order_b.end());
		if (!first_quadruple_parallel(p))
			throw InternalContradiction("from_convex_ranges: rung convention unsatisfiable");
	}
	return p;
}

AvoidingPair from_convex_split(const ConvexSeq& c, int split) {
	return from_convex_ranges(c, 0, split, split, c.size());
}

// ---------------------------------------------------------------------------
// mutually_avoiding_subsets
//
// Core device: when the clouds are strictly separated, the relation
// "p before q along the separation normal, and every point of Q lies
// strictly on one fixed side of line(p,q)" is transitive on P.  A longest
// chain of that relation is therefore a set in which EVERY pair's line keeps
// all of Q on one side -- exactly the one-sided half of mutual avoidance.
// Extract a chain in P against (a block of) Q, pick k points from it, then
// extract a chain in the block against those k points.  Both halves are
// certified before anything is returned.

namespace {

i128 dot(Point n, Point p) { return i128(n.x) * p.x + i128(n.y) * p.y; }

// strict separating direction via hull edge normals; A strictly low side
std::optional<Point> separation_normal(const std::vector<Point>& A, const std::vector<Point>& B) {
	auto try_axes = [&](const std::vector<Point>& host) -> std::optional<Point> {
		std::vector<int> h = convex_hull(host);
		size_t m = h.size();
		if (m < 2) return std::nullopt;
		for (size_t e = 0; e < (m == 2 ? size_t(1) : m); e++) {
			Point u = host[size_t(h[e])], v = host[size_t(h[(e + 1) % m])];
			Point n{u.y - v.y, v.x - u.x};
			i128 amax = dot(n, A[0]), bmin = dot(n, B[0]);
			for (const Point& p : A) amax = std::max(amax, dot(n, p));
			for (const Point& p : B) bmin = std::min(bmin, dot(n, p));
			if (amax < bmin) return n;
			i128 bmax = dot(n, B[0]), amin = dot(n, A[0]);
			for (const Point& p : B) bmax = std::max(bmax, dot(n, p));
			for (const Point& p : A) amin = std::min(amin, dot(n, p));
			if (bmax < amin) return Point{-n.x, -n.y};
		}
		return std::nullopt;
	};
	if (auto n = try_axes(A)) return n;
	if (auto n = try_axes(B)) return n;
	return std::nullopt;
}

// indices of P sorted by (n-projection, tangential projection)
std::vector<int> normal_order(const std::vector<Point>& P, Point n) {
	Point d{-n.y, n.x};
	std::vector<int> ord(P.size());
	std::iota(ord.begin(), ord.end(), 0);
	std::sort(ord.begin(), ord.end(), [&](int x, int y) {
		i128 ux = dot(n, P[size_t(x)]), uy = dot(n, P[size_t(y)]);
		if (ux != uy) return ux < uy;
		return dot(d, P[size_t(x)]) < dot(d, P[size_t(y)]);
	});
	return ord;
}

// longest chain of pairs whose lines keep all of Q strictly on `sign` side
std::vector<int> one_sided_chain(const std::vector<Point>& P, const std::vector<int>& ord,
                                 const std::vector<Point>& Q, int sign) {
	int n = static_cast<int>(ord.size());
	std::vector<int> len(size_t(n), 1), par(size_t(n), -1);
	int best = 0;
	for (int j = 1; j < n; j++)
		for (int i = 0; i < j; i++) {
			if (len[size_t(i)] + 1 <= len[size_t(j)]) continue;
			bool edge = true;
			for (const Point& q : Q)
				if (orient_sign(P[size_t(ord[size_t(i)])], P[size_t(ord[size_t(j)])], q) != sign) {
					edge = false;
					break;
				}
			if (edge) {
				len[size_t(j)] = len[size_t(i)] + 1;
				par[size_t(j)] = i;
			}
		}
	for (int j = 1; j < n; j++)
		if (len[size_t(j)] > len[size_t(best)]) best = j;
	std::vector<int> chain;
	for (int t = best; t != -1; t = par[size_t(t)]) chain.push_back(ord[size_t(t)]);
	std::reverse(chain.begin(), chain.end());
	return chain;
}

// every pair's line keeps all of Q strictly on one (per-pair) side
bool pairs_one_sided(const std::vector<Point>& P, const std::vector<int>& ids,
                     const std::vector<Point>& Q) {
	for (size_t i = 0; i < ids.size(); i++)
		for (size_t j = i + 1; j < ids.size(); j++) {
			int s0 = orient_sign(P[size_t(ids[i])], P[size_t(ids[j])], Q[0]);
			if (s0 == 0) return false;
			for (size_t t = 1; t < Q.size(); t++)
				if (orient_sign(P[size_t(ids[i])], P[size_t(ids[j])], Q[t]) != s0) return false;
		}
	return true;
}

std::vector<int> evenly_spaced(const std::vector<int>& v, int k) {
	std::vector<int> out;
	int n = static_cast<int>(v.size());
	for (int t = 0; t < k; t++)
		out.push_back(v[size_t(i64(t) * (n - 1) / std::max(1, k - 1))]);
	return out;
}

std::vector<int> best_chain(const std::vector<Point>& P, const std::vector<int>& ord,
                            const std::vector<Point>& Q) {
	std::vector<int> lo = one_sided_chain(P, ord, Q, -1);
	std::vector<int> hi = one_sided_chain(P, ord, Q, 1);
	return lo.size() >= hi.size() ? lo : hi;
}

// chain in P against a block of Q, then a chain in that block against the
// chosen k points of P
std::optional<std::pair<std::vector<int>, std::vector<int>>> directed_pick(
    const std::vector<Point>& P, const std::vector<Point>& Q, int k, Point n) {
	std::vector<int> qn = normal_order(Q, n);
	Point d{-n.y, n.x};
	std::vector<int> qt = normal_order(Q, d);
	int m = static_cast<int>(Q.size());
	std::vector<std::vector<int>> blocks;
	blocks.emplace_back(qt);  // whole cloud, tangential order (order irrelevant)
	auto slice = [&](const std::vector<int>& base, int parts) {
		for (int s = 0; s < parts; s++) {
			std::vector<int> blk(base.begin() + i64(s) * m / parts,
			                     base.begin() + i64(s + 1) * m / parts);
			if (static_cast<int>(blk.size()) >= k) blocks.push_back(std::move(blk));
		}
	};
	slice(qt, 2);
	slice(qt, 4);
	slice(qn, 2);

	std::vector<int> pord = normal_order(P, n);
	for (const std::vector<int>& blk : blocks) {
		std::vector<Point> Qb;
		Qb.reserve(blk.size());
		for (int i : blk) Qb.push_back(Q[size_t(i)]);
		std::vector<int> cp = best_chain(P, pord, Qb);
		if (static_cast<int>(cp.size()) < k) continue;
		std::vector<int> ia = evenly_spaced(cp, k);
		if (!pairs_one_sided(P, ia, Qb)) continue;
		std::vector<Point> Pk;
		for (int i : ia) Pk.push_back(P[size_t(i)]);
		std::vector<int> bord = normal_order(Qb, n);
		std::vector<int> cq = best_chain(Qb, bord, Pk);
		if (static_cast<int>(cq.size()) < k) continue;
		std::vector<int> ibl = evenly_spaced(cq, k);
		if (!pairs_one_sided(Qb, ibl, Pk)) continue;
		std::vector<int> ib;
		for (int i : ibl) ib.push_back(blk[size_t(i)]);
		return std::make_pair(ia, ib);
	}
	return std::nullopt;
}

}  // namespace

AvoidingPair mutually_avoiding_subsets(const std::vector<Point>& Ap,
                                       const std::vector<Point>& Bp, int k) {
	if (k < 2) throw BadInput("mutually_avoiding_subsets: k must be >= 2");
	int need = 6 * k * k;
	if (static_cast<int>(Ap.size()) < need || static_cast<int>(Bp.size()) < need)
		throw SizeTooSmall("mutually_avoiding_subsets",
		                   "need 6k^2 = " + std::to_string(need) + " points per side, have " +
		                       std::to_string(Ap.size()) + " and " + std::to_string(Bp.size()));
	std::vector<Point> comb = Ap;
	comb.insert(comb.end(), Bp.begin(), Bp.end());
	{
		std::vector<int> ia(Ap.size()), ib(Bp.size());
		std::iota(ia.begin(), ia.end(), 0);
		std::iota(ib.begin(), ib.end(), static_cast<int>(Ap.size()));
		if (!hulls_disjoint(comb, ia, ib))
			throw NotSeparated("mutually_avoiding_subsets: input hulls overlap");
	}

	auto finish = [&](std::vector<int> ia, std::vector<int> ib) -> AvoidingPair {
		std::vector<Point> A, B;
		for (int i : ia) A.push_back(Ap[size_t(i)]);
		for (int i : ib) B.push_back(Bp[size_t(i)]);
		if (!is_mutually_avoiding(A, B))
			throw InternalContradiction("mutually_avoiding_subsets: candidate failed its certificate");
		AvoidingPair p = mutual_orders(A, B);
		p.src_a = std::move(ia);
		p.src_b = std::move(ib);
		return p;
	};

	// two disjoint arcs of one convex polygon are always mutually avoiding,
	// so if the joint hull carries k points of each side, take those
	{
		std::vector<int> hull = convex_hull(comb);
		int na = static_cast<int>(Ap.size());
		int switches = 0, m = static_cast<int>(hull.size());
		for (int t = 0; t < m; t++)
			if ((hull[size_t(t)] < na) != (hull[size_t((t + 1) % m)] < na)) switches++;
		int start = 0;
		while (start < m && !(hull[size_t(start)] < na &&
		                      hull[size_t((start + m - 1) % m)] >= na))
			start++;
		if (switches == 2 && start < m) {
			std::vector<int> arc_a, arc_b;
			for (int t = 0; t < m; t++) {
				int v = hull[size_t((start + t) % m)];
				(v < na ? arc_a : arc_b).push_back(v);
			}
			for (int& v : arc_b) v -= na;
			if (static_cast<int>(arc_a.size()) >= k && static_cast<int>(arc_b.size()) >= k)
				return finish(evenly_spaced(arc_a, k), evenly_spaced(arc_b, k));
		}
	}

	// chain construction along the separation direction, in both role orders
	if (auto n = separation_normal(Ap, Bp)) {
		if (auto got = directed_pick(Ap, Bp, k, *n)) return finish(got->first, got->second);
		if (auto got = directed_pick(Bp, Ap, k, Point{-n->x, -n->y}))
			return finish(got->second, got->first);
	}

	// exhaustive pair search for the smallest case
	if (k == 2) {
		int na = static_cast<int>(Ap.size()), nb = static_cast<int>(Bp.size());
		for (int i = 0; i < na; i++)
			for (int j = i + 1; j < na; j++)
				for (int s = 0; s < nb; s++)
					for (int t = s + 1; t < nb; t++) {
						std::vector<Point> A{Ap[size_t(i)], Ap[size_t(j)]};
						std::vector<Point> B{Bp[size_t(s)], Bp[size_t(t)]};
						if (is_mutually_avoiding(A, B)) return finish({i, j}, {s, t});
					}
	}

	// seeded randomized sweep as a last resort
	Rng rng(0x5eedULL ^ (std::uint64_t(Ap.size()) << 24) ^ std::uint64_t(k));
	for (int rep = 0; rep < 20'000; rep++) {
		auto sample = [&](int n) {
			std::vector<int> ids;
			while (static_cast<int>(ids.size()) < k) {
				int v = int(rng.below(std::uint64_t(n)));
				if (std::find(ids.begin(), ids.end(), v) == ids.end()) ids.push_back(v);
			}
			return ids;
		};
		std::vector<int> ia = sample(static_cast<int>(Ap.size()));
		std::vector<int> ib = sample(static_cast<int>(Bp.size()));
		std::vector<Point> A, B;
		for (int i : ia) A.push_back(Ap[size_t(i)]);
		for (int i : ib) B.push_back(Bp[size_t(i)]);
		if (is_mutually_avoiding(A, B)) return finish(std::move(ia), std::move(ib));
	}
	throw InternalContradiction("mutually_avoiding_subsets: all constructions fell short of k=" +
	                            std::to_string(k));
}

AvoidingPair separable_to_avoiding(const std::vector<Point>& L, const std::vector<Point>& R,
                                   int k) {
	return mutually_avoiding_subsets(L, R, k);
}

std::pair<std::vector<Point>, std::vector<Point>> gen_separated_clouds(int m, std::uint64_t seed,
                                                                       i64 box) {
	if (m < 2) throw BadInput("gen_separated_clouds: m must be >= 2");
	if (box < 8 || box > kCoordLimit / 4) throw BadInput("gen_separated_clouds: bad box");
	Rng rng(seed ^ 0x7e11c0ULL);
	std::vector<Point> all;
	all.reserve(static_cast<size_t>(2 * m));
	int stall = 0;
	while (static_cast<int>(all.size()) < 2 * m) {
		bool left = static_cast<int>(all.size()) < m;
		i64 xlo = left ? -3 * box : box;
		Point p{xlo + i64(rng.below(std::uint64_t(2 * box + 1))),
		        i64(rng.below(std::uint64_t(2 * box + 1))) - box};
		bool fresh = true;
		for (size_t i = 0; i < all.size() && fresh; i++) {
			if (all[i] == p) fresh = false;
			for (size_t j = i + 1; j < all.size() && fresh; j++)
				if (orient_sign(all[i], all[j], p) == 0) fresh = false;
		}
		if (fresh) {
			all.push_back(p);
			stall = 0;
		} else if (++stall > 100'000) {
			throw BadInput("gen_separated_clouds: box too tight");
		}
	}
	std::vector<Point> L(all.begin(), all.begin() + m);
	std::vector<Point> R(all.begin() + m, all.end());
	return {L, R};
}

}  // namespace gr
