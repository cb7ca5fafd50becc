#include "gr/pw2_extract.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>

#include "gr/dilworth.hpp"
#include "gr/extract.hpp"

namespace gr {

namespace {

std::string plural(size_t k, const char* one, const char* many = nullptr) {
	if (k == 1) return "1 " + std::string(one);
	return std::to_string(k) + " " + (many ? many : std::string(one) + "s");
}

// Product of small positive factors with an overflow guard; the pool sizes
// here are polynomial in n and m and must survive as exact integers.
long long sz(std::initializer_list<long long> factors) {
	__int128 acc = 1;
	for (long long f : factors) {
		acc *= f;
		if (acc > static_cast<__int128>(4'000'000'000'000'000'000LL))
			throw BadInput("a pool size overflows; sizes this large are not realizable anyway");
	}
	return static_cast<long long>(acc);
}

// Falling short of `need` is an honest SizeTooSmall when the stage's own
// arithmetic (`promised`, computed from the actual input sizes) could not
// deliver, and an implementation bug when it promised enough.
[[noreturn]] void shortfall(const char* stage, long long got, long long need, long long promised,
                            const std::string& what) {
	const std::string tail =
	    what + " (got " + std::to_string(got) + ", need " + std::to_string(need) + ")";
	if (promised >= need) throw InternalContradiction(std::string(stage) + ": " + tail);
	throw SizeTooSmall(stage, tail);
}

// Majority color of v's edges into S with ties red, matching
// majority_color, but stopping as soon as either color is decided.
Color fast_majority(int v, const std::vector<int>& S, const Coloring& g) {
	const long long need_red = (static_cast<long long>(S.size()) + 1) / 2;
	const long long need_blue = static_cast<long long>(S.size()) / 2 + 1;
	long long red = 0, blue = 0;
	for (int x : S) {
		if (g.edge(v, x) == Color::Red) {
			if (++red >= need_red) return Color::Red;
		} else if (++blue >= need_blue) {
			return Color::Blue;
		}
	}
	return Color::Red;  // only reachable for empty S; ties are red
}

// Number of v's c-neighbours in S, stopping once `enough` are seen.
long long count_in(int v, const std::vector<int>& S, Color c, long long enough,
                   const Coloring& g) {
	long long cnt = 0;
	for (int x : S) {
		if (g.edge(v, x) != c) continue;
		if (++cnt >= enough) break;
	}
	return cnt;
}

// Number of common c-neighbours of u and v in S, stopping at `enough`.
long long common_in(int u, int v, const std::vector<int>& S, Color c, long long enough,
                    const Coloring& g) {
	long long cnt = 0;
	for (int x : S) {
		if (g.edge(u, x) != c) continue;
		if (g.edge(v, x) != c) continue;
		if (++cnt >= enough) break;
	}
	return cnt;
}

// All c-neighbours of v in S, in S's order.
std::vector<int> collect_nbrs(int v, const std::vector<int>& S, Color c, const Coloring& g) {
	std::vector<int> out;
	for (int x : S)
		if (g.edge(v, x) == c) out.push_back(x);
	return out;
}

// First `upto` common c-neighbours of u and v in S.
std::vector<int> collect_common(int u, int v, const std::vector<int>& S, Color c, long long upto,
                                const Coloring& g) {
	std::vector<int> out;
	for (int x : S) {
		if (g.edge(u, x) != c) continue;
		if (g.edge(v, x) != c) continue;
		out.push_back(x);
		if (static_cast<long long>(out.size()) >= upto) break;
	}
	return out;
}

Witness unswap(Witness w, bool swapped) {
	if (swapped) w.color = other(w.color);
	return w;
}

int int_cap(long long v) { return static_cast<int>(std::min<long long>(v, INT_MAX)); }

// v's red edges into S as a bitmask over S's positions.
std::vector<std::uint64_t> red_bits(int v, const std::vector<int>& S, const Coloring& g) {
	std::vector<std::uint64_t> bits((S.size() + 63) / 64, 0);
	for (size_t t = 0; t < S.size(); ++t)
		if (g.edge(v, S[t]) == Color::Red) bits[t >> 6] |= std::uint64_t{1} << (t & 63);
	return bits;
}

long long and_popcount(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
	long long cnt = 0;
	for (size_t w = 0; w < a.size(); ++w) cnt += __builtin_popcountll(a[w] & b[w]);
	return cnt;
}

}  // namespace

// ---------------------------------------------------------------------------
// scaffold

PartitionScaffold build_scaffold(const std::vector<int>& path_campus,
                                 const std::vector<int>& stem_campus, int ell, int n, int m,
                                 const Coloring& oracle) {
	if (ell < 1) throw BadInput("the scaffold needs at least one stem slot");
	if (n < 1 || m < 1) throw BadInput("scaffold sizes must be positive");
	const long long runs = 2LL * ell - 1;
	const long long path_run = sz({8, m, n, n, n});
	const long long cand_run = sz({8, m, n, n});
	const long long leaf_run = sz({9, m, m, n, n});
	const long long need_u = sz({runs, path_run});
	const long long need_v = sz({runs, cand_run}) + sz({runs - 1, leaf_run});
	if (static_cast<long long>(path_campus.size()) < need_u)
		throw SizeTooSmall("campus slicing",
		                   "the path campus holds " +
		                       plural(path_campus.size(), "vertex", "vertices") + " of the " +
		                       std::to_string(need_u) + " its " + plural(static_cast<size_t>(runs), "run") +
		                       " need");
	if (static_cast<long long>(stem_campus.size()) < need_v)
		throw SizeTooSmall("campus slicing",
		                   "the stem campus holds " +
		                       plural(stem_campus.size(), "vertex", "vertices") + " of the " +
		                       std::to_string(need_v) + " its runs need");

	auto cut = [](const std::vector<int>& s, long long lo, long long len) {
		return std::vector<int>(s.begin() + lo, s.begin() + lo + len);
	};
	std::vector<std::vector<int>> Z, D, C;
	for (long long k = 0; k < runs; ++k) {
		Z.push_back(cut(path_campus, k * path_run, path_run));
		D.push_back(cut(stem_campus, k * (cand_run + leaf_run), cand_run));
		if (k + 1 < runs)
			C.push_back(cut(stem_campus, k * (cand_run + leaf_run) + cand_run, leaf_run));
	}

	// Each candidate colored by its majority toward the facing path run,
	// each run by its vertex majority; ties red at both levels.
	std::vector<std::vector<char>> vert_red(static_cast<size_t>(runs));
	std::vector<char> run_red(static_cast<size_t>(runs), 0);
	long long red_runs = 0;
	for (size_t k = 0; k < static_cast<size_t>(runs); ++k) {
		long long reds = 0;
		vert_red[k].assign(D[k].size(), 0);
		for (size_t t = 0; t < D[k].size(); ++t) {
			if (fast_majority(D[k][t], Z[k], oracle) == Color::Red) {
				vert_red[k][t] = 1;
				++reds;
			}
		}
		run_red[k] = 2 * reds >= static_cast<long long>(D[k].size()) ? 1 : 0;
		red_runs += run_red[k];
	}
	const Color c = red_runs >= ell ? Color::Red : Color::Blue;

	PartitionScaffold sc;
	sc.color = c;
	const long long pick = sz({4, m, n, n});
	for (size_t k = 0; k < static_cast<size_t>(runs) && static_cast<int>(sc.stem_pool.size()) < ell;
	     ++k) {
		if ((run_red[k] != 0) != (c == Color::Red)) continue;
		std::vector<int> pool;
		pool.reserve(static_cast<size_t>(pick));
		for (size_t t = 0; t < D[k].size(); ++t) {
			if ((vert_red[k][t] != 0) != (c == Color::Red)) continue;
			pool.push_back(D[k][t]);
			if (static_cast<long long>(pool.size()) == pick) break;
		}
		if (static_cast<long long>(pool.size()) < pick)
			throw InternalContradiction(
			    "a majority-colored run holds fewer matching vertices than half its size");
		sc.stem_pool.push_back(std::move(pool));
		sc.path_pool.push_back(std::move(Z[k]));
		if (static_cast<int>(sc.stem_pool.size()) <= ell - 1) {
			if (k >= C.size())
				throw InternalContradiction("a non-final chosen run has no leaf run after it");
			sc.leaf_pool.push_back(std::move(C[k]));
		}
	}
	if (static_cast<int>(sc.stem_pool.size()) < ell)
		throw InternalContradiction("fewer majority-colored runs than stem slots");
	return sc;
}

// ---------------------------------------------------------------------------
// refinement

std::variant<RefinedScaffold, CrossBiclique> refine_scaffold(const PartitionScaffold& sc,
                                                             const std::vector<int>& leaf_counts,
                                                             int n, int m,
                                                             const Coloring& oracle) {
	const int ell = static_cast<int>(sc.stem_pool.size());
	if (ell < 1) throw BadInput("empty scaffold");
	if (sc.path_pool.size() != sc.stem_pool.size() ||
	    sc.leaf_pool.size() + 1 != sc.stem_pool.size())
		throw BadInput("scaffold pools are inconsistent");
	if (leaf_counts.size() + 1 != static_cast<size_t>(ell))
		throw BadInput("one leaf count per gap required");
	if (n < 1 || m < 1) throw BadInput("sizes must be positive");

	const Coloring work = sc.color == Color::Blue ? swap_colors(oracle) : oracle;
	const long long two_m = 2LL * m;
	const long long need_common = sz({3, n, m});
	const long long escape_size = sz({n, n});

	RefinedScaffold rs;
	rs.stem_hosts.resize(static_cast<size_t>(ell));
	if (static_cast<long long>(sc.stem_pool[0].size()) < two_m)
		throw SizeTooSmall("stem refinement", "stem pool 0 holds " +
		                                          plural(sc.stem_pool[0].size(), "vertex", "vertices") +
		                                          ", fewer than 2m=" + std::to_string(two_m));
	rs.stem_hosts[0].assign(sc.stem_pool[0].begin(), sc.stem_pool[0].begin() + two_m);

	for (int j = 1; j < ell; ++j) {
		const auto& pool = sc.stem_pool[static_cast<size_t>(j)];
		const auto& prev = rs.stem_hosts[static_cast<size_t>(j - 1)];
		const auto& ground = sc.path_pool[static_cast<size_t>(j - 1)];
		std::vector<int> kept;
		for (int w : pool) {
			bool ok = true;
			for (int v : prev) {
				if (common_in(w, v, ground, Color::Red, need_common, work) < need_common) {
					ok = false;
					break;
				}
			}
			if (!ok) continue;
			kept.push_back(w);
			if (static_cast<long long>(kept.size()) == two_m) break;
		}
		if (static_cast<long long>(kept.size()) == two_m) {
			rs.stem_hosts[static_cast<size_t>(j)] = std::move(kept);
			continue;
		}

		// The block would not fill, so incompatibility is plentiful: some
		// already-chosen vertex rejects a whole escape block's worth of
		// candidates, and those candidates share almost nothing with its
		// grounded neighbourhood -- a biclique of the opposite color.
		std::vector<long long> miss(prev.size(), 0);
		for (int w : pool)
			for (size_t t = 0; t < prev.size(); ++t)
				if (common_in(w, prev[t], ground, Color::Red, need_common, work) < need_common)
					++miss[t];
		size_t best = 0;
		for (size_t t = 1; t < prev.size(); ++t)
			if (miss[t] > miss[best]) best = t;
		if (miss[best] < escape_size)
			shortfall("stem refinement", miss[best], escape_size,
			          static_cast<long long>(pool.size()) / two_m,
			          "a stem block would not fill, yet no chosen vertex rejects an escape "
			          "block's worth of candidates");

		const int vstar = prev[best];
		std::vector<int> W;
		for (int w : pool) {
			if (common_in(w, vstar, ground, Color::Red, need_common, work) < need_common) {
				W.push_back(w);
				if (static_cast<long long>(W.size()) == escape_size) break;
			}
		}
		std::vector<int> S = collect_nbrs(vstar, ground, Color::Red, work);
		std::vector<std::vector<int>> Ts;
		Ts.reserve(W.size());
		for (int w : W) Ts.push_back(collect_nbrs(w, S, Color::Red, work));
		std::vector<int> C = survivors(S, Ts, int_cap(need_common - 1));
		if (static_cast<long long>(C.size()) < escape_size)
			shortfall("stem refinement", static_cast<long long>(C.size()), escape_size,
			          static_cast<long long>(S.size()) - escape_size * (need_common - 1),
			          "the grounded neighbourhood lost too much to the rejected candidates");
		C.resize(static_cast<size_t>(escape_size));
		return CrossBiclique{std::move(C), std::move(W)};
	}

	// leaf splits: big end runs taken exactly, the middle shared evenly
	rs.leaf_splits.resize(static_cast<size_t>(ell - 1));
	const long long end_run = sz({4, m, m, n, n});
	const long long mid_min = sz({3, m, n, n});
	for (int i = 0; i + 1 < ell; ++i) {
		const int f = leaf_counts[static_cast<size_t>(i)];
		if (f < 0) throw BadInput("negative leaf count");
		if (f <= 1) continue;
		const auto& pool = sc.leaf_pool[static_cast<size_t>(i)];
		if (static_cast<long long>(pool.size()) < 2 * end_run)
			throw SizeTooSmall("leaf block partition",
			                   "gap " + std::to_string(i) + " holds " +
			                       plural(pool.size(), "vertex", "vertices") +
			                       ", fewer than its two end runs of " + std::to_string(end_run));
		auto& splits = rs.leaf_splits[static_cast<size_t>(i)];
		splits.emplace_back(pool.begin(), pool.begin() + end_run);
		const int mids = f - 2;
		if (mids > 0) {
			const long long rem = static_cast<long long>(pool.size()) - 2 * end_run;
			const long long base = rem / mids;
			if (base < mid_min)
				throw SizeTooSmall("leaf block partition",
				                   "gap " + std::to_string(i) + " splits " + std::to_string(rem) +
				                       " middle vertices over " + plural(static_cast<size_t>(mids), "run") +
				                       " of " + std::to_string(base) + ", under the floor of " +
				                       std::to_string(mid_min));
			const long long extra = rem % mids;
			long long at = end_run;
			for (int t = 0; t < mids; ++t) {
				const long long len = base + (t < extra ? 1 : 0);
				splits.emplace_back(pool.begin() + at, pool.begin() + at + len);
				at += len;
			}
		}
		splits.emplace_back(pool.end() - end_run, pool.end());
	}
	return rs;
}

// ---------------------------------------------------------------------------
// biclique -> two-path triangulation

namespace {

StemDecomposition validated_stem(const PW2Graph& g) {
	auto res = validate_pw2(g);
	if (const auto* viol = std::get_if<Violation>(&res))
		throw BadInput("not a valid two-path graph: " + viol->invariant);
	return std::move(std::get<StemDecomposition>(res));
}

// A set of host.order() pairwise same-colored vertices carries the host as
// a drawn pattern: the host is outerplanar, so it embeds without crossings
// on those points, whatever their shape.
Witness drawn_pattern(const std::vector<int>& verts, const PW2Graph& host, Color c,
                      const std::vector<Point>& pts, const Coloring& oracle) {
	Graph pat = host.to_graph();
	std::vector<Point> local;
	local.reserve(verts.size());
	for (int id : verts) local.push_back(pts[static_cast<size_t>(id)]);
	std::vector<int> emb = embed_outerplanar(pat, local);
	std::vector<int> map(static_cast<size_t>(pat.n));
	for (int t = 0; t < pat.n; ++t)
		map[static_cast<size_t>(t)] = verts[static_cast<size_t>(emb[static_cast<size_t>(t)])];
	Witness w = make_embedding(c, std::move(pat), std::move(map));
	certify(w, pts, oracle);
	return w;
}

// The common core: two parts of a monochromatic biclique, each listed in
// its geometric order.  Each part yields an increasing across-colored path
// as long as its host path, or host.order() pairwise other-colored
// vertices that carry the host as a drawn pattern.  The second path is
// placed in reverse when the parts are polygon arcs (closing the outer
// cycle around the polygon) and forward when they are the sides of an
// avoiding pair.
Witness pw2_between(const std::vector<int>& p1, const std::vector<int>& p2, const PW2Graph& host,
                    Color across, bool reverse_second, const std::vector<Point>& pts,
                    const Coloring& oracle) {
	if (p1.empty() || p2.empty()) throw BadInput("a biclique part is empty");
	for (int u : p1)
		for (int v : p2)
			if (oracle.edge(u, v) != across)
				throw BadInput("the parts are not an all-" + std::string(color_name(across)) +
				               " biclique: edge (" + std::to_string(u) + "," + std::to_string(v) +
				               ") is " + color_name(other(across)));

	const int nu = static_cast<int>(host.path_u.size());
	const int nv = static_cast<int>(host.path_v.size());
	const int n = host.order();

	std::optional<ChainOrAntichain> r1;
	std::optional<SizeTooSmall> fail1;
	try {
		r1 = chain_or_antichain(p1, across, nu, n, oracle);
	} catch (const SizeTooSmall& e) {
		fail1 = e;
	}
	if (r1)
		if (const auto* anti = std::get_if<Antichain>(&*r1))
			return drawn_pattern(anti->verts, host, other(across), pts, oracle);
	ChainOrAntichain r2 = chain_or_antichain(p2, across, nv, n, oracle);
	if (const auto* anti = std::get_if<Antichain>(&r2))
		return drawn_pattern(anti->verts, host, other(across), pts, oracle);
	if (fail1) throw *fail1;

	const std::vector<int>& c1 = std::get<Chain>(*r1).verts;
	const std::vector<int>& c2 = std::get<Chain>(r2).verts;
	std::vector<int> map(static_cast<size_t>(n));
	for (int t = 0; t < nu; ++t)
		map[static_cast<size_t>(host.path_u[static_cast<size_t>(t)])] = c1[static_cast<size_t>(t)];
	for (int j = 0; j < nv; ++j)
		map[static_cast<size_t>(host.path_v[static_cast<size_t>(j)])] =
		    c2[static_cast<size_t>(reverse_second ? nv - 1 - j : j)];
	Witness w = make_embedding(across, host.to_graph(), std::move(map));
	certify(w, pts, oracle);
	return w;
}

}  // namespace

Witness pw2_from_wellsplit(const ConvexSeq& c, const std::vector<int>& part1,
                           const std::vector<int>& part2, const PW2Graph& host, Color across,
                           const Coloring& oracle) {
	for (const auto* part : {&part1, &part2})
		for (int v : *part)
			if (v < 0 || v >= c.size())
				throw BadInput("part index " + std::to_string(v) + " outside the polygon");
	if (part1.empty() || part2.empty()) throw BadInput("a biclique part is empty");
	auto [lo1, hi1] = std::minmax_element(part1.begin(), part1.end());
	auto [lo2, hi2] = std::minmax_element(part2.begin(), part2.end());
	if (!(*hi1 < *lo2 || *hi2 < *lo1))
		throw BadInput("the parts interleave along the polygon; arcs must be disjoint");
	StemDecomposition stem = validated_stem(host);
	std::vector<int> p1 = part1, p2 = part2;
	std::sort(p1.begin(), p1.end());
	std::sort(p2.begin(), p2.end());
	return pw2_between(p1, p2, stem.host, across, /*reverse_second=*/true, c.pts, oracle);
}

Witness pw2_from_wellsplit(const AvoidingPair& pair, const PW2Graph& host, Color across,
                           const std::vector<Point>& pts, const Coloring& oracle) {
	if (pair.src_a.size() != pair.a.size() || pair.src_b.size() != pair.b.size())
		throw BadInput("the pair carries no source indices into the point set");
	for (const auto* src : {&pair.src_a, &pair.src_b})
		for (int v : *src)
			if (v < 0 || static_cast<size_t>(v) >= pts.size())
				throw BadInput("pair source index " + std::to_string(v) + " outside the point set");
	StemDecomposition stem = validated_stem(host);
	std::vector<int> p1, p2;
	p1.reserve(pair.a.size());
	p2.reserve(pair.b.size());
	for (int t = 0; t < pair.size_a(); ++t)
		p1.push_back(pair.src_a[static_cast<size_t>(pair.order_a[static_cast<size_t>(t)])]);
	for (int t = 0; t < pair.size_b(); ++t)
		p2.push_back(pair.src_b[static_cast<size_t>(pair.order_b[static_cast<size_t>(t)])]);
	return pw2_between(p1, p2, stem.host, across, /*reverse_second=*/false, pts, oracle);
}

// ---------------------------------------------------------------------------
// main stage

namespace {

// Recolored oracle for the stem walk: an edge between consecutive stem
// blocks counts as red only when its endpoints can afford the leaves
// between the blocks -- many common red neighbours in the gap's leaf pool
// for a single leaf, a red end-run foothold on each side for several.
// Everything else keeps its working color.  All decisions are precomputed
// into a pair matrix per gap, so queries are lookups.
struct LeafPricedTable {
	std::unordered_map<int, std::pair<int, int>> where;       // vertex -> (block, position)
	std::vector<std::vector<std::vector<char>>> red_between;  // gap -> lower -> upper
};

std::shared_ptr<LeafPricedTable> leaf_priced_table(const RefinedScaffold& rs,
                                                   const PartitionScaffold& sc,
                                                   const std::vector<int>& leaf_counts, int n,
                                                   int m, const Coloring& work) {
	auto tab = std::make_shared<LeafPricedTable>();
	const int ell = static_cast<int>(rs.stem_hosts.size());
	for (int i = 0; i < ell; ++i)
		for (size_t t = 0; t < rs.stem_hosts[static_cast<size_t>(i)].size(); ++t)
			tab->where.emplace(rs.stem_hosts[static_cast<size_t>(i)][t],
			                   std::make_pair(i, static_cast<int>(t)));
	tab->red_between.resize(static_cast<size_t>(ell - 1));
	const long long pair_floor = sz({n, n});
	const long long end_floor = sz({3, m, n, n});
	for (int i = 0; i + 1 < ell; ++i) {
		const auto& lo = rs.stem_hosts[static_cast<size_t>(i)];
		const auto& hi = rs.stem_hosts[static_cast<size_t>(i + 1)];
		auto& mat = tab->red_between[static_cast<size_t>(i)];
		mat.assign(lo.size(), std::vector<char>(hi.size(), 0));
		const int f = leaf_counts[static_cast<size_t>(i)];
		if (f == 0) {
			for (size_t s = 0; s < lo.size(); ++s)
				for (size_t t = 0; t < hi.size(); ++t)
					mat[s][t] = work.edge(lo[s], hi[t]) == Color::Red ? 1 : 0;
		} else if (f == 1) {
			const auto& pool = sc.leaf_pool[static_cast<size_t>(i)];
			std::vector<std::vector<std::uint64_t>> blo, bhi;
			blo.reserve(lo.size());
			bhi.reserve(hi.size());
			for (int v : lo) blo.push_back(red_bits(v, pool, work));
			for (int v : hi) bhi.push_back(red_bits(v, pool, work));
			for (size_t s = 0; s < lo.size(); ++s)
				for (size_t t = 0; t < hi.size(); ++t)
					mat[s][t] = and_popcount(blo[s], bhi[t]) >= pair_floor ? 1 : 0;
		} else {
			const auto& first = rs.leaf_splits[static_cast<size_t>(i)].front();
			const auto& last = rs.leaf_splits[static_cast<size_t>(i)].back();
			std::vector<char> ok_lo(lo.size()), ok_hi(hi.size());
			for (size_t s = 0; s < lo.size(); ++s)
				ok_lo[s] = count_in(lo[s], first, Color::Red, end_floor, work) >= end_floor ? 1 : 0;
			for (size_t t = 0; t < hi.size(); ++t)
				ok_hi[t] = count_in(hi[t], last, Color::Red, end_floor, work) >= end_floor ? 1 : 0;
			for (size_t s = 0; s < lo.size(); ++s)
				for (size_t t = 0; t < hi.size(); ++t) mat[s][t] = ok_lo[s] && ok_hi[t] ? 1 : 0;
		}
	}
	return tab;
}

Coloring leaf_priced_oracle(std::shared_ptr<const LeafPricedTable> tab, const Coloring& work) {
	Coloring g;
	g.n = work.n;
	g.fn = [tab, work](int i, int j) {
		auto a = tab->where.find(i);
		auto b = tab->where.find(j);
		if (a != tab->where.end() && b != tab->where.end()) {
			const auto [ba, pa] = a->second;
			const auto [bb, pb] = b->second;
			if (ba + 1 == bb)
				return tab->red_between[static_cast<size_t>(ba)][static_cast<size_t>(pa)]
				                       [static_cast<size_t>(pb)] != 0
				           ? Color::Red
				           : Color::Blue;
			if (bb + 1 == ba)
				return tab->red_between[static_cast<size_t>(bb)][static_cast<size_t>(pb)]
				                       [static_cast<size_t>(pa)] != 0
				           ? Color::Red
				           : Color::Blue;
		}
		return work.edge(i, j);
	};
	return g;
}

// A break in the recolored stem walk: every lower-by-upper pair between two
// consecutive stem blocks is recolored-blue.  Decoding the recoloring turns
// m-by-m of it into a genuinely blue separable biclique -- either the pair
// itself was plainly blue (no leaves), or one side starves in the gap's
// leaf pool and the pool's survivors complete the biclique.
Witness separable_from_stem_break(const BlockBiclique& bb, const RefinedScaffold& rs,
                                  const PartitionScaffold& sc,
                                  const std::vector<int>& leaf_counts, int n, int m,
                                  const Coloring& work) {
	const size_t b = static_cast<size_t>(bb.block);
	std::vector<int> L = bb.lower, R = bb.upper;
	if (static_cast<long long>(L.size()) < m || static_cast<long long>(R.size()) < m)
		throw SizeTooSmall("stem break", "the break left parts of " + plural(L.size(), "vertex", "vertices") +
		                                     " and " + plural(R.size(), "vertex", "vertices") +
		                                     ", under m=" + std::to_string(m));
	L.resize(static_cast<size_t>(m));
	R.resize(static_cast<size_t>(m));
	const int f = leaf_counts[b];
	if (f == 0)
		return make_biclique(Color::Blue, std::move(L), std::move(R), CertKind::Separable);

	if (f == 1) {
		const auto& pool = sc.leaf_pool[b];
		const long long rich = sz({2, n, n, m});
		const long long pair_floor = sz({n, n});
		std::vector<std::vector<int>> lists;
		lists.reserve(L.size());
		size_t rich_at = L.size();
		for (size_t t = 0; t < L.size(); ++t) {
			lists.push_back(collect_nbrs(L[t], pool, Color::Red, work));
			if (rich_at == L.size() && static_cast<long long>(lists.back().size()) >= rich)
				rich_at = t;
		}
		if (rich_at == L.size()) {
			// every lower vertex is leaf-poor: the pool's survivors are blue
			// toward all of them
			std::vector<int> C = survivors(pool, lists, int_cap(rich - 1));
			if (static_cast<long long>(C.size()) < m)
				shortfall("stem break", static_cast<long long>(C.size()), m,
				          static_cast<long long>(pool.size()) -
				              static_cast<long long>(L.size()) * (rich - 1),
				          "the leaf pool lost too much to the leaf-poor side");
			C.resize(static_cast<size_t>(m));
			return make_biclique(Color::Blue, std::move(L), std::move(C), CertKind::Separable);
		}
		// one lower vertex is leaf-rich, so every upper vertex shares almost
		// none of its foothold (the recolored pair was blue)
		const std::vector<int>& N = lists[rich_at];
		std::vector<std::vector<int>> ts;
		ts.reserve(R.size());
		for (int w : R) {
			std::vector<int> t = collect_nbrs(w, N, Color::Red, work);
			if (static_cast<long long>(t.size()) >= pair_floor)
				throw InternalContradiction(
				    "a recolored-blue stem pair shares a full leaf foothold");
			ts.push_back(std::move(t));
		}
		std::vector<int> C = survivors(N, ts, int_cap(pair_floor - 1));
		if (static_cast<long long>(C.size()) < m)
			shortfall("stem break", static_cast<long long>(C.size()), m,
			          static_cast<long long>(N.size()) -
			              static_cast<long long>(R.size()) * (pair_floor - 1),
			          "the rich foothold lost too much to the upper side");
		C.resize(static_cast<size_t>(m));
		return make_biclique(Color::Blue, std::move(R), std::move(C), CertKind::Separable);
	}

	// several leaves: a recolored-red pair needs a red foothold on both end
	// runs, so a blue break starves one end run wholesale
	const auto& first = rs.leaf_splits[b].front();
	const auto& last = rs.leaf_splits[b].back();
	const long long pass = sz({3, m, n, n});
	std::vector<std::vector<int>> lists;
	lists.reserve(L.size());
	size_t rich_at = L.size();
	for (size_t t = 0; t < L.size(); ++t) {
		lists.push_back(collect_nbrs(L[t], first, Color::Red, work));
		if (rich_at == L.size() && static_cast<long long>(lists.back().size()) >= pass)
			rich_at = t;
	}
	if (rich_at == L.size()) {
		std::vector<int> C = survivors(first, lists, int_cap(pass - 1));
		if (static_cast<long long>(C.size()) < m)
			shortfall("stem break", static_cast<long long>(C.size()), m,
			          static_cast<long long>(first.size()) -
			              static_cast<long long>(L.size()) * (pass - 1),
			          "the first end run lost too much to the starved side");
		C.resize(static_cast<size_t>(m));
		return make_biclique(Color::Blue, std::move(L), std::move(C), CertKind::Separable);
	}
	std::vector<std::vector<int>> ts;
	ts.reserve(R.size());
	for (int w : R) {
		std::vector<int> t = collect_nbrs(w, last, Color::Red, work);
		if (static_cast<long long>(t.size()) >= pass)
			throw InternalContradiction("a recolored-blue stem pair holds both end runs");
		ts.push_back(std::move(t));
	}
	std::vector<int> C = survivors(last, ts, int_cap(pass - 1));
	if (static_cast<long long>(C.size()) < m)
		shortfall("stem break", static_cast<long long>(C.size()), m,
		          static_cast<long long>(last.size()) -
		              static_cast<long long>(R.size()) * (pass - 1),
		          "the last end run lost too much to the starved side");
	C.resize(static_cast<size_t>(m));
	return make_biclique(Color::Blue, std::move(R), std::move(C), CertKind::Separable);
}

// Monochromatic embedding of a host on up to 3 vertices: a single vertex, a
// single edge, or a monochromatic triangle among the first candidates (any
// 6 vertices carry one).
Witness trivial_small(const PW2Graph& host, const std::vector<int>& cands,
                      const std::vector<Point>& pts, const Coloring& oracle) {
	const int n = host.order();
	Graph pat = host.to_graph();
	if (n == 1) {
		if (cands.empty()) throw SizeTooSmall("triangle scan", "no candidate vertices at all");
		Witness w = make_embedding(Color::Red, std::move(pat), {cands[0]});
		certify(w, pts, oracle);
		return w;
	}
	if (n == 2) {
		if (cands.size() < 2)
			throw SizeTooSmall("triangle scan", "a single candidate vertex cannot host an edge");
		const Color c = oracle.edge(cands[0], cands[1]);
		Witness w = make_embedding(c, std::move(pat), {cands[0], cands[1]});
		certify(w, pts, oracle);
		return w;
	}
	if (n != 3) throw InternalContradiction("the small route only hosts up to 3 vertices");
	for (size_t i = 0; i < cands.size(); ++i)
		for (size_t j = i + 1; j < cands.size(); ++j)
			for (size_t k = j + 1; k < cands.size(); ++k) {
				const Color c = oracle.edge(cands[i], cands[j]);
				if (oracle.edge(cands[i], cands[k]) != c) continue;
				if (oracle.edge(cands[j], cands[k]) != c) continue;
				Witness w =
				    make_embedding(c, std::move(pat), {cands[i], cands[j], cands[k]});
				certify(w, pts, oracle);
				return w;
			}
	throw SizeTooSmall("triangle scan",
	                   "no monochromatic triangle among " + plural(cands.size(), "candidate") +
	                       " (6 always carry one)");
}

// First few entries of each campus, for the small route.
std::vector<int> small_candidates(const std::vector<int>& a, const std::vector<int>& b) {
	std::vector<int> cands;
	for (size_t t = 0; t < a.size() && t < 3; ++t) cands.push_back(a[t]);
	for (size_t t = 0; t < b.size() && t < 3; ++t) cands.push_back(b[t]);
	return cands;
}

}  // namespace

Witness pw2_core(const AvoidingPair& pair, const StemDecomposition& stem, int m,
                 const std::vector<Point>& pts, const Coloring& oracle) {
	if (m < 1) throw BadInput("the block size m must be positive");
	if (oracle.n != static_cast<int>(pts.size()))
		throw BadInput("oracle is on " + plural(static_cast<size_t>(oracle.n), "vertex", "vertices") +
		               " but there are " + plural(pts.size(), "point"));
	if (pair.src_a.size() != pair.a.size() || pair.src_b.size() != pair.b.size())
		throw BadInput("the pair carries no source indices into the point set");

	// Both campuses in mutual order, as global point indices.
	std::vector<int> su, sv;
	su.reserve(pair.a.size());
	sv.reserve(pair.b.size());
	for (int t = 0; t < pair.size_a(); ++t)
		su.push_back(pair.src_a[static_cast<size_t>(pair.order_a[static_cast<size_t>(t)])]);
	for (int t = 0; t < pair.size_b(); ++t)
		sv.push_back(pair.src_b[static_cast<size_t>(pair.order_b[static_cast<size_t>(t)])]);
	for (const auto* side : {&su, &sv})
		for (int v : *side)
			if (v < 0 || static_cast<size_t>(v) >= pts.size())
				throw BadInput("pair source index " + std::to_string(v) + " outside the point set");

	const PW2Graph& host = stem.host;
	const int n = host.order();
	if (n < 1) throw BadInput("empty host");
	if (n <= 3) return trivial_small(host, small_candidates(su, sv), pts, oracle);

	const int ell = stem.ell();
	const int nu = static_cast<int>(host.path_u.size());
	const int nv = static_cast<int>(host.path_v.size());
	const size_t nblocks = std::max<size_t>(1, static_cast<size_t>(ell - 1));
	if (stem.stem_u.size() + 1 != static_cast<size_t>(ell) ||
	    stem.blocks_u.size() != nblocks ||
	    stem.leaf_runs.size() + 1 != static_cast<size_t>(ell) ||
	    stem.f.size() + 1 != static_cast<size_t>(ell))
		throw BadInput("stem decomposition arrays are inconsistent");
	if (stem.stem_v.front() != 0 || stem.stem_v.back() != nv - 1 ||
	    stem.blocks_u.front().first != 0 || stem.blocks_u.back().second != nu - 1)
		throw BadInput("stem decomposition does not span the host paths");
	for (size_t i = 0; i + 1 < stem.blocks_u.size(); ++i)
		if (stem.blocks_u[i + 1].first != stem.blocks_u[i].second + 1)
			throw BadInput("stem decomposition blocks are not consecutive");
	for (size_t i = 0; i + 1 < static_cast<size_t>(ell); ++i) {
		const auto [lo, hi] = stem.leaf_runs[i];
		const int fi = stem.f[i];
		if (fi != std::max(0, hi - lo + 1)) throw BadInput("stem leaf runs disagree with leaf counts");
	}

	PartitionScaffold sc = build_scaffold(su, sv, ell, n, m, oracle);
	const bool swapped = sc.color == Color::Blue;
	const Coloring work = swapped ? swap_colors(oracle) : oracle;

	auto finish = [&](Witness w) {
		w = unswap(std::move(w), swapped);
		certify(w, pts, oracle);
		return w;
	};

	// A blue biclique between the campuses is a wellsplit one: its sides
	// inherit mutual avoidance from the campuses.
	auto across_escape = [&](const std::vector<int>& path_side,
	                         const std::vector<int>& stem_side) {
		std::vector<Point> ap, bp;
		ap.reserve(path_side.size());
		bp.reserve(stem_side.size());
		for (int v : path_side) ap.push_back(pts[static_cast<size_t>(v)]);
		for (int v : stem_side) bp.push_back(pts[static_cast<size_t>(v)]);
		AvoidingPair sub = mutual_orders(ap, bp);
		sub.src_a = path_side;
		sub.src_b = stem_side;
		return finish(pw2_from_wellsplit(sub, host, Color::Blue, pts, work));
	};

	auto refined = refine_scaffold(sc, stem.f, n, m, oracle);
	if (const auto* cb = std::get_if<CrossBiclique>(&refined))
		return across_escape(cb->path_side, cb->stem_side);
	RefinedScaffold rs = std::move(std::get<RefinedScaffold>(refined));

	// stem walk under the leaf-priced recoloring
	auto table = leaf_priced_table(rs, sc, stem.f, n, m, work);
	const Coloring priced = leaf_priced_oracle(table, work);
	auto sweep = longpath_or_biclique(rs.stem_hosts, Color::Red, priced);
	if (const auto* bb = std::get_if<BlockBiclique>(&sweep))
		return finish(separable_from_stem_break(*bb, rs, sc, stem.f, n, m, work));
	const std::vector<int> phiv = std::get<BlockPath>(sweep).verts;

	// Expand each first-path block: common red neighbours of its two stem
	// endpoints in the facing path run (a single stem vertex plays both
	// roles when the second path is one vertex long), filtered so that
	// every survivor can also host its leaves, then sliced into one run
	// per first-path position.
	const long long wide = sz({3, n, m});
	const long long pair_floor = sz({n, n});
	const long long keep_goal = sz({2, n, m});
	const long long star_floor = sz({2, m});
	const long long end_floor = sz({3, m, n, n});
	std::vector<std::vector<int>> parts;
	parts.reserve(static_cast<size_t>(nu));
	std::vector<std::vector<int>> single_pool(static_cast<size_t>(ell - 1));
	std::vector<std::vector<std::vector<int>>> star_runs(static_cast<size_t>(ell - 1));
	for (size_t i = 0; i < nblocks; ++i) {
		const int f = i < stem.f.size() ? stem.f[i] : 0;
		const int a = phiv[i];
		const int b = phiv[std::min(i + 1, phiv.size() - 1)];
		std::vector<int> broad = collect_common(a, b, sc.path_pool[i], Color::Red, wide, work);
		if (static_cast<long long>(broad.size()) < wide)
			throw InternalContradiction(
			    "consecutive stem hosts lost their common grounded neighbours");
		std::vector<int> keep;
		if (f == 0) {
			keep = std::move(broad);
		} else if (f == 1) {
			std::vector<int> pool =
			    collect_common(a, b, sc.leaf_pool[i], Color::Red, pair_floor, work);
			if (static_cast<long long>(pool.size()) < pair_floor)
				throw InternalContradiction("a recolored-red stem edge lost its leaf foothold");
			std::vector<int> dropped;
			for (int h : broad) {
				if (count_in(h, pool, Color::Red, 1, work) >= 1)
					keep.push_back(h);
				else
					dropped.push_back(h);
			}
			if (static_cast<long long>(dropped.size()) > pair_floor) {
				dropped.resize(static_cast<size_t>(pair_floor));
				return across_escape(dropped, pool);
			}
			single_pool[i] = std::move(pool);
		} else {
			auto& runs = star_runs[i];
			runs = rs.leaf_splits[i];
			runs.front() = collect_nbrs(a, runs.front(), Color::Red, work);
			runs.back() = collect_nbrs(b, runs.back(), Color::Red, work);
			if (static_cast<long long>(runs.front().size()) < end_floor ||
			    static_cast<long long>(runs.back().size()) < end_floor)
				throw InternalContradiction("a recolored-red stem edge lost an end run");
			std::vector<int> bad;
			std::vector<int> bad_label;
			for (int h : broad) {
				int fail = -1;
				for (size_t j = 0; j < runs.size(); ++j) {
					if (count_in(h, runs[j], Color::Red, star_floor, work) < star_floor) {
						fail = static_cast<int>(j);
						break;
					}
				}
				if (fail < 0) {
					keep.push_back(h);
					if (static_cast<long long>(keep.size()) == keep_goal) break;
				} else {
					bad.push_back(h);
					bad_label.push_back(fail);
				}
			}
			if (static_cast<long long>(keep.size()) < keep_goal) {
				std::vector<long long> bucket(runs.size(), 0);
				for (int lab : bad_label) ++bucket[static_cast<size_t>(lab)];
				size_t heavy = 0;
				for (size_t j = 1; j < bucket.size(); ++j)
					if (bucket[j] > bucket[heavy]) heavy = j;
				if (bucket[heavy] < pair_floor)
					shortfall("leaf star filter", bucket[heavy], pair_floor,
					          static_cast<long long>(bad.size()) /
					              static_cast<long long>(runs.size()),
					          "too few survivors can host every leaf, and no single leaf run "
					          "rejects an escape block's worth");
				std::vector<int> W;
				for (size_t t = 0; t < bad.size(); ++t) {
					if (bad_label[t] != static_cast<int>(heavy)) continue;
					W.push_back(bad[t]);
					if (static_cast<long long>(W.size()) == pair_floor) break;
				}
				std::vector<std::vector<int>> ts;
				ts.reserve(W.size());
				for (int w : W) ts.push_back(collect_nbrs(w, runs[heavy], Color::Red, work));
				std::vector<int> C = survivors(runs[heavy], ts, int_cap(star_floor - 1));
				if (static_cast<long long>(C.size()) < pair_floor)
					shortfall("leaf star filter", static_cast<long long>(C.size()), pair_floor,
					          static_cast<long long>(runs[heavy].size()) -
					              pair_floor * (star_floor - 1),
					          "the rejected run lost too much to its rejectors");
				C.resize(static_cast<size_t>(pair_floor));
				return across_escape(W, C);
			}
		}

		const auto [blo, bhi] = stem.blocks_u[i];
		const long long cnt = bhi - blo + 1;
		const long long run = static_cast<long long>(keep.size()) / cnt;
		if (run < 1)
			throw SizeTooSmall("stem expansion",
			                   "block " + std::to_string(i) + " spreads " +
			                       plural(keep.size(), "vertex", "vertices") + " over " +
			                       plural(static_cast<size_t>(cnt), "first-path position") + "");
		for (long long t = 0; t < cnt; ++t)
			parts.emplace_back(keep.begin() + t * run, keep.begin() + (t + 1) * run);
	}
	if (static_cast<int>(parts.size()) != nu)
		throw InternalContradiction("expansion runs disagree with the first path");

	auto expand = longpath_or_biclique(parts, Color::Red, work);
	if (const auto* bb = std::get_if<BlockBiclique>(&expand)) {
		std::vector<int> L = bb->lower, R = bb->upper;
		if (static_cast<long long>(L.size()) < m || static_cast<long long>(R.size()) < m)
			throw SizeTooSmall("path break",
			                   "the break left parts of " + plural(L.size(), "vertex", "vertices") +
			                       " and " + plural(R.size(), "vertex", "vertices") + ", under m=" +
			                       std::to_string(m));
		L.resize(static_cast<size_t>(m));
		R.resize(static_cast<size_t>(m));
		return finish(make_biclique(Color::Blue, std::move(L), std::move(R), CertKind::Separable));
	}
	const std::vector<int> r = std::get<BlockPath>(expand).verts;

	// hang the leaves off their star centers
	std::vector<int> vplace(static_cast<size_t>(nv), -1);
	for (int i = 0; i < ell; ++i)
		vplace[static_cast<size_t>(stem.stem_v[static_cast<size_t>(i)])] =
		    phiv[static_cast<size_t>(i)];
	for (int i = 0; i + 1 < ell; ++i) {
		const int f = stem.f[static_cast<size_t>(i)];
		if (f == 0) continue;
		const int center = r[static_cast<size_t>(stem.stem_u[static_cast<size_t>(i)])];
		const int lo = stem.leaf_runs[static_cast<size_t>(i)].first;
		if (f == 1) {
			const auto& pool = single_pool[static_cast<size_t>(i)];
			int leaf = -1;
			for (int x : pool) {
				if (work.edge(center, x) == Color::Red) {
					leaf = x;
					break;
				}
			}
			if (leaf < 0)
				throw InternalContradiction("an expanded star center lost its leaf foothold");
			vplace[static_cast<size_t>(lo)] = leaf;
			continue;
		}
		const auto& runs = star_runs[static_cast<size_t>(i)];
		std::vector<std::vector<int>> seats;
		seats.reserve(runs.size());
		for (const auto& run : runs) {
			std::vector<int> seat;
			seat.reserve(static_cast<size_t>(star_floor));
			for (int x : run) {
				if (work.edge(center, x) != Color::Red) continue;
				seat.push_back(x);
				if (static_cast<long long>(seat.size()) == star_floor) break;
			}
			if (static_cast<long long>(seat.size()) < star_floor)
				throw InternalContradiction("an expanded star center lost a leaf run");
			seats.push_back(std::move(seat));
		}
		auto walk = longpath_or_biclique(seats, Color::Red, work);
		if (const auto* bb = std::get_if<BlockBiclique>(&walk)) {
			std::vector<int> L = bb->lower, R = bb->upper;
			if (static_cast<long long>(L.size()) < m || static_cast<long long>(R.size()) < m)
				throw SizeTooSmall("leaf break",
				                   "the break left parts of " +
				                       plural(L.size(), "vertex", "vertices") + " and " +
				                       plural(R.size(), "vertex", "vertices") + ", under m=" +
				                       std::to_string(m));
			L.resize(static_cast<size_t>(m));
			R.resize(static_cast<size_t>(m));
			return finish(
			    make_biclique(Color::Blue, std::move(L), std::move(R), CertKind::Separable));
		}
		const std::vector<int>& q = std::get<BlockPath>(walk).verts;
		for (int j = 0; j < f; ++j)
			vplace[static_cast<size_t>(lo + j)] = q[static_cast<size_t>(j)];
	}

	std::vector<int> map(static_cast<size_t>(n), -1);
	for (int t = 0; t < nu; ++t)
		map[static_cast<size_t>(host.path_u[static_cast<size_t>(t)])] = r[static_cast<size_t>(t)];
	for (int j = 0; j < nv; ++j) {
		if (vplace[static_cast<size_t>(j)] < 0)
			throw InternalContradiction("a second-path position was never placed");
		map[static_cast<size_t>(host.path_v[static_cast<size_t>(j)])] =
		    vplace[static_cast<size_t>(j)];
	}
	return finish(make_embedding(Color::Red, host.to_graph(), std::move(map)));
}

// ---------------------------------------------------------------------------
// full pipelines

Witness pw2_extract_convex(const ConvexSeq& c, const PW2Graph& host, const Coloring& oracle,
                           int m) {
	StemDecomposition stem = validated_stem(host);
	const int n = stem.host.order();
	if (m == 0) m = int_cap(sz({n, n}));
	if (m < 1) throw BadInput("the block size m must be positive");
	if (oracle.n != c.size())
		throw BadInput("oracle is on " + plural(static_cast<size_t>(oracle.n), "vertex", "vertices") +
		               " but the polygon has " + std::to_string(c.size()));
	if (n <= 3) {
		std::vector<int> cands;
		for (int t = 0; t < c.size() && t < 6; ++t) cands.push_back(t);
		return trivial_small(stem.host, cands, c.pts, oracle);
	}
	const int split = c.size() / 2;
	if (split < 2 || c.size() - split < 2)
		throw SizeTooSmall("halving split", "a polygon of " + std::to_string(c.size()) +
		                                        " cannot split into two arcs of 2+");
	AvoidingPair pair = from_convex_split(c, split);
	Witness w = pw2_core(pair, stem, m, c.pts, oracle);
	if (w.kind == Witness::Kind::Embedding) return w;
	// Inside a convex polygon a separable biclique is a wellsplit one: its
	// parts are disjoint arcs, so replay it across them.
	return pw2_from_wellsplit(c, w.left, w.right, stem.host, w.color, oracle);
}

Witness pw2_extract_general(const AvoidingPair& pair, const PW2Graph& host,
                            const std::vector<Point>& pts, const Coloring& oracle, int m) {
	StemDecomposition stem = validated_stem(host);
	const int n = stem.host.order();
	if (m == 0) m = int_cap(sz({6, n, n, n, n}));
	if (m < 1) throw BadInput("the block size m must be positive");
	Witness w = pw2_core(pair, stem, m, pts, oracle);
	if (w.kind == Witness::Kind::Embedding) return w;

	// Re-carve the separable biclique into a fresh avoiding pair and replay
	// the extraction across it.
	const long long ms =
	    static_cast<long long>(std::min(w.left.size(), w.right.size()));
	long long cap = 1;
	while (6 * (cap + 1) * (cap + 1) <= ms) ++cap;
	const long long want = sz({n, n});
	const int k = static_cast<int>(std::max(2LL, std::min(want, cap)));
	std::vector<Point> lpts, rpts;
	lpts.reserve(w.left.size());
	rpts.reserve(w.right.size());
	for (int v : w.left) lpts.push_back(pts[static_cast<size_t>(v)]);
	for (int v : w.right) rpts.push_back(pts[static_cast<size_t>(v)]);
	AvoidingPair sub = separable_to_avoiding(lpts, rpts, k);
	for (int& s : sub.src_a) s = w.left[static_cast<size_t>(s)];
	for (int& s : sub.src_b) s = w.right[static_cast<size_t>(s)];
	return pw2_from_wellsplit(sub, stem.host, w.color, pts, oracle);
}

Witness pw2_extract_general(const std::vector<Point>& pts, const PW2Graph& host,
                            const Coloring& oracle, int m) {
	StemDecomposition stem = validated_stem(host);
	const int n = stem.host.order();
	if (m == 0) m = int_cap(sz({6, n, n, n, n}));
	if (m < 1) throw BadInput("the block size m must be positive");
	if (oracle.n != static_cast<int>(pts.size()))
		throw BadInput("oracle is on " + plural(static_cast<size_t>(oracle.n), "vertex", "vertices") +
		               " but there are " + plural(pts.size(), "point"));
	if (n <= 3) {
		std::vector<int> cands;
		for (size_t t = 0; t < pts.size() && t < 6; ++t) cands.push_back(static_cast<int>(t));
		return trivial_small(stem.host, cands, pts, oracle);
	}
	if (pts.size() < 2)
		throw SizeTooSmall("halving split",
		                   "need at least 2 points, have " + std::to_string(pts.size()));

	// Split along the lexicographic order; general position leaves at most
	// two points per x, so a slightly tilted vertical line realizes the cut.
	std::vector<int> idx(pts.size());
	std::iota(idx.begin(), idx.end(), 0);
	std::sort(idx.begin(), idx.end(), [&](int i, int j) {
		const Point &p = pts[static_cast<size_t>(i)], &q = pts[static_cast<size_t>(j)];
		return p.x != q.x ? p.x < q.x : p.y < q.y;
	});
	const size_t half = pts.size() / 2;
	std::vector<Point> lpts, rpts;
	lpts.reserve(half);
	rpts.reserve(pts.size() - half);
	for (size_t t = 0; t < pts.size(); ++t)
		(t < half ? lpts : rpts).push_back(pts[static_cast<size_t>(idx[t])]);

	long long want = sz({10, m, m, n, n, n});
	want = std::min(want, 1LL << 40);  // far beyond any realizable carve anyway
	const long long ms = static_cast<long long>(std::min(lpts.size(), rpts.size()));
	long long cap = 1;
	while (6 * (cap + 1) * (cap + 1) <= ms) ++cap;
	const int k = static_cast<int>(std::max(2LL, std::min(want, cap)));

	AvoidingPair pair = mutually_avoiding_subsets(lpts, rpts, k);
	for (int& s : pair.src_a) s = idx[static_cast<size_t>(s)];
	for (int& s : pair.src_b) s = idx[half + static_cast<size_t>(s)];
	return pw2_extract_general(pair, host, pts, oracle, m);
}

// ---------------------------------------------------------------------------
// witness surgery

Witness restrict_witness(const Witness& w, const Graph& sub) {
	if (w.kind != Witness::Kind::Embedding)
		throw BadInput("only embedding witnesses restrict to subgraphs");
	if (sub.n != w.pattern.n)
		throw BadInput("the subgraph has " + plural(static_cast<size_t>(sub.n), "vertex", "vertices") +
		               " but the pattern has " + std::to_string(w.pattern.n));
	std::set<std::pair<int, int>> have;
	for (auto [u, v] : w.pattern.edges) have.insert(std::minmax(u, v));
	for (auto [u, v] : sub.edges) {
		if (u < 0 || v < 0 || u >= sub.n || v >= sub.n)
			throw BadInput("subgraph edge endpoint out of range");
		if (u == v) throw BadInput("subgraph has a self-loop");
		if (!have.count(std::minmax(u, v)))
			throw BadInput("subgraph edge (" + std::to_string(u) + "," + std::to_string(v) +
			               ") is not in the pattern");
	}
	Witness out = w;
	out.pattern = sub;
	return out;
}

}  // namespace gr
