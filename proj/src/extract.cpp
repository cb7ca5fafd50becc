#include "gr/extract.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>

#include "gr/dilworth.hpp"

namespace gr {

namespace {

std::string plural(size_t k, const char* one, const char* many = nullptr) {
	if (k == 1) return "1 " + std::string(one);
	return std::to_string(k) + " " + (many ? many : std::string(one) + "s");
}

}  // namespace

// ---------------------------------------------------------------------------
// block sweep

std::variant<BlockPath, BlockBiclique> longpath_or_biclique(
    const std::vector<std::vector<int>>& blocks, Color path_color, const Coloring& oracle) {
	if (blocks.empty()) throw BadInput("longpath_or_biclique: no blocks");
	for (size_t j = 0; j < blocks.size(); ++j)
		if (blocks[j].empty())
			throw BadInput("longpath_or_biclique: block " + std::to_string(j) + " is empty");

	const size_t m = blocks.size();
	// good[j][t]: blocks[j][t] ends a path-colored path with one vertex per
	// block so far; pred[j][t] remembers the first good predecessor.
	std::vector<std::vector<char>> good(m);
	std::vector<std::vector<int>> pred(m);
	good[0].assign(blocks[0].size(), 1);
	pred[0].assign(blocks[0].size(), -1);
	for (size_t j = 1; j < m; ++j) {
		good[j].assign(blocks[j].size(), 0);
		pred[j].assign(blocks[j].size(), -1);
		for (size_t t = 0; t < blocks[j].size(); ++t) {
			for (size_t s = 0; s < blocks[j - 1].size(); ++s) {
				if (!good[j - 1][s]) continue;
				if (oracle.edge(blocks[j - 1][s], blocks[j][t]) != path_color) continue;
				good[j][t] = 1;
				pred[j][t] = static_cast<int>(s);
				break;
			}
		}
	}

	for (size_t t = 0; t < blocks[m - 1].size(); ++t) {
		if (!good[m - 1][t]) continue;
		BlockPath path;
		path.verts.assign(m, -1);
		int at = static_cast<int>(t);
		for (size_t j = m; j-- > 0;) {
			path.verts[j] = blocks[j][static_cast<size_t>(at)];
			at = pred[j][static_cast<size_t>(at)];
		}
		return path;
	}

	// No vertex of the last block is good, so the good population dies
	// somewhere: at the largest index still at least half good, every good
	// vertex misses every bad vertex of the next block by an off-color edge
	// (a path-colored one would have marked it good).
	size_t i = 0;
	for (size_t j = 0; j < m; ++j) {
		size_t cnt = 0;
		for (char gd : good[j]) cnt += static_cast<size_t>(gd);
		if (2 * cnt >= blocks[j].size()) i = j;
	}
	BlockBiclique bb;
	bb.block = static_cast<int>(i);
	for (size_t t = 0; t < blocks[i].size(); ++t)
		if (good[i][t]) bb.lower.push_back(blocks[i][t]);
	for (size_t t = 0; t < blocks[i + 1].size(); ++t)
		if (!good[i + 1][t]) bb.upper.push_back(blocks[i + 1][t]);
	if (bb.lower.empty() || bb.upper.empty())
		throw InternalContradiction("longpath_or_biclique: empty biclique side");
	return bb;
}

std::vector<int> survivors(const std::vector<int>& S, const std::vector<std::vector<int>>& Ts,
                           int cap) {
	if (cap < 0) throw BadInput("survivors: negative overlap budget");
	std::unordered_set<int> in_s(S.begin(), S.end());
	std::unordered_set<int> eaten;
	for (size_t k = 0; k < Ts.size(); ++k) {
		size_t hit = 0;
		for (int v : Ts[k])
			if (in_s.count(v)) ++hit;
		if (hit > static_cast<size_t>(cap))
			throw BadInput("survivors: set " + std::to_string(k) + " overlaps S in " +
			               plural(hit, "element") + ", over the budget of " + std::to_string(cap));
		eaten.insert(Ts[k].begin(), Ts[k].end());
	}
	std::vector<int> out;
	out.reserve(S.size());
	for (int v : S)
		if (!eaten.count(v)) out.push_back(v);
	return out;
}

// ---------------------------------------------------------------------------
// outerplanar embedding

namespace {

// Chords of a circle, given by circular positions: they cross iff the
// endpoint pairs strictly interleave.  Sharing a position never crosses.
bool chords_cross(int a, int b, int c, int d) {
	if (c == a || c == b || d == a || d == b) return false;
	if (a > b) std::swap(a, b);
	const bool cin = a < c && c < b;
	const bool din = a < d && d < b;
	return cin != din;
}

// Searches for a circular vertex order realizing every edge without chord
// crossings -- which is exactly outerplanarity.  Vertex 0 is pinned to
// position 0 (rotations change nothing), candidates are tried in id order,
// so the first order found is deterministic.
struct OrderSearch {
	int n = 0;
	std::vector<std::vector<int>> adj;
	std::vector<int> pos;                       // vertex -> position, -1 unplaced
	std::vector<int> at;                        // position -> vertex
	std::vector<std::pair<int, int>> realized;  // edges among placed, as positions

	bool place(int p) {
		if (p == n) return true;
		for (int v = 1; v < n; ++v) {
			if (pos[static_cast<size_t>(v)] >= 0) continue;
			size_t added = 0;
			bool ok = true;
			for (int u : adj[static_cast<size_t>(v)]) {
				const int q = pos[static_cast<size_t>(u)];
				if (q < 0) continue;
				for (const auto& [a, b] : realized)
					if (chords_cross(q, p, a, b)) {
						ok = false;
						break;
					}
				if (!ok) break;
				realized.emplace_back(q, p);
				++added;
			}
			if (ok) {
				pos[static_cast<size_t>(v)] = p;
				at[static_cast<size_t>(p)] = v;
				if (place(p + 1)) return true;
				pos[static_cast<size_t>(v)] = -1;
			}
			realized.resize(realized.size() - added);
		}
		return false;
	}
};

// Deduped edge set with endpoint checks; self-loops and out-of-range ids are
// caller bugs, not geometry.
std::set<std::pair<int, int>> edge_set_of(const Graph& g) {
	std::set<std::pair<int, int>> es;
	for (auto [u, v] : g.edges) {
		if (u < 0 || v < 0 || u >= g.n || v >= g.n)
			throw BadInput("graph edge endpoint out of range");
		if (u == v) throw BadInput("graph has a self-loop");
		es.insert(std::minmax(u, v));
	}
	return es;
}

struct CompletedOrder {
	std::vector<int> at;                        // position -> vertex
	std::vector<std::pair<int, int>> pos_edges;  // completed edges, as positions
};

CompletedOrder complete_on_order(int n, const std::vector<int>& at,
                                 const std::set<std::pair<int, int>>& es) {
	CompletedOrder co;
	co.at = at;
	if (n == 1) return co;
	if (n == 2) {
		co.pos_edges.emplace_back(0, 1);
		return co;
	}
	std::vector<int> pos(static_cast<size_t>(n));
	for (int p = 0; p < n; ++p) pos[static_cast<size_t>(at[static_cast<size_t>(p)])] = p;
	// Hull edges can't cross a chord (adjacent positions leave no room to
	// interleave), so they all go in unconditionally.
	for (int p = 0; p < n; ++p) co.pos_edges.emplace_back(std::min(p, (p + 1) % n), std::max(p, (p + 1) % n));
	std::vector<std::pair<int, int>> chords;
	for (auto [u, v] : es) {
		auto pr = std::minmax(pos[static_cast<size_t>(u)], pos[static_cast<size_t>(v)]);
		if (pr.second - pr.first >= 2 && !(pr.first == 0 && pr.second == n - 1))
			chords.push_back(pr);
	}
	// Greedy filling: a maximal pairwise-noncrossing chord set of a convex
	// polygon is a triangulation, so sweeping all pairs once suffices.
	for (int a = 0; a + 2 < n; ++a) {
		for (int b = a + 2; b < n; ++b) {
			if (a == 0 && b == n - 1) continue;
			bool ok = true;
			for (const auto& [c, d] : chords) {
				if (c == a && d == b) {
					ok = false;  // already present
					break;
				}
				if (chords_cross(a, b, c, d)) {
					ok = false;
					break;
				}
			}
			if (ok) chords.emplace_back(a, b);
		}
	}
	for (const auto& ch : chords) co.pos_edges.push_back(ch);
	if (co.pos_edges.size() != static_cast<size_t>(2 * n - 3))
		throw InternalContradiction("outerplanar completion produced " +
		                            plural(co.pos_edges.size(), "edge") + " instead of " +
		                            std::to_string(2 * n - 3));
	return co;
}

CompletedOrder order_and_complete(const Graph& g) {
	if (g.n <= 0) throw BadInput("empty graph");
	auto es = edge_set_of(g);
	if (g.n >= 3 && es.size() > static_cast<size_t>(2 * g.n - 3))
		throw NotOuterplanar("too many edges: " + plural(es.size(), "edge") + " on " +
		                     plural(static_cast<size_t>(g.n), "vertex", "vertices") + " (max " +
		                     std::to_string(2 * g.n - 3) + ")");

	OrderSearch srch;
	srch.n = g.n;
	srch.adj.assign(static_cast<size_t>(g.n), {});
	for (auto [u, v] : es) {
		srch.adj[static_cast<size_t>(u)].push_back(v);
		srch.adj[static_cast<size_t>(v)].push_back(u);
	}
	srch.pos.assign(static_cast<size_t>(g.n), -1);
	srch.at.assign(static_cast<size_t>(g.n), -1);
	srch.pos[0] = 0;
	srch.at[0] = 0;
	if (!srch.place(1))
		throw NotOuterplanar("no circular order draws every edge without crossings");
	return complete_on_order(g.n, srch.at, es);
}

}  // namespace

Graph complete_outerplanar(const Graph& g) {
	CompletedOrder co = order_and_complete(g);
	Graph h;
	h.n = g.n;
	for (auto [p, q] : co.pos_edges)
		h.edges.push_back(std::minmax(co.at[static_cast<size_t>(p)], co.at[static_cast<size_t>(q)]));
	std::sort(h.edges.begin(), h.edges.end());
	return h;
}

std::vector<int> embed_outerplanar(const Graph& g, const std::vector<Point>& pts) {
	if (pts.size() < static_cast<size_t>(g.n))
		throw BadInput("embed_outerplanar: " + plural(pts.size(), "point") + " for " +
		               plural(static_cast<size_t>(g.n), "vertex", "vertices"));
	CompletedOrder co = order_and_complete(g);
	const int n = g.n;

	// Edges of the completion grouped by their later placement step.
	std::vector<std::vector<int>> back(static_cast<size_t>(n));
	for (auto [p, q] : co.pos_edges) back[static_cast<size_t>(std::max(p, q))].push_back(std::min(p, q));

	std::vector<int> spot(static_cast<size_t>(n), -1);  // position -> point index
	std::vector<char> used(pts.size(), 0);
	std::vector<std::pair<int, int>> segs;  // realized edges, as positions

	// Places the polygon cycle point by point, keeping every completed edge
	// crossing-free.  Candidates in index order: the first embedding wins.
	auto put = [&](auto&& self, int p) -> bool {
		if (p == n) return true;
		for (size_t cand = 0; cand < pts.size(); ++cand) {
			if (used[cand]) continue;
			bool ok = true;
			for (int q : back[static_cast<size_t>(p)]) {
				const Point& a = pts[static_cast<size_t>(spot[static_cast<size_t>(q)])];
				const Point& b = pts[cand];
				for (const auto& [c, d] : segs) {
					if (segments_cross(a, b, pts[static_cast<size_t>(spot[static_cast<size_t>(c)])],
					                   pts[static_cast<size_t>(spot[static_cast<size_t>(d)])])) {
						ok = false;
						break;
					}
				}
				if (!ok) break;
			}
			if (!ok) continue;
			spot[static_cast<size_t>(p)] = static_cast<int>(cand);
			used[cand] = 1;
			for (int q : back[static_cast<size_t>(p)]) segs.emplace_back(q, p);
			if (self(self, p + 1)) return true;
			segs.resize(segs.size() - back[static_cast<size_t>(p)].size());
			used[cand] = 0;
			spot[static_cast<size_t>(p)] = -1;
		}
		return false;
	};
	if (!put(put, 0))
		throw InternalContradiction(
		    "no non-crossing placement of an outerplanar graph; points not in general position?");

	std::vector<int> map(static_cast<size_t>(n));
	for (int p = 0; p < n; ++p) map[static_cast<size_t>(co.at[static_cast<size_t>(p)])] = spot[static_cast<size_t>(p)];
	return map;
}

// ---------------------------------------------------------------------------
// biclique -> ladder

namespace {

// 2n pairwise off-colored vertices carry the ladder as a drawn pattern:
// the ladder is outerplanar, so it embeds without crossings on the
// antichain's points, whatever their shape.
Witness clique_ladder(const std::vector<int>& verts, int n, Color clique_color,
                      const std::vector<Point>& pts, const Coloring& oracle) {
	Graph pat = make_ladder(n).to_graph();
	std::vector<Point> local;
	local.reserve(verts.size());
	for (int id : verts) local.push_back(pts[static_cast<size_t>(id)]);
	std::vector<int> emb = embed_outerplanar(pat, local);
	std::vector<int> map(static_cast<size_t>(pat.n));
	for (int t = 0; t < pat.n; ++t)
		map[static_cast<size_t>(t)] = verts[static_cast<size_t>(emb[static_cast<size_t>(t)])];
	Witness w = make_embedding(clique_color, std::move(pat), std::move(map));
	certify(w, pts, oracle);
	return w;
}

// The common core: two parts of a monochromatic biclique, each listed in
// its geometric order.  Each part yields an increasing across-colored path
// of n vertices or 2n pairwise other-colored ones; two paths assemble the
// ladder directly (rungs matched in reverse when the parts are polygon
// arcs, aligned when they are the sides of an avoiding pair), one
// antichain hands the job to the drawn-pattern route.
Witness ladder_between(const std::vector<int>& p1, const std::vector<int>& p2, int n,
                       Color across, bool reverse_rungs, const std::vector<Point>& pts,
                       const Coloring& oracle) {
	if (n < 1) throw BadInput("ladder size must be positive");
	if (p1.empty() || p2.empty()) throw BadInput("a biclique part is empty");
	for (int u : p1)
		for (int v : p2)
			if (oracle.edge(u, v) != across)
				throw BadInput("the parts are not an all-" + std::string(color_name(across)) +
				               " biclique: edge (" + std::to_string(u) + "," + std::to_string(v) +
				               ") is " + color_name(other(across)));

	// An antichain from either part suffices; only the two-chains route
	// needs both parts to deliver.  So a failed first part is not fatal
	// until the second part also fails to produce an antichain.
	std::optional<ChainOrAntichain> r1;
	std::optional<SizeTooSmall> fail1;
	try {
		r1 = chain_or_antichain(p1, across, n, 2 * n, oracle);
	} catch (const SizeTooSmall& e) {
		fail1 = e;
	}
	if (r1)
		if (const auto* anti = std::get_if<Antichain>(&*r1))
			return clique_ladder(anti->verts, n, other(across), pts, oracle);
	ChainOrAntichain r2 = chain_or_antichain(p2, across, n, 2 * n, oracle);
	if (const auto* anti = std::get_if<Antichain>(&r2))
		return clique_ladder(anti->verts, n, other(across), pts, oracle);
	if (fail1) throw *fail1;

	const std::vector<int>& c1 = std::get<Chain>(*r1).verts;
	const std::vector<int>& c2 = std::get<Chain>(r2).verts;
	Graph pat = make_ladder(n).to_graph();
	std::vector<int> map(static_cast<size_t>(2 * n));
	for (int i = 0; i < n; ++i) {
		map[static_cast<size_t>(i)] = c1[static_cast<size_t>(i)];
		map[static_cast<size_t>(n + i)] = c2[static_cast<size_t>(reverse_rungs ? n - 1 - i : i)];
	}
	Witness w = make_embedding(across, std::move(pat), std::move(map));
	certify(w, pts, oracle);
	return w;
}

}  // namespace

Witness ladder_from_wellsplit(const ConvexSeq& c, const std::vector<int>& part1,
                              const std::vector<int>& part2, int n, Color across,
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
	std::vector<int> p1 = part1, p2 = part2;
	std::sort(p1.begin(), p1.end());
	std::sort(p2.begin(), p2.end());
	return ladder_between(p1, p2, n, across, /*reverse_rungs=*/true, c.pts, oracle);
}

Witness ladder_from_wellsplit(const AvoidingPair& pair, int n, Color across,
                              const std::vector<Point>& pts, const Coloring& oracle) {
	if (pair.src_a.size() != pair.a.size() || pair.src_b.size() != pair.b.size())
		throw BadInput("the pair carries no source indices into the point set");
	for (const auto* src : {&pair.src_a, &pair.src_b})
		for (int v : *src)
			if (v < 0 || static_cast<size_t>(v) >= pts.size())
				throw BadInput("pair source index " + std::to_string(v) + " outside the point set");
	std::vector<int> p1, p2;
	p1.reserve(pair.a.size());
	p2.reserve(pair.b.size());
	for (int t = 0; t < pair.size_a(); ++t)
		p1.push_back(pair.src_a[static_cast<size_t>(pair.order_a[static_cast<size_t>(t)])]);
	for (int t = 0; t < pair.size_b(); ++t)
		p2.push_back(pair.src_b[static_cast<size_t>(pair.order_b[static_cast<size_t>(t)])]);
	return ladder_between(p1, p2, n, across, /*reverse_rungs=*/false, pts, oracle);
}

Witness ladder_from_separable(const std::vector<int>& left, const std::vector<int>& right,
                              int n, Color across, const std::vector<Point>& pts,
                              const Coloring& oracle) {
	if (n < 1) throw BadInput("ladder size must be positive");
	if (left.empty() || right.empty()) throw BadInput("a biclique part is empty");
	for (const auto* part : {&left, &right})
		for (int v : *part)
			if (v < 0 || static_cast<size_t>(v) >= pts.size())
				throw BadInput("part index " + std::to_string(v) + " outside the point set");

	// Largest avoiding-pair size the sides can guarantee, never more than
	// the 2n^2 the chain/antichain split needs.  At the bound (24 n^4 per
	// side) this is exactly 2n^2.
	const long long ms = static_cast<long long>(std::min(left.size(), right.size()));
	long long cap = static_cast<long long>(std::sqrt(static_cast<double>(ms) / 6.0));
	while (6 * (cap + 1) * (cap + 1) <= ms) ++cap;
	while (cap > 1 && 6 * cap * cap > ms) --cap;
	const long long want = 2LL * n * n;
	// never below 2: a smaller pair could not even fill one block per side
	const int k = static_cast<int>(std::max(2LL, std::min(want, cap)));

	std::vector<Point> lpts, rpts;
	lpts.reserve(left.size());
	rpts.reserve(right.size());
	for (int v : left) lpts.push_back(pts[static_cast<size_t>(v)]);
	for (int v : right) rpts.push_back(pts[static_cast<size_t>(v)]);
	AvoidingPair sub = separable_to_avoiding(lpts, rpts, k);
	for (int& s : sub.src_a) s = left[static_cast<size_t>(s)];
	for (int& s : sub.src_b) s = right[static_cast<size_t>(s)];
	return ladder_from_wellsplit(sub, n, across, pts, oracle);
}

// ---------------------------------------------------------------------------
// full pipelines

namespace {

struct BlockPick {
	Coloring work;       // the oracle the pipeline runs against
	bool swapped = false;  // work == swap_colors(oracle); flip witness color at the end
	std::vector<int> chosen;             // indices of the n blocks used
	std::vector<std::vector<int>> reds;  // their red vertices, in block order
};

// Colors each vertex of A_i by its majority toward B_i and each block by its
// vertex majority, then picks n red blocks.  If red falls short, rerun
// against the swapped oracle: any block that was strictly blue-majority
// turns red there (ties stay red under both readings), so at least n+1
// blocks qualify.  The caller un-swaps the witness color afterwards.
BlockPick pick_red_blocks(const std::vector<std::vector<int>>& A,
                          const std::vector<std::vector<int>>& B, const Coloring& oracle,
                          int n) {
	auto harvest = [&](const Coloring& g, std::vector<int>& chosen,
	                   std::vector<std::vector<int>>& reds) {
		chosen.clear();
		reds.clear();
		for (size_t i = 0; i < A.size() && chosen.size() < static_cast<size_t>(n); ++i) {
			std::vector<int> red_here;
			for (int v : A[i])
				if (majority_color(v, B[i], g).first == Color::Red) red_here.push_back(v);
			if (2 * red_here.size() >= A[i].size()) {
				chosen.push_back(static_cast<int>(i));
				reds.push_back(std::move(red_here));
			}
		}
	};

	BlockPick pick;
	pick.work = oracle;
	harvest(pick.work, pick.chosen, pick.reds);
	if (pick.chosen.size() < static_cast<size_t>(n)) {
		pick.work = swap_colors(oracle);
		pick.swapped = true;
		harvest(pick.work, pick.chosen, pick.reds);
		if (pick.chosen.size() < static_cast<size_t>(n))
			throw InternalContradiction("fewer than n red-majority blocks under both colorings");
	}
	for (const auto& d : pick.reds)
		if (d.empty()) throw InternalContradiction("a red-majority block has no red vertices");
	return pick;
}

Witness unswap(Witness w, bool swapped) {
	if (swapped) w.color = other(w.color);
	return w;
}

// Chops the first 2n*size entries of `seq` into 2n consecutive blocks.
std::vector<std::vector<int>> chop(const std::vector<int>& seq, int n, int size,
                                   bool reverse_blocks, int offset = 0) {
	std::vector<std::vector<int>> blocks(static_cast<size_t>(2 * n));
	for (int i = 0; i < 2 * n; ++i) {
		const int slot = reverse_blocks ? 2 * n - 1 - i : i;
		const int base = offset + slot * size;
		blocks[static_cast<size_t>(i)].assign(seq.begin() + base, seq.begin() + base + size);
	}
	return blocks;
}

}  // namespace

Witness convex_ladder_extract(const ConvexSeq& c, int n, const Coloring& oracle) {
	if (n < 1) throw BadInput("ladder size must be positive");
	if (oracle.n != c.size())
		throw BadInput("oracle is on " + plural(static_cast<size_t>(oracle.n), "vertex", "vertices") +
		               " but the polygon has " + std::to_string(c.size()));
	const int half = c.size() / 2;
	const int s = half / (2 * n);
	if (s < 1)
		throw SizeTooSmall("block partition", "polygon of " + std::to_string(c.size()) +
		                                          " cannot fill 2n=" + std::to_string(2 * n) +
		                                          " blocks per half");

	std::vector<int> all(static_cast<size_t>(c.size()));
	std::iota(all.begin(), all.end(), 0);
	// First half carries the A-blocks left to right; the second half carries
	// the B-blocks right to left, so that block pairs (A_i, B_i) face each
	// other and rungs between them can close without crossing.
	auto A = chop(all, n, s, /*reverse_blocks=*/false);
	auto B = chop(all, n, s, /*reverse_blocks=*/true, half);

	BlockPick pick = pick_red_blocks(A, B, oracle, n);

	auto finish = [&](Witness w) {
		w = unswap(std::move(w), pick.swapped);
		certify(w, c.pts, oracle);
		return w;
	};

	auto pass1 = longpath_or_biclique(pick.reds, Color::Red, pick.work);
	if (const auto* bb = std::get_if<BlockBiclique>(&pass1))
		return finish(ladder_from_wellsplit(c, bb->lower, bb->upper, n, Color::Blue, pick.work));
	const std::vector<int> v = std::get<BlockPath>(pass1).verts;

	// Each path vertex is red toward its facing block, so at least half of
	// that block answers red; sweep those neighbourhoods the same way.
	std::vector<std::vector<int>> F(static_cast<size_t>(n));
	for (int i = 0; i < n; ++i) {
		F[static_cast<size_t>(i)] = colored_neighbours(
		    v[static_cast<size_t>(i)], B[static_cast<size_t>(pick.chosen[static_cast<size_t>(i)])],
		    pick.work, Color::Red);
		if (F[static_cast<size_t>(i)].empty())
			throw InternalContradiction("a red path vertex has no red facing neighbours");
	}
	auto pass2 = longpath_or_biclique(F, Color::Red, pick.work);
	if (const auto* bb = std::get_if<BlockBiclique>(&pass2))
		return finish(ladder_from_wellsplit(c, bb->lower, bb->upper, n, Color::Blue, pick.work));
	const std::vector<int> w = std::get<BlockPath>(pass2).verts;

	Graph pat = make_ladder(n).to_graph();
	std::vector<int> map(static_cast<size_t>(2 * n));
	for (int i = 0; i < n; ++i) {
		map[static_cast<size_t>(i)] = v[static_cast<size_t>(i)];
		map[static_cast<size_t>(n + i)] = w[static_cast<size_t>(i)];
	}
	return finish(make_embedding(Color::Red, std::move(pat), std::move(map)));
}

Witness general_ladder_extract(const AvoidingPair& pair, int n, const std::vector<Point>& pts,
                               const Coloring& oracle) {
	if (n < 1) throw BadInput("ladder size must be positive");
	if (oracle.n != static_cast<int>(pts.size()))
		throw BadInput("oracle is on " + plural(static_cast<size_t>(oracle.n), "vertex", "vertices") +
		               " but there are " + plural(pts.size(), "point"));
	if (pair.src_a.size() != pair.a.size() || pair.src_b.size() != pair.b.size())
		throw BadInput("the pair carries no source indices into the point set");

	// Both sides in mutual order, as global point indices.
	std::vector<int> su, sv;
	su.reserve(pair.a.size());
	sv.reserve(pair.b.size());
	for (int t = 0; t < pair.size_a(); ++t)
		su.push_back(pair.src_a[static_cast<size_t>(pair.order_a[static_cast<size_t>(t)])]);
	for (int t = 0; t < pair.size_b(); ++t)
		sv.push_back(pair.src_b[static_cast<size_t>(pair.order_b[static_cast<size_t>(t)])]);
	for (int v : su)
		if (v < 0 || static_cast<size_t>(v) >= pts.size())
			throw BadInput("pair source index " + std::to_string(v) + " outside the point set");
	for (int v : sv)
		if (v < 0 || static_cast<size_t>(v) >= pts.size())
			throw BadInput("pair source index " + std::to_string(v) + " outside the point set");

	const int su_s = static_cast<int>(su.size()) / (2 * n);
	const int sv_s = static_cast<int>(sv.size()) / (2 * n);
	if (su_s < 1 || sv_s < 1)
		throw SizeTooSmall("block partition",
		                   "pair sides of " + std::to_string(su.size()) + " and " +
		                       std::to_string(sv.size()) + " cannot fill 2n=" +
		                       std::to_string(2 * n) + " blocks each");
	// Unlike the convex split, both sides run left to right: rungs between
	// aligned mutual-order positions are the non-crossing pattern here.
	auto A = chop(su, n, su_s, /*reverse_blocks=*/false);
	auto B = chop(sv, n, sv_s, /*reverse_blocks=*/false);

	BlockPick pick = pick_red_blocks(A, B, oracle, n);

	auto finish = [&](Witness w) {
		w = unswap(std::move(w), pick.swapped);
		certify(w, pts, oracle);
		return w;
	};

	auto pass1 = longpath_or_biclique(pick.reds, Color::Red, pick.work);
	if (const auto* bb = std::get_if<BlockBiclique>(&pass1))
		return finish(ladder_from_separable(bb->lower, bb->upper, n, Color::Blue, pts, pick.work));
	const std::vector<int> v = std::get<BlockPath>(pass1).verts;

	std::vector<std::vector<int>> F(static_cast<size_t>(n));
	for (int i = 0; i < n; ++i) {
		F[static_cast<size_t>(i)] = colored_neighbours(
		    v[static_cast<size_t>(i)], B[static_cast<size_t>(pick.chosen[static_cast<size_t>(i)])],
		    pick.work, Color::Red);
		if (F[static_cast<size_t>(i)].empty())
			throw InternalContradiction("a red path vertex has no red facing neighbours");
	}
	auto pass2 = longpath_or_biclique(F, Color::Red, pick.work);
	if (const auto* bb = std::get_if<BlockBiclique>(&pass2))
		return finish(ladder_from_separable(bb->lower, bb->upper, n, Color::Blue, pts, pick.work));
	const std::vector<int> w = std::get<BlockPath>(pass2).verts;

	Graph pat = make_ladder(n).to_graph();
	std::vector<int> map(static_cast<size_t>(2 * n));
	for (int i = 0; i < n; ++i) {
		map[static_cast<size_t>(i)] = v[static_cast<size_t>(i)];
		map[static_cast<size_t>(n + i)] = w[static_cast<size_t>(i)];
	}
	return finish(make_embedding(Color::Red, std::move(pat), std::move(map)));
}

Witness general_ladder_extract(const std::vector<Point>& pts, int n, const Coloring& oracle,
                               int c1) {
	if (n < 1) throw BadInput("ladder size must be positive");
	if (c1 < 1) throw BadInput("the pair-size constant must be positive");
	if (oracle.n != static_cast<int>(pts.size()))
		throw BadInput("oracle is on " + plural(static_cast<size_t>(oracle.n), "vertex", "vertices") +
		               " but there are " + plural(pts.size(), "point"));
	if (pts.size() < 2)
		throw SizeTooSmall("halving split", "need at least 2 points, have " +
		                                        std::to_string(pts.size()));

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

	long long want = c1;
	for (int e = 0; e < 5; ++e) {
		want *= n;
		if (want > (1LL << 40)) break;  // far beyond any realizable k anyway
	}
	const long long ms = static_cast<long long>(std::min(lpts.size(), rpts.size()));
	long long cap = static_cast<long long>(std::sqrt(static_cast<double>(ms) / 6.0));
	while (6 * (cap + 1) * (cap + 1) <= ms) ++cap;
	while (cap > 1 && 6 * cap * cap > ms) --cap;
	const int k = static_cast<int>(std::max(2LL, std::min(want, cap)));

	AvoidingPair pair = mutually_avoiding_subsets(lpts, rpts, k);
	for (int& s : pair.src_a) s = idx[static_cast<size_t>(s)];
	for (int& s : pair.src_b) s = idx[half + static_cast<size_t>(s)];
	return general_ladder_extract(pair, n, pts, oracle);
}

}  // namespace gr
