#include "gr/pw2_graph.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <set>

#include "json.hpp"

#include "gr/errors.hpp"
#include "gr/rng.hpp"

namespace gr {

std::vector<std::pair<int, int>> PW2Graph::path_edges() const {
	std::vector<std::pair<int, int>> out;
	for (size_t i = 0; i + 1 < path_u.size(); ++i) out.emplace_back(path_u[i], path_u[i + 1]);
	for (size_t i = 0; i + 1 < path_v.size(); ++i) out.emplace_back(path_v[i], path_v[i + 1]);
	return out;
}

std::vector<std::pair<int, int>> PW2Graph::all_edges() const {
	auto out = path_edges();
	out.insert(out.end(), cross.begin(), cross.end());
	return out;
}

Graph PW2Graph::to_graph() const {
	Graph g;
	g.n = order();
	g.edges = all_edges();
	return g;
}

// ---------------------------------------------------------------------------

namespace {

// adjacency lists of a simple graph; malformed input is the caller's bug
std::vector<std::vector<int>> adjacency(const Graph& g, const std::string& who) {
	if (g.n < 0) throw BadInput(who + ": negative vertex count");
	std::vector<std::vector<int>> adj(static_cast<size_t>(g.n));
	std::set<std::pair<int, int>> seen;
	for (auto [a, b] : g.edges) {
		if (a < 0 || b < 0 || a >= g.n || b >= g.n)
			throw BadInput(who + ": edge endpoint out of range");
		if (a == b) throw BadInput(who + ": self-loop");
		auto key = std::minmax(a, b);
		if (!seen.insert(key).second) throw BadInput(who + ": duplicate edge");
		adj[static_cast<size_t>(a)].push_back(b);
		adj[static_cast<size_t>(b)].push_back(a);
	}
	return adj;
}

// Orders `part` along its induced subgraph when that subgraph is a single
// simple path covering the part; walks from the smallest-id endpoint.
std::optional<std::vector<int>> induced_path_order(const std::vector<int>& part,
                                                   const std::vector<std::vector<int>>& adj,
                                                   const std::vector<char>& mine) {
	if (part.size() == 1) return part;
	size_t inner_edges = 0;
	int start = -1;
	for (int v : part) {
		int deg = 0;
		for (int w : adj[static_cast<size_t>(v)])
			if (mine[static_cast<size_t>(w)]) ++deg;
		if (deg > 2) return std::nullopt;
		inner_edges += static_cast<size_t>(deg);
		if (deg <= 1 && (start < 0 || v < start)) start = v;
	}
	inner_edges /= 2;
	if (inner_edges + 1 != part.size() || start < 0) return std::nullopt;
	std::vector<int> order{start};
	int prev = -1, cur = start;
	while (order.size() < part.size()) {
		int next = -1;
		for (int w : adj[static_cast<size_t>(cur)])
			if (mine[static_cast<size_t>(w)] && w != prev) next = w;
		if (next < 0) return std::nullopt;  // ran out early: disconnected part
		order.push_back(next);
		prev = cur;
		cur = next;
	}
	return order;
}

// lex-sorted grid points have no (i<i', j>j') inversion iff j never drops
bool grid_monotone(std::vector<std::pair<int, int>>& pts) {
	std::sort(pts.begin(), pts.end());
	for (size_t k = 0; k + 1 < pts.size(); ++k)
		if (pts[k + 1].second < pts[k].second) return false;
	return true;
}

// Full monotone lattice walk through the given grid points plus the two
// corners.  Each gap is filled by repeating the previous step direction
// once and then alternating, which keeps the triangulation's backbone
// short on ladder-like inputs.
std::vector<std::pair<int, int>> complete_walk(std::vector<std::pair<int, int>> pts, int nu, int nv) {
	pts.emplace_back(0, 0);
	pts.emplace_back(nu - 1, nv - 1);
	std::sort(pts.begin(), pts.end());
	pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
	std::vector<std::pair<int, int>> walk{pts.front()};
	int last = 0;  // 0 steps right, 1 steps up; the first gap starts rightward
	for (size_t k = 0; k + 1 < pts.size(); ++k) {
		auto [a, b] = pts[k];
		auto [c, d] = pts[k + 1];
		int right = c - a, up = d - b;
		if (right < 0 || up < 0) throw InternalContradiction("complete_walk: points not monotone");
		int want = last;
		while (right + up > 0) {
			int step = (want == 0) ? (right > 0 ? 0 : 1) : (up > 0 ? 1 : 0);
			if (step == 0) {
				++a;
				--right;
			} else {
				++b;
				--up;
			}
			walk.emplace_back(a, b);
			last = step;
			want = 1 - step;
		}
	}
	return walk;
}

// Greedy alternating backbone plus the derived slicing of both paths.
StemDecomposition decompose(std::vector<int> pu, std::vector<int> pv,
                            const std::vector<std::pair<int, int>>& walk) {
	const int nu = static_cast<int>(pu.size()), nv = static_cast<int>(pv.size());
	std::vector<int> row_hi(static_cast<size_t>(nu), -1), col_hi(static_cast<size_t>(nv), -1);
	std::vector<int> row_lo(static_cast<size_t>(nu), nv), col_lo(static_cast<size_t>(nv), nu);
	for (auto [i, j] : walk) {
		row_hi[static_cast<size_t>(i)] = std::max(row_hi[static_cast<size_t>(i)], j);
		row_lo[static_cast<size_t>(i)] = std::min(row_lo[static_cast<size_t>(i)], j);
		col_hi[static_cast<size_t>(j)] = std::max(col_hi[static_cast<size_t>(j)], i);
		col_lo[static_cast<size_t>(j)] = std::min(col_lo[static_cast<size_t>(j)], i);
	}

	StemDecomposition d;
	d.stem_v.push_back(0);
	int vcur = 0;
	while (vcur != nv - 1) {
		int ucur = col_hi[static_cast<size_t>(vcur)];
		if (!d.stem_u.empty() && ucur <= d.stem_u.back())
			throw InternalContradiction("stem walk does not advance along path_u");
		d.stem_u.push_back(ucur);
		int vnext = row_hi[static_cast<size_t>(ucur)];
		if (vnext <= vcur) throw InternalContradiction("stem walk does not advance along path_v");
		d.stem_v.push_back(vnext);
		vcur = vnext;
	}

	const int ell = d.ell();
	if (ell == 1) {
		// single-rung degenerate graph: one block holds the whole of path_u
		d.blocks_u.emplace_back(0, nu - 1);
	} else {
		for (int i = 1; i <= ell - 1; ++i) {
			int lo = (i == 1) ? 0 : d.stem_u[static_cast<size_t>(i - 2)] + 1;
			int hi = (i == ell - 1) ? nu - 1 : d.stem_u[static_cast<size_t>(i - 1)];
			d.blocks_u.emplace_back(lo, hi);
		}
	}
	for (int i = 0; i + 1 < ell; ++i) {
		int lo = d.stem_v[static_cast<size_t>(i)] + 1;
		int hi = d.stem_v[static_cast<size_t>(i + 1)] - 1;
		d.leaf_runs.emplace_back(lo, hi);
		d.f.push_back(hi - lo + 1);
	}

	// the theorems this slicing rests on, re-checked on every call
	int covered = 0;
	for (auto [lo, hi] : d.blocks_u) covered += hi - lo + 1;
	int leaves = 0;
	for (int fi : d.f) leaves += fi;
	if (covered != nu || leaves + ell != nv)
		throw InternalContradiction("stem slicing does not partition the paths");
	if (2 * ell - 1 > nu + nv) throw InternalContradiction("stem is longer than the graph allows");
	std::set<int> ustem(d.stem_u.begin(), d.stem_u.end()), vstem(d.stem_v.begin(), d.stem_v.end());
	for (int p = 0; p < nu; ++p)
		if (!ustem.count(p) && row_hi[static_cast<size_t>(p)] != row_lo[static_cast<size_t>(p)])
			throw InternalContradiction("a leaf of path_u has more than one cross neighbour");
	for (int q = 0; q < nv; ++q)
		if (!vstem.count(q) && col_hi[static_cast<size_t>(q)] != col_lo[static_cast<size_t>(q)])
			throw InternalContradiction("a leaf of path_v has more than one cross neighbour");

	d.host.path_u = std::move(pu);
	d.host.path_v = std::move(pv);
	for (auto [i, j] : walk)
		d.host.cross.emplace_back(d.host.path_u[static_cast<size_t>(i)],
		                          d.host.path_v[static_cast<size_t>(j)]);
	size_t expect = 2 * d.host.path_u.size() + 2 * d.host.path_v.size() - 3;
	if (d.host.all_edges().size() != expect)
		throw InternalContradiction("host completion is not a triangulation");
	return d;
}

std::variant<StemDecomposition, Violation> validate_parts(const Graph& g,
                                                          const std::vector<int>& part_u,
                                                          const std::vector<int>& part_v) {
	auto adj = adjacency(g, "validate_pw2");
	if (part_u.empty() || part_v.empty()) return Violation{"a part is empty"};

	std::vector<int> count(static_cast<size_t>(g.n), 0);
	bool in_range = true;
	for (int v : part_u) {
		if (v < 0 || v >= g.n) in_range = false;
		else ++count[static_cast<size_t>(v)];
	}
	for (int v : part_v) {
		if (v < 0 || v >= g.n) in_range = false;
		else ++count[static_cast<size_t>(v)];
	}
	if (!in_range || *std::min_element(count.begin(), count.end()) != 1 ||
	    *std::max_element(count.begin(), count.end()) != 1)
		return Violation{"the parts do not partition the vertex set"};

	std::vector<char> in_u(static_cast<size_t>(g.n), 0);
	for (int v : part_u) in_u[static_cast<size_t>(v)] = 1;
	std::vector<char> in_v(static_cast<size_t>(g.n), 0);
	for (int v : part_v) in_v[static_cast<size_t>(v)] = 1;

	auto pu0 = induced_path_order(part_u, adj, in_u);
	auto pv0 = induced_path_order(part_v, adj, in_v);
	if (!pu0 || !pv0) return Violation{"the induced subgraph on a part is not a single path"};

	std::vector<std::pair<int, int>> cross;  // (u-id, v-id)
	for (auto [a, b] : g.edges) {
		if (in_u[static_cast<size_t>(a)] == in_u[static_cast<size_t>(b)]) continue;
		cross.emplace_back(in_u[static_cast<size_t>(a)] ? a : b, in_u[static_cast<size_t>(a)] ? b : a);
	}

	std::vector<int> upos(static_cast<size_t>(g.n), -1), vpos(static_cast<size_t>(g.n), -1);
	for (size_t i = 0; i < pu0->size(); ++i) upos[static_cast<size_t>((*pu0)[i])] = static_cast<int>(i);
	for (size_t j = 0; j < pv0->size(); ++j) vpos[static_cast<size_t>((*pv0)[j])] = static_cast<int>(j);

	// Normalization: the paths may be reversed and the roles of the parts
	// swapped.  The first orientation whose cross edges are grid-monotone
	// wins; with three or more vertices path_v must have room for a stem.
	for (int swap = 0; swap < 2; ++swap) {
		const int nu = static_cast<int>(swap ? pv0->size() : pu0->size());
		const int nv = static_cast<int>(swap ? pu0->size() : pv0->size());
		if (g.n >= 3 && nv < 2) continue;
		for (int ru = 0; ru < 2; ++ru)
			for (int rv = 0; rv < 2; ++rv) {
				std::vector<std::pair<int, int>> pts;
				for (auto [a, b] : cross) {
					int i = swap ? vpos[static_cast<size_t>(b)] : upos[static_cast<size_t>(a)];
					int j = swap ? upos[static_cast<size_t>(a)] : vpos[static_cast<size_t>(b)];
					pts.emplace_back(ru ? nu - 1 - i : i, rv ? nv - 1 - j : j);
				}
				if (!grid_monotone(pts)) continue;
				std::vector<int> pu = swap ? *pv0 : *pu0, pv = swap ? *pu0 : *pv0;
				if (ru) std::reverse(pu.begin(), pu.end());
				if (rv) std::reverse(pv.begin(), pv.end());
				return decompose(std::move(pu), std::move(pv), complete_walk(std::move(pts), nu, nv));
			}
	}
	return Violation{"the cross edges form crossing chords of the canonical outer cycle"};
}

}  // namespace

std::variant<StemDecomposition, Violation> validate_pw2(const Graph& g,
                                                        const std::vector<int>& part_u,
                                                        const std::vector<int>& part_v) {
	return validate_parts(g, part_u, part_v);
}

std::variant<StemDecomposition, Violation> validate_pw2(const PW2Graph& g) {
	return validate_parts(g.to_graph(), g.path_u, g.path_v);
}

PW2Graph complete_to_host(const PW2Graph& g) {
	auto r = validate_pw2(g);
	if (auto* bad = std::get_if<Violation>(&r))
		throw BadInput("complete_to_host: " + bad->invariant);
	return std::get<StemDecomposition>(std::move(r)).host;
}

PW2Graph make_ladder(int n) {
	if (n < 1) throw BadInput("make_ladder: need at least one rung");
	PW2Graph g;
	for (int i = 0; i < n; ++i) g.path_u.push_back(i);
	for (int i = 0; i < n; ++i) g.path_v.push_back(n + i);
	for (int i = 0; i < n; ++i) g.cross.emplace_back(i, n + i);
	return g;
}

// ---------------------------------------------------------------------------

std::vector<int> outer_cycle(const Graph& g) {
	auto adj_lists = adjacency(g, "outer_cycle");
	if (g.n < 3) throw NotOuterplanarTriangulation("need at least 3 vertices");
	if (static_cast<int>(g.edges.size()) != 2 * g.n - 3)
		throw NotOuterplanarTriangulation("expected 2n-3 = " + std::to_string(2 * g.n - 3) +
		                                  " edges, got " + std::to_string(g.edges.size()));

	std::vector<std::set<int>> adj(static_cast<size_t>(g.n));
	for (int v = 0; v < g.n; ++v)
		adj[static_cast<size_t>(v)] = {adj_lists[static_cast<size_t>(v)].begin(),
		                               adj_lists[static_cast<size_t>(v)].end()};

	// peel ears: a degree-2 vertex whose neighbours are adjacent
	std::vector<char> alive(static_cast<size_t>(g.n), 1);
	std::vector<std::array<int, 3>> peeled;
	for (int remaining = g.n; remaining > 3; --remaining) {
		int pick = -1, pa = -1, pb = -1;
		for (int v = 0; v < g.n && pick < 0; ++v) {
			if (!alive[static_cast<size_t>(v)] || adj[static_cast<size_t>(v)].size() != 2) continue;
			int a = *adj[static_cast<size_t>(v)].begin();
			int b = *std::next(adj[static_cast<size_t>(v)].begin());
			if (adj[static_cast<size_t>(a)].count(b)) {
				pick = v;
				pa = a;
				pb = b;
			}
		}
		if (pick < 0)
			throw NotOuterplanarTriangulation("no ear to peel: not a maximal outerplanar graph");
		peeled.push_back({pick, pa, pb});
		alive[static_cast<size_t>(pick)] = 0;
		adj[static_cast<size_t>(pa)].erase(pick);
		adj[static_cast<size_t>(pb)].erase(pick);
		adj[static_cast<size_t>(pick)].clear();
	}

	std::vector<int> cycle;
	for (int v = 0; v < g.n; ++v)
		if (alive[static_cast<size_t>(v)]) cycle.push_back(v);
	for (int x : cycle)
		for (int y : cycle)
			if (x < y && !adj[static_cast<size_t>(x)].count(y))
				throw NotOuterplanarTriangulation("peeling did not end at a triangle");

	// replay in reverse, inserting each ear between its neighbours, which
	// must sit side by side on the boundary at that moment
	for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
		auto [v, a, b] = *it;
		const int len = static_cast<int>(cycle.size());
		int ia = -1, ib = -1;
		for (int k = 0; k < len; ++k) {
			if (cycle[static_cast<size_t>(k)] == a) ia = k;
			if (cycle[static_cast<size_t>(k)] == b) ib = k;
		}
		if ((ia + 1) % len == ib)
			cycle.insert(cycle.begin() + ia + 1, v);
		else if ((ib + 1) % len == ia)
			cycle.insert(cycle.begin() + ib + 1, v);
		else
			throw NotOuterplanarTriangulation("a peeled vertex does not lie on the outer face");
	}
	return cycle;
}

std::variant<PW2Graph, NotPW2> find_pw2_split(const Graph& g) {
	auto adj = adjacency(g, "find_pw2_split");
	if (g.n < 2) return NotPW2{"too small to split into two non-empty paths"};
	if (g.n >= 2 && static_cast<int>(g.edges.size()) > 2 * g.n - 3)
		throw NotOuterplanarTriangulation("too many edges for an outerplanar graph");

	std::vector<char> in_u(static_cast<size_t>(g.n), 0);
	auto carrier = [&](const StemDecomposition& d) {
		std::fill(in_u.begin(), in_u.end(), 0);
		for (int v : d.host.path_u) in_u[static_cast<size_t>(v)] = 1;
		PW2Graph out;
		out.path_u = d.host.path_u;
		out.path_v = d.host.path_v;
		for (auto [a, b] : g.edges)
			if (in_u[static_cast<size_t>(a)] != in_u[static_cast<size_t>(b)])
				out.cross.emplace_back(in_u[static_cast<size_t>(a)] ? a : b,
				                       in_u[static_cast<size_t>(a)] ? b : a);
		return out;
	};

	// a full triangulation anchors the candidates: both parts must be arcs
	// of its outer cycle
	if (g.n >= 3 && static_cast<int>(g.edges.size()) == 2 * g.n - 3) {
		bool is_triangulation = true;
		std::vector<int> cyc;
		try {
			cyc = outer_cycle(g);
		} catch (const NotOuterplanarTriangulation&) {
			is_triangulation = false;
		}
		if (is_triangulation) {
			for (int t = 1; t < g.n; ++t)
				for (int s = 0; s < g.n; ++s) {
					std::vector<int> pu, pv;
					for (int k = 0; k < t; ++k) pu.push_back(cyc[static_cast<size_t>((s + k) % g.n)]);
					for (int k = t; k < g.n; ++k) pv.push_back(cyc[static_cast<size_t>((s + k) % g.n)]);
					auto r = validate_parts(g, pu, pv);
					if (auto* d = std::get_if<StemDecomposition>(&r)) return carrier(*d);
				}
			return NotPW2{"no arc of the outer cycle induces a path with a path complement"};
		}
	}

	// partial graphs get a backtracking part assignment instead
	if (g.n > 24)
		throw BadInput("find_pw2_split: exhaustive split search is limited to 24 vertices; "
		               "pass a full triangulation or supply the split");
	std::vector<char> side(static_cast<size_t>(g.n), -1);
	auto degree_ok = [&](int v) {
		int same = 0;
		for (int w : adj[static_cast<size_t>(v)])
			if (side[static_cast<size_t>(w)] == side[static_cast<size_t>(v)]) ++same;
		return same <= 2;
	};
	std::function<std::optional<PW2Graph>(int)> dfs = [&](int v) -> std::optional<PW2Graph> {
		if (v == g.n) {
			std::vector<int> pu, pv;
			for (int x = 0; x < g.n; ++x) (side[static_cast<size_t>(x)] == 0 ? pu : pv).push_back(x);
			if (pv.empty()) return std::nullopt;
			auto r = validate_parts(g, pu, pv);
			if (auto* d = std::get_if<StemDecomposition>(&r)) return carrier(*d);
			return std::nullopt;
		}
		for (char c = 0; c < 2; ++c) {
			if (v == 0 && c == 1) continue;  // part roles are symmetric
			side[static_cast<size_t>(v)] = c;
			bool ok = degree_ok(v);
			for (int w : adj[static_cast<size_t>(v)])
				if (ok && w < v && side[static_cast<size_t>(w)] == c) ok = ok && degree_ok(w);
			if (ok)
				if (auto r = dfs(v + 1)) return r;
		}
		side[static_cast<size_t>(v)] = -1;
		return std::nullopt;
	};
	if (auto r = dfs(0)) return *r;
	return NotPW2{"no split into two induced paths with non-crossing cross edges"};
}

PW2Graph random_pw2(int n, std::uint64_t seed) {
	if (n < 3) throw BadInput("random_pw2: need at least 3 vertices");
	Rng rng(seed ^ 0x5ca1ab1eULL);
	const int nu = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
	const int nv = n - nu;

	std::vector<int> steps;  // 0 right along path_u, 1 up along path_v
	for (int i = 0; i + 1 < nu; ++i) steps.push_back(0);
	for (int j = 0; j + 1 < nv; ++j) steps.push_back(1);
	for (size_t i = steps.size(); i > 1; --i)
		std::swap(steps[i - 1], steps[rng.below(i)]);

	PW2Graph g;
	for (int i = 0; i < nu; ++i) g.path_u.push_back(i);
	for (int j = 0; j < nv; ++j) g.path_v.push_back(nu + j);
	int i = 0, j = 0;
	g.cross.emplace_back(0, nu);
	for (int s : steps) {
		s == 0 ? ++i : ++j;
		g.cross.emplace_back(i, nu + j);
	}
	return g;
}

// ---------------------------------------------------------------------------

std::string graph_to_json(const Graph& g) {
	nlohmann::json j;
	j["n"] = g.n;
	j["edges"] = nlohmann::json::array();
	for (auto [a, b] : g.edges) j["edges"].push_back({a, b});
	return j.dump(1, '\t') + "\n";
}

static Graph graph_from_parsed(const nlohmann::json& j) {
	if (!j.contains("n") || !j["n"].is_number_integer())
		throw BadInput("graph json: needs integer \"n\"");
	if (!j.contains("edges") || !j["edges"].is_array())
		throw BadInput("graph json: needs an \"edges\" array");
	Graph g;
	g.n = j["n"].get<int>();
	for (const auto& e : j["edges"]) {
		if (!e.is_array() || e.size() != 2)
			throw BadInput("graph json: edges entries must be pairs");
		g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
	}
	adjacency(g, "graph json");  // range/duplicate checks
	return g;
}

Graph graph_from_json(const std::string& text) {
	return graph_from_parsed(nlohmann::json::parse(text));
}

std::string pw2_to_json(const PW2Graph& g) {
	nlohmann::json j;
	j["n"] = g.order();
	j["edges"] = nlohmann::json::array();
	for (auto [a, b] : g.all_edges()) j["edges"].push_back({a, b});
	j["split"]["u"] = g.path_u;
	j["split"]["v"] = g.path_v;
	return j.dump(1, '\t') + "\n";
}

PW2Graph pw2_from_json(const std::string& text) {
	nlohmann::json j = nlohmann::json::parse(text);
	Graph g = graph_from_parsed(j);
	if (!j.contains("split") || !j["split"].contains("u") || !j["split"].contains("v"))
		throw BadInput("pw2 json: needs \"split\" with \"u\" and \"v\" sequences");
	PW2Graph out;
	out.path_u = j["split"]["u"].get<std::vector<int>>();
	out.path_v = j["split"]["v"].get<std::vector<int>>();

	// the split arrays are path sequences; every edge must be a consecutive
	// pair of one of them or go across
	std::vector<int> upos(static_cast<size_t>(g.n), -1), vpos(static_cast<size_t>(g.n), -1);
	std::vector<char> seen(static_cast<size_t>(g.n), 0);
	auto place = [&](const std::vector<int>& path, std::vector<int>& pos, const char* name) {
		for (size_t k = 0; k < path.size(); ++k) {
			int v = path[k];
			if (v < 0 || v >= g.n || seen[static_cast<size_t>(v)])
				throw BadInput(std::string("pw2 json: split \"") + name +
				               "\" is not part of a partition");
			seen[static_cast<size_t>(v)] = 1;
			pos[static_cast<size_t>(v)] = static_cast<int>(k);
		}
	};
	place(out.path_u, upos, "u");
	place(out.path_v, vpos, "v");
	if (static_cast<int>(out.path_u.size() + out.path_v.size()) != g.n)
		throw BadInput("pw2 json: split does not cover every vertex");

	std::set<std::pair<int, int>> path_edges;
	for (auto [a, b] : out.path_edges()) path_edges.insert(std::minmax(a, b));
	std::set<std::pair<int, int>> present;
	for (auto [a, b] : g.edges) {
		if (upos[static_cast<size_t>(a)] >= 0 && upos[static_cast<size_t>(b)] >= 0) {
			if (!path_edges.count(std::minmax(a, b)))
				throw BadInput("pw2 json: an edge inside part \"u\" is not a path edge");
			present.insert(std::minmax(a, b));
		} else if (vpos[static_cast<size_t>(a)] >= 0 && vpos[static_cast<size_t>(b)] >= 0) {
			if (!path_edges.count(std::minmax(a, b)))
				throw BadInput("pw2 json: an edge inside part \"v\" is not a path edge");
			present.insert(std::minmax(a, b));
		} else {
			out.cross.emplace_back(upos[static_cast<size_t>(a)] >= 0 ? a : b,
			                       upos[static_cast<size_t>(a)] >= 0 ? b : a);
		}
	}
	if (present.size() != path_edges.size())
		throw BadInput("pw2 json: a path edge of the split is missing from \"edges\"");
	return out;
}

}  // namespace gr
