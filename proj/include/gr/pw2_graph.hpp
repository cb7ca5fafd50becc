#pragma once

/**
 * Ladders and two-path outerplanar triangulations.
 *
 * The central representation is a graph split into two vertex paths plus
 * cross edges between them.  Writing a cross edge between the i-th vertex
 * of one path and the j-th of the other as the grid point (i, j), the
 * split graph embeds outerplanarly with the canonical outer cycle
 * (path_u forward, path_v backward) exactly when the grid points are
 * monotone, and it is a triangulation exactly when they form a full
 * monotone lattice path.  Partial graphs (ladders!) are completed to their
 * canonical host triangulation by filling each gap with an alternating
 * lattice walk, so every valid split graph carries a canonical host.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gr {

// simple undirected graph on vertices 0..n-1
struct Graph {
	int n = 0;
	std::vector<std::pair<int, int>> edges;
};

struct PW2Graph {
	std::vector<int> path_u, path_v;        // vertex ids along each path
	std::vector<std::pair<int, int>> cross;  // edges (u-id, v-id)

	int order() const { return static_cast<int>(path_u.size() + path_v.size()); }
	// consecutive pairs along both paths
	std::vector<std::pair<int, int>> path_edges() const;
	std::vector<std::pair<int, int>> all_edges() const;
	Graph to_graph() const;
};

// names the invariant a candidate split graph failed
struct Violation {
	std::string invariant;
};

struct NotPW2 {
	std::string reason;
};

struct NotOuterplanarTriangulation : std::runtime_error {
	explicit NotOuterplanarTriangulation(const std::string& what) : std::runtime_error(what) {}
};

/**
 * The unique alternating backbone of a validated split graph's host
 * triangulation, computed greedily from the first path_v vertex by always
 * stepping to the farthest neighbour in the other part.  Stem entries are
 * positions into the host's paths, not vertex ids.  blocks_u covers
 * path_u positions with one closed range per stem step; leaf_runs are the
 * (possibly empty) position ranges strictly between consecutive v-stems.
 */
struct StemDecomposition {
	PW2Graph host;  // canonical completed triangulation, normalized orientation
	std::vector<int> stem_u, stem_v;
	std::vector<std::pair<int, int>> blocks_u;
	std::vector<std::pair<int, int>> leaf_runs;
	std::vector<int> f;  // sizes of the leaf runs

	int ell() const { return static_cast<int>(stem_v.size()); }
};

// The ladder with n rungs: two n-vertex paths, rung i joining their i-th
// vertices.  2n vertices, 3n-2 edges; ids 0..n-1 then n..2n-1.
PW2Graph make_ladder(int n);

// Full invariant check of a split graph: the parts partition 0..N-1, each
// part's induced subgraph is exactly a single path, and the cross edges
// are monotone in the grid (so the canonical host exists).  The parts are
// treated as sets — path orders are derived from the induced structure —
// and the orientation of the paths and the role of the parts are
// normalized automatically (up to 8 variants tried in a fixed order).  On
// success returns the stem decomposition of the canonical host; otherwise
// names the violated invariant.
std::variant<StemDecomposition, Violation> validate_pw2(const Graph& g,
                                                        const std::vector<int>& part_u,
                                                        const std::vector<int>& part_v);
std::variant<StemDecomposition, Violation> validate_pw2(const PW2Graph& g);

// Canonical host triangulation of a valid split graph: fills every gap
// between consecutive cross-edge grid points with a lattice walk that
// repeats the previous step direction once, then alternates.  The host has
// 2N-3 edges.  Throws BadInput when the split graph does not validate.
PW2Graph complete_to_host(const PW2Graph& g);

// Hamiltonian outer cycle of an outerplanar triangulation, recovered by
// ear peeling.  Throws NotOuterplanarTriangulation when the graph is not
// one (wrong edge count, no ear to peel, non-simple input).
std::vector<int> outer_cycle(const Graph& g);

// Searches for a split turning g into a valid two-path graph.  When g is a
// full outerplanar triangulation the candidates are the arcs of its outer
// cycle; otherwise a backtracking search over part assignments runs (both
// parts must induce exactly one path each).  The returned graph carries
// g's own edges; NotPW2 reports exhaustion.  Throws
// NotOuterplanarTriangulation when g has too many edges to be outerplanar.
std::variant<PW2Graph, NotPW2> find_pw2_split(const Graph& g);

// Seeded random member of PW2(n): a random split size and a random
// monotone lattice path of cross edges, i.e. a uniformly drawn canonical
// triangulation.  Always validates.
PW2Graph random_pw2(int n, std::uint64_t seed);

// {"n": N, "edges": [[a,b],...]} with an optional "split": {"u": [...], "v": [...]}
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);
std::string pw2_to_json(const PW2Graph& g);
PW2Graph pw2_from_json(const std::string& text);

}  // namespace gr
