#pragma once

/**
 * Extractors for two-path outerplanar triangulations.
 *
 * The input is a 2-colored point set split into two campuses: one hosts
 * the first path of the target graph, the other hosts the second path
 * together with all its leaves.  A scaffold stage slices both campuses
 * into interleaved pools and keeps the majority color; a refinement stage
 * distills small stem-host blocks whose members share many same-colored
 * common neighbours; the main stage walks a monochromatic stem through
 * those blocks under a locally recolored oracle that prices in the leaf
 * pools sitting between them, then expands the stem into the full first
 * path and hangs the leaves.  Every dead end is itself a harvest: either
 * a monochromatic biclique across the campuses (which carries the target
 * graph directly, two chains or one anticlique at a time) or a separable
 * monochromatic biclique inside one campus (returned as a witness in its
 * own right, or re-carved and replayed by the outer pipelines).
 *
 * Everything is best-effort below the guaranteed sizes: stages throw
 * SizeTooSmall with their name when the input genuinely runs out, and
 * every returned witness is re-certified against the raw points and the
 * raw oracle before it leaves.
 */

#include <variant>
#include <vector>

#include "gr/avoiding.hpp"
#include "gr/coloring.hpp"
#include "gr/errors.hpp"
#include "gr/geometry.hpp"
#include "gr/pw2_graph.hpp"
#include "gr/witness.hpp"

namespace gr {

// ---------------------------------------------------------------------------
// scaffold

/**
 * Block system carved out of the two campuses for a target with `ell` stem
 * vertices.  The path campus is sliced into 2*ell-1 runs of 8mn^3; the stem
 * campus alternates candidate runs of 8mn^2 with leaf runs of 9m^2n^2.
 * Every candidate vertex is colored by its majority toward the facing path
 * run (ties red), every candidate run by its vertex majority (ties red),
 * and `color` is the color carried by at least ell of the 2*ell-1 runs.
 * The first ell runs of that color are kept:
 *
 *   stem_pool[i]  the first 4mn^2 color-majority vertices of the i-th kept
 *                 run; candidates to host the i-th stem vertex,
 *   path_pool[i]  the facing path-campus run (8mn^3), toward which every
 *                 stem_pool[i] vertex has at least 4mn^3 neighbours of the
 *                 scaffold color,
 *   leaf_pool[i]  the leaf run following the i-th kept run (9m^2n^2),
 *                 sitting between stem_pool[i] and stem_pool[i+1] in campus
 *                 order; ell-1 entries.
 *
 * All entries are global vertex ids, listed in campus order.
 */
struct PartitionScaffold {
	Color color = Color::Red;
	std::vector<std::vector<int>> stem_pool;
	std::vector<std::vector<int>> path_pool;
	std::vector<std::vector<int>> leaf_pool;
};

// Builds the scaffold from the two campuses, each listed in its geometric
// order.  Throws SizeTooSmall("campus slicing") when a campus cannot fill
// its runs.
PartitionScaffold build_scaffold(const std::vector<int>& path_campus,
                                 const std::vector<int>& stem_campus, int ell, int n, int m,
                                 const Coloring& oracle);

/**
 * Output of the refinement: stem_hosts[i] is the first 2m vertices of
 * stem_pool[i] compatible with every chosen vertex of stem_hosts[i-1],
 * where compatible means at least 3nm common scaffold-colored neighbours
 * in path_pool[i-1].  leaf_splits[i] partitions leaf_pool[i] for gaps
 * carrying at least two leaves: big end runs of 4m^2n^2 and an even split
 * of the rest in the middle (empty for gaps with fewer leaves).
 */
struct RefinedScaffold {
	std::vector<std::vector<int>> stem_hosts;
	std::vector<std::vector<std::vector<int>>> leaf_splits;
};

// Refinement dead end: a biclique between n^2 path-campus vertices and n^2
// stem-campus vertices whose cross edges all carry the color opposite to
// the scaffold's.  Feeding it to pw2_from_wellsplit yields the target in
// that opposite color.
struct CrossBiclique {
	std::vector<int> path_side, stem_side;
};

// Distills stem hosts block by block.  `leaf_counts` gives the number of
// leaves in each of the ell-1 gaps (shaping leaf_splits).  `oracle` is the
// raw coloring; the scaffold's color orients all counting.
std::variant<RefinedScaffold, CrossBiclique> refine_scaffold(const PartitionScaffold& sc,
                                                             const std::vector<int>& leaf_counts,
                                                             int n, int m,
                                                             const Coloring& oracle);

// ---------------------------------------------------------------------------
// biclique -> two-path triangulation

// Turns a monochromatic biclique between two arcs of a convex polygon into
// a non-crossing embedding of `host`.  The host is validated first and the
// witness carries its canonical completed triangulation (a non-triangulated
// two-path graph gains its completion's edges).  Inside each part the sweep
// finds either an increasing across-colored path long enough for that
// part's host path (the second one placed in reverse, closing the outer
// cycle around the polygon), or host.order() vertices that are pairwise
// other-colored, which carry the host as a drawn pattern.  Guaranteed when
// each part holds n^2 points.
Witness pw2_from_wellsplit(const ConvexSeq& c, const std::vector<int>& part1,
                           const std::vector<int>& part2, const PW2Graph& host, Color across,
                           const Coloring& oracle);

// Same extraction between the two sides of a mutually avoiding pair; both
// host paths run forward along the mutual orders.  `pair` must carry src
// indices into pts.
Witness pw2_from_wellsplit(const AvoidingPair& pair, const PW2Graph& host, Color across,
                           const std::vector<Point>& pts, const Coloring& oracle);

// ---------------------------------------------------------------------------
// main stage

/**
 * Monochromatic non-crossing embedding of the stem's host from a mutually
 * avoiding pair: side a hosts the first path, side b the second path and
 * the leaves.  Returns either that embedding or a monochromatic biclique
 * with m vertices per part, both parts inside one campus and separated by
 * a line (certificate included).  `stem` must be the decomposition of a
 * validated host (as produced by validate_pw2); the pair must carry src
 * indices into pts.  Guaranteed when side a holds (2*ell-1)*8mn^3 points,
 * side b (2*ell-1)*8mn^2 + (2*ell-2)*9m^2n^2, and m >= n^2; anything
 * smaller is attempted best-effort.
 */
Witness pw2_core(const AvoidingPair& pair, const StemDecomposition& stem, int m,
                 const std::vector<Point>& pts, const Coloring& oracle);

// ---------------------------------------------------------------------------
// full pipelines

// Monochromatic non-crossing embedding of `host` from a 2-colored convex
// polygon.  Splits the polygon in half, runs the main stage, and replays
// any separable biclique as a wellsplit one (its parts are arcs here).
// m defaults to n^2, making the result guaranteed at 20 n^7 polygon
// vertices; smaller inputs fail best-effort with a stage-labeled
// SizeTooSmall.  The returned witness is always an embedding.
Witness pw2_extract_convex(const ConvexSeq& c, const PW2Graph& host, const Coloring& oracle,
                           int m = 0);

// The same embedding from points in general position, starting from a
// mutually avoiding pair already in hand.  A separable biclique outcome is
// re-carved into a fresh avoiding pair (6k^2 points per side yield k) and
// replayed across it.  m defaults to 6 n^4, exactly the size whose
// biclique re-carve yields the n^2 points per side the replay needs.
Witness pw2_extract_general(const AvoidingPair& pair, const PW2Graph& host,
                            const std::vector<Point>& pts, const Coloring& oracle, int m = 0);

// End-to-end general-position pipeline: splits the cloud by a line, carves
// a mutually avoiding pair (10 m^2 n^3 points per side wanted, fewer
// best-effort), and extracts.  The bound form needs on the order of
// 10^2 6^5 n^22 points -- far beyond any desk-size run, so realistic calls
// pass a small m and accept stage-labeled failures.
Witness pw2_extract_general(const std::vector<Point>& pts, const PW2Graph& host,
                            const Coloring& oracle, int m = 0);

// ---------------------------------------------------------------------------
// witness surgery

// Restricts an embedding witness to a subgraph of its pattern (same vertex
// set, subset of edges): the map is untouched, so a certified witness stays
// certified.  Anything else is a BadInput.
Witness restrict_witness(const Witness& w, const Graph& sub);

}  // namespace gr
