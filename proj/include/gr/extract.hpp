#pragma once

/**
 * Ladder extractors.
 *
 * The engine under both position models is the same win-win sweep: march
 * through an ordered sequence of blocks growing a monochromatic increasing
 * path, and if the path dies, the marching argument hands back a biclique
 * of the other color between two half-blocks.  Run the sweep twice (once
 * per side), and either outcome—two parallel paths, or a large clean
 * biclique—assembles into a non-crossing monochromatic ladder.
 *
 * Everything here is best-effort below the guaranteed sizes: stages throw
 * SizeTooSmall with their name when the input genuinely runs out, and
 * every returned witness is re-certified against the raw points and the
 * raw oracle before it leaves.
 */

#include <optional>
#include <variant>
#include <vector>

#include "gr/avoiding.hpp"
#include "gr/coloring.hpp"
#include "gr/errors.hpp"
#include "gr/geometry.hpp"
#include "gr/pw2_graph.hpp"
#include "gr/witness.hpp"

namespace gr {

struct NotOuterplanar : std::runtime_error {
	explicit NotOuterplanar(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// block sweep

// Path with one vertex per block, edges all path-colored, found by marking
// each vertex "good" when some good vertex of the previous block reaches it
// by a path-colored edge.
struct BlockPath {
	std::vector<int> verts;
};

// Fallback when no path survives to the last block: at the largest index i
// where at least half of block i is still good, every good vertex of block
// i meets every bad vertex of block i+1 by an off-color edge (otherwise the
// bad vertex would have been marked good).  Both halves come back whole.
struct BlockBiclique {
	int block = 0;  // i: lower = good of blocks[i], upper = bad of blocks[i+1]
	std::vector<int> lower, upper;
};

// Sweeps the blocks in order.  Returns the full path (one vertex per block,
// ties broken by first position) or the biclique described above, whose
// sides each hold at least half a block.  Blocks must be nonempty.
std::variant<BlockPath, BlockBiclique> longpath_or_biclique(
    const std::vector<std::vector<int>>& blocks, Color path_color, const Coloring& oracle);

// Set difference S \ (T_1 u ... u T_k), preserving the order of S, after
// checking that no T_i eats more than `cap` elements of S (the budgets the
// scaffold stages are built on).  Violation is a BadInput.
std::vector<int> survivors(const std::vector<int>& S, const std::vector<std::vector<int>>& Ts,
                           int cap);

// ---------------------------------------------------------------------------
// outerplanar embedding

// Fills a graph that admits an outer cycle up to a maximal outerplanar
// supergraph (a triangulated polygon) on the same vertices.  Throws
// NotOuterplanar when no circular order realizes the input without chord
// crossings.
Graph complete_outerplanar(const Graph& g);

// Draws an outerplanar graph without crossings on an arbitrary set of
// points in general position (any such set works; the embedding needs no
// relation between graph and point geometry).  Completes the graph to a
// triangulated polygon, then places the polygon's cycle on the points by
// backtracking with exact segment tests.  Returns map[vertex] = point
// index into pts.  Requires pts.size() >= g.n.
std::vector<int> embed_outerplanar(const Graph& g, const std::vector<Point>& pts);

// ---------------------------------------------------------------------------
// biclique -> ladder

// Turns a monochromatic biclique between two arcs of a convex polygon into
// a non-crossing ladder witness with n rungs.  `part1`/`part2` are global
// polygon indices, each occupying an index range disjoint from the other,
// with every cross edge colored `across`.  Inside each part the sweep finds
// either an increasing across-colored path of n vertices (two of those give
// the ladder directly, rungs matched in opposite order) or 2n vertices that
// are pairwise other-colored, which carry the ladder as a drawn pattern.
Witness ladder_from_wellsplit(const ConvexSeq& c, const std::vector<int>& part1,
                              const std::vector<int>& part2, int n, Color across,
                              const Coloring& oracle);

// Same extraction between the two sides of a mutually avoiding pair; rungs
// are matched between equal mutual-order positions.  `pair` must carry src
// indices into pts, and parts are the full sides.
Witness ladder_from_wellsplit(const AvoidingPair& pair, int n, Color across,
                              const std::vector<Point>& pts, const Coloring& oracle);

// Ladder from a monochromatic biclique whose parts are separated by a line
// (general position).  Carves a mutually avoiding pair out of the two sides
// and runs the avoiding extraction; guaranteed when each side holds at
// least 24 n^4 points.
Witness ladder_from_separable(const std::vector<int>& left, const std::vector<int>& right,
                              int n, Color across, const std::vector<Point>& pts,
                              const Coloring& oracle);

// ---------------------------------------------------------------------------
// full pipelines

// Monochromatic non-crossing ladder with 2n vertices from a 2-colored
// convex polygon.  Guaranteed when the polygon has at least 32 n^3
// vertices; smaller inputs are attempted best-effort and fail with a
// stage-labeled SizeTooSmall.  The returned witness is certified.
Witness convex_ladder_extract(const ConvexSeq& c, int n, const Coloring& oracle);

// The same ladder from points in general position, starting from a
// mutually avoiding pair already in hand (the form all realistic runs
// use; carving the pair out of a raw cloud costs quadratically many
// points).  Block partitions follow the pair's mutual orders.
Witness general_ladder_extract(const AvoidingPair& pair, int n, const std::vector<Point>& pts,
                               const Coloring& oracle);

// End-to-end general-position pipeline: splits the cloud by a line,
// carves out a mutually avoiding pair (c1 n^5 points per side when the
// cloud is large enough, fewer best-effort), and extracts.  The bound
// form needs on the order of 6 c1^2 n^10 points.
Witness general_ladder_extract(const std::vector<Point>& pts, int n, const Coloring& oracle,
                               int c1 = 192);

}  // namespace gr
