#pragma once

/**
 * Ordered Ramsey machinery: cliques versus arbitrarily ordered paths.
 *
 * The host is always the naturally ordered complete graph on 0..N-1.  An
 * ordered path on m vertices is given by the permutation stitching its
 * vertices together: edge t joins the pi[t]-th and pi[t+1]-th vertices in
 * the order.  The extractor runs the same block sweep as the geometric
 * pipelines, with intervals standing in for arcs: a red transversal path
 * realizes the ordered path directly (one vertex per interval is
 * automatically order-preserving), and the fallback biclique halves
 * recurse toward a blue clique of half the target size.
 */

#include <utility>
#include <variant>
#include <vector>

#include "gr/coloring.hpp"
#include "gr/errors.hpp"

namespace gr {

// Graph on 0..n-1 where the vertex order is part of the structure.
struct OrderedGraph {
	int n = 0;
	std::vector<std::pair<int, int>> edges;
};

// Path on m vertices p_0 < ... < p_{m-1} with edges {p_{pi[t]}, p_{pi[t+1]}}.
// Any permutation of 0..m-1 describes exactly one ordered path.
struct OrderedPathSpec {
	int m = 0;
	std::vector<int> pi;
};

OrderedPathSpec identity_path(int m);

// 2^(ceil(log2 n) * (ceil(log2 m) + 1)): hosts this large always contain a
// blue ordered K_n or a red copy of the given ordered path.  Throws
// BadInput when the value would not fit in 63 bits.
long long ordered_bound(int n, int m);

struct BlueClique {
	std::vector<int> verts;  // ascending; all pairs blue
};

struct RedPath {
	std::vector<int> map;  // map[j] = host vertex of the j-th path vertex; increasing
};

using CliqueOrPath = std::variant<BlueClique, RedPath>;

// Searches the first R host vertices.  Guaranteed when R >=
// ordered_bound(n, m); smaller hosts are attempted best-effort and fail
// with a stage-labeled SizeTooSmall.  Deterministic: intervals split
// evenly with the remainder on the last one, sweeps and scans take the
// first achievable witness.
CliqueOrPath find_clique_or_path(int R, int n, const OrderedPathSpec& spec,
                                 const Coloring& oracle);

struct OrderedPathWitness {
	Color color = Color::Red;
	std::vector<int> map;
};

// Monochromatic copy of the given ordered path on n vertices: a red
// transversal comes back as found, and a blue clique hosts any ordering
// of the path outright.  spec.m must equal n.
OrderedPathWitness path_vs_path(int n, const OrderedPathSpec& spec, const Coloring& oracle);

// Order-preserving subgraph test: can G's vertices map injectively and
// increasingly into H's so that every G-edge lands on an H-edge?
bool contains_ordered(const OrderedGraph& H, const OrderedGraph& G);

}  // namespace gr
