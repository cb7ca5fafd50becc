#pragma once

/**
 * Certified extraction outputs.
 *
 * Every extractor ends in one of two shapes: an embedding (a pattern graph
 * drawn injectively on the point set, all edges one color, no two segments
 * crossing) or a biclique (two index sets with every cross edge one color,
 * plus a geometric certificate that the parts are cleanly split).  Both
 * shapes re-verify from scratch against the raw points and the raw oracle;
 * nothing downstream ever has to trust the pipeline that produced them.
 *
 * The audit returns human-readable reasons with stable key phrases
 * ("color mismatch", "crossing", ...) so command-line verification can
 * report what broke.  The throwing form is for extractor exit paths, where
 * a failed audit means a bug, not bad input.
 */

#include <string>
#include <vector>

#include "gr/coloring.hpp"
#include "gr/geometry.hpp"
#include "gr/pw2_graph.hpp"

namespace gr {

// How a biclique's parts are split: by a line (disjoint convex hulls) or by
// mutual avoidance (every line through two points of one part leaves the
// other part whole).  In convex position the two notions coincide.
enum class CertKind : std::uint8_t { Separable, WellSplit };

struct Witness {
	enum class Kind : std::uint8_t { Embedding, Biclique } kind = Kind::Embedding;
	Color color = Color::Red;

	// Embedding: pattern vertex t sits on pts[map[t]].
	Graph pattern;
	std::vector<int> map;

	// Biclique: all left x right edges carry .color.
	std::vector<int> left, right;
	CertKind certificate = CertKind::Separable;
};

Witness make_embedding(Color c, Graph pattern, std::vector<int> map);
Witness make_biclique(Color c, std::vector<int> left, std::vector<int> right, CertKind cert);

// Re-verifies the witness against the raw points and oracle: map shape and
// injectivity, edge colors, pairwise segment crossings, part disjointness,
// and the claimed split certificate.  Returns every reason the witness
// fails; empty means certified.
std::vector<std::string> audit_witness(const Witness& w, const std::vector<Point>& pts,
                                       const Coloring& oracle);

// Audit that treats any failure as an implementation bug.
void certify(const Witness& w, const std::vector<Point>& pts, const Coloring& oracle);

std::string witness_to_json(const Witness& w);
Witness witness_from_json(const std::string& text);

// A self-contained drawing: dots for points, solid segments for witness
// edges, dashed segments for extra edges known to carry the same color.
// Bicliques draw every cross edge while that stays legible and fall back
// to part hulls beyond that.
std::string witness_svg(const Witness& w, const std::vector<Point>& pts,
                        const std::vector<std::pair<int, int>>& dashed = {});

}  // namespace gr
