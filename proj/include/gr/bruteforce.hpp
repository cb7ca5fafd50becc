#pragma once

/**
 * Exhaustive ground truth at desk scale.
 *
 * Everything here is exact and independent of the extraction pipelines: a
 * backtracking search decides whether a 2-colored convex point set contains
 * a monochromatic non-crossing copy of a pattern, a canonicalized scan of
 * all 2^C(N,2) colorings pins small exact Ramsey values, and a differential
 * harness replays extractor outputs against the oracle.
 *
 * Convex position makes crossings pure order arithmetic: two chords of a
 * convex polygon cross exactly when their endpoint pairs interleave in the
 * cyclic order, so one canonical realization decides every convex instance
 * and the search never touches coordinates.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gr/coloring.hpp"
#include "gr/geometry.hpp"
#include "gr/pw2_graph.hpp"
#include "gr/witness.hpp"

namespace gr {

// The path 0-1-...-n-1 and the cycle closing it.
Graph path_graph(int n);
Graph cycle_graph(int n);

// A monochromatic non-crossing copy found by the oracle: every pattern edge
// carries `color` under the map, and no two mapped edges cross.
struct FoundCopy {
	Color color = Color::Red;
	std::vector<int> map;  // pattern vertex t sits at position map[t]
};

// Exact decision by backtracking over injective maps with incremental color
// and crossing pruning.  Red copies are preferred, then blue; the first map
// in lexicographic search order is returned.  The coloring must live on
// exactly c.size() vertices.
std::optional<FoundCopy> contains_mono_noncrossing(const Coloring& g, const Graph& pattern,
                                                   const ConvexSeq& c);

// The same decision with every shortcut disabled: full enumeration of
// injective maps, each validated from scratch.  Exists so counterexample
// claims never rest on the pruned search's correctness.
std::optional<FoundCopy> contains_mono_noncrossing_slow(const Coloring& g, const Graph& pattern,
                                                        const ConvexSeq& c);

// make_cycle_lower_bound, cross-checked: the (cycle-1)^2-vertex coloring is
// handed to the exhaustive search and must contain no monochromatic
// non-crossing `cycle`-cycle.  Throws InternalContradiction if it does.
Coloring make_certified_cycle_lower_bound(int cycle);

// One N of the exhaustive scan.  Colorings are enumerated as red-edge
// bitmasks and reduced by canonical-form rejection under the dihedral group
// of the convex order and the global color swap: a mask is examined only
// when it is the numeric minimum of its orbit, and each examined mask adds
// its exact orbit size to orbit_sum, so a complete scan has orbit_sum ==
// 2^C(N,2) -- the accounting that proves no coloring was skipped.
struct SearchReport {
	Graph pattern;
	int N = 0;
	bool complete = false;      // the scan covered (or fully accounted) all masks
	bool all_contain = false;   // meaningful when complete
	bool found_counterexample = false;
	std::vector<std::pair<int, int>> counter_red;  // red edges of the counterexample
	std::uint64_t examined = 0;      // canonical representatives tested
	std::uint64_t orbit_sum = 0;     // sum of their orbit sizes
	std::uint64_t total_masks = 0;   // 2^C(N,2)

	// The counterexample as a coloring on N vertices.
	Coloring counterexample() const;
};

std::string search_report_to_json(const SearchReport& r);
SearchReport search_report_from_json(const std::string& text);

// Resumable scan position; version-tagged so stale files are rejected.
struct SearchCheckpoint {
	int version = 1;
	int N = 0;
	std::uint64_t next_mask = 0;
	std::uint64_t examined = 0;
	std::uint64_t orbit_sum = 0;
	bool found_counterexample = false;
	std::vector<std::pair<int, int>> counter_red;
};

std::string checkpoint_to_json(const SearchCheckpoint& ck);
SearchCheckpoint checkpoint_from_json(const std::string& text);

// Scans all 2^C(N,2) red-edge masks at one N.  Stops early once a
// counterexample is found unless full_scan is set (a full scan keeps the
// orbit accounting exact, which the invariants test).  budget_masks > 0
// bounds how many mask values this call may pass over; when the budget runs
// out the report has complete == false and *resume (when given) holds the
// position to continue from.  Pass a resume checkpoint from a previous call
// to pick up where it left off.  Any counterexample is revalidated by the
// pruning-free search before it is reported.
SearchReport exact_convex_ramsey_at(const Graph& pattern, int N, bool full_scan = false,
                                    std::uint64_t budget_masks = 0,
                                    SearchCheckpoint* resume = nullptr);

// exact_convex_ramsey_at over an inclusive range of N, early-stopping scans.
std::vector<SearchReport> exact_convex_ramsey(const Graph& pattern, int N_lo, int N_hi);

// Differential harness: an extractor is any callable that either produces a
// witness or gives up (nullopt; extractors signal shortfalls by exception,
// wrappers translate).  For every sampled coloring where the extractor
// produces a witness, the witness must audit clean against the points and
// the oracle must confirm the pattern exists; every disagreement is
// reported with the offending coloring serialized for reproduction.
using ConvexExtractor =
    std::function<std::optional<Witness>(const ConvexSeq&, const Coloring&)>;

struct AgreementReport {
	int runs = 0;
	int extracted = 0;    // extractor produced a witness
	int oracle_hits = 0;  // oracle confirmed containment on those runs
	std::vector<std::string> discrepancies;
};

AgreementReport verify_extractor_against_oracle(const ConvexExtractor& extractor,
                                                const Graph& pattern, const ConvexSeq& c,
                                                const std::vector<Coloring>& samples);

}  // namespace gr
