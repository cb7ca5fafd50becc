#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "gr/coloring.hpp"
#include "gr/errors.hpp"
#include "gr/geometry.hpp"
#include "gr/witness.hpp"

using namespace gr;

namespace {

size_t count_of(const std::string& hay, const std::string& needle) {
	size_t n = 0;
	for (size_t at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1))
		++n;
	return n;
}

bool mentions(const std::vector<std::string>& reasons, const std::string& phrase) {
	return std::any_of(reasons.begin(), reasons.end(), [&](const std::string& r) {
		return r.find(phrase) != std::string::npos;
	});
}

Graph triangle() {
	Graph g;
	g.n = 3;
	g.edges = {{0, 1}, {1, 2}, {0, 2}};
	return g;
}

Graph square() {
	Graph g;
	g.n = 4;
	g.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
	return g;
}

}  // namespace

TEST_CASE("a clean embedding audits clean") {
	auto pts = gen_convex(5).pts;
	auto oracle = make_constant(5, Color::Red);
	auto w = make_embedding(Color::Red, triangle(), {0, 2, 4});
	CHECK(audit_witness(w, pts, oracle).empty());
	CHECK_NOTHROW(certify(w, pts, oracle));
}

TEST_CASE("a recolored edge is reported as a color mismatch") {
	auto pts = gen_convex(5).pts;
	// everything red except the single edge {2, 4}
	auto oracle = make_constant(5, Color::Red);
	auto tweaked = make_explicit(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
	                                 {2, 3}, {3, 4}});
	auto w = make_embedding(Color::Red, triangle(), {0, 2, 4});
	CHECK(audit_witness(w, pts, oracle).empty());
	auto reasons = audit_witness(w, pts, tweaked);
	REQUIRE_EQ(reasons.size(), 1);
	CHECK(mentions(reasons, "color mismatch"));
	CHECK_THROWS_AS(certify(w, pts, tweaked), InternalContradiction);
}

TEST_CASE("crossing segments are reported as a crossing") {
	auto pts = gen_convex(4).pts;
	auto oracle = make_constant(4, Color::Blue);
	// in convex order the cycle 0-1-2-3 closes without crossings; the
	// transposed map routes both diagonals and must be caught
	auto good = make_embedding(Color::Blue, square(), {0, 1, 2, 3});
	CHECK(audit_witness(good, pts, oracle).empty());
	auto bad = make_embedding(Color::Blue, square(), {0, 2, 1, 3});
	auto reasons = audit_witness(bad, pts, oracle);
	CHECK(mentions(reasons, "crossing"));
	CHECK_THROWS_AS(certify(bad, pts, oracle), InternalContradiction);
}

TEST_CASE("map shape faults are caught before anything else") {
	auto pts = gen_convex(6).pts;
	auto oracle = make_constant(6, Color::Red);

	auto dup = make_embedding(Color::Red, triangle(), {0, 0, 1});
	CHECK(mentions(audit_witness(dup, pts, oracle), "not injective"));

	auto out_of_range = make_embedding(Color::Red, triangle(), {0, 1, 6});
	CHECK(mentions(audit_witness(out_of_range, pts, oracle), "out of range"));

	auto short_map = make_embedding(Color::Red, triangle(), {0, 1});
	CHECK(mentions(audit_witness(short_map, pts, oracle), "every pattern vertex"));

	Graph loop;
	loop.n = 2;
	loop.edges = {{0, 0}};
	auto malformed = make_embedding(Color::Red, loop, {0, 1});
	CHECK(mentions(audit_witness(malformed, pts, oracle), "malformed"));

	// a narrower oracle than the point set
	auto narrow = make_constant(3, Color::Red);
	auto wide = make_embedding(Color::Red, triangle(), {0, 1, 5});
	CHECK(mentions(audit_witness(wide, pts, narrow), "outside the oracle"));
}

TEST_CASE("bicliques on convex arcs pass both certificates") {
	auto pts = gen_convex(8).pts;
	auto oracle = make_constant(8, Color::Blue);
	std::vector<int> L{0, 1, 2, 3}, R{4, 5, 6, 7};
	for (auto cert : {CertKind::Separable, CertKind::WellSplit}) {
		auto w = make_biclique(Color::Blue, L, R, cert);
		CHECK(audit_witness(w, pts, oracle).empty());
	}
}

TEST_CASE("a separable pair need not be mutually avoiding") {
	// the line through the two left points splits the right pair, but the
	// hulls are still separated
	std::vector<Point> pts = {{0, 0}, {2, 1}, {10, 10}, {10, -10}};
	auto oracle = make_constant(4, Color::Red);
	std::vector<int> L{0, 1}, R{2, 3};
	CHECK(audit_witness(make_biclique(Color::Red, L, R, CertKind::Separable), pts, oracle)
	          .empty());
	auto reasons =
	    audit_witness(make_biclique(Color::Red, L, R, CertKind::WellSplit), pts, oracle);
	CHECK(mentions(reasons, "not mutually avoiding"));
}

TEST_CASE("biclique color and shape faults are reported") {
	auto pts = gen_convex(6).pts;
	std::vector<int> L{0, 1, 2}, R{3, 4, 5};

	// one stray red edge across the parts breaks a blue biclique
	auto oracle = make_explicit(6, {{1, 4}});
	auto w = make_biclique(Color::Blue, L, R, CertKind::Separable);
	auto reasons = audit_witness(w, pts, oracle);
	REQUIRE_EQ(reasons.size(), 1);
	CHECK(mentions(reasons, "color mismatch on biclique edge (1,4)"));

	auto blue = make_constant(6, Color::Blue);
	CHECK(audit_witness(w, pts, blue).empty());

	auto overlap = make_biclique(Color::Blue, {0, 1}, {1, 2}, CertKind::Separable);
	CHECK(mentions(audit_witness(overlap, pts, blue), "overlap"));

	auto empty = make_biclique(Color::Blue, {}, {0}, CertKind::Separable);
	CHECK(mentions(audit_witness(empty, pts, blue), "empty"));

	// interleaved arcs of a convex polygon cannot be separated
	auto tangled = make_biclique(Color::Blue, {0, 2, 4}, {1, 3, 5}, CertKind::Separable);
	CHECK(mentions(audit_witness(tangled, pts, blue), "not separated"));
}

TEST_CASE("witness json round-trips both kinds") {
	auto emb = make_embedding(Color::Blue, square(), {3, 1, 0, 2});
	auto emb2 = witness_from_json(witness_to_json(emb));
	CHECK_EQ(emb2.kind, Witness::Kind::Embedding);
	CHECK_EQ(emb2.color, Color::Blue);
	CHECK_EQ(emb2.map, emb.map);
	CHECK_EQ(emb2.pattern.n, 4);
	CHECK_EQ(emb2.pattern.edges.size(), 4);

	auto bic = make_biclique(Color::Red, {0, 2}, {5, 7}, CertKind::WellSplit);
	auto bic2 = witness_from_json(witness_to_json(bic));
	CHECK_EQ(bic2.kind, Witness::Kind::Biclique);
	CHECK_EQ(bic2.color, Color::Red);
	CHECK_EQ(bic2.left, bic.left);
	CHECK_EQ(bic2.right, bic.right);
	CHECK(bic2.certificate == CertKind::WellSplit);

	CHECK_THROWS_AS(witness_from_json("{\"color\": \"red\"}"), BadInput);
	CHECK_THROWS_AS(witness_from_json("{\"kind\": \"embedding\", \"color\": \"green\"}"),
	                BadInput);
	CHECK_THROWS_AS(witness_from_json("{\"kind\": \"sketch\", \"color\": \"red\"}"), BadInput);
	CHECK_THROWS_AS(
	    witness_from_json("{\"kind\": \"biclique\", \"color\": \"red\", \"L\": [0], "
	                      "\"R\": [1], \"certificate\": \"szemeredi\"}"),
	    BadInput);
	// map that names vertex 0 twice and vertex 2 never
	CHECK_THROWS_AS(witness_from_json(
	                    "{\"kind\": \"embedding\", \"color\": \"red\", "
	                    "\"pattern\": {\"n\": 3, \"edges\": [[0,1]]}, "
	                    "\"map\": [[0, 4], [0, 5], [1, 6]]}"),
	                BadInput);
}

TEST_CASE("svg drawings have the advertised structure") {
	auto pts = gen_convex(9).pts;
	auto oracle = make_constant(9, Color::Red);
	auto w = make_embedding(Color::Red, triangle(), {0, 4, 8});
	certify(w, pts, oracle);

	auto svg = witness_svg(w, pts);
	CHECK(svg.find("<svg") != std::string::npos);
	CHECK_EQ(count_of(svg, "<line"), 3);
	CHECK_EQ(count_of(svg, "<circle"), 9);  // the whole set is small enough to draw
	CHECK_EQ(count_of(svg, "stroke-dasharray"), 0);
	CHECK_EQ(svg, witness_svg(w, pts));  // a pure function of its inputs

	// known-color context edges come out dashed
	auto annotated = witness_svg(w, pts, {{1, 3}, {5, 7}});
	CHECK_EQ(count_of(annotated, "<line"), 5);
	CHECK_EQ(count_of(annotated, "stroke-dasharray"), 2);

	// beyond the legibility cutoff only the witness points are drawn
	auto big = gen_convex(2100).pts;
	auto big_oracle = make_constant(2100, Color::Red);
	auto big_w = make_embedding(Color::Red, triangle(), {0, 1000, 2000});
	certify(big_w, big, big_oracle);
	CHECK_EQ(count_of(witness_svg(big_w, big), "<circle"), 3);
}

TEST_CASE("biclique svg switches from edges to hulls when dense") {
	auto pts = gen_convex(140).pts;
	auto oracle = make_constant(140, Color::Blue);

	std::vector<int> small_l, small_r, big_l, big_r;
	for (int i = 0; i < 5; ++i) small_l.push_back(i);
	for (int i = 5; i < 10; ++i) small_r.push_back(i);
	for (int i = 0; i < 70; ++i) big_l.push_back(i);
	for (int i = 70; i < 140; ++i) big_r.push_back(i);

	auto small = make_biclique(Color::Blue, small_l, small_r, CertKind::WellSplit);
	certify(small, pts, oracle);
	auto svg = witness_svg(small, pts);
	CHECK_EQ(count_of(svg, "<line"), 25);
	CHECK_EQ(count_of(svg, "<polygon"), 0);

	auto dense = make_biclique(Color::Blue, big_l, big_r, CertKind::WellSplit);
	certify(dense, pts, oracle);
	auto dense_svg = witness_svg(dense, pts);
	CHECK_EQ(count_of(dense_svg, "<line"), 0);
	CHECK_EQ(count_of(dense_svg, "<polygon"), 2);
}
