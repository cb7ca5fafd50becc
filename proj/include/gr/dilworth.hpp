#pragma once

/**
 * Chain / antichain dichotomy for the order induced by colored paths.
 *
 * S lists vertex labels; its order is the ground order.  Define u < v iff u
 * precedes v in S and some increasing path of c-colored edges leads from u to
 * v.  A chain of length a is then exactly an increasing c-path on a vertices,
 * and an antichain is a set of pairwise incomparable vertices -- in
 * particular every direct edge inside an antichain has the other color,
 * which is what the biclique constructions downstream rely on.
 */

#include <variant>
#include <vector>

#include "gr/coloring.hpp"
#include "gr/errors.hpp"

namespace gr {

struct Chain {
	std::vector<int> verts;  // in S's order; consecutive edges colored c
};

struct Antichain {
	std::vector<int> verts;  // in S's order; pairwise incomparable (no c-path)
};

using ChainOrAntichain = std::variant<Chain, Antichain>;

// Finds a chain of exactly `a` vertices or an antichain of exactly `b`.
// Guaranteed to succeed when |S| >= (a-1)(b-1)+1 (Mirsky: either some path
// level reaches a, or the a-1 levels cannot all stay below b); throws
// SizeTooSmall otherwise if neither exists.  Deterministic: the first
// achievable witness in S's order is returned.
ChainOrAntichain chain_or_antichain(const std::vector<int>& S, Color c, int a, int b,
                                    const Coloring& g);

}  // namespace gr
