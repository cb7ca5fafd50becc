#include "gr/coloring.hpp"

#include <unordered_map>
#include <unordered_set>

#include "gr/rng.hpp"
#include "json.hpp"

namespace gr {

static std::uint64_t pair_key(int i, int j) {
	return (std::uint64_t(std::uint32_t(i)) << 32) | std::uint64_t(std::uint32_t(j));
}

Coloring make_seeded_random(int n, std::uint64_t seed) {
	if (n < 0) throw BadInput("coloring: negative n");
	Coloring g;
	g.n = n;
	g.fn = [seed](int i, int j) {
		return (splitmix64(seed ^ splitmix64(pair_key(i, j))) & 1) ? Color::Red : Color::Blue;
	};
	g.meta = ColoringMeta{"seeded_random", seed, 0, {}};
	return g;
}

Coloring make_explicit(int n, const std::vector<std::pair<int, int>>& red_edges) {
	if (n < 0) throw BadInput("coloring: negative n");
	auto reds = std::make_shared<std::unordered_set<std::uint64_t>>();
	ColoringMeta meta{"explicit", 0, 0, {}};
	for (auto [i, j] : red_edges) {
		if (i == j || i < 0 || j < 0 || i >= n || j >= n)
			throw BadInput("coloring: bad red edge " + std::to_string(i) + "," + std::to_string(j));
		reds->insert(pair_key(std::min(i, j), std::max(i, j)));
		meta.red_edges.emplace_back(std::min(i, j), std::max(i, j));
	}
	Coloring g;
	g.n = n;
	g.fn = [reds](int i, int j) {
		return reds->count(pair_key(i, j)) ? Color::Red : Color::Blue;
	};
	g.meta = std::move(meta);
	return g;
}

Coloring make_constant(int n, Color c) {
	Coloring g;
	g.n = n;
	g.fn = [c](int, int) { return c; };
	return g;
}

Coloring make_cycle_lower_bound(int cycle) {
	if (cycle < 3) throw BadInput("cycle_lower_bound: cycle length must be >= 3");
	int b = cycle - 1;
	Coloring g;
	g.n = b * b;
	g.fn = [b](int i, int j) { return i / b == j / b ? Color::Blue : Color::Red; };
	g.meta = ColoringMeta{"cycle_lower_bound", 0, cycle, {}};
	return g;
}

Coloring restrict_labels(const Coloring& g, std::vector<int> keep) {
	auto ids = std::make_shared<std::vector<int>>(std::move(keep));
	for (int v : *ids)
		if (v < 0 || v >= g.n)
			throw BadInput("restrict: vertex " + std::to_string(v) + " outside host");
	Coloring sub;
	sub.n = static_cast<int>(ids->size());
	sub.fn = [inner = g, ids](int i, int j) {
		return inner.edge((*ids)[size_t(i)], (*ids)[size_t(j)]);
	};
	return sub;
}

Coloring swap_colors(const Coloring& g) {
	Coloring s;
	s.n = g.n;
	s.fn = [inner = g](int i, int j) { return other(inner.edge(i, j)); };
	return s;
}

Coloring counted(const Coloring& g, std::shared_ptr<QueryCounts> counts) {
	Coloring c;
	c.n = g.n;
	c.fn = [inner = g, counts](int i, int j) {
		Color col = inner.edge(i, j);
		(col == Color::Red ? counts->red : counts->blue)++;
		return col;
	};
	return c;
}

Coloring memoized(const Coloring& g) {
	auto cache = std::make_shared<std::unordered_map<std::uint64_t, Color>>();
	Coloring m;
	m.n = g.n;
	m.fn = [inner = g, cache](int i, int j) {
		std::uint64_t k = pair_key(i, j);
		auto it = cache->find(k);
		if (it != cache->end()) return it->second;
		Color col = inner.edge(i, j);
		cache->emplace(k, col);
		return col;
	};
	return m;
}

// ---------------------------------------------------------------------------

std::pair<Color, int> majority_color(int v, const std::vector<int>& S, const Coloring& g) {
	if (S.empty()) throw BadInput("majority_color: empty set");
	int red = 0;
	for (int u : S) red += g.edge(v, u) == Color::Red;
	int blue = static_cast<int>(S.size()) - red;
	return red >= blue ? std::make_pair(Color::Red, red) : std::make_pair(Color::Blue, blue);
}

int count_color(int v, const std::vector<int>& S, const Coloring& g, Color c) {
	int k = 0;
	for (int u : S) k += g.edge(v, u) == c;
	return k;
}

std::vector<int> colored_neighbours(int v, const std::vector<int>& S, const Coloring& g,
                                    Color c) {
	std::vector<int> out;
	for (int u : S)
		if (g.edge(v, u) == c) out.push_back(u);
	return out;
}

std::vector<int> red_neighbours(int v, const std::vector<int>& S, const Coloring& g) {
	return colored_neighbours(v, S, g, Color::Red);
}

// ---------------------------------------------------------------------------

std::string coloring_to_json(const Coloring& g) {
	if (!g.meta)
		throw BadInput("coloring_to_json: this coloring is in-memory only (a wrapper?)");
	nlohmann::json j;
	const ColoringMeta& m = *g.meta;
	if (m.kind == "explicit") {
		j["n"] = g.n;
		j["red_edges"] = nlohmann::json::array();
		for (auto [a, b] : m.red_edges) j["red_edges"].push_back({a, b});
	} else if (m.kind == "seeded_random") {
		j["n"] = g.n;
		j["kind"] = "seeded_random";
		j["seed"] = m.seed;
	} else if (m.kind == "cycle_lower_bound") {
		j["kind"] = "cycle_lower_bound";
		j["cycle"] = m.cycle;
	} else {
		throw InternalContradiction("coloring_to_json: unknown kind " + m.kind);
	}
	return j.dump(1, '\t') + "\n";
}

Coloring coloring_from_json(const std::string& text) {
	nlohmann::json j = nlohmann::json::parse(text);
	if (j.contains("red_edges")) {
		if (!j.contains("n") || !j["n"].is_number_integer())
			throw BadInput("coloring json: explicit coloring needs integer \"n\"");
		std::vector<std::pair<int, int>> reds;
		for (const auto& e : j["red_edges"]) {
			if (!e.is_array() || e.size() != 2)
				throw BadInput("coloring json: red_edges entries must be pairs");
			reds.emplace_back(e[0].get<int>(), e[1].get<int>());
		}
		return make_explicit(j["n"].get<int>(), reds);
	}
	std::string kind = j.value("kind", "");
	if (kind == "seeded_random") {
		if (!j.contains("n") || !j.contains("seed"))
			throw BadInput("coloring json: seeded_random needs \"n\" and \"seed\"");
		return make_seeded_random(j["n"].get<int>(), j["seed"].get<std::uint64_t>());
	}
	if (kind == "cycle_lower_bound") {
		if (!j.contains("cycle")) throw BadInput("coloring json: cycle_lower_bound needs \"cycle\"");
		return make_cycle_lower_bound(j["cycle"].get<int>());
	}
	throw BadInput("coloring json: unrecognized coloring kind '" + kind + "'");
}

}  // namespace gr
