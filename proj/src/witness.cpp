#include "gr/witness.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "gr/avoiding.hpp"
#include "gr/errors.hpp"
#include "json.hpp"

namespace gr {

namespace {

std::string edge_tag(int a, int b) {
	return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// structural sanity shared by the audit and the json loader; returns reasons
std::vector<std::string> shape_problems(const Witness& w, size_t point_count, int oracle_n) {
	std::vector<std::string> out;
	if (w.kind == Witness::Kind::Embedding) {
		if (w.pattern.n <= 0) out.push_back("the pattern graph is empty");
		for (auto [a, b] : w.pattern.edges)
			if (a < 0 || b < 0 || a >= w.pattern.n || b >= w.pattern.n || a == b) {
				out.push_back("the pattern graph is malformed at edge " + edge_tag(a, b));
				return out;
			}
		if (static_cast<int>(w.map.size()) != w.pattern.n) {
			out.push_back("the map does not cover every pattern vertex");
			return out;
		}
		std::set<int> targets;
		for (int p : w.map) {
			if (p < 0 || p >= static_cast<int>(point_count)) {
				out.push_back("a mapped point index is out of range");
				return out;
			}
			if (p >= oracle_n) {
				out.push_back("a mapped point lies outside the oracle");
				return out;
			}
			targets.insert(p);
		}
		if (targets.size() != w.map.size()) out.push_back("the map is not injective");
	} else {
		if (w.left.empty() || w.right.empty()) {
			out.push_back("a biclique part is empty");
			return out;
		}
		std::set<int> seen;
		for (const auto* part : {&w.left, &w.right})
			for (int p : *part) {
				if (p < 0 || p >= static_cast<int>(point_count)) {
					out.push_back("a biclique point index is out of range");
					return out;
				}
				if (p >= oracle_n) {
					out.push_back("a biclique point lies outside the oracle");
					return out;
				}
				if (!seen.insert(p).second) {
					out.push_back("the biclique parts overlap or repeat a point");
					return out;
				}
			}
	}
	return out;
}

}  // namespace

Witness make_embedding(Color c, Graph pattern, std::vector<int> map) {
	Witness w;
	w.kind = Witness::Kind::Embedding;
	w.color = c;
	w.pattern = std::move(pattern);
	w.map = std::move(map);
	return w;
}

Witness make_biclique(Color c, std::vector<int> left, std::vector<int> right, CertKind cert) {
	Witness w;
	w.kind = Witness::Kind::Biclique;
	w.color = c;
	w.left = std::move(left);
	w.right = std::move(right);
	w.certificate = cert;
	return w;
}

std::vector<std::string> audit_witness(const Witness& w, const std::vector<Point>& pts,
                                       const Coloring& oracle) {
	auto reasons = shape_problems(w, pts.size(), oracle.n);
	if (!reasons.empty()) return reasons;

	if (w.kind == Witness::Kind::Embedding) {
		for (auto [a, b] : w.pattern.edges)
			if (oracle.edge(w.map[static_cast<size_t>(a)], w.map[static_cast<size_t>(b)]) !=
			    w.color)
				reasons.push_back("color mismatch on pattern edge " + edge_tag(a, b));

		const auto& e = w.pattern.edges;
		for (size_t i = 0; i < e.size(); ++i)
			for (size_t k = i + 1; k < e.size(); ++k) {
				Point p1 = pts[static_cast<size_t>(w.map[static_cast<size_t>(e[i].first)])];
				Point p2 = pts[static_cast<size_t>(w.map[static_cast<size_t>(e[i].second)])];
				Point q1 = pts[static_cast<size_t>(w.map[static_cast<size_t>(e[k].first)])];
				Point q2 = pts[static_cast<size_t>(w.map[static_cast<size_t>(e[k].second)])];
				if (segments_cross(p1, p2, q1, q2))
					reasons.push_back("crossing between pattern edges " +
					                  edge_tag(e[i].first, e[i].second) + " and " +
					                  edge_tag(e[k].first, e[k].second));
			}
		return reasons;
	}

	for (int a : w.left)
		for (int b : w.right)
			if (oracle.edge(a, b) != w.color) {
				reasons.push_back("color mismatch on biclique edge " + edge_tag(a, b));
				if (reasons.size() >= 16) {
					reasons.push_back("(further color mismatches suppressed)");
					return reasons;
				}
			}

	if (w.certificate == CertKind::Separable) {
		if (!hulls_disjoint(pts, w.left, w.right))
			reasons.push_back("the biclique parts are not separated by a line");
	} else {
		std::vector<Point> la, rb;
		for (int p : w.left) la.push_back(pts[static_cast<size_t>(p)]);
		for (int p : w.right) rb.push_back(pts[static_cast<size_t>(p)]);
		if (!is_mutually_avoiding(la, rb))
			reasons.push_back("the biclique parts are not mutually avoiding");
	}
	return reasons;
}

void certify(const Witness& w, const std::vector<Point>& pts, const Coloring& oracle) {
	auto reasons = audit_witness(w, pts, oracle);
	if (reasons.empty()) return;
	std::string msg = "witness audit failed: " + reasons.front();
	if (reasons.size() > 1)
		msg += " (and " + std::to_string(reasons.size() - 1) + " more)";
	throw InternalContradiction(msg);
}

std::string witness_to_json(const Witness& w) {
	nlohmann::json j;
	j["color"] = color_name(w.color);
	if (w.kind == Witness::Kind::Embedding) {
		j["kind"] = "embedding";
		j["pattern"] = nlohmann::json::parse(graph_to_json(w.pattern));
		j["map"] = nlohmann::json::array();
		for (size_t t = 0; t < w.map.size(); ++t)
			j["map"].push_back({static_cast<int>(t), w.map[t]});
	} else {
		j["kind"] = "biclique";
		j["L"] = w.left;
		j["R"] = w.right;
		j["certificate"] = w.certificate == CertKind::Separable ? "separable" : "well-split";
	}
	return j.dump(1, '\t') + "\n";
}

Witness witness_from_json(const std::string& text) {
	nlohmann::json j = nlohmann::json::parse(text);
	if (!j.contains("kind") || !j["kind"].is_string())
		throw BadInput("witness json: needs a \"kind\"");
	if (!j.contains("color") || !j["color"].is_string())
		throw BadInput("witness json: needs a \"color\"");
	const std::string kind = j["kind"].get<std::string>();
	const std::string color = j["color"].get<std::string>();
	if (color != "red" && color != "blue")
		throw BadInput("witness json: color must be \"red\" or \"blue\"");

	Witness w;
	w.color = color == "red" ? Color::Red : Color::Blue;
	if (kind == "embedding") {
		w.kind = Witness::Kind::Embedding;
		if (!j.contains("pattern") || !j.contains("map") || !j["map"].is_array())
			throw BadInput("witness json: an embedding needs \"pattern\" and \"map\"");
		w.pattern = graph_from_json(j["pattern"].dump());
		w.map.assign(static_cast<size_t>(w.pattern.n), -1);
		for (const auto& entry : j["map"]) {
			if (!entry.is_array() || entry.size() != 2)
				throw BadInput("witness json: map entries must be pairs");
			int t = entry[0].get<int>();
			if (t < 0 || t >= w.pattern.n || w.map[static_cast<size_t>(t)] != -1)
				throw BadInput("witness json: map must name each pattern vertex once");
			w.map[static_cast<size_t>(t)] = entry[1].get<int>();
		}
		for (int p : w.map)
			if (p < 0) throw BadInput("witness json: map must name each pattern vertex once");
	} else if (kind == "biclique") {
		w.kind = Witness::Kind::Biclique;
		if (!j.contains("L") || !j.contains("R"))
			throw BadInput("witness json: a biclique needs \"L\" and \"R\"");
		w.left = j["L"].get<std::vector<int>>();
		w.right = j["R"].get<std::vector<int>>();
		const std::string cert =
		    j.contains("certificate") ? j["certificate"].get<std::string>() : "separable";
		if (cert == "separable")
			w.certificate = CertKind::Separable;
		else if (cert == "well-split")
			w.certificate = CertKind::WellSplit;
		else
			throw BadInput("witness json: unknown certificate kind");
	} else {
		throw BadInput("witness json: kind must be \"embedding\" or \"biclique\"");
	}
	return w;
}

namespace {

// world -> svg coordinates, uniform scale, y up
struct Frame {
	double minx = 0, miny = 0, scale = 1, ox = 0, oy = 0, height = 0;

	static Frame fit(const std::vector<Point>& pts, const std::vector<int>& used, double w,
	                 double h, double pad) {
		Frame f;
		f.height = h;
		double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
		for (int i : used) {
			minx = std::min(minx, static_cast<double>(pts[static_cast<size_t>(i)].x));
			maxx = std::max(maxx, static_cast<double>(pts[static_cast<size_t>(i)].x));
			miny = std::min(miny, static_cast<double>(pts[static_cast<size_t>(i)].y));
			maxy = std::max(maxy, static_cast<double>(pts[static_cast<size_t>(i)].y));
		}
		double spanx = std::max(maxx - minx, 1.0), spany = std::max(maxy - miny, 1.0);
		f.minx = minx;
		f.miny = miny;
		f.scale = std::min((w - 2 * pad) / spanx, (h - 2 * pad) / spany);
		f.ox = pad + ((w - 2 * pad) - spanx * f.scale) / 2;
		f.oy = pad + ((h - 2 * pad) - spany * f.scale) / 2;
		return f;
	}

	std::pair<double, double> at(Point p) const {
		double x = ox + (static_cast<double>(p.x) - minx) * scale;
		double y = height - (oy + (static_cast<double>(p.y) - miny) * scale);
		return {x, y};
	}
};

std::string num(double v) {
	char buf[32];
	std::snprintf(buf, sizeof buf, "%.2f", v);
	return buf;
}

void svg_line(std::ostringstream& out, const Frame& f, Point a, Point b, const char* color,
              double width, double opacity, bool dashed) {
	auto [x1, y1] = f.at(a);
	auto [x2, y2] = f.at(b);
	out << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
	    << "\" y2=\"" << num(y2) << "\" stroke=\"" << color << "\" stroke-width=\""
	    << num(width) << "\"";
	if (opacity < 1) out << " stroke-opacity=\"" << num(opacity) << "\"";
	if (dashed) out << " stroke-dasharray=\"7 5\"";
	out << "/>\n";
}

void svg_dot(std::ostringstream& out, const Frame& f, Point p, const char* color, double r) {
	auto [x, y] = f.at(p);
	out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << num(r)
	    << "\" fill=\"" << color << "\"/>\n";
}

}  // namespace

std::string witness_svg(const Witness& w, const std::vector<Point>& pts,
                        const std::vector<std::pair<int, int>>& dashed) {
	const double kWidth = 800, kHeight = 600, kPad = 40;
	const char* stroke = w.color == Color::Red ? "#c0392b" : "#2980b9";

	std::vector<int> involved;
	if (w.kind == Witness::Kind::Embedding)
		involved = w.map;
	else {
		involved = w.left;
		involved.insert(involved.end(), w.right.begin(), w.right.end());
	}
	for (auto [a, b] : dashed) {
		involved.push_back(a);
		involved.push_back(b);
	}

	// draw the whole point set while it stays legible, otherwise only the
	// points the witness touches
	std::vector<int> drawn;
	if (pts.size() <= 2000) {
		drawn.resize(pts.size());
		for (size_t i = 0; i < pts.size(); ++i) drawn[i] = static_cast<int>(i);
	} else {
		drawn = involved;
		std::sort(drawn.begin(), drawn.end());
		drawn.erase(std::unique(drawn.begin(), drawn.end()), drawn.end());
	}

	Frame f = Frame::fit(pts, drawn, kWidth, kHeight, kPad);
	std::ostringstream out;
	out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kWidth << " "
	    << kHeight << "\">\n";
	out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

	for (auto [a, b] : dashed)
		svg_line(out, f, pts[static_cast<size_t>(a)], pts[static_cast<size_t>(b)], stroke, 1.6,
		         0.55, true);

	if (w.kind == Witness::Kind::Embedding) {
		for (auto [a, b] : w.pattern.edges)
			svg_line(out, f, pts[static_cast<size_t>(w.map[static_cast<size_t>(a)])],
			         pts[static_cast<size_t>(w.map[static_cast<size_t>(b)])], stroke, 1.8, 1,
			         false);
	} else if (w.left.size() * w.right.size() <= 4096) {
		for (int a : w.left)
			for (int b : w.right)
				svg_line(out, f, pts[static_cast<size_t>(a)], pts[static_cast<size_t>(b)],
				         stroke, 0.9, 0.5, false);
	} else {
		// too dense to draw edge by edge: outline each part's hull
		for (const auto* part : {&w.left, &w.right}) {
			std::vector<Point> ppts;
			for (int i : *part) ppts.push_back(pts[static_cast<size_t>(i)]);
			auto hull = convex_hull(ppts);
			out << "<polygon points=\"";
			for (int h : hull) {
				auto [x, y] = f.at(ppts[static_cast<size_t>(h)]);
				out << num(x) << "," << num(y) << " ";
			}
			out << "\" fill=\"" << stroke << "\" fill-opacity=\"0.08\" stroke=\"" << stroke
			    << "\" stroke-width=\"1.2\"/>\n";
		}
	}

	std::set<int> hot(involved.begin(), involved.end());
	for (int i : drawn)
		if (!hot.count(i)) svg_dot(out, f, pts[static_cast<size_t>(i)], "#999999", 2.5);
	for (int i : hot) svg_dot(out, f, pts[static_cast<size_t>(i)], stroke, 4.5);

	out << "</svg>\n";
	return out.str();
}

}  // namespace gr
